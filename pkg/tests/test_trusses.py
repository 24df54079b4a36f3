"""Trusses, built-ins, unital/ring extensions, retract rings, Dorroh."""

import itertools
import random

import pytest

from trusskit.core import StructureError, heap_from_group, FiniteGroup, FiniteHeap
from trusskit.rings import FiniteRing
from trusskit.trusses import (
    ConstantTruss,
    ExtensionTruss,
    FiniteTruss,
    IntegerTruss,
    constant_truss,
    dorroh_compare,
    double_extension,
    integer_truss,
    retract_ring,
    ring_extension,
    tc2_brace_truss,
    terminal_truss,
    truss_TZn,
    truss_from_ring,
    unital_extension,
    validate_truss,
)

# ---------------------------------------------------------------------------
# validation and built-ins


def test_tz4_valid_unital_ring_type():
    t = truss_TZn(4)
    report = validate_truss(t)
    assert report.ok
    assert report.stats["unital"] and report.stats["ring_type"]
    assert t.identity == 1 and t.absorber == 0


def test_constant_truss_flags():
    t = constant_truss(0)
    report = validate_truss(t, samples=2000, window=4)
    assert report.ok
    assert t.absorber == 0 and t.identity is None
    assert not t.unital and t.ring_type


def test_integer_truss_valid():
    t = integer_truss()
    assert validate_truss(t, samples=2000, window=6).ok
    assert t.identity == 1 and t.absorber == 0


def test_distributivity_violation_located():
    # no 2-element product can break distributivity (every unary map on the
    # 2-element heap is an endomorphism), so the witness lives on 3 elements
    heap = heap_from_group(FiniteGroup.cyclic(3))
    t = FiniteTruss(heap, [[max(a, b) for b in range(3)] for a in range(3)])
    report = validate_truss(t)
    assert not report.ok
    assert any("distributivity" in f.law for f in report.findings)
    # frozen witness: 1.[0,1,2] = 1 but [1.0, 1.1, 1.2] = [1,1,2] = 2
    assert any(f.at == (1, 0, 1, 2) for f in report.findings if "left" in f.law)


def test_truss_from_ring_z2():
    t = truss_from_ring(FiniteRing.Zn(2))
    assert t.size == 2
    assert validate_truss(t).ok


def test_truss_from_symbolic_integers():
    assert isinstance(truss_from_ring("Z"), IntegerTruss)


def test_zero_ring_gives_terminal_truss():
    t = truss_from_ring(FiniteRing(FiniteGroup.trivial(), ((0,),), validate=False))
    assert t.size == 1
    assert t.identity == 0 and t.absorber == 0


def test_brace_truss():
    t = tc2_brace_truss()
    assert validate_truss(t).ok
    assert t.identity == 0  # a, the brace identity
    assert t.absorber is None


def test_truss_rejects_nonabelian_carrier():
    heap = heap_from_group(FiniteGroup.dihedral(3))
    with pytest.raises(StructureError):
        FiniteTruss(heap, [[0] * 6 for _ in range(6)])


# ---------------------------------------------------------------------------
# unital extension


def test_unital_extension_identity_law():
    t1 = unital_extension(truss_TZn(2))
    one = t1.identity
    rng = random.Random(41)
    for _ in range(50):
        x = t1.element(rng.randrange(2), rng.randrange(-5, 6))
        assert t1.mul(one, x) == x
        assert t1.mul(x, one) == x


def test_unital_extension_demotes_old_identity():
    t = truss_TZn(2)
    t1 = unital_extension(t)
    u = t1.inject(t.identity)
    assert t1.mul(u, t1.identity) == u
    assert u != t1.identity


def test_unital_extension_keeps_absorber():
    t = truss_TZn(2)
    t1 = unital_extension(t)
    assert t1.absorber == t1.inject(t.absorber)
    rng = random.Random(43)
    for _ in range(50):
        x = t1.element(rng.randrange(2), rng.randrange(-5, 6))
        assert t1.mul(t1.absorber, x) == t1.absorber
        assert t1.mul(x, t1.absorber) == t1.absorber


def test_unital_extension_validates_sampled():
    assert validate_truss(unital_extension(truss_TZn(3)), samples=3000, window=3).ok
    assert validate_truss(unital_extension(tc2_brace_truss()), samples=3000, window=3).ok


def test_star_unital_extension_is_integer_ring():
    # the unital extension of the terminal truss, retracted at its absorber,
    # is the ring of integers: n |-> tail coordinate
    s1 = unital_extension(terminal_truss())
    assert s1.unital and s1.ring_type
    ring = retract_ring(s1, s1.absorber)
    def enc(n):
        return s1.element(0, n)
    for a in range(-6, 7):
        for b in range(-6, 7):
            assert ring.plus(enc(a), enc(b)) == enc(a + b)
            assert ring.mul(enc(a), enc(b)) == enc(a * b)
    assert ring.one == enc(1)


# ---------------------------------------------------------------------------
# ring extension and the worked closed forms


def tz2_ext0():
    return ring_extension(truss_TZn(2))


def sk(t0, sigma, k):
    # presentation of sigma.u + k.i0 in canonical coordinates
    return t0.element(sigma, 1 - k)


def test_ring_extension_new_absorber():
    t0 = tz2_ext0()
    assert t0.absorber == t0.adjoined_element
    rng = random.Random(47)
    for _ in range(50):
        x = t0.element(rng.randrange(2), rng.randrange(-5, 6))
        assert t0.mul(t0.absorber, x) == t0.absorber
        assert t0.mul(x, t0.absorber) == t0.absorber


def test_tz2_ext0_closed_form_full_window():
    # (sigma u + k i0)(sigma' u + k' i0) = sigma sigma' u + k k' i0
    t0 = tz2_ext0()
    for s, sp in itertools.product((0, 1), repeat=2):
        for k, kp in itertools.product(range(-5, 6), repeat=2):
            assert t0.mul(sk(t0, s, k), sk(t0, sp, kp)) == sk(t0, s * sp, k * kp)


def test_tz2_ext0_addition_closed_form():
    t0 = tz2_ext0()
    ring = retract_ring(t0, t0.absorber)
    for s, sp in itertools.product((0, 1), repeat=2):
        for k, kp in itertools.product(range(-4, 5), repeat=2):
            assert ring.plus(sk(t0, s, k), sk(t0, sp, kp)) == sk(t0, (s + sp) % 2, k + kp)


def test_tz2_ext0_identity_is_u_plus_i0():
    t0 = tz2_ext0()
    ring = retract_ring(t0, t0.absorber)
    u = sk(t0, 1, 0)
    i0 = t0.inject(0)
    assert ring.plus(u, i0) == t0.inject(1)  # i1 = u + i0
    assert t0.identity == t0.inject(1)


def test_ring_extension_keeps_identity():
    t0 = tz2_ext0()
    one = t0.identity
    rng = random.Random(53)
    for _ in range(50):
        x = t0.element(rng.randrange(2), rng.randrange(-5, 6))
        assert t0.mul(one, x) == x == t0.mul(x, one)


def zc_elem(z0, sigma, k, n):
    # sigma.i_n + k.i_c in canonical coordinates (base point is i_c)
    c = z0.base.c
    return z0.element(c + sigma * (n - c), 1 - sigma - k)


def test_zc_ext0_closed_form_full_window():
    # (s i_n + k i_c)(s' i_n' + k' i_c) = (ss' + sk' + s'k + kk') i_c
    for c in (0, 2):
        z0 = ring_extension(constant_truss(c))
        ns = [n for n in range(c - 5, c + 6) if n != c]
        for s, sp in itertools.product((0, 1), repeat=2):
            for k, kp in itertools.product(range(-5, 6), repeat=2):
                for n, np_ in ((ns[0], ns[-1]), (ns[2], ns[5]), (ns[7], ns[1])):
                    got = z0.mul(zc_elem(z0, s, k, n), zc_elem(z0, sp, kp, np_))
                    K = s * sp + s * kp + sp * k + k * kp
                    assert got == zc_elem(z0, 0, K, c + 1)


def test_zc_ext0_sample_value():
    # sigma = sigma' = 1, k = 1, k' = 2 gives (1 + 2 + 1 + 2) i_c = 6 i_c
    z0 = ring_extension(constant_truss(0))
    got = z0.mul(zc_elem(z0, 1, 1, 3), zc_elem(z0, 1, 2, -2))
    assert got == zc_elem(z0, 0, 6, 1)


def test_zc_ext0_flags():
    z0 = ring_extension(constant_truss(0))
    assert z0.ring_type and not z0.unital
    assert validate_truss(z0, samples=2000, window=3).ok


def test_zc_old_absorber_demoted():
    # i_c (sigma i_n + k i_c) = (sigma + k) i_c, so i_c only absorbs when
    # sigma + k = 1
    z0 = ring_extension(constant_truss(0))
    ic = z0.inject(0)
    for s in (0, 1):
        for k in range(-4, 5):
            got = z0.mul(ic, zc_elem(z0, s, k, 2))
            assert got == zc_elem(z0, 0, s + k, 1)
    assert z0.mul(ic, zc_elem(z0, 1, 1, 2)) != ic


def test_zc_ext0_addition_matches_displayed_form():
    # the sigma sigma' coefficient folds as i_{n-c+n'} + i_c
    c = 0
    z0 = ring_extension(constant_truss(c))
    ring = retract_ring(z0, z0.absorber)
    for n, np_ in ((1, 3), (2, -4), (-1, 5)):
        lhs = ring.plus(zc_elem(z0, 1, 0, n), zc_elem(z0, 1, 0, np_))
        rhs = ring.plus(zc_elem(z0, 1, 0, n - c + np_), zc_elem(z0, 0, 1, 1))
        assert lhs == rhs


def c2_elem(b0, sigma, n):
    # sigma.t + n.a in canonical coordinates (base point is the brace identity a)
    return b0.element(sigma, 1 - n)


def test_tc2_ext0_closed_form_full_window():
    # (s t + n a)(s' t + n' a) = ((1 - (-1)^{s'n + sn'})/2) t + nn' a
    b0 = ring_extension(tc2_brace_truss())
    for s, sp in itertools.product((0, 1), repeat=2):
        for n, np_ in itertools.product(range(-5, 6), repeat=2):
            got = b0.mul(c2_elem(b0, s, n), c2_elem(b0, sp, np_))
            sign = 1 if (sp * n + s * np_) % 2 == 0 else -1  # (-1)^m, exactly
            parity = (1 - sign) // 2
            assert got == c2_elem(b0, parity, n * np_)


def test_tc2_ext0_sample_value():
    # sigma=1, n=1, sigma'=0, n'=1 lands on t + a
    b0 = ring_extension(tc2_brace_truss())
    got = b0.mul(c2_elem(b0, 1, 1), c2_elem(b0, 0, 1))
    assert got == c2_elem(b0, 1, 1)


def test_tc2_ext0_identity_is_a():
    b0 = ring_extension(tc2_brace_truss())
    assert b0.identity == b0.inject(0)


def test_tc2_relation_b_plus_b_is_a_plus_a():
    b0 = ring_extension(tc2_brace_truss())
    ring = retract_ring(b0, b0.absorber)
    a, b = b0.inject(0), b0.inject(1)
    assert ring.plus(b, b) == ring.plus(a, a)


def test_star_ring_extension_is_integer_ring():
    s0 = ring_extension(terminal_truss())
    ring = retract_ring(s0, s0.absorber)
    def enc(n):
        return s0.element(0, 1 - n)
    for a in range(-6, 7):
        for b in range(-6, 7):
            assert ring.plus(enc(a), enc(b)) == enc(a + b)
            assert ring.mul(enc(a), enc(b)) == enc(a * b)


# ---------------------------------------------------------------------------
# lambda multiplication is representative-independent


def mul_via_words(t: ExtensionTruss, word_x, word_y):
    """Recompute the product from arbitrary word representatives."""
    def letter_times(u):
        mapped = []
        for j, v in word_y:
            if j == 0:
                mapped.append((0, t.base.mul(u, v)))
            elif t.adjoined == "one":
                mapped.append((0, u))
            else:
                mapped.append((1, 0))
        return t.ds.normalize_word(mapped)

    values = []
    for i, u in word_x:
        if i == 1:
            values.append(t.ds.normalize_word(word_y) if t.adjoined == "one"
                          else t.adjoined_element)
        else:
            values.append(letter_times(u))
    return t.ds.fold(values)


@pytest.mark.parametrize("make", [
    lambda: unital_extension(truss_TZn(2)),
    lambda: ring_extension(truss_TZn(2)),
    lambda: ring_extension(tc2_brace_truss()),
    lambda: unital_extension(truss_TZn(3)),
])
def test_lambda_well_defined_on_representatives(make):
    t = make()
    rng = random.Random(59)
    letters = [(0, v) for v in range(t.base.size)] + [(1, 0)]
    for _ in range(300):
        wx = tuple(rng.choice(letters) for _ in range(rng.choice((1, 3, 5, 7))))
        wy = tuple(rng.choice(letters) for _ in range(rng.choice((1, 3, 5, 7))))
        x = t.ds.normalize_word(wx)
        y = t.ds.normalize_word(wy)
        assert mul_via_words(t, wx, wy) == t.mul(x, y)


# ---------------------------------------------------------------------------
# double extension


def test_double_extension_flags():
    for base in (truss_TZn(2), constant_truss(0), tc2_brace_truss()):
        d = double_extension(base)
        assert d.unital and d.ring_type
        rng = random.Random(61)
        pool = list(d.sample_elements(2))
        for _ in range(40):
            x = rng.choice(pool)
            assert d.mul(d.identity, x) == x == d.mul(x, d.identity)
            assert d.mul(d.absorber, x) == d.absorber == d.mul(x, d.absorber)


def test_double_extension_of_star_retract_is_z_times_z():
    # G(star_1; *) is the integers; adjoining a fresh absorber to a ring-type
    # truss T(R) retracts to the product ring R x Z (the old zero z = i(0_R)
    # is a central idempotent with z.i(r) = z, giving (r,j)(r',j') = (rr',jj')
    # in the coordinates r + (j-1).z relative to the new zero)
    d = double_extension(terminal_truss())
    ring = retract_ring(d, d.absorber)
    def enc(x, j):
        # x lives in the star_1 = Z part, j in the fresh integer factor
        inner = d.base.element(0, x)
        return d.element(inner, 1 - j)
    for x, j, y, jp in itertools.product(range(-3, 4), repeat=4):
        assert ring.plus(enc(x, j), enc(y, jp)) == enc(x + y, j + jp)
        assert ring.mul(enc(x, j), enc(y, jp)) == enc(x * y, j * jp)


def zc01_elem(ext, sigma, n, k, l):
    """sigma.i_n + k.i_c + l.1 inside {0} + Z^c + {1} (ring then unital)."""
    c = ext.base.base.c
    inner = ext.base.element(c + sigma * (n - c), 1 - sigma - k)
    return ext.element(inner, l)


def test_zc_double_extension_two_tail_closed_forms():
    # the worked two-tail formulas for the unital extension of Z^c_0
    c = 0
    ext = unital_extension(ring_extension(constant_truss(c)))
    ring = retract_ring(ext, ext.inject(ext.base.absorber))
    ns = (1, 2, -3)

    def rhs_product(s, n, k, l, sp, np_, kp, lp):
        K = s * sp + s * kp + sp * k + k * kp + k * lp + l * kp
        out = ring.scale(K, zc01_elem(ext, 0, 1, 1, 0))          # K . i_c
        out = ring.plus(out, ring.scale(s * lp, zc01_elem(ext, 1, n, 0, 0)))
        out = ring.plus(out, ring.scale(sp * l, zc01_elem(ext, 1, np_, 0, 0)))
        out = ring.plus(out, ring.scale(l * lp, zc01_elem(ext, 0, 1, 0, 1)))
        return out

    for s, sp in itertools.product((0, 1), repeat=2):
        for k, kp, l, lp in itertools.product((-2, 0, 1, 3), repeat=4):
            for n, np_ in ((ns[0], ns[1]), (ns[2], ns[0])):
                x = zc01_elem(ext, s, n, k, l)
                y = zc01_elem(ext, sp, np_, kp, lp)
                assert ring.mul(x, y) == rhs_product(s, n, k, l, sp, np_, kp, lp)


def test_zc_double_extension_spec_order_sample():
    # same formula through the ring-extension-of-unital-extension ordering;
    # the (1,0,1) x (0,1,0) sample evaluates to 2.i_c
    c = 0
    d = double_extension(constant_truss(c))
    ring = retract_ring(d, d.absorber)

    def elem(sigma, n, k, l):
        inner = d.base.element(c + sigma * (n - c), l)
        return d.element(inner, 1 - sigma - k - l)

    ic = elem(0, 1, 1, 0)
    one = elem(0, 1, 0, 1)

    def rhs(s, n, k, l, sp, np_, kp, lp):
        K = s * sp + s * kp + sp * k + k * kp + k * lp + l * kp
        out = ring.scale(K, ic)
        out = ring.plus(out, ring.scale(s * lp, elem(1, n, 0, 0)))
        out = ring.plus(out, ring.scale(sp * l, elem(1, np_, 0, 0)))
        out = ring.plus(out, ring.scale(l * lp, one))
        return out

    got = ring.mul(elem(1, 2, 0, 1), elem(0, 3, 1, 0))
    assert got == rhs(1, 2, 0, 1, 0, 3, 1, 0)
    assert got == ring.scale(2, ic)
    for s, sp in itertools.product((0, 1), repeat=2):
        for k, kp, l, lp in itertools.product((-1, 0, 2), repeat=4):
            x, y = elem(s, 2, k, l), elem(sp, -1, kp, lp)
            assert ring.mul(x, y) == rhs(s, 2, k, l, sp, -1, kp, lp)


# ---------------------------------------------------------------------------
# retract rings and Dorroh


def test_retract_ring_tz4_is_z4():
    ring = retract_ring(truss_TZn(4), 0)
    assert ring == FiniteRing(FiniteRing.Zn(4).add, FiniteRing.Zn(4).mul_table,
                              names=ring.names)


def test_retract_ring_rejects_non_absorber():
    with pytest.raises(StructureError):
        retract_ring(truss_TZn(4), 1)


def test_retract_ring_tc2_ext0_closed_form():
    b0 = ring_extension(tc2_brace_truss())
    ring = retract_ring(b0, b0.absorber)
    got = ring.mul(c2_elem(b0, 1, 1), c2_elem(b0, 0, 1))
    assert got == c2_elem(b0, 1, 1)


def test_dorroh_full_agreement():
    for n in (2, 4, 6):
        report = dorroh_compare(FiniteRing.Zn(n), window=3)
        assert report.ok, report
        assert report.stats["checked"] == n * n * 7 * 7


def test_dorroh_zero_tails_reduce_to_ring_product():
    ring = FiniteRing.Zn(4)
    t1 = unital_extension(truss_from_ring(ring))
    for r, rp in itertools.product(range(4), repeat=2):
        assert t1.mul(t1.element(r, 0), t1.element(rp, 0)) == t1.element(ring.mul(r, rp), 0)


def test_dorroh_z2_coordinate_example():
    # (i1 + 1)(i1 + 1) = (1+1+1, 1) = (1, 1) in Z2 + Z coordinates
    t1 = unital_extension(truss_TZn(2))
    assert t1.mul(t1.element(1, 1), t1.element(1, 1)) == t1.element(1, 1)


def test_dorroh_window_validation():
    with pytest.raises(StructureError):
        dorroh_compare(FiniteRing.Zn(2), window=0)

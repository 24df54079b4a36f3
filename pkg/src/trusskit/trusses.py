"""Trusses: Abelian heaps with an associative, two-sided distributive product.

Finite trusses are table-backed; the built-in symbolic trusses (the integer
truss, the constant-product trusses on the integer heap, the C2 brace truss)
never materialise their carriers.  Unital and ring extensions adjoin a new
identity or absorber by forming the direct sum with a singleton and extending
the multiplication letter by letter over word forms; closed formulas for the
worked examples live in the tests as oracles, not here.
"""

from __future__ import annotations

import itertools
import random

from .coproduct import CoproductElement, DirectSum, HeapSummand
from .core import (
    INT_LINE,
    FiniteHeap,
    StructureError,
    heap_from_group,
    retract,
)
from .reports import FAIL, PASS, Finding, Report
from .rings import FiniteRing


class FiniteTruss:
    """A truss on a finite Abelian heap, with an explicit product table."""

    __slots__ = ("heap", "mul_table", "size", "names", "identity", "absorber")

    is_finite = True

    def __init__(self, heap: FiniteHeap, mul_table, names=None):
        if not heap.abelian:
            raise StructureError("a truss carrier must be an Abelian heap")
        self.heap = heap
        self.size = heap.size
        self.mul_table = tuple(tuple(row) for row in mul_table)
        if len(self.mul_table) != self.size or any(len(r) != self.size for r in self.mul_table):
            raise StructureError("product table does not match the carrier")
        self.names = tuple(names) if names is not None else heap.names
        self.identity = next(
            (e for e in range(self.size)
             if all(self.mul_table[e][x] == x == self.mul_table[x][e]
                    for x in range(self.size))),
            None,
        )
        self.absorber = next(
            (z for z in range(self.size)
             if all(self.mul_table[z][x] == z == self.mul_table[x][z]
                    for x in range(self.size))),
            None,
        )

    @property
    def unital(self):
        return self.identity is not None

    @property
    def ring_type(self):
        return self.absorber is not None

    def ternary(self, a, b, c):
        return self.heap.ternary(a, b, c)

    def mul(self, a, b):
        return self.mul_table[a][b]

    def elements(self):
        return range(self.size)

    def sample_elements(self, window):
        return range(self.size)

    def contains(self, x):
        return self.heap.contains(x)

    def carrier_heap(self):
        return self.heap

    def format_element(self, x) -> str:
        return self.names[x]

    def __len__(self):
        return self.size

    def __eq__(self, other):
        return (isinstance(other, FiniteTruss)
                and self.heap == other.heap and self.mul_table == other.mul_table)

    def __repr__(self):
        return f"FiniteTruss(order={self.size}, unital={self.unital}, ring_type={self.ring_type})"


class IntegerTruss:
    """The truss of the ring of integers: integer heap, ordinary product."""

    is_finite = False
    size = None
    identity = 1
    absorber = 0
    unital = True
    ring_type = True

    def ternary(self, a, b, c):
        return a - b + c

    def mul(self, a, b):
        return a * b

    def contains(self, x):
        return isinstance(x, int)

    def sample_elements(self, window):
        return range(-window, window + 1)

    def carrier_heap(self):
        return INT_LINE

    def format_element(self, x) -> str:
        return str(x)

    def __eq__(self, other):
        return isinstance(other, IntegerTruss)

    def __repr__(self):
        return "IntegerTruss()"


class ConstantTruss:
    """The integer heap with the constant product i_m i_n = i_c.

    The constant c is the absorber; there is no identity.
    """

    is_finite = False
    size = None
    identity = None
    unital = False
    ring_type = True

    def __init__(self, c: int):
        self.c = c
        self.absorber = c

    def ternary(self, a, b, c):
        return a - b + c

    def mul(self, a, b):
        return self.c

    def contains(self, x):
        return isinstance(x, int)

    def sample_elements(self, window):
        return range(self.c - window, self.c + window + 1)

    def carrier_heap(self):
        return INT_LINE

    def format_element(self, x) -> str:
        return f"i{x}"

    def __eq__(self, other):
        return isinstance(other, ConstantTruss) and self.c == other.c

    def __repr__(self):
        return f"ConstantTruss(c={self.c})"


def truss_from_ring(ring) -> FiniteTruss | IntegerTruss:
    """T(R): the heap of the additive group with the ring multiplication."""
    if ring == "Z" or isinstance(ring, IntegerTruss):
        return IntegerTruss()
    if not isinstance(ring, FiniteRing):
        raise StructureError("expected a FiniteRing or the symbolic ring 'Z'")
    return FiniteTruss(heap_from_group(ring.add), ring.mul_table, names=ring.names)


def truss_TZn(n: int) -> FiniteTruss:
    names = tuple(f"i{k}" for k in range(n))
    ring = FiniteRing.Zn(n)
    return FiniteTruss(heap_from_group(ring.add), ring.mul_table, names=names)


def tc2_brace_truss() -> FiniteTruss:
    """The truss of the two-element brace: heap of C2, product x.y = x+y."""
    heap = FiniteHeap.from_function(
        2, lambda x, y, z: x ^ y ^ z, names=("a", "b"), abelian=True)
    return FiniteTruss(heap, ((0, 1), (1, 0)))


def terminal_truss() -> FiniteTruss:
    return FiniteTruss(FiniteHeap.singleton(), ((0,),))


def integer_truss() -> IntegerTruss:
    return IntegerTruss()


def constant_truss(c: int) -> ConstantTruss:
    return ConstantTruss(c)


# ---------------------------------------------------------------------------
# extensions


def _default_basepoint(truss):
    if truss.absorber is not None:
        return truss.absorber
    if truss.identity is not None:
        return truss.identity
    return 0 if truss.is_finite else 0


class ExtensionTruss:
    """T with a singleton truss adjoined: the unital extension T1 (new
    identity) or the ring extension T0 (new absorber).

    Elements are canonical direct-sum forms (base-carrier component, integer
    tail); the singleton component is suppressed into the tail.  The product
    extends the base multiplication letter by letter over word forms and
    normalizes, so it is defined for arbitrary base trusses.
    """

    is_finite = False
    size = None

    def __init__(self, base, adjoined: str, basepoint=None):
        if adjoined not in ("one", "zero"):
            raise StructureError("adjoined element must be 'one' or 'zero'")
        self.base = base
        self.adjoined = adjoined
        self.basepoint = _default_basepoint(base) if basepoint is None else basepoint
        symbol = "1" if adjoined == "one" else "0"
        self.ds = DirectSum((
            HeapSummand(base.carrier_heap(), self.basepoint),
            HeapSummand(FiniteHeap.singleton(symbol), 0),
        ))
        self.adjoined_element = self.ds.inject(1, 0)
        if adjoined == "one":
            self.identity = self.adjoined_element
            self.absorber = None if base.absorber is None else self.inject(base.absorber)
        else:
            self.absorber = self.adjoined_element
            self.identity = None if base.identity is None else self.inject(base.identity)

    @property
    def unital(self):
        return self.identity is not None

    @property
    def ring_type(self):
        return self.absorber is not None

    def inject(self, t) -> CoproductElement:
        return self.ds.inject(0, t)

    def element(self, g, n: int) -> CoproductElement:
        """The canonical element with base-carrier component g and tail n."""
        return self.ds.make((g, 0), (n,))

    def ternary(self, x, y, z):
        return self.ds.ternary(x, y, z)

    def contains(self, x):
        return self.ds.contains(x)

    def carrier_heap(self):
        return self.ds

    def sample_elements(self, window):
        return self.ds.enumerate_elements(window)

    def elements(self):
        return None

    def _letter_times(self, t, y) -> CoproductElement:
        # t.y for t in the base truss: act on each letter of y's word form
        mapped = []
        for j, v in self.ds.word_form(y):
            if j == 0:
                mapped.append((0, self.base.mul(t, v)))
            elif self.adjoined == "one":
                mapped.append((0, t))        # t.1 = t
            else:
                mapped.append((1, 0))        # t.0 = 0
        return self.ds.normalize_word(mapped)

    def mul(self, x, y) -> CoproductElement:
        values = []
        for i, u in self.ds.word_form(x):
            if i == 1:
                values.append(y if self.adjoined == "one" else self.adjoined_element)
            else:
                values.append(self._letter_times(u, y))
        return self.ds.fold(values)

    def format_element(self, x) -> str:
        return f"({self.base.format_element(x.components[0])}; {x.tails[0]})"

    def __eq__(self, other):
        return (isinstance(other, ExtensionTruss)
                and self.adjoined == other.adjoined and self.base == other.base
                and self.basepoint == other.basepoint)

    def __repr__(self):
        return f"ExtensionTruss({self.base!r}, adjoined={self.adjoined})"


def unital_extension(t) -> ExtensionTruss:
    """Adjoin a new multiplicative identity; an existing absorber survives,
    an existing identity is demoted to an ordinary element."""
    return ExtensionTruss(t, "one")


def ring_extension(t) -> ExtensionTruss:
    """Adjoin a new absorber; an existing identity survives, an existing
    absorber stops absorbing."""
    return ExtensionTruss(t, "zero")


def double_extension(t) -> ExtensionTruss:
    """Ring extension of the unital extension: unital and ring-type."""
    return ring_extension(unital_extension(t))


# ---------------------------------------------------------------------------
# validation


def validate_truss(t, *, samples=10_000, window=5, seed=2026) -> Report:
    """Associativity and both distributive laws.

    Finite trusses are checked exhaustively; symbolic carriers are sampled on
    a deterministic window.  The identity/absorber elements (scanned for
    finite trusses, declared by construction otherwise) are re-verified and
    reported in the stats.
    """
    findings = []
    if t.is_finite:
        n = t.size
        rng_elems = None
        for a, b, c in itertools.product(range(n), repeat=3):
            if t.mul(t.mul(a, b), c) != t.mul(a, t.mul(b, c)):
                findings.append(Finding("product associativity", (a, b, c),
                                        t.mul(t.mul(a, b), c), t.mul(a, t.mul(b, c))))
        for s, a, b, c in itertools.product(range(n), repeat=4):
            lhs = t.mul(s, t.ternary(a, b, c))
            rhs = t.ternary(t.mul(s, a), t.mul(s, b), t.mul(s, c))
            if lhs != rhs:
                findings.append(Finding("left distributivity over [,,]", (s, a, b, c), lhs, rhs))
            lhs = t.mul(t.ternary(a, b, c), s)
            rhs = t.ternary(t.mul(a, s), t.mul(b, s), t.mul(c, s))
            if lhs != rhs:
                findings.append(Finding("right distributivity over [,,]", (s, a, b, c), lhs, rhs))
        checked = n ** 3 + 2 * n ** 4
        pool = list(range(n))
    else:
        rng = random.Random(seed)
        pool = list(t.sample_elements(window))
        checked = 0
        for _ in range(samples):
            a, b, c, s = (rng.choice(pool) for _ in range(4))
            if t.mul(t.mul(a, b), c) != t.mul(a, t.mul(b, c)):
                findings.append(Finding("product associativity", (a, b, c),
                                        t.mul(t.mul(a, b), c), t.mul(a, t.mul(b, c))))
            lhs = t.mul(s, t.ternary(a, b, c))
            rhs = t.ternary(t.mul(s, a), t.mul(s, b), t.mul(s, c))
            if lhs != rhs:
                findings.append(Finding("left distributivity over [,,]", (s, a, b, c), lhs, rhs))
            lhs = t.mul(t.ternary(a, b, c), s)
            rhs = t.ternary(t.mul(a, s), t.mul(b, s), t.mul(c, s))
            if lhs != rhs:
                findings.append(Finding("right distributivity over [,,]", (s, a, b, c), lhs, rhs))
            checked += 3
    if t.identity is not None:
        for x in pool:
            if t.mul(t.identity, x) != x or t.mul(x, t.identity) != x:
                findings.append(Finding("identity law", (x,),
                                        t.mul(t.identity, x), x))
    if t.absorber is not None:
        for x in pool:
            if t.mul(t.absorber, x) != t.absorber or t.mul(x, t.absorber) != t.absorber:
                findings.append(Finding("absorber law", (x,),
                                        t.mul(t.absorber, x), t.absorber))
    stats = {
        "checked": checked,
        "unital": t.identity is not None,
        "ring_type": t.absorber is not None,
        "identity": None if t.identity is None else t.format_element(t.identity),
        "absorber": None if t.absorber is None else t.format_element(t.absorber),
        "exhaustive": t.is_finite,
    }
    return Report("truss", FAIL if findings else PASS, findings, stats)


# ---------------------------------------------------------------------------
# retract rings


class RetractRing:
    """The ring living on a (possibly symbolic) ring-type truss: addition is
    the retract group at the absorber, multiplication is the truss product."""

    __slots__ = ("truss", "zero")

    def __init__(self, truss, zero):
        self.truss = truss
        self.zero = zero

    @property
    def one(self):
        return self.truss.identity

    def plus(self, a, b):
        return self.truss.ternary(a, self.zero, b)

    def neg(self, a):
        return self.truss.ternary(self.zero, a, self.zero)

    def mul(self, a, b):
        return self.truss.mul(a, b)

    def scale(self, k: int, a):
        out = self.zero
        step = a if k >= 0 else self.neg(a)
        for _ in range(abs(k)):
            out = self.plus(out, step)
        return out

    def sample_elements(self, window):
        return self.truss.sample_elements(window)

    def __repr__(self):
        return f"RetractRing({self.truss!r})"


def _check_absorber(t, zero, window=4):
    if t.absorber is not None and zero == t.absorber:
        return
    pool = t.elements() if t.is_finite else itertools.islice(t.sample_elements(window), 500)
    for x in pool:
        if t.mul(zero, x) != zero or t.mul(x, zero) != zero:
            raise StructureError(f"{zero!r} is not a two-sided absorber")


def retract_ring(t, zero):
    """The ring on a ring-type truss with the given absorber as its zero."""
    if not t.contains(zero):
        raise StructureError(f"{zero!r} is not in the carrier")
    _check_absorber(t, zero)
    if t.is_finite:
        add = retract(t.heap, zero)
        return FiniteRing(add, t.mul_table, names=t.names)
    return RetractRing(t, zero)


def dorroh_compare(ring: FiniteRing, window: int = 3) -> Report:
    """Check the unital-extension retract of T(R) against the Dorroh product
    (r+n)(r'+n') = rr' + rn' + nr' + nn' on the full window; stops at the
    first mismatch."""
    if window <= 0:
        raise StructureError("window must be positive")
    t1 = unital_extension(truss_from_ring(ring))
    checked = 0
    for r, rp in itertools.product(range(ring.size), repeat=2):
        for n, np_ in itertools.product(range(-window, window + 1), repeat=2):
            x = t1.element(r, n)
            y = t1.element(rp, np_)
            got = t1.mul(x, y)
            r_part = ring.plus(ring.plus(ring.mul(r, rp), ring.scale(np_, r)),
                               ring.scale(n, rp))
            want = t1.element(r_part, n * np_)
            checked += 1
            if got != want:
                return Report("dorroh comparison", FAIL,
                              [Finding("Dorroh product", (r, n, rp, np_), str(got), str(want))],
                              {"ring": ring.size, "window": window, "checked": checked})
    return Report("dorroh comparison", PASS, [],
                  {"ring": ring.size, "window": window, "checked": checked})

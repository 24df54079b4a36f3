"""Modules over trusses: validation, absorbers, the quotient-to-ring functor,
free modules, and freeness tests.

Finite modules are table-backed.  Free modules are canonical direct sums of
copies of the truss; their action is letter-wise over word forms, with a
component-wise fast path over ring trusses (the tails are then untouched).
The quotient by the absorber sub-heap turns a module over the truss of a
ring back into a module over that ring.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from .coproduct import CoproductElement, DirectSum, HeapSummand
from .core import (
    FiniteGroup,
    FiniteHeap,
    StructureError,
    heap_from_group,
    retract,
    SubHeap,
)
from .reports import FAIL, INCONCLUSIVE, PASS, Finding, Report
from .rings import FiniteRing, RModule
from .trusses import IntegerTruss, retract_ring, truss_from_ring


class FiniteTModule:
    """A left module over a finite truss, with an explicit action table."""

    __slots__ = ("truss", "heap", "action", "size", "names")

    is_finite = True

    def __init__(self, truss, heap: FiniteHeap, action):
        if not truss.is_finite:
            raise StructureError("table-backed modules need a finite truss")
        if not heap.abelian:
            raise StructureError("a module carrier must be an Abelian heap")
        self.truss = truss
        self.heap = heap
        self.size = heap.size
        self.names = heap.names
        self.action = tuple(tuple(row) for row in action)
        if len(self.action) != truss.size or any(len(r) != heap.size for r in self.action):
            raise StructureError("action table does not match truss x carrier")

    @classmethod
    def regular(cls, truss) -> "FiniteTModule":
        """The truss acting on its own carrier by multiplication."""
        return cls(truss, truss.heap, truss.mul_table)

    @classmethod
    def from_rmodule(cls, rm: RModule) -> "FiniteTModule":
        """T(N): a module over a ring viewed as a module over T(R)."""
        return cls(truss_from_ring(rm.ring), heap_from_group(rm.group), rm.action)

    def act(self, t, m):
        return self.action[t][m]

    def ternary(self, a, b, c):
        return self.heap.ternary(a, b, c)

    def contains(self, x):
        return self.heap.contains(x)

    def elements(self):
        return range(self.size)

    def sample_elements(self, window):
        return range(self.size)

    def __len__(self):
        return self.size

    def __eq__(self, other):
        return (isinstance(other, FiniteTModule) and self.truss == other.truss
                and self.heap == other.heap and self.action == other.action)

    def __repr__(self):
        return f"FiniteTModule(order={self.size} over truss of order {self.truss.size})"


def empty_module(truss) -> FiniteTModule:
    """The empty module, the initial object; most operations reject it."""
    if not truss.is_finite:
        raise StructureError("the empty module constructor needs a finite truss")
    return FiniteTModule(truss, FiniteHeap.empty(), [[] for _ in range(truss.size)])


class TrivialIntModule:
    """The integer heap as a module over the integer truss with m . n = n.

    Every element is an absorber, so this is a module over the truss of the
    integers but not a module over the ring of integers.
    """

    is_finite = False
    size = None

    def __init__(self):
        self.truss = IntegerTruss()

    def act(self, t, m):
        return m

    def ternary(self, a, b, c):
        return a - b + c

    def contains(self, x):
        return isinstance(x, int)

    def elements(self):
        return None

    def sample_elements(self, window):
        return range(-window, window + 1)

    def __eq__(self, other):
        return isinstance(other, TrivialIntModule)

    def __repr__(self):
        return "TrivialIntModule()"


class FreeTModule:
    """The free unital module on n generators: the n-fold direct sum of the
    truss acting on itself, in canonical component/tail coordinates.

    The generator x_i is the injected multiplicative identity of summand i.
    Over the truss of a ring, with the ring zero as base point, the action
    multiplies the components and leaves the tails alone; in general the
    action maps each letter of a word form and renormalizes.
    """

    is_finite = False
    size = None

    def __init__(self, truss, n: int, basepoint=None):
        if n < 1:
            raise StructureError("a free module needs at least one generator"
                                 " (the empty module has its own constructor)")
        if truss.identity is None:
            raise StructureError("free modules are built over unital trusses")
        if basepoint is None:
            basepoint = truss.absorber if truss.absorber is not None else truss.identity
        if not truss.contains(basepoint):
            raise StructureError(f"base point {basepoint!r} is not in the truss")
        self.truss = truss
        self.n = n
        self.basepoint = basepoint
        carrier = truss.carrier_heap()
        self.ds = DirectSum(tuple(HeapSummand(carrier, basepoint) for _ in range(n)))
        self._fast = truss.absorber is not None and basepoint == truss.absorber

    def generators(self):
        return [self.ds.inject(i, self.truss.identity) for i in range(self.n)]

    def act(self, t, x) -> CoproductElement:
        if self._fast:
            comps = tuple(self.truss.mul(t, c) for c in x.components)
            return CoproductElement(comps, x.tails)
        mapped = [(i, self.truss.mul(t, u)) for i, u in self.ds.word_form(x)]
        return self.ds.normalize_word(mapped)

    def act_letterwise(self, t, x) -> CoproductElement:
        """The defining letter-by-letter action, bypassing the fast path."""
        mapped = [(i, self.truss.mul(t, u)) for i, u in self.ds.word_form(x)]
        return self.ds.normalize_word(mapped)

    def ternary(self, a, b, c):
        return self.ds.ternary(a, b, c)

    def contains(self, x):
        return self.ds.contains(x)

    def elements(self):
        return None

    def sample_elements(self, window):
        return self.ds.enumerate_elements(window)

    def __eq__(self, other):
        return (isinstance(other, FreeTModule) and self.truss == other.truss
                and self.n == other.n and self.basepoint == other.basepoint)

    def universal_lift(self, target, images):
        """The unique module map sending generator i to images[i]: evaluate
        word forms letter-wise, t x_i |-> t . images[i]."""
        if len(images) != self.n:
            raise StructureError("one image per generator is required")

        def lifted(x):
            values = [target.act(u, images[i]) for i, u in self.ds.word_form(x)]
            acc = values[0]
            for j in range(1, len(values), 2):
                acc = target.ternary(acc, values[j], values[j + 1])
            return acc

        return lifted

    def __repr__(self):
        return f"FreeTModule(n={self.n} over {self.truss!r})"


def free_module(truss, n: int, basepoint=None) -> FreeTModule:
    return FreeTModule(truss, n, basepoint)


# ---------------------------------------------------------------------------
# validation


def validate_module(m, *, samples=10_000, window=4, seed=2026) -> Report:
    """The three module laws, exhaustively for finite tables, sampled on a
    window otherwise; unitality is reported when the truss has an identity."""
    findings = []
    t = m.truss
    if m.is_finite and t.is_finite:
        ts = list(t.elements())
        ms = list(m.elements())
        exhaustive = True
        checked = 0
        for a, b in itertools.product(ts, repeat=2):
            for x in ms:
                if m.act(a, m.act(b, x)) != m.act(t.mul(a, b), x):
                    findings.append(Finding("action associativity t(t'm) = (tt')m",
                                            (a, b, x),
                                            m.act(a, m.act(b, x)), m.act(t.mul(a, b), x)))
                checked += 1
        for a, b, c in itertools.product(ts, repeat=3):
            for x in ms:
                lhs = m.act(t.ternary(a, b, c), x)
                rhs = m.ternary(m.act(a, x), m.act(b, x), m.act(c, x))
                if lhs != rhs:
                    findings.append(Finding("distributivity [t,t',t'']m", (a, b, c, x), lhs, rhs))
                checked += 1
        for a in ts:
            for x, y, z in itertools.product(ms, repeat=3):
                lhs = m.act(a, m.ternary(x, y, z))
                rhs = m.ternary(m.act(a, x), m.act(a, y), m.act(a, z))
                if lhs != rhs:
                    findings.append(Finding("distributivity t[m,m',m'']", (a, x, y, z), lhs, rhs))
                checked += 1
    else:
        exhaustive = False
        rng = random.Random(seed)
        tpool = list(t.elements()) if t.is_finite else list(t.sample_elements(window))
        mpool = list(itertools.islice(m.sample_elements(window), 4000))
        checked = 0
        for _ in range(samples):
            a, b, c = (rng.choice(tpool) for _ in range(3))
            x, y, z = (rng.choice(mpool) for _ in range(3))
            if m.act(a, m.act(b, x)) != m.act(t.mul(a, b), x):
                findings.append(Finding("action associativity t(t'm) = (tt')m", (a, b),
                                        str(m.act(a, m.act(b, x))), str(m.act(t.mul(a, b), x))))
            lhs = m.act(t.ternary(a, b, c), x)
            rhs = m.ternary(m.act(a, x), m.act(b, x), m.act(c, x))
            if lhs != rhs:
                findings.append(Finding("distributivity [t,t',t'']m", (a, b, c), str(lhs), str(rhs)))
            lhs = m.act(a, m.ternary(x, y, z))
            rhs = m.ternary(m.act(a, x), m.act(a, y), m.act(a, z))
            if lhs != rhs:
                findings.append(Finding("distributivity t[m,m',m'']", (a,), str(lhs), str(rhs)))
            checked += 3
    unital = None
    if t.identity is not None:
        pool = m.elements() if m.is_finite else itertools.islice(m.sample_elements(window), 500)
        unital = True
        for x in pool:
            if m.act(t.identity, x) != x:
                unital = False
                findings.append(Finding("unitality 1m = m", (str(x),),
                                        str(m.act(t.identity, x)), str(x)))
                break
    return Report("T-module", FAIL if findings else PASS, findings,
                  {"checked": checked, "exhaustive": exhaustive, "unital": unital})


# ---------------------------------------------------------------------------
# absorbers


@dataclass(frozen=True)
class AbsorberSet:
    """The invariant elements of a module: an explicit finite set, the whole
    carrier, or the tail sub-heap of a free module over a ring truss."""

    module: object
    kind: str           # "finite" | "all" | "tails"
    members: tuple = None

    def is_singleton(self) -> bool:
        if self.kind == "finite":
            return len(self.members) == 1
        if self.kind == "tails":
            return self.module.n == 1
        return False

    def contains(self, x) -> bool:
        if self.kind == "finite":
            return x in self.members
        if self.kind == "all":
            return self.module.contains(x)
        zero = self.module.truss.absorber
        return (self.module.contains(x)
                and all(c == zero for c in x.components))

    def __len__(self):
        if self.kind == "finite":
            return len(self.members)
        raise TypeError("infinite absorber set")


def absorbers(m) -> AbsorberSet:
    """The absorber set.  Finite carriers are scanned directly; over the
    truss of a ring the set equals {0.m}; for a free module over a ring
    truss it is the sub-heap of tails (zero components, arbitrary tails)."""
    t = m.truss
    if isinstance(m, FreeTModule):
        if not m._fast:
            raise StructureError("absorbers of a free module are computed over"
                                 " ring trusses with the zero as base point")
        return AbsorberSet(m, "tails")
    if isinstance(m, TrivialIntModule):
        return AbsorberSet(m, "all")
    if m.is_finite and t.is_finite:
        members = tuple(x for x in m.elements()
                        if all(m.act(a, x) == x for a in t.elements()))
        return AbsorberSet(m, "finite", members)
    if m.is_finite and t.absorber is not None:
        members = sorted({m.act(t.absorber, x) for x in m.elements()})
        return AbsorberSet(m, "finite", tuple(members))
    raise StructureError("cannot decide the absorber set for this module")


def is_ring_module(m) -> bool:
    """Over the truss of a ring: is this the module of a ring module?
    True exactly when the absorber set is a singleton."""
    if m.truss.absorber is None:
        raise StructureError("the ring-module test needs a ring-type truss")
    return absorbers(m).is_singleton()


def to_ring_module(m: FiniteTModule) -> RModule:
    """The ring module on the retract at the unique absorber."""
    aset = absorbers(m)
    if not aset.is_singleton():
        raise StructureError("not a ring module: the absorber is not unique")
    e = aset.members[0]
    ring = retract_ring(m.truss, m.truss.absorber)
    group = retract(m.heap, e)
    return RModule(ring, group, m.action)


# ---------------------------------------------------------------------------
# the quotient-by-absorbers functor


def absorber_classes(m: FiniteTModule):
    """Equivalence classes of the absorber sub-heap relation, ordered by
    least member, with the projection of each element."""
    aset = absorbers(m)
    if aset.kind != "finite" or not aset.members:
        raise StructureError("absorber classes need a non-empty finite absorber set")
    sub = SubHeap(m.heap, aset.members)
    classes = {}
    for a in m.elements():
        classes[a] = frozenset(m.ternary(x, y, a) for x in sub.members for y in sub.members)
    distinct = sorted(set(classes.values()), key=min)
    index = {c: i for i, c in enumerate(distinct)}
    proj = tuple(index[classes[a]] for a in m.elements())
    return distinct, proj


def abs_quotient(m):
    """M_Abs: the quotient by the absorbers, retracted at the absorber class.

    For a finite module over the truss of a ring this is an R-module with
    the descended action; for a free module over a ring truss the quotient
    is the component projection onto R^n.  Returns (module, projection).
    """
    if isinstance(m, FreeTModule):
        if not m._fast:
            raise StructureError("the absorber quotient of a free module needs"
                                 " a ring truss with the zero as base point")
        ring = retract_ring(m.truss, m.truss.absorber)
        n = m.n

        def project(x):
            out = 0
            for c in x.components:
                out = out * ring.size + c
            return out

        # classes are indexed by component vectors; build the retract tables
        # from genuine representatives with varying tails, so representative
        # independence is exercised rather than assumed
        vectors = list(itertools.product(range(ring.size), repeat=n))
        def rep(i, salt):
            tails = tuple((salt + 3 * j) % 5 - 2 for j in range(n - 1))
            return CoproductElement(vectors[i], tails)

        zero_class = vectors.index((ring.zero,) * n)
        add_table = [
            [project(m.ternary(rep(i, i + 1), rep(zero_class, 7), rep(j, 2 * j)))
             for j in range(len(vectors))]
            for i in range(len(vectors))
        ]
        group = FiniteGroup(add_table)
        action = [
            [project(m.act(t, rep(i, t + i))) for i in range(len(vectors))]
            for t in m.truss.elements()
        ]
        return RModule(ring, group, action), project
    if not (m.is_finite and m.truss.is_finite):
        raise StructureError("the absorber quotient needs a finite carrier"
                             " or a canonical free module")
    if m.size == 0:
        raise StructureError("the empty module has no absorber quotient")
    classes, proj = absorber_classes(m)
    reps = [min(c) for c in classes]
    qheap_table = tuple(
        tuple(tuple(proj[m.ternary(a, b, c)] for c in reps) for b in reps)
        for a in reps
    )
    names = tuple("{" + ",".join(m.names[x] for x in sorted(c)) + "}" for c in classes)
    qheap = FiniteHeap(len(classes), table=qheap_table, names=names, abelian=True)
    action = tuple(
        tuple(proj[m.act(t, rep)] for rep in reps)
        for t in m.truss.elements()
    )
    abs_class = proj[absorbers(m).members[0]]
    if m.truss.absorber is not None:
        ring = retract_ring(m.truss, m.truss.absorber)
        group = retract(qheap, abs_class)
        return RModule(ring, group, action), (lambda a: proj[a])
    return FiniteTModule(m.truss, qheap, action), (lambda a: proj[a])


@dataclass(frozen=True)
class ModuleMorphism:
    """A heap morphism between finite modules that respects the action."""

    source: FiniteTModule
    target: FiniteTModule
    mapping: tuple

    def __post_init__(self):
        if self.source.truss is not self.target.truss and \
                self.source.truss.mul_table != self.target.truss.mul_table:
            raise StructureError("module morphisms need a common truss")
        if len(self.mapping) != self.source.size:
            raise StructureError("mapping does not cover the source")
        n = self.source.size
        for a, b, c in itertools.product(range(n), repeat=3):
            if self.mapping[self.source.ternary(a, b, c)] != \
                    self.target.ternary(self.mapping[a], self.mapping[b], self.mapping[c]):
                raise StructureError(f"ternary operation not preserved at ({a},{b},{c})")
        for t in self.source.truss.elements():
            for x in range(n):
                if self.mapping[self.source.act(t, x)] != self.target.act(t, self.mapping[x]):
                    raise StructureError(f"action not preserved at ({t},{x})")

    def __call__(self, a):
        return self.mapping[a]

    def is_injective(self) -> bool:
        return len(set(self.mapping)) == self.source.size


def abs_on_morphism(phi: ModuleMorphism):
    """The induced map between absorber quotients (well defined because
    morphisms send absorbers to absorbers).  Returns (source quotient,
    target quotient, class mapping)."""
    src_classes, src_proj = absorber_classes(phi.source)
    dst_classes, dst_proj = absorber_classes(phi.target)
    mapping = [None] * len(src_classes)
    for x in phi.source.elements():
        image = dst_proj[phi(x)]
        if mapping[src_proj[x]] is None:
            mapping[src_proj[x]] = image
        elif mapping[src_proj[x]] != image:
            raise StructureError("quotient map is not well defined")
    qsrc, _ = abs_quotient(phi.source)
    qdst, _ = abs_quotient(phi.target)
    return qsrc, qdst, tuple(mapping)


# ---------------------------------------------------------------------------
# the adjunction between (-)_Abs and T


def tmodule_homs_to_TN(m: FiniteTModule, n_mod: RModule):
    """All module maps from m into T(N), as mapping tuples (brute force)."""
    t = m.truss
    if t.absorber is None:
        raise StructureError("the target T(N) needs a ring-type truss")
    size_m, size_n = m.size, n_mod.size
    out = []
    for mapping in itertools.product(range(size_n), repeat=size_m):
        ok = True
        for a, b, c in itertools.product(range(size_m), repeat=3):
            lhs = mapping[m.ternary(a, b, c)]
            rhs = n_mod.plus(n_mod.plus(mapping[a], n_mod.neg(mapping[b])), mapping[c])
            if lhs != rhs:
                ok = False
                break
        if not ok:
            continue
        for r in t.elements():
            for x in range(size_m):
                if mapping[m.act(r, x)] != n_mod.act(r, mapping[x]):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            out.append(mapping)
    return out


def adjunction_theta(m: FiniteTModule, n_mod: RModule, phi):
    """Turn an R-module map M_Abs -> N into the module map M -> T(N),
    m |-> phi(class of m)."""
    _, proj = absorber_classes(m)
    return tuple(phi[proj[x]] for x in m.elements())


def adjunction_theta_inv(m: FiniteTModule, n_mod: RModule, psi):
    """Turn a module map M -> T(N) into the R-module map M_Abs -> N on
    class representatives; representative independence is re-checked."""
    classes, proj = absorber_classes(m)
    out = [None] * len(classes)
    for x in m.elements():
        if out[proj[x]] is None:
            out[proj[x]] = psi[x]
        elif out[proj[x]] != psi[x]:
            raise StructureError("map does not descend to the absorber quotient")
    return tuple(out)


# ---------------------------------------------------------------------------
# sigma maps and freeness


@dataclass(frozen=True)
class SigmaMorphism:
    """The module map T -> M, t |-> t.x, for a fixed element x."""

    module: object
    x: object

    def __call__(self, t):
        return self.module.act(t, self.x)

    def image(self):
        t = self.module.truss
        if not t.is_finite:
            raise StructureError("enumerating the image needs a finite truss")
        seen = []
        for a in t.elements():
            v = self(a)
            if v not in seen:
                seen.append(v)
        return seen


def sigma(m, x) -> SigmaMorphism:
    if not m.contains(x):
        raise StructureError(f"{x!r} is not in the module carrier")
    return SigmaMorphism(m, x)


def _source_sum(truss, count):
    base = truss.absorber if truss.absorber is not None else truss.identity
    if base is None:
        base = 0 if truss.is_finite else 0
    carrier = truss.carrier_heap()
    return DirectSum(tuple(HeapSummand(carrier, base) for _ in range(count)))


def _evaluate(ds: DirectSum, m, candidates, x) -> object:
    """Evaluate the copaired sigma morphism on a canonical source element."""
    values = [m.act(u, candidates[i]) for i, u in ds.word_form(x)]
    acc = values[0]
    for j in range(1, len(values), 2):
        acc = m.ternary(acc, values[j], values[j + 1])
    return acc


def free_set_check(m, candidates, *, window=4, max_window=None) -> Report:
    """Is the candidate set free (the copaired sigma map injective)?

    Finite targets with two or more candidates are decided negatively by a
    pigeonhole search with an explicit collision witness.  A single
    candidate over a finite truss is decided exactly.  Otherwise the search
    is windowed: a collision decides `fail`, exhaustion is `inconclusive`,
    never a pass.  Pairwise image intersections (one candidate against the
    span of the others) are reported alongside.
    """
    candidates = list(candidates)
    if not candidates:
        raise StructureError("free-set check needs at least one candidate")
    for x in candidates:
        if not m.contains(x):
            raise StructureError(f"candidate {x!r} is not in the module")
    t = m.truss
    s = len(candidates)
    ds = _source_sum(t, s)
    findings = []
    stats = {"candidates": s, "window": window}

    decided = None
    if s == 1 and t.is_finite:
        seen = {}
        for a in t.elements():
            v = _evaluate(ds, m, candidates, ds.inject(0, a))
            if v in seen:
                findings.append(Finding("copaired map collision",
                                        (str(seen[v]), str(a)), str(v), str(v),
                                        note="sigma_x identifies two truss elements"))
                decided = FAIL
                break
            seen[v] = a
        else:
            decided = PASS
        stats["checked"] = len(list(t.elements()))
    else:
        if m.is_finite:
            bound = m.size + 2
        else:
            bound = window
        if max_window is not None:
            bound = max_window
        seen = {}
        by_value = {}
        checked = 0
        collision = None
        for w in range(bound + 1):
            for x in ds.enumerate_elements(w):
                if x in seen:
                    continue
                v = _evaluate(ds, m, candidates, x)
                seen[x] = v
                checked += 1
                if v in by_value:
                    collision = (by_value[v], x, v)
                    break
                by_value[v] = x
            if collision:
                break
        stats["checked"] = checked
        if collision:
            other, x, v = collision
            findings.append(Finding("copaired map collision", (str(other), str(x)),
                                    str(v), str(v),
                                    note="two distinct canonical forms share an image"))
            decided = FAIL
        elif m.is_finite and s >= 2:
            decided = INCONCLUSIVE  # should not happen: pigeonhole guarantees a hit
        else:
            decided = INCONCLUSIVE
            findings.append(Finding("no collision within window", (),
                                    note=f"window {bound}, {checked} elements"))

    if s >= 2:
        intersections = []
        for i in range(s):
            own = {_evaluate(ds, m, candidates, ds.inject(i, a))
                   for a in (t.elements() if t.is_finite else t.sample_elements(window))}
            rest_idx = [j for j in range(s) if j != i]
            rest_ds = _source_sum(t, s - 1)
            rest_cands = [candidates[j] for j in rest_idx]
            rest = {_evaluate(rest_ds, m, rest_cands, y)
                    for y in rest_ds.enumerate_elements(min(window, 3))}
            overlap = own & rest
            intersections.append(sorted(str(v) for v in overlap))
            if overlap and decided == PASS:
                decided = FAIL
        stats["image_intersections"] = intersections

    return Report("free-set check", decided, findings, stats)


def basis_check(m, candidates, *, window=4) -> Report:
    """Free plus spanning.  Finite modules are decided exactly (the span is
    the closure of the orbit under the heap operation); infinite carriers
    report the windowed free-set result."""
    free = free_set_check(m, candidates, window=window)
    findings = list(free.findings)
    stats = dict(free.stats)
    if not m.is_finite:
        return Report("basis check", INCONCLUSIVE if free.status != FAIL else FAIL,
                      findings, stats)
    t = m.truss
    reach = {m.act(a, x) for a in t.elements() for x in candidates}
    grew = True
    while grew:
        grew = False
        for a, b, c in itertools.product(sorted(reach), repeat=3):
            v = m.ternary(a, b, c)
            if v not in reach:
                reach.add(v)
                grew = True
    spanning = len(reach) == m.size
    stats["span"] = len(reach)
    stats["carrier"] = m.size
    if not spanning:
        findings.append(Finding("not spanning", (),
                                note=f"orbit closure reaches {len(reach)} of {m.size}"))
    if free.status == PASS and spanning:
        return Report("basis check", PASS, findings, stats)
    return Report("basis check", FAIL, findings or
                  [Finding("not a basis", ())], stats)


def freeness_of_TN(rm: RModule) -> Report:
    """Is T(N) free over T(R)?  Exactly when N and R are isomorphic modules.

    A negative verdict carries the structural witness: T(N) has a unique
    absorber, while a free module on two or more generators has the distinct
    absorbers 0x != 0y.
    """
    from .rings import rmodule_isomorphism

    ring = rm.ring
    regular = RModule.regular(ring)
    iso = rmodule_isomorphism(rm, regular)
    tn = FiniteTModule.from_rmodule(rm)
    aset = absorbers(tn)
    findings = []
    stats = {"module": rm.size, "ring": ring.size,
             "absorbers_of_TN": [tn.names[x] for x in aset.members]}
    if iso is not None:
        stats["isomorphism"] = list(iso)
        return Report("freeness of T(N)", PASS, [], stats)
    fm = free_module(truss_from_ring(ring), 2)
    zx = fm.ds.inject(0, ring.zero)
    zy = fm.ds.inject(1, ring.zero)
    findings.append(Finding("no module isomorphism between N and R", ()))
    findings.append(Finding("rank >= 2 free modules have distinct absorbers",
                            (str(zx), str(zy)),
                            note="0x != 0y, but T(N) has a unique absorber"))
    return Report("freeness of T(N)", FAIL, findings, stats)


def verify_abs_of_free(ring: FiniteRing, n: int, *, window=3) -> Report:
    """Build the rank-n free module over T(R) and verify: the absorbers are
    the tail sub-heap (the heap of Z^{n-1}), the quotient retract is R^n by
    explicit table comparison, and the generator images are a basis."""
    findings = []
    t = truss_from_ring(ring)
    fm = free_module(t, n)
    aset = absorbers(fm)

    # absorbers = zero components, any tails; tails combine like Z^{n-1}
    tails_pool = list(itertools.product(range(-window, window + 1), repeat=n - 1))
    zero_comps = (ring.zero,) * n
    for tails in tails_pool:
        x = CoproductElement(zero_comps, tails)
        if not aset.contains(x):
            findings.append(Finding("tail element not an absorber", (str(x),)))
        for a in t.elements():
            if fm.act(a, x) != x:
                findings.append(Finding("absorber not fixed by the action",
                                        (a, str(x)), str(fm.act(a, x)), str(x)))
    for x in itertools.islice(fm.sample_elements(2), 500):
        za = fm.act(ring.zero, x)
        if not aset.contains(za):
            findings.append(Finding("0.m outside the tail sub-heap", (str(x),)))
        if aset.contains(x) and any(c != ring.zero for c in x.components):
            findings.append(Finding("non-tail absorber", (str(x),)))
    for a, b, c in itertools.islice(itertools.product(tails_pool, repeat=3), 2000):
        xa = CoproductElement(zero_comps, a)
        xb = CoproductElement(zero_comps, b)
        xc = CoproductElement(zero_comps, c)
        got = fm.ternary(xa, xb, xc)
        want = tuple(p - q + r for p, q, r in zip(a, b, c))
        if got.tails != want or got.components != zero_comps:
            findings.append(Finding("tails do not combine like integers",
                                    (a, b, c), str(got), str(want)))

    # quotient retract: compare against R^n built independently from tables
    power = RModule.power(ring, n)
    quotient_module, project = abs_quotient(fm)
    if quotient_module.group.op_table() != power.group.op_table():
        findings.append(Finding("quotient addition table differs from R^n", ()))
    if quotient_module.action != power.action:
        findings.append(Finding("quotient action table differs from R^n", ()))
    sample = list(itertools.islice(fm.sample_elements(1), 800))
    for x in sample[:80]:
        for y in sample[:80:7]:
            for z in sample[:80:13]:
                lhs = project(fm.ternary(x, y, z))
                rhs = power.plus(power.plus(project(x), power.neg(project(y))), project(z))
                if lhs != rhs:
                    findings.append(Finding("projection is not a heap morphism",
                                            (str(x), str(y), str(z)), lhs, rhs))
    for a in t.elements():
        for x in sample[:160:3]:
            if project(fm.act(a, x)) != power.act(a, project(x)):
                findings.append(Finding("projection does not respect the action",
                                        (a, str(x))))

    # generator images form a basis of R^n
    images = [project(g) for g in fm.generators()]
    combos = {}
    duplicate = None
    for coeffs in itertools.product(range(ring.size), repeat=n):
        v = power.zero
        for r, img in zip(coeffs, images):
            v = power.plus(v, power.act(r, img))
        if v in combos:
            duplicate = (combos[v], coeffs)
        combos[v] = coeffs
    if len(combos) != power.size or duplicate:
        findings.append(Finding("generator images are not a basis of R^n",
                                duplicate or (), note=f"span {len(combos)} of {power.size}"))

    stats = {"ring": ring.size, "generators": n,
             "absorber_heap": f"H(Z^{n - 1})",
             "quotient": f"R^{n}",
             "basis_images": [str(i) for i in images]}
    return Report("absorber quotient of a free module", FAIL if findings else PASS,
                  findings, stats)

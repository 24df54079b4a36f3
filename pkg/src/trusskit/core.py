"""Finite heaps and finite groups as exact, integer-indexed operation tables.

Element ids are dense integers ``0..n-1``; display names live in a separate
tuple.  A heap either stores its full ternary table or computes the operation
on demand from a backing function (e.g. a group), behind one interface.  All
values are immutable after construction and every operation is pure.
"""

from __future__ import annotations

import itertools
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .reports import FAIL, INCONCLUSIVE, PASS, Finding, Report

ASSOC_GATE = 16  # the exhaustive heap associativity sweep is O(n^5)


class StructureError(ValueError):
    """Malformed table, unknown element, or an operation used out of domain."""


def worker_count() -> int:
    """Worker cap for exhaustive sweeps, from TRUSSKIT_THREADS (default 1)."""
    raw = os.environ.get("TRUSSKIT_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


# ---------------------------------------------------------------------------
# groups


def validate_group_table(op_table) -> Report:
    """Check a Cayley table for associativity, identity and inverses.

    Structural problems (ragged rows, ids out of range) raise StructureError;
    broken axioms are collected as findings, one per violated instance.
    """
    rows = tuple(tuple(row) for row in op_table)
    n = len(rows)
    for i, row in enumerate(rows):
        if len(row) != n:
            raise StructureError(f"row {i} has length {len(row)}, expected {n}")
        for j, v in enumerate(row):
            if not isinstance(v, int) or not 0 <= v < n:
                raise StructureError(f"entry ({i},{j}) = {v!r} is not an id in 0..{n - 1}")
    findings = []
    for a in range(n):
        for b in range(n):
            for c in range(n):
                if rows[rows[a][b]][c] != rows[a][rows[b][c]]:
                    findings.append(Finding("group associativity", (a, b, c),
                                            rows[rows[a][b]][c], rows[a][rows[b][c]]))
    neutral = None
    for e in range(n):
        if all(rows[e][x] == x == rows[x][e] for x in range(n)):
            neutral = e
            break
    if neutral is None and n > 0:
        findings.append(Finding("two-sided identity", (), note="no identity element"))
    elif neutral is not None:
        for a in range(n):
            if not any(rows[a][b] == neutral == rows[b][a] for b in range(n)):
                findings.append(Finding("two-sided inverse", (a,), note="no inverse"))
    status = FAIL if findings else PASS
    return Report("group table", status, findings, {"size": n, "identity": neutral})


class FiniteGroup:
    """Group on ids ``0..n-1`` with an explicit Cayley table."""

    __slots__ = ("size", "names", "neutral", "abelian", "_op", "_inv")

    def __init__(self, op_table, names=None, validate=True):
        rows = tuple(tuple(row) for row in op_table)
        if validate:
            report = validate_group_table(rows)
            if not report.ok:
                raise StructureError(f"not a group: {report.findings[0]}")
        self.size = len(rows)
        self._op = rows
        names = tuple(names) if names is not None else tuple(str(i) for i in range(self.size))
        if len(names) != self.size:
            raise StructureError("names do not match the carrier size")
        self.names = names
        self.neutral = next(
            (e for e in range(self.size)
             if all(rows[e][x] == x == rows[x][e] for x in range(self.size))),
            None,
        )
        if self.neutral is None and self.size > 0:
            raise StructureError("no identity element")
        self._inv = tuple(
            next(b for b in range(self.size) if rows[a][b] == self.neutral == rows[b][a])
            for a in range(self.size)
        )
        self.abelian = all(
            rows[a][b] == rows[b][a] for a in range(self.size) for b in range(a)
        )

    def op(self, a, b):
        return self._op[a][b]

    def inv(self, a):
        return self._inv[a]

    def elements(self):
        return range(self.size)

    def element_order(self, a) -> int:
        x, k = a, 1
        while x != self.neutral:
            x = self._op[x][a]
            k += 1
        return k

    def op_table(self):
        return self._op

    def __len__(self):
        return self.size

    def __eq__(self, other):
        return (isinstance(other, FiniteGroup)
                and self._op == other._op and self.neutral == other.neutral)

    def __hash__(self):
        return hash((self._op, self.neutral))

    def __repr__(self):
        return f"FiniteGroup(order={self.size}, neutral={self.names[self.neutral] if self.size else '-'})"

    # -- standard constructions ------------------------------------------

    @classmethod
    def cyclic(cls, n) -> "FiniteGroup":
        table = [[(a + b) % n for b in range(n)] for a in range(n)]
        return cls(table, validate=False)

    @classmethod
    def trivial(cls) -> "FiniteGroup":
        return cls.cyclic(1)

    @classmethod
    def product(cls, g, h) -> "FiniteGroup":
        n2 = h.size
        size = g.size * h.size
        table = [[0] * size for _ in range(size)]
        for a1, a2 in itertools.product(range(g.size), range(h.size)):
            for b1, b2 in itertools.product(range(g.size), range(h.size)):
                table[a1 * n2 + a2][b1 * n2 + b2] = g.op(a1, b1) * n2 + h.op(a2, b2)
        names = tuple(f"({g.names[a]},{h.names[b]})"
                      for a in range(g.size) for b in range(h.size))
        return cls(table, names, validate=False)

    @classmethod
    def dihedral(cls, n) -> "FiniteGroup":
        """Dihedral group of order 2n (``dihedral(3)`` is S3)."""
        size = 2 * n
        table = [[0] * size for _ in range(size)]
        for i in range(n):
            for j in range(n):
                table[i][j] = (i + j) % n
                table[i][j + n] = (i + j) % n + n
                table[i + n][j] = (i - j) % n + n
                table[i + n][j + n] = (i - j) % n
        names = tuple(f"r{i}" for i in range(n)) + tuple(f"s{i}" for i in range(n))
        return cls(table, names, validate=False)

    @classmethod
    def quaternion(cls) -> "FiniteGroup":
        units = ("1", "i", "j", "k")
        rules = {
            ("1", "1"): (0, "1"), ("1", "i"): (0, "i"), ("1", "j"): (0, "j"), ("1", "k"): (0, "k"),
            ("i", "1"): (0, "i"), ("j", "1"): (0, "j"), ("k", "1"): (0, "k"),
            ("i", "i"): (1, "1"), ("j", "j"): (1, "1"), ("k", "k"): (1, "1"),
            ("i", "j"): (0, "k"), ("j", "i"): (1, "k"),
            ("j", "k"): (0, "i"), ("k", "j"): (1, "i"),
            ("k", "i"): (0, "j"), ("i", "k"): (1, "j"),
        }
        idx = {(u, s): 2 * units.index(u) + s for u in units for s in (0, 1)}
        size = 8
        table = [[0] * size for _ in range(size)]
        for (u1, s1), a in idx.items():
            for (u2, s2), b in idx.items():
                s, u = rules[(u1, u2)]
                table[a][b] = idx[(u, (s + s1 + s2) % 2)]
        names = tuple(("" if s == 0 else "-") + u for u in units for s in (0, 1))
        return cls(table, names, validate=False)


def small_groups(max_order=8):
    """All groups of order <= max_order (up to isomorphism), with labels."""
    catalog = [
        ("C1", FiniteGroup.trivial()),
        ("C2", FiniteGroup.cyclic(2)),
        ("C3", FiniteGroup.cyclic(3)),
        ("C4", FiniteGroup.cyclic(4)),
        ("C2xC2", FiniteGroup.product(FiniteGroup.cyclic(2), FiniteGroup.cyclic(2))),
        ("C5", FiniteGroup.cyclic(5)),
        ("C6", FiniteGroup.cyclic(6)),
        ("S3", FiniteGroup.dihedral(3)),
        ("C7", FiniteGroup.cyclic(7)),
        ("C8", FiniteGroup.cyclic(8)),
        ("C4xC2", FiniteGroup.product(FiniteGroup.cyclic(4), FiniteGroup.cyclic(2))),
        ("C2xC2xC2", FiniteGroup.product(
            FiniteGroup.cyclic(2),
            FiniteGroup.product(FiniteGroup.cyclic(2), FiniteGroup.cyclic(2)))),
        ("D4", FiniteGroup.dihedral(4)),
        ("Q8", FiniteGroup.quaternion()),
    ]
    return [(label, g) for label, g in catalog if g.size <= max_order]


def _closure(g: FiniteGroup, seed) -> set:
    out = set(seed) | {g.neutral}
    frontier = list(out)
    while frontier:
        x = frontier.pop()
        for y in list(out):
            for z in (g.op(x, y), g.op(y, x)):
                if z not in out:
                    out.add(z)
                    frontier.append(z)
    return out


def _generating_sequence(g: FiniteGroup):
    gens, closed = [], {g.neutral}
    for x in range(g.size):
        if x not in closed:
            gens.append(x)
            closed = _closure(g, closed | {x})
    return gens


def _bfs_recipe(g: FiniteGroup, gens):
    """Each non-neutral element as (element, parent, gen index), parent-first."""
    seen = {g.neutral}
    recipe = []
    frontier = [g.neutral]
    while frontier:
        nxt = []
        for x in frontier:
            for gi, gen in enumerate(gens):
                y = g.op(x, gen)
                if y not in seen:
                    seen.add(y)
                    recipe.append((y, x, gi))
                    nxt.append(y)
        frontier = nxt
    return recipe


def group_isomorphism(g1: FiniteGroup, g2: FiniteGroup):
    """An isomorphism g1 -> g2 as an id mapping, or None.

    Backtracks over generator images (matched by element order) instead of
    trying all n! bijections.
    """
    if g1.size != g2.size:
        return None
    orders1 = sorted(g1.element_order(x) for x in range(g1.size))
    orders2 = sorted(g2.element_order(x) for x in range(g2.size))
    if orders1 != orders2:
        return None
    if g1.size == 0:
        return []
    gens = _generating_sequence(g1)
    recipe = _bfs_recipe(g1, gens)
    pairs = list(itertools.product(range(g1.size), repeat=2))
    candidates = [
        [y for y in range(g2.size) if g2.element_order(y) == g1.element_order(x)]
        for x in gens
    ]
    for imgs in itertools.product(*candidates):
        mapping = [None] * g1.size
        mapping[g1.neutral] = g2.neutral
        for x, parent, gi in recipe:
            mapping[x] = g2.op(mapping[parent], imgs[gi])
        if len(set(mapping)) != g1.size:
            continue
        if all(mapping[g1.op(x, y)] == g2.op(mapping[x], mapping[y]) for x, y in pairs):
            return mapping
    return None


def quotient_group(g: FiniteGroup, members):
    """Quotient of g by the (normal) subgroup on ``members``.

    Returns the quotient group and the coset index of each element; cosets
    are ordered by their least member so labelling is deterministic.
    """
    members = sorted(set(members))
    cosets = {}
    for a in range(g.size):
        cosets[a] = frozenset(g.op(s, a) for s in members)
    distinct = sorted(set(cosets.values()), key=min)
    index = {c: i for i, c in enumerate(distinct)}
    proj = [index[cosets[a]] for a in range(g.size)]
    reps = [min(c) for c in distinct]
    table = [[proj[g.op(a, b)] for b in reps] for a in reps]
    names = tuple("{" + ",".join(g.names[m] for m in sorted(c)) + "}" for c in distinct)
    return FiniteGroup(table, names), proj


# ---------------------------------------------------------------------------
# heaps


def _normalize_ternary(table):
    rows = tuple(tuple(tuple(level) for level in plane) for plane in table)
    n = len(rows)
    for a, plane in enumerate(rows):
        if len(plane) != n:
            raise StructureError(f"plane {a} has {len(plane)} rows, expected {n}")
        for b, level in enumerate(plane):
            if len(level) != n:
                raise StructureError(f"row ({a},{b}) has length {len(level)}, expected {n}")
            for c, v in enumerate(level):
                if not isinstance(v, int) or not 0 <= v < n:
                    raise StructureError(f"entry ({a},{b},{c}) = {v!r} is not an id in 0..{n - 1}")
    return rows


def _assoc_findings(rows, n, a_range):
    out = []
    for a in a_range:
        ta = rows[a]
        for b in range(n):
            tab = ta[b]
            for c in range(n):
                left = rows[tab[c]]
                for d in range(n):
                    ld = left[d]
                    td = rows[c][d]
                    for e in range(n):
                        if ld[e] != tab[td[e]]:
                            out.append(Finding("heap associativity", (a, b, c, d, e),
                                               ld[e], tab[td[e]]))
    return out


def validate_heap(table, abelian=False, *, gate=ASSOC_GATE, force=False, workers=None) -> Report:
    """Check a ternary table against the heap axioms.

    Reports every violated instance: the Mal'cev identities over all pairs,
    associativity over all quintuples, and (when ``abelian`` is set) the
    symmetry over all triples.  The O(n^5) associativity sweep is skipped
    above ``gate`` elements unless ``force`` is given, in which case the
    report comes back inconclusive rather than pass.
    """
    rows = _normalize_ternary(table)
    n = len(rows)
    findings = []
    for a in range(n):
        for b in range(n):
            if rows[a][b][b] != a:
                findings.append(Finding("Mal'cev [a,b,b] = a", (a, b), rows[a][b][b], a))
            if rows[b][b][a] != a:
                findings.append(Finding("Mal'cev [b,b,a] = a", (b, a), rows[b][b][a], a))
    assoc_skipped = False
    if n > gate and not force:
        assoc_skipped = True
    else:
        workers = workers or worker_count()
        if workers > 1 and n >= 8:
            chunks = [range(i, n, workers) for i in range(workers)]
            with ThreadPoolExecutor(max_workers=workers) as pool:
                parts = list(pool.map(lambda rng: _assoc_findings(rows, n, rng), chunks))
            assoc = [f for part in parts for f in part]
            assoc.sort(key=lambda f: f.at)
            findings.extend(assoc)
        else:
            findings.extend(_assoc_findings(rows, n, range(n)))
    if abelian:
        for a in range(n):
            for b in range(n):
                for c in range(a):
                    if rows[a][b][c] != rows[c][b][a]:
                        findings.append(Finding("Abelian symmetry [a,b,c] = [c,b,a]",
                                                (a, b, c), rows[a][b][c], rows[c][b][a]))
    if findings:
        status = FAIL
    elif assoc_skipped:
        status = INCONCLUSIVE
    else:
        status = PASS
    stats = {"size": n, "associativity_checked": not assoc_skipped}
    return Report("heap table", status, findings, stats)


class FiniteHeap:
    """Heap on ids ``0..n-1``.

    Either table-backed (``from_table``) or computed on demand from a backing
    function (``from_function``), e.g. a group via ``heap_from_group``.  Full
    O(n^3) tables are wasteful above a few dozen elements, so derived heaps
    stay function-backed until ``table()`` is asked for.
    """

    __slots__ = ("size", "names", "abelian", "_fn", "_table")

    is_finite = True

    def __init__(self, size, *, table=None, fn=None, names=None, abelian=False):
        self.size = size
        self._table = table
        self._fn = fn
        names = tuple(names) if names is not None else tuple(str(i) for i in range(size))
        if len(names) != size:
            raise StructureError("names do not match the carrier size")
        self.names = names
        self.abelian = abelian

    @classmethod
    def from_table(cls, table, names=None, *, force=False):
        """Build a heap from a full ternary table; validation must pass."""
        rows = _normalize_ternary(table)
        report = validate_heap(rows, force=force)
        if report.status == FAIL:
            raise StructureError(f"not a heap: {report.findings[0]}")
        n = len(rows)
        abelian = all(rows[a][b][c] == rows[c][b][a]
                      for a in range(n) for b in range(n) for c in range(a + 1))
        return cls(n, table=rows, names=names, abelian=abelian)

    @classmethod
    def from_function(cls, size, fn, names=None, abelian=False):
        """Wrap a trusted ternary function (group-backed, products, ...)."""
        return cls(size, fn=fn, names=names, abelian=abelian)

    @classmethod
    def empty(cls):
        return cls(0, table=(), abelian=True)

    @classmethod
    def singleton(cls, name="*"):
        return cls(1, table=(((0,),),), names=(name,), abelian=True)

    def ternary(self, a, b, c):
        if self._table is not None:
            return self._table[a][b][c]
        return self._fn(a, b, c)

    def table(self):
        if self._table is None:
            fn = self._fn
            n = self.size
            self._table = tuple(
                tuple(tuple(fn(a, b, c) for c in range(n)) for b in range(n))
                for a in range(n)
            )
        return self._table

    def elements(self):
        return range(self.size)

    def contains(self, x) -> bool:
        return isinstance(x, int) and 0 <= x < self.size

    def sample(self, window):
        return range(self.size)

    def __len__(self):
        return self.size

    def __eq__(self, other):
        if not isinstance(other, FiniteHeap):
            return NotImplemented
        return self.size == other.size and self.table() == other.table()

    def __repr__(self):
        kind = "table" if self._table is not None else "fn"
        return f"FiniteHeap(order={self.size}, {kind}-backed, abelian={self.abelian})"


class IntLineHeap:
    """The heap of the additive integers: [a,b,c] = a - b + c."""

    size = None
    abelian = True
    is_finite = False

    def ternary(self, a, b, c):
        return a - b + c

    def contains(self, x) -> bool:
        return isinstance(x, int)

    def sample(self, window):
        return range(-window, window + 1)

    def __eq__(self, other):
        return isinstance(other, IntLineHeap)

    def __hash__(self):
        return hash(IntLineHeap)

    def __repr__(self):
        return "IntLineHeap()"


INT_LINE = IntLineHeap()


def heap_from_group(g: FiniteGroup) -> FiniteHeap:
    """The heap of a group: [x,y,z] = x y^{-1} z."""
    return FiniteHeap.from_function(
        g.size,
        lambda a, b, c: g.op(g.op(a, g.inv(b)), c),
        names=g.names,
        abelian=g.abelian,
    )


def retract(h: FiniteHeap, e: int) -> FiniteGroup:
    """The group on h with product a . b = [a,e,b], neutral e, inverse [e,a,e]."""
    if not h.contains(e):
        raise StructureError(f"basepoint {e!r} is not in the carrier")
    table = [[h.ternary(a, e, b) for b in range(h.size)] for a in range(h.size)]
    return FiniteGroup(table, h.names, validate=False)


@dataclass(frozen=True)
class HeapMorphism:
    """A ternary-operation-preserving map between finite heaps."""

    source: FiniteHeap
    target: FiniteHeap
    mapping: tuple

    def __post_init__(self):
        if len(self.mapping) != self.source.size:
            raise StructureError("mapping does not cover the source carrier")
        for v in self.mapping:
            if not self.target.contains(v):
                raise StructureError(f"image {v!r} is not in the target carrier")
        m = self.mapping
        n = self.source.size
        for a in range(n):
            for b in range(n):
                for c in range(n):
                    if m[self.source.ternary(a, b, c)] != self.target.ternary(m[a], m[b], m[c]):
                        raise StructureError(
                            f"ternary operation not preserved at ({a},{b},{c})")

    def __call__(self, a):
        return self.mapping[a]

    def is_bijective(self) -> bool:
        return (self.source.size == self.target.size
                and len(set(self.mapping)) == self.source.size)

    def compose(self, other: "HeapMorphism") -> "HeapMorphism":
        """self after other."""
        return HeapMorphism(other.source, self.target,
                            tuple(self.mapping[v] for v in other.mapping))


def translation_iso(h: FiniteHeap, e: int, f: int) -> HeapMorphism:
    """The swap automorphism a -> [a,e,f]; inverse to translation_iso(h, f, e).

    It is also a group isomorphism from the retract at e to the retract at f.
    """
    for x in (e, f):
        if not h.contains(x):
            raise StructureError(f"basepoint {x!r} is not in the carrier")
    return HeapMorphism(h, h, tuple(h.ternary(a, e, f) for a in range(h.size)))


@dataclass(frozen=True)
class SubHeap:
    """A subset closed under the parent's ternary operation.

    The default constructor rejects the empty subset; use ``SubHeap.empty``
    when the empty sub-heap is genuinely wanted.
    """

    parent: FiniteHeap
    members: tuple

    def __post_init__(self):
        members = tuple(sorted(set(self.members)))
        object.__setattr__(self, "members", members)
        if not members:
            raise StructureError("empty sub-heap: use SubHeap.empty explicitly")
        for m in members:
            if not self.parent.contains(m):
                raise StructureError(f"member {m!r} is not in the parent carrier")
        mset = set(members)
        for a in members:
            for b in members:
                for c in members:
                    v = self.parent.ternary(a, b, c)
                    if v not in mset:
                        raise StructureError(
                            f"not closed: [{a},{b},{c}] = {v} falls outside the subset")

    @classmethod
    def empty(cls, parent: FiniteHeap) -> "SubHeap":
        obj = object.__new__(cls)
        object.__setattr__(obj, "parent", parent)
        object.__setattr__(obj, "members", ())
        return obj

    def as_heap(self) -> FiniteHeap:
        index = {m: i for i, m in enumerate(self.members)}
        table = tuple(
            tuple(tuple(index[self.parent.ternary(a, b, c)] for c in self.members)
                  for b in self.members)
            for a in self.members
        )
        names = tuple(self.parent.names[m] for m in self.members)
        return FiniteHeap(len(self.members), table=table, names=names,
                          abelian=self.parent.abelian)

    def __len__(self):
        return len(self.members)


def generated_subheap(h: FiniteHeap, xs) -> SubHeap:
    """The least sub-heap of h containing xs (xs must be non-empty)."""
    xs = sorted(set(xs))
    if not xs:
        raise StructureError("cannot generate a sub-heap from the empty set")
    for x in xs:
        if not h.contains(x):
            raise StructureError(f"generator {x!r} is not in the carrier")
    members = set(xs)
    grew = True
    while grew:
        grew = False
        snapshot = sorted(members)
        for a in snapshot:
            for b in snapshot:
                for c in snapshot:
                    v = h.ternary(a, b, c)
                    if v not in members:
                        members.add(v)
                        grew = True
    return SubHeap(h, tuple(sorted(members)))


@dataclass(frozen=True)
class NormalityReport:
    normal: bool
    base: object = None
    witnesses: dict = None
    counterexample: tuple = None


def is_normal(s: SubHeap) -> NormalityReport:
    """Decide normality of a sub-heap: every [a,e,s'] equals some [t,e,a].

    The existential-over-e and universal-over-e formulations agree, so the
    flag is decided at one base element; the witness table maps (a, s') to a
    witness t for that base.  Sub-heaps of Abelian heaps are always normal.
    """
    if not s.members:
        return NormalityReport(False, counterexample=())
    h = s.parent
    e = s.members[0]
    member_set = set(s.members)
    witnesses = {}
    for a in range(h.size):
        for sp in s.members:
            lhs = h.ternary(a, e, sp)
            found = None
            for t in s.members:
                if h.ternary(t, e, a) == lhs:
                    found = t
                    break
            if found is None:
                return NormalityReport(False, base=e, counterexample=(a, e, sp))
            witnesses[(a, sp)] = found
    return NormalityReport(True, base=e, witnesses=witnesses)


def quotient(h: FiniteHeap, s: SubHeap):
    """Quotient heap h/S for a normal sub-heap, with the projection map.

    Classes are the sets {[s,t,a] : s,t in S}, ordered by least member; the
    class of any member of S is S itself.
    """
    check = is_normal(s)
    if not check.normal:
        raise StructureError(f"sub-heap is not normal (counterexample {check.counterexample})")
    classes = {}
    for a in range(h.size):
        classes[a] = frozenset(h.ternary(x, y, a) for x in s.members for y in s.members)
    distinct = sorted(set(classes.values()), key=min)
    index = {c: i for i, c in enumerate(distinct)}
    proj = tuple(index[classes[a]] for a in range(h.size))
    reps = [min(c) for c in distinct]
    table = tuple(
        tuple(tuple(proj[h.ternary(a, b, c)] for c in reps) for b in reps)
        for a in reps
    )
    names = tuple("{" + ",".join(h.names[m] for m in sorted(c)) + "}" for c in distinct)
    qheap = FiniteHeap(len(distinct), table=table, names=names, abelian=h.abelian)
    return qheap, HeapMorphism(h, qheap, proj)


def product(h1: FiniteHeap, h2: FiniteHeap) -> FiniteHeap:
    """Direct product: pairs with the component-wise ternary operation."""
    n2 = h2.size
    names = tuple(f"({h1.names[a]},{h2.names[b]})"
                  for a in range(h1.size) for b in range(h2.size))

    def fn(x, y, z):
        return (h1.ternary(x // n2, y // n2, z // n2) * n2
                + h2.ternary(x % n2, y % n2, z % n2))

    return FiniteHeap.from_function(h1.size * n2, fn, names=names,
                                    abelian=h1.abelian and h2.abelian)


def find_isomorphism(a: FiniteHeap, b: FiniteHeap):
    """A heap isomorphism a -> b, or None if there is none.

    Two heaps are isomorphic exactly when their retracts are isomorphic as
    groups, so the search fixes a basepoint in a and tries each basepoint in
    b with a generator-image group isomorphism search.
    """
    if a.size != b.size:
        return None
    if a.size == 0:
        return HeapMorphism(a, b, ())
    ga = retract(a, 0)
    for f in range(b.size):
        mapping = group_isomorphism(ga, retract(b, f))
        if mapping is not None:
            return HeapMorphism(a, b, tuple(mapping))
    return None

"""Finite rings and modules over them, as exact id-indexed tables.

These are the classical (binary-operation) structures that trusses and
truss modules are compared against: ring retracts, the quotient-by-absorbers
module, and the hom-set enumeration behind the adjunction checks.
"""

from __future__ import annotations

import itertools

from .core import FiniteGroup, StructureError, group_isomorphism
from .reports import FAIL, PASS, Finding, Report


class FiniteRing:
    """Ring on ids 0..n-1: an Abelian group table plus a multiplication table."""

    __slots__ = ("add", "mul_table", "size", "zero", "one", "names")

    def __init__(self, add: FiniteGroup, mul_table, names=None, validate=True):
        if not add.abelian:
            raise StructureError("ring addition must be Abelian")
        self.add = add
        self.size = add.size
        self.mul_table = tuple(tuple(row) for row in mul_table)
        self.names = tuple(names) if names is not None else add.names
        if validate:
            report = validate_ring(self)
            if not report.ok:
                raise StructureError(f"not a ring: {report.findings[0]}")
        self.zero = add.neutral
        self.one = next(
            (e for e in range(self.size)
             if all(self.mul_table[e][x] == x == self.mul_table[x][e]
                    for x in range(self.size))),
            None,
        )

    def plus(self, a, b):
        return self.add.op(a, b)

    def neg(self, a):
        return self.add.inv(a)

    def mul(self, a, b):
        return self.mul_table[a][b]

    def scale(self, k: int, a):
        """The integer multiple k.a in the additive group."""
        out = self.add.neutral
        step = a if k >= 0 else self.add.inv(a)
        for _ in range(abs(k)):
            out = self.add.op(out, step)
        return out

    def elements(self):
        return range(self.size)

    def __len__(self):
        return self.size

    def __eq__(self, other):
        return (isinstance(other, FiniteRing)
                and self.add == other.add and self.mul_table == other.mul_table)

    def __repr__(self):
        one = self.names[self.one] if self.one is not None else "-"
        return f"FiniteRing(order={self.size}, one={one})"

    @classmethod
    def Zn(cls, n) -> "FiniteRing":
        add = FiniteGroup.cyclic(n)
        mul = [[(a * b) % n for b in range(n)] for a in range(n)]
        return cls(add, mul, validate=False)

    @classmethod
    def product(cls, r1: "FiniteRing", r2: "FiniteRing") -> "FiniteRing":
        add = FiniteGroup.product(r1.add, r2.add)
        n2 = r2.size
        size = r1.size * n2
        mul = [[0] * size for _ in range(size)]
        for a1, a2 in itertools.product(range(r1.size), range(r2.size)):
            for b1, b2 in itertools.product(range(r1.size), range(r2.size)):
                mul[a1 * n2 + a2][b1 * n2 + b2] = r1.mul(a1, b1) * n2 + r2.mul(a2, b2)
        return cls(add, mul, names=add.names, validate=False)


def validate_ring(r: FiniteRing) -> Report:
    """Associativity of multiplication and both distributive laws, exhaustively."""
    findings = []
    n = r.size
    for a, b, c in itertools.product(range(n), repeat=3):
        if r.mul(r.mul(a, b), c) != r.mul(a, r.mul(b, c)):
            findings.append(Finding("ring multiplication associativity", (a, b, c),
                                    r.mul(r.mul(a, b), c), r.mul(a, r.mul(b, c))))
        if r.mul(a, r.plus(b, c)) != r.plus(r.mul(a, b), r.mul(a, c)):
            findings.append(Finding("left distributivity", (a, b, c),
                                    r.mul(a, r.plus(b, c)), r.plus(r.mul(a, b), r.mul(a, c))))
        if r.mul(r.plus(a, b), c) != r.plus(r.mul(a, c), r.mul(b, c)):
            findings.append(Finding("right distributivity", (a, b, c),
                                    r.mul(r.plus(a, b), c), r.plus(r.mul(a, c), r.mul(b, c))))
    return Report("ring", FAIL if findings else PASS, findings, {"size": n})


class RModule:
    """A left module over a finite ring, with an explicit action table."""

    __slots__ = ("ring", "group", "action", "size", "names")

    def __init__(self, ring: FiniteRing, group: FiniteGroup, action, validate=True):
        if not group.abelian:
            raise StructureError("a module's additive group must be Abelian")
        self.ring = ring
        self.group = group
        self.size = group.size
        self.action = tuple(tuple(row) for row in action)
        self.names = group.names
        if validate:
            report = validate_rmodule(self)
            if not report.ok:
                raise StructureError(f"not an R-module: {report.findings[0]}")

    def act(self, r, m):
        return self.action[r][m]

    def plus(self, a, b):
        return self.group.op(a, b)

    def neg(self, a):
        return self.group.inv(a)

    @property
    def zero(self):
        return self.group.neutral

    def elements(self):
        return range(self.size)

    def __len__(self):
        return self.size

    def __eq__(self, other):
        return (isinstance(other, RModule) and self.ring == other.ring
                and self.group == other.group and self.action == other.action)

    def __repr__(self):
        return f"RModule(order={self.size} over ring of order {self.ring.size})"

    @classmethod
    def regular(cls, ring: FiniteRing) -> "RModule":
        return cls(ring, ring.add, ring.mul_table, validate=False)

    @classmethod
    def product(cls, m1: "RModule", m2: "RModule") -> "RModule":
        if m1.ring != m2.ring:
            raise StructureError("module product needs one common ring")
        group = FiniteGroup.product(m1.group, m2.group)
        n2 = m2.size
        action = [
            [m1.act(r, x // n2) * n2 + m2.act(r, x % n2) for x in range(group.size)]
            for r in range(m1.ring.size)
        ]
        return cls(m1.ring, group, action, validate=False)

    @classmethod
    def power(cls, ring: FiniteRing, n: int) -> "RModule":
        out = cls.regular(ring)
        for _ in range(n - 1):
            out = cls.product(out, cls.regular(ring))
        return out


def validate_rmodule(m: RModule) -> Report:
    """Unital module laws over the ring, checked exhaustively."""
    findings = []
    R, n = m.ring, m.size
    for r, s in itertools.product(range(R.size), repeat=2):
        for x in range(n):
            if m.act(r, m.act(s, x)) != m.act(R.mul(r, s), x):
                findings.append(Finding("module associativity r(sx) = (rs)x", (r, s, x),
                                        m.act(r, m.act(s, x)), m.act(R.mul(r, s), x)))
            if m.act(R.plus(r, s), x) != m.plus(m.act(r, x), m.act(s, x)):
                findings.append(Finding("module law (r+s)x = rx+sx", (r, s, x),
                                        m.act(R.plus(r, s), x), m.plus(m.act(r, x), m.act(s, x))))
    for r in range(R.size):
        for x, y in itertools.product(range(n), repeat=2):
            if m.act(r, m.plus(x, y)) != m.plus(m.act(r, x), m.act(r, y)):
                findings.append(Finding("module law r(x+y) = rx+ry", (r, x, y),
                                        m.act(r, m.plus(x, y)), m.plus(m.act(r, x), m.act(r, y))))
    if R.one is not None:
        for x in range(n):
            if m.act(R.one, x) != x:
                findings.append(Finding("unitality 1x = x", (x,), m.act(R.one, x), x))
    return Report("R-module", FAIL if findings else PASS, findings,
                  {"size": n, "ring": R.size})


def rmodule_isomorphism(m1: RModule, m2: RModule):
    """An R-module isomorphism as an id mapping, or None.

    Brute-force over additive-group bijections with order matching; fine at
    the handful-of-elements scale these comparisons run at.
    """
    if m1.ring != m2.ring or m1.size != m2.size:
        return None
    n = m1.size
    if n == 0:
        return []
    orders1 = sorted(m1.group.element_order(x) for x in range(n))
    orders2 = sorted(m2.group.element_order(x) for x in range(n))
    if orders1 != orders2:
        return None
    ids = list(range(n))
    for perm in itertools.permutations(ids):
        if perm[m1.zero] != m2.zero:
            continue
        if any(perm[m1.plus(a, b)] != m2.plus(perm[a], perm[b])
               for a in ids for b in ids):
            continue
        if any(perm[m1.act(r, x)] != m2.act(r, perm[x])
               for r in range(m1.ring.size) for x in ids):
            continue
        return list(perm)
    return None


def rmodule_homs(m1: RModule, m2: RModule):
    """All R-module homomorphisms m1 -> m2 as mapping tuples (brute force)."""
    if m1.ring != m2.ring:
        raise StructureError("hom-sets need one common ring")
    n, k = m1.size, m2.size
    out = []
    for mapping in itertools.product(range(k), repeat=n):
        if mapping[m1.zero] != m2.zero:
            continue
        if any(mapping[m1.plus(a, b)] != m2.plus(mapping[a], mapping[b])
               for a in range(n) for b in range(n)):
            continue
        if any(mapping[m1.act(r, x)] != m2.act(r, mapping[x])
               for r in range(m1.ring.size) for x in range(n)):
            continue
        out.append(mapping)
    return out

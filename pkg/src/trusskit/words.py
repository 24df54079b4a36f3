"""Normal forms for the free heap and the free Abelian heap.

Words are plain tuples of symbol strings.  A reduced word is an odd-length
tuple with no two equal consecutive letters; the free heap operation grafts
u, the reverse of v, and w, then prunes.  Free Abelian heap elements are
kept as signed coefficient maps (odd positions count +1, even positions -1)
wrapped in ``SymmetricWord``; a word-level reducer survives only as a test
oracle.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import StructureError


class Alphabet:
    """A closed, ordered set of generator names."""

    __slots__ = ("symbols", "_index")

    def __init__(self, symbols):
        symbols = tuple(symbols)
        if len(set(symbols)) != len(symbols):
            raise StructureError("alphabet symbols must be distinct")
        self.symbols = symbols
        self._index = {s: i for i, s in enumerate(symbols)}

    def __contains__(self, symbol):
        return symbol in self._index

    def __iter__(self):
        return iter(self.symbols)

    def __len__(self):
        return len(self.symbols)

    def index(self, symbol):
        try:
            return self._index[symbol]
        except KeyError:
            raise StructureError(f"unknown symbol {symbol!r}") from None

    def __repr__(self):
        return f"Alphabet({', '.join(self.symbols)})"


def check_word(letters, alphabet: Alphabet | None = None) -> tuple:
    letters = tuple(letters)
    if len(letters) % 2 == 0:
        raise StructureError(f"word length must be odd, got {len(letters)}")
    if alphabet is not None:
        for s in letters:
            if s not in alphabet:
                raise StructureError(f"unknown symbol {s!r}")
    return letters


def is_reduced(letters) -> bool:
    letters = tuple(letters)
    return len(letters) % 2 == 1 and all(
        letters[i] != letters[i + 1] for i in range(len(letters) - 1)
    )


def prune(letters, alphabet: Alphabet | None = None) -> tuple:
    """Delete adjacent equal pairs until none remain.

    The deletion system is confluent, so the single left-to-right stack pass
    lands on the unique normal form; parity is preserved, hence the result
    is again odd and non-empty.
    """
    letters = check_word(letters, alphabet)
    stack = []
    for s in letters:
        if stack and stack[-1] == s:
            stack.pop()
        else:
            stack.append(s)
    return tuple(stack)


def reverse(letters) -> tuple:
    return tuple(reversed(letters))


def free_heap_op(u, v, w) -> tuple:
    """[u, v, w] in the free heap: prune the grafting of u, reverse(v), w."""
    if len(u) % 2 == 0 or len(v) % 2 == 0 or len(w) % 2 == 0:
        raise StructureError("free heap operation needs three odd-length words")
    stack = []
    for seq in (u, reversed(v), w):
        for s in seq:
            if stack and stack[-1] == s:
                stack.pop()
            else:
                stack.append(s)
    return tuple(stack)


# ---------------------------------------------------------------------------
# free group bridge


@dataclass(frozen=True)
class FreeGroupWord:
    """A freely reduced word: factors (symbol, +1|-1), no adjacent cancellation."""

    factors: tuple

    def __post_init__(self):
        for s, e in self.factors:
            if e not in (1, -1):
                raise StructureError(f"exponent must be +-1, got {e!r}")
        for (s1, e1), (s2, e2) in zip(self.factors, self.factors[1:]):
            if s1 == s2 and e1 == -e2:
                raise StructureError("word is not freely reduced")

    def __str__(self):
        if not self.factors:
            return "e"
        return " ".join(s if e == 1 else f"{s}^-1" for s, e in self.factors)


def _reduce_factors(factors) -> tuple:
    stack = []
    for s, e in factors:
        if stack and stack[-1][0] == s and stack[-1][1] == -e:
            stack.pop()
        else:
            stack.append((s, e))
    return tuple(stack)


def free_group_mul(x: FreeGroupWord, y: FreeGroupWord) -> FreeGroupWord:
    return FreeGroupWord(_reduce_factors(x.factors + y.factors))


def free_group_inv(x: FreeGroupWord) -> FreeGroupWord:
    return FreeGroupWord(tuple((s, -e) for s, e in reversed(x.factors)))


def free_group_heap_op(g, h, k) -> FreeGroupWord:
    """[g,h,k] = g h^{-1} k in the heap of the free group."""
    return free_group_mul(free_group_mul(g, free_group_inv(h)), k)


def to_free_group(w, basepoint) -> FreeGroupWord:
    """Evaluate a heap word in the free group on the alphabet minus basepoint.

    Letters at odd positions map to generators, letters at even positions to
    inverse generators, and the basepoint maps to the neutral word.
    """
    w = check_word(w)
    factors = []
    sign = 1
    for s in w:
        if s != basepoint:
            factors.append((s, sign))
        sign = -sign
    return FreeGroupWord(_reduce_factors(factors))


def from_free_group(g: FreeGroupWord, basepoint) -> tuple:
    """The reduced heap word mapping onto g; inverse to ``to_free_group``.

    Walks the factors with an alternating expected sign and inserts the
    basepoint wherever the sign fails to alternate, then pads to odd length.
    """
    letters = []
    expected = 1
    for s, e in g.factors:
        if s == basepoint:
            raise StructureError("free group word may not contain the basepoint symbol")
        if e != expected:
            letters.append(basepoint)
            expected = -expected
        letters.append(s)
        expected = -expected
    if len(letters) % 2 == 0:
        letters.append(basepoint)
    return tuple(letters)


# ---------------------------------------------------------------------------
# free Abelian heap


@dataclass(frozen=True)
class SymmetricWord:
    """An element of the free Abelian heap as a signed coefficient map.

    Coefficients sum to 1 (odd positions contribute +1, even positions -1)
    and symbols with coefficient zero are absent.
    """

    items: tuple

    def __post_init__(self):
        coeffs = {}
        for s, c in self.items:
            coeffs[s] = coeffs.get(s, 0) + c
        cleaned = tuple(sorted((s, c) for s, c in coeffs.items() if c != 0))
        object.__setattr__(self, "items", cleaned)
        if sum(c for _, c in cleaned) != 1:
            raise StructureError("symmetric word coefficients must sum to 1")

    @classmethod
    def from_coeffs(cls, coeffs) -> "SymmetricWord":
        return cls(tuple(coeffs.items()) if isinstance(coeffs, dict) else tuple(coeffs))

    @property
    def coeffs(self) -> dict:
        return dict(self.items)

    def support(self) -> tuple:
        return tuple(s for s, _ in self.items)

    def representative(self) -> tuple:
        """The shortest word in the class: sorted positives interleaved with
        sorted negatives; always reduced since no symbol has both signs."""
        pos, neg = [], []
        for s, c in self.items:
            (pos if c > 0 else neg).extend([s] * abs(c))
        out = []
        for p, m in zip(pos, neg + [None]):
            out.append(p)
            if m is not None:
                out.append(m)
        return tuple(out)

    def __str__(self):
        if not self.items:
            return "<>"
        return "<" + " ".join(self.representative()) + ">"


def abelian_normalize(letters, alphabet: Alphabet | None = None) -> SymmetricWord:
    """Signed-count normal form of an odd word: +1 per odd position, -1 per
    even position."""
    letters = check_word(letters, alphabet)
    coeffs = {}
    sign = 1
    for s in letters:
        coeffs[s] = coeffs.get(s, 0) + sign
        sign = -sign
    return SymmetricWord.from_coeffs(coeffs)


def abelian_heap_op(u: SymmetricWord, v: SymmetricWord, w: SymmetricWord) -> SymmetricWord:
    """[u, v, w] in the free Abelian heap: coefficient map u - v + w."""
    coeffs = dict(u.items)
    for s, c in v.items:
        coeffs[s] = coeffs.get(s, 0) - c
    for s, c in w.items:
        coeffs[s] = coeffs.get(s, 0) + c
    return SymmetricWord.from_coeffs(coeffs)


# ---------------------------------------------------------------------------
# evaluation into a concrete heap


def eval_word_in_heap(word, assignment, heap):
    """Left fold of the ternary operation over a word under an assignment.

    ``word`` is a letter tuple or a SymmetricWord; the latter requires an
    Abelian target (the value is then independent of the representative).
    Unassigned symbols are an error rather than silently extended.
    """
    if isinstance(word, SymmetricWord):
        if not heap.abelian:
            raise StructureError("symmetric words evaluate only in Abelian heaps")
        letters = word.representative()
    else:
        letters = check_word(word)
    values = []
    for s in letters:
        if s not in assignment:
            raise StructureError(f"symbol {s!r} has no assigned value")
        values.append(assignment[s])
    acc = values[0]
    for i in range(1, len(values), 2):
        acc = heap.ternary(acc, values[i], values[i + 1])
    return acc


# ---------------------------------------------------------------------------
# word expressions ("a b a", "[u, v, w]", arbitrarily nested)

_OPEN = {"[": "[", "⟨": "["}
_CLOSE = {"]": "]", "⟩": "]"}


def _tokenize(text):
    tokens = []
    buf = []
    for ch in text:
        if ch in _OPEN or ch in _CLOSE or ch == ",":
            if buf:
                tokens.append("".join(buf))
                buf = []
            tokens.append("[" if ch in _OPEN else ("]" if ch in _CLOSE else ","))
        elif ch.isspace():
            if buf:
                tokens.append("".join(buf))
                buf = []
        else:
            buf.append(ch)
    if buf:
        tokens.append("".join(buf))
    return tokens


def parse_word_expr(text):
    """Parse a word expression into nested ('word', letters) / ('op', u, v, w).

    Accepts ASCII and unicode heap brackets on input; ASCII is canonical on
    output everywhere in this package.
    """
    tokens = _tokenize(text)
    pos = 0

    def parse():
        nonlocal pos
        if pos < len(tokens) and tokens[pos] == "[":
            pos += 1
            parts = [parse()]
            for _ in range(2):
                if pos >= len(tokens) or tokens[pos] != ",":
                    raise StructureError("ternary literal needs three comma-separated parts")
                pos += 1
                parts.append(parse())
            if pos >= len(tokens) or tokens[pos] != "]":
                raise StructureError("unclosed ternary literal")
            pos += 1
            return ("op", *parts)
        letters = []
        while pos < len(tokens) and tokens[pos] not in ("[", "]", ","):
            letters.append(tokens[pos])
            pos += 1
        if not letters:
            raise StructureError("empty word in expression")
        return ("word", tuple(letters))

    node = parse()
    if pos != len(tokens):
        raise StructureError(f"trailing tokens in word expression: {tokens[pos:]}")
    return node


def eval_expr_free(node) -> tuple:
    if node[0] == "word":
        return prune(node[1])
    _, u, v, w = node
    return free_heap_op(eval_expr_free(u), eval_expr_free(v), eval_expr_free(w))


def eval_expr_abelian(node) -> SymmetricWord:
    if node[0] == "word":
        return abelian_normalize(node[1])
    _, u, v, w = node
    return abelian_heap_op(eval_expr_abelian(u), eval_expr_abelian(v), eval_expr_abelian(w))

"""Binary words, zigzag diagrams, and the graded graph they span.

A zigzag (ribbon) with n boxes is encoded by a binary word of n - 1
symbols over {+, -}: reading left to right, '+' appends a box to the
right of the last one and '-' appends a box below it.  The empty word
encodes the single box.  Words of length n sit on level n + 1 of the
graph; level 0 holds the single extra vertex ROOT.  An edge goes up
from a word to every word obtained by inserting one symbol, so going
down means deleting one symbol (subword order).

Words are stored packed: ``bits`` holds one bit per symbol, 0 for '+'
and 1 for '-', least significant bit first.  This keeps 2^n level
enumerations and the path-count memo cheap to hash and compare.
Everything here is immutable and safe to use from several threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable, Iterator, Optional, Union

PLUS = "+"
MINUS = "-"

#: enumerate_level refuses word lengths above this
LEVEL_CAP = 20


@dataclass(frozen=True, slots=True)
class BinaryWord:
    """Immutable word over {+, -}; bit i of ``bits`` is symbol i (1 = '-')."""

    n: int
    bits: int

    def __post_init__(self) -> None:
        if self.n < 0 or self.bits < 0 or self.bits >> self.n:
            raise ValueError(f"invalid packed word ({self.n}, {self.bits})")

    @staticmethod
    def from_str(text: str) -> "BinaryWord":
        bits = 0
        for i, ch in enumerate(text):
            if ch == MINUS:
                bits |= 1 << i
            elif ch != PLUS:
                raise ValueError(f"bad word symbol {ch!r} in {text!r}")
        return BinaryWord(len(text), bits)

    @staticmethod
    def from_symbols(symbols: Iterable[str]) -> "BinaryWord":
        return BinaryWord.from_str("".join(symbols))

    def __len__(self) -> int:
        return self.n

    def __str__(self) -> str:
        return "".join(MINUS if (self.bits >> i) & 1 else PLUS for i in range(self.n))

    def __repr__(self) -> str:
        return f"BinaryWord({str(self)!r})"

    def __iter__(self) -> Iterator[str]:
        for i in range(self.n):
            yield MINUS if (self.bits >> i) & 1 else PLUS

    def symbol(self, i: int) -> str:
        if not 0 <= i < self.n:
            raise IndexError(i)
        return MINUS if (self.bits >> i) & 1 else PLUS

    def concat(self, other: "BinaryWord") -> "BinaryWord":
        return BinaryWord(self.n + other.n, self.bits | (other.bits << self.n))

    def sub(self, start: int, stop: int) -> "BinaryWord":
        if not 0 <= start <= stop <= self.n:
            raise IndexError((start, stop))
        return BinaryWord(stop - start, (self.bits >> start) & ((1 << (stop - start)) - 1))

    def insert(self, pos: int, symbol: str) -> "BinaryWord":
        low = self.bits & ((1 << pos) - 1)
        high = self.bits >> pos
        bit = 1 if symbol == MINUS else 0
        return BinaryWord(self.n + 1, low | (bit << pos) | (high << (pos + 1)))

    def delete(self, pos: int) -> "BinaryWord":
        low = self.bits & ((1 << pos) - 1)
        high = self.bits >> (pos + 1)
        return BinaryWord(self.n - 1, low | (high << pos))

    def blocks(self) -> tuple[tuple[str, int], ...]:
        """Maximal runs of equal symbols, as (sign, length) pairs."""
        out: list[tuple[str, int]] = []
        for s in self:
            if out and out[-1][0] == s:
                out[-1] = (s, out[-1][1] + 1)
            else:
                out.append((s, 1))
        return tuple(out)


EMPTY = BinaryWord(0, 0)


class _Root:
    """The level-0 vertex below the one-box zigzag."""

    _instance: Optional["_Root"] = None

    def __new__(cls) -> "_Root":
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "ROOT"

    def __str__(self) -> str:
        return "@"


ROOT = _Root()

Vertex = Union[BinaryWord, _Root]


def parse_vertex(text: str) -> Vertex:
    """Inverse of str(): '@' is ROOT, everything else a word."""
    return ROOT if text == "@" else BinaryWord.from_str(text)


def level(v: Vertex) -> int:
    return 0 if v is ROOT else len(v) + 1


# ---------------------------------------------------------------------------
# Compositions
# ---------------------------------------------------------------------------

def word_of_composition(parts: Iterable[int]) -> BinaryWord:
    """Row lengths to word: lambda_i - 1 pluses per row, one minus between rows."""
    parts = tuple(parts)
    if not parts or any(p < 1 for p in parts):
        raise ValueError(f"composition parts must be >= 1, got {parts}")
    chunks = []
    for i, p in enumerate(parts):
        if i:
            chunks.append(MINUS)
        chunks.append(PLUS * (p - 1))
    return BinaryWord.from_str("".join(chunks))


def composition_of_word(w: BinaryWord) -> tuple[int, ...]:
    parts = [1]
    for s in w:
        if s == PLUS:
            parts[-1] += 1
        else:
            parts.append(1)
    return tuple(parts)


def parse_composition(text: str) -> tuple[int, ...]:
    parts = tuple(int(p) for p in text.split(","))
    word_of_composition(parts)  # validation only
    return parts


# ---------------------------------------------------------------------------
# Covers and subword order
# ---------------------------------------------------------------------------

def upper_covers(v: Vertex) -> set[BinaryWord]:
    """All distinct one-symbol insertions; ROOT is covered by the one-box word."""
    if v is ROOT:
        return {EMPTY}
    return {v.insert(pos, s) for pos in range(len(v) + 1) for s in (PLUS, MINUS)}


def lower_covers(v: Vertex) -> set[BinaryWord]:
    """All distinct one-symbol deletions; the empty word (and ROOT) yield none."""
    if v is ROOT or len(v) == 0:
        return set()
    return {v.delete(pos) for pos in range(len(v))}


def is_subword(a: BinaryWord, b: BinaryWord) -> bool:
    """True iff a is a subsequence of b."""
    if a.n > b.n:
        return False
    i = 0
    for s in b:
        if i < a.n and a.symbol(i) == s:
            i += 1
    return i == a.n


def vertex_below(a: Vertex, b: Vertex) -> bool:
    """a <= b in the graph order (subword order with ROOT at the bottom)."""
    if a is ROOT:
        return True
    if b is ROOT:
        return False
    return is_subword(a, b)


# ---------------------------------------------------------------------------
# Path counting
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _dim_words(a: BinaryWord, b: BinaryWord) -> int:
    if b.n < a.n:
        return 0
    if b.n == a.n:
        return 1 if a == b else 0
    if not is_subword(a, b):
        return 0
    return sum(_dim_words(a, c) for c in lower_covers(b) if is_subword(a, c))


def dim(a: Vertex, b: Vertex) -> int:
    """Number of saturated chains a = v_0 < v_1 < ... < v_k = b; 0 if b is not above a.

    Counts are exact Python integers; they grow factorially with the
    level gap, so nothing here may be truncated to machine width.
    """
    if a is ROOT:
        return 1 if b is ROOT else _dim_words(EMPTY, b)
    if b is ROOT:
        return 0
    return _dim_words(a, b)


# ---------------------------------------------------------------------------
# Formal combinations and the cone certificate
# ---------------------------------------------------------------------------

class FormalCombination:
    """Non-negative rational combination of vertices sharing one level."""

    __slots__ = ("level", "coeffs")

    def __init__(self, lvl: int, coeffs: dict[Vertex, Fraction]):
        clean: dict[Vertex, Fraction] = {}
        for v, c in coeffs.items():
            c = Fraction(c)
            if c < 0:
                raise ValueError(f"negative coefficient {c} at {v}")
            if level(v) != lvl:
                raise ValueError(f"vertex {v} is not on level {lvl}")
            if c:
                clean[v] = c
        self.level = lvl
        self.coeffs = clean

    @classmethod
    def from_terms(cls, terms: dict[Vertex, Fraction]) -> "FormalCombination":
        if not terms:
            raise ValueError("empty combination has no level")
        lvls = {level(v) for v in terms}
        if len(lvls) != 1:
            raise ValueError(f"mixed levels {sorted(lvls)}")
        return cls(lvls.pop(), terms)

    def coefficient(self, v: Vertex) -> Fraction:
        return self.coeffs.get(v, Fraction(0))

    def scaled(self, factor: Fraction) -> "FormalCombination":
        return FormalCombination(self.level, {v: c * factor for v, c in self.coeffs.items()})

    def total_mass(self) -> Fraction:
        return sum(self.coeffs.values(), Fraction(0))

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, FormalCombination)
                and self.level == other.level and self.coeffs == other.coeffs)

    def __repr__(self) -> str:
        inner = " + ".join(f"{c}*{v}" for v, c in sorted(self.coeffs.items(), key=lambda t: str(t[0])))
        return f"<level {self.level}: {inner or '0'}>"


Filter = Optional[Callable[[BinaryWord], bool]]


def expand(v: Vertex, n: int, within: Filter = None) -> FormalCombination:
    """Push v up to level n through the defining relations.

    The coefficient at each level-n vertex equals the number of paths
    from v inside the (optionally restricted) graph.  ``within`` keeps
    only covers satisfying the predicate, which computes expansions
    inside a coideal such as the words fitting a template.
    """
    if n < level(v):
        raise ValueError(f"cannot expand level {level(v)} vertex down to level {n}")
    layer: dict[Vertex, Fraction] = {v: Fraction(1)}
    for _ in range(n - level(v)):
        nxt: dict[Vertex, Fraction] = {}
        for u, c in layer.items():
            for w in upper_covers(u):
                if within is None or within(w):
                    nxt[w] = nxt.get(w, Fraction(0)) + c
        layer = nxt
    return FormalCombination(n, layer)


def dominates_at(a: Vertex, comb: FormalCombination, at_level: Optional[int] = None,
                 within: Filter = None) -> bool:
    """Single-level cone certificate for a >=_K comb.

    Compares the expansions of both sides at one level, coefficient by
    coefficient.  Success is sufficient for cone dominance; failure at
    one level decides nothing, so callers wanting the order itself
    should use :func:`dominates_search`.
    """
    lvl = comb.level if at_level is None else at_level
    if lvl < comb.level or lvl < level(a):
        raise ValueError("comparison level below one of the sides")
    lhs = expand(a, lvl, within).coeffs
    rhs: dict[Vertex, Fraction] = {}
    for v, c in comb.coeffs.items():
        for u, d in expand(v, lvl, within).coeffs.items():
            rhs[u] = rhs.get(u, Fraction(0)) + c * d
    return all(lhs.get(u, Fraction(0)) >= c for u, c in rhs.items())


def dominates_search(a: Vertex, comb: FormalCombination, max_level: int,
                     within: Filter = None) -> Optional[int]:
    """First level up to max_level at which the certificate holds, else None.

    The certificate is monotone: once the level-L difference is a
    non-negative combination it stays one at every higher level.
    """
    start = max(comb.level, level(a))
    for lvl in range(start, max_level + 1):
        if dominates_at(a, comb, lvl, within):
            return lvl
    return None


# ---------------------------------------------------------------------------
# Level enumeration
# ---------------------------------------------------------------------------

def enumerate_level(nsymbols: int, cap: int = LEVEL_CAP) -> list[BinaryWord]:
    """All 2^n words of the given length in lexicographic order ('+' < '-')."""
    if nsymbols < 0:
        raise ValueError("word length must be >= 0")
    if nsymbols > cap:
        raise ValueError(f"word length {nsymbols} above cap {cap}")
    out = []
    for rank in range(1 << nsymbols):
        bits = 0
        for i in range(nsymbols):
            if (rank >> (nsymbols - 1 - i)) & 1:
                bits |= 1 << i
        out.append(BinaryWord(nsymbols, bits))
    return out

"""Evaluating zigzags against tuples of oriented intervals.

A tuple u of m adjacent oriented intervals evaluates a zigzag to the
sum, over all splittings of the zigzag into m consecutive pieces, of
the product of interval lengths raised to the piece sizes.  Piece i
must be a row if interval i points '+' and a column if it points '-';
pieces may be empty.  On the word this reads: symbols interior to a
piece carry the piece's sign, and between two consecutive non-empty
pieces exactly one symbol is consumed as the joining corner and may
have either sign.

A paintbox is such a tuple with total length one.  Two adjacent
intervals of equal orientation are allowed and mean open components
touching at a point; the touching point is what inserts a separating
one-symbol cluster into the associated template.  Evaluation against a
paintbox is a harmonic function whose support is exactly the coideal
of that template.

Two independent evaluators are kept side by side on purpose: the word
DP (:func:`eval_F`) and the iterated two-piece splitting on
compositions (:func:`eval_F_coproduct`).  Their agreement is checked
by the test suite and pins down the corner-symbol convention above.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Union

from .templates import Cluster, Template, maxblock_member
from .words import MINUS, PLUS, ROOT, BinaryWord, Vertex, composition_of_word

Scalar = Any  # Fraction, int, or the eps polynomials of the semifinite module


@dataclass(frozen=True)
class IntervalTuple:
    """Ordered oriented intervals; lengths are positive but otherwise free."""

    intervals: tuple[tuple[str, Scalar], ...]

    def __post_init__(self) -> None:
        if not self.intervals:
            raise ValueError("need at least one interval")
        for sign, length in self.intervals:
            if sign not in (PLUS, MINUS):
                raise ValueError(f"bad orientation {sign!r}")
            if isinstance(length, (int, Fraction)) and length <= 0:
                raise ValueError(f"interval length must be positive, got {length}")

    @staticmethod
    def parse(text: str) -> "IntervalTuple":
        """Comma-separated signed rationals, e.g. '+1/3,-1/6,+1/2'."""
        intervals = []
        for token in text.split(","):
            token = token.strip()
            if not token or token[0] not in (PLUS, MINUS):
                raise ValueError(f"bad interval token {token!r}")
            intervals.append((token[0], Fraction(token[1:])))
        return IntervalTuple(tuple(intervals))

    def __len__(self) -> int:
        return len(self.intervals)

    def __str__(self) -> str:
        return ",".join(f"{s}{l}" for s, l in self.intervals)

    @property
    def signs(self) -> tuple[str, ...]:
        return tuple(s for s, _ in self.intervals)

    @property
    def lengths(self) -> tuple[Scalar, ...]:
        return tuple(l for _, l in self.intervals)


@dataclass(frozen=True)
class Paintbox(IntervalTuple):
    """IntervalTuple with exact rational lengths of total one."""

    def __post_init__(self) -> None:
        super().__post_init__()
        for _, length in self.intervals:
            if not isinstance(length, (int, Fraction)):
                raise ValueError("paintbox lengths must be exact rationals")
        total = sum((Fraction(l) for _, l in self.intervals), Fraction(0))
        if total != 1:
            raise ValueError(f"paintbox lengths must sum to 1, got {total}")

    @staticmethod
    def parse(text: str) -> "Paintbox":
        return Paintbox(IntervalTuple.parse(text).intervals)


# ---------------------------------------------------------------------------
# The two evaluators
# ---------------------------------------------------------------------------

def eval_F(v: Union[Vertex, BinaryWord], u: IntervalTuple) -> Scalar:
    """Sum over splittings via a left-to-right DP on the word.

    State is the number of boxes already placed; each interval either
    stays put or takes a run of boxes whose interior symbols match its
    sign, consuming the symbol just before the run as the corner when
    the run is not the first.  The empty diagram evaluates to 1.
    """
    if v is ROOT:
        return Fraction(1)
    word: BinaryWord = v
    n = len(word) + 1
    layer: dict[int, Scalar] = {0: 1}
    for sign, length in u.intervals:
        nxt = dict(layer)
        for b, val in layer.items():
            power = val
            k = 1
            while b + k <= n and (k == 1 or word.symbol(b + k - 2) == sign):
                power = power * length
                key = b + k
                nxt[key] = nxt.get(key, 0) + power
                k += 1
        layer = nxt
    return layer.get(n, Fraction(0))


def _cut(comp: tuple[int, ...], c: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Split a composition after its first c boxes."""
    if c == 0:
        return (), comp
    total = 0
    for r, part in enumerate(comp):
        if total + part > c:
            taken = c - total
            return comp[:r] + (taken,), (part - taken,) + comp[r + 1:]
        total += part
        if total == c:
            return comp[:r + 1], comp[r + 1:]
    raise ValueError(f"cut {c} outside composition {comp}")


def _psi(comp: tuple[int, ...], sign: str) -> bool:
    """Row/column membership of a possibly empty composition."""
    if not comp:
        return True
    if sign == PLUS:
        return len(comp) == 1
    return all(p == 1 for p in comp)


def eval_F_coproduct(v: Union[Vertex, BinaryWord], u: IntervalTuple) -> Scalar:
    """Same value through iterated two-piece splittings of the composition.

    Splits the diagram with the coproduct cut (inside a row or at a row
    boundary), scales each tensor factor by its interval length, and
    applies the row/column evaluations.  Shares no code with the word
    DP; serves as its oracle.
    """
    if v is ROOT:
        return Fraction(1)
    comp = composition_of_word(v)
    m = len(u)
    signs, lengths = u.signs, u.lengths
    memo: dict[tuple[tuple[int, ...], int], Scalar] = {}

    def go(rest: tuple[int, ...], i: int) -> Scalar:
        boxes = sum(rest)
        if i == m - 1:
            if not _psi(rest, signs[i]):
                return 0
            return lengths[i] ** boxes if boxes else 1
        key = (rest, i)
        if key in memo:
            return memo[key]
        total: Scalar = 0
        for c in range(boxes + 1):
            left, right = _cut(rest, c)
            if not _psi(left, signs[i]):
                continue
            tail = go(right, i + 1)
            if c:
                total = total + lengths[i] ** c * tail
            else:
                total = total + tail
        memo[key] = total
        return total

    return go(comp, 0)


# ---------------------------------------------------------------------------
# Closed form on max-block words
# ---------------------------------------------------------------------------

def eval_F_maxblock(w: BinaryWord, u: IntervalTuple) -> Scalar:
    """Product formula for words with the most blocks the template allows.

    Blocks line up with the intervals (separator blocks in between);
    interval i contributes its length to the power of its block size
    adjusted by 1 - (#neighbours) + (#equally oriented neighbours),
    and each orientation change between consecutive intervals
    contributes a factor (length_i + length_{i+1}), which is the sum
    over the two ways the corner box between them can fall.
    """
    t_u = template_of_intervals(u)
    if not maxblock_member(t_u, w):
        raise ValueError(f"{w} is not a maximal-block word for {u}")
    blocks = w.blocks()
    block_sizes = [length for (_, length), c in zip(blocks, t_u.clusters) if c.is_infinite]
    m = len(u)
    signs, lengths = u.signs, u.lengths
    value: Scalar = 1
    for i in range(m):
        neighbours = (1 if i > 0 else 0) + (1 if i < m - 1 else 0)
        same = ((1 if i > 0 and signs[i - 1] == signs[i] else 0)
                + (1 if i < m - 1 and signs[i + 1] == signs[i] else 0))
        exponent = block_sizes[i] + same - neighbours + 1
        value = value * lengths[i] ** exponent
    for i in range(m - 1):
        if signs[i] != signs[i + 1]:
            value = value * (lengths[i] + lengths[i + 1])
    return value


# ---------------------------------------------------------------------------
# Paintboxes, their templates, and the harmonic function
# ---------------------------------------------------------------------------

def template_of_intervals(u: IntervalTuple) -> Template:
    """Each interval becomes an infinite cluster of its orientation;
    a one-symbol cluster of the opposite sign separates touching
    same-orientation neighbours."""
    clusters: list[Cluster] = []
    for sign in u.signs:
        if clusters and clusters[-1].sign == sign:
            clusters.append(Cluster(MINUS if sign == PLUS else PLUS, 1))
        clusters.append(Cluster(sign, None))
    return Template(tuple(clusters))


def template_of_paintbox(w: Paintbox) -> Template:
    return template_of_intervals(w)


def phi_w(v: Vertex, w: Paintbox) -> Fraction:
    """Harmonic function of a paintbox; normalized to 1 at the root."""
    return Fraction(eval_F(v, w))

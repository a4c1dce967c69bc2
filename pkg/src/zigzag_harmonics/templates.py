"""Templates: alternating signed clusters with multiplicities.

A template is an ordered list of clusters, each a sign with a positive
multiplicity that may be infinite; signs alternate and at least one
cluster is infinite.  A word fits a template when it splits into
consecutive, possibly empty chunks, chunk i carrying cluster i's sign
and at most its multiplicity.  The set of fitting words is downward
closed and saturated: it is the coideal the template stands for.

Finite clusters split into two kinds.  A separating cluster is a
one-symbol cluster strictly inside the template whose two neighbours
are both infinite; every other finite cluster belongs to the flange.
Maximal runs of flange clusters give the flange words a_0 .. a_k and
cut the template into sections t_1 .. t_k, each of which is a template
whose only finite clusters are separating ("finite" templates).
Removing one symbol from a flange cluster and merging any same-sign
neighbours that this exposes yields the reduced templates; the union
of their coideals is the locus where the semifinite evaluations of
:mod:`zigzag_harmonics.semifinite` blow up.

Grammar: whitespace-separated tokens, each a sign followed by a
positive integer or '*' for an infinite multiplicity, e.g.
``"+* -1 +1 -*"``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional

from .words import EMPTY, MINUS, PLUS, BinaryWord


@dataclass(frozen=True, slots=True)
class Cluster:
    sign: str
    mult: Optional[int]  # None means infinite

    def __post_init__(self) -> None:
        if self.sign not in (PLUS, MINUS):
            raise ValueError(f"bad cluster sign {self.sign!r}")
        if self.mult is not None and self.mult < 1:
            raise ValueError(f"finite multiplicity must be >= 1, got {self.mult}")

    @property
    def is_infinite(self) -> bool:
        return self.mult is None

    def __str__(self) -> str:
        return f"{self.sign}{'*' if self.mult is None else self.mult}"


@dataclass(frozen=True, slots=True)
class Template:
    clusters: tuple[Cluster, ...]

    def __post_init__(self) -> None:
        if not self.clusters:
            raise ValueError("template needs at least one cluster")
        for a, b in zip(self.clusters, self.clusters[1:]):
            if a.sign == b.sign:
                raise ValueError(f"clusters must alternate, got {a} {b}")
        if not any(c.is_infinite for c in self.clusters):
            raise ValueError("template needs at least one infinite cluster")

    @staticmethod
    def parse(text: str) -> "Template":
        clusters = []
        for token in text.split():
            sign, mult_text = token[0], token[1:]
            if sign not in (PLUS, MINUS) or not mult_text:
                raise ValueError(f"bad cluster token {token!r}")
            if mult_text == "*":
                clusters.append(Cluster(sign, None))
            else:
                try:
                    mult = int(mult_text)
                except ValueError:
                    raise ValueError(f"bad cluster token {token!r}") from None
                clusters.append(Cluster(sign, mult))
        return Template(tuple(clusters))

    def __str__(self) -> str:
        return " ".join(str(c) for c in self.clusters)

    def __len__(self) -> int:
        return len(self.clusters)

    def __iter__(self) -> Iterator[Cluster]:
        return iter(self.clusters)

    @property
    def infinite_count(self) -> int:
        return sum(1 for c in self.clusters if c.is_infinite)


def parse_template(text: str) -> Template:
    return Template.parse(text)


# ---------------------------------------------------------------------------
# Cluster classification
# ---------------------------------------------------------------------------

def _is_separating(t: Template, i: int) -> bool:
    c = t.clusters[i]
    if c.is_infinite or c.mult != 1 or i in (0, len(t) - 1):
        return False
    return t.clusters[i - 1].is_infinite and t.clusters[i + 1].is_infinite


def is_finite_template(t: Template) -> bool:
    """True iff every finite cluster is separating."""
    return all(c.is_infinite or _is_separating(t, i) for i, c in enumerate(t.clusters))


def is_semifinite_template(t: Template) -> bool:
    return not is_finite_template(t)


# ---------------------------------------------------------------------------
# Membership
# ---------------------------------------------------------------------------

def member(t: Template, w: BinaryWord) -> bool:
    """True iff w splits into chunks fitting t's clusters in order.

    Left-to-right pass keeping the set of consumed prefixes; chunks may
    be empty, so the frontier only grows along same-sign runs capped at
    the cluster multiplicity.  Linear in len(w) * len(t) * run length.
    """
    n = len(w)
    frontier = {0}
    for c in t.clusters:
        nxt = set(frontier)
        for p in frontier:
            cap = n - p if c.mult is None else min(c.mult, n - p)
            q = p
            while q - p < cap and w.symbol(q) == c.sign:
                q += 1
                nxt.add(q)
        frontier = nxt
    return n in frontier


def superscript_member(t: Template, generator: BinaryWord, w: BinaryWord) -> bool:
    """Membership in the part of the coideal above a fixed generator word."""
    from .words import is_subword

    return member(t, w) and is_subword(generator, w)


# ---------------------------------------------------------------------------
# Flange and sections
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FlangeDecomposition:
    """Interleaving a_0, t_1, a_1, ..., t_k, a_k; outer words may be empty."""

    flange_words: tuple[BinaryWord, ...]
    sections: tuple[Template, ...]

    def __post_init__(self) -> None:
        if len(self.flange_words) != len(self.sections) + 1:
            raise ValueError("need exactly one more flange word than sections")


def flange_and_sections(t: Template) -> FlangeDecomposition:
    """Split t at its flange into maximal finite-template sections.

    For a finite template the flange is empty and the single section is
    t itself.
    """
    is_flange = [not c.is_infinite and not _is_separating(t, i)
                 for i, c in enumerate(t.clusters)]
    words: list[BinaryWord] = []
    sections: list[Template] = []
    current_word = EMPTY
    current_section: list[Cluster] = []
    for i, c in enumerate(t.clusters):
        if is_flange[i]:
            if current_section:
                sections.append(Template(tuple(current_section)))
                current_section = []
            current_word = current_word.concat(BinaryWord.from_str(c.sign * c.mult))
        else:
            if not current_section:
                words.append(current_word)
                current_word = EMPTY
            current_section.append(c)
    if current_section:
        sections.append(Template(tuple(current_section)))
    words.append(current_word)
    return FlangeDecomposition(tuple(words), tuple(sections))


# ---------------------------------------------------------------------------
# Reduced templates and the blow-up locus
# ---------------------------------------------------------------------------

def _normalized(clusters: list[Cluster]) -> Template:
    """Merge adjacent same-sign clusters; infinity absorbs any length."""
    merged: list[Cluster] = []
    for c in clusters:
        if merged and merged[-1].sign == c.sign:
            prev = merged.pop()
            if prev.is_infinite or c.is_infinite:
                merged.append(Cluster(c.sign, None))
            else:
                merged.append(Cluster(c.sign, prev.mult + c.mult))
        else:
            merged.append(c)
    return Template(tuple(merged))


def reduced_templates(t: Template) -> tuple[Template, ...]:
    """One symbol removed from each flange cluster, deduplicated.

    Only flange clusters are eligible; separating clusters stay.  When
    a one-symbol flange cluster disappears its two neighbours share a
    sign and merge.
    """
    out: list[Template] = []
    for i, c in enumerate(t.clusters):
        if c.is_infinite or _is_separating(t, i):
            continue
        cs = list(t.clusters)
        if c.mult > 1:
            cs[i] = Cluster(c.sign, c.mult - 1)
            reduced = Template(tuple(cs))
        else:
            del cs[i]
            reduced = _normalized(cs)
        if reduced not in out:
            out.append(reduced)
    return tuple(out)


def member_J(t: Template, w: BinaryWord) -> bool:
    """True iff w fits some reduced template (always False for finite t)."""
    return any(member(r, w) for r in reduced_templates(t))


# ---------------------------------------------------------------------------
# The injection into the product of sections
# ---------------------------------------------------------------------------

def _decompositions(t: Template, w: BinaryWord) -> Iterator[tuple[BinaryWord, ...]]:
    fd = flange_and_sections(t)
    segments: list[tuple[str, object]] = []
    for i, section in enumerate(fd.sections):
        if len(fd.flange_words[i]):
            segments.append(("lit", fd.flange_words[i]))
        segments.append(("sec", section))
    if len(fd.flange_words[-1]):
        segments.append(("lit", fd.flange_words[-1]))

    n = len(w)
    acc: list[BinaryWord] = []

    def rec(pos: int, si: int) -> Iterator[tuple[BinaryWord, ...]]:
        if si == len(segments):
            if pos == n:
                yield tuple(acc)
            return
        kind, payload = segments[si]
        if kind == "lit":
            lit: BinaryWord = payload  # type: ignore[assignment]
            if pos + len(lit) <= n and w.sub(pos, pos + len(lit)) == lit:
                yield from rec(pos + len(lit), si + 1)
        else:
            section: Template = payload  # type: ignore[assignment]
            for end in range(pos, n + 1):
                piece = w.sub(pos, end)
                if member(section, piece):
                    acc.append(piece)
                    yield from rec(end, si + 1)
                    acc.pop()

    return rec(0, 0)


def inject(t: Template, w: BinaryWord) -> tuple[BinaryWord, ...]:
    """Coordinates of w in the product of section coideals.

    Defined on words fitting t but no reduced template; there the
    splitting of the word as a_0 . s_1 . a_1 ... s_k . a_k with s_i
    fitting section i exists and is unique, and taking coordinates is
    an edge-preserving embedding whose image is upward closed.  The
    first decomposition found is returned; uniqueness is asserted by
    :func:`inject_all` in the test suite.
    """
    if not member(t, w):
        raise ValueError(f"{w} does not fit {t}")
    if member_J(t, w):
        raise ValueError(f"{w} fits a reduced template of {t}")
    for dec in _decompositions(t, w):
        return dec
    raise RuntimeError(f"no decomposition found for {w} in {t}")


def inject_all(t: Template, w: BinaryWord) -> list[tuple[BinaryWord, ...]]:
    """Every decomposition; used to check the uniqueness claim."""
    return list(_decompositions(t, w))


# ---------------------------------------------------------------------------
# Single-generator word
# ---------------------------------------------------------------------------

def _matches(clusters: tuple[Cluster, ...], pattern: tuple[tuple[str, Optional[int]], ...]) -> bool:
    return (len(clusters) == len(pattern)
            and all(c.sign == s and c.mult == m for c, (s, m) in zip(clusters, pattern)))


_INF = None
_AVOID = (
    ((PLUS, _INF), (MINUS, _INF), (PLUS, 1), (MINUS, _INF), (PLUS, _INF)),
    ((MINUS, _INF), (PLUS, _INF), (MINUS, 1), (PLUS, _INF), (MINUS, _INF)),
)
_NO_PREFIX = (
    ((PLUS, _INF), (MINUS, 1), (PLUS, _INF), (MINUS, _INF)),
    ((MINUS, _INF), (PLUS, 1), (MINUS, _INF), (PLUS, _INF)),
)
_NO_SUFFIX = (
    ((MINUS, _INF), (PLUS, _INF), (MINUS, 1), (PLUS, _INF)),
    ((PLUS, _INF), (MINUS, _INF), (PLUS, 1), (MINUS, _INF)),
)


def single_generator_word(t: Template) -> tuple[BinaryWord, bool]:
    """(a_t, flag): candidate generator word and a sufficient condition.

    a_t drops outermost infinite clusters, shrinks internal infinite
    clusters with an infinite neighbour to one symbol, drops internal
    infinite clusters squeezed between finite ones, and keeps finite
    clusters as they are.  When the flag is true (t avoids the listed
    cluster patterns) the words above a_t inside the coideal are
    exactly those outside every reduced template.  The condition is
    sufficient only; templates failing it may still be generated by a
    single word.
    """
    cs = t.clusters
    last = len(cs) - 1
    kept: list[str] = []
    for i, c in enumerate(cs):
        if c.is_infinite:
            if i in (0, last):
                continue
            if cs[i - 1].is_infinite or cs[i + 1].is_infinite:
                kept.append(c.sign)
            # squeezed between two finite clusters: dropped entirely
        else:
            kept.append(c.sign * c.mult)
    word = BinaryWord.from_str("".join(kept))

    windows = [cs[i:i + 5] for i in range(len(cs) - 4)]
    flag = (not any(_matches(win, pat) for win in windows for pat in _AVOID)
            and not any(_matches(cs[:4], pat) for pat in _NO_PREFIX)
            and not any(_matches(cs[-4:], pat) for pat in _NO_SUFFIX))
    return word, flag


# ---------------------------------------------------------------------------
# Max-block words
# ---------------------------------------------------------------------------

def minimal_maxblock_word(t: Template) -> BinaryWord:
    """Word of t with every infinite cluster shrunk to one symbol."""
    return BinaryWord.from_str(
        "".join(c.sign * (1 if c.is_infinite else c.mult) for c in t.clusters))


def maxblock_member(t: Template, w: BinaryWord) -> bool:
    """Membership in the ideal of words with the most blocks possible.

    One block per cluster, finite clusters filled to their exact
    multiplicity; only the blocks at infinite clusters vary, which
    makes the ideal a Pascal graph in as many dimensions as t has
    infinite clusters.
    """
    blocks = w.blocks()
    if len(blocks) != len(t.clusters):
        return False
    for (sign, length), c in zip(blocks, t.clusters):
        if sign != c.sign:
            return False
        if c.is_infinite:
            if length < 1:
                return False
        elif length != c.mult:
            return False
    return True

"""Semifinite growth models and their harmonic evaluations.

A growth model is a semifinite template together with positive weights
on its infinite clusters summing to one.  Its evaluation at a vertex is
zero off the template's coideal, infinite on the union of reduced
coideals, and elsewhere the product over sections of the section
coordinate evaluated against that section's weighted intervals.  The
root always evaluates to infinity: the empty diagram fits every
reduced template, so no normalization at the root is possible.

The deformation machinery replaces each flange block by an interval of
formal length eps; evaluations then live in polynomials over the
rationals in eps, and the limiting statements become exact statements
about valuations and leading coefficients.  eps is never a float.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Union

from .paintbox import IntervalTuple, Paintbox, eval_F, template_of_intervals
from .qsym import DEGREE_CAP, product_F
from .templates import (Template, flange_and_sections, inject, is_finite_template,
                        member, member_J, minimal_maxblock_word, parse_template)
from .words import (ROOT, BinaryWord, FormalCombination, Vertex, dominates_search,
                    is_subword, level, upper_covers)


# ---------------------------------------------------------------------------
# Values in [0, +oo]
# ---------------------------------------------------------------------------

@dataclass(frozen=True, slots=True)
class ExtValue:
    """Zero, a positive rational, or +infinity."""

    kind: str  # "zero" | "finite" | "infinite"
    value: Optional[Fraction] = None

    @staticmethod
    def zero() -> "ExtValue":
        return ExtValue("zero")

    @staticmethod
    def finite(value: Fraction) -> "ExtValue":
        value = Fraction(value)
        if value <= 0:
            raise ValueError(f"finite values must be positive, got {value}")
        return ExtValue("finite", value)

    @staticmethod
    def infinite() -> "ExtValue":
        return ExtValue("infinite")

    @property
    def is_zero(self) -> bool:
        return self.kind == "zero"

    @property
    def is_finite(self) -> bool:
        return self.kind == "finite"

    @property
    def is_infinite(self) -> bool:
        return self.kind == "infinite"

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        if self.is_infinite:
            return "inf"
        return str(self.value)


# ---------------------------------------------------------------------------
# Polynomials in the formal deformation parameter
# ---------------------------------------------------------------------------

class EpsPoly:
    """Finitely supported map from eps-exponent to rational coefficient."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Optional[dict[int, Fraction]] = None):
        self.coeffs = {}
        if coeffs:
            for k, v in coeffs.items():
                v = Fraction(v)
                if v:
                    self.coeffs[k] = v

    @staticmethod
    def const(value: Union[int, Fraction]) -> "EpsPoly":
        return EpsPoly({0: Fraction(value)})

    @staticmethod
    def coerce(value: Union[int, Fraction, "EpsPoly"]) -> "EpsPoly":
        return value if isinstance(value, EpsPoly) else EpsPoly.const(value)

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def valuation(self) -> Optional[int]:
        return min(self.coeffs) if self.coeffs else None

    def leading(self) -> Fraction:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[min(self.coeffs)]

    def __add__(self, other):
        other = EpsPoly.coerce(other)
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            s = out.get(k, Fraction(0)) + v
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return EpsPoly(out)

    __radd__ = __add__

    def __mul__(self, other):
        other = EpsPoly.coerce(other)
        out: dict[int, Fraction] = {}
        for ka, va in self.coeffs.items():
            for kb, vb in other.coeffs.items():
                k = ka + kb
                out[k] = out.get(k, Fraction(0)) + va * vb
        return EpsPoly(out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        out = EpsPoly.const(1)
        for _ in range(exponent):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = EpsPoly.const(other)
        return isinstance(other, EpsPoly) and self.coeffs == other.coeffs

    def __repr__(self) -> str:
        if not self.coeffs:
            return "EpsPoly(0)"
        terms = " + ".join(f"{v}*eps^{k}" for k, v in sorted(self.coeffs.items()))
        return f"EpsPoly({terms})"


EPS = EpsPoly({1: Fraction(1)})


# ---------------------------------------------------------------------------
# Growth models
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GrowthModel:
    """Semifinite template plus growth weights on its infinite clusters."""

    template: Template
    weights: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if is_finite_template(self.template):
            raise ValueError(f"template {self.template} is finite")
        if len(self.weights) != self.template.infinite_count:
            raise ValueError(
                f"need {self.template.infinite_count} weights, got {len(self.weights)}")
        if any(w <= 0 for w in self.weights):
            raise ValueError("weights must be positive")
        if sum(self.weights, Fraction(0)) != 1:
            raise ValueError("weights must sum to 1")

    @staticmethod
    def parse(text: str) -> "GrowthModel":
        """Grammar: template tokens, '|', 'w=' and comma-separated rationals."""
        head, sep, tail = text.partition("|")
        tail = tail.strip()
        if not sep or not tail.startswith("w="):
            raise ValueError("expected '<template> | w=<comma separated weights>'")
        weights = tuple(Fraction(tok) for tok in tail[2:].split(","))
        return GrowthModel(parse_template(head.strip()), weights)

    def __str__(self) -> str:
        return f"{self.template} | w={','.join(str(w) for w in self.weights)}"


def section_interval_tuples(model: GrowthModel) -> tuple[IntervalTuple, ...]:
    """Weighted intervals per section, weights following the infinite clusters."""
    weights = iter(model.weights)
    out = []
    for section in flange_and_sections(model.template).sections:
        intervals = tuple((c.sign, next(weights)) for c in section if c.is_infinite)
        out.append(IntervalTuple(intervals))
    return tuple(out)


def model_paintbox(model: GrowthModel) -> Paintbox:
    """The weights as a finitary paintbox, oriented by the infinite clusters."""
    intervals = tuple((c.sign, w) for c, w in
                      zip((c for c in model.template if c.is_infinite), model.weights))
    return Paintbox(intervals)


def phi_tw(model: GrowthModel, v: Vertex) -> ExtValue:
    """The semifinite harmonic evaluation at a vertex.

    Zero off the coideal, infinite on every vertex fitting a reduced
    template (the root included), and otherwise the product of section
    coordinates against the section interval tuples.
    """
    t = model.template
    if v is ROOT:
        return ExtValue.infinite()
    if not member(t, v):
        return ExtValue.zero()
    if member_J(t, v):
        return ExtValue.infinite()
    parts = inject(t, v)
    value = Fraction(1)
    for part, intervals in zip(parts, section_interval_tuples(model)):
        value *= eval_F(part, intervals)
    return ExtValue.finite(value)


def check_harmonic_at(model: GrowthModel, v: Vertex) -> bool:
    """Value at v equals the sum over its covers inside the coideal.

    Any infinite cover makes the sum infinite; on the blow-up locus the
    identity therefore reduces to the existence of an infinite cover,
    which is the saturation of that locus.
    """
    t = model.template
    if v is not ROOT and not member(t, v):
        raise ValueError(f"{v} is outside the coideal of {t}")
    cover_values = [phi_tw(model, c) for c in upper_covers(v) if member(t, c)]
    if any(val.is_infinite for val in cover_values):
        combined = ExtValue.infinite()
    else:
        total = sum((val.value for val in cover_values if val.is_finite), Fraction(0))
        combined = ExtValue.finite(total) if total else ExtValue.zero()
    return phi_tw(model, v) == combined


# ---------------------------------------------------------------------------
# The eps deformation
# ---------------------------------------------------------------------------

def build_w_eps(model: GrowthModel) -> IntervalTuple:
    """Flange blocks become eps-intervals between the weighted sections.

    One interval of formal length eps per block of each flange word,
    oriented by the block, interleaved with the section intervals in
    template order.  A semifinite template has a non-empty flange, so
    at least one eps-interval always appears.
    """
    fd = flange_and_sections(model.template)
    sections = iter(section_interval_tuples(model))
    intervals: list[tuple[str, object]] = []
    for i, word in enumerate(fd.flange_words):
        for sign, _length in word.blocks():
            intervals.append((sign, EPS))
        if i < len(fd.sections):
            intervals.extend(next(sections).intervals)
    return IntervalTuple(tuple(intervals))


def eps_expansion(v: Vertex, w_eps: IntervalTuple) -> EpsPoly:
    """Evaluation against the deformed intervals, exactly in eps."""
    return EpsPoly.coerce(eval_F(v, w_eps))


@dataclass(frozen=True)
class LimitReport:
    ok: bool
    n: Optional[int]
    const: Optional[Fraction]
    finite_points: int
    vanishing_points: int
    failures: tuple[str, ...]


def check_limit_formula(model: GrowthModel, level_cap: int) -> LimitReport:
    """Valuation and leading-coefficient constancy above the marker word.

    Scans every word above the template's minimal max-block word that
    fits the deformed template, up to the level cap.  Where the model
    evaluates finitely the eps-valuation must be one number n and the
    ratio leading coefficient / value one constant; where the model
    evaluates to zero (the word fits the deformed template but not the
    original one) the valuation must exceed n, so that the rescaled
    limit vanishes too.  n and the constant are measured outputs.
    """
    t = model.template
    nu = minimal_maxblock_word(t)
    if level(nu) > level_cap:
        raise ValueError(f"level cap {level_cap} below the marker level {level(nu)}")
    w_eps = build_w_eps(model)
    t_eps = template_of_intervals(w_eps)

    from .words import enumerate_level

    n_seen: Optional[int] = None
    const_seen: Optional[Fraction] = None
    finite_points = 0
    vanishing: list[tuple[BinaryWord, int]] = []
    failures: list[str] = []
    for length in range(len(nu), level_cap):
        for w in enumerate_level(length):
            if not is_subword(nu, w) or not member(t_eps, w):
                continue
            poly = eps_expansion(w, w_eps)
            val = phi_tw(model, w)
            if val.is_infinite:
                failures.append(f"{w}: infinite value above the marker word")
                continue
            if val.is_zero:
                vanishing.append((w, poly.valuation()))
                continue
            finite_points += 1
            if poly.is_zero:
                failures.append(f"{w}: zero expansion at a positive point")
                continue
            n_here, const_here = poly.valuation(), poly.leading() / val.value
            if n_seen is None:
                n_seen, const_seen = n_here, const_here
            else:
                if n_here != n_seen:
                    failures.append(f"{w}: valuation {n_here} != {n_seen}")
                if const_here != const_seen:
                    failures.append(f"{w}: ratio {const_here} != {const_seen}")
    for w, v in vanishing:
        if n_seen is not None and (v is None or v <= n_seen):
            failures.append(f"{w}: vanishing point with valuation {v} <= {n_seen}")
    ok = not failures and finite_points > 0
    return LimitReport(ok, n_seen, const_seen, finite_points, len(vanishing),
                       tuple(failures))


# ---------------------------------------------------------------------------
# Ring identity and approximating sequences
# ---------------------------------------------------------------------------

def check_ring_identity(model: GrowthModel, a: Vertex, b: Vertex,
                        degree_cap: int = DEGREE_CAP) -> bool:
    """phi(F_a F_b) = phi_paintbox(a) * phi(b) for b of finite value.

    Every word carrying a positive structure constant sits above b,
    hence outside the blow-up locus; an infinite term would contradict
    that geometry and raises instead of propagating.
    """
    t = model.template
    if not member(t, b) or member_J(t, b):
        raise ValueError(f"{b} is not a finite-value vertex of {t}")
    expansion = product_F(a, b, degree_cap)
    lhs = Fraction(0)
    for v, c in expansion.coeffs.items():
        val = phi_tw(model, v)
        if val.is_infinite:
            raise RuntimeError(f"structure constant {c} at blow-up vertex {v}")
        if val.is_finite:
            lhs += c * val.value
    rhs = eval_F(a, model_paintbox(model)) * phi_tw(model, b).value
    return lhs == rhs


@dataclass(frozen=True)
class ApproxReport:
    ok: bool
    certified_levels: tuple[Optional[int], ...]
    values: tuple[Fraction, ...]


def check_approx_sequence(model: GrowthModel, target: BinaryWord,
                          seq: Sequence[FormalCombination], *,
                          search_cap: int,
                          threshold: Optional[Fraction] = None) -> ApproxReport:
    """Certify an approximating sequence below an infinite-value word.

    Each combination must live where the model is finite, be dominated
    by the target in the cone of the template's coideal (single-level
    certificate searched up to the cap), and the finite values must
    strictly increase; unboundedness is asserted as the last value
    exceeding the requested threshold.  A missing certificate means
    "not certified at this cap", not a disproof of dominance.
    """
    t = model.template
    if not member(t, target) or not member_J(t, target):
        raise ValueError(f"target {target} is not an infinite-value word of {t}")
    within = lambda w: member(t, w)
    levels: list[Optional[int]] = []
    values: list[Fraction] = []
    for comb in seq:
        for v, c in comb.coeffs.items():
            val = phi_tw(model, v)
            if not val.is_finite:
                raise ValueError(f"combination touches non-finite vertex {v}")
        levels.append(dominates_search(target, comb, search_cap, within=within))
        total = Fraction(0)
        for v, c in comb.coeffs.items():
            total += c * phi_tw(model, v).value
        values.append(total)
    increasing = all(x < y for x, y in zip(values, values[1:]))
    ok = (all(lvl is not None for lvl in levels) and increasing
          and (threshold is None or (values and values[-1] > threshold)))
    return ApproxReport(ok, tuple(levels), tuple(values))

"""Products in the fundamental basis at bounded degree.

The fundamental function of a word with n - 1 symbols expands, in any
N >= n variables, as the sum of monomials x_{i_1} ... x_{i_n} over
weakly increasing index chains that increase strictly exactly where
the word has a '-' (a '-' between boxes j and j+1 starts a new row,
hence a descent).  Products are computed by honestly multiplying these
polynomials and re-expanding through the unitriangular change of basis
to monomial coefficients, coarsest compositions first.  N = combined
degree variables are faithful at that degree; the test suite doubles N
and compares.

This route is deliberately slow but self-verifying: the one-box
product reproducing the upward covers is a theorem here, not an input.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations

from .words import (EMPTY, MINUS, ROOT, BinaryWord, FormalCombination, Vertex,
                    level, upper_covers, word_of_composition)

#: largest |a| + |b| accepted by product_F
DEGREE_CAP = 12

MonomialPoly = dict[tuple[int, ...], int]


def _descents(w: BinaryWord) -> frozenset[int]:
    """1-indexed positions of '-' symbols (row starts)."""
    return frozenset(j + 1 for j in range(len(w)) if w.symbol(j) == MINUS)


def _composition_of_descents(des: frozenset[int], n: int) -> tuple[int, ...]:
    cuts = sorted(des)
    bounds = [0, *cuts, n]
    return tuple(b - a for a, b in zip(bounds, bounds[1:]))


def monomial_expansion(v: Vertex, nvars: int) -> MonomialPoly:
    """Expansion in x_1 .. x_nvars as a sparse exponent-vector dict.

    Chains are grouped by run: choosing cut positions (a superset of
    the descents) fixes run sizes, and an increasing choice of
    variables fixes the monomial, so every coefficient is 1.
    """
    if v is ROOT:
        return {(0,) * nvars: 1}
    w: BinaryWord = v
    n = len(w) + 1
    if nvars < n:
        raise ValueError(f"need at least {n} variables, got {nvars}")
    des = _descents(w)
    weak = [j for j in range(1, n) if j not in des]
    out: MonomialPoly = {}
    for extra_count in range(len(weak) + 1):
        for extra in combinations(weak, extra_count):
            cuts = sorted(des.union(extra))
            bounds = [0, *cuts, n]
            runs = [b - a for a, b in zip(bounds, bounds[1:])]
            for vars_ in combinations(range(nvars), len(runs)):
                key = [0] * nvars
                for var, run in zip(vars_, runs):
                    key[var] = run
                out[tuple(key)] = 1
    return out


def poly_mul(p: MonomialPoly, q: MonomialPoly) -> MonomialPoly:
    if len(p) > len(q):
        p, q = q, p
    out: MonomialPoly = {}
    for ea, ca in p.items():
        for eb, cb in q.items():
            key = tuple(x + y for x, y in zip(ea, eb))
            out[key] = out.get(key, 0) + ca * cb
    return out


def _f_coefficients(poly: MonomialPoly, n: int, nvars: int) -> dict[tuple[int, ...], int]:
    """Invert the F-to-monomial matrix by leading-term subtraction.

    The monomial coefficient of a composition collects every F-term it
    refines, so walking compositions by increasing part count and
    subtracting what coarser compositions already explain isolates each
    F-coefficient.
    """
    all_descents = [frozenset(s) for k in range(n)
                    for s in combinations(range(1, n), k)]
    all_descents.sort(key=len)
    coeff: dict[frozenset[int], int] = {}
    for des in all_descents:
        comp = _composition_of_descents(des, n)
        key = tuple(comp) + (0,) * (nvars - len(comp))
        acc = poly.get(key, 0)
        for other, c in coeff.items():
            if other < des:
                acc -= c
        if acc < 0:
            raise RuntimeError(
                f"negative structure constant {acc} at {comp}; expansion is corrupt")
        if acc:
            coeff[des] = acc
    return {_composition_of_descents(des, n): c for des, c in coeff.items()}


def product_F(a: Vertex, b: Vertex, degree_cap: int = DEGREE_CAP,
              nvars: int = 0) -> FormalCombination:
    """Structure constants of F_a * F_b as a combination of vertices.

    The empty diagram is the unit.  Coefficients are non-negative
    integers supported on words above both factors in subword order;
    both facts are consequences here and are asserted downstream.
    Degree-many variables are faithful; nvars overrides the count so
    tests can double it and compare.
    """
    if a is ROOT and b is ROOT:
        return FormalCombination(0, {ROOT: Fraction(1)})
    if a is ROOT:
        return FormalCombination(level(b), {b: Fraction(1)})
    if b is ROOT:
        return FormalCombination(level(a), {a: Fraction(1)})
    n = level(a) + level(b)
    if n > degree_cap:
        raise ValueError(f"combined degree {n} above cap {degree_cap}")
    nvars = nvars or n
    if nvars < n:
        raise ValueError(f"{nvars} variables are too few for degree {n}")
    poly = poly_mul(monomial_expansion(a, nvars), monomial_expansion(b, nvars))
    coeffs = _f_coefficients(poly, n, nvars)
    return FormalCombination(
        n, {word_of_composition(comp): Fraction(c) for comp, c in coeffs.items()})


def reexpand(comb: FormalCombination, nvars: int) -> MonomialPoly:
    """Monomial polynomial of an F-combination; test hook for faithfulness."""
    out: MonomialPoly = {}
    for v, c in comb.coeffs.items():
        for key, value in monomial_expansion(v, nvars).items():
            acc = out.get(key, 0) + int(c) * value
            if acc:
                out[key] = acc
            else:
                out.pop(key, None)
    return out


def pieri_check(a: Vertex, degree_cap: int = DEGREE_CAP) -> bool:
    """Multiplying by the one-box function lists exactly the upward covers."""
    prod = product_F(EMPTY, a, degree_cap)
    expected = {w: Fraction(1) for w in upper_covers(a)}
    return prod.coeffs == expected


def fexpansion_to_json(comb: FormalCombination) -> dict:
    """JSON form: word (or '@') to rational string."""
    return {
        "schema": "zigzag-fexpansion/1",
        "level": comb.level,
        "terms": {str(v): str(c) for v, c in
                  sorted(comb.coeffs.items(), key=lambda t: str(t[0]))},
    }


def fexpansion_from_json(data: dict) -> FormalCombination:
    from .words import parse_vertex

    return FormalCombination(
        data["level"],
        {parse_vertex(k): Fraction(v) for k, v in data["terms"].items()})

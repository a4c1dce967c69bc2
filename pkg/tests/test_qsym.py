"""Fundamental-basis products through the polynomial oracle.

Core claims:
    - monomial expansions match the chain description (minus symbols
      force strict index increases)
    - the one-box product lists exactly the upward covers
    - structure constants are non-negative, graded, commutative, and
      supported above both factors in subword order
    - degree-many variables are already faithful (doubling changes
      nothing) and the F-expansion reproduces the product polynomial
"""

import random
from fractions import Fraction

import pytest

from zigzag_harmonics import (EMPTY, ROOT, BinaryWord, enumerate_level,
                              is_subword, level, monomial_expansion,
                              pieri_check, product_F)
from zigzag_harmonics.qsym import poly_mul, reexpand

W = BinaryWord.from_str


def test_monomial_expansion_examples():
    assert monomial_expansion(EMPTY, 2) == {(1, 0): 1, (0, 1): 1}
    assert monomial_expansion(W("-"), 2) == {(1, 1): 1}
    assert monomial_expansion(W("+"), 2) == {(2, 0): 1, (1, 1): 1, (0, 2): 1}
    assert monomial_expansion(ROOT, 3) == {(0, 0, 0): 1}
    with pytest.raises(ValueError):
        monomial_expansion(W("+"), 1)


def test_monomial_expansion_is_multiplicity_free():
    for length in range(5):
        for w in enumerate_level(length):
            poly = monomial_expansion(w, length + 2)
            assert set(poly.values()) == {1}
            assert all(sum(e) == length + 1 for e in poly)


def test_product_examples():
    box = EMPTY
    assert product_F(box, box).coeffs == {W("+"): 1, W("-"): 1}
    assert product_F(box, W("+")).coeffs == {W("++"): 1, W("+-"): 1, W("-+"): 1}
    assert product_F(ROOT, W("+-")).coeffs == {W("+-"): 1}
    assert product_F(W("+-"), ROOT).coeffs == {W("+-"): 1}
    assert product_F(ROOT, ROOT).coeffs == {ROOT: 1}


def test_product_degree_cap():
    with pytest.raises(ValueError):
        product_F(W("+" * 6), W("-" * 6), degree_cap=12)


def test_pieri_exhaustive_small():
    for length in range(6):
        for w in enumerate_level(length):
            assert pieri_check(w)


def test_structure_constants_properties():
    vertices = [w for length in range(4) for w in enumerate_level(length)]
    for a in vertices:
        for b in vertices:
            expansion = product_F(a, b)
            assert expansion.level == level(a) + level(b)
            assert product_F(b, a).coeffs == expansion.coeffs
            for v, c in expansion.coeffs.items():
                assert c > 0
                assert c == int(c)
                assert is_subword(a, v) and is_subword(b, v)


def test_support_nonnegativity_and_grading_exhaustive():
    # every pair with at most eight boxes combined, commutativity-reduced
    for la in range(1, 8):
        for lb in range(la, 9 - la):
            for a in enumerate_level(la - 1):
                for b in enumerate_level(lb - 1):
                    if la == lb and str(b) < str(a):
                        continue
                    expansion = product_F(a, b)
                    assert sum(expansion.coeffs.values(), Fraction(0)) > 0
                    for v, c in expansion.coeffs.items():
                        assert c > 0 and c == int(c)
                        assert level(v) == la + lb
                        assert is_subword(a, v) and is_subword(b, v)


def test_doubling_variable_count_changes_nothing():
    pairs = [(EMPTY, W("+-")), (W("+"), W("-+")), (W("--"), W("++"))]
    for a, b in pairs:
        n = level(a) + level(b)
        assert product_F(a, b).coeffs == product_F(a, b, nvars=2 * n).coeffs


def test_reexpansion_reproduces_the_polynomial():
    pairs = [(W("+"), W("-")), (W("+-"), W("-")), (W("++"), W("--"))]
    for a, b in pairs:
        n = level(a) + level(b)
        poly = poly_mul(monomial_expansion(a, n), monomial_expansion(b, n))
        assert reexpand(product_F(a, b), n) == poly

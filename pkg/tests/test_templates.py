"""Template layer: membership, flange splitting, reductions, injection.

Core claims:
    - the grammar parses and rejects exactly what it should
    - finiteness classification matches the worked pair of examples
    - membership agrees with brute-force chunk assignment
    - flange words and sections reproduce the worked decompositions
    - reductions come from flange clusters only; the capped template
      reduces to its bare section (so its blow-up locus is one coideal)
    - the injection decomposes uniquely, preserves edges, and its image
      matches the worked descriptions
    - the candidate generator word and its sufficiency flag behave as
      documented, including the exhaustive identity when the flag holds
    - the max-block ideal has Pascal-graph level counts
"""

from itertools import combinations_with_replacement

import pytest

from zigzag_harmonics import (EMPTY, BinaryWord, enumerate_level,
                              flange_and_sections, inject, inject_all,
                              is_finite_template, is_semifinite_template,
                              is_subword, lower_covers, maxblock_member,
                              member, member_J, minimal_maxblock_word,
                              parse_template, reduced_templates,
                              single_generator_word, upper_covers)

W = BinaryWord.from_str

STEP = parse_template("+* -1 +1 -*")
CAPPED = parse_template("+1 -* +* -1 +*")
BRACKETED = parse_template("-1 +* -* +1 -* +* -* +1")
FIGURE = parse_template("-1 +* -* +1 -1 +* -2 +* -1 +1 -2 +* -* +1 -*")


# -- oracle -------------------------------------------------------------------

def brute_member(t, w):
    """Try every split of w into len(t) consecutive, possibly empty chunks."""
    n, k = len(w), len(t.clusters)
    for cuts in combinations_with_replacement(range(n + 1), k - 1):
        bounds = (0,) + cuts + (n,)
        ok = True
        for (start, stop), c in zip(zip(bounds, bounds[1:]), t.clusters):
            size = stop - start
            if size == 0:
                continue
            if c.mult is not None and size > c.mult:
                ok = False
                break
            if any(w.symbol(i) != c.sign for i in range(start, stop)):
                ok = False
                break
        if ok:
            return True
    return False


# -- grammar ------------------------------------------------------------------

def test_parse_and_render():
    t = parse_template("+* -1 +1 -*")
    assert str(t) == "+* -1 +1 -*"
    assert parse_template("+*").infinite_count == 1
    assert parse_template(str(FIGURE)) == FIGURE


@pytest.mark.parametrize("text", ["+1 -1", "+* +1", "+* -0 +*", "1+ -*", "+x", ""])
def test_parse_rejects(text):
    with pytest.raises(ValueError):
        parse_template(text)


# -- finiteness ---------------------------------------------------------------

def test_finiteness_worked_pair():
    assert is_finite_template(parse_template("+* -* +* -1 +* -1 +* -* +1 -*"))
    assert not is_finite_template(FIGURE)
    assert is_finite_template(parse_template("+*"))
    assert is_semifinite_template(STEP)


# -- membership ---------------------------------------------------------------

def test_member_examples():
    assert member(CAPPED, W("+--+"))
    assert member(STEP, EMPTY)
    # the bent words +^n - + -^m all fit the step template, n = m = 1 included
    assert member(STEP, W("+-+-"))
    assert not member(STEP, W("-++"))
    assert not member(STEP, W("+-+-+"))
    assert not member(STEP, W("+--+"))


def test_member_matches_brute_force():
    templates = [STEP, CAPPED, BRACKETED, parse_template("+*"),
                 parse_template("-2 +* -1 +3 -*")]
    for t in templates:
        for length in range(8):
            for w in enumerate_level(length):
                assert member(t, w) == brute_member(t, w), (t, w)


def test_coideals_are_saturated():
    for t in (STEP, CAPPED, BRACKETED):
        for length in range(1, 11):
            for w in enumerate_level(length):
                if not member(t, w):
                    continue
                assert all(member(t, c) for c in lower_covers(w))
                assert any(member(t, c) for c in upper_covers(w))


# -- flange and sections ------------------------------------------------------

def test_flange_worked_decomposition():
    fd = flange_and_sections(FIGURE)
    assert [str(w) for w in fd.flange_words] == ["-", "+-", "--", "-+--", ""]
    assert [str(s) for s in fd.sections] == ["+* -*", "+*", "+*", "+* -* +1 -*"]


def test_flange_step_and_capped():
    fd = flange_and_sections(STEP)
    assert [str(w) for w in fd.flange_words] == ["", "-+", ""]
    assert [str(s) for s in fd.sections] == ["+*", "-*"]

    fd = flange_and_sections(CAPPED)
    assert [str(w) for w in fd.flange_words] == ["+", ""]
    assert [str(s) for s in fd.sections] == ["-* +* -1 +*"]


def test_flange_of_finite_template_is_empty():
    t = parse_template("+* -1 +*")
    fd = flange_and_sections(t)
    assert fd.flange_words == (EMPTY, EMPTY)
    assert fd.sections == (t,)


# -- reductions and the blow-up locus ----------------------------------------

def test_reduced_templates():
    # the separating cluster of the capped template is not reducible,
    # so its blow-up locus is the single bare-section coideal
    assert reduced_templates(CAPPED) == (parse_template("-* +* -1 +*"),)
    # both step flange clusters reduce to the same two-ray template
    assert reduced_templates(STEP) == (parse_template("+* -*"),)
    assert reduced_templates(BRACKETED) == (
        parse_template("+* -* +1 -* +* -* +1"),
        parse_template("-1 +* -* +1 -* +* -*"),
    )


def test_multiplicity_decrement_keeps_cluster():
    t = parse_template("-2 +* -* +1 -*")
    assert parse_template("-1 +* -* +1 -*") in reduced_templates(t)


def test_member_J_examples():
    assert member_J(STEP, W("++--"))
    assert not member_J(STEP, W("-+"))
    assert member_J(STEP, EMPTY)
    # finite templates have nothing to reduce
    assert reduced_templates(parse_template("+* -1 +*")) == ()
    assert not member_J(parse_template("+* -1 +*"), EMPTY)


def test_blow_up_locus_sits_inside_the_coideal():
    for t in (STEP, CAPPED, BRACKETED):
        for length in range(11):
            for w in enumerate_level(length):
                if member_J(t, w):
                    assert member(t, w)


def test_blow_up_locus_is_saturated_coideal():
    for t in (STEP, CAPPED, BRACKETED):
        for length in range(1, 11):
            for w in enumerate_level(length):
                if not (member(t, w) and member_J(t, w)):
                    continue
                assert all(member_J(t, c) for c in lower_covers(w))
                assert any(member_J(t, c) and member(t, c)
                           for c in upper_covers(w))


# -- injection ----------------------------------------------------------------

def test_inject_worked_examples():
    assert inject(STEP, W("++-+--")) == (W("++"), W("--"))
    assert inject(CAPPED, W("+--+")) == (W("--+"),)
    assert inject(BRACKETED, W("-+-+-+-+")) == (W("+-+-+-"),)


def test_inject_preconditions():
    with pytest.raises(ValueError):
        inject(STEP, W("-++"))  # outside the coideal
    with pytest.raises(ValueError):
        inject(STEP, W("++--"))  # inside the blow-up locus


def test_inject_unique_on_small_levels():
    for t in (STEP, CAPPED, BRACKETED):
        for length in range(10):
            for w in enumerate_level(length):
                if member(t, w) and not member_J(t, w):
                    assert len(inject_all(t, w)) == 1, (t, w)


def test_capped_image_is_generated_by_two_minuses():
    section = parse_template("-* +* -1 +*")
    for length in range(1, 10):
        image = {inject(CAPPED, w)[0] for w in enumerate_level(length)
                 if member(CAPPED, w) and not member_J(CAPPED, w)}
        expected = {u for u in enumerate_level(length - 1)
                    if member(section, u) and is_subword(W("--"), u)}
        assert image == expected


def test_step_image_is_all_pairs_of_boxes():
    for length in range(2, 10):
        image = {inject(STEP, w) for w in enumerate_level(length)
                 if member(STEP, w) and not member_J(STEP, w)}
        expected = {(W("+" * (r - 1)), W("-" * (length - r - 1)))
                    for r in range(1, length)}
        assert image == expected


# -- generator word -----------------------------------------------------------

def test_single_generator_word_examples():
    t = parse_template("+* -* +2 -* +* -1 +* -3")
    word, flag = single_generator_word(t)
    assert str(word) == "-++-+----"
    assert flag

    word, flag = single_generator_word(parse_template("+*"))
    assert word == EMPTY and flag

    word, flag = single_generator_word(STEP)
    assert str(word) == "-+" and flag

    _, flag = single_generator_word(BRACKETED)
    assert not flag  # contains an avoided pattern
    _, flag = single_generator_word(CAPPED)
    assert not flag  # ends with a forbidden suffix


def test_flagged_generator_describes_the_ideal():
    for t in (STEP, parse_template("+* -2 +* -1 +*"),
              parse_template("-* +1 -2 +*"),
              parse_template("+* -* +2 -* +* -1 +* -3")):
        a_t, flag = single_generator_word(t)
        assert flag
        for length in range(12):
            for w in enumerate_level(length):
                if not member(t, w):
                    continue
                assert (not member_J(t, w)) == is_subword(a_t, w), (t, w)


# -- max-block ideal ----------------------------------------------------------

def test_minimal_maxblock_word():
    assert str(minimal_maxblock_word(STEP)) == "+-+-"
    assert str(minimal_maxblock_word(BRACKETED)) == "-+-+-+-+"
    assert str(minimal_maxblock_word(parse_template("+2 -* +*"))) == "++-+"


def test_maxblock_ideal_has_pascal_counts():
    from math import comb

    for t in (STEP, CAPPED, BRACKETED, parse_template("+* -1 +* -*")):
        d = t.infinite_count
        base = len(minimal_maxblock_word(t))
        for extra in range(5):
            count = sum(1 for w in enumerate_level(base + extra)
                        if maxblock_member(t, w))
            assert count == comb(extra + d - 1, d - 1)

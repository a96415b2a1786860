import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from modgeod.binwords import BinaryWord, rotate
from modgeod.enumeration import classes
from modgeod.geometry import (
    GEN_A,
    GEN_B,
    ProjectiveMatrix,
    apex_height,
    audit_lemma71,
    classify,
    encode,
    geodesic_length,
    in_thick_part,
    max_depth,
)

import oracles


def W(text):
    return BinaryWord.from_text(text)


words = st.builds(
    BinaryWord.from_entries,
    st.lists(st.sampled_from((-1, 1)), min_size=1, max_size=14),
)


# ---------------------------------------------------------------------------
# projective matrices

def test_determinant_enforced():
    with pytest.raises(ValueError):
        ProjectiveMatrix(1, 0, 0, 2)


def test_sign_canonicalization():
    assert ProjectiveMatrix(-1, 0, 1, -1) == ProjectiveMatrix(1, 0, -1, 1)
    m = ProjectiveMatrix(0, -1, 1, 0)
    assert (m.a, m.b, m.c, m.d) == (0, 1, -1, 0)
    assert m.trace_abs == 0


def test_mul_and_inverse():
    assert GEN_A * GEN_A == ProjectiveMatrix.identity()
    assert GEN_B * GEN_B * GEN_B == ProjectiveMatrix.identity()
    assert GEN_B * GEN_B.inverse() == ProjectiveMatrix.identity()


# ---------------------------------------------------------------------------
# encoding

def test_encode_letter_examples():
    assert encode(W("+")) == ProjectiveMatrix(-1, 0, 1, -1)
    assert encode(W("+")).trace_abs == 2
    assert encode(W("-")) == ProjectiveMatrix(1, -1, 0, 1)
    assert encode(W("+-")) == ProjectiveMatrix(-1, 1, 1, -2)
    assert encode(W("+-")).trace_abs == 3


@given(words)
def test_encode_matches_raw_product_oracle(w):
    raw = oracles.encode_tuple(w.entries)
    assert encode(w) == ProjectiveMatrix(*raw)


@given(words, words)
def test_encode_multiplicative_on_concatenation(u, v):
    joined = BinaryWord.from_entries(u.entries + v.entries)
    assert encode(joined) == encode(u) * encode(v)


# ---------------------------------------------------------------------------
# classification and length

def test_classify_examples():
    assert classify(GEN_A) == "elliptic"
    assert classify(encode(W("+"))) == "parabolic"
    assert classify(encode(W("+-"))) == "hyperbolic"
    assert abs(geodesic_length(encode(W("+-"))) - 2 * math.acosh(1.5)) < 1e-12


def test_length_needs_hyperbolic():
    with pytest.raises(ValueError):
        geodesic_length(encode(W("+")))
    with pytest.raises(ValueError):
        geodesic_length(GEN_A)


def test_length_invariant_under_rotation():
    for tau in range(2, 9):
        for w in classes(tau, hyperbolic=True):
            base = geodesic_length(encode(w))
            for k in range(tau):
                assert abs(geodesic_length(encode(rotate(w, k))) - base) < 1e-12


# ---------------------------------------------------------------------------
# apex heights

def test_apex_examples():
    assert abs(apex_height(ProjectiveMatrix(-1, 1, 1, -2)) - math.sqrt(5) / 2) < 1e-12
    assert abs(apex_height(ProjectiveMatrix(3, 2, 1, 1)) - math.sqrt(3)) < 1e-12
    assert abs(apex_height(ProjectiveMatrix(2, 1, 1, 1)) - math.sqrt(5) / 2) < 1e-12


def test_apex_rejects_non_hyperbolic():
    with pytest.raises(ValueError):
        apex_height(encode(W("-")))


def test_apex_matches_quadratic_root_oracle():
    for tau in range(2, 9):
        for w in classes(tau, hyperbolic=True):
            raw = oracles.encode_tuple(w.entries)
            M = ProjectiveMatrix(*raw)
            assert abs(apex_height(M) - oracles.fixed_point_gap(raw) / 2) < 1e-12


# ---------------------------------------------------------------------------
# deepest excursions

def test_max_depth_examples():
    rep = max_depth(W("+-"))
    assert abs(rep.apex - math.sqrt(5) / 2) < 1e-12
    assert abs(rep.depth - math.log(math.sqrt(5) / 2)) < 1e-12
    assert abs(rep.depth - 0.1116) < 5e-4

    rep = max_depth(W("++-"))
    assert abs(rep.apex - math.sqrt(3)) < 1e-12
    assert abs(rep.depth - 0.5493) < 5e-4
    assert rep.max_run == 2
    assert rep.trace_abs == 4
    assert rep.cross_check_ok is True


@pytest.mark.parametrize("k", range(1, 7))
def test_single_run_family_apex(k):
    w = BinaryWord.from_entries([1] * k + [-1])
    rep = max_depth(w)
    assert abs(rep.apex - math.sqrt(k * k + 4 * k) / 2) < 1e-12
    # the deepest excursion of a run-k word lies one unit above the naive
    # winding bracket: (k+1)/2 < apex < (k+2)/2
    assert (k + 1) / 2 < rep.apex < (k + 2) / 2
    assert rep.winding_bracket == (k + 1, k + 2)


def test_max_depth_rejects_non_hyperbolic():
    with pytest.raises(ValueError):
        max_depth(W("+++"))
    with pytest.raises(ValueError):
        max_depth(W("-"))


def test_depth_constant_on_rotations():
    for w in (W("++-"), W("+--+-"), W("++--+-")):
        base = max_depth(w, cross_validate=False).apex
        for k in range(w.length):
            got = max_depth(rotate(w, k), cross_validate=False).apex
            assert abs(got - base) < 1e-12


def test_cross_validation_agrees_on_small_classes():
    for tau in range(2, 9):
        for w in classes(tau, hyperbolic=True):
            assert max_depth(w).cross_check_ok is True


# ---------------------------------------------------------------------------
# thick part

def test_in_thick_part_examples():
    assert in_thick_part(W("+-+-"), 1)
    assert in_thick_part(W("++-"), 2)
    assert not in_thick_part(W("++-"), 1)
    assert not in_thick_part(W("----"), 3)
    with pytest.raises(ValueError):
        in_thick_part(W("+-"), 0)


# ---------------------------------------------------------------------------
# bracket audit

def test_audit_smoke():
    report = audit_lemma71(6, cross_validate=False)
    assert report.summary["classes"] == sum(
        len(oracles.class_reps(tau)) - 2 for tau in range(2, 7)
    )
    assert report.summary["widened_hits"] == report.summary["classes"]
    assert report.summary["boundary_flags"] == 0
    assert (
        report.summary["paper_bracket_hits"] + report.summary["shifted_bracket_hits"]
        <= report.summary["classes"]
    )
    for row in report.rows:
        assert not (row.paper_bracket_hit and row.shifted_bracket_hit)
        assert row.word == str(BinaryWord.from_text(row.word))


def test_audit_single_run_rows_sit_in_shifted_bracket():
    report = audit_lemma71(5, cross_validate=False)
    by_word = {row.word: row for row in report.rows}
    assert by_word["-+"].shifted_bracket_hit and not by_word["-+"].paper_bracket_hit
    assert by_word["-++"].shifted_bracket_hit and not by_word["-++"].paper_bracket_hit


def test_audit_validation():
    with pytest.raises(ValueError):
        audit_lemma71(1)

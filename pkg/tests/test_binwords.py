import pytest
from hypothesis import given
from hypothesis import strategies as st

from modgeod.binwords import (
    BinaryWord,
    Composition,
    HalfTurnWord,
    canonical_form,
    from_composition,
    half_turn_partner,
    is_half_turn,
    max_cyclic_run,
    primitive_root,
    rotate,
    runs_of,
)

import oracles

words = st.builds(
    BinaryWord.from_entries,
    st.lists(st.sampled_from((-1, 1)), min_size=1, max_size=24),
)
half_lengths = st.integers(min_value=1, max_value=10)


def W(text):
    return BinaryWord.from_text(text)


# ---------------------------------------------------------------------------
# construction and text round trip

def test_entries_round_trip():
    w = BinaryWord.from_entries([1, -1, -1])
    assert w.entries == (1, -1, -1)
    assert str(w) == "+--"
    assert BinaryWord.from_text("+--") == w


def test_text_ignores_whitespace():
    assert BinaryWord.from_text("+ + -") == W("++-")


@given(words)
def test_text_round_trip_bit_exact(w):
    assert BinaryWord.from_text(str(w)) == w


def test_bit_order_matches_lexicographic_order():
    # -1 encodes to bit 0, first entries sit in high bits
    pairs = sorted(oracles.all_words(4))
    encoded = sorted(oracles.all_words(4), key=lambda e: BinaryWord.from_entries(e).bits)
    assert pairs == encoded


@pytest.mark.parametrize(
    "bad",
    [lambda: BinaryWord(0, 0), lambda: BinaryWord(4, 2), lambda: BinaryWord(-1, 3)],
)
def test_invalid_construction(bad):
    with pytest.raises(ValueError):
        bad()


def test_invalid_entries_and_text():
    with pytest.raises(ValueError):
        BinaryWord.from_entries([1, 0, -1])
    with pytest.raises(ValueError):
        BinaryWord.from_text("+x-")
    with pytest.raises(ValueError):
        BinaryWord.from_text("   ")


# ---------------------------------------------------------------------------
# rotate

def test_rotate_examples():
    assert rotate(W("+--"), 1) == W("-+-")
    assert rotate(W("+--"), 3) == W("+--")
    # index arithmetic: entry j of the output is entry j-2 of the input
    assert rotate(W("++--"), 2) == BinaryWord.from_entries(
        oracles.rotate_tuple((1, 1, -1, -1), 2)
    )
    assert str(rotate(W("++--"), 2)) == "--++"


@given(words, st.integers(-30, 30), st.integers(-30, 30))
def test_rotate_group_action(w, i, j):
    assert rotate(rotate(w, i), j) == rotate(w, i + j)
    assert rotate(w, w.length) == w


# ---------------------------------------------------------------------------
# canonical form

def test_canonical_form_examples():
    # any rotation of the 12-entry block word has the same canonical form
    low = BinaryWord.from_entries((-1, -1, -1, 1, -1, -1, -1, 1, -1, -1, 1, 1))
    for k in range(12):
        assert canonical_form(rotate(low, k)) == low
    assert canonical_form(W("+++")) == W("+++")
    assert canonical_form(W("+-+-")) == BinaryWord.from_entries(
        oracles.canonical_tuple((1, -1, 1, -1))
    )
    assert str(canonical_form(W("+-+-"))) == "-+-+"


@given(words)
def test_canonical_matches_tuple_oracle(w):
    assert canonical_form(w).entries == oracles.canonical_tuple(w.entries)


@given(words, st.integers(0, 40))
def test_canonical_rotation_invariant_and_idempotent(w, k):
    c = canonical_form(w)
    assert canonical_form(rotate(w, k)) == c
    assert canonical_form(c) == c


# ---------------------------------------------------------------------------
# primitive root

def test_primitive_root_examples():
    assert primitive_root(W("+-+-")) == (W("+-"), 2)
    root, exp = primitive_root(W("++-"))
    assert (root, exp) == (W("++-"), 1)
    assert oracles.is_primitive_tuple((1, 1, -1))
    assert primitive_root(W("++++++")) == (W("+"), 6)


@given(words)
def test_primitive_root_reconstructs(w):
    root, exp = primitive_root(w)
    assert exp * root.length == w.length
    assert root.entries * exp == w.entries
    assert oracles.is_primitive_tuple(root.entries)
    assert (exp == 1) == oracles.is_primitive_tuple(w.entries)


# ---------------------------------------------------------------------------
# cyclic runs

def test_max_cyclic_run_examples():
    assert max_cyclic_run(W("++-")) == oracles.max_cyclic_run_tuple((1, 1, -1)) == 2
    assert max_cyclic_run(W("---")) == 3
    # the two +'s wrap around the seam
    assert max_cyclic_run(W("+--+")) == oracles.max_cyclic_run_tuple((1, -1, -1, 1)) == 2


@given(words, st.integers(0, 40))
def test_max_cyclic_run_oracle_and_rotation_invariance(w, k):
    assert max_cyclic_run(w) == oracles.max_cyclic_run_tuple(w.entries)
    assert max_cyclic_run(rotate(w, k)) == max_cyclic_run(w)


def test_constant_words_fail_small_run_bounds():
    w = W("-----")
    assert max_cyclic_run(w) == 5
    assert all(max_cyclic_run(w) > m for m in range(1, 5))


# ---------------------------------------------------------------------------
# half-turn words

def test_half_turn_partner_examples():
    h = HalfTurnWord(W("+-"))
    partner, k0 = half_turn_partner(h)
    assert (str(partner.word), k0) == ("-+", 1)
    assert k0 == h.t == 1

    h = HalfTurnWord(W("++--"))
    partner, k0 = half_turn_partner(h)
    assert (str(partner.word), k0) == ("--++", 2)
    assert k0 == h.t == 2
    assert primitive_root(h.word)[1] == 1

    h = HalfTurnWord(W("+-+-"))
    partner, k0 = half_turn_partner(h)
    assert (str(partner.word), k0) == ("-+-+", 1)
    assert k0 == 1 < h.t == 2
    assert primitive_root(h.word) == (W("+-"), 2)


def test_half_turn_rejects_bad_words():
    with pytest.raises(ValueError):
        HalfTurnWord(W("++"))
    with pytest.raises(ValueError):
        HalfTurnWord(W("+-+"))


def test_is_half_turn_matches_oracle():
    for t in range(1, 7):
        for entries in oracles.all_words(2 * t):
            w = BinaryWord.from_entries(entries)
            assert is_half_turn(w) == oracles.is_mirrored_tuple(entries)


@given(half_lengths, st.integers(0, 1023))
def test_half_turn_partner_properties(t, seed):
    half = BinaryWord(seed % (1 << t), t)
    h = HalfTurnWord.from_half(half)
    assert h.half == half
    partner, k0 = half_turn_partner(h)
    assert 1 <= k0 <= t
    assert partner.word != h.word
    assert is_half_turn(partner.word)
    # the orbit meets the mirrored family in exactly the pair {h, partner}
    back, _ = half_turn_partner(partner)
    assert back.word == h.word


# ---------------------------------------------------------------------------
# run profiles and their inverses

def test_runs_of_examples():
    assert runs_of(W("---++-+")).parts == (3, 2, 1, 1)
    assert runs_of(W("+")).parts == (1,)
    assert runs_of(W("+-+-")).parts == oracles.runs_tuple((1, -1, 1, -1)) == (1, 1, 1, 1)


def test_from_composition_examples():
    assert from_composition(Composition((3, 2, 1, 1)), -1) == W("---++-+")
    assert from_composition(Composition((1,)), 1) == W("+")
    assert from_composition(Composition((2, 2)), 1) == W("++--")


def test_composition_validation():
    with pytest.raises(ValueError):
        Composition((1, 0, 2))
    with pytest.raises(ValueError):
        from_composition(Composition((2,)), 0)
    assert Composition((2, 3)).total == 5


@given(words)
def test_runs_round_trip(w):
    c = runs_of(w)
    assert c.total == w.length
    assert from_composition(c, w.entries[0]) == w
    # the two leading signs give the only two preimages
    flipped = from_composition(c, -w.entries[0])
    assert flipped.entries == tuple(-e for e in w.entries)
    assert runs_of(flipped) == c

import pytest
from hypothesis import given
from hypothesis import strategies as st

from surgerykit.words import GroupWord, Presentation, WordSyntaxError, parse_word

NAMES = ("a", "b", "c")
letters = st.lists(st.tuples(st.integers(0, 2), st.sampled_from([1, -1])), max_size=12)


def test_free_reduction():
    w = GroupWord(((0, 1), (1, 1), (1, -1), (0, -1), (2, 1)))
    assert w.letters == ((2, 1),)


def test_parse_and_format():
    w = parse_word("caba^-2", NAMES)
    assert w.format(NAMES) == "caba'a'"
    assert w.format_powers(NAMES) == "caba^-2"
    assert parse_word("caba'a'", NAMES) == w
    assert parse_word("1", NAMES) == GroupWord()


def test_parse_errors():
    with pytest.raises(WordSyntaxError):
        parse_word("ad", NAMES)
    with pytest.raises(WordSyntaxError):
        parse_word("a#", NAMES)


@given(letters)
def test_inverse_cancels(ls):
    w = GroupWord(tuple(ls))
    assert (w * w.inverse()).letters == ()
    assert w.inverse().exponent_sum() == -w.exponent_sum()


@given(letters)
def test_format_parse_round_trip(ls):
    w = GroupWord(tuple(ls))
    assert parse_word(w.format(NAMES), NAMES) == w
    assert parse_word(w.format_powers(NAMES), NAMES) == w


@given(letters, st.integers(0, 11))
def test_cyclic_conjugates(ls, k):
    w = GroupWord(tuple(ls)).cyclically_reduced()
    if w.letters:
        k %= len(w.letters)
        rot = GroupWord(w.letters[k:] + w.letters[:k])
        assert rot.is_cyclic_conjugate_of(w)


def test_presentation_json_round_trip():
    p = Presentation.from_strings(NAMES, ["b'c'ac", "c'a'ba", "a'b'cb", "cab"])
    assert Presentation.from_json(p.to_json()) == p
    assert p.to_dict() == {
        "generators": ["a", "b", "c"],
        "relators": ["b'c'ac", "c'a'ba", "a'b'cb", "cab"],
    }
    assert str(p) == "< a, b, c | b'c'ac, c'a'ba, a'b'cb, cab >"

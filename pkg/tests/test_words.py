import pytest
from hypothesis import given, strategies as st

from privword.words import (
    Word,
    borders,
    count_occurrences,
    is_privileged_naive,
    leading_run,
    longest_privileged_prefix_naive,
    longest_proper_privileged_prefix,
    privileged_chain,
    trailing_run,
)

from .conftest import binary_words

# Length-0..6 binary privileged words, as listed in the paper's introduction.
LISTED = set(
    "0 1 00 11 000 010 101 111 0000 0110 1001 1111 "
    "00000 00100 01010 01110 10001 10101 11011 11111 "
    "000000 001100 010010 011110 100001 101101 110011 111111".split()
) | {""}


def test_word_parse_and_format():
    w = Word.parse("0120", "012")
    assert w.symbols == (0, 1, 2, 0) and w.k == 3
    assert str(w) == "0120"
    assert w.format("abc") == "abca"
    assert isinstance(w[1:3], Word) and str(w[1:3]) == "12"
    assert w[2] == 2
    assert str(Word.parse("01") * 3) == "010101"
    assert str(Word.parse("0") + Word.parse("11")) == "011"
    assert len(Word(())) == 0


def test_word_rejects_bad_symbols():
    with pytest.raises(ValueError):
        Word((0, 2), k=2)
    with pytest.raises(ValueError):
        Word.parse("012")
    with pytest.raises(ValueError):
        Word.parse("00", "00")


@given(st.text(alphabet="abc", max_size=30))
def test_parse_roundtrip(text):
    assert Word.parse(text, "abc").format("abc") == text


@pytest.mark.parametrize("w, want", [("000", [1, 2]), ("01", []), ("0110", [1]),
                                     ("", []), ("0", []), ("01010", [1, 3])])
def test_borders(w, want):
    assert borders(w) == want
    assert borders(Word.parse(w)) == want


@pytest.mark.parametrize("u, w, want", [("00", "000", 2), ("0", "010", 2),
                                        ("101", "10101", 2), ("11", "0", 0)])
def test_count_occurrences(u, w, want):
    assert count_occurrences(u, w) == want


def test_count_occurrences_empty_pattern():
    with pytest.raises(ValueError):
        count_occurrences("", "01")


@given(st.text("01", min_size=1, max_size=4), st.text("01", max_size=20), st.text("01", max_size=20))
def test_occurrences_monotone_under_extension(u, w, ext):
    assert count_occurrences(u, w + ext) >= count_occurrences(u, w)


@pytest.mark.parametrize("w, want", [("", True), ("1", True), ("0110", True),
                                     ("01", False), ("00101100", True), ("0010", False)])
def test_naive_examples(w, want):
    assert is_privileged_naive(w) is want
    assert is_privileged_naive(Word.parse(w)) is want


def test_naive_matches_listed_words():
    got = {w for w in binary_words(6) if is_privileged_naive(w)}
    assert got == LISTED


def test_naive_on_tuples_and_bytes():
    assert is_privileged_naive((0, 1, 1, 0))
    assert not is_privileged_naive(b"\x00\x01")


@pytest.mark.parametrize("i", range(21))
def test_unary_words_privileged(i):
    assert is_privileged_naive("0" * i)
    assert is_privileged_naive("b" * i)


@pytest.mark.parametrize("w, want", [("00", "0"), ("00101100", "00"), ("010010", "010"),
                                     ("0", ""), ("01", "0")])
def test_longest_proper_privileged_prefix(w, want):
    assert longest_proper_privileged_prefix(w) == want


def test_longest_proper_privileged_prefix_preserves_type():
    u = longest_proper_privileged_prefix(Word.parse("010010"))
    assert isinstance(u, Word) and str(u) == "010"


def test_longest_proper_privileged_prefix_empty():
    with pytest.raises(ValueError):
        longest_proper_privileged_prefix("")


def test_longest_privileged_prefix_not_proper():
    assert longest_privileged_prefix_naive("0110") == 4
    assert longest_privileged_prefix_naive("0010") == 2


@pytest.mark.parametrize("w, want", [("0", ["0"]), ("010", ["0", "010"]),
                                     ("010010", ["0", "010", "010010"]), ("", [""])])
def test_privileged_chain(w, want):
    assert privileged_chain(w) == want


def test_privileged_chain_links():
    for w in binary_words(10, min_len=2):
        if is_privileged_naive(w):
            chain = privileged_chain(w)
            for a, b in zip(chain, chain[1:]):
                assert longest_proper_privileged_prefix(b) == a


def test_privileged_chain_rejects():
    with pytest.raises(ValueError):
        privileged_chain("01")


@pytest.mark.parametrize("w, lead, trail", [("00100", ("0", 2), ("0", 2)),
                                            ("0111", ("0", 1), ("1", 3)),
                                            ("1", ("1", 1), ("1", 1))])
def test_runs(w, lead, trail):
    assert leading_run(w) == lead
    assert trailing_run(w) == trail


def test_runs_on_word_codes():
    assert leading_run(Word.parse("0111")) == (0, 1)
    assert trailing_run(Word.parse("0111")) == (1, 3)


def test_runs_empty():
    with pytest.raises(ValueError):
        leading_run("")
    with pytest.raises(ValueError):
        trailing_run("")


def test_shared_memo_is_consistent():
    memo = {}
    fresh = [is_privileged_naive(w) for w in binary_words(9)]
    shared = [is_privileged_naive(w, memo) for w in binary_words(9)]
    assert fresh == shared

from itertools import combinations, product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from insertion_complex.words import (
    GuardExceeded,
    WordSyntaxError,
    alphabet,
    commutes,
    concat,
    count_power_embeddings,
    embeds_uniquely,
    format_word,
    from_runs,
    insertion_decompositions,
    is_subword,
    parse_word,
    primitive_root,
    reverse,
    run_length,
    subword_interval,
    subwords,
)

from conftest import words_st


def subsequences(v: str) -> set[str]:
    """Independent oracle: every index subset of ``v``."""
    return {"".join(v[i] for i in idx) for k in range(len(v) + 1) for idx in combinations(range(len(v)), k)}


def power_sequences(u: str, v: str) -> set[tuple[int, ...]]:
    """Distinct run-power vectors of the index subsets of ``v`` that spell ``u``."""
    runs = run_length(v)
    owner = [i for i, (_, r) in enumerate(runs) for _ in range(r)]
    out = set()
    for k in range(len(v) + 1):
        for idx in combinations(range(len(v)), k):
            if "".join(v[i] for i in idx) == u:
                q = [0] * len(runs)
                for i in idx:
                    q[owner[i]] += 1
                out.add(tuple(q))
    return out


# -- examples ------------------------------------------------------------------

def test_concat_examples():
    assert concat("ab", "a") == "aba"
    assert concat("", "xyz") == "xyz"
    assert concat(concat("a", "b"), "a") == concat("a", concat("b", "a")) == "aba"


def test_is_subword_examples():
    assert is_subword("abc", "aabcaba")
    assert is_subword("", "anything")
    assert not is_subword("ba", "ab")


def test_run_length_examples():
    assert run_length("aabba") == [("a", 2), ("b", 2), ("a", 1)]
    assert run_length("") == []
    assert run_length("abab") == [("a", 1), ("b", 1), ("a", 1), ("b", 1)]


def test_reverse_examples():
    assert reverse("aab") == "baa"
    assert reverse("") == ""
    assert reverse("aba") == "aba"


def test_insertion_decompositions_examples():
    assert insertion_decompositions("ab", "aab") == [("", "a", "ab"), ("a", "a", "b")]
    assert insertion_decompositions("ab", "ab") == []
    assert insertion_decompositions("ab", "abc") == [("ab", "c", "")]


def test_count_power_embeddings_examples():
    assert count_power_embeddings("abc", "aabcaba") == 1
    assert count_power_embeddings("abca", "aabcaba") == 2
    assert count_power_embeddings("ab", "abab") == 3
    assert power_sequences("ab", "abab") == {(1, 1, 0, 0), (1, 0, 0, 1), (0, 0, 1, 1)}


def test_embeds_uniquely_examples():
    assert embeds_uniquely("abc", "aabcaba")
    assert embeds_uniquely("", "abcab")
    assert not embeds_uniquely("ab", "abab")


def test_subword_interval_examples():
    assert subword_interval("ab", "abab") == {"ab", "aab", "aba", "bab", "abb", "abab"}
    assert subword_interval("abc", "abc") == {"abc"}
    assert subword_interval("", "ab") == {"", "a", "b", "ab"}


def test_subword_interval_rejects_non_subword_and_guard():
    with pytest.raises(ValueError):
        subword_interval("ba", "ab")
    with pytest.raises(GuardExceeded):
        subword_interval("", "ab" * 6, limit=10)


def test_subword_interval_guard_from_environment(monkeypatch):
    monkeypatch.setenv("INSCOMPLEX_MAX_INTERVAL_LENGTH", "3")
    with pytest.raises(GuardExceeded):
        subword_interval("", "abab")


def test_commutes_and_primitive_root_examples():
    assert commutes("ab", "abab") and primitive_root("abab") == "ab"
    assert not commutes("ab", "ba")
    assert primitive_root("aaa") == "a"
    assert primitive_root("aba") == "aba"
    assert primitive_root("") == ""


def test_word_text_syntax():
    assert parse_word("_") == ""
    assert format_word("") == "_"
    assert parse_word("ab1") == "ab1"
    for bad in ("a b", "a(b", "a#", "a_b", ""):
        with pytest.raises(WordSyntaxError):
            parse_word(bad)


def test_alphabet_accepts_generators():
    assert alphabet(w for w in ["ba", "c", ""]) == ("a", "b", "c")


# -- properties ----------------------------------------------------------------

@given(words_st("ab", 5), words_st("ab", 5), words_st("ab", 5))
def test_subword_is_a_partial_order(u, v, w):
    assert is_subword(u, u)
    if is_subword(u, v) and is_subword(v, u):
        assert u == v
    if is_subword(u, v) and is_subword(v, w):
        assert is_subword(u, w)


@given(words_st("abc", 12))
def test_run_length_round_trip(w):
    runs = run_length(w)
    assert from_runs(runs) == w
    assert all(a != b for (a, _), (b, _) in zip(runs, runs[1:]))
    assert all(r > 0 for _, r in runs)


def test_commutes_with_a_symbol_iff_power():
    # ax = xa  iff  x = a^t, over all x of length <= 8
    for n in range(9):
        for letters in product("ab", repeat=n):
            x = "".join(letters)
            assert commutes("a", x) == (x == "a" * n)


@given(words_st("ab", 5), words_st("ab", 6))
def test_insertion_decompositions_reconstruct(u, v):
    out = insertion_decompositions(u, v)
    if out:
        assert len(v) == len(u) + 1
    for x, a, y in out:
        assert x + y == u and x + a + y == v


@given(words_st("ab", 6), words_st("ab", 10))
def test_count_power_embeddings_positive_iff_subsequence(u, v):
    assert (count_power_embeddings(u, v) >= 1) == (u in subsequences(v))


@given(words_st("abc", 4), words_st("abc", 8))
def test_count_power_embeddings_matches_enumeration(u, v):
    assert count_power_embeddings(u, v) == len(power_sequences(u, v))


@given(words_st("abc", 9))
def test_subwords_match_index_subsets(w):
    assert subwords(w) == subsequences(w)


@given(st.data())
def test_subword_interval_matches_filter(data):
    w_max = data.draw(words_st("ab", 7))
    w_min = data.draw(st.sampled_from(sorted(subsequences(w_max))))
    expected = {w for w in subsequences(w_max) if w_min in subsequences(w)}
    assert subword_interval(w_min, w_max) == expected


@given(words_st("ab", 8))
def test_primitive_root_generates(w):
    z = primitive_root(w)
    if w:
        assert len(w) % len(z) == 0 and z * (len(w) // len(z)) == w
        assert primitive_root(z) == z

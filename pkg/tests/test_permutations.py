import math
from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from schubert_clans import permutations as P

from conftest import all_perms, bruhat_leq_pairs, inversions

perms_strategy = st.integers(1, 7).flatmap(
    lambda n: st.permutations(range(1, n + 1))
).map(tuple)


# construction and basics

def test_identity_and_longest():
    assert P.identity(3) == (1, 2, 3)
    assert P.identity(1) == (1,)
    assert P.longest(5) == (5, 4, 3, 2, 1)
    assert P.longest(2) == (2, 1)
    assert P.longest(1) == (1,)
    assert P.length(P.longest(5)) == 10
    with pytest.raises(ValueError):
        P.identity(0)
    with pytest.raises(ValueError):
        P.perm([1, 1, 3])


def test_compose():
    assert P.compose((5, 4, 3, 2, 1), (3, 5, 2, 4, 1)) == (3, 1, 4, 2, 5)
    w = (2, 4, 1, 3)
    assert P.compose(w, P.identity(4)) == w
    assert P.compose((2, 1), (2, 1)) == (1, 2)
    with pytest.raises(ValueError):
        P.compose((1, 2), (1, 2, 3))


@given(perms_strategy)
def test_inverse_roundtrip(w):
    assert P.compose(w, P.inverse(w)) == P.identity(len(w))
    assert P.compose(P.inverse(w), w) == P.identity(len(w))


def test_length_frozen_values():
    # brute counts done by hand: 35241 has inversion pairs
    # (3,2),(3,1),(5,2),(5,4),(5,1),(2,1),(4,1)
    assert P.length((3, 5, 2, 4, 1)) == 7
    assert P.length((1, 4, 2, 5, 3)) == 3
    assert P.length(P.identity(6)) == 0


@given(perms_strategy)
def test_length_is_inversion_count(w):
    assert P.length(w) == inversions(w)


def test_rank():
    assert P.rank((2, 1, 4, 3), 2, 2) == 2
    w = (3, 1, 4, 2)
    assert P.rank(w, 4, 4) == 4
    for i in range(1, 5):
        for j in range(1, 5):
            assert P.rank(P.identity(4), i, j) == min(i, j)
            assert P.rank(w, i, j) == sum(1 for k in range(i) if w[k] <= j)
    with pytest.raises(IndexError):
        P.rank(w, 0, 1)
    with pytest.raises(IndexError):
        P.rank(w, 1, 5)


def test_rank_matrix_monotone():
    w = (3, 5, 2, 4, 1)
    m = P.rank_matrix(w)
    for i in range(5):
        for j in range(5):
            assert m[i][j] == P.rank(w, i + 1, j + 1)
            if i:
                assert m[i][j] >= m[i - 1][j]
            if j:
                assert m[i][j] >= m[i][j - 1]


# Bruhat order: two library definitions against an independent closure oracle

@pytest.mark.parametrize("n", [2, 3, 4])
def test_bruhat_definitions_against_closure(n):
    leq = bruhat_leq_pairs(n)
    for u in all_perms(n):
        for v in all_perms(n):
            want = (u, v) in leq
            assert P.bruhat_leq_rank(u, v) == want
            assert P.bruhat_leq_prefix(u, v) == want


def test_bruhat_definitions_agree_on_s5():
    # the closure oracle is slow at n = 5; the two library definitions must
    # still agree pairwise on all of S_5
    perms = all_perms(5)
    matrices = {w: P.rank_matrix(w) for w in perms}
    for u in perms:
        ru = matrices[u]
        for v in perms:
            rv = matrices[v]
            by_rank = all(
                ru[i][j] >= rv[i][j] for i in range(5) for j in range(5)
            )
            assert by_rank == P.bruhat_leq_prefix(u, v)


def test_bruhat_examples():
    assert P.bruhat_leq_rank((1, 4, 2, 5, 3), (3, 5, 2, 4, 1))
    assert P.bruhat_leq_prefix((1, 4, 2, 5, 3), (3, 5, 2, 4, 1))
    for w in all_perms(4):
        assert P.bruhat_leq_rank(P.identity(4), w)
    assert not P.bruhat_leq_rank((2, 1, 3, 4, 5), (1, 2, 3, 4, 5))
    with pytest.raises(ValueError):
        P.bruhat_leq_rank((1, 2), (1, 2, 3))


# Lehmer codes

def test_code_frozen_values():
    assert P.code((3, 1, 4, 2, 5)) == (2, 0, 1, 0, 0)
    assert P.code(P.identity(4)) == (0, 0, 0, 0)
    assert P.code((5, 4, 3, 2, 1)) == (4, 3, 2, 1, 0)


def test_code_to_perm():
    assert P.code_to_perm((2, 0, 1, 0, 0)) == (3, 1, 4, 2, 5)
    assert P.code_to_perm((0, 0, 0)) == (1, 2, 3)
    assert P.code_to_perm((4, 3, 2, 1)) == (5, 4, 3, 2, 1)
    assert P.code_to_perm(()) == (1,)
    with pytest.raises(ValueError):
        P.code_to_perm((1, -1))


@given(perms_strategy)
def test_code_roundtrip_and_sum(w):
    assert P.code_to_perm(P.code(w)) == w
    assert sum(P.code(w)) == P.length(w)


@given(st.lists(st.integers(0, 6), max_size=6))
def test_code_to_perm_accepts_any_code(c):
    # defining property: the code of the result is c extended by zeros
    c = tuple(c)
    w = P.code_to_perm(c)
    got = P.code(w)
    assert len(got) >= max(len(c), 1)
    assert got == c + (0,) * (len(got) - len(c))


# reduced words

def test_reduced_word_canonical():
    assert P.reduced_word(P.identity(4)) == ()
    assert P.reduced_word((1, 3, 2, 4)) == (2,)
    word = P.reduced_word((3, 2, 1))
    assert word == (1, 2, 1)
    assert P.word_to_perm(word, 3) == (3, 2, 1)


@given(perms_strategy)
def test_reduced_word_composes(w):
    word = P.reduced_word(w)
    assert len(word) == P.length(w)
    assert P.word_to_perm(word, len(w)) == w


def test_all_reduced_words():
    assert P.all_reduced_words((3, 2, 1)) == frozenset({(1, 2, 1), (2, 1, 2)})
    assert P.all_reduced_words((2, 1, 3)) == frozenset({(1,)})
    assert P.all_reduced_words(P.identity(3)) == frozenset({()})
    for w in all_perms(4):
        words = P.all_reduced_words(w)
        assert P.reduced_word(w) in words
        for word in words:
            assert len(word) == P.length(w)
            assert P.word_to_perm(word, 4) == w


def test_all_reduced_words_guard():
    from schubert_clans.guards import GuardError

    with pytest.raises(GuardError):
        P.all_reduced_words(P.longest(6))  # length 15 > default guard 12
    # explicit override allows it
    assert len(P.all_reduced_words(P.longest(5), guard=10)) == 768


def test_longest_complement_identity():
    for n in range(1, 6):
        top = n * (n - 1) // 2
        for w in all_perms(n):
            assert P.length(P.compose(P.longest(n), w)) == top - P.length(w)


# shuffles

def test_descending_shuffle():
    assert P.is_descending_shuffle((3, 5, 2, 4, 1), 3)
    assert not P.is_descending_shuffle((3, 1, 4, 2, 5), 3)
    assert not P.is_descending_shuffle(P.identity(5), 1)
    assert P.is_descending_shuffle(P.longest(5), 2)
    with pytest.raises(ValueError):
        P.is_descending_shuffle((1, 2), 3)


def test_ascending_shuffle():
    assert P.is_ascending_shuffle((1, 4, 2, 5, 3), 3)
    assert P.is_ascending_shuffle(P.identity(5), 2)
    assert not P.is_ascending_shuffle((3, 2, 1, 4, 5), 1)


@pytest.mark.parametrize("n,p", [(4, 2), (5, 1), (5, 3)])
def test_shuffles_against_brute_force(n, p):
    def desc(w):
        low = [x for x in w if x <= p]
        high = [x for x in w if x > p]
        return low == sorted(low, reverse=True) and high == sorted(high, reverse=True)

    def asc(w):
        low = [x for x in w if x <= p]
        high = [x for x in w if x > p]
        return low == sorted(low) and high == sorted(high)

    descs = [w for w in all_perms(n) if P.is_descending_shuffle(w, p)]
    ascs = [w for w in all_perms(n) if P.is_ascending_shuffle(w, p)]
    assert descs == [w for w in all_perms(n) if desc(w)]
    assert ascs == [w for w in all_perms(n) if asc(w)]
    assert len(descs) == comb(n, p)
    assert len(ascs) == comb(n, p)


# enumeration by length

def test_enumerate_by_length():
    assert len(P.enumerate_by_length(5, 6)) == 20
    assert P.enumerate_by_length(4, 0) == [P.identity(4)]
    assert P.enumerate_by_length(3, 3) == [(3, 2, 1)]
    assert P.enumerate_by_length(3, 7) == []


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_enumerate_by_length_against_filter(n):
    total = 0
    for k in range(n * (n - 1) // 2 + 1):
        got = P.enumerate_by_length(n, k)
        want = sorted(w for w in all_perms(n) if inversions(w) == k)
        assert got == want  # content and deterministic lexicographic order
        total += len(got)
    assert total == math.factorial(n)


def test_enumerate_guard():
    from schubert_clans.guards import GuardError

    with pytest.raises(GuardError):
        P.enumerate_by_length(11, 3)


# text round-trip

def test_parse_format():
    assert P.parse_perm("35241") == (3, 5, 2, 4, 1)
    assert P.parse_perm("3,5,2,4,1") == (3, 5, 2, 4, 1)
    assert P.format_perm((3, 5, 2, 4, 1)) == "35241"
    big = tuple(range(1, 13))
    assert P.format_perm(big) == "1,2,3,4,5,6,7,8,9,10,11,12"
    assert P.parse_perm(P.format_perm(big)) == big
    with pytest.raises(ValueError):
        P.parse_perm("31")
    with pytest.raises(ValueError):
        P.parse_perm("")


@given(perms_strategy)
def test_parse_format_roundtrip(w):
    assert P.parse_perm(P.format_perm(w)) == w


def test_trim_pad():
    assert P.trim((2, 1, 3, 4)) == (2, 1)
    assert P.trim((1, 2, 3)) == (1,)
    assert P.pad((2, 1), 4) == (2, 1, 3, 4)
    with pytest.raises(ValueError):
        P.pad((2, 1, 3), 2)

from math import factorial, prod

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from klrspecht.perms import (
    POLICY,
    bruhat_leq,
    braid_graph,
    compose,
    identity,
    inverse,
    is_fully_commutative,
    length,
    min_coset_reps,
    preferred_word,
    word_to_perm,
)
from oracles import all_perms, brute_min_coset_reps, inversions, rank_oracle_bruhat


def test_policy_name():
    assert POLICY == "leftmost-descent"


def test_preferred_word_examples():
    assert preferred_word(identity(4)) == ()
    assert tuple(preferred_word((2, 3, 1))) == (1, 2)


@pytest.mark.parametrize("d", range(0, 7))
def test_preferred_word_exhaustive(d):
    for w in all_perms(d):
        word = preferred_word(w)
        assert word_to_perm(word, d) == w
        assert len(word) == length(w) == inversions(w)


perms = st.integers(1, 9).flatmap(lambda d: st.permutations(list(range(1, d + 1))).map(tuple))


@given(perms)
@settings(max_examples=300)
def test_preferred_word_length_random(w):
    assert len(preferred_word(w)) == inversions(w)
    assert word_to_perm(preferred_word(w), len(w)) == w


@given(perms, perms)
def test_compose_and_inverse(u, w):
    if len(u) != len(w):
        return
    assert compose(u, inverse(u)) == identity(len(u))
    assert compose(u, w)[0] == u[w[0] - 1]


@pytest.mark.parametrize("d", range(1, 5))
def test_bruhat_matches_rank_oracle(d):
    ps = all_perms(d)
    for u in ps:
        assert bruhat_leq(identity(d), u)
        for w in ps:
            assert bruhat_leq(u, w) == rank_oracle_bruhat(u, w)
            if u != w and bruhat_leq(u, w):
                assert not bruhat_leq(w, u)


def test_bruhat_example():
    assert bruhat_leq((2, 1, 3), (2, 3, 1))


@pytest.mark.parametrize("comp", [(3,), (2, 1), (1, 1, 1), (2, 2), (1, 2, 1), (3, 2), (2, 1, 2)])
def test_min_coset_reps_against_filter(comp):
    reps = min_coset_reps(comp)
    assert sorted(reps) == brute_min_coset_reps(comp)
    assert len(reps) == factorial(sum(comp)) // prod(factorial(p) for p in comp)


def test_min_coset_reps_examples():
    assert min_coset_reps((4,)) == [identity(4)]
    assert len(min_coset_reps((2, 1))) == 3
    assert len(min_coset_reps((1, 1, 1))) == 6


@pytest.mark.parametrize("k", range(1, 7))
def test_two_part_coset_reps_fully_commutative(k):
    for s in range(k + 1):
        assert all(is_fully_commutative(w) for w in min_coset_reps((s, k - s)))


def test_fully_commutative_examples():
    assert not is_fully_commutative(word_to_perm((1, 2, 1), 3))
    assert is_fully_commutative(identity(5))


@pytest.mark.parametrize("d", range(1, 6))
def test_fully_commutative_iff_no_braid_edges(d):
    for w in all_perms(d):
        words, edges = braid_graph(w)
        assert all(word_to_perm(x, d) == w for x in words)
        assert is_fully_commutative(w) == (not any(label == "braid" for *_, label in edges))


def test_braid_graph_small():
    words, edges = braid_graph(word_to_perm((1, 2, 1), 3))
    assert sorted(map(tuple, words)) == [(1, 2, 1), (2, 1, 2)]
    assert [lab for *_, lab in edges] == ["braid"]
    words, edges = braid_graph(identity(3))
    assert list(map(tuple, words)) == [()] and edges == []


def test_reduced_word_count_longest_s4():
    w0 = tuple(range(4, 0, -1))
    words, _ = braid_graph(w0)
    assert len(words) == 16

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from multautomata import (
    RATIONAL,
    LinearRepresentation,
    MismatchError,
    NotProperError,
    SeriesPolynomial,
    coefficient,
    constant_rep,
    is_proper,
    letter_rep,
    rank,
    rep_cauchy,
    rep_scale_left,
    rep_star,
    rep_sum,
    truncate,
    zero_rep,
)
from multautomata.density import SAlphaN, TN, tau_from_shifts
from multautomata.series import words_up_to

from conftest import ALL_SEMIRINGS
from oracles import cauchy_coefficient, geometric_power, random_small_rep, star_coefficient


def proper_rep(sr, dim, alphabet, seed):
    """Random rep with λ and γ on disjoint coordinates, hence λγ = 0."""
    r = random_small_rep(sr, dim, alphabet, seed)
    lam = tuple(x if i % 2 == 0 else sr.zero for i, x in enumerate(r.lam))
    gamma = tuple(x if i % 2 == 1 else sr.zero for i, x in enumerate(r.gamma))
    return LinearRepresentation(sr, r.alphabet, lam, r.mu, gamma)


def S(alpha, n):
    return tau_from_shifts(SAlphaN(alpha, n))


def test_sum_examples():
    a = letter_rep(RATIONAL, "ab", "a")
    assert coefficient(rep_sum(a, a), "a") == 2
    r = random_small_rep(RATIONAL, 3, "ab", seed=1)
    assert truncate(rep_sum(r, zero_rep(RATIONAL, "ab")), 4) == truncate(r, 4)
    assert rank(rep_sum(S(2, 2), S(3, 3))) == 5


def test_cauchy_examples():
    a, b = letter_rep(RATIONAL, "ab", "a"), letter_rep(RATIONAL, "ab", "b")
    ab = rep_cauchy(a, b)
    assert coefficient(ab, "ab") == 1 and coefficient(ab, "ba") == 0
    assert truncate(rep_cauchy(S(2, 1), S(2, 1)), 4) == truncate(S(2, 2), 4)
    assert rank(rep_cauchy(S(2, 2), S(2, 2))) == 4


def test_square_of_geometric_matches_convolution():
    # 1/(1-2a)^2 has coefficient (p+1) 2^p
    sq = rep_cauchy(S(2, 1), S(2, 1))
    for p in range(6):
        assert coefficient(sq, "a" * p) == geometric_power(2, 2, p) == (p + 1) * 2**p


def test_star_examples():
    a = letter_rep(RATIONAL, "a", "a")
    assert truncate(rep_star(a), 3) == SeriesPolynomial(RATIONAL, "a", {"": 1, "a": 1, "aa": 1, "aaa": 1})
    ab = rep_cauchy(letter_rep(RATIONAL, "ab", "a"), letter_rep(RATIONAL, "ab", "b"))
    ab_star = rep_star(ab)
    assert coefficient(ab_star, "abab") == 1
    for w in words_up_to("ab", 5):
        expected = 1 if w == "ab" * (len(w) // 2) else 0
        assert coefficient(ab_star, w) == expected
    for n in (2, 3):
        assert rank(rep_star(tau_from_shifts(TN(n)))) == n + 1


def test_star_rejects_improper():
    with pytest.raises(NotProperError):
        rep_star(constant_rep(RATIONAL, "a", 1))
    improper = rep_star(S(2, 1), allow_improper=True)
    assert improper.dim == 2


def test_scale_examples():
    a = letter_rep(RATIONAL, "ab", "a")
    assert coefficient(rep_scale_left(3, a), "a") == 3
    r = random_small_rep(RATIONAL, 3, "ab", seed=2)
    assert truncate(rep_scale_left(1, r), 4) == truncate(r, 4)
    assert len(truncate(rep_sum(r, rep_scale_left(-1, r)), 4)) == 0


def test_mismatch():
    with pytest.raises(MismatchError):
        rep_sum(letter_rep(RATIONAL, "a", "a"), letter_rep(RATIONAL, "ab", "a"))
    from multautomata import zmod

    with pytest.raises(MismatchError):
        rep_cauchy(letter_rep(RATIONAL, "a", "a"), letter_rep(zmod(3), "a", "a"))


def test_zero_dimensional_operands():
    z = zero_rep(RATIONAL, "ab")
    a = letter_rep(RATIONAL, "ab", "a")
    assert rep_cauchy(z, a).dim == 2 and len(truncate(rep_cauchy(z, a), 3)) == 0
    assert len(truncate(rep_cauchy(a, z), 3)) == 0
    assert truncate(rep_star(z), 2) == SeriesPolynomial(RATIONAL, "ab", {"": 1})


semirings = st.sampled_from(ALL_SEMIRINGS)
seeds = st.integers(0, 10**6)
dims = st.integers(1, 3)


@settings(max_examples=25, deadline=None)
@given(semirings, seeds, dims, dims)
def test_sum_and_cauchy_soundness(sr, seed, n, m):
    r = random_small_rep(sr, n, "ab", seed)
    s = random_small_rep(sr, m, "ab", seed + 1)
    total, prod = rep_sum(r, s), rep_cauchy(r, s)
    assert total.dim == prod.dim == n + m
    f = lambda w: coefficient(r, w)  # noqa: E731
    g = lambda w: coefficient(s, w)  # noqa: E731
    for w in words_up_to("ab", 5):
        assert sr.eq(coefficient(total, w), sr.add(f(w), g(w)))
        assert sr.eq(coefficient(prod, w), cauchy_coefficient(sr, f, g, w))


@settings(max_examples=20, deadline=None)
@given(semirings, seeds, dims)
def test_star_soundness(sr, seed, m):
    s = proper_rep(sr, m, "ab", seed)
    assert is_proper(s)
    st_ = rep_star(s)
    assert st_.dim == m + 1
    f = lambda w: coefficient(s, w)  # noqa: E731
    for w in words_up_to("ab", 4):
        assert sr.eq(coefficient(st_, w), star_coefficient(sr, f, w))


@settings(max_examples=15, deadline=None)
@given(semirings, seeds)
def test_associativity(sr, seed):
    r, s, t = (random_small_rep(sr, 2, "ab", seed + k) for k in range(3))
    assert rep_sum(rep_sum(r, s), t) == rep_sum(r, rep_sum(s, t))
    left, right = rep_cauchy(rep_cauchy(r, s), t), rep_cauchy(r, rep_cauchy(s, t))
    assert left.dim == right.dim == 6
    assert truncate(left, 4) == truncate(right, 4)


@settings(max_examples=15, deadline=None)
@given(semirings, seeds, dims, dims)
def test_cauchy_keeps_properness(sr, seed, n, m):
    r = proper_rep(sr, n, "ab", seed)
    s = random_small_rep(sr, m, "ab", seed + 7)
    assert is_proper(rep_cauchy(r, s))

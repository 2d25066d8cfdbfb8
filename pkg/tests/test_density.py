import json
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

import pytest

from multautomata import (
    RATIONAL,
    DensityReport,
    Monomial,
    SAlphaN,
    SGeo,
    TN,
    TrialConfig,
    density_experiment,
    random_rep,
    rank,
    rep_cauchy,
    rep_star,
    rep_sum,
    tau_from_shifts,
    truncate,
)
from multautomata.density import splitmix64
from multautomata.series import coefficient

from oracles import geometric_power


def test_geometric_truncation():
    expected = {"": 1, "a": 2, "aa": 4, "aaa": 8}
    assert dict(truncate(tau_from_shifts(SAlphaN(2, 1)), 3).items()) == expected


def test_tn_truncation():
    assert set(truncate(tau_from_shifts(TN(2)), 5).support()) == {"a", "aaa", "aaaaa"}


@pytest.mark.parametrize("alpha", [2, -3, Fraction(1, 2)])
@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_salphan_matches_convolution_oracle(alpha, n):
    r = tau_from_shifts(SAlphaN(alpha, n))
    assert r.dim == n
    for p in range(8):
        assert coefficient(r, "a" * p) == geometric_power(alpha, n, p)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_periodic_series(n):
    t, g = tau_from_shifts(TN(n)), tau_from_shifts(SGeo(n))
    assert t.dim == g.dim == n
    for p in range(3 * n + 1):
        assert coefficient(t, "a" * p) == (1 if p % n == n - 1 else 0)
        assert coefficient(g, "a" * p) == (1 if p % n == 0 else 0)


def test_monomial_and_ambient_alphabet():
    m = tau_from_shifts(Monomial("b", 3), "abc")
    assert m.dim == 4
    assert dict(truncate(m, 5).items()) == {"bbb": 1}
    assert rank(m) == 4


@pytest.mark.parametrize("series", [SAlphaN(0, 2), SAlphaN(2, 0), TN(0), SGeo(0), Monomial("a", -1)])
def test_invalid_parameters(series):
    with pytest.raises(ValueError):
        tau_from_shifts(series)


def test_rank_of_geometric_powers():
    for n in range(1, 6):
        assert rank(tau_from_shifts(SAlphaN(2, n))) == n


@pytest.mark.parametrize("n", [1, 2, 3, 4])
@pytest.mark.parametrize("m", [1, 2, 3, 4])
def test_sharpness_witnesses(n, m):
    S2n, S3m, S2m = (tau_from_shifts(SAlphaN(a, k)) for a, k in ((2, n), (3, m), (2, m)))
    assert rank(rep_sum(S2n, S3m)) == n + m
    assert rank(rep_cauchy(S2n, S2m)) == n + m
    if n >= 2:
        assert rank(rep_star(tau_from_shifts(TN(n)))) == n + 1


def test_non_generic_pair_is_not_minimal():
    s = tau_from_shifts(SAlphaN(2, 1))
    assert rank(rep_sum(s, s)) == 1 < 2


def test_random_rep():
    a, b = random_rep(3, "ab", 5, seed=1), random_rep(3, "ab", 5, seed=1)
    assert a == b and a.dim == 3 and a.semiring == RATIONAL
    values = list(a.lam) + list(a.gamma) + [x for m in a.mu.values() for row in m for x in row]
    assert all(-5 <= x <= 5 and x.denominator == 1 for x in values)
    for seed in range(10):
        assert random_rep(3, "ab", 50, seed) != random_rep(3, "ab", 50, seed + 1000)
    with pytest.raises(ValueError):
        random_rep(0)


def test_splitmix_reference_values():
    # first outputs of the reference generator seeded with 0
    assert splitmix64(0) == 0xE220A8397B1DCDAF
    assert splitmix64(0x9E3779B97F4A7C15) == 0x6E789E6AA1B965F4


def test_config_validation():
    with pytest.raises(ValueError):
        TrialConfig("product", (2, 2))
    with pytest.raises(ValueError):
        TrialConfig("sum", (2,))
    with pytest.raises(ValueError):
        TrialConfig("sum", (2, 2), trials=0)
    with pytest.raises(ValueError):
        TrialConfig("sum", (2, 2), entry_range=0)
    assert TrialConfig("star", (3, 9)).full_dimension == 4
    assert TrialConfig("cauchy", (3, 2)).full_dimension == 5


def test_single_trial_fraction():
    rep = density_experiment(TrialConfig("sum", (2, 2), trials=1, seed=5))
    assert rep.fraction in (0, 1)


def test_small_entry_range_finds_defects():
    # with entries in {-1, 0, 1} and one letter, degenerate draws are common
    rep = density_experiment(TrialConfig("sum", (2, 2), alphabet="a", entry_range=1, trials=60, seed=3))
    assert 0 < rep.fraction < 1
    assert rep.minimal <= rep.trials


def test_order_independence():
    cfg = TrialConfig("cauchy", (2, 2), trials=20, seed=9)
    with ThreadPoolExecutor(4) as pool:
        parallel = density_experiment(cfg, pool.map)
    assert parallel == density_experiment(cfg)


def test_report_json():
    report = DensityReport("star", (2,), 8, 6)
    data = json.loads(report.to_json())
    assert data == {"operation": "star", "dims": [2], "trials": 8, "minimal": 6, "fraction": "3/4"}

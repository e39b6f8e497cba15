"""Surrogates, descriptive statistics, and the mean-equality F-test."""

import math

import numpy as np
import pytest

from cecp import (
    DataError,
    TimeSeries,
    WindowSpec,
    f_survival,
    mean_equality_test,
    shuffle_surrogate,
    slide,
    summarize,
)


def ar1(phi, n, seed):
    rng = np.random.default_rng(seed)
    noise = rng.standard_normal(n)
    values = np.empty(n)
    values[0] = noise[0]
    for t in range(1, n):
        values[t] = phi * values[t - 1] + noise[t]
    return values


class TestShuffleSurrogate:
    def test_length_one_unchanged(self):
        surrogate = shuffle_surrogate(TimeSeries([5.0], name="x"), seed=0)
        assert surrogate.values.tolist() == [5.0]

    def test_multiset_preserved_exactly(self):
        series = TimeSeries(np.random.default_rng(83).random(500))
        surrogate = shuffle_surrogate(series, seed=7)
        assert np.array_equal(np.sort(surrogate.values), np.sort(series.values))

    def test_seed_determinism(self):
        series = TimeSeries(np.random.default_rng(89).random(200))
        a = shuffle_surrogate(series, seed=3)
        b = shuffle_surrogate(series, seed=3)
        c = shuffle_surrogate(series, seed=4)
        assert np.array_equal(a.values, b.values)
        assert not np.array_equal(a.values, c.values)

    def test_labels_dropped(self):
        series = TimeSeries([1.0, 2.0, 3.0], labels=("a", "b", "c"))
        assert shuffle_surrogate(series, seed=0).labels is None

    def test_shuffle_pushes_autocorrelated_input_toward_randomness(self):
        spec = WindowSpec(300, 50)
        higher_h, lower_c = 0, 0
        seeds = range(5)
        for seed in seeds:
            series = TimeSeries(ar1(0.99, 1000, seed), name="ar1")
            original = slide(series, spec)
            surrogate = slide(shuffle_surrogate(series, seed), spec)
            higher_h += surrogate.entropies.mean() > original.entropies.mean()
            lower_c += surrogate.complexities.mean() < original.complexities.mean()
        assert higher_h == len(seeds)
        assert lower_c == len(seeds)


class TestSummarize:
    def test_three_values(self):
        stats = summarize([1.0, 2.0, 3.0])
        assert stats.mean == 2.0 and stats.median == 2.0
        assert stats.std_dev == 1.0
        assert stats.minimum == 1.0 and stats.maximum == 3.0
        assert stats.n == 3

    def test_constant_list(self):
        assert summarize([4.0, 4.0, 4.0]).std_dev == 0.0

    def test_even_count_median_and_std(self):
        stats = summarize([0.2, 0.4, 0.6, 0.9])
        assert abs(stats.mean - 0.525) <= 1e-12
        assert abs(stats.median - 0.5) <= 1e-12
        assert abs(stats.std_dev - 0.29860788111948194) <= 1e-12

    def test_single_value_has_nan_std(self):
        stats = summarize([2.5])
        assert stats.n == 1 and math.isnan(stats.std_dev)

    def test_empty_rejected(self):
        with pytest.raises(DataError):
            summarize([])


class TestMeanEqualityTest:
    def test_identical_groups(self):
        group = [0.3, 1.7, 2.9, 0.4]
        result = mean_equality_test(group, group)
        assert result.f_statistic == 0.0
        assert result.p_value == 1.0

    def test_hand_worked_anova(self):
        result = mean_equality_test([1.0, 2.0, 3.0], [2.0, 3.0, 4.0])
        assert abs(result.f_statistic - 1.5) <= 1e-12
        assert result.df_between == 1 and result.df_within == 4
        # beta-function survival value, cross-checked against scipy.stats.f.sf
        assert abs(result.p_value - 0.2878641347266907) <= 1e-12

    def test_f_equals_squared_pooled_t(self):
        rng = np.random.default_rng(97)
        for _ in range(200):
            a = rng.standard_normal(int(rng.integers(3, 12)))
            b = rng.standard_normal(int(rng.integers(3, 12))) + rng.normal()
            result = mean_equality_test(a, b)
            na, nb = len(a), len(b)
            pooled = (
                ((a - a.mean()) ** 2).sum() + ((b - b.mean()) ** 2).sum()
            ) / (na + nb - 2)
            t = (a.mean() - b.mean()) / math.sqrt(pooled * (1 / na + 1 / nb))
            assert abs(result.f_statistic - t * t) <= 1e-10

    def test_zero_variance_unequal_means(self):
        result = mean_equality_test([1.0, 1.0], [2.0, 2.0])
        assert math.isinf(result.f_statistic)
        assert result.p_value == 0.0
        assert result.applicable

    def test_zero_variance_equal_means_not_applicable(self):
        result = mean_equality_test([2.0, 2.0], [2.0, 2.0])
        assert math.isnan(result.f_statistic)
        assert not result.applicable

    def test_p_value_monotone_in_f(self):
        values = [f_survival(f, 1, 10) for f in (0.0, 0.5, 1.0, 2.0, 5.0, 50.0)]
        assert values[0] == 1.0
        assert all(a > b for a, b in zip(values, values[1:]))
        assert all(0.0 <= v <= 1.0 for v in values)

    def test_groups_need_two_observations(self):
        with pytest.raises(DataError):
            mean_equality_test([1.0], [2.0, 3.0])

    def test_p_matches_monte_carlo_null(self):
        # null simulation at modest size here; the acceptance suite runs 1e6
        rng = np.random.default_rng(101)
        na = nb = 6
        draws = 200_000
        a = rng.standard_normal((draws, na))
        b = rng.standard_normal((draws, nb))
        ma, mb = a.mean(axis=1), b.mean(axis=1)
        ssw = ((a - ma[:, None]) ** 2).sum(axis=1) + ((b - mb[:, None]) ** 2).sum(axis=1)
        f_null = (na * nb / (na + nb)) * (ma - mb) ** 2 / (ssw / (na + nb - 2))
        for f0 in (0.5, 1.0, 2.0, 4.0):
            mc = float((f_null >= f0).mean())
            assert abs(f_survival(f0, 1, na + nb - 2) - mc) < 0.005

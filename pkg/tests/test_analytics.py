import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from citykpi.analytics import (
    histogram,
    holt_fit,
    holt_fit_forecast,
    iqr_outliers,
    group_means,
    pearson_matrix,
    sturges_bins,
)
from citykpi.data import ColumnSchema, Dataset, FeatureMatrix
from citykpi.errors import SeriesTooShortError, TooFewRowsError, TooFewValuesError


def fm(*columns, names=None):
    arr = np.array(columns, dtype=float).T
    names = names or tuple(f"c{i}" for i in range(arr.shape[1]))
    return FeatureMatrix(values=arr, feature_names=tuple(names))


class TestPearson:
    def test_exact_positive_linear(self):
        m = pearson_matrix(fm([1, 2, 3], [2, 4, 6]))
        assert m.values[0, 1] == pytest.approx(1.0)

    def test_exact_negative_linear(self):
        m = pearson_matrix(fm([1, 2, 3], [6, 4, 2]))
        assert m.values[0, 1] == pytest.approx(-1.0)

    def test_half_correlation(self):
        m = pearson_matrix(fm([1, 2, 3], [1, 3, 2]))
        assert m.values[0, 1] == pytest.approx(0.5)

    def test_symmetric_unit_diagonal_bounded(self):
        rng = np.random.default_rng(0)
        m = pearson_matrix(
            FeatureMatrix(values=rng.normal(size=(50, 6)),
                          feature_names=tuple("abcdef"))
        )
        assert np.array_equal(m.values, m.values.T)
        assert np.all(np.diag(m.values) == 1.0)
        assert np.all(np.abs(m.values) <= 1.0 + 1e-12)

    @given(
        st.floats(min_value=-5, max_value=5).filter(lambda a: abs(a) > 1e-3),
        st.floats(min_value=-10, max_value=10),
    )
    def test_affine_gives_sign_of_slope(self, a, b):
        x = np.array([0.5, 1.25, 2.0, 3.5, 7.0])
        m = pearson_matrix(fm(x, a * x + b))
        assert m.values[0, 1] == pytest.approx(math.copysign(1.0, a), abs=1e-9)

    def test_constant_column_flagged_and_zeroed(self):
        m = pearson_matrix(fm([1, 2, 3], [4, 4, 4]))
        assert m.constant_columns == ("c1",)
        assert m.values[0, 1] == 0.0
        assert m.values[1, 1] == 1.0

    def test_too_few_rows(self):
        with pytest.raises(TooFewRowsError):
            pearson_matrix(fm([1], [2]))


class TestGroupMeans:
    def test_head_rows(self, head_dataset):
        summary = group_means(head_dataset)
        g1 = summary.groups[1]["means"]["UNEMPLOYMENT_RATE"]
        g0 = summary.groups[0]["means"]["UNEMPLOYMENT_RATE"]
        assert g1 == pytest.approx((7.1 + 7.4) / 2)  # rows 0 and 4
        assert g0 == pytest.approx((7.2 + 7.5 + 7.7) / 3)  # rows 1-3
        assert summary.groups[1]["count"] == 2
        assert summary.empty_groups == ()

    def test_single_group_flagged(self):
        schema = (ColumnSchema(name="x"), ColumnSchema(name="y", role="target"))
        ds = Dataset(schema=schema, rows=((1.0, 1.0), (2.0, 1.0)))
        summary = group_means(ds)
        assert summary.empty_groups == (0,)
        assert summary.groups[0]["count"] == 0


class TestHistogram:
    def test_two_bins(self):
        h = histogram([0, 1, 2, 3], 2)
        assert h.bin_edges == (0.0, 1.5, 3.0)
        assert h.counts == (2, 2)

    def test_constant_values_single_bin(self):
        h = histogram([7.0, 7.0, 7.0])
        assert len(h.counts) == 1
        assert h.counts[0] == 3
        assert h.bin_edges[0] < 7.0 < h.bin_edges[1]

    def test_max_in_last_closed_bin(self):
        h = histogram([0.0, 10.0], 5)
        assert h.counts[-1] == 1
        assert sum(h.counts) == 2

    def test_sturges_default(self):
        h = histogram(list(range(16)))
        assert len(h.counts) == sturges_bins(16) == 5

    @settings(max_examples=100)
    @given(
        st.lists(st.floats(min_value=-1e4, max_value=1e4), min_size=1, max_size=60),
        st.integers(min_value=1, max_value=12),
    )
    def test_counts_conserve_n(self, values, bins):
        h = histogram(values, bins)
        assert sum(h.counts) == len(values)
        assert list(h.bin_edges) == sorted(set(h.bin_edges))

    def test_needs_values(self):
        with pytest.raises(TooFewValuesError):
            histogram([])


class TestIqrOutliers:
    def test_spec_example(self):
        assert iqr_outliers([1, 2, 3, 4, 100]) == [4]

    def test_no_outliers(self):
        assert iqr_outliers([1, 2, 3, 4]) == []

    def test_all_equal(self):
        assert iqr_outliers([5, 5, 5, 5, 5]) == []

    def test_low_outlier(self):
        assert iqr_outliers([-100, 10, 11, 12, 13]) == [0]

    def test_too_few(self):
        with pytest.raises(TooFewValuesError):
            iqr_outliers([1, 2, 3])


class TestHolt:
    def test_linear_series_exact(self):
        result = holt_fit_forecast([1, 2, 3, 4, 5], 2)
        assert [s.point for s in result.steps] == pytest.approx([6.0, 7.0], abs=1e-12)
        assert all(s.lower == s.point == s.upper for s in result.steps)
        assert result.state.residuals == (0.0, 0.0, 0.0, 0.0)

    def test_constant_series(self):
        result = holt_fit_forecast([5, 5, 5, 5], 3)
        assert [s.point for s in result.steps] == pytest.approx([5.0, 5.0, 5.0])

    def test_interval_width_scales_sqrt_h(self):
        series = [1.0, 2.2, 2.9, 4.3, 4.9, 6.4, 7.0]
        result = holt_fit_forecast(series, 4)
        margins = [s.margin for s in result.steps]
        assert margins[3] == 2 * margins[0]
        widths = [s.upper - s.lower for s in result.steps]
        for h, w in enumerate(widths, start=1):
            assert w == pytest.approx(widths[0] * math.sqrt(h), rel=1e-12)

    def test_interval_width_monotone(self):
        series = [3.0, 1.0, 4.0, 1.0, 5.0, 9.0, 2.0, 6.0]
        result = holt_fit_forecast(series, 6)
        widths = [s.upper - s.lower for s in result.steps]
        assert widths == sorted(widths)
        for s in result.steps:
            assert s.lower <= s.point <= s.upper

    @settings(max_examples=60)
    @given(
        st.floats(min_value=-50, max_value=50),
        st.floats(min_value=-100, max_value=100),
        st.integers(min_value=3, max_value=30),
        st.integers(min_value=1, max_value=10),
    )
    def test_affine_series_exact_property(self, slope, intercept, n, horizon):
        series = [slope * t + intercept for t in range(n)]
        result = holt_fit_forecast(series, horizon, alpha=0.5, beta=0.3)
        for h, step in enumerate(result.steps, start=1):
            expected = slope * (n - 1 + h) + intercept
            assert step.point == pytest.approx(expected, abs=1e-9 + 1e-12 * abs(expected))

    def test_confidence_widens_interval(self):
        series = [1.0, 2.5, 2.7, 4.4, 5.1, 5.8]
        narrow = holt_fit_forecast(series, 2, confidence=0.8)
        wide = holt_fit_forecast(series, 2, confidence=0.99)
        assert wide.steps[0].upper - wide.steps[0].lower > (
            narrow.steps[0].upper - narrow.steps[0].lower
        )

    def test_z_value_at_95(self):
        # z for two-sided 95% must match the fixed constant 1.959964.
        from statistics import NormalDist

        assert NormalDist().inv_cdf(0.975) == pytest.approx(1.959964, abs=1e-6)

    def test_series_too_short(self):
        with pytest.raises(SeriesTooShortError):
            holt_fit_forecast([1.0, 2.0], 1)

    def test_bad_parameters(self):
        with pytest.raises(ValueError):
            holt_fit([1, 2, 3], alpha=0.0, beta=0.5)
        with pytest.raises(ValueError):
            holt_fit_forecast([1, 2, 3], 0)
        with pytest.raises(ValueError):
            holt_fit_forecast([1, 2, 3], 2, confidence=1.0)


def test_demo_dataset_correlation_band(demo_paths):
    """The synthetic stand-in was tuned so its strongest anticorrelation sits
    near the real extract's published -0.77."""
    from citykpi.data import load_dataset
    from citykpi.pipeline import analytics_report

    doc = analytics_report(load_dataset(demo_paths["json"]))
    values = np.array(doc["correlations"]["values"])
    off = values[~np.eye(values.shape[0], dtype=bool)]
    assert off.min() >= -0.82
    assert off.min() == pytest.approx(-0.77, abs=0.05)

import math
from fractions import Fraction as F

import pytest

from engeldim import (
    DomainError,
    SequenceFamily,
    SizeLimitError,
    empirical_cover_fit,
    estimate_dimension,
    formula_quotient,
    log_rational,
    lower_bound_quotient,
    upper_bound_quotient,
)

# sampled levels for closed-form comparisons; the acceptance suite sweeps
# the full range
SAMPLE_LEVELS = (1, 2, 3, 5, 10, 50, 100, 500, 1000)


def closed_form_42(n: int) -> float:
    return n / (2 * (n + 3))


def closed_form_22(n: int) -> float:
    return n / (n + 2)


def closed_form_21(n: int) -> float:
    return n / ((n + 1) * (n + 2) / 2 + n)


# -- formula quotient ------------------------------------------------------


def test_formula_quotient_known_values(fam42, fam22):
    assert formula_quotient(fam42, 1) == pytest.approx(0.125, abs=1e-14)
    assert formula_quotient(fam42, 10) == pytest.approx(10 / 26, abs=1e-14)
    assert formula_quotient(fam22, 2) == pytest.approx(0.5, abs=1e-14)


def test_formula_quotient_matches_closed_forms(fam42, fam22, fam21):
    for fam, closed in ((fam42, closed_form_42), (fam22, closed_form_22),
                        (fam21, closed_form_21)):
        for n in SAMPLE_LEVELS:
            assert formula_quotient(fam, n) == pytest.approx(
                closed(n), rel=1e-12
            )


def test_formula_quotient_validates_level(fam42):
    with pytest.raises(DomainError):
        formula_quotient(fam42, 0)


# -- covering quotient ------------------------------------------------------


def test_upper_bound_quotient_known_values(fam42, fam22):
    # by hand: log 2 / log 64 and log 2 / log 2
    assert upper_bound_quotient(fam42, 1) == pytest.approx(1 / 6, abs=1e-12)
    assert upper_bound_quotient(fam22, 1) == pytest.approx(1.0, abs=1e-12)


def test_upper_bound_approaches_the_formula(fam42):
    diff = abs(upper_bound_quotient(fam42, 1000) - formula_quotient(fam42, 1000))
    assert diff < 0.01


# -- separation quotient -------------------------------------------------------


def test_lower_bound_quotient_known_values(fam42, fam22):
    # by hand: log 2 / log 8192 and log 2 / log 256
    assert lower_bound_quotient(fam42, 2) == pytest.approx(1 / 13, abs=1e-12)
    assert lower_bound_quotient(fam22, 2) == pytest.approx(1 / 8, abs=1e-12)


def test_lower_bound_quotient_undefined_at_level_one(fam42):
    with pytest.raises(DomainError):
        lower_bound_quotient(fam42, 1)


def test_lower_bound_is_nonnegative(test_families):
    for fam in test_families:
        for n in (2, 3, 7, 20):
            assert lower_bound_quotient(fam, n) >= 0


# -- the three sequences together -----------------------------------------------


def test_report_matches_per_level_operations(fam42):
    # the sweep and the standalone evaluations share nothing but formulas
    report = estimate_dimension(fam42, 30)
    for n in range(1, 31):
        assert report.formula[n - 1] == pytest.approx(
            formula_quotient(fam42, n), abs=1e-12
        )
        assert report.upper[n - 1] == pytest.approx(
            upper_bound_quotient(fam42, n), abs=1e-12
        )
        if n == 1:
            assert report.lower[0] is None
        else:
            assert report.lower[n - 1] == pytest.approx(
                lower_bound_quotient(fam42, n), abs=1e-12
            )


def test_quotients_stay_in_the_unit_interval(test_families):
    for fam in test_families:
        report = estimate_dimension(fam, 200)
        values = list(report.formula) + list(report.upper) + [
            v for v in report.lower if v is not None
        ]
        assert all(-1e-12 <= v <= 1 + 1e-12 for v in values)


def test_covering_denominator_identity(test_families):
    # -log delta_n equals the formula denominator minus log 4; both sides
    # arrive by different exact routes
    for fam in test_families:
        for n in range(1, 41):
            den = sum(log_rational(fam.s(k)) for k in range(1, n + 2))
            den += log_rational(fam.s(n + 1)) - log_rational(fam.t(n + 1))
            lhs = -log_rational(fam.diameter_bound(n))
            assert lhs == pytest.approx(den - math.log(4), abs=1e-9)


def test_covering_count_log_is_bounded_by_window_budget(test_families):
    # sum log m_k <= n log 2 + sum log t_k, since m_k < 2 t_k
    for fam in test_families:
        for n in (1, 5, 20, 40):
            lhs = sum(log_rational(fam.branch_count(k)) for k in range(1, n + 1))
            rhs = n * math.log(2) + sum(
                log_rational(fam.t(k)) for k in range(1, n + 1)
            )
            assert lhs <= rhs + 1e-9


# -- the report -------------------------------------------------------------------


def test_estimate_dimension_report_shape(fam42):
    report = estimate_dimension(fam42, 50, tail_window=5)
    assert report.n_max == 50
    assert report.tail_window == 5
    assert len(report.formula) == 50
    assert len(report.upper) == 50
    assert len(report.lower) == 50
    assert report.lower[0] is None
    assert report.estimated_dim == report.tail_min_formula
    assert report.estimated_dim == min(report.formula[-5:])
    assert "proxy" in report.caveat


def test_estimate_dimension_default_tail_window(fam42):
    assert estimate_dimension(fam42, 200).tail_window == 20
    assert estimate_dimension(fam42, 5).tail_window == 1


def test_estimate_dimension_flags_non_monotone_tails(fam42, fam21):
    # the formula quotient rises for one family and falls for the other
    assert estimate_dimension(fam42, 100).monotone_tail
    assert not estimate_dimension(fam21, 100).monotone_tail


def test_estimate_dimension_validation(fam42):
    with pytest.raises(DomainError):
        estimate_dimension(fam42, 0)
    with pytest.raises(DomainError):
        estimate_dimension(fam42, 10, tail_window=11)
    with pytest.raises(DomainError):
        estimate_dimension(fam42, 10, tail_window=0)


def test_estimated_dimension_hits_known_limits(fam42, fam22, fam21):
    assert estimate_dimension(fam42, 2000).estimated_dim == pytest.approx(
        0.5, abs=0.002
    )
    assert estimate_dimension(fam22, 2000).estimated_dim == pytest.approx(
        1.0, abs=0.002
    )
    assert estimate_dimension(fam21, 2000).estimated_dim < 0.01


# -- empirical cover fit ------------------------------------------------------------


def test_cover_fit_tracks_the_formula_quotient(fam42, fam22, fam21):
    # slope within 0.1 of the mean quotient over the fitted depths
    cases = (
        (fam22, range(2, 7), 2**22),
        (fam42, range(2, 7), 2**22),
        (fam21, range(8, 13), None),
    )
    for fam, depths, limit in cases:
        fit = empirical_cover_fit(fam, list(depths), limit=limit)
        mean = sum(formula_quotient(fam, n) for n in depths) / len(list(depths))
        assert abs(fit.slope - mean) < 0.1


def test_cover_fit_slope_for_the_full_window_family(fam22):
    fit = empirical_cover_fit(fam22, [2, 3, 4, 5, 6], limit=2**22)
    assert 0.5 < fit.slope <= 1.0
    assert fit.depths == (2, 3, 4, 5, 6)
    assert len(fit.log_counts) == 5
    # y values are exact log counts
    assert fit.log_counts[0] == pytest.approx(math.log(8), abs=1e-12)


def test_cover_fit_needs_two_depths(fam42):
    with pytest.raises(DomainError):
        empirical_cover_fit(fam42, [3])
    with pytest.raises(DomainError):
        empirical_cover_fit(fam42, [0, 2])


def test_cover_fit_respects_the_level_limit(fam22):
    with pytest.raises(SizeLimitError) as info:
        empirical_cover_fit(fam22, [2, 6], limit=1000)
    assert info.value.count == 2**21


def test_cover_fit_is_scale_free_in_the_point_order(fam22):
    forward = empirical_cover_fit(fam22, [2, 3, 4, 5, 6], limit=2**22)
    shuffled = empirical_cover_fit(fam22, [5, 2, 6, 3, 4], limit=2**22)
    assert forward.slope == pytest.approx(shuffled.slope, abs=1e-15)

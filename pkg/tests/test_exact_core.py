import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sincprod.exact_core import (
    HarmonicFamily,
    Interval,
    NonTerminatingSearchError,
    breaking_point,
    breaking_point_report,
    interval_odd_harmonic_sum,
    odd_harmonic_sum,
)
from sincprod.rational import rat


# -- odd harmonic sums -------------------------------------------------------


def test_partial_sums_known_values():
    assert odd_harmonic_sum(0) == 1
    assert odd_harmonic_sum(6) == rat(88069, 45045)
    assert odd_harmonic_sum(7) == rat(91072, 45045)


@given(n=st.integers(min_value=0, max_value=400))
def test_partial_sum_recurrence(n):
    assert odd_harmonic_sum(n + 1) - odd_harmonic_sum(n) == rat(1, 2 * n + 3)


def test_partial_sum_rejects_negative():
    with pytest.raises(ValueError):
        odd_harmonic_sum(-1)


# -- intervals ---------------------------------------------------------------


def test_interval_from_rational_exact_dyadic():
    iv = Interval.from_rational(rat(1), 128)
    assert iv.lo == 1 and iv.hi == 1 and iv.width() == 0


def test_interval_encloses_thirds():
    iv = Interval.from_rational(rat(1, 3), 64)
    assert iv.lo < rat(1, 3) < iv.hi
    assert iv.width() == rat(1, 2**64)


@given(
    p=st.integers(min_value=-(10**9), max_value=10**9),
    q=st.integers(min_value=1, max_value=10**9),
    bits=st.integers(min_value=53, max_value=200),
)
def test_interval_contains_and_tight(p, q, bits):
    x = rat(p, q)
    iv = Interval.from_rational(x, bits)
    assert iv.contains(x)
    assert iv.width() <= rat(1, 2**bits)


@given(
    p=st.integers(min_value=-(10**9), max_value=10**9),
    q=st.integers(min_value=1, max_value=10**9),
    bits=st.integers(min_value=53, max_value=150),
)
def test_interval_precision_monotone(p, q, bits):
    # widening precision never widens the enclosure
    x = rat(p, q)
    coarse = Interval.from_rational(x, bits)
    fine = Interval.from_rational(x, bits + 37)
    assert coarse.lo <= fine.lo and fine.hi <= coarse.hi


def test_interval_arithmetic_encloses():
    a = Interval.from_rational(rat(1, 3), 64)
    b = Interval.from_rational(rat(1, 7), 64)
    assert (a + b).contains(rat(1, 3) + rat(1, 7))
    assert (a - b).contains(rat(1, 3) - rat(1, 7))
    assert (a * b).contains(rat(1, 21))
    neg = -a
    assert neg.contains(rat(-1, 3))


def test_interval_mul_sign_cases():
    for x in (rat(-5, 3), rat(0), rat(7, 11)):
        for y in (rat(-2, 7), rat(3, 5)):
            ix = Interval.from_rational(x, 64)
            iy = Interval.from_rational(y, 64)
            assert (ix * iy).contains(x * y), (x, y)


def test_interval_mixed_precision_rejected():
    a = Interval.from_rational(rat(1), 64)
    b = Interval.from_rational(rat(1), 128)
    with pytest.raises(ValueError):
        a + b
    assert (a.with_precision(128) + b).contains(rat(2))


def test_interval_sum_contains_exact():
    for n in (0, 17, 255, 2000):
        iv = interval_odd_harmonic_sum(n, 128)
        assert iv.contains(odd_harmonic_sum(n)), n


def test_interval_sum_width_bound():
    for n, bits in ((55, 128), (2000, 64)):
        iv = interval_odd_harmonic_sum(n, bits)
        value = odd_harmonic_sum(n)
        assert iv.width() <= (n + 1) * rat(2) * value / 2**bits


def test_interval_sum_anchor_55():
    # midpoint within half an ulp of the 10-digit reference 2.994437501
    iv = interval_odd_harmonic_sum(55, 128)
    assert abs(iv.midpoint() - rat("2.994437501")) <= rat(5, 10**10)


def test_interval_sum_anchor_3090():
    import mpmath as mp

    iv = interval_odd_harmonic_sum(3090, 128)
    assert iv.contains(odd_harmonic_sum(3090))
    with mp.workprec(120):
        scaled = mp.pi * mp.mpf(iv.midpoint().numerator) / mp.mpf(iv.midpoint().denominator)
        assert abs(scaled - mp.mpf("15.70758624")) < 1e-8


# -- breaking points ---------------------------------------------------------


def test_breaking_points_odd_harmonic():
    fam = HarmonicFamily.odd_harmonic()
    assert breaking_point(fam, 2) == 6
    assert breaking_point(fam, 3) == 55


def test_breaking_point_modes():
    fam = HarmonicFamily.odd_harmonic()
    assert breaking_point_report(fam, 5).mode == "exact"      # decided within the exact cutoff
    rep7 = breaking_point_report(fam, 7)
    assert (rep7.n, rep7.mode) == (168802, "interval")


def test_breaking_point_bracket():
    # n* is the last index strictly below, n*+1 is at or above
    fam = HarmonicFamily.odd_harmonic()
    for threshold in (2, 3):
        n = breaking_point(fam, threshold)
        assert odd_harmonic_sum(n) < threshold <= odd_harmonic_sum(n + 1)
    for threshold in (5, 7):
        n = breaking_point(fam, threshold)
        assert interval_odd_harmonic_sum(n, 512).strictly_below(threshold)
        assert interval_odd_harmonic_sum(n + 1, 512).strictly_above(threshold)


def test_breaking_point_interval_phase_forced():
    # drive the interval machinery even for small thresholds
    fam = HarmonicFamily.odd_harmonic()
    rep = breaking_point_report(fam, 3, exact_term_cutoff=0)
    assert (rep.n, rep.mode) == (55, "interval")


def test_breaking_point_exact_equality_escalates_to_exact():
    # custom family hitting the threshold exactly: intervals can never
    # decide, the search must fall back to exact comparison
    fam = HarmonicFamily.custom([rat(1), rat(1), rat(1, 2)])
    assert breaking_point(fam, 2) == 0


def test_breaking_point_constant_family():
    fam = HarmonicFamily.constant(rat(1, 3))
    # sums: 1/3, 2/3, 1, 4/3 ...; last strictly below 1 is n=1
    assert breaking_point(fam, 1) == 1
    assert breaking_point(fam, rat(7, 6)) == 2
    with pytest.raises(NonTerminatingSearchError):
        breaking_point(HarmonicFamily.constant(5), 2)


def test_breaking_point_custom_family():
    fam = HarmonicFamily.custom([rat(1, 2), rat(1, 3), rat(1, 7)])
    assert breaking_point(fam, rat(9, 10)) == 1
    with pytest.raises(NonTerminatingSearchError):
        breaking_point(fam, 50)  # finite family never reaches 50
    with pytest.raises(NonTerminatingSearchError):
        breaking_point(fam, rat(1, 4))  # first term already over


def test_breaking_point_rejects_bad_threshold():
    with pytest.raises(ValueError):
        breaking_point(HarmonicFamily.odd_harmonic(), 0)


def test_family_validation():
    with pytest.raises(ValueError):
        HarmonicFamily.custom([])
    with pytest.raises(ValueError):
        HarmonicFamily.custom([rat(1), rat(0)])
    with pytest.raises(ValueError):
        HarmonicFamily.constant(-1)

import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from sperner.bounds import (
    Direction, Params, aggregate, alt_a_b, alt_admissible_us, alt_construction_p, best_upper,
    cor_upper, exact_known, lhs_eq1, limea_bounds, main_a_b, main_admissible_us,
    main_construction_p, mms, mms_floor, nlb, ratio_diagnostics, thm_applicable, thm_upper,
)
from sperner.errors import NotApplicable


def test_params():
    p = Params(23, 5)
    assert (p.c, p.r) == (4, 3)
    with pytest.raises(ValueError):
        Params(3, 5)
    with pytest.raises(ValueError):
        Params(3, 0)


@pytest.mark.parametrize("n,k", [(10, 4), (12, 5), (23, 5), (33, 7), (100, 10)])
def test_nlb_against_comb(n, k):
    c, r = divmod(n, k)
    assert nlb(Params(n, k)) == math.comb(n - r, c) // k


def test_nlb_12_5_is_nine():
    assert nlb(Params(12, 5)) == 9


def test_mms_values():
    assert mms(Params(10, 4)) == Fraction(180, 11)
    assert mms_floor(Params(10, 4)) == 16
    # k | n: the r-term vanishes
    assert mms(Params(12, 4)) == Fraction(math.comb(12, 3), 4)


@pytest.mark.parametrize("n,k,want", [
    (10, 4, 11), (16, 6, 29), (23, 5, 2808), (33, 7, 12696),
    (27, 11, 40), (30, 12, 50), (33, 13, 60),
])
def test_thm_upper_anchors(n, k, want):
    assert thm_upper(Params(n, k)) == want


def test_thm_upper_gap_anchors():
    for (n, k), gap in {(10, 4): 5, (16, 6): 13, (23, 5): 366, (33, 7): 1601}.items():
        p = Params(n, k)
        assert mms_floor(p) - thm_upper(p) == gap


@pytest.mark.parametrize("n,k,why", [(12, 3, "k >= 4"), (9, 4, "n >= 2k+2"), (12, 4, "r != 0")])
def test_thm_not_applicable(n, k, why):
    assert thm_applicable(Params(n, k)) == why
    with pytest.raises(NotApplicable, match=why.split()[0]):
        thm_upper(Params(n, k))


def test_lhs_eq1_threshold():
    p = Params(27, 11)
    assert lhs_eq1(p, 40) and not lhs_eq1(p, 41)


@settings(max_examples=100, deadline=None)
@given(k=st.integers(4, 9), extra=st.integers(2, 30), data=st.data())
def test_lhs_eq1_monotone(k, extra, data):
    n = 2 * k + extra
    p = Params(n, k)
    if p.r == 0:
        return
    lo, hi = nlb(p), mms_floor(p) + 1
    a = data.draw(st.integers(lo, hi))
    b = data.draw(st.integers(a, hi))
    assert not (lhs_eq1(p, b) and not lhs_eq1(p, a))


def test_cor_upper_value():
    lo, hi = cor_upper(Params(10, 4), 11)
    assert lo <= hi and hi - lo < Fraction(1, 10**6)
    assert abs(float(lo) - 11.5554) < 1e-3
    assert hi < mms(Params(10, 4))
    with pytest.raises(NotApplicable):
        cor_upper(Params(10, 4), 3)


def test_exact_values():
    cases = {(12, 4): (55, "EXACT-DIV"), (7, 2): (15, "EXACT-K2"), (9, 4): (8, "EXACT-2K1"),
             (27, 11): (40, "FAMILY-3K6"), (5, 3): (1, "EXACT-TRIVIAL"), (20, 5): (969, "EXACT-DIV")}
    for (n, k), (value, tag) in cases.items():
        rec = exact_known(Params(n, k))
        assert (rec.value, rec.source, rec.direction) == (value, tag, Direction.EXACT)
    assert exact_known(Params(10, 4)) is None
    assert exact_known(Params(28, 10)) is None  # k = 4 mod 6 is outside the family


def test_limea_ranges():
    assert limea_bounds(Params(7, 3)) == (5, 6)
    assert limea_bounds(Params(8, 3)) == (8, 9)  # 8 = 2k+2 = 3k-1
    assert limea_bounds(Params(11, 4)) == (11, None)
    assert limea_bounds(Params(5, 2)) is None


def test_main_construction():
    p = Params(10, 4)
    assert main_a_b(p, 1) == (25, 20)
    assert main_construction_p(p, 1) == 10
    assert main_construction_p(Params(18, 4), 2) == 648
    assert main_a_b(Params(18, 4), 2) == (1296, 2520)
    assert main_construction_p(Params(20, 7), 1) == 40
    assert 1 in main_admissible_us(p)


def test_alt_construction():
    assert alt_construction_p(Params(26, 7), 2) == 286
    assert alt_construction_p(Params(28, 5), 3) == 16016
    a, b = alt_a_b(Params(26, 7), 2)
    assert a > 0 and b > 0
    assert 2 in alt_admissible_us(Params(26, 7))
    with pytest.raises(NotApplicable, match=r"c\*k odd"):
        alt_construction_p(Params(20, 7), 2)
    with pytest.raises(NotApplicable, match=r"c\*k odd"):
        alt_construction_p(Params(10, 4), 1)


def test_aggregate_anchors():
    cells = aggregate(5, 29)
    assert (cells[29].lower.value, cells[29].lower.source) == (16830, "PRODUCT(5, 24)")
    assert (cells[23].lower.value, cells[23].upper.value) == (1008, 2808)
    assert cells[20].lower.value == 969
    cells4 = aggregate(4, 13)
    assert (cells4[13].lower.value, cells4[13].lower.source) == (55, "MONO")
    assert "TIMES-K" in aggregate(5, 29)[29].ties


def test_aggregate_brackets():
    for k in (2, 3, 4, 8):
        for n, cell in aggregate(k, 40).items():
            p = Params(n, k)
            assert nlb(p) <= cell.lower.value <= cell.upper.value <= mms_floor(p)


def test_best_upper_prefers_exact():
    rec = best_upper(Params(12, 4))
    assert rec.value == 55 and rec.direction is Direction.EXACT


def test_ratio_diagnostics():
    assert ratio_diagnostics(Params(22, 7)) == (Fraction(59, 77), Fraction(90706, 200187))

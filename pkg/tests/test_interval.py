from __future__ import annotations

import math
from fractions import Fraction

import pytest
import mpmath

from bidisc.core.errors import EmptyInterval, NegativeOperand, OperandOutsideMinusOneOne, DivisionByIntervalContainingZero
from bidisc.core.interval import PI, R, ONE, SQRT2, R_SQUARED, Interval, ConstantName, imax, imin, isum, acos_i, sqrt_i, const_enclosure


def test_tenth_is_enclosed_not_rounded():
    tenth = Interval.point(Fraction(1, 10))
    assert tenth.lo < tenth.hi
    assert Fraction(tenth.lo) < Fraction(1, 10) < Fraction(tenth.hi)
    assert math.nextafter(tenth.lo, math.inf) == tenth.hi


def test_exact_sum_stays_thin():
    assert (Interval.point(0.5) + Interval.point(0.25)).is_thin
    assert Interval.point(3) * 2 == Interval(6.0, 6.0)


def test_inexact_sum_widens_by_one_ulp():
    total = Interval.point(0.1) + Interval.point(0.2)
    assert total.lo < total.hi
    assert Fraction(total.lo) <= Fraction(0.1) + Fraction(0.2) <= Fraction(total.hi)
    assert math.nextafter(total.lo, math.inf) == total.hi


def test_product_spans_sign_changes():
    assert Interval(-1.0, 2.0) * Interval(-3.0, 1.0) == Interval(-6.0, 3.0)


def test_division_by_zero_straddler():
    with pytest.raises(DivisionByIntervalContainingZero):
        _ = ONE / Interval(-1.0, 1.0)


def test_sqrt_of_negative_operand():
    with pytest.raises(NegativeOperand):
        sqrt_i(Interval(-1.0, 4.0))


def test_sqrt_encloses_exact_root():
    root = sqrt_i(2)
    assert Fraction(root.lo) ** 2 <= 2 <= Fraction(root.hi) ** 2
    assert root.overlaps(SQRT2)


def test_empty_interval_rejected():
    with pytest.raises(EmptyInterval):
        Interval(1.0, 0.0)
    with pytest.raises(EmptyInterval):
        Interval(0.0, 1.0).intersect(Interval(2.0, 3.0))


def test_square_never_negative():
    assert Interval(-2.0, 1.0).sqr() == Interval(0.0, 4.0)
    assert Interval(-2.0, -1.0).sqr() == Interval(1.0, 4.0)


def test_acos_outside_unit_range():
    with pytest.raises(OperandOutsideMinusOneOne):
        acos_i(Interval(0.5, 1.5))


def test_acos_of_half_encloses_third_of_pi():
    angle = acos_i(Interval.point(0.5))
    assert angle.overlaps(PI / 3)
    assert angle.width < 1e-14


def test_acos_at_unit_endpoints():
    assert acos_i(ONE) == Interval(0.0, 0.0)
    assert acos_i(-ONE).contains(Interval.point(PI.lo))


@pytest.mark.parametrize("c", [-0.999999999, -0.7, -1e-300, 1e-17, 0.2928932188134524, 0.9999999999999999])
def test_acos_encloses_the_high_precision_value(c):
    angle = acos_i(Interval(c, math.nextafter(c, 1.0)))
    with mpmath.workprec(200):
        exact = mpmath.acos(mpmath.mpf(c))
        assert mpmath.mpf(angle.lo) <= exact <= mpmath.mpf(angle.hi)
    assert angle.width < 1e-7


@pytest.mark.parametrize(
    ("name", "expression"),
    [
        (ConstantName.PI, lambda: mpmath.pi),
        (ConstantName.SQRT2, lambda: mpmath.sqrt(2)),
        (ConstantName.SQRT3, lambda: mpmath.sqrt(3)),
        (ConstantName.R, lambda: mpmath.sqrt(2) - 1),
        (ConstantName.R_SQUARED, lambda: 3 - 2 * mpmath.sqrt(2)),
    ],
)
def test_constants_enclose_high_precision_values(name, expression):
    enclosure = const_enclosure(name)
    with mpmath.workdps(60):
        value = expression()
        assert mpmath.mpf(enclosure.lo) <= value <= mpmath.mpf(enclosure.hi)
    assert enclosure.width <= 2.0**-50


def test_small_radius_relations():
    assert (R + 1).overlaps(SQRT2)
    assert (R * R).overlaps(R_SQUARED)


def test_higher_precision_is_no_wider():
    assert const_enclosure(ConstantName.PI, 200).width <= const_enclosure(ConstantName.PI).width


@pytest.mark.parametrize("name", [ConstantName.PI, ConstantName.SQRT2, ConstantName.SQRT3])
def test_high_precision_constants_keep_float_endpoints(name):
    enclosure = const_enclosure(name, 200)
    assert enclosure.hi == math.nextafter(enclosure.lo, math.inf)
    with mpmath.workprec(300):
        value = {ConstantName.PI: mpmath.pi, ConstantName.SQRT2: mpmath.sqrt(2), ConstantName.SQRT3: mpmath.sqrt(3)}[name]
        assert mpmath.mpf(enclosure.lo) < +value < mpmath.mpf(enclosure.hi)


def test_min_max_and_sum():
    a, b = Interval(0.0, 2.0), Interval(1.0, 3.0)
    assert imin(a, b) == Interval(0.0, 2.0)
    assert imax(a, b) == Interval(1.0, 3.0)
    assert isum([a, b, ONE]) == Interval(2.0, 6.0)


def test_bisect_covers_the_interval():
    low, high = Interval(0.0, 1.0).bisect()
    assert low.lo == 0.0
    assert high.hi == 1.0
    assert low.hi == high.lo == 0.5


def test_from_bounds_is_outward():
    x = Interval.from_bounds(Fraction(49, 100), Fraction(1, 2))
    assert Fraction(x.lo) <= Fraction(49, 100)
    assert x.hi == 0.5

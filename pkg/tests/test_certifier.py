from __future__ import annotations

import math
from fractions import Fraction

import pytest

from bidisc.core.errors import DegenerateBox, StraddlesHalf, NonpositiveEta, UnknownPairClass, UncalibratedScheme
from bidisc.core.packing import NeighborhoodWord, is_bad_neighborhood
from bidisc.core.geometry import TriangleSpec, delta_max, tight_spec, triangle_area
from bidisc.core.interval import R, Interval
from bidisc.core.certifier import (
    EDGE_TABLE,
    Fan,
    EdgeSide,
    fans,
    sweep,
    margin,
    root_box,
    good_fans,
    edge_side,
    regime_of,
    pinned_v1rr,
    defect_bound,
    calibrate_m_Z,
    tight_defect,
    edge_potential,
    edge_transfer,
    vertex_potential,
    evaluate_margin_at,
    sweep_intervals,
    support_radius_excluded,
    verify_interval,
    equation_residuals,
    solve_base_potentials,
    verify_global_assembly,
    verify_vertex_inequality,
    verify_local_inequality,
    check_stoichiometry_identity,
)
from bidisc.core.constructions import square_grid_packing
from bidisc.config.app_config_model import VerificationSettings
from bidisc.core.certifier import local_check
from bidisc.core.certifier.potentials import label_at, tight_angle
from bidisc.core.certifier.vertex_check import PAIRS, wedge_angle_range
from bidisc.core.models.base_enums import Regime, PairClass, RadiusClass, TightTriangleKind, VerificationStatus


L, S = RadiusClass.LARGE, RadiusClass.SMALL


@pytest.fixture(scope="module")
def at_half():
    return solve_base_potentials(0.5)


@pytest.fixture(scope="module")
def calibrated_at_half(at_half):
    return calibrate_m_Z(at_half)


# ─── Base Potentials ───────────────────────────────────────────────────────────
def test_alphas_at_half(at_half):
    assert at_half.regime is Regime.X_GE_HALF
    assert at_half.alpha_1.mid == pytest.approx(0.04594, abs=1e-4)
    assert at_half.alpha_r.mid == pytest.approx(-0.04594, abs=1e-4)


@pytest.mark.parametrize("x", [Interval.point(0.5), Interval(0.3, 0.31), Interval(0.75, 0.8), Interval(0.0, 0.01)])
def test_defining_equations_hold(x):
    s = solve_base_potentials(x)
    for name, value in equation_residuals(s).items():
        assert value.contains_zero(), name
        assert value.width <= 1e-8, name


@pytest.mark.parametrize("x", [Interval.point(0.5), Interval(0.3, 0.31), Interval(0.75, 0.8)])
def test_stoichiometry_identity(x):
    identity = check_stoichiometry_identity(solve_base_potentials(x))
    assert identity.contains_zero()
    assert identity.width <= 1e-8


def test_density_offset_breaks_the_identity():
    assert not check_stoichiometry_identity(solve_base_potentials(Interval(0.5, 0.51), delta_offset=1e-3)).contains_zero()


def test_interval_straddling_half():
    with pytest.raises(StraddlesHalf):
        solve_base_potentials(Interval(0.4, 0.6))
    assert regime_of(Interval(0.4, 0.5)) is Regime.X_LE_HALF


def test_pinned_v1rr():
    assert pinned_v1rr(Interval.point(0.25), Regime.X_LE_HALF).mid == pytest.approx(0.0009375, abs=1e-12)
    assert pinned_v1rr(Interval.point(0.75), Regime.X_GE_HALF).mid == pytest.approx(-0.009, abs=1e-15)


def test_edge_table():
    assert EDGE_TABLE[Regime.X_LE_HALF][PairClass.P11].l.overlaps(2.5)
    assert EDGE_TABLE[Regime.X_LE_HALF][PairClass.P11].q.overlaps(Fraction(38, 100))
    assert EDGE_TABLE[Regime.X_GE_HALF][PairClass.PRR].l.overlaps(Fraction(118, 100))
    assert EDGE_TABLE[Regime.X_GE_HALF][PairClass.PRR].q.overlaps(Fraction(8, 100))


def test_unknown_pair(at_half):
    with pytest.raises(UnknownPairClass):
        at_half.edge("12")


@pytest.mark.parametrize("kind", list(TightTriangleKind))
def test_tight_triangles_have_no_defect(at_half, kind):
    value = tight_defect(at_half, kind)
    assert value.contains_zero()
    assert value.width == 0


# ─── Edges ─────────────────────────────────────────────────────────────────────
def test_edge_side():
    far, near = Interval(1.0, 1.1), Interval(0.5, 0.6)
    assert edge_side(far, near) is EdgeSide.DONOR
    assert edge_side(near, far) is EdgeSide.RECEIVER
    assert edge_side(far, Interval(1.05, 1.2)) is EdgeSide.TIE


def test_edge_transfer_below_threshold(at_half):
    value = edge_transfer(at_half, "rr", Interval.point(1.0))
    assert value.contains_zero()
    assert value.width == 0


def test_edge_potential_cancels(at_half):
    length = Interval.point(3.0)
    donor = edge_potential(at_half, "11", length, EdgeSide.DONOR)
    receiver = edge_potential(at_half, "11", length, EdgeSide.RECEIVER)
    assert donor.mid == pytest.approx(0.01, abs=1e-12)
    assert (donor + receiver).contains_zero()
    assert edge_potential(at_half, "11", length, EdgeSide.TIE).contains_zero()


def test_edge_transfer_is_capped(calibrated_at_half):
    assert calibrated_at_half.z is not None
    ceiling = max(calibrated_at_half.z[L].hi, calibrated_at_half.z[S].hi)
    assert edge_transfer(calibrated_at_half, "11", Interval.point(1000.0)).hi <= ceiling


# ─── Vertex Inequality ─────────────────────────────────────────────────────────
def test_fans():
    assert Fan(0, 8, 0).word() == NeighborhoodWord("1r1r1r1r")
    assert Fan(6, 0, 0).word() == NeighborhoodWord("111111")
    assert not Fan(3, 1, 0).realisable
    assert not Fan(2, 0, 2).realisable
    assert {Fan(0, 8, 0), Fan(6, 0, 0)} <= set(fans(L))
    assert {Fan(4, 0, 0), Fan(0, 0, 6)} <= set(fans(S))


@pytest.mark.parametrize("q", list(RadiusClass))
def test_wedge_angles_are_bounded_away_from_zero(q):
    for pair in PAIRS:
        angle = wedge_angle_range(q, pair)
        assert angle.lo > 0.1, pair
        assert angle.hi < math.pi, pair
        assert angle.contains(tight_angle(q, pair)), pair


@pytest.mark.parametrize("q", list(RadiusClass))
def test_good_fans_are_not_bad(at_half, q):
    assert all(not is_bad_neighborhood(fan.word(), q, at_half.regime) for fan in good_fans(q, at_half))


def test_vertex_inequality_needs_calibration(at_half):
    assert not at_half.calibrated
    with pytest.raises(UncalibratedScheme):
        verify_vertex_inequality(at_half, L, strengthened=False)


def test_calibration_passes_the_vertex_inequality(calibrated_at_half):
    assert calibrated_at_half.calibrated
    assert calibrated_at_half.m is not None
    assert calibrated_at_half.z is not None
    for q in RadiusClass:
        assert 0 < calibrated_at_half.m[q].lo <= 2
        assert calibrated_at_half.z[q].lo >= calibrated_at_half.alphas[q].hi / (8 if q is L else 4) - 1e-12
        assert verify_vertex_inequality(calibrated_at_half, q, strengthened=False).passed


@pytest.mark.parametrize("kind", list(TightTriangleKind))
def test_vertex_potential_at_tight_triangles(at_half, calibrated_at_half, kind):
    t = tight_spec(kind)
    assert calibrated_at_half.z is not None
    for v in range(3):
        base = calibrated_at_half.potential(label_at(t, v))
        assert vertex_potential(calibrated_at_half, t, v, capped=False).contains(base.mid)
        assert vertex_potential(calibrated_at_half, t, v).hi <= calibrated_at_half.z[t.radii[v]].hi
    with pytest.raises(UncalibratedScheme):
        vertex_potential(at_half, t, 0)


def test_global_assembly_on_the_one_to_one_packing(calibrated_at_half):
    result = verify_global_assembly(calibrated_at_half, square_grid_packing(4))
    assert result.vertices_checked > 0
    assert result.edges_checked > 0
    assert result.passed


# ─── Local Inequality ──────────────────────────────────────────────────────────
@pytest.mark.parametrize(
    ("radii", "lengths"),
    [((L, L, L), (2.3, 2.4, 2.5)), ((L, L, S), (1.5, 1.6, 2.2)), ((L, S, S), (0.9, 1.5, 1.45))],
)
def test_point_evaluation_lies_in_the_margin(calibrated_at_half, radii, lengths):
    enclosure = margin(calibrated_at_half, TriangleSpec.from_lengths(radii, lengths))
    point = float(evaluate_margin_at(calibrated_at_half, radii, lengths))
    assert enclosure.lo - 1e-9 <= point <= enclosure.hi + 1e-9


def test_point_evaluation_rejects_flat_triangles(at_half, calibrated_at_half):
    with pytest.raises(DegenerateBox):
        evaluate_margin_at(calibrated_at_half, (L, L, L), (2.0, 2.0, 4.0))
    with pytest.raises(UncalibratedScheme):
        evaluate_margin_at(at_half, (L, L, L), (2.0, 2.0, 2.0))


def test_shallow_dichotomy_reports_its_witness(at_half, calibrated_at_half):
    result = verify_local_inequality(calibrated_at_half, depth_limit=2)
    assert result.status is VerificationStatus.DEPTH_EXCEEDED
    assert result.witness is not None
    assert result.witness_kind is not None
    assert result.max_depth == 2
    assert result.boxes_checked >= 1
    with pytest.raises(UncalibratedScheme):
        verify_local_inequality(at_half, depth_limit=2)


def test_deflated_density_fails_the_dichotomy(monkeypatch, calibrated_at_half):
    honest = local_check.margin
    monkeypatch.setattr(local_check, "margin", lambda s, t: honest(s, t) - 0.05 * triangle_area(t))
    result = verify_local_inequality(calibrated_at_half)
    assert result.status is VerificationStatus.FAILED
    assert result.witness is not None
    assert result.witness_kind is TightTriangleKind.T111
    assert all(side.lo < 2.1 for side in result.witness.sides)
    assert result.outcomes[local_check.BoxOutcome.FAILED] == 1


@pytest.mark.slow
def test_sampled_points_agree_with_the_dichotomy(calibrated_at_half):
    result = verify_local_inequality(calibrated_at_half, sample_points=2)
    assert result.status is VerificationStatus.CERTIFIED
    assert result.samples > 0
    assert result.sample_violations == 0


# ─── Boxes and Sweeps ──────────────────────────────────────────────────────────
def test_root_box_reaches_twice_the_small_radius():
    box = root_box((L, L, L))
    for side in box.spec.sides:
        assert side.lo == 2.0
        assert side.hi >= (2 + 2 * R).hi
    i = box.spec.widest_side()
    low, high = box.split()
    assert low.depth == high.depth == 1
    assert low.spec.sides[i].width < box.spec.sides[i].width
    assert low.spec.sides[i].hi == high.spec.sides[i].lo
    assert [low.spec.sides[j] for j in range(3) if j != i] == [box.spec.sides[j] for j in range(3) if j != i]


def test_flat_wedges_admit_no_support_circle():
    r = R.mid
    lengths = (1 + r, 1 + 3 * r, 2 * r)
    chain = TriangleSpec((S, S, L), tuple(Interval(v - 1e-4, v + 1e-4) for v in lengths))
    assert support_radius_excluded(chain)


@pytest.mark.parametrize("kind", list(TightTriangleKind))
def test_tight_triangles_keep_their_support_circle(kind):
    assert not support_radius_excluded(tight_spec(kind))


def test_sweep_intervals():
    assert sweep_intervals(3) == [
        (Fraction(0), Fraction(1, 3)),
        (Fraction(1, 3), Fraction(1, 2)),
        (Fraction(1, 2), Fraction(2, 3)),
        (Fraction(2, 3), Fraction(1)),
    ]
    assert len(sweep_intervals(4)) == 4
    with pytest.raises(ValueError, match="subdivisions"):
        sweep_intervals(1)


def test_defect_bound():
    achieved = delta_max(0.5) - 1e-6
    assert defect_bound(achieved, 0.5, 1e-4).mid == pytest.approx(0.01, abs=1e-6)
    with pytest.raises(NonpositiveEta):
        defect_bound(achieved, 0.5, 0.0)


@pytest.mark.parametrize("bounds", [(Fraction(49, 100), Fraction(1, 2)), (Fraction(1, 2), Fraction(51, 100))])
def test_density_offset_fails_at_the_identity(bounds):
    report = verify_interval(bounds, delta_offset=1e-3)
    assert report.status is VerificationStatus.FAILED
    assert report.stage == "identity"
    assert not report.certified


def test_shallow_pipeline_reaches_the_dichotomy():
    report = verify_interval((Fraction(49, 100), Fraction(1, 2)), settings=VerificationSettings(depth_limit=3))
    assert report.stage == "local"
    assert report.status is VerificationStatus.DEPTH_EXCEEDED
    assert report.m is not None
    assert report.z is not None
    assert report.witness is not None
    assert report.witness.stage == "local"
    assert report.max_depth == 3


def test_sweep_keeps_interval_order():
    settings = VerificationSettings(depth_limit=1)
    serial = sweep(2, settings=settings)
    parallel = sweep(2, workers=2, settings=settings)
    assert serial.subdivisions == 2
    assert [float(r.x.lo) for r in serial.intervals] == [0.0, 0.5]
    assert not serial.all_certified
    assert [(r.x, r.status, r.stage) for r in parallel.intervals] == [(r.x, r.status, r.stage) for r in serial.intervals]


@pytest.mark.slow
@pytest.mark.parametrize(
    ("bounds", "eta"),
    [((Fraction(49, 100), Fraction(1, 2)), 0.0), ((Fraction(1, 2), Fraction(51, 100)), 1e-4)],
)
def test_intervals_around_half_are_certified(bounds, eta):
    report = verify_interval(bounds, eta)
    assert report.status is VerificationStatus.CERTIFIED, report.witness
    assert report.boxes_checked > 0

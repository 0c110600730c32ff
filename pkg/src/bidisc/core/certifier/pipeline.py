# ♥♥─── Certification Pipeline ───────────────────────────────────────────────────
"""Solve, calibrate and verify the potential scheme on stoichiometry intervals."""

from __future__ import annotations

import math
import time
from typing import TYPE_CHECKING
from fractions import Fraction
from dataclasses import field, dataclass
from concurrent.futures import ProcessPoolExecutor

from bidisc.custom_logger import log, logged
from bidisc.core.errors import NonpositiveEta, CalibrationFailed
from bidisc.core.packing import Packing, FMTriangulation, fm_triangulation
from bidisc.core.geometry import TriangleSpec, delta_max
from bidisc.core.interval import ZERO, Interval, isum
from bidisc.config.app_config import get_settings
from bidisc.core.models.reports import RunConfig, SweepReport, WitnessRecord, VerificationReport
from bidisc.core.models.base_enums import RadiusClass, VerificationStatus
from bidisc.core.models.base_model import IntervalRecord

from .scheme import PotentialScheme, equation_residuals, solve_base_potentials, check_stoichiometry_identity
from .potentials import edge_pair, edge_side, edge_potential, vertex_potential, third_vertex_clearance
from .local_check import LocalCheck, verify_local_inequality
from .vertex_check import calibrate_m_Z, verify_vertex_inequality


if TYPE_CHECKING:
    from bidisc.config.app_config_model import VerificationSettings


HALF = Fraction(1, 2)


def _record(value: Interval) -> IntervalRecord:
    return IntervalRecord.from_interval(value)


def _digits(precision_bits: int) -> int:
    return max(40, math.ceil(precision_bits * math.log10(2)) + 10)


# ─── Single Interval ───────────────────────────────────────────────────────────
@logged
def verify_interval(
    x: Interval | tuple[Fraction, Fraction],
    eta: float = 0.0,
    *,
    settings: VerificationSettings | None = None,
    delta_offset: float = 0.0,
    config: RunConfig | None = None,
) -> VerificationReport:
    """Run every certification stage on one stoichiometry interval.

    Stages: base potentials, the stoichiometry identity and the eight defining
    equations, calibration of m and Z, the vertex inequality (plain and with
    eta) for both disc classes, then the local inequality by dichotomy. The
    first stage that does not pass decides the status and the witness.

    :param x: The interval, on one side of 1/2.
    :param eta: Extra potential required around bad neighbourhoods.
    :param settings: Verification settings; the application settings when omitted.
    :param delta_offset: Added to the maximal density (soundness checks only).
    :param config: Run configuration embedded in the report.
    :returns: The report; expected failures are statuses, not exceptions.
    :raises StraddlesHalf: If x contains points on both sides of 1/2.
    """
    settings = settings or get_settings().verification
    xi = x if isinstance(x, Interval) else Interval.from_bounds(*x)
    started = time.perf_counter()
    s = solve_base_potentials(xi, eta, delta_offset)
    identity = check_stoichiometry_identity(s)
    common = {"x": _record(xi), "eta": eta, "delta_offset": delta_offset, "alpha_1": _record(s.alpha_1), "alpha_r": _record(s.alpha_r), "identity": _record(identity), "config": config}

    def finish(status: VerificationStatus, stage: str, **fields: object) -> VerificationReport:
        report = VerificationReport(status=status, stage=stage, wall_time=time.perf_counter() - started, **common, **fields)  # type: ignore[arg-type]
        if report.certified:
            log.info("certified {} in {} boxes (depth {}, {:.2f}s)", xi, report.boxes_checked, report.max_depth, report.wall_time)
        else:
            log.warning("{} on {} at stage {}: {}", status, xi, stage, report.witness.detail if report.witness else "")
        return report

    broken = {name: value for name, value in equation_residuals(s).items() if not value.contains_zero()}
    if not identity.contains_zero() or broken:
        detail = f"x·alpha_1 + (1 - x)·alpha_r = {identity!r}" if not identity.contains_zero() else f"residuals {broken}"
        return finish(VerificationStatus.FAILED, "identity", witness=WitnessRecord(stage="identity", detail=detail))

    try:
        s = calibrate_m_Z(s)
    except CalibrationFailed as e:
        blocking = e.blocking
        witness = WitnessRecord(stage="calibration", disc=blocking.get("disc"), neighbourhood=blocking.get("neighbourhood"), capped=blocking.get("capped"), detail=str(e))
        return finish(VerificationStatus.FAILED, "calibration", witness=witness)
    assert s.m is not None
    assert s.z is not None
    calibration = {"m": {q.value: _record(s.m[q]) for q in RadiusClass}, "z": {q.value: _record(s.z[q]) for q in RadiusClass}}

    for q in RadiusClass:
        for strengthened in (False, bool(eta)):
            check = verify_vertex_inequality(s, q, strengthened)
            if not check.passed:
                witness = WitnessRecord(
                    stage="vertex",
                    disc=q.value,
                    neighbourhood=str(check.witness),
                    capped=list(check.capped or ()),
                    detail=f"margin {check.margin!r}{' with eta' if strengthened else ''}",
                )
                return finish(VerificationStatus.FAILED, "vertex", witness=witness, **calibration)

    local = verify_local_inequality(
        s, depth_limit=settings.depth_limit, epsilon=settings.epsilon_tight, sample_points=settings.sample_points, dps=_digits(settings.precision_bits)
    )
    return finish(local.status if not local.sample_violations else VerificationStatus.FAILED, "local", witness=_local_witness(local), **calibration, **_local_fields(local))


def _local_fields(local: LocalCheck) -> dict[str, object]:
    return {
        "boxes_checked": local.boxes_checked,
        "boxes_by_triple": {kind.value: n for kind, n in sorted(local.boxes.items())},
        "outcomes": {outcome.value: n for outcome, n in sorted(local.outcomes.items())},
        "max_depth": local.max_depth,
        "samples": local.samples,
        "sample_violations": local.sample_violations,
    }


def _local_witness(local: LocalCheck) -> WitnessRecord | None:
    if local.sample_violations:
        return WitnessRecord(stage="local", detail=f"{local.sample_violations} of {local.samples} sampled triangles have a negative margin")
    if local.witness is None or local.witness_kind is None:
        return None
    return WitnessRecord(stage="local", triple=local.witness_kind.value, sides=[_record(side) for side in local.witness.sides], detail=str(local.status))


# ─── Sweep ─────────────────────────────────────────────────────────────────────
def sweep_intervals(subdivisions: int) -> list[tuple[Fraction, Fraction]]:
    """Equal parts of [0, 1] with exact endpoints; a part containing 1/2 inside is split there."""
    if subdivisions < 2:
        msg = f"a sweep needs at least 2 subdivisions, got {subdivisions}"
        raise ValueError(msg)
    parts = []
    for k in range(subdivisions):
        lo, hi = Fraction(k, subdivisions), Fraction(k + 1, subdivisions)
        if lo < HALF < hi:
            parts += [(lo, HALF), (HALF, hi)]
        else:
            parts.append((lo, hi))
    return parts


def _sweep_job(job: tuple[tuple[Fraction, Fraction], float, VerificationSettings, float]) -> VerificationReport:
    bounds, eta, settings, delta_offset = job
    return verify_interval(bounds, eta, settings=settings, delta_offset=delta_offset)


def sweep(
    subdivisions: int,
    eta: float = 0.0,
    workers: int = 1,
    *,
    settings: VerificationSettings | None = None,
    delta_offset: float = 0.0,
    config: RunConfig | None = None,
) -> SweepReport:
    """Verify every interval of a partition of [0, 1].

    Reports come back in interval order whatever the worker count, and a failed
    interval never stops the sweep.

    :param subdivisions: Number of equal parts, at least 2.
    :param eta: Extra potential required around bad neighbourhoods.
    :param workers: Worker processes; 1 runs in this process.
    :param settings: Verification settings shared by every interval.
    :param delta_offset: Density offset for soundness checks.
    :param config: Run configuration embedded in the report.
    """
    settings = settings or get_settings().verification
    jobs = [(bounds, eta, settings, delta_offset) for bounds in sweep_intervals(subdivisions)]
    started = time.perf_counter()
    log.info("sweeping {} intervals with eta={} on {} worker(s)", len(jobs), eta, workers)
    reports: list[VerificationReport] = []
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for report in pool.map(_sweep_job, jobs):
                reports.append(report)
                log.info("[{}/{}] {} {}", len(reports), len(jobs), report.x, report.status)
    else:
        for job in jobs:
            reports.append(_sweep_job(job))
            log.info("[{}/{}] {} {}", len(reports), len(jobs), reports[-1].x, reports[-1].status)
    result = SweepReport(subdivisions=subdivisions, eta=eta, intervals=reports, wall_time=time.perf_counter() - started, config=config)
    log.info("sweep finished: {} certified of {}, {} boxes", len(reports) - len(result.failures), len(reports), result.total_boxes)
    return result


# ─── Defect Bound ──────────────────────────────────────────────────────────────
def defect_bound(delta_achieved: Interval | float, x: Interval | float, eta: float) -> Interval:
    """Enclosure of (delta_max(x) - delta) / eta, a bound on the proportion of bad neighbourhoods.

    :raises NonpositiveEta: If eta <= 0.
    """
    if eta <= 0:
        msg = f"eta must be positive, got {eta}"
        raise NonpositiveEta(msg)
    return (delta_max(x) - delta_achieved) / eta


# ─── Global Assembly ───────────────────────────────────────────────────────────
@dataclass
class AssemblyCheck:
    """Per-vertex and per-edge sums of the scheme on a finite triangulation."""

    vertices_checked: int = 0
    edges_checked: int = 0
    vertex_violations: list[int] = field(default_factory=list)
    edge_violations: list[tuple[int, int]] = field(default_factory=list)
    slack: Interval = ZERO

    @property
    def passed(self) -> bool:
        return not self.vertex_violations and not self.edge_violations


def _spec(p: Packing, triangle: tuple[int, int, int]) -> TriangleSpec:
    i, j, k = triangle
    sides = (math.dist(p[j].center, p[k].center), math.dist(p[i].center, p[k].center), math.dist(p[i].center, p[j].center))
    return TriangleSpec.from_lengths((p[i].size, p[j].size, p[k].size), sides)


def verify_global_assembly(s: PotentialScheme, p: Packing, triangulation: FMTriangulation | None = None, tol: float = 1e-9) -> AssemblyCheck:
    """Spot-check the decomposition of the total potential on a finite packing.

    Every interior disc must collect at least alpha of its class from its
    triangles, and the two sides of every interior edge must cancel.

    :param s: A calibrated scheme.
    :param p: The packing.
    :param triangulation: Its FM-triangulation, computed when omitted.
    :param tol: Allowed shortfall of a vertex sum below alpha.
    """
    t = fm_triangulation(p) if triangulation is None else triangulation
    specs = {tri: _spec(p, tri) for tri in t.triangles}
    result = AssemblyCheck()
    shares: dict[int, list[Interval]] = {}
    for tri, spec in specs.items():
        for v, i in enumerate(tri):
            shares.setdefault(i, []).append(vertex_potential(s, spec, v))
    for i in t.interior_vertices():
        q = p[i].size
        gap = isum(shares[i]) - (s.alpha_1 if q is RadiusClass.LARGE else s.alpha_r)
        result.vertices_checked += 1
        result.slack = gap if result.vertices_checked == 1 else result.slack.hull(gap)
        if gap.hi < -tol:
            result.vertex_violations.append(i)

    sides: dict[tuple[int, int], list[tuple[TriangleSpec, int]]] = {}
    for tri, spec in specs.items():
        for edge in range(3):
            a, b = tri[(edge + 1) % 3], tri[(edge + 2) % 3]
            sides.setdefault((min(a, b), max(a, b)), []).append((spec, edge))
    for key, incident in sorted(sides.items()):
        if len(incident) != 2:
            continue
        (first, e1), (second, e2) = incident
        own, other = third_vertex_clearance(first, e1), third_vertex_clearance(second, e2)
        charge = edge_potential(s, edge_pair(first, e1), first.sides[e1], edge_side(own, other))
        back = edge_potential(s, edge_pair(second, e2), second.sides[e2], edge_side(other, own))
        result.edges_checked += 1
        if not (charge + back).contains_zero():
            result.edge_violations.append(key)
    log.debug("global assembly on {} discs: {} vertices, {} edges, {} violations", len(p), result.vertices_checked, result.edges_checked, len(result.vertex_violations) + len(result.edge_violations))
    return result


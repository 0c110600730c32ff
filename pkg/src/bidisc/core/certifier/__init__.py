# ♥♥─── Certifier Init ───────────────────────────────────────────────────────────
"""Upper-bound certification by vertex and edge potentials."""

from __future__ import annotations

from .boxes import TriangleBox, root_box, root_boxes, support_radius_excluded
from .scheme import EDGE_TABLE, EdgeParams, AffineForm, PotentialScheme, regime_of, pinned_v1rr, equation_residuals, solve_base_potentials, check_stoichiometry_identity
from .pipeline import AssemblyCheck, sweep, defect_bound, verify_interval, sweep_intervals, verify_global_assembly
from .potentials import EdgeSide, edge_side, edge_transfer, edge_potential, vertex_potential
from .local_check import BoxOutcome, LocalCheck, margin, check_box, tight_defect, evaluate_margin_at, tight_margin_rule, verify_local_inequality
from .vertex_check import Fan, VertexCheck, fans, good_fans, calibrate_m_Z, verify_vertex_inequality


__all__ = [
    "EDGE_TABLE",
    "AffineForm",
    "AssemblyCheck",
    "BoxOutcome",
    "EdgeParams",
    "EdgeSide",
    "Fan",
    "LocalCheck",
    "PotentialScheme",
    "TriangleBox",
    "VertexCheck",
    "calibrate_m_Z",
    "check_box",
    "check_stoichiometry_identity",
    "defect_bound",
    "edge_potential",
    "edge_side",
    "edge_transfer",
    "equation_residuals",
    "evaluate_margin_at",
    "fans",
    "good_fans",
    "margin",
    "pinned_v1rr",
    "regime_of",
    "root_box",
    "root_boxes",
    "solve_base_potentials",
    "support_radius_excluded",
    "sweep",
    "sweep_intervals",
    "tight_defect",
    "tight_margin_rule",
    "verify_global_assembly",
    "verify_interval",
    "verify_local_inequality",
    "verify_vertex_inequality",
    "vertex_potential",
]

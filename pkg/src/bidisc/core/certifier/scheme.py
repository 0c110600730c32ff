# ♥♥─── Potential Scheme ─────────────────────────────────────────────────────────
"""Base vertex potentials solved from the tight-triangle emptinesses.

Every potential is kept both as an interval and as an exact affine form over
the tight emptinesses E111, E11r, E1rr, Errr and the pinned value V1rr. The
forms let identities such as 4·V1r1 = alpha_r be recognised exactly instead
of through an interval that merely contains 0.
"""

from __future__ import annotations

from typing import Self
from fractions import Fraction
from dataclasses import field, replace, dataclass
from collections.abc import Mapping

from bidisc.custom_logger import log
from bidisc.core.errors import StraddlesHalf, UnknownPairClass
from bidisc.core.geometry import delta_max, tight_area, tight_coverage
from bidisc.core.interval import PI, SQRT3, ZERO, R_SQUARED, Interval, isum
from bidisc.core.models.base_enums import Regime, PairClass, RadiusClass, VertexLabel, TightTriangleKind
from bidisc.core.interval.interval import Operand


type Coefficient = Fraction | int

KINDS = tuple(TightTriangleKind)
PINNED = "V1rr"


# ─── Affine Forms ──────────────────────────────────────────────────────────────
@dataclass(frozen=True, slots=True)
class AffineForm:
    """sum_k c_k·E_k + c_v·V1rr with exact rational coefficients."""

    emptiness: tuple[Fraction, Fraction, Fraction, Fraction] = (Fraction(0), Fraction(0), Fraction(0), Fraction(0))
    pinned: Fraction = Fraction(0)

    @classmethod
    def of(cls, kind: TightTriangleKind) -> Self:
        coeffs = [Fraction(0)] * 4
        coeffs[KINDS.index(kind)] = Fraction(1)
        return cls((coeffs[0], coeffs[1], coeffs[2], coeffs[3]))

    @classmethod
    def pinned_value(cls) -> Self:
        return cls(pinned=Fraction(1))

    def __add__(self, other: AffineForm) -> AffineForm:
        e = tuple(a + b for a, b in zip(self.emptiness, other.emptiness, strict=True))
        return AffineForm((e[0], e[1], e[2], e[3]), self.pinned + other.pinned)

    def __neg__(self) -> AffineForm:
        return self * -1

    def __sub__(self, other: AffineForm) -> AffineForm:
        return self + (-other)

    def __mul__(self, factor: Coefficient) -> AffineForm:
        f = Fraction(factor)
        e = tuple(f * c for c in self.emptiness)
        return AffineForm((e[0], e[1], e[2], e[3]), f * self.pinned)

    __rmul__ = __mul__

    def __truediv__(self, divisor: Coefficient) -> AffineForm:
        return self * (1 / Fraction(divisor))

    @property
    def is_zero(self) -> bool:
        return not any(self.emptiness) and not self.pinned

    def __str__(self) -> str:
        names = [f"E{kind.value}" for kind in KINDS] + [PINNED]
        terms = [f"{c}·{name}" for c, name in zip((*self.emptiness, self.pinned), names, strict=True) if c]
        return " + ".join(terms) or "0"


def total(forms: list[AffineForm]) -> AffineForm:
    result = AffineForm()
    for form in forms:
        result = result + form
    return result


E111, E11R, E1RR, ERRR = (AffineForm.of(kind) for kind in KINDS)
V1RR_FORM = AffineForm.pinned_value()


# ─── Edge Parameters ───────────────────────────────────────────────────────────
@dataclass(frozen=True, slots=True)
class EdgeParams:
    """Threshold length l and slope q of the edge transfer for one disc pair."""

    l: Interval  # noqa: E741
    q: Interval


def _params(l_value: str, q_value: str) -> EdgeParams:
    return EdgeParams(Interval.point(Fraction(l_value)), Interval.point(Fraction(q_value)))


EDGE_TABLE: dict[Regime, dict[PairClass, EdgeParams]] = {
    Regime.X_LE_HALF: {
        PairClass.P11: _params("2.5", "0.38"),
        PairClass.P1R: _params("1.83", "0.15"),
        PairClass.PRR: _params("1.18", "0.15"),
    },
    Regime.X_GE_HALF: {
        PairClass.P11: _params("2.5", "0.02"),
        PairClass.P1R: _params("1.83", "0.05"),
        PairClass.PRR: _params("1.18", "0.08"),
    },
}


def pair_class(value: PairClass | str) -> PairClass:
    """:raises UnknownPairClass: For anything but 11, 1r and rr."""
    try:
        return PairClass(value)
    except ValueError as e:
        msg = f"unknown disc pair class {value!r}"
        raise UnknownPairClass(msg) from e


# ─── Scheme ────────────────────────────────────────────────────────────────────
@dataclass(frozen=True)
class PotentialScheme:
    """Potentials for one stoichiometry interval, optionally with calibrated m and Z."""

    x: Interval
    regime: Regime
    delta: Interval
    v1rr: Interval
    forms: Mapping[VertexLabel, AffineForm]
    alpha_forms: Mapping[RadiusClass, AffineForm]
    edge_params: Mapping[PairClass, EdgeParams]
    eta: float = 0.0
    delta_offset: float = 0.0
    values: dict[VertexLabel, Interval] = field(default_factory=dict)
    alphas: dict[RadiusClass, Interval] = field(default_factory=dict)
    m: Mapping[RadiusClass, Interval] | None = None
    z: Mapping[RadiusClass, Interval] | None = None

    def __post_init__(self) -> None:
        self.values.update({label: self.evaluate(form) for label, form in self.forms.items()})
        self.alphas.update({q: self.evaluate(form) for q, form in self.alpha_forms.items()})

    def evaluate(self, form: AffineForm) -> Interval:
        """Value of a form with delta factored out: delta·sum(c·A) - sum(c·C) + c_v·V1rr."""
        area = isum([tight_area(kind) * c for kind, c in zip(KINDS, form.emptiness, strict=True) if c])
        coverage = isum([tight_coverage(kind) * c for kind, c in zip(KINDS, form.emptiness, strict=True) if c])
        return self.delta * area - coverage + (self.v1rr * form.pinned if form.pinned else ZERO)

    def emptiness(self, kind: TightTriangleKind) -> Interval:
        return self.delta * tight_area(kind) - tight_coverage(kind)

    def potential(self, label: VertexLabel) -> Interval:
        return self.values[label]

    @property
    def alpha_1(self) -> Interval:
        return self.alphas[RadiusClass.LARGE]

    @property
    def alpha_r(self) -> Interval:
        return self.alphas[RadiusClass.SMALL]

    @property
    def calibrated(self) -> bool:
        return self.m is not None and self.z is not None

    def edge(self, pair: PairClass | str) -> EdgeParams:
        return self.edge_params[pair_class(pair)]

    def with_calibration(self, m_1: Operand, m_r: Operand, z_1: Operand, z_r: Operand) -> PotentialScheme:
        """Copy of the scheme with explicit angle coefficients and ceilings."""
        m = {RadiusClass.LARGE: Interval.coerce(m_1), RadiusClass.SMALL: Interval.coerce(m_r)}
        z = {RadiusClass.LARGE: Interval.coerce(z_1), RadiusClass.SMALL: Interval.coerce(z_r)}
        return replace(self, m=m, z=z, values={}, alphas={})


# ─── Solving ───────────────────────────────────────────────────────────────────
def regime_of(x: Interval) -> Regime:
    """:raises StraddlesHalf: If x has points on both sides of 1/2."""
    if x.lo >= 0.5:
        return Regime.X_GE_HALF
    if x.hi <= 0.5:
        return Regime.X_LE_HALF
    msg = f"stoichiometry {x!r} straddles 1/2; split it first"
    raise StraddlesHalf(msg)


def pinned_v1rr(x: Interval, regime: Regime) -> Interval:
    """(7x**2 + 6x - 1)/1000 below one half, -9/1000 from one half on."""
    if regime is Regime.X_GE_HALF:
        return Interval.point(Fraction(-9, 1000))
    return (7 * x.sqr() + 6 * x - 1) / 1000


def base_forms(regime: Regime) -> tuple[dict[VertexLabel, AffineForm], dict[RadiusClass, AffineForm]]:
    """Forward substitution through the eight defining equations.

    The closing equation 6·V_qqq = alpha_q uses q = 1 from one half on and
    q = r below.
    """
    v111 = E111 / 3
    vrrr = ERRR / 3
    vr1r = E1RR - 2 * V1RR_FORM
    if regime is Regime.X_GE_HALF:
        alpha_1 = 6 * v111
        v11r = alpha_1 / 8
        v1r1 = E11R - 2 * v11r
        alpha_r = 4 * v1r1
    else:
        alpha_r = 6 * vrrr
        v1r1 = alpha_r / 4
        v11r = (E11R - v1r1) / 2
        alpha_1 = 8 * v11r
    forms = {
        VertexLabel.V111: v111,
        VertexLabel.V11R: v11r,
        VertexLabel.V1R1: v1r1,
        VertexLabel.V1RR: V1RR_FORM,
        VertexLabel.VR1R: vr1r,
        VertexLabel.VRRR: vrrr,
    }
    return forms, {RadiusClass.LARGE: alpha_1, RadiusClass.SMALL: alpha_r}


def solve_base_potentials(x: Operand, eta: float = 0.0, delta_offset: float = 0.0) -> PotentialScheme:
    """Solve the base potentials on a stoichiometry interval.

    :param x: Sub-interval of [0, 1] on one side of 1/2.
    :param eta: Strengthening margin for bad neighbourhoods.
    :param delta_offset: Added to the maximal density; nonzero only for soundness checks.
    :returns: An uncalibrated scheme.
    :raises StraddlesHalf: If x contains points on both sides of 1/2.
    """
    xi = Interval.coerce(x)
    regime = regime_of(xi)
    delta = delta_max(xi) + delta_offset
    forms, alpha_forms = base_forms(regime)
    scheme = PotentialScheme(
        x=xi,
        regime=regime,
        delta=delta,
        v1rr=pinned_v1rr(xi, regime),
        forms=forms,
        alpha_forms=alpha_forms,
        edge_params=EDGE_TABLE[regime],
        eta=eta,
        delta_offset=delta_offset,
    )
    log.debug("base potentials on {}: alpha_1={} alpha_r={}", xi, scheme.alpha_1, scheme.alpha_r)
    return scheme


# ─── Identities ────────────────────────────────────────────────────────────────
def _density_factors(regime: Regime) -> tuple[tuple[Interval, Interval], tuple[Interval, Interval]]:
    """delta(x) = pi·(n0 + n1·x)/(d0 + d1·x) as ((n0, n1), (d0, d1))."""
    numerator = (R_SQUARED, 1 - R_SQUARED)
    if regime is Regime.X_GE_HALF:
        return numerator, (4 - 2 * SQRT3, 4 * SQRT3 - 4)
    return numerator, (2 * R_SQUARED * SQRT3, 4 - 4 * R_SQUARED * SQRT3)


def check_stoichiometry_identity(s: PotentialScheme) -> Interval:
    """Enclosure of x·alpha_1 + (1 - x)·alpha_r over the scheme's interval.

    Both alphas are affine in delta, so the combination is
    delta(x)·g(x) - h(x) with g and h affine in x. Substituting the closed form
    of delta leaves a quadratic polynomial over d(x) whose coefficients are
    evaluated first, so the enclosure does not grow with the width of x. A
    density offset contributes offset·g(x).
    """
    area = {q: isum([tight_area(k) * c for k, c in zip(KINDS, form.emptiness, strict=True) if c]) for q, form in s.alpha_forms.items()}
    cover = {q: isum([tight_coverage(k) * c for k, c in zip(KINDS, form.emptiness, strict=True) if c]) for q, form in s.alpha_forms.items()}
    pinned = {q: s.v1rr * form.pinned for q, form in s.alpha_forms.items()}
    big, small = RadiusClass.LARGE, RadiusClass.SMALL
    g0, g1 = area[small], area[big] - area[small]
    h0 = cover[small] - pinned[small]
    h1 = cover[big] - pinned[big] - h0
    (n0, n1), (d0, d1) = _density_factors(s.regime)
    c0 = PI * n0 * g0 - d0 * h0
    c1 = PI * (n0 * g1 + n1 * g0) - (d0 * h1 + d1 * h0)
    c2 = PI * n1 * g1 - d1 * h1
    x = s.x
    residual = (c0 + c1 * x + c2 * x.sqr()) / (d0 + d1 * x)
    if s.delta_offset:
        residual += s.delta_offset * (g0 + g1 * x)
    return residual


def equation_residuals(s: PotentialScheme) -> dict[str, Interval]:
    """Residuals of the eight defining equations, evaluated from the forms."""
    v = s.forms
    alpha_1, alpha_r = s.alpha_forms[RadiusClass.LARGE], s.alpha_forms[RadiusClass.SMALL]
    closing = (6 * v[VertexLabel.V111] - alpha_1) if s.regime is Regime.X_GE_HALF else (6 * v[VertexLabel.VRRR] - alpha_r)
    residuals = {
        "3·V111 = E111": 3 * v[VertexLabel.V111] - E111,
        "3·Vrrr = Errr": 3 * v[VertexLabel.VRRR] - ERRR,
        "2·V11r + V1r1 = E11r": 2 * v[VertexLabel.V11R] + v[VertexLabel.V1R1] - E11R,
        "2·V1rr + Vr1r = E1rr": 2 * v[VertexLabel.V1RR] + v[VertexLabel.VR1R] - E1RR,
        "8·V11r = alpha_1": 8 * v[VertexLabel.V11R] - alpha_1,
        "4·V1r1 = alpha_r": 4 * v[VertexLabel.V1R1] - alpha_r,
        "6·Vqqq = alpha_q": closing,
        "V1rr pinned": v[VertexLabel.V1RR] - V1RR_FORM,
    }
    return {name: s.evaluate(form) for name, form in residuals.items()}

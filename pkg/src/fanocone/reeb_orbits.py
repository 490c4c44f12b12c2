"""Morse-Bott families of closed Reeb orbits and their exact indices.

Families are labelled by (G, k, ell, component): an isotropy stratum, a
partial multiple k of the stratum order, and ell full loops; the period
is ell + k/|G| with the principal orbit normalized to period 1.  Two
independent engines compute the indices: a chart engine working from the
cyclic-quotient chart weights (with the trivialization anomaly
correction) and, for weighted circle actions on C^n, a diagonal-path
engine summing one rotation factor per ambient coordinate.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .cone_model import validate_presentation
from .discrepancy import InvalidPresentation, chart_element_value
from .rationals import format_rational
from .sympath_index import rs_index_factor

__all__ = [
    "ChartIndices",
    "OrbitFamily",
    "ReebRatio",
    "admissible_partial_multiples",
    "enumerate_families",
    "index_of_family_chart",
    "index_of_family_weighted",
    "inf_lsft",
    "reeb_ratio",
]


@dataclass(frozen=True)
class OrbitFamily:
    isotropy_order: int
    k: int
    ell: int
    component_id: str
    period: Fraction
    stratum_dim: int
    rs: Fraction
    lcz: Fraction
    z2: int
    lsft: Fraction

    def sort_key(self):
        return (self.period, self.isotropy_order, self.component_id, self.k)


@dataclass(frozen=True)
class ReebRatio:
    value: Fraction


@dataclass(frozen=True)
class ChartIndices:
    rs: Fraction
    lcz: Fraction
    lsft: Fraction
    stratum_dim: int
    # Trivialization-dependent intermediates, exposed for cross-checks only:
    # the chart-trivialized degree of the base orbit and of its m-th power.
    lsft_tau: Fraction
    lsft_tau_power: Fraction


def reeb_ratio(p):
    """R(M), the per-period Maslov winding; equals the Fano ratio r.

    Cross-checked against the principal ell=1 family, whose lowest SFT
    degree must be 2R - 2.
    """
    violations = validate_presentation(p)
    if violations:
        raise InvalidPresentation(violations)
    R = Fraction(p.r)
    principal = _principal_family(p, ell=1, R=R)
    if principal.lsft != 2 * R - 2:
        raise AssertionError(
            "principal-orbit cross-check failed: lsft %s != 2R-2 = %s"
            % (format_rational(principal.lsft), format_rational(2 * R - 2))
        )
    return ReebRatio(value=R)


def index_of_family_chart(chart, k, ell, r, R, n):
    """Chart-engine indices of the family wrapping k/m plus ell full loops.

    k >= m is folded into extra full loops; a multiple of m lands on the
    principal family, whose degree comes from the global formula 2R - 2
    per loop rather than the chart weights.
    """
    r, R = Fraction(r), Fraction(R)
    extra, km = divmod(k, chart.m)
    ell = ell + extra
    if km == 0:
        if ell <= 0:
            raise ValueError("period must be positive")
        rs = 2 * ell * R
        dim = n - 1
        lcz = rs - dim
        return ChartIndices(
            rs=rs, lcz=lcz, lsft=lcz + n - 3, stratum_dim=dim,
            lsft_tau=Fraction(2 * n - 4),
            lsft_tau_power=2 * sum(chart.m - wi for wi in chart.weights[1:]) - 2,
        )
    if ell < 0:
        raise ValueError("negative loop count")
    w = chart.weights_of_power(km)
    lsft0 = 2 * chart_element_value(chart, r, km) - 2
    dim = sum(1 for wi in w[1:] if wi == 0)
    lcz0 = lsft0 - n + 3
    rs0 = lcz0 + dim
    shift = 2 * ell * R
    return ChartIndices(
        rs=rs0 + shift,
        lcz=lcz0 + shift,
        lsft=lsft0 + shift,
        stratum_dim=dim,
        lsft_tau=Fraction(2 * n - 4),
        lsft_tau_power=2 * sum(chart.m - wi for wi in chart.weights[1:]) - 2,
    )


def index_of_family_weighted(w, isotropy_order, k, ell):
    """Diagonal-path engine: one rotation factor per ambient coordinate.

    The orbit runs for time T = ell + k/|G| and the j-th coordinate
    rotates with speed a_j; the stratum dimension is the number of
    coordinates closing up, projectivized.
    """
    if k == 0 and ell == 0:
        raise ValueError("period must be positive")
    if k < 0 or ell < 0 or not (0 <= k < isotropy_order or isotropy_order == 1):
        raise ValueError("invalid signature (k=%d, |G|=%d, ell=%d)" % (k, isotropy_order, ell))
    T = Fraction(ell) + Fraction(k, isotropy_order)
    rs = Fraction(0)
    closed = 0
    for a in w.a:
        rs += rs_index_factor(Fraction(a), T)
        if (a * T).denominator == 1:
            closed += 1
    dim = closed - 1
    lcz = rs - dim
    return rs, lcz, lcz + w.n - 3


def admissible_partial_multiples(orders, d):
    """Partial multiples k in 1..d-1 whose group element belongs to no
    smaller isotropy group in the stratification (divisibility test)."""
    out = []
    smaller = [dp for dp in orders if dp < d and d % dp == 0]
    for k in range(1, d):
        element_order = d // gcd(k, d)
        if not any(dp % element_order == 0 for dp in smaller):
            out.append(k)
    return out


def _principal_family(p, ell, R):
    principal = p.principal_stratum
    n = p.n
    rs = 2 * ell * R
    dim = n - 1
    lcz = rs - dim
    return OrbitFamily(
        isotropy_order=1,
        k=0,
        ell=ell,
        component_id=principal.component_id,
        period=Fraction(ell),
        stratum_dim=dim,
        rs=rs,
        lcz=lcz,
        z2=(n - 1) % 2,
        lsft=lcz + n - 3,
    )


def enumerate_families(p, max_period):
    """All orbit families with 0 < period <= max_period, indices included."""
    max_period = Fraction(max_period)
    if max_period <= 0:
        raise ValueError("max_period must be positive")
    violations = validate_presentation(p)
    if violations:
        raise InvalidPresentation(violations)
    R = Fraction(p.r)
    n = p.n
    orders = p.isotropy_orders
    families = []

    ell = 1
    while ell <= max_period:
        families.append(_principal_family(p, ell, R))
        ell += 1

    for stratum in p.strata:
        d = stratum.isotropy_order
        if d == 1:
            continue
        chart = p.chart(stratum.chart_ref)
        for k in admissible_partial_multiples(orders, d):
            chart_k = k * chart.m // d
            ell = 0
            while Fraction(ell) + Fraction(k, d) <= max_period:
                idx = index_of_family_chart(chart, chart_k, ell, p.r, R, n)
                if idx.stratum_dim != stratum.complex_dim:
                    raise InvalidPresentation(
                        [
                            "stratum (|G|=%d, %r): chart %r gives dimension %d for "
                            "element k=%d, stratum records %d"
                            % (d, stratum.component_id, chart.label, idx.stratum_dim,
                               k, stratum.complex_dim)
                        ]
                    )
                families.append(
                    OrbitFamily(
                        isotropy_order=d,
                        k=k,
                        ell=ell,
                        component_id=stratum.component_id,
                        period=Fraction(ell) + Fraction(k, d),
                        stratum_dim=idx.stratum_dim,
                        rs=idx.rs,
                        lcz=idx.lcz,
                        z2=(n - 1) % 2,
                        lsft=idx.lsft,
                    )
                )
                ell += 1
    families.sort(key=OrbitFamily.sort_key)
    return families


def inf_lsft(p):
    """Exact infimum of the lowest SFT degree over all closed orbits.

    With R > 0 only the ell = 0 partial orbits and the principal orbit
    compete, so the infimum is a finite minimum: every chart element
    joined with 2R - 2.
    """
    violations = validate_presentation(p)
    if violations:
        raise InvalidPresentation(violations)
    if p.r <= 0:
        raise ValueError("inf requires R > 0")
    best = 2 * Fraction(p.r) - 2
    for chart in p.charts:
        for k in range(1, chart.m):
            value = 2 * chart_element_value(chart, p.r, k) - 2
            if value < best:
                best = value
    return best

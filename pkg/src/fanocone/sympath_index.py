"""Exact index engine for paths of diagonal-unitary symplectic matrices.

A path is t |-> diag(e^{2 pi i rho_1 t}, ..., e^{2 pi i rho_d t}) on
[0, T] with rational speeds.  The Robbin-Salamon index of a single factor
is 2*rho*T when rho*T is an integer and 2*floor(rho*T)+1 otherwise; the
whole-path index is the factor sum.  A crossing-count oracle recomputes
the same quantity by enumerating the times where a factor passes through
the identity.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import ceil, floor

__all__ = [
    "DiagonalPath",
    "IndexBundle",
    "check_axioms",
    "index_bundle",
    "rs_crossing_oracle",
    "rs_index_factor",
    "rs_segment_oracle",
]


@dataclass(frozen=True)
class DiagonalPath:
    speeds: tuple
    duration: Fraction

    def __post_init__(self):
        object.__setattr__(self, "speeds", tuple(Fraction(s) for s in self.speeds))
        object.__setattr__(self, "duration", Fraction(self.duration))
        if self.duration <= 0:
            raise ValueError("duration must be positive")


@dataclass(frozen=True)
class IndexBundle:
    rs: Fraction
    lcz: Fraction
    kernel_half_dim: int
    z2: object  # 0/1, or None when lcz is not an integer

    def __add__(self, other):
        return index_bundle_from_parts(
            self.rs + other.rs, self.kernel_half_dim + other.kernel_half_dim
        )


def index_bundle_from_parts(rs, kernel_half_dim):
    lcz = rs - kernel_half_dim
    z2 = int(lcz) % 2 if lcz.denominator == 1 else None
    return IndexBundle(rs=rs, lcz=lcz, kernel_half_dim=kernel_half_dim, z2=z2)


def rs_index_factor(speed, duration):
    """Robbin-Salamon index of t |-> e^{2 pi i speed t} on [0, duration].

    Depends only on the product speed*duration; valid for speeds of any
    sign (the floor branch extends the positive-rotation normalization
    consistently with concatenation additivity).
    """
    if duration <= 0:
        raise ValueError("duration must be positive")
    total = Fraction(speed) * Fraction(duration)
    if total.denominator == 1:
        return 2 * total
    return Fraction(2 * floor(total) + 1)


def index_bundle(path):
    """Full index data: rs, kernel half-dimension, lower CZ, Z2 grade."""
    rs = Fraction(0)
    kern = 0
    for rho in path.speeds:
        rs += rs_index_factor(rho, path.duration)
        if (rho * path.duration).denominator == 1:
            kern += 1
    return index_bundle_from_parts(rs, kern)


def rs_segment_oracle(speed, a, b):
    """Crossing count for one factor restricted to the time window [a, b].

    Interior crossings (speed*t integral) contribute +/-2, boundary
    crossings +/-1, with the sign of the speed.
    """
    rho = Fraction(speed)
    a, b = Fraction(a), Fraction(b)
    if b <= a:
        raise ValueError("empty time window")
    if rho == 0:
        return Fraction(0)
    sign = 1 if rho > 0 else -1
    lo, hi = sorted((rho * a, rho * b))
    # Integers in the open interval (lo, hi).
    interior = floor(hi) - ceil(lo) + 1
    if lo.denominator == 1:
        interior -= 1
    if hi.denominator == 1:
        interior -= 1
    interior = max(interior, 0)
    boundary = int(lo.denominator == 1) + int(hi.denominator == 1)
    return Fraction(sign * (2 * interior + boundary))


def rs_crossing_oracle(path):
    """Independent Robbin-Salamon computation by crossing enumeration."""
    return sum(
        (rs_segment_oracle(rho, 0, path.duration) for rho in path.speeds if rho != 0),
        Fraction(0),
    )


def _direct_sum(path1, path2):
    """Direct sum after reparameterizing path2 to the duration of path1."""
    scale = path2.duration / path1.duration
    speeds = path1.speeds + tuple(rho * scale for rho in path2.speeds)
    return DiagonalPath(speeds=speeds, duration=path1.duration)


def check_axioms(paths):
    """Check the CZ/RS axiom suite on the given paths; returns failures.

    Per path: crossing-oracle agreement, the lower-CZ identity, the loop
    shift (adding a full loop per factor adds 2 per factor) and, at
    nondegenerate endpoints, the determinant-sign parity.  Per ordered
    pair: direct-sum additivity and concatenation in time.
    """
    failures = []
    for idx, path in enumerate(paths):
        bundle = index_bundle(path)
        oracle = rs_crossing_oracle(path)
        if bundle.rs != oracle:
            failures.append(
                "path %d: rs %s != crossing oracle %s" % (idx, bundle.rs, oracle)
            )
        if bundle.lcz + bundle.kernel_half_dim != bundle.rs:
            failures.append("path %d: lcz + kernel_half_dim != rs" % idx)
        if path.speeds:
            # One extra full loop per factor: each rho*T grows by 1.
            shifted = DiagonalPath(
                speeds=tuple(rho + 1 / path.duration for rho in path.speeds),
                duration=path.duration,
            )
            expect = bundle.rs + 2 * len(path.speeds)
            got = index_bundle(shifted).rs
            if got != expect:
                failures.append("path %d: loop shift gave %s, expected %s" % (idx, got, expect))
        if bundle.kernel_half_dim == 0:
            # det(id - phi(T)) = prod |1 - e^{2 pi i rho T}|^2 > 0, so the
            # CZ index must have the parity of the factor count.
            d = len(path.speeds)
            if bundle.lcz.denominator != 1 or (d - bundle.lcz) % 2 != 0:
                failures.append("path %d: det-sign parity violated" % idx)
    for i, p1 in enumerate(paths):
        for j, p2 in enumerate(paths):
            b1, b2 = index_bundle(p1), index_bundle(p2)
            both = index_bundle(_direct_sum(p1, p2))
            joint = b1 + b2
            if (both.rs, both.kernel_half_dim, both.lcz) != (
                joint.rs,
                joint.kernel_half_dim,
                joint.lcz,
            ):
                failures.append("pair (%d,%d): direct-sum additivity violated" % (i, j))
            # Same speeds run for T1 + T2 versus splitting the run at T1.
            total = index_bundle(
                DiagonalPath(speeds=p1.speeds, duration=p1.duration + p2.duration)
            ).rs
            split = b1.rs + sum(
                (
                    rs_segment_oracle(rho, p1.duration, p1.duration + p2.duration)
                    for rho in p1.speeds
                    if rho != 0
                ),
                Fraction(0),
            )
            if total != split:
                failures.append("pair (%d,%d): concatenation additivity violated" % (i, j))
    return failures

"""Lattice primitives: union-of-translates lattices over quadratic fields.

A lattice is the union over j of l_star @ (u_j + Z^2), stored exactly.
Membership, line-lattice containment and the minimal-translate certificate
are decided in exact arithmetic; floating point appears only when points
are realized for output.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import (
    DuplicateTranslateError,
    NotInLatticeError,
    PeriodTooLargeError,
    SingularMatrixError,
)
from .qfield import QuadNumber, Rational

Vec2 = tuple[QuadNumber, QuadNumber]
Mat2 = tuple[Vec2, Vec2]  # rows

PERIOD_CAP = 10**6


def qvec(x: QuadNumber | Rational, y: QuadNumber | Rational) -> Vec2:
    cast = lambda v: v if isinstance(v, QuadNumber) else QuadNumber(v)
    return (cast(x), cast(y))


def vec_add(u: Vec2, v: Vec2) -> Vec2:
    return (u[0] + v[0], u[1] + v[1])


def vec_sub(u: Vec2, v: Vec2) -> Vec2:
    return (u[0] - v[0], u[1] - v[1])


def vec_dot(u: Vec2, v: Vec2) -> QuadNumber:
    return u[0] * v[0] + u[1] * v[1]


def vec_is_integer(u: Vec2) -> bool:
    return u[0].is_integer() and u[1].is_integer()


def mat_det(m: Mat2) -> QuadNumber:
    return m[0][0] * m[1][1] - m[0][1] * m[1][0]


def mat_inv(m: Mat2) -> Mat2:
    det = mat_det(m)
    if det.is_zero():
        raise SingularMatrixError("matrix is singular")
    inv = det.inverse()
    return (
        (m[1][1] * inv, -m[0][1] * inv),
        (-m[1][0] * inv, m[0][0] * inv),
    )


def mat_vec(m: Mat2, v: Vec2) -> Vec2:
    return (
        m[0][0] * v[0] + m[0][1] * v[1],
        m[1][0] * v[0] + m[1][1] * v[1],
    )


def mat_float(m: Mat2) -> list[list[float]]:
    return [[float(e) for e in row] for row in m]


@dataclass(frozen=True)
class LatticePoint:
    """Index (j, m) of the lattice point l_star @ (u_j + m); j is 0-based."""

    j: int
    m: tuple[int, int]


@dataclass(frozen=True)
class RealizedPoint:
    x: float
    y: float
    j: int
    m: tuple[int, int]


@dataclass(frozen=True)
class LatticeSpec:
    """Exact description of a union-of-translates lattice in the plane."""

    name: str
    l_star: Mat2
    us: tuple[Vec2, ...]
    dim: int = 2

    @property
    def m(self) -> int:
        """Number of translates."""
        return len(self.us)

    def det_l(self) -> float:
        """|det L| = |det L*| as a float."""
        return abs(float(mat_det(self.l_star)))


def validate_spec(spec: LatticeSpec) -> LatticeSpec:
    """Check the structural invariants; return the spec unchanged if valid."""
    if spec.m < 1:
        raise DuplicateTranslateError("spec needs at least one translate")
    if mat_det(spec.l_star).is_zero():
        raise SingularMatrixError(f"{spec.name}: l_star is singular")
    for i in range(spec.m):
        for k in range(i + 1, spec.m):
            if vec_is_integer(vec_sub(spec.us[i], spec.us[k])):
                raise DuplicateTranslateError(
                    f"{spec.name}: translates {i} and {k} coincide mod Z^2"
                )
    return spec


def contains(spec: LatticeSpec, p: Vec2) -> LatticePoint | None:
    """Exact membership: the (j, m) with p = l_star @ (u_j + m), if any."""
    y = mat_vec(mat_inv(spec.l_star), p)
    for j, u in enumerate(spec.us):
        r = vec_sub(y, u)
        if vec_is_integer(r):
            return LatticePoint(j, (int(r[0].a), int(r[1].a)))
    return None


def realize_points(
    spec: LatticeSpec, bbox: tuple[float, float, float, float]
) -> list[RealizedPoint]:
    """All lattice points inside the closed bbox (x0, y0, x1, y1), as floats.

    Points are tagged with their (j, m) index and sorted lexicographically
    by (x, y, j).  A degenerate bbox yields an empty list.
    """
    x0, y0, x1, y1 = bbox
    if not (x1 > x0 and y1 > y0):
        return []
    inv = [[float(e) for e in row] for row in mat_inv(spec.l_star)]
    corners = [(x0, y0), (x0, y1), (x1, y0), (x1, y1)]
    pre = [
        (inv[0][0] * cx + inv[0][1] * cy, inv[1][0] * cx + inv[1][1] * cy)
        for cx, cy in corners
    ]
    lo0 = math.floor(min(p[0] for p in pre)) - 1
    hi0 = math.ceil(max(p[0] for p in pre)) + 1
    lo1 = math.floor(min(p[1] for p in pre)) - 1
    hi1 = math.ceil(max(p[1] for p in pre)) + 1
    lsf = mat_float(spec.l_star)
    out = []
    for j, u in enumerate(spec.us):
        ux, uy = float(u[0]), float(u[1])
        for m0 in range(lo0, hi0 + 1):
            for m1 in range(lo1, hi1 + 1):
                yx, yy = ux + m0, uy + m1
                px = lsf[0][0] * yx + lsf[0][1] * yy
                py = lsf[1][0] * yx + lsf[1][1] * yy
                if x0 <= px <= x1 and y0 <= py <= y1:
                    out.append(RealizedPoint(px, py, j, (m0, m1)))
    out.sort(key=lambda r: (r.x, r.y, r.j))
    return out


def _fraction_lcm(values: Iterable[Fraction]) -> int:
    out = 1
    for v in values:
        out = math.lcm(out, v.denominator)
    return out


def line_lattice_subset(spec: LatticeSpec, a: Vec2, b: Vec2) -> bool:
    """Whether the progression {a + k(b-a) : k in Z} lies inside the lattice.

    Decided exactly: in (l_star)^-1 coordinates the membership pattern is
    periodic in k; the period is the lcm of the relevant denominators, and
    every residue is tested.  An irrational direction can meet the lattice
    at only finitely many k, hence yields False.
    """
    if contains(spec, a) is None or contains(spec, b) is None:
        raise NotInLatticeError("endpoints must belong to the lattice")
    inv = mat_inv(spec.l_star)
    x0 = mat_vec(inv, a)
    delta = mat_vec(inv, vec_sub(b, a))
    if not (delta[0].is_rational() and delta[1].is_rational()):
        return False
    dx, dy = delta[0].rational_part(), delta[1].rational_part()
    residues = []
    denoms = [dx, dy]
    for u in spec.us:
        r = vec_sub(x0, u)
        if r[0].is_rational() and r[1].is_rational():
            rx, ry = r[0].rational_part(), r[1].rational_part()
            residues.append((rx, ry))
            denoms.extend((rx, ry))
    if not residues:
        return False
    period = _fraction_lcm(denoms)
    if period > PERIOD_CAP:
        raise PeriodTooLargeError(f"membership period {period} exceeds {PERIOD_CAP}")
    for k in range(period):
        if not any(
            (rx + k * dx).denominator == 1 and (ry + k * dy).denominator == 1
            for rx, ry in residues
        ):
            return False
    return True


def minimality_certificate(spec: LatticeSpec, witnesses: Sequence[Vec2]) -> bool:
    """Certify that no representation of the lattice uses fewer translates.

    True when no two witness points generate a line lattice contained in the
    lattice; the witnesses must be spec.m distinct lattice points.  The
    criterion is sufficient, not necessary: False means "not certified".
    """
    if len(witnesses) != spec.m:
        raise ValueError(f"expected {spec.m} witnesses, got {len(witnesses)}")
    for i in range(len(witnesses)):
        for k in range(i + 1, len(witnesses)):
            if line_lattice_subset(spec, witnesses[i], witnesses[k]):
                return False
    return True

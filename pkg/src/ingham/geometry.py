"""Integration-domain geometry, disk bounds and polyomino enumeration.

The integration domain is L^{-1} of the union of translated cubes
2*pi*n_k + (0,2*pi)^2, a union of M parallelogram cells with pairwise
disjoint interiors.  Cell vertices determine area (shoelace) and diameter
(farthest vertex pair, valid by convexity of the cells).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import SizeTooLargeError
from .lattice import LatticeSpec, mat_float
from .spectral import TranslationConfig

TWO_PI = 2.0 * math.pi

POLYOMINO_MAX = 8


@dataclass(frozen=True, eq=False)
class DomainGeometry:
    """Cells of the integration domain with their aggregate measurements."""

    cells: np.ndarray  # (M, 4, 2) vertices, cells[k] counterclockwise in preimage
    area: float
    diameter: float
    connected: bool


@dataclass(frozen=True)
class DiskBounds:
    """Radii bracketing the disks for which the two-sided estimate can hold."""

    r_sufficient: float  # half the domain diameter: such a disk contains a translate
    r_necessary: float  # sqrt(area/pi): any valid disk has at least the domain's area
    r_bessel: float  # 2 * (first positive root of J0), uniform-gap sufficient radius


@dataclass(frozen=True)
class PolyominoShape:
    """Edge-connected cell set, translation-normalized to min coordinates 0."""

    cells: tuple[tuple[int, int], ...]

    @property
    def size(self) -> int:
        return len(self.cells)

    @staticmethod
    def canonical(cells) -> "PolyominoShape":
        pts = [(int(x), int(y)) for x, y in cells]
        mx = min(x for x, _ in pts)
        my = min(y for _, y in pts)
        return PolyominoShape(tuple(sorted((x - mx, y - my) for x, y in pts)))


def _l_inverse(spec: LatticeSpec) -> np.ndarray:
    """L^{-1} as floats; L is the transpose of the stored adjoint."""
    l = np.array(mat_float(spec.l_star)).T
    return np.linalg.inv(l)


def omega_cells(spec: LatticeSpec, config: TranslationConfig) -> DomainGeometry:
    """Construct the M parallelogram cells L^{-1}(2*pi*n_k + (0,2*pi)^2)."""
    linv = _l_inverse(spec)
    corners = np.array([(0.0, 0.0), (TWO_PI, 0.0), (TWO_PI, TWO_PI), (0.0, TWO_PI)])
    cells = np.empty((config.m, 4, 2))
    for k, n in enumerate(config.ns):
        cells[k] = (corners + TWO_PI * np.asarray(n, dtype=float)) @ linv.T
    verts = cells.reshape(-1, 2)
    diffs = verts[:, None, :] - verts[None, :, :]
    diameter = float(np.sqrt((diffs**2).sum(-1)).max())
    return DomainGeometry(
        cells=cells,
        area=sum(_shoelace(c) for c in cells),
        diameter=diameter,
        connected=is_connected(config.ns),
    )


def _shoelace(poly: np.ndarray) -> float:
    x, y = poly[:, 0], poly[:, 1]
    return 0.5 * abs(float(np.dot(x, np.roll(y, -1)) - np.dot(y, np.roll(x, -1))))


def area_check(geometry: DomainGeometry, spec: LatticeSpec) -> float:
    """Polygon-union (shoelace) area, verified against M (2*pi)^2 / |det L|."""
    want = expected_area(spec, len(geometry.cells))
    if abs(geometry.area - want) > 1e-9 * want:
        raise AssertionError(
            f"cell union area {geometry.area!r} != volume formula {want!r}"
        )
    return geometry.area


def expected_area(spec: LatticeSpec, m: int) -> float:
    return m * TWO_PI**2 / spec.det_l()


def disk_bounds(geometry: DomainGeometry) -> DiskBounds:
    return DiskBounds(
        r_sufficient=geometry.diameter / 2.0,
        r_necessary=math.sqrt(geometry.area / math.pi),
        r_bessel=2.0 * bessel_j0_root(),
    )


def bessel_j0(x: float) -> float:
    """J0 by its alternating power series; ample for |x| <= 4."""
    term = 1.0
    total = 1.0
    q = x * x / 4.0
    for k in range(1, 60):
        term *= -q / (k * k)
        total += term
        if abs(term) < 1e-18:
            break
    return total


@lru_cache(maxsize=1)
def bessel_j0_root() -> float:
    """Smallest positive root of J0, by bisection on [2, 3]."""
    lo, hi = 2.0, 3.0
    flo = bessel_j0(lo)
    for _ in range(80):
        mid = (lo + hi) / 2.0
        fm = bessel_j0(mid)
        if fm == 0.0:
            return mid
        if (flo > 0) == (fm > 0):
            lo, flo = mid, fm
        else:
            hi = mid
    return (lo + hi) / 2.0


def is_connected(cells) -> bool:
    """Edge connectivity (4-neighborhood) of a set of distinct grid cells."""
    cells = [tuple(int(v) for v in c) for c in cells]
    todo = set(cells)
    stack = [cells[0]]
    todo.discard(cells[0])
    while stack:
        x, y = stack.pop()
        for nb in ((x + 1, y), (x - 1, y), (x, y + 1), (x, y - 1)):
            if nb in todo:
                todo.discard(nb)
                stack.append(nb)
    return not todo


def fixed_polyominoes(size: int) -> list[PolyominoShape]:
    """All fixed (translation-only) polyominoes of the given size, sorted."""
    if not 1 <= size <= POLYOMINO_MAX:
        raise SizeTooLargeError(f"size must be in 1..{POLYOMINO_MAX}, got {size}")
    shapes = {((0, 0),)}
    for _ in range(size - 1):
        grown = set()
        for shape in shapes:
            have = set(shape)
            for x, y in shape:
                for nb in ((x + 1, y), (x - 1, y), (x, y + 1), (x, y - 1)):
                    if nb not in have:
                        grown.add(PolyominoShape.canonical(shape + (nb,)).cells)
        shapes = grown
    return [PolyominoShape(s) for s in sorted(shapes)]


def cells_csv_rows(geometry: DomainGeometry) -> list[tuple[int, int, float, float]]:
    """Flatten cell polygons to (cell_index, vertex_index, x, y) rows."""
    rows = []
    for k, cell in enumerate(geometry.cells):
        for v, (x, y) in enumerate(cell):
            rows.append((k, v, float(x), float(y)))
    return rows

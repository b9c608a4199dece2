import math

import pytest

from ingham import catalog
from ingham.errors import SizeTooLargeError
from ingham.geometry import (
    PolyominoShape,
    area_check,
    bessel_j0,
    bessel_j0_root,
    cells_csv_rows,
    disk_bounds,
    expected_area,
    fixed_polyominoes,
    is_connected,
    omega_cells,
)
from ingham.spectral import TranslationConfig

TWO_PI = 2 * math.pi


def geom(name, config_name=None):
    entry = catalog.get(name)
    cfg = entry.default_configs[config_name or entry.primary_config]
    return entry.spec, omega_cells(entry.spec, cfg)


def test_triangular_cell_vertices():
    _, g = geom("triangular")
    want = {
        (0.0, 0.0),
        (TWO_PI, -TWO_PI / math.sqrt(3)),
        (0.0, 2 * TWO_PI / math.sqrt(3)),
        (TWO_PI, TWO_PI / math.sqrt(3)),
    }
    got = {(round(x, 9), round(y, 9)) for x, y in g.cells.reshape(-1, 2)}
    assert got == {(round(x, 9), round(y, 9)) for x, y in want}


def test_honeycomb_union_vertices():
    _, g = geom("honeycomb", "right")
    outer = {
        (0.0, 0.0),
        (-TWO_PI / 3, TWO_PI / math.sqrt(3)),
        (TWO_PI, TWO_PI / math.sqrt(3)),
        (4 * TWO_PI / 3, 0.0),
    }
    got = {(round(x, 9), round(y, 9)) for x, y in g.cells.reshape(-1, 2)}
    for x, y in outer:
        assert (round(x, 9), round(y, 9)) in got


def test_identity_lattice_cube():
    _, g = geom("square")
    got = {(round(x, 9), round(y, 9)) for x, y in g.cells.reshape(-1, 2)}
    assert got == {(0.0, 0.0), (round(TWO_PI, 9), 0.0),
                   (round(TWO_PI, 9), round(TWO_PI, 9)), (0.0, round(TWO_PI, 9))}


def test_areas_match_closed_forms():
    spec, g = geom("triangular")
    assert area_check(g, spec) == pytest.approx(8 * math.pi**2 / math.sqrt(3), rel=1e-9)
    spec, g = geom("honeycomb", "right")
    assert area_check(g, spec) == pytest.approx(16 * math.pi**2 / (3 * math.sqrt(3)), rel=1e-9)
    spec, g = geom("honeycomb", "up")
    assert area_check(g, spec) == pytest.approx(16 * math.pi**2 / (3 * math.sqrt(3)), rel=1e-9)
    spec, g = geom("square")
    assert area_check(g, spec) == pytest.approx(TWO_PI**2, rel=1e-12)


def test_area_equals_sum_of_cells_no_overlap(catalog_entries):
    for entry in catalog_entries.values():
        g = omega_cells(entry.spec, entry.default_configs[entry.primary_config])
        assert g.area == pytest.approx(expected_area(entry.spec, entry.spec.m), rel=1e-9)


def test_disk_bounds_triangular():
    _, g = geom("triangular")
    db = disk_bounds(g)
    assert db.r_sufficient == pytest.approx(TWO_PI, rel=1e-9)
    assert db.r_sufficient == pytest.approx(6.28, abs=5e-3)
    assert db.r_necessary == pytest.approx(math.sqrt(8 * math.pi / math.sqrt(3)), rel=1e-9)
    assert db.r_necessary == pytest.approx(3.8, abs=5e-2)
    assert db.r_bessel == pytest.approx(4.8096, abs=5e-4)


def test_disk_bounds_honeycomb_both_choices():
    for cfg in ("right", "up"):
        _, g = geom("honeycomb", cfg)
        db = disk_bounds(g)
        assert db.r_sufficient == pytest.approx(2 * math.pi * math.sqrt(7) / 3, rel=1e-9)
        assert db.r_sufficient == pytest.approx(5.54, abs=5e-3)
        assert db.r_necessary == pytest.approx(4 * math.sqrt(math.pi) / 3**0.75, rel=1e-9)
        assert db.r_necessary == pytest.approx(3.11, abs=5e-3)


def test_disk_bounds_unit_square():
    _, g = geom("square")
    db = disk_bounds(g)
    assert db.r_sufficient == pytest.approx(math.sqrt(2) * math.pi, rel=1e-12)
    assert db.r_necessary == pytest.approx(2 * math.sqrt(math.pi), rel=1e-12)


def test_necessary_below_sufficient(catalog_entries):
    for entry in catalog_entries.values():
        g = omega_cells(entry.spec, entry.default_configs[entry.primary_config])
        db = disk_bounds(g)
        assert db.r_necessary <= db.r_sufficient


def test_diameter_translation_invariant():
    entry = catalog.get("honeycomb")
    g1 = omega_cells(entry.spec, TranslationConfig.of((0, 0), (1, 0)))
    g2 = omega_cells(entry.spec, TranslationConfig.of((5, -2), (6, -2)))
    assert g1.diameter == pytest.approx(g2.diameter, rel=1e-12)


def test_bessel_root_value():
    rho = bessel_j0_root()
    assert rho == pytest.approx(2.40482556, abs=1e-7)
    assert abs(bessel_j0(rho)) < 1e-10
    assert 2 * rho == pytest.approx(4.8096, abs=5e-4)


def test_is_connected():
    assert is_connected([(0, 0), (1, 0), (2, 0), (3, 0)])
    assert not is_connected([(0, 0), (1, 1)])
    assert is_connected([(0, 0), (0, 1), (0, 2), (0, 3), (1, 3), (1, 4)])


def test_fixed_polyomino_counts():
    # independent reference: the fixed-polyomino counting sequence
    for size, count in [(1, 1), (2, 2), (3, 6), (4, 19), (5, 63), (6, 216)]:
        assert len(fixed_polyominoes(size)) == count


def test_fixed_polyominoes_canonical_and_sorted():
    shapes = fixed_polyominoes(4)
    assert shapes == sorted(shapes, key=lambda s: s.cells)
    for s in shapes:
        assert min(x for x, _ in s.cells) == 0
        assert min(y for _, y in s.cells) == 0
        assert is_connected(s.cells)


def test_fixed_polyominoes_rotation_permutes_set():
    shapes = {s.cells for s in fixed_polyominoes(4)}
    rotated = {
        PolyominoShape.canonical([(-y, x) for x, y in cells]).cells for cells in shapes
    }
    assert rotated == shapes


def test_fixed_polyominoes_size_bounds():
    with pytest.raises(SizeTooLargeError):
        fixed_polyominoes(9)
    with pytest.raises(SizeTooLargeError):
        fixed_polyominoes(0)


def test_cells_csv_rows():
    _, g = geom("honeycomb", "right")
    rows = cells_csv_rows(g)
    assert len(rows) == 8
    assert rows[0][:2] == (0, 0)
    assert rows[-1][:2] == (1, 3)

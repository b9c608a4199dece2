from itertools import combinations

import pytest

from ingham import catalog
from ingham.search import (
    SurveyResult,
    a2_sweep_unstable,
    canonical_config,
    classify_all,
    classify_configs,
    config_count,
    connected_survey,
    enumerate_configs,
    rank_by_conditioning,
    survey_csv_rows,
    translation_classes,
)
from ingham.spectral import ingham_constants, TranslationConfig


def test_enumerate_counts():
    assert sum(1 for _ in enumerate_configs(3, 4)) == 1820
    assert sum(1 for _ in enumerate_configs(2, 3)) == 84
    assert sum(1 for _ in enumerate_configs(1, 4)) == 1
    assert config_count(3, 4) == 1820


def test_enumerate_lexicographic():
    configs = list(enumerate_configs(1, 2))
    assert configs[0] == ((0, 0), (0, 1))
    assert configs == sorted(configs)


def test_classify_matches_per_config_path():
    entry = catalog.get("snub_square")
    result = classify_all(entry.spec, 1, 4)
    for rec in result.records:
        sr = ingham_constants(entry.spec, TranslationConfig(rec.config))
        assert rec.kappa1 == pytest.approx(sr.kappa1, abs=1e-9)
        assert rec.kappa2 == pytest.approx(sr.kappa2, abs=1e-9)
        assert rec.a2 == sr.satisfies_a2
        assert rec.det_abs == pytest.approx(sr.det_abs, abs=1e-9)


def test_trihexagonal_survey():
    entry = catalog.get("trihexagonal")
    result = classify_all(entry.spec, 2, 3)
    assert result.total == 84
    assert result.passing == 36
    for rec in result.records:
        if rec.a2:
            assert rec.kappa1 == pytest.approx(1.0, abs=1e-9)
            assert rec.kappa2 == pytest.approx(4.0, abs=1e-9)


def test_two_square_survey_counts():
    for R, want in [(2, 9), (3, 28), (4, 0), (5, 4)]:
        spec = catalog.get("two_square", r=1, R=R).spec
        assert classify_all(spec, 3, 4).failing == want


def test_snub_square_survey_and_connected():
    entry = catalog.get("snub_square")
    assert classify_all(entry.spec, 3, 4).failing == 76
    connected = connected_survey(entry.spec)
    assert connected.total == 19
    assert connected.failing == 0


def test_truncated_square_survey_and_connected():
    entry = catalog.get("truncated_square")
    assert classify_all(entry.spec, 3, 4).failing == 278
    connected = connected_survey(entry.spec)
    assert connected.passing == 10
    assert connected.failing == 9


def test_elongated_connected_dominoes():
    entry = catalog.get("elongated_triangular")
    result = connected_survey(entry.spec)
    assert result.total == 2 and result.failing == 0
    pairs = sorted((round(r.kappa1, 2), round(r.kappa2, 2)) for r in result.records)
    assert pairs == [(0.67, 3.33), (1.77, 2.23)]


def test_rank_by_conditioning_elongated_classes():
    entry = catalog.get("elongated_triangular")
    classes = translation_classes(combinations(((0, 0), (0, 1), (1, 0), (1, 1)), 2))
    assert len(classes) == 4
    records = classify_configs(entry.spec, [c.representative for c in classes])
    ranked = rank_by_conditioning(
        SurveyResult(4, 4, 0, tuple(records))
    )
    assert [r.config for r in ranked] == [
        ((0, 0), (0, 1)),
        ((0, 0), (1, 0)),
        ((0, 0), (1, 1)),
        ((0, 1), (1, 0)),
    ]
    # the middle two classes share their pair exactly
    assert ranked[1].kappa1 == pytest.approx(ranked[2].kappa1, abs=1e-12)


def test_rank_ties_preserve_lexicographic_order():
    entry = catalog.get("trihexagonal")
    result = classify_all(entry.spec, 2, 3)
    ranked = rank_by_conditioning(result)
    # all ratios equal 4, so the order must be plain lexicographic
    configs = [r.config for r in ranked]
    assert configs == sorted(configs)


def test_translation_classes_basic():
    classes = translation_classes([((0, 0), (0, 1)), ((1, 1), (1, 2))])
    assert len(classes) == 1
    assert classes[0].representative == ((0, 0), (0, 1))
    assert classes[0].members == 2


def test_translation_classes_two_subsets_of_3x3():
    classes = translation_classes(combinations([(a, b) for a in range(3) for b in range(3)], 2))
    full = {c.representative for c in classes if max(max(p) for p in c.representative) <= 1}
    # diffs (1,0),(0,1),(1,1),(1,-1) are the classes inside the 2x2 block
    assert full == {
        ((0, 0), (1, 0)),
        ((0, 0), (0, 1)),
        ((0, 0), (1, 1)),
        ((0, 1), (1, 0)),
    }


def test_translation_classes_count_matches_pattern_oracle():
    # classes of 4-subsets of the 4x4 grid == canonical 4-cell patterns in a 4x4 box
    classes = translation_classes(enumerate_configs(3, 4))
    patterns = set()
    for cfg in combinations([(a, b) for a in range(4) for b in range(4)], 4):
        canon = canonical_config(cfg)
        w = max(p[0] for p in canon)
        h = max(p[1] for p in canon)
        if w <= 3 and h <= 3:
            patterns.add(canon)
    assert {c.representative for c in classes} == patterns
    assert sum(c.members for c in classes) == 1820


def test_a2_sweep_stability_catalog_surveys():
    jobs = [
        (catalog.get("two_square", r=1, R=2).spec, 3, 4),
        (catalog.get("two_square", r=1, R=4).spec, 3, 4),
        (catalog.get("trihexagonal").spec, 2, 3),
        (catalog.get("snub_square").spec, 3, 4),
        (catalog.get("truncated_square").spec, 3, 4),
    ]
    for spec, grid, m in jobs:
        counts, unstable = a2_sweep_unstable(spec, grid, m)
        assert len(set(counts.values())) == 1, (spec.name, counts)
        assert unstable == []


def test_determinism_byte_identical():
    entry = catalog.get("snub_square")
    a = survey_csv_rows(classify_all(entry.spec, 3, 4))
    b = survey_csv_rows(classify_all(entry.spec, 3, 4))
    assert a == b

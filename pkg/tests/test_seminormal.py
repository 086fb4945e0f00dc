"""Seminormal forms, idempotents, and semisimplicity certificates."""

from fractions import Fraction

import pytest

from celltower.combinat import content
from celltower.linalg import mat_det
from celltower.murphy import LevelData
from celltower.seminormal import (
    JmSpectrum,
    ambient_gz,
    central_idempotents,
    matrix_unit,
    semisimplicity_certificate,
    seminormal_cell,
    seminormal_suite,
    specialized_copy,
)
from celltower.towers import make_tower

SMALL = (
    ("symmetric", None, 3),
    ("hecke", None, 3),
    ("tl", 0, 3),
    ("brauer", 0, 3),
    ("partition", 5, 4),
)


@pytest.mark.parametrize("name,param,level", SMALL)
def test_seminormal_suite_small(name, param, level):
    tower = make_tower(name, level, param)
    report = seminormal_suite(tower, level, truncation_levels=(1, level - 1))
    failures = [r for r in report.results if r.status != "pass"]
    assert not failures, failures


def test_symmetric_jm_eigenvalues_are_contents():
    tower = make_tower("symmetric", 4)
    spec = JmSpectrum.get(tower, 4)
    data = LevelData.get(tower, 4)
    for lam in data.cells:
        for t in data.paths[lam]:
            for k in range(1, 5):
                small = t.label(k - 1)
                big = t.label(k)
                assert spec.kappa(k, small, big) == Fraction(content(small, big))


def test_jm_separation_certificates():
    for name, param, level in (("symmetric", None, 4), ("brauer", 0, 3)):
        tower = make_tower(name, level, param)
        cert = semisimplicity_certificate(tower, level)
        assert cert["status"] == "pass"
        assert cert["method"] == "jm-separation"


def test_partition_certificate_detects_degeneracy():
    # The middle levels of the n = 3 tower are genuinely not semisimple:
    # one Gram determinant vanishes, and no central idempotent exists.
    tower = make_tower("partition", 5, 3)
    cert = semisimplicity_certificate(tower, 5)
    assert cert["status"] == "fail"
    assert cert["determinants"]["(1,)"] == "0"
    with pytest.raises(ValueError, match="not semisimple"):
        central_idempotents(tower, 5)


def test_partition_certificate_passes_at_large_parameter():
    tower = make_tower("partition", 5, 7)
    cert = semisimplicity_certificate(tower, 5)
    assert cert["status"] == "pass"


def test_gamma_product_equals_gram_determinant():
    tower = make_tower("symmetric", 4)
    data = LevelData.get(tower, 4)
    for ci, lam in enumerate(data.cells):
        cell = seminormal_cell(tower, 4, ci)
        gammas = cell.gammas()
        det = mat_det(data.gram_matrix(ci), tower.domain)
        prod = tower.domain(1)
        for g in gammas:
            prod = prod * g
        assert prod == det


def test_matrix_units_multiply_correctly():
    tower = make_tower("symmetric", 3)
    e1 = matrix_unit(tower, 3, 1, 0, 1)
    e2 = matrix_unit(tower, 3, 1, 1, 0)
    e3 = matrix_unit(tower, 3, 1, 0, 0)
    assert e1 * e2 == e3
    assert e3 * e3 == e3
    assert (e1 * e1).is_zero()


def test_gz_idempotents_resolve_identity():
    for name, param, level in (("symmetric", None, 3), ("tl", 0, 3)):
        tower = make_tower(name, level, param)
        data = LevelData.get(tower, level)
        alg = tower.level(level)
        total = alg.zero()
        for lam in data.cells:
            for t in data.paths[lam]:
                f = ambient_gz(tower, level, t)
                assert f * f == f
                total = total + f
        assert total == alg.one()


def test_specialized_copy_preserves_structure():
    tower = make_tower("brauer", 3, 0)
    sp = specialized_copy(tower)
    alg = tower.level(3)
    sp_alg = sp.level(3)
    assert sp_alg.dimension == alg.dimension
    report = seminormal_suite(sp, 3)
    failures = [r for r in report.results if r.status != "pass"]
    assert not failures, failures

"""Tower levels, diagram composition, and the Murphy basis machinery."""

from math import factorial

import pytest

from celltower.checks import full_axiom_suite
from celltower.murphy import LevelData
from celltower.providers.diagram import (
    compose,
    flip_lr,
    mirror,
    partition_diagrams,
)
from celltower.towers import make_tower


def _dimension_profile(tower, max_level):
    return [tower.level(r).dimension for r in range(max_level + 1)]


def test_level_dimensions():
    assert _dimension_profile(make_tower("symmetric", 4), 4) == [1, 1, 2, 6, 24]
    assert _dimension_profile(make_tower("hecke", 4), 4) == [1, 1, 2, 6, 24]
    assert _dimension_profile(make_tower("tl", 4), 4) == [1, 1, 2, 5, 14]
    assert _dimension_profile(make_tower("brauer", 4), 4) == [1, 1, 3, 15, 105]
    assert _dimension_profile(make_tower("partition", 6, 5), 6) == [
        1,
        1,
        2,
        5,
        15,
        52,
        203,
    ]


def test_partition_tower_needs_parameter():
    with pytest.raises(ValueError):
        make_tower("partition", 4)


def test_diagram_composition_identities():
    for k in (2, 3):
        for d in partition_diagrams(k, False):
            assert mirror(mirror(d, k), k) == d
            assert flip_lr(flip_lr(d, k), k) == d
            _, removed = compose(d, mirror(d, k), k)
            assert removed >= 0


def test_hecke_specializes_to_symmetric_group():
    """The Hecke structure constants at q=1 match the group algebra."""
    from celltower.scalars import evaluate_at

    hecke = make_tower("hecke", 3)
    sym = make_tower("symmetric", 3)
    hg, sg = hecke.generators(3), sym.generators(3)
    for hi, si in zip(hg, sg):
        for hj, sj in zip(hg, sg):
            prod_h = hi * hj
            prod_s = si * sj
            evaluated = {
                b: evaluate_at(c, 1) for b, c in prod_h.terms.items()
            }
            want = {b: evaluate_at(c, 1) for b, c in prod_s.terms.items()}
            assert {b: c for b, c in evaluated.items() if c} == {
                b: c for b, c in want.items() if c
            }


@pytest.mark.parametrize(
    "name,param,max_level",
    [
        ("symmetric", None, 3),
        ("hecke", None, 3),
        ("tl", 0, 3),
        ("brauer", 0, 3),
        ("partition", 5, 4),
    ],
)
def test_axiom_suite_small_levels(name, param, max_level):
    tower = make_tower(name, max_level, param)
    report = full_axiom_suite(tower, max_level)
    failures = [r for r in report.results if r.status != "pass"]
    assert not failures, failures


def test_murphy_basis_spans_every_level():
    # LevelData raises if the Murphy elements fail to form a basis.
    for name, param, levels in (
        ("symmetric", None, 4),
        ("brauer", 0, 3),
        ("partition", 5, 4),
    ):
        tower = make_tower(name, levels, param)
        data = LevelData.get(tower, levels)
        assert data.ech.rank == tower.level(levels).dimension


def test_murphy_cell_dimensions_match_path_counts():
    tower = make_tower("symmetric", 4)
    data = LevelData.get(tower, 4)
    dims = {lam: len(data.paths[lam]) for lam in data.cells}
    assert dims == {
        (4,): 1,
        (3, 1): 3,
        (2, 2): 2,
        (2, 1, 1): 3,
        (1, 1, 1, 1): 1,
    }
    assert sum(d * d for d in dims.values()) == factorial(4)


def test_coordinates_round_trip():
    tower = make_tower("brauer", 3, 0)
    data = LevelData.get(tower, 3)
    alg = tower.level(3)
    x = alg.one()
    for g in tower.generators(3):
        x = x + g * g
    coords = data.coords(x)
    from celltower.elements import element_sum

    rebuilt = element_sum(
        data.m_elt[tag].scale(c) for tag, c in coords.items()
    )
    assert rebuilt == x

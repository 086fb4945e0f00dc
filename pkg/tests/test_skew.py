"""Skew cell modules, multiplicities, and the two Kronecker pipelines."""

import pytest

from celltower.characters import (
    littlewood_richardson,
    lr_and_kostka,
    stable_kronecker_oracle,
)
from celltower.combinat import (
    SkewShape,
    enumerate_paths,
    partitions_of,
    standard_paths,
)
from celltower.skew import (
    SkewModule,
    hom_adjunction_check,
    idempotent_realization,
    module_multiplicities,
    modules_agree,
    permutation_multiplicity,
    right_ideal_module,
    skew_multiplicities,
    stable_kronecker_engine,
)
from celltower.towers import make_tower


@pytest.fixture(scope="module")
def sym4():
    return make_tower("symmetric", 4)


def test_skew_dimensions_count_skew_paths(sym4):
    g = sym4.graph
    for r in range(1, 5):
        for s in range(r):
            for nu in partitions_of(r):
                for lam in partitions_of(s):
                    expected = enumerate_paths(g, SkewShape(lam, nu, s, r))
                    if not expected:
                        continue
                    module = SkewModule(sym4, r, s, nu, lam)
                    assert module.dim == len(expected)


def test_skew_multiplicities_match_littlewood_richardson(sym4):
    for r in range(1, 5):
        for s in range(r):
            for nu in partitions_of(r):
                for lam in partitions_of(s):
                    if not enumerate_paths(
                        sym4.graph, SkewShape(lam, nu, s, r)
                    ):
                        continue
                    mults = skew_multiplicities(sym4, r, s, nu, lam)
                    for mu in partitions_of(r - s):
                        want = littlewood_richardson(lam, mu, nu)
                        assert mults.get(mu, 0) == want


def test_skew_module_is_independent_of_the_inner_path(sym4):
    g = sym4.graph
    nu, lam, r, s = (3, 1), (2,), 4, 2
    inner_paths = standard_paths(g, lam, s)
    assert len(inner_paths) >= 1
    reference = skew_multiplicities(sym4, r, s, nu, lam)
    for t in inner_paths:
        assert skew_multiplicities(sym4, r, s, nu, lam, t) == reference


def test_idempotent_realization_agrees_with_quotient(sym4):
    g = sym4.graph
    nu, lam, r, s = (2, 2), (1, 1), 4, 2
    quotient = SkewModule(sym4, r, s, nu, lam)
    dim, act = idempotent_realization(sym4, r, s, nu, lam)
    assert dim == quotient.dim
    assert modules_agree(
        sym4, r - s, quotient.dim, quotient.action_of, dim, act
    )
    # A second seminormal path through the inner shape gives the same module.
    other = standard_paths(g, lam, s)
    for t in other:
        dim2, act2 = idempotent_realization(sym4, r, s, nu, lam, t)
        assert dim2 == dim
        assert modules_agree(sym4, r - s, dim, act, dim2, act2)


def test_right_ideal_decomposition(sym4):
    # c_mu A decomposes with the cell multiplicities of a dual Weyl filtration;
    # for the top cell the ideal is the cell module itself.
    dim, act = right_ideal_module(sym4, 3, (3,))
    mults = module_multiplicities(sym4, 3, dim, act)
    assert mults == {(3,): 1, (2, 1): 0, (1, 1, 1): 0}


def test_permutation_module_coefficients_are_skew_kostka_numbers(sym4):
    for nu in partitions_of(4):
        for mu in partitions_of(3):
            value = permutation_multiplicity(sym4, 4, 1, nu, (1,), mu)
            _, kostka = lr_and_kostka((1,), mu, nu)
            assert value == kostka
    # One nonzero value frozen explicitly: three fillings of (3,1) minus a box
    # with content 1,1,1.
    assert permutation_multiplicity(sym4, 4, 1, (3, 1), (1,), (1, 1, 1)) == 3


def test_hom_adjunction_on_an_example(sym4):
    lhs, rhs = hom_adjunction_check(sym4, 3, 1, (2, 1), (1,), (2,))
    assert lhs == rhs == 1


def test_stable_kronecker_engine_small():
    for lam in partitions_of(1):
        for mu in partitions_of(1):
            for m in range(3):
                for nu in partitions_of(m):
                    got = stable_kronecker_engine(lam, mu, nu)
                    assert got == stable_kronecker_oracle(lam, mu, nu)


def test_stable_kronecker_engine_reproduces_squares():
    # p for lam = mu = (1) and nu = (2) or (1,1): one copy each.
    assert stable_kronecker_engine((1,), (1,), (2,)) == 1
    assert stable_kronecker_engine((1,), (1,), (1, 1)) == 1
    assert stable_kronecker_engine((1,), (1,), ()) == 1
    assert stable_kronecker_engine((1,), (1,), (1,)) == 1

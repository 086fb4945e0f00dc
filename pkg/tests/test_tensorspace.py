"""The tensor-space realization of partition-algebra cell modules."""

import random
from fractions import Fraction

from celltower.characters import stable_kronecker_oracle
from celltower.combinat import partition_graph, partitions_of
from celltower.providers.diagram import compose, partition_diagrams
from celltower.tensorspace import (
    TensorCellModule,
    diagram_act,
    stable_kronecker_tensor,
    swap_values,
    symmetrize_values,
    young_project,
)


def test_diagram_action_respects_composition_with_loop_factor():
    rng = random.Random(7)
    n, k = 3, 2
    diags = partition_diagrams(k, False)
    for _ in range(150):
        d1, d2 = rng.choice(diags), rng.choice(diags)
        key = tuple(rng.randrange(n) for _ in range(k))
        v = {key: Fraction(1)}
        lhs = diagram_act(diagram_act(v, d1, k, n), d2, k, n)
        d12, removed = compose(d1, d2, k)
        rhs = {
            kk: c * n**removed for kk, c in diagram_act(v, d12, k, n).items()
        }
        assert lhs == rhs


def test_value_action_commutes_with_diagram_action():
    rng = random.Random(11)
    n, k = 4, 3
    diags = partition_diagrams(k, False)
    for _ in range(60):
        d = rng.choice(diags)
        a, b = rng.randrange(n), rng.randrange(n)
        key = tuple(rng.randrange(n) for _ in range(k))
        v = {key: Fraction(1)}
        assert swap_values(diagram_act(v, d, k, n), a, b) == diagram_act(
            swap_values(v, a, b), d, k, n
        )


def test_symmetrizers():
    v = {(0, 1, 2): Fraction(1)}
    sym = symmetrize_values(v, [0, 1, 2], signed=False)
    assert len(sym) == 6
    assert all(c == 1 for c in sym.values())
    alt = symmetrize_values(v, [0, 1, 2], signed=True)
    assert len(alt) == 6
    assert sum(alt.values()) == 0
    assert alt[(1, 0, 2)] == -1


def test_young_projector_is_quasi_idempotent():
    v = {(0, 2, 1): Fraction(1)}
    shape = (2, 1)
    once = young_project(v, shape)
    twice = young_project(once, shape)
    # c^2 = h c with h the product of hook lengths (here 3 for (2,1)).
    assert twice == {k: 3 * c for k, c in once.items()}


def test_cell_module_dimensions():
    r, n = 2, 4
    graph = partition_graph(2 * r)
    for nu in [(), (1,), (2,), (1, 1)]:
        module = TensorCellModule(graph, r, n, nu)
        from celltower.combinat import SkewShape, enumerate_paths

        assert module.dim == len(
            enumerate_paths(graph, SkewShape((), nu, 0, 2 * r))
        )


def test_tensor_route_matches_oracle_at_r2():
    for lam in partitions_of(1):
        for mu in partitions_of(1):
            for m in range(3):
                for nu in partitions_of(m):
                    got = stable_kronecker_tensor(lam, mu, nu)
                    assert got == stable_kronecker_oracle(lam, mu, nu)


def test_tensor_route_matches_oracle_on_r3_spot_checks():
    cases = [
        ((1,), (2,), (2, 1)),
        ((1, 1), (1,), (1, 1, 1)),
        ((2,), (1,), (2,)),
        ((1,), (1, 1), (1,)),
    ]
    for lam, mu, nu in cases:
        assert stable_kronecker_tensor(lam, mu, nu) == stable_kronecker_oracle(
            lam, mu, nu
        )

"""The symmetric-group character oracle checks itself."""

from itertools import permutations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from celltower.characters import (
    CharacterTable,
    character,
    class_size,
    kostka_number,
    kronecker_coefficient,
    littlewood_richardson,
    lr_and_kostka,
    pad_partition,
    stable_kronecker_oracle,
)
from celltower.combinat import partitions_of, size


def sign_of_class(rho):
    return (-1) ** sum(p - 1 for p in rho)


@pytest.mark.parametrize("n", range(1, 8))
def test_character_table_self_checks(n):
    table = CharacterTable(n)
    assert table.dimensions_match_hooks()
    assert table.dimension_square_sum_ok()
    assert table.row_orthogonality()
    assert table.column_orthogonality()


def test_trivial_and_sign_characters():
    for n in range(1, 7):
        for rho in partitions_of(n):
            assert character((n,), rho) == 1
            assert character((1,) * n, rho) == sign_of_class(rho)


def test_known_character_values():
    assert character((2, 1), (3,)) == -1
    assert character((2, 2), (2, 2)) == 2
    assert character((3, 1), (2, 1, 1)) == 1


def test_class_sizes_sum_to_group_order():
    from math import factorial

    for n in range(1, 8):
        assert sum(class_size(rho) for rho in partitions_of(n)) == factorial(n)


def test_kronecker_known_values():
    assert kronecker_coefficient((2, 1), (2, 1), (2, 1)) == 1
    for alpha in partitions_of(4):
        for gamma in partitions_of(4):
            want = 1 if alpha == gamma else 0
            assert kronecker_coefficient(alpha, (4,), gamma) == want
    assert kronecker_coefficient((1, 1, 1), (1, 1, 1), (3,)) == 1


@given(st.integers(min_value=1, max_value=5))
def test_kronecker_is_symmetric(n):
    ps = partitions_of(n)
    for a in ps[:3]:
        for b in ps[:3]:
            for c in ps[:3]:
                values = {
                    kronecker_coefficient(*triple)
                    for triple in permutations((a, b, c))
                }
                assert len(values) == 1


def _is_horizontal_strip(lam, nu):
    """nu/lam with no two boxes in a column (containment included)."""
    get = lambda p, i: p[i] if i < len(p) else 0
    contains = all(lam[i] <= get(nu, i) for i in range(len(lam)))
    thin = all(nu[i + 1] <= get(lam, i) for i in range(len(nu) - 1))
    return contains and thin


def test_littlewood_richardson_pieri_rule():
    # Multiplying by a one-row shape adds horizontal strips.
    for s in range(1, 4):
        for lam in partitions_of(s):
            for k in range(1, 3):
                for nu in partitions_of(s + k):
                    want = int(_is_horizontal_strip(lam, nu))
                    assert littlewood_richardson(lam, (k,), nu) == want


def test_littlewood_richardson_known_values():
    assert littlewood_richardson((2, 1), (2, 1), (3, 2, 1)) == 2
    assert littlewood_richardson((1,), (2,), (2, 1)) == 1
    assert littlewood_richardson((1,), (1, 1), (2, 1)) == 1
    for nu in partitions_of(4):
        assert littlewood_richardson((), nu, nu) == 1


def test_kostka_known_values():
    assert kostka_number((2, 1), (1, 1, 1)) == 2
    assert kostka_number((3, 1), (2, 1, 1)) == 2
    for lam in partitions_of(5):
        assert kostka_number(lam, lam) == 1
        assert kostka_number((5,), lam) == 1


def test_padding():
    assert pad_partition((2, 1), 7) == (4, 2, 1)
    assert pad_partition((), 3) == (3,)
    with pytest.raises(ValueError):
        pad_partition((3,), 5)


def test_stable_kronecker_known_values():
    assert stable_kronecker_oracle((), (), ()) == 1
    assert stable_kronecker_oracle((1,), (1,), (1,)) == 1
    assert stable_kronecker_oracle((2,), (2,), (2,)) == 2
    for lam in partitions_of(2):
        for mu in partitions_of(2):
            want = 1 if lam == mu else 0
            assert stable_kronecker_oracle(lam, mu, ()) == want


def test_skew_kostka_expansion():
    c, k = lr_and_kostka((1,), (1, 1), (2, 1))
    assert c == 1
    assert k == 2  # two semistandard fillings of the skew shape with weight (1,1)
    c, k = lr_and_kostka((), (2, 1), (2, 1))
    assert (c, k) == (1, 1)


def test_lr_coefficients_sum_to_skew_dimension():
    # Summing c * (number of standard tableaux) over mu counts skew tableaux.
    from celltower.combinat import SkewShape, enumerate_paths, hook_length_count, young_graph

    g = young_graph(5)
    for nu in partitions_of(5):
        for s in range(size(nu) + 1):
            for lam in partitions_of(s):
                total = sum(
                    littlewood_richardson(lam, mu, nu) * hook_length_count(mu)
                    for mu in partitions_of(size(nu) - s)
                )
                paths = enumerate_paths(g, SkewShape(lam, nu, s, size(nu)))
                assert total == len(paths)

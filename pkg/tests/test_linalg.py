"""Exact linear algebra: echelon tracking, inverses, nullspaces."""

from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from celltower.linalg import (
    TrackedEchelon,
    mat_det,
    mat_identity,
    mat_inverse,
    mat_mul,
    nullspace_basis,
    nullspace_dimension,
    solve_linear_system,
    vec_axpy,
)
from celltower.scalars import ScalarDomain

DOM = ScalarDomain(None)

entries = st.fractions(min_value=-9, max_value=9, max_denominator=4)
vectors = st.dictionaries(st.integers(min_value=0, max_value=5), entries, max_size=5)


def _clean(v):
    return {k: c for k, c in v.items() if c}


@settings(deadline=None)
@given(st.lists(vectors, max_size=8))
def test_echelon_coordinates_reconstruct_the_vector(vecs):
    ech = TrackedEchelon(DOM)
    inserted = []
    for v in vecs:
        v = _clean(v)
        if ech.insert(dict(v), len(inserted)):
            pass
        inserted.append(v)
    for v in inserted:
        combo = ech.coordinates(dict(v))
        assert combo is not None
        recon: dict = {}
        for tag, c in combo.items():
            vec_axpy(recon, c, inserted[tag], DOM)
        assert recon == v


@settings(deadline=None)
@given(st.lists(vectors, max_size=8), vectors)
def test_echelon_rejects_vectors_outside_the_span(vecs, probe):
    ech = TrackedEchelon(DOM)
    for i, v in enumerate(vecs):
        ech.insert(_clean(v), i)
    probe = _clean(probe)
    combo = ech.coordinates(dict(probe))
    if combo is None:
        assert not ech.contains(dict(probe))
    else:
        recon: dict = {}
        for tag, c in combo.items():
            vec_axpy(recon, c, _clean(vecs[tag]), DOM)
        assert recon == probe


matrices = st.integers(min_value=1, max_value=4).flatmap(
    lambda n: st.lists(
        st.lists(entries, min_size=n, max_size=n), min_size=n, max_size=n
    )
)


@settings(deadline=None)
@given(matrices)
def test_inverse_and_determinant(a):
    n = len(a)
    det = mat_det(a, DOM)
    inv = mat_inverse(a, DOM)
    if det == 0:
        assert inv is None
    else:
        assert inv is not None
        assert mat_mul(a, inv, DOM) == mat_identity(n, DOM)
        assert mat_mul(inv, a, DOM) == mat_identity(n, DOM)


@settings(deadline=None)
@given(st.lists(vectors, max_size=6), st.integers(min_value=6, max_value=6))
def test_nullspace_vectors_annihilate_the_rows(rows, nunknowns):
    rows = [_clean(r) for r in rows]
    basis = nullspace_basis(rows, nunknowns, DOM)
    assert len(basis) == nullspace_dimension(rows, nunknowns, DOM)
    for v in basis:
        for row in rows:
            acc = Fraction(0)
            for j, c in row.items():
                acc += c * v.get(j, Fraction(0))
            assert acc == 0
    # The basis vectors are independent: distinct free coordinates.
    ech = TrackedEchelon(DOM, track=False)
    for v in basis:
        assert ech.insert(dict(v))


@settings(deadline=None)
@given(st.lists(vectors, min_size=1, max_size=6))
def test_linear_solver_agrees_with_substitution(rows):
    rows = [_clean(r) for r in rows]
    rhs = [sum(r.values(), Fraction(0)) for r in rows]  # x = all-ones works
    sol = solve_linear_system(rows, rhs, 6, DOM)
    assert sol is not None
    for row, b in zip(rows, rhs):
        assert sum(c * sol[j] for j, c in row.items()) == b

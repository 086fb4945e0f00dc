"""Exact sparse linear algebra over a scalar field.

Vectors are dicts keyed by arbitrary totally ordered hashable keys (basis
identifiers); matrices for the small dense solves are lists of lists of
scalars.  Everything is division-based over the fraction field with eager
normalization supplied by the scalar types themselves.
"""

from __future__ import annotations

from typing import Hashable, Iterable, Optional

from .scalars import Scalar, ScalarDomain

Vec = dict


def vec_add(a: Vec, b: Vec, domain: ScalarDomain) -> Vec:
    out = dict(a)
    for k, v in b.items():
        s = out.get(k)
        s = v if s is None else s + v
        if domain.is_zero(s):
            out.pop(k, None)
        else:
            out[k] = s
    return out


def vec_sub(a: Vec, b: Vec, domain: ScalarDomain) -> Vec:
    out = dict(a)
    for k, v in b.items():
        s = out.get(k)
        s = -v if s is None else s - v
        if domain.is_zero(s):
            out.pop(k, None)
        else:
            out[k] = s
    return out


def vec_scale(a: Vec, c: Scalar, domain: ScalarDomain) -> Vec:
    if domain.is_zero(c):
        return {}
    return {k: v * c for k, v in a.items()}


def vec_axpy(acc: Vec, c: Scalar, b: Vec, domain: ScalarDomain) -> None:
    """In place: acc += c * b."""
    if domain.is_zero(c):
        return
    for k, v in b.items():
        s = acc.get(k)
        s = c * v if s is None else s + c * v
        if domain.is_zero(s):
            acc.pop(k, None)
        else:
            acc[k] = s


class TrackedEchelon:
    """Incremental reduced echelon basis with expression tracking.

    Each inserted vector carries a tag; every echelon row remembers its exact
    expression as a combination of inserted vectors, so membership tests also
    return coordinates.  The pivot of a row is its smallest key (deterministic
    canonical form).
    """

    def __init__(self, domain: ScalarDomain, track: bool = True):
        self.domain = domain
        self.track = track
        self.pivots: dict[Hashable, int] = {}
        self.rows: list[Vec] = []
        self.combos: list[Vec] = []
        self.tags: list[Hashable] = []

    @property
    def rank(self) -> int:
        return len(self.rows)

    def _reduce(self, vec: Vec) -> tuple[Vec, Vec]:
        """Fully reduce vec against the rows; returns (residual, combination)."""
        dom = self.domain
        vec = dict(vec)
        combo: Vec = {}
        while True:
            hit = None
            for key in vec:
                idx = self.pivots.get(key)
                if idx is not None:
                    hit = (key, idx)
                    break
            if hit is None:
                return vec, combo
            key, idx = hit
            c = vec[key]
            vec_axpy(vec, -c, self.rows[idx], dom)
            vec.pop(key, None)
            if self.track:
                vec_axpy(combo, c, self.combos[idx], dom)

    def reduce(self, vec: Vec) -> Vec:
        residual, _ = self._reduce(vec)
        return residual

    def coordinates(self, vec: Vec) -> Optional[Vec]:
        """Coordinates of vec over the inserted tags, or None if outside the span."""
        residual, combo = self._reduce(vec)
        if residual:
            return None
        return combo

    def contains(self, vec: Vec) -> bool:
        residual, _ = self._reduce(vec)
        return not residual

    def insert(self, vec: Vec, tag: Hashable = None) -> bool:
        """Insert a vector; returns True if it enlarged the span."""
        dom = self.domain
        residual, combo = self._reduce(vec)
        if not residual:
            return False
        pivot = min(residual)
        c = residual[pivot]
        new_row = {k: v / c for k, v in residual.items()}
        if self.track:
            # residual = vec - combo . inserted  =>  row = (vec - combo.inserted)/c
            new_combo = {k: -v / c for k, v in combo.items()}
            t = new_combo.get(tag, dom.zero) + dom.one / c
            if dom.is_zero(t):
                new_combo.pop(tag, None)
            else:
                new_combo[tag] = t
        else:
            new_combo = {}
        # Back-substitute into existing rows to keep the basis fully reduced.
        for idx in range(len(self.rows)):
            row = self.rows[idx]
            c2 = row.get(pivot)
            if c2 is not None and not dom.is_zero(c2):
                vec_axpy(row, -c2, new_row, dom)
                row.pop(pivot, None)
                if self.track:
                    vec_axpy(self.combos[idx], -c2, new_combo, dom)
        idx = len(self.rows)
        self.rows.append(new_row)
        self.combos.append(new_combo)
        self.tags.append(tag)
        self.pivots[pivot] = idx
        return True

    def insert_all(self, vecs: Iterable[tuple[Vec, Hashable]]) -> None:
        for vec, tag in vecs:
            self.insert(vec, tag)


def span_rank(vecs: Iterable[Vec], domain: ScalarDomain) -> int:
    ech = TrackedEchelon(domain, track=False)
    for v in vecs:
        ech.insert(v)
    return ech.rank


def solve_in_span(
    target: Vec, vecs: list[Vec], domain: ScalarDomain
) -> Optional[list[Scalar]]:
    """Exact coordinates of target in the span of vecs, or None."""
    ech = TrackedEchelon(domain)
    for i, v in enumerate(vecs):
        ech.insert(v, i)
    combo = ech.coordinates(target)
    if combo is None:
        return None
    return [combo.get(i, domain.zero) for i in range(len(vecs))]


# ---------------------------------------------------------------------------
# Small dense matrices (action matrices, transition matrices, Gram matrices).

Matrix = list


def mat_zero(n: int, m: int, domain: ScalarDomain) -> Matrix:
    return [[domain.zero] * m for _ in range(n)]


def mat_identity(n: int, domain: ScalarDomain) -> Matrix:
    out = mat_zero(n, n, domain)
    for i in range(n):
        out[i][i] = domain.one
    return out


def mat_mul(a: Matrix, b: Matrix, domain: ScalarDomain) -> Matrix:
    n, k, m = len(a), len(b), len(b[0]) if b else 0
    out = mat_zero(n, m, domain)
    for i in range(n):
        arow = a[i]
        orow = out[i]
        for t in range(k):
            c = arow[t]
            if domain.is_zero(c):
                continue
            brow = b[t]
            for j in range(m):
                if not domain.is_zero(brow[j]):
                    orow[j] = orow[j] + c * brow[j]
    return out


def mat_add(a: Matrix, b: Matrix) -> Matrix:
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_scale(a: Matrix, c: Scalar) -> Matrix:
    return [[x * c for x in row] for row in a]


def mat_sub(a: Matrix, b: Matrix) -> Matrix:
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_rank(a: Matrix, domain: ScalarDomain) -> int:
    ech = TrackedEchelon(domain, track=False)
    for row in a:
        ech.insert({j: v for j, v in enumerate(row) if not domain.is_zero(v)})
    return ech.rank


def mat_eq(a: Matrix, b: Matrix) -> bool:
    return all(x == y for ra, rb in zip(a, b) for x, y in zip(ra, rb))


def mat_inverse(a: Matrix, domain: ScalarDomain) -> Optional[Matrix]:
    n = len(a)
    ech = TrackedEchelon(domain)
    for i in range(n):
        ech.insert({j: v for j, v in enumerate(a[i]) if not domain.is_zero(v)}, i)
    if ech.rank < n:
        return None
    out = mat_zero(n, n, domain)
    for j in range(n):
        # combo expresses e_j over the rows of a, so it is row j of the inverse.
        combo = ech.coordinates({j: domain.one})
        for i, c in combo.items():
            out[j][i] = c
    return out


def mat_det(a: Matrix, domain: ScalarDomain) -> Scalar:
    """Determinant by fraction-producing Gaussian elimination."""
    n = len(a)
    m = [row[:] for row in a]
    det = domain.one
    for col in range(n):
        piv = None
        for i in range(col, n):
            if not domain.is_zero(m[i][col]):
                piv = i
                break
        if piv is None:
            return domain.zero
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            det = -det
        det = det * m[col][col]
        inv = domain.one / m[col][col]
        for i in range(col + 1, n):
            c = m[i][col]
            if domain.is_zero(c):
                continue
            f = c * inv
            for j in range(col, n):
                m[i][j] = m[i][j] - f * m[col][j]
    return det


def solve_linear_system(
    rows: list[Vec], rhs: list[Scalar], nunknowns: int, domain: ScalarDomain
) -> Optional[list[Scalar]]:
    """Solve sum_j rows[i][j] * x_j = rhs[i]; returns one solution or None."""
    dense = mat_zero(len(rows), nunknowns + 1, domain)
    for i, row in enumerate(rows):
        for j, v in row.items():
            dense[i][j] = v
        dense[i][nunknowns] = rhs[i]
    ech2 = TrackedEchelon(domain, track=False)
    for row in dense:
        ech2.insert({j: v for j, v in enumerate(row) if not domain.is_zero(v)})
    sol = [domain.zero] * nunknowns
    for r in sorted(ech2.rows, key=lambda rr: min(rr)):
        piv = min(r)
        if piv == nunknowns:
            return None  # inconsistent: 0 = 1 row
        sol[piv] = r.get(nunknowns, domain.zero)
    # Verify (free variables set to zero).
    for row, b in zip(rows, rhs):
        acc = domain.zero
        for j, v in row.items():
            acc = acc + v * sol[j]
        if acc != b:
            return None
    return sol


def nullspace_basis(rows: list[Vec], nunknowns: int, domain: ScalarDomain) -> list[Vec]:
    """A basis of the solution space of rows . x = 0, one vector per free column."""
    ech = TrackedEchelon(domain, track=False)
    for row in rows:
        ech.insert(dict(row))
    pivot_rows = {min(r): r for r in ech.rows}
    out = []
    for j in range(nunknowns):
        if j in pivot_rows:
            continue
        vec: Vec = {j: domain.one}
        for piv, row in pivot_rows.items():
            c = row.get(j)
            if c is not None and not domain.is_zero(c):
                vec[piv] = -c
        out.append(vec)
    return out


def nullspace_dimension(rows: list[Vec], nunknowns: int, domain: ScalarDomain) -> int:
    ech = TrackedEchelon(domain, track=False)
    for row in rows:
        ech.insert(dict(row))
    return nunknowns - ech.rank

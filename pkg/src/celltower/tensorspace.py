"""Partition-algebra cell modules realized on tensor space.

The regular module of the level-4 partition algebra (dimension 4140) is out
of reach for exact echelon arithmetic, but its cell modules embed in
(Q^n)^{tensor r} with n = 2r: the diagram algebra acts on tensor positions,
the symmetric group S_n on index values, and the image of a Young projector
for the padded shape is one copy of the cell module.  Skew modules then come
from the embedded inner-path idempotent, and the lower algebra acts through
diagrams padded with identity strands on the left, which is what the flip
composite does to diagram towers.
"""

from __future__ import annotations

import math
from fractions import Fraction
from itertools import product

from .combinat import (
    SkewShape,
    enumerate_paths,
    maximal_path,
    partition_graph,
    size,
)
from .elements import Element
from .linalg import TrackedEchelon
from .providers.diagram import Diagram, canonical, partition_diagrams

Tensor = dict  # index tuple -> Fraction

_ZERO = Fraction(0)


def tensor_add(acc: Tensor, vec: Tensor, c: Fraction = Fraction(1)) -> None:
    for k, v in vec.items():
        t = acc.get(k, _ZERO) + c * v
        if t:
            acc[k] = t
        else:
            acc.pop(k, None)


_PARTS_CACHE: dict = {}


def _diagram_parts(d: Diagram, k: int):
    """Block structure of a diagram as it acts on k tensor positions:
    equal-value filters on tops, carried (top representative, bottoms),
    and freely filled bottom blocks."""
    key = (d, k)
    parts = _PARTS_CACHE.get(key)
    if parts is not None:
        return parts
    filters = []
    carried = []
    free = []
    for block in d:
        tops = [p for p in block if p < k]
        bots = [p - k for p in block if p >= k]
        if tops:
            if len(tops) > 1:
                filters.append(tuple(tops))
            if bots:
                carried.append((tops[0], tuple(bots)))
        elif bots:
            free.append(tuple(bots))
    parts = (tuple(filters), tuple(carried), tuple(free))
    _PARTS_CACHE[key] = parts
    return parts


def _aggregate(ivec: dict, filters, reps) -> dict:
    """Sum input coefficients over the values seen at the representative
    positions, dropping keys that violate an equal-value filter."""
    agg: dict = {}
    for key, coeff in ivec.items():
        ok = True
        for tops in filters:
            v = key[tops[0]]
            for p in tops[1:]:
                if key[p] != v:
                    ok = False
                    break
            if not ok:
                break
        if not ok:
            continue
        sig = tuple(key[p] for p in reps)
        agg[sig] = agg.get(sig, 0) + coeff
    return agg


def _expand(out: dict, agg: dict, scale: int, carried, free, k: int, n: int):
    for sig, coeff in agg.items():
        c = coeff * scale
        if not c:
            continue
        base = [0] * k
        for (rep, bots), v in zip(carried, sig):
            for b in bots:
                base[b] = v
        for choice in product(range(n), repeat=len(free)):
            t = list(base)
            for bots, v in zip(free, choice):
                for b in bots:
                    t[b] = v
            j = tuple(t)
            s = out.get(j, 0) + c
            if s:
                out[j] = s
            else:
                del out[j]


def _int_vec(vec: Tensor) -> tuple[dict, int]:
    """Integer-valued copy of a tensor together with its cleared denominator."""
    if not vec:
        return {}, 1
    den = 1
    for v in vec.values():
        den = den * v.denominator // math.gcd(den, v.denominator)
    return {k: int(v * den) for k, v in vec.items()}, den


def diagram_act(vec: Tensor, d: Diagram, k: int, n: int) -> Tensor:
    """Right action of a partition diagram on tensor positions.

    Input keys are first aggregated by the values they force on the output,
    so the free-block expansion (a factor n per bottom-only block) runs once
    per forced pattern instead of once per input key."""
    filters, carried, free = _diagram_parts(d, k)
    ivec, den = _int_vec(vec)
    agg = _aggregate(ivec, filters, tuple(rep for rep, _ in carried))
    out: dict = {}
    _expand(out, agg, 1, carried, free, k, n)
    return {j: Fraction(c, den) for j, c in out.items()}


def placed_diagram(d: Diagram, k: int, left: int, right: int) -> Diagram:
    """The diagram extended by identity strands: left of it and right of it."""
    total = left + k + right
    blocks = [
        tuple(
            (p + left) if p < k else (p - k + left + total) for p in b
        )
        for b in d
    ]
    blocks += [(i, i + total) for i in range(left)]
    blocks += [(left + k + i, left + k + i + total) for i in range(right)]
    return canonical(blocks)


def element_act(vec: Tensor, x: Element, strands: int, left: int, n: int) -> Tensor:
    """Right action of a partition-algebra element placed at the given offset.

    All accumulation runs over the integers: the vector and the element each
    clear one common denominator, and diagram terms sharing a top profile
    share one aggregation pass over the input support."""
    k = x.algebra.strands
    ivec, vden = _int_vec(vec)
    xden = 1
    for c in x.terms.values():
        c = Fraction(c)
        xden = xden * c.denominator // math.gcd(xden, c.denominator)
    out: dict = {}
    agg_cache: dict = {}
    for d, c in x.terms.items():
        scale = int(Fraction(c) * xden)
        if not scale:
            continue
        placed = placed_diagram(d, k, left, strands - left - k)
        filters, carried, free = _diagram_parts(placed, strands)
        reps = tuple(rep for rep, _ in carried)
        akey = (filters, reps)
        agg = agg_cache.get(akey)
        if agg is None:
            agg = _aggregate(ivec, filters, reps)
            agg_cache[akey] = agg
        _expand(out, agg, scale, carried, free, strands, n)
    den = vden * xden
    return {j: Fraction(c, den) for j, c in out.items() if c}


def swap_values(vec: Tensor, a: int, b: int) -> Tensor:
    out: Tensor = {}
    for key, c in vec.items():
        j = tuple(b if v == a else a if v == b else v for v in key)
        out[j] = out.get(j, _ZERO) + c
    return out


def symmetrize_values(vec: Tensor, symbols: list[int], signed: bool) -> Tensor:
    """Apply the (anti)symmetrizer of the symmetric group on the given index
    values, built up one symbol at a time through coset sums."""
    out = dict(vec)
    for j in range(1, len(symbols)):
        acc = dict(out)  # the identity coset
        for i in range(j):
            sign = Fraction(-1) if signed else Fraction(1)
            tensor_add(acc, swap_values(out, symbols[i], symbols[j]), sign)
        out = acc
    return out


def young_project(vec: Tensor, shape: tuple[int, ...]) -> Tensor:
    """Young projector of the shape with the row-major filling 0,1,2,...:
    column antisymmetrizers first, then row symmetrizers."""
    rows = []
    value = 0
    for part in shape:
        rows.append(list(range(value, value + part)))
        value += part
    ncols = shape[0] if shape else 0
    out = vec
    for c in range(ncols):
        col = [row[c] for row in rows if c < len(row)]
        if len(col) > 1:
            out = symmetrize_values(out, col, signed=True)
    for row in rows:
        if len(row) > 1:
            out = symmetrize_values(out, row, signed=False)
    return out


def local_diagrams(r: int) -> list[Diagram]:
    """All two-strand diagrams placed at each adjacent pair; these local
    moves generate the whole partition algebra."""
    if r == 1:
        return list(partition_diagrams(1, False))
    out = []
    for i in range(r - 1):
        for d in partition_diagrams(2, False):
            out.append(placed_diagram(d, 2, i, r - 2 - i))
    return sorted(set(out))


def _column_reading_key(padded: tuple[int, ...], r: int) -> tuple[int, ...]:
    """The first r symbols reading the canonical filling down columns; such a
    key survives the column antisymmetrizers."""
    word = []
    offsets = []
    value = 0
    for part in padded:
        offsets.append(value)
        value += part
    ncols = padded[0] if padded else 0
    for c in range(ncols):
        for row, part in enumerate(padded):
            if c < part:
                word.append(offsets[row] + c)
    return tuple(word[:r])


class TensorCellModule:
    """One copy of a partition-algebra cell module inside (Q^n)^{tensor r}.

    With n >= 2r the module is irreducible, so one nonzero projected vector
    is cyclic; the basis is grown by closing it under local diagram moves,
    which avoids projecting more than a handful of starting keys."""

    def __init__(self, graph, r: int, n: int, nu):
        from .scalars import ScalarDomain

        self.r = r
        self.n = n
        self.nu = nu
        self.graph = graph
        head = n - size(nu)
        if nu and head < nu[0]:
            raise ValueError(f"n = {n} too small for {nu}")
        padded = ((head,) + tuple(nu)) if head else tuple(nu)
        target = len(enumerate_paths(graph, SkewShape((), nu, 0, 2 * r)))
        dom = ScalarDomain(None)
        self.dom = dom
        self.ech = TrackedEchelon(dom, track=True)
        self.rows: list[Tensor] = []
        moves = local_diagrams(r)
        qi = 0
        for key in self._seed_keys(padded):
            if len(self.rows) == target:
                break
            vec = young_project({key: Fraction(1)}, padded)
            if not (vec and self.ech.insert(dict(vec), len(self.rows))):
                continue
            self.rows.append(vec)
            while qi < len(self.rows) and len(self.rows) < target:
                w = self.rows[qi]
                qi += 1
                for d in moves:
                    v = diagram_act(w, d, r, n)
                    if v and self.ech.insert(dict(v), len(self.rows)):
                        self.rows.append(v)
                        if len(self.rows) == target:
                            break
        if len(self.rows) != target:
            raise ValueError(
                f"projector image rank {len(self.rows)} != path count {target}"
            )
        self.dim = target

    def _seed_keys(self, padded):
        yield _column_reading_key(padded, self.r)
        n, r = self.n, self.r
        for w in range(n**r):
            key = []
            x = w
            for _ in range(r):
                key.append(x % n)
                x //= n
            yield tuple(key)

    def coords(self, vec: Tensor):
        combo = self.ech.coordinates(dict(vec))
        if combo is None:
            raise ValueError("vector outside the cell module")
        return [combo.get(i, _ZERO) for i in range(self.dim)]

    def action_rows(self, basis_rows: list[Tensor], x: Element, left: int):
        return [
            element_act(w, x, self.r, left, self.n) for w in basis_rows
        ]


def tensor_skew_multiplicities(tower, r: int, s: int, nu, lam) -> dict:
    """mu -> multiplicity of Delta(mu) in the tensor-space skew module.

    tower is a partition tower with parameter n = 2r and internal depth
    >= max(2s, 2(r-s)); the ambient level-r algebra itself is never built."""
    from .seminormal import ambient_gz
    from .skew import module_multiplicities

    n = tower.n
    graph = partition_graph(2 * r)
    cell = _tensor_cell(tower, graph, r, n, nu)
    t_inner = maximal_path(graph, lam, 2 * s)
    f = ambient_gz(tower, 2 * s, t_inner)
    image: list[Tensor] = []
    ech = TrackedEchelon(cell.dom, track=True)
    for w in cell.rows:
        v = element_act(w, f, r, 0, n)
        if v and ech.insert(dict(v), len(image)):
            image.append(v)
    expected = len(enumerate_paths(graph, SkewShape(lam, nu, 2 * s, 2 * r)))
    if len(image) != expected:
        raise ValueError(
            f"skew image rank {len(image)} != path count {expected}"
        )

    def act(x: Element):
        rows = []
        for w in image:
            v = element_act(w, x, r, s, n)
            combo = ech.coordinates(dict(v))
            if combo is None:
                raise ValueError("skew image not stable under the action")
            rows.append([combo.get(i, _ZERO) for i in range(len(image))])
        return rows

    return module_multiplicities(tower, 2 * (r - s), len(image), act)


_CELL_CACHE: dict = {}


def _tensor_cell(tower, graph, r: int, n: int, nu) -> TensorCellModule:
    key = (r, n, nu)
    if key not in _CELL_CACHE:
        _CELL_CACHE[key] = TensorCellModule(graph, r, n, nu)
    return _CELL_CACHE[key]


def stable_kronecker_tensor(lam, mu, nu) -> int:
    """p^nu_{lam,mu} on tensor space; needs 1 <= |lam| and 1 <= |mu|."""
    from .towers import make_tower

    r = size(lam) + size(mu)
    s = size(lam)
    if not 1 <= s <= r - 1:
        raise ValueError("tensor route needs both inner and outer parts nonempty")
    if size(nu) > r:
        return 0
    key = ("tower", r)
    if key not in _CELL_CACHE:
        _CELL_CACHE[key] = make_tower("partition", 2 * (r - 1), 2 * r)
    tower = _CELL_CACHE[key]
    mults = tensor_skew_multiplicities(tower, r, s, nu, lam)
    return mults.get(mu, 0)

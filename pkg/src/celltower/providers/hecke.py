"""The Hecke algebra tower and its q=1 specialization, the symmetric groups.

Basis {T_w} indexed by permutations, with the quadratic relation
(T_i - q)(T_i + 1) = 0 driving the multiplication.  Branching factors for an
edge adding a box in row j of the new shape:

    a = mu_1 + ... + mu_j,   d = T_a T_{a+1} ... T_{r-1},
    u = (T_{r-1} ... T_a) * sum_{k=0..lambda_j} T_{a-1} T_{a-2} ... T_{a-k}

with r the new level; empty products are 1.
"""

from __future__ import annotations

from fractions import Fraction

from ..combinat import Partition, added_box
from ..elements import AlgebraLevel, Element
from ..linalg import Vec, vec_axpy
from ..scalars import ScalarDomain
from . import perms


class HeckeLevel(AlgebraLevel):
    def __init__(self, level: int, domain: ScalarDomain):
        super().__init__("hecke", level, domain)
        self._basis = perms.all_perms(level)
        self.q = domain.gen()
        self.q_minus_1 = self.q - domain.one

    def basis(self):
        return self._basis

    def identity_basis(self):
        return perms.identity(self.level)

    def times_generator(self, terms: Vec, i: int) -> Vec:
        """Right multiplication of a T-basis combination by T_i."""
        dom = self.domain
        out: Vec = {}
        for w, c in terms.items():
            ws = perms.compose(w, perms.simple(self.level, i))
            if perms.right_descent(w, i):
                # length decreases: T_w T_i = q T_{ws} + (q-1) T_w
                _acc(out, ws, c * self.q, dom)
                _acc(out, w, c * self.q_minus_1, dom)
            else:
                _acc(out, ws, c, dom)
        return out

    def _pair_product(self, a, b) -> Vec:
        out: Vec = {a: self.domain.one}
        for i in perms.reduced_word(b):
            out = self.times_generator(out, i)
        return out

    def _involve_basis(self, a) -> Vec:
        return {perms.inverse(a): self.domain.one}

    def include_basis(self, a):
        return perms.extend(a, self.level)

    def flip_basis(self, a):
        return perms.reverse_conjugate(a)


class SymmetricLevel(AlgebraLevel):
    def __init__(self, level: int, domain: ScalarDomain):
        super().__init__("symmetric", level, domain)
        self._basis = perms.all_perms(level)

    def basis(self):
        return self._basis

    def identity_basis(self):
        return perms.identity(self.level)

    def _pair_product(self, a, b) -> Vec:
        return {perms.compose(a, b): self.domain.one}

    def _involve_basis(self, a) -> Vec:
        return {perms.inverse(a): self.domain.one}

    def include_basis(self, a):
        return perms.extend(a, self.level)

    def flip_basis(self, a):
        return perms.reverse_conjugate(a)


def t_word(alg: AlgebraLevel, letters) -> Element:
    """The product T_{i1} ... T_{ik} for a word of generator indices."""
    out: Vec = {perms.identity(alg.level): alg.domain.one}
    if isinstance(alg, HeckeLevel):
        for i in letters:
            out = alg.times_generator(out, i)
        return alg.element(out)
    w = perms.identity(alg.level)
    for i in letters:
        w = perms.compose(w, perms.simple(alg.level, i))
    return alg.basis_element(w)


def branching_edge_data(
    alg: AlgebraLevel, lam: Partition, mu: Partition
) -> tuple[Element, Element]:
    """(d, u) for the edge lam -> mu = lam + one box, as elements at level |mu|."""
    r = alg.level
    if sum(mu) != r or sum(lam) != r - 1:
        raise ValueError("edge does not land at this level")
    row, _ = added_box(lam, mu)
    j = row + 1  # 1-based row of the new box
    a = sum(mu[:j])
    lam_j = lam[row] if row < len(lam) else 0
    d = t_word(alg, range(a, r))  # T_a T_{a+1} ... T_{r-1}
    u_head = t_word(alg, range(r - 1, a - 1, -1))  # T_{r-1} ... T_a
    tail = alg.zero()
    for k in range(lam_j + 1):
        tail = tail + t_word(alg, range(a - 1, a - k - 1, -1))
    return d, u_head * tail


def cell_generator(alg: AlgebraLevel, lam: Partition) -> Element:
    """x_lambda: the sum of T_w over the row Young subgroup of lambda."""
    dom = alg.domain
    terms: Vec = {}
    for w in perms.young_subgroup(lam, alg.level):
        _acc(terms, w, dom.one, dom)
    return alg.element(terms)


def jm_element(alg: AlgebraLevel, k: int) -> Element:
    """The level-k JM element, embedded at alg.level.

    Hecke: L_1 = 1, L_k = q^{1-k} T_{k-1} ... T_1 T_1 ... T_{k-1}.
    Symmetric group: L_k = sum of the transpositions (i k), i < k; L_1 = 0.
    """
    r = alg.level
    if not 1 <= k <= r:
        raise ValueError("k out of range")
    dom = alg.domain
    if isinstance(alg, HeckeLevel):
        if k == 1:
            return alg.one()
        word = list(range(k - 1, 0, -1)) + list(range(1, k))
        return t_word(alg, word).scale(dom.gen(1 - k))
    terms: Vec = {}
    for i in range(1, k):
        _acc(terms, perms.transposition(r, i, k), dom.one, dom)
    return alg.element(terms)


def _acc(out: Vec, key, c, dom) -> None:
    s = out.get(key)
    s = c if s is None else s + c
    if dom.is_zero(s):
        out.pop(key, None)
    else:
        out[key] = s

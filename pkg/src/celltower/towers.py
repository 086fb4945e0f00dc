"""Tower providers: the per-family data packaging levels, branching, and cells.

A `Tower` bundles everything the engine needs about one family: the level
algebras, the branching graph with its cell order, the self-adjoint cell
generators, the per-edge branching factors d and u satisfying
c_lambda d = u* c_mu, an optional Jucys-Murphy family, and the left-right
flip automorphism.  The Hecke and symmetric-group towers carry closed-form
branching data; the diagram towers derive theirs by solving the
compatibility equation (see branching_solver), and every tower is validated
by the checkers in checks.py rather than trusted.
"""

from __future__ import annotations

from .combinat import (
    BranchingGraph,
    Partition,
    brauer_graph,
    partition_graph,
    size,
    young_graph,
    young_graph_max_columns,
)
from .elements import AlgebraLevel, Element
from .scalars import Scalar, ScalarDomain, evaluate_at, is_integral
from .providers import diagram, hecke, perms


class Tower:
    """Common interface of all towers; levels are indexed 0..max_level."""

    name: str = "tower"
    ring: str = "int"  # base domain for integrality checks: int | laurent | poly
    jm_kind: str | None = None

    def __init__(self, max_level: int, domain: ScalarDomain, graph: BranchingGraph):
        self.max_level = max_level
        self.domain = domain
        self.graph = graph
        self._levels: dict[int, AlgebraLevel] = {}
        self._branching: dict[tuple[int, Partition, Partition], tuple[Element, Element]] = {}

    # -- per-family hooks --------------------------------------------------

    def _make_level(self, r: int) -> AlgebraLevel:
        raise NotImplementedError

    def generators(self, r: int) -> list[Element]:
        raise NotImplementedError

    def cell_generator(self, r: int, lam: Partition) -> Element:
        raise NotImplementedError

    def _branching_data(self, r: int, mu: Partition, lam: Partition) -> tuple[Element, Element]:
        """(d, u) at level r for the edge mu (level r-1) -> lam (level r)."""
        raise NotImplementedError

    def flip_basis(self, r: int, b) -> object:
        raise NotImplementedError

    def jm_element(self, r: int, k: int) -> Element:
        raise NotImplementedError("tower has no Jucys-Murphy family")

    def seed_branching(self, r: int, mu: Partition, lam: Partition):
        """Closed-form (d, u) guesses for an edge, tried before the search."""
        return []

    # -- shared ------------------------------------------------------------

    def level(self, r: int) -> AlgebraLevel:
        if r not in self._levels:
            if not 0 <= r <= self.max_level:
                raise ValueError(f"level {r} outside 0..{self.max_level}")
            self._levels[r] = self._make_level(r)
        return self._levels[r]

    def branching(self, r: int, mu: Partition, lam: Partition) -> tuple[Element, Element]:
        key = (r, mu, lam)
        if key not in self._branching:
            if not self.graph.has_edge(r - 1, mu, lam):
                raise ValueError(f"no edge {mu} -> {lam} into level {r}")
            self._branching[key] = self._branching_data(r, mu, lam)
        return self._branching[key]

    def embed(self, x: Element, r: int) -> Element:
        """Embed an element from its own level up to level r along the chain."""
        while x.algebra.level < r:
            x = self.level(x.algebra.level + 1).include(x)
        if x.algebra.level != r:
            raise ValueError("element above target level")
        return x

    def flip(self, x: Element) -> Element:
        alg = x.algebra
        terms = {}
        for b, c in x.terms.items():
            k = self.flip_basis(alg.level, b)
            terms[k] = terms.get(k, alg.domain.zero) + c
        return alg.element(terms)

    def flip_embed(self, x: Element, r: int) -> Element:
        """The map a |-> f_r(f_{r-s}(a)) used to see A_{r-s} inside A_r."""
        return self.flip(self.embed(self.flip(x), r))

    def is_integral_scalar(self, s: Scalar) -> bool:
        return is_integral(s, self.ring)

    def level_data(self, r: int):
        # Imported lazily to avoid a cycle: murphy builds on towers.
        from .murphy import LevelData

        return LevelData.get(self, r)


class HeckeTower(Tower):
    name = "hecke"
    ring = "laurent"
    jm_kind = "multiplicative"

    def __init__(self, max_level: int):
        super().__init__(max_level, ScalarDomain("q"), young_graph(max_level))

    def _make_level(self, r: int) -> AlgebraLevel:
        return hecke.HeckeLevel(r, self.domain)

    def generators(self, r: int) -> list[Element]:
        alg = self.level(r)
        return [hecke.t_word(alg, [i]) for i in range(1, r)] or [alg.one()]

    def cell_generator(self, r: int, lam: Partition) -> Element:
        return hecke.cell_generator(self.level(r), lam)

    def _branching_data(self, r, mu, lam):
        return hecke.branching_edge_data(self.level(r), mu, lam)

    def flip_basis(self, r: int, b):
        return self.level(r).flip_basis(b)

    def jm_element(self, r: int, k: int) -> Element:
        return hecke.jm_element(self.level(r), k)


class SymmetricTower(Tower):
    name = "symmetric"
    ring = "int"
    jm_kind = "additive"

    def __init__(self, max_level: int):
        super().__init__(max_level, ScalarDomain(None), young_graph(max_level))

    def _make_level(self, r: int) -> AlgebraLevel:
        return hecke.SymmetricLevel(r, self.domain)

    def generators(self, r: int) -> list[Element]:
        alg = self.level(r)
        return [
            alg.basis_element(perms.simple(r, i)) for i in range(1, r)
        ] or [alg.one()]

    def cell_generator(self, r: int, lam: Partition) -> Element:
        return hecke.cell_generator(self.level(r), lam)

    def _branching_data(self, r, mu, lam):
        return hecke.branching_edge_data(self.level(r), mu, lam)

    def flip_basis(self, r: int, b):
        return self.level(r).flip_basis(b)

    def jm_element(self, r: int, k: int) -> Element:
        return hecke.jm_element(self.level(r), k)


class _DiagramTower(Tower):
    """Shared branching-solver wiring for the diagram towers."""

    def _branching_data(self, r, mu, lam):
        from .branching_solver import solve_level_branching

        solve_level_branching(self, r)
        key = (r, mu, lam)
        if key not in self._branching:
            raise RuntimeError(f"solver produced no factors for edge {mu}->{lam}@{r}")
        return self._branching[key]


class TemperleyLiebTower(_DiagramTower):
    name = "tl"
    ring = "poly"
    jm_kind = None

    def __init__(self, max_level: int):
        super().__init__(
            max_level, ScalarDomain("delta"), young_graph_max_columns(max_level, 2)
        )

    def _make_level(self, r: int) -> AlgebraLevel:
        return diagram.TemperleyLiebLevel(r, self.domain)

    def generators(self, r: int) -> list[Element]:
        alg = self.level(r)
        gens = [alg.basis_element(d) for d in alg.generator_diagrams()]
        return gens or [alg.one()]

    def cell_generator(self, r: int, lam: Partition) -> Element:
        alg = self.level(r)
        m = sum(1 for part in lam if part == 2)  # cup pairs
        out = alg.one()
        for i in range(1, 2 * m, 2):
            out = out * alg.basis_element(alg.e(i))
        return out

    def flip_basis(self, r: int, b):
        return self.level(r).flip_basis(b)


class BrauerTower(_DiagramTower):
    name = "brauer"
    ring = "poly"
    jm_kind = "additive"

    def __init__(self, max_level: int):
        super().__init__(max_level, ScalarDomain("delta"), brauer_graph(max_level))

    def _make_level(self, r: int) -> AlgebraLevel:
        return diagram.BrauerLevel(r, self.domain)

    def generators(self, r: int) -> list[Element]:
        alg = self.level(r)
        gens = [alg.basis_element(d) for d in alg.generator_diagrams()]
        return gens or [alg.one()]

    def cell_generator(self, r: int, lam: Partition) -> Element:
        alg = self.level(r)
        m = (r - size(lam)) // 2
        out = alg.one()
        for i in range(1, 2 * m, 2):
            out = out * alg.basis_element(alg.e(i))
        return out * _through_symmetrizer(alg, lam, offset=2 * m)

    def flip_basis(self, r: int, b):
        return self.level(r).flip_basis(b)

    def seed_branching(self, r: int, mu: Partition, lam: Partition):
        """For box-adding edges, transport the symmetric-group closed form to
        permutation diagrams on the through strands (cups untouched)."""
        if size(lam) != size(mu) + 1:
            return []
        f = size(lam)
        offset = (r - f) // 2 * 2
        scratch = hecke.SymmetricLevel(f, ScalarDomain(None))
        d_sym, u_sym = hecke.branching_edge_data(scratch, mu, lam)
        alg = self.level(r)
        return [
            (
                _perm_combination_to_diagrams(alg, d_sym, offset),
                _perm_combination_to_diagrams(alg, u_sym, offset),
            )
        ]

    def jm_element(self, r: int, k: int) -> Element:
        """L_k = sum_{i<k} (s_ik - e_ik), the standard additive family."""
        alg = self.level(r)
        out = alg.zero()
        for i in range(1, k):
            out = out + alg.basis_element(_s_pair(alg, i, k))
            out = out - alg.basis_element(_e_pair(alg, i, k))
        return out


class PartitionTower(_DiagramTower):
    """Partition-algebra tower at half-integer steps with integer parameter n.

    Levels are internal: internal level m is the algebra P_{m/2}(n); whole
    level l sits at internal level 2l.
    """

    name = "partition"
    ring = "int"
    jm_kind = None

    def __init__(self, n: int, max_internal_level: int):
        self.n = n
        super().__init__(
            max_internal_level, ScalarDomain(None), partition_graph(max_internal_level)
        )

    def _make_level(self, r: int) -> AlgebraLevel:
        return diagram.PartitionLevel(r, self.n, self.domain)

    def generators(self, r: int) -> list[Element]:
        alg = self.level(r)
        gens = [alg.basis_element(d) for d in alg.generator_diagrams()]
        return gens or [alg.one()]

    def cell_generator(self, r: int, lam: Partition) -> Element:
        alg = self.level(r)
        f = size(lam)
        cut_top = alg.strands - (1 if alg.constrained else 0)
        out = alg.one()
        for i in range(f + 1, cut_top + 1):
            out = out * alg.basis_element(alg.p(i))
        return out * _through_symmetrizer(alg, lam, offset=0)

    def flip_basis(self, r: int, b):
        alg = self.level(r)
        if alg.constrained:
            raise ValueError("flip undefined at half-integer levels")
        return alg.flip_basis(b)

    def seed_branching(self, r: int, mu: Partition, lam: Partition):
        alg = self.level(r)
        if lam == mu:
            if alg.constrained:
                # adding the constrained strand: the embedding itself works
                return [(alg.one(), alg.one())]
            # dropping the constraint: cut the freed last strand on the left
            p_last = alg.basis_element(alg.p(alg.strands))
            return [(alg.one(), p_last)]
        return []


def _perm_combination_to_diagrams(alg, x: Element, offset: int) -> Element:
    """Transport a symmetric-group element to permutation diagrams acting on
    strands offset+1 .. offset+f, identity elsewhere."""
    k = alg.strands
    dom = alg.domain
    terms = {}
    for w, c in x.terms.items():
        f = len(w)
        blocks = [(offset + j, offset + w[j] - 1 + k) for j in range(f)]
        blocks += [(j, j + k) for j in range(k) if not offset <= j < offset + f]
        d = diagram.canonical(blocks)
        terms[d] = terms.get(d, dom.zero) + dom(c)
    return alg.element(terms)


def _through_symmetrizer(alg, lam: Partition, offset: int) -> Element:
    """Sum of permutation diagrams of the Young subgroup S_lam acting on the
    strands offset+1 .. offset+|lam|, identity elsewhere."""
    k = alg.strands
    f = size(lam)
    dom = alg.domain
    terms = {}
    for w in perms.young_subgroup(lam, f):
        blocks = [(offset + j, offset + w[j] - 1 + k) for j in range(f)]
        blocks += [(j, j + k) for j in range(k) if not offset <= j < offset + f]
        d = diagram.canonical(blocks)
        terms[d] = terms.get(d, dom.zero) + dom.one
    return alg.element(terms)


def _s_pair(alg, i: int, j: int):
    k = alg.strands
    blocks = [(t, t + k) for t in range(k) if t not in (i - 1, j - 1)]
    blocks += [(i - 1, j - 1 + k), (j - 1, i - 1 + k)]
    return diagram.canonical(blocks)


def _e_pair(alg, i: int, j: int):
    k = alg.strands
    blocks = [(t, t + k) for t in range(k) if t not in (i - 1, j - 1)]
    blocks += [(i - 1, j - 1), (i - 1 + k, j - 1 + k)]
    return diagram.canonical(blocks)


class SpecializedLevel(AlgebraLevel):
    """A level algebra with the parameter evaluated at a rational point."""

    def __init__(self, base: AlgebraLevel, domain: ScalarDomain, point):
        super().__init__(f"{base.tower}@{point}", base.level, domain)
        self.base = base
        self.point = point

    def basis(self):
        return self.base.basis()

    def identity_basis(self):
        return self.base.identity_basis()

    def _map(self, vec):
        out = {}
        for k, v in vec.items():
            c = evaluate_at(v, self.point)
            if c:
                out[k] = c
        return out

    def _pair_product(self, a, b):
        return self._map(self.base.pair_product(a, b))

    def _involve_basis(self, a):
        return self._map(self.base._involve_basis(a))

    def include_basis(self, a):
        return self.base.include_basis(a)

    def flip_basis(self, a):
        return self.base.flip_basis(a)


class SpecializedTower(Tower):
    """Rational specialization of a parametrized tower.

    Products, cell generators, branching factors, and JM elements are the
    images of the base tower's under evaluation at the chosen point, so all
    structural identities transfer verbatim.  Heavy idempotent computations
    run here when symbolic coefficients would grow too much.
    """

    def __init__(self, base: Tower, point):
        from fractions import Fraction

        self.base = base
        self.point = Fraction(point)
        self.name = f"{base.name}@{self.point}"
        self.jm_kind = base.jm_kind
        super().__init__(base.max_level, ScalarDomain(None), base.graph)

    def specialize(self, x: Element) -> Element:
        alg = self.level(x.algebra.level)
        return alg.element(
            {b: evaluate_at(c, self.point) for b, c in x.terms.items()}
        )

    def _make_level(self, r: int) -> AlgebraLevel:
        return SpecializedLevel(self.base.level(r), self.domain, self.point)

    def generators(self, r: int) -> list[Element]:
        return [self.specialize(x) for x in self.base.generators(r)]

    def cell_generator(self, r: int, lam: Partition) -> Element:
        return self.specialize(self.base.cell_generator(r, lam))

    def _branching_data(self, r, mu, lam):
        d, u = self.base.branching(r, mu, lam)
        return self.specialize(d), self.specialize(u)

    def flip_basis(self, r: int, b):
        return self.base.flip_basis(r, b)

    def jm_element(self, r: int, k: int) -> Element:
        return self.specialize(self.base.jm_element(r, k))

    def is_integral_scalar(self, s: Scalar) -> bool:
        # Integrality is a statement about the parametrized coefficients;
        # at a specialized point every scalar is accepted.
        return True


def make_tower(name: str, max_level: int, param: int | None = None) -> Tower:
    if name == "hecke":
        return HeckeTower(max_level)
    if name == "symmetric":
        return SymmetricTower(max_level)
    if name == "tl":
        return TemperleyLiebTower(max_level)
    if name == "brauer":
        return BrauerTower(max_level)
    if name == "partition":
        if param is None:
            raise ValueError("partition tower needs an integer parameter n")
        return PartitionTower(param, max_level)
    raise ValueError(f"unknown tower {name!r}")

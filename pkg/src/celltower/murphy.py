"""Murphy-style cellular basis data for one level of a tower.

`LevelData` assembles, for level r, the path basis m_{st} = d_s* c_lambda d_t
(d_t the product of branching d-factors along the path t, newest edge
leftmost), inserts it cell by cell in dominance order into one tracked
echelon, and exposes exact coordinates of arbitrary elements in that basis.
Everything downstream (ideal reduction, cell-module action matrices, Gram
forms, filtrations) is read off those coordinates instead of re-eliminating
per query.
"""

from __future__ import annotations


from .combinat import PathTableau, standard_paths
from .elements import Element
from .linalg import Matrix, TrackedEchelon, Vec, mat_inverse, mat_zero
from .scalars import Scalar


def path_sort_key(graph, t: PathTableau):
    """Total order refining reverse-lexicographic dominance descent.

    Later levels weigh more; within a level, dominance-greater labels come
    first (rank 0 is the most dominant label of its level).
    """
    ranks = []
    for i, label in enumerate(t.steps):
        order = graph.dominance_sorted(t.start_level + i)
        ranks.append(order.index(label))
    return tuple(reversed(ranks))


class LevelData:
    """Murphy basis, coordinates, and per-cell module data at one level."""

    @classmethod
    def get(cls, tower, r: int) -> "LevelData":
        cache = getattr(tower, "_level_data", None)
        if cache is None:
            cache = tower._level_data = {}
        if r not in cache:
            cache[r] = cls(tower, r)
        return cache[r]

    def __init__(self, tower, r: int):
        self.tower = tower
        self.r = r
        self.alg = tower.level(r)
        self.graph = tower.graph
        self.prev = LevelData.get(tower, r - 1) if r > 0 else None
        self.cells: tuple = self.graph.dominance_sorted(r)
        self.paths: dict = {}
        self.path_index: dict = {}
        self.d_elt: dict[PathTableau, Element] = {}
        self.v_elt: dict[PathTableau, Element] = {}
        self.m_elt: dict[tuple, Element] = {}
        self.cell_gen: dict = {}
        self._module: dict[int, _CellModuleData] = {}
        self._gram: dict[int, Matrix] = {}
        self._build()

    # -- construction ------------------------------------------------------

    def _build(self) -> None:
        tower, r, alg = self.tower, self.r, self.alg
        for lam in self.cells:
            ps = standard_paths(self.graph, lam, r)
            ps.sort(key=lambda t: path_sort_key(self.graph, t))
            self.paths[lam] = ps
            for i, t in enumerate(ps):
                self.path_index[t] = i
        for lam in self.cells:
            self.cell_gen[lam] = tower.cell_generator(r, lam)
            for t in self.paths[lam]:
                if r == 0:
                    self.d_elt[t] = alg.one()
                    self.v_elt[t] = self.cell_gen[lam]
                    continue
                body = t.truncate(r - 1)
                d_edge, u_edge = tower.branching(r, body.label(r - 1), lam)
                self.d_elt[t] = d_edge * alg.include(self.prev.d_elt[body])
                self.v_elt[t] = u_edge.involve() * alg.include(self.prev.v_elt[body])
        self.ech = TrackedEchelon(alg.domain)
        for ci, lam in enumerate(self.cells):
            ps = self.paths[lam]
            for si, s in enumerate(ps):
                ds_star = self.d_elt[s].involve()
                for ti, t in enumerate(ps):
                    m = ds_star * self.v_elt[t]
                    tag = (ci, si, ti)
                    self.m_elt[tag] = m
                    if not self.ech.insert(dict(m.terms), tag):
                        raise ValueError(
                            f"{self.tower.name}@{r}: basis element {lam} "
                            f"({si},{ti}) dependent on earlier ones"
                        )
        if self.ech.rank != alg.dimension:
            raise ValueError(
                f"{self.tower.name}@{r}: path basis rank {self.ech.rank} "
                f"!= dimension {alg.dimension}"
            )

    # -- coordinates and reduction ----------------------------------------

    def coords(self, x: Element) -> Vec:
        """Exact coordinates of x over the tags (cell_index, s_index, t_index)."""
        out = self.ech.coordinates(dict(x.terms))
        if out is None:
            raise ValueError("element outside the algebra span (bad input)")
        return out

    def cell_index(self, lam) -> int:
        return self.cells.index(lam)

    def strictly_greater_cells(self, ci: int) -> set[int]:
        """Indices of cells strictly greater than cells[ci] in the cell order."""
        lam = self.cells[ci]
        out = set()
        for cj, kappa in enumerate(self.cells):
            if cj != ci and self.graph.cmp(self.r, kappa, lam) == ">":
                out.add(cj)
        return out

    def reduce_mod_ideal(self, x: Element, ci: int) -> Element:
        """Canonical representative of x modulo the ideal of cells > cells[ci]."""
        higher = self.strictly_greater_cells(ci)
        out = self.alg.zero()
        for tag, c in self.coords(x).items():
            if tag[0] not in higher:
                out = out + self.m_elt[tag].scale(c)
        return out

    def ideal_coords(self, x: Element, ci: int) -> tuple[Vec, Vec, Vec]:
        """Split coords of x into (on this cell, strictly greater cells, rest)."""
        higher = self.strictly_greater_cells(ci)
        own: Vec = {}
        up: Vec = {}
        rest: Vec = {}
        for tag, c in self.coords(x).items():
            if tag[0] == ci:
                own[tag] = c
            elif tag[0] in higher:
                up[tag] = c
            else:
                rest[tag] = c
        return own, up, rest

    # -- cell modules ------------------------------------------------------

    def module(self, ci: int) -> "_CellModuleData":
        if ci not in self._module:
            self._module[ci] = _CellModuleData(self, ci)
        return self._module[ci]

    def action_matrix(self, ci: int, a: Element) -> Matrix:
        """Right action of a on the cell module: row t holds the coefficients
        of m_t * a over the path basis."""
        return self.module(ci).action_matrix(a)

    def gram_matrix(self, ci: int) -> Matrix:
        """G[t][u] = <m_t, m_u> defined by c d_t d_u* c = <t,u> c mod higher cells."""
        if ci in self._gram:
            return self._gram[ci]
        lam = self.cells[ci]
        ps = self.paths[lam]
        dom = self.alg.domain
        mod = self.module(ci)
        n = len(ps)
        g = mat_zero(n, n, dom)
        vs = [self.v_elt[t] for t in ps]
        v_stars = [v.involve() for v in vs]
        for i in range(n):
            for j in range(i, n):
                val = mod.proportion_to_cell_gen(vs[i] * v_stars[j])
                g[i][j] = val
                g[j][i] = val
        self._gram[ci] = g
        return g


class _CellModuleData:
    """Coefficient-extraction data for one cell module at one level."""

    def __init__(self, level_data: LevelData, ci: int):
        self.L = level_data
        self.ci = ci
        self.lam = level_data.cells[ci]
        self.paths = level_data.paths[self.lam]
        self.n = len(self.paths)
        dom = level_data.alg.domain
        self.dom = dom
        # beta[t] = cell-ci coordinates of the representative v_t.
        self.beta: list[Vec] = []
        for t in self.paths:
            own, _, rest = level_data.ideal_coords(level_data.v_elt[t], ci)
            if rest:
                raise ValueError(
                    f"representative of {t} meets cells outside the ideal order"
                )
            self.beta.append({(tag[1], tag[2]): c for tag, c in own.items()})
        # Choose coordinate positions where the beta matrix is invertible.
        ech = TrackedEchelon(dom, track=False)
        positions = sorted({p for b in self.beta for p in b})
        self.selected: list = []
        for pos in positions:
            row = {i: b[pos] for i, b in enumerate(self.beta) if pos in b}
            if ech.insert(row):
                self.selected.append(pos)
                if ech.rank == self.n:
                    break
        if len(self.selected) < self.n:
            raise ValueError(f"cell {self.lam}: representatives not independent")
        s_mat = [
            [self.beta[v].get(pos, dom.zero) for v in range(self.n)]
            for pos in self.selected
        ]
        self.s_inv = mat_inverse(s_mat, dom)
        # Reference data for reading off multiples of the cell generator.
        own, _, rest = level_data.ideal_coords(level_data.cell_gen[self.lam], ci)
        if rest:
            raise ValueError(f"cell generator of {self.lam} outside its own ideal")
        self.cell_gen_coords = {(tag[1], tag[2]): c for tag, c in own.items()}
        self.cell_gen_ref = min(
            k for k, c in self.cell_gen_coords.items() if not dom.is_zero(c)
        )

    def expand(self, x: Element, strict: bool = True) -> list[Scalar]:
        """Coefficients r_v with x = sum_v r_v v_v modulo the higher-cell ideal.

        With strict=True, x must lie in (span of the v_v) + ideal exactly;
        coordinates on cells outside the order raise.
        """
        own, _, rest = self.L.ideal_coords(x, self.ci)
        if strict and rest:
            raise ValueError("element has coordinates outside the cell's ideal span")
        y = {(tag[1], tag[2]): c for tag, c in own.items()}
        ysel = [y.get(pos, self.dom.zero) for pos in self.selected]
        r = [
            sum((self.s_inv[i][j] * ysel[j] for j in range(self.n)), self.dom.zero)
            for i in range(self.n)
        ]
        # Verify on all coordinates, not only the selected square.
        check: Vec = {}
        for v, rv in enumerate(r):
            if self.dom.is_zero(rv):
                continue
            for pos, b in self.beta[v].items():
                s = check.get(pos, self.dom.zero) + rv * b
                if self.dom.is_zero(s):
                    check.pop(pos, None)
                else:
                    check[pos] = s
        if check != y:
            raise ValueError("element is not a module combination of the v_t")
        return r

    def action_matrix(self, a: Element) -> Matrix:
        rows = []
        for t in self.paths:
            rows.append(self.expand(self.L.v_elt[t] * a))
        return rows

    def proportion_to_cell_gen(self, x: Element) -> Scalar:
        """The scalar c with x = c * (cell generator) modulo the higher-cell ideal."""
        own, _, rest = self.L.ideal_coords(x, self.ci)
        if rest:
            raise ValueError("element has coordinates outside the cell's ideal span")
        y = {(tag[1], tag[2]): c for tag, c in own.items()}
        val = y.get(self.cell_gen_ref, self.dom.zero)
        c = val / self.cell_gen_coords[self.cell_gen_ref]
        for pos, b in self.cell_gen_coords.items():
            if y.get(pos, self.dom.zero) != c * b:
                raise ValueError("element is not a multiple of the cell generator")
        for pos in y:
            if pos not in self.cell_gen_coords:
                raise ValueError("element is not a multiple of the cell generator")
        return c

"""Executable checkers for the tower axioms and basis identities.

Every structural assumption the engine relies on is verified here on concrete
data rather than trusted: cellularity of the path basis, exactness of the
branching compatibility c_lambda d = u* c_mu, factorization of path
representatives, the Jucys-Murphy family axioms, the flip automorphism, and
the embedding properties of level inclusions.  Failures carry re-verifiable
witnesses instead of raising.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .combinat import PathTableau
from .elements import Element
from .murphy import LevelData
from .scalars import format_scalar


@dataclass
class CheckResult:
    axiom: str
    level: int
    status: str  # "pass" | "fail"
    witness: Optional[dict] = None

    def to_json(self) -> dict:
        out = {"axiom": self.axiom, "level": self.level, "status": self.status}
        if self.witness is not None:
            out["witness"] = self.witness
        return out


@dataclass
class AxiomReport:
    results: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.status == "pass" for r in self.results)

    def add(self, axiom: str, level: int, ok: bool, witness: Optional[dict] = None):
        self.results.append(
            CheckResult(axiom, level, "pass" if ok else "fail", None if ok else witness)
        )

    def extend(self, other: "AxiomReport") -> None:
        self.results.extend(other.results)

    def to_json(self) -> list:
        return [r.to_json() for r in self.results]


def _describe(x: Element) -> str:
    if not x.terms:
        return "0"
    bits = [
        f"{format_scalar(c)}*{b}" for b, c in sorted(x.terms.items())
    ]
    return " + ".join(bits[:8]) + (" + ..." if len(bits) > 8 else "")


def check_base_level(tower) -> AxiomReport:
    """The level-0 algebra is the scalar ring itself."""
    report = AxiomReport()
    report.add("base-level-rank-one", 0, tower.level(0).dimension == 1)
    return report


def check_inclusion(tower, r: int) -> AxiomReport:
    """Level inclusion is a unital embedding compatible with the involution."""
    report = AxiomReport()
    alg = tower.level(r)
    prev = tower.level(r - 1)
    report.add("inclusion-unital", r, alg.include(prev.one()) == alg.one())
    images = {prev.basis().index(b): alg.include_basis(b) for b in prev.basis()}
    report.add("inclusion-injective", r, len(set(images.values())) == len(images))
    gens = tower.generators(r - 1)
    ok = True
    witness = None
    for a in gens:
        for b in gens:
            lhs = alg.include(a * b)
            rhs = alg.include(a) * alg.include(b)
            if lhs != rhs:
                ok = False
                witness = {"a": _describe(a), "b": _describe(b)}
                break
        if not ok:
            break
    report.add("inclusion-multiplicative", r, ok, witness)
    ok = True
    witness = None
    for a in gens:
        if alg.include(a.involve()) != alg.include(a).involve():
            ok = False
            witness = {"a": _describe(a)}
            break
    report.add("inclusion-involution", r, ok, witness)
    return report


def check_cell_generators(tower, r: int) -> AxiomReport:
    """Self-adjointness of every cell generator at the level."""
    report = AxiomReport()
    for lam in tower.graph.levels[r]:
        c = tower.cell_generator(r, lam)
        report.add(
            "cell-generator-self-adjoint",
            r,
            c.involve() == c,
            {"cell": str(lam)},
        )
    return report


def check_compatibility(tower, r: int, mu, lam) -> bool:
    """Exact equality c_lambda d = u* c_mu for one edge."""
    d, u = tower.branching(r, mu, lam)
    c_lam = tower.cell_generator(r, lam)
    c_mu = tower.embed(tower.cell_generator(r - 1, mu), r)
    return c_lam * d == u.involve() * c_mu


def check_all_compatibility(tower, r: int) -> AxiomReport:
    report = AxiomReport()
    for lam in tower.graph.levels[r]:
        for mu in tower.graph.sources(r, lam):
            report.add(
                "branching-compatibility",
                r,
                check_compatibility(tower, r, mu, lam),
                {"edge": f"{mu}->{lam}"},
            )
    return report


def _edge_u_star(tower, level: int, src, tgt, r: int) -> Element:
    _, u = tower.branching(level, src, tgt)
    return tower.embed(u.involve(), r)


def path_u_star(tower, t: PathTableau, lo: int, hi: int, r: int) -> Element:
    """Product of edge u-involutes for the path segment between two levels,
    newest edge leftmost, embedded at level r."""
    out = tower.level(r).one()
    for level, src, tgt in t.edges():
        if lo <= level and level + 1 <= hi:
            out = _edge_u_star(tower, level + 1, src, tgt, r) * out
    return out


def check_path_factorization(tower, t: PathTableau, s: int) -> bool:
    """u*_t = u*_{t[s,r]} u*_{t[0,s]} and u*_{t[0,s]} = c_{t(s)} d_{t[0,s]}."""
    r = t.end_level
    whole = path_u_star(tower, t, 0, r, r)
    head = path_u_star(tower, t, s, r, r)
    tail = path_u_star(tower, t, 0, s, r)
    if whole != head * tail:
        return False
    # The lower segment as an element at its own level.
    body = t.truncate(s)
    L = LevelData.get(tower, s)
    low = L.cell_gen[body.shape] * L.d_elt[body]
    if tail != tower.embed(low, r):
        return False
    # Cross-check the full representative against c d_t.
    Lr = LevelData.get(tower, r)
    return whole == Lr.cell_gen[t.shape] * Lr.d_elt[t]


def check_factorization_level(tower, r: int) -> AxiomReport:
    report = AxiomReport()
    L = LevelData.get(tower, r)
    for lam in L.cells:
        for t in L.paths[lam]:
            ok = all(check_path_factorization(tower, t, s) for s in range(r + 1))
            report.add("path-factorization", r, ok, {"path": str(t)})
    return report


def check_cellularity(tower, r: int) -> AxiomReport:
    """The defining congruences of a cellular basis, on the path basis."""
    report = AxiomReport()
    L = LevelData.get(tower, r)
    gens = tower.generators(r)
    for ci, lam in enumerate(L.cells):
        ps = L.paths[lam]
        n = len(ps)
        higher = L.strictly_greater_cells(ci)
        # (4b) involution congruence.
        ok = True
        witness = None
        for si in range(n):
            for ti in range(n):
                diff = L.m_elt[(ci, si, ti)].involve() - L.m_elt[(ci, ti, si)]
                if any(
                    tag[0] not in higher for tag in L.coords(diff)
                ):
                    ok = False
                    witness = {"cell": str(lam), "s": si, "t": ti}
                    break
            if not ok:
                break
        report.add("cellularity-involution", r, ok, witness)
        # (4a) right action: row-stable coefficients, independent of s, integral.
        for gi, a in enumerate(gens):
            ok = True
            witness = None
            reference: dict[int, list] = {}
            for si in range(n):
                for ti in range(n):
                    x = L.m_elt[(ci, si, ti)] * a
                    for tag, c in L.coords(x).items():
                        cj, sj, vj = tag
                        if cj in higher:
                            continue
                        if cj != ci or sj != si:
                            ok = False
                            witness = {
                                "cell": str(lam),
                                "s": si,
                                "t": ti,
                                "generator": gi,
                                "stray": str(tag),
                            }
                            break
                        if not tower.is_integral_scalar(c):
                            ok = False
                            witness = {
                                "cell": str(lam),
                                "coefficient": format_scalar(c),
                                "generator": gi,
                            }
                            break
                    if not ok:
                        break
                    row = [
                        L.coords(x).get((ci, si, vi), L.alg.domain.zero)
                        for vi in range(n)
                    ]
                    if ti in reference and si > 0:
                        if row != reference[ti]:
                            ok = False
                            witness = {
                                "cell": str(lam),
                                "t": ti,
                                "generator": gi,
                                "s": si,
                            }
                    elif si == 0:
                        reference[ti] = row
                    if not ok:
                        break
                if not ok:
                    break
            report.add("cellularity-action", r, ok, witness)
    return report


def check_jm_family(tower, r: int) -> tuple[AxiomReport, dict]:
    """JM axioms at level r; also extracts the per-cell scalars d(lambda)."""
    report = AxiomReport()
    scalars: dict = {}
    if tower.jm_kind is None:
        return report, scalars
    alg = tower.level(r)
    jms = [tower.jm_element(r, k) for k in range(1, r + 1)]
    ok = all(x.involve() == x for x in jms)
    report.add("jm-self-adjoint", r, ok)
    ok = True
    witness = None
    for i in range(len(jms)):
        for j in range(i + 1, len(jms)):
            if jms[i] * jms[j] != jms[j] * jms[i]:
                ok = False
                witness = {"i": i + 1, "j": j + 1}
                break
        if not ok:
            break
    report.add("jm-commuting-family", r, ok, witness)
    # L_k commutes with everything at level k-1.
    ok = True
    witness = None
    for k in range(1, r + 1):
        for a in tower.generators(k - 1):
            ae = tower.embed(a, r)
            if jms[k - 1] * ae != ae * jms[k - 1]:
                ok = False
                witness = {"k": k, "generator": _describe(a)}
                break
        if not ok:
            break
    report.add("jm-commutes-below", r, ok, witness)
    # The symmetric combination acts on each cell module by a scalar.
    if tower.jm_kind == "additive":
        total = jms[0]
        for x in jms[1:]:
            total = total + x
    else:
        total = jms[0]
        for x in jms[1:]:
            total = total * x
    L = LevelData.get(tower, r)
    for ci, lam in enumerate(L.cells):
        mat = L.action_matrix(ci, total)
        n = len(mat)
        diag = mat[0][0]
        scalar_ok = all(
            mat[i][j] == (diag if i == j else L.alg.domain.zero)
            for i in range(n)
            for j in range(n)
        )
        report.add(
            "jm-sum-scalar" if tower.jm_kind == "additive" else "jm-product-scalar",
            r,
            scalar_ok,
            {"cell": str(lam)},
        )
        if scalar_ok:
            scalars[lam] = diag
    return report, scalars


def check_flip(tower, r: int, s: int) -> AxiomReport:
    """Order two, automorphism property, and cross-commutation through f_r f_{r-s}."""
    report = AxiomReport()
    alg = tower.level(r)
    ok = all(
        tower.flip_basis(r, tower.flip_basis(r, b)) == b for b in alg.basis()
    )
    report.add("flip-order-two", r, ok)
    gens = tower.generators(r)
    ok = True
    witness = None
    for a in gens:
        for b in gens:
            if tower.flip(a * b) != tower.flip(a) * tower.flip(b):
                ok = False
                witness = {"a": _describe(a), "b": _describe(b)}
                break
        if not ok:
            break
    report.add("flip-automorphism", r, ok, witness)
    ok = True
    witness = None
    for b in tower.generators(r - s):
        fb = tower.flip_embed(b, r)
        for a in tower.generators(s):
            ae = tower.embed(a, r)
            if fb * ae != ae * fb:
                ok = False
                witness = {"flipped": _describe(b), "inner": _describe(a)}
                break
        if not ok:
            break
    report.add("flip-cross-commutation", r, ok, witness)
    return report


def check_restriction_filtration(tower, r: int) -> AxiomReport:
    """Restricting a cell module to the level below filters it by the
    penultimate label, with subquotients equal to the lower cell modules.

    Grouping the paths of a cell by their label at level r-1 and ordering the
    groups most-dominant-first, the span of the groups up to a given one must
    be stable under the embedded lower level, and the action on each
    subquotient must equal the lower cell module's action matrix under the
    path identification t' <-> (t' followed by the edge)."""
    report = AxiomReport()
    L = LevelData.get(tower, r)
    prev = LevelData.get(tower, r - 1)
    alg = L.alg
    dom = alg.domain
    gens = [alg.include(a) for a in tower.generators(r - 1)]
    for ci, lam in enumerate(L.cells):
        paths = L.paths[lam]
        penult = [t.label(r - 1) for t in paths]
        ok = True
        witness = None
        for a, a_emb in zip(tower.generators(r - 1), gens):
            m = L.action_matrix(ci, a_emb)
            prev_mats = {}
            for i, t in enumerate(paths):
                mu = penult[i]
                for j, v in enumerate(paths):
                    nu = penult[j]
                    entry = m[i][j]
                    if dom.is_zero(entry):
                        continue
                    if nu != mu and tower.graph.cmp(r - 1, nu, mu) != ">":
                        ok = False
                        witness = {"path": str(t), "other": str(v), "issue": "stability"}
                        break
                if not ok:
                    break
                if mu not in prev_mats:
                    pci = prev.cells.index(mu)
                    prev_mats[mu] = prev.action_matrix(pci, a)
                pm = prev_mats[mu]
                body = t.truncate(r - 1)
                bi = prev.path_index[body]
                for j, v in enumerate(paths):
                    if penult[j] != mu:
                        continue
                    vj = prev.path_index[v.truncate(r - 1)]
                    if m[i][j] != pm[bi][vj]:
                        ok = False
                        witness = {
                            "path": str(t),
                            "other": str(v),
                            "issue": "subquotient",
                        }
                        break
                if not ok:
                    break
            if not ok:
                break
        report.add(f"restriction-filtration-{lam}", r, ok, witness)
    return report


def full_axiom_suite(tower, max_level: int) -> AxiomReport:
    """Everything at once, per level; the per-provider acceptance gate."""
    report = check_base_level(tower)
    for r in range(1, max_level + 1):
        report.extend(check_inclusion(tower, r))
        report.extend(check_cell_generators(tower, r))
        report.extend(check_all_compatibility(tower, r))
        report.extend(check_cellularity(tower, r))
        report.extend(check_factorization_level(tower, r))
        jm_report, _ = check_jm_family(tower, r)
        report.extend(jm_report)
        if tower.name != "partition" or r % 2 == 0:
            for s in range(r + 1):
                if tower.name == "partition" and s % 2 == 1:
                    continue
                report.extend(check_flip(tower, r, s))
    return report

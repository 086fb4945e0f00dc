"""Sparse elements of a level algebra with memoized basis-pair products.

An `AlgebraLevel` supplies the distinguished basis of one level of a tower,
the product of two basis elements, the involution, the unit, and the
embedding of the level below.  `Element` is a sparse scalar combination of
basis identifiers; all arithmetic funnels through the level's memoized
structure constants.
"""

from __future__ import annotations

from typing import Hashable, Iterable

from .linalg import Vec, vec_axpy
from .scalars import Scalar, ScalarDomain

BasisId = Hashable


def _mul_cleared(alg: "AlgebraLevel", t1: Vec, t2: Vec) -> Vec | None:
    """Product over a parameterized field via a common denominator.

    All coefficient arithmetic runs on polynomial numerators, with one
    fraction reduction per coefficient of the result; reducing after every
    intermediate operation dominates the cost otherwise.  Returns None when
    a coefficient shape it does not handle appears."""
    from .scalars import RationalFunction, cleared_numerator, common_denominator

    cleared = []
    dens = []
    for t in (t1, t2):
        if not all(isinstance(c, RationalFunction) for c in t.values()):
            return None
        d = common_denominator(t.values())
        cleared.append({b: cleared_numerator(c, d) for b, c in t.items()})
        dens.append(d)
    acc: dict = {}
    for b1, n1 in cleared[0].items():
        for b2, n2 in cleared[1].items():
            c = n1 * n2
            if c.is_zero():
                continue
            for b, s in alg.pair_product(b1, b2).items():
                if not isinstance(s, RationalFunction) or not s.den.is_const():
                    return None
                sp = s.num
                dv = s.den.const_value()
                if dv != 1:
                    sp = sp.scale(1 / dv)
                p = c * sp
                cur = acc.get(b)
                acc[b] = p if cur is None else cur + p
    den = dens[0] * dens[1]
    out: Vec = {}
    for b, p in acc.items():
        if p.is_zero():
            continue
        v = RationalFunction(p, den)
        if not v.is_zero():
            out[b] = v
    return out


class AlgebraLevel:
    """One level of a tower: finite-dimensional algebra with distinguished basis.

    Subclasses implement `_pair_product`, `_involve_basis`, `basis`,
    `identity_basis`, and `include_basis` (embedding of the previous level's
    basis elements).  Pair products are memoized here.
    """

    def __init__(self, tower: str, level: int, domain: ScalarDomain):
        self.tower = tower
        self.level = level
        self.domain = domain
        self._product_cache: dict[tuple[BasisId, BasisId], Vec] = {}

    # -- subclass interface ------------------------------------------------

    def basis(self) -> tuple[BasisId, ...]:
        raise NotImplementedError

    def identity_basis(self) -> BasisId:
        raise NotImplementedError

    def _pair_product(self, a: BasisId, b: BasisId) -> Vec:
        raise NotImplementedError

    def _involve_basis(self, a: BasisId) -> Vec:
        raise NotImplementedError

    def include_basis(self, a: BasisId) -> BasisId:
        """Image at this level of a basis element of the previous level."""
        raise NotImplementedError

    # -- shared machinery --------------------------------------------------

    @property
    def dimension(self) -> int:
        return len(self.basis())

    def pair_product(self, a: BasisId, b: BasisId) -> Vec:
        key = (a, b)
        out = self._product_cache.get(key)
        if out is None:
            out = self._pair_product(a, b)
            self._product_cache[key] = out
        return out

    def element(self, terms: Vec) -> "Element":
        return Element(self, {k: v for k, v in terms.items() if not self.domain.is_zero(v)})

    def zero(self) -> "Element":
        return Element(self, {})

    def one(self) -> "Element":
        return Element(self, {self.identity_basis(): self.domain.one})

    def basis_element(self, b: BasisId) -> "Element":
        return Element(self, {b: self.domain.one})

    def include(self, x: "Element") -> "Element":
        """Embed an element of the previous level into this level."""
        terms: Vec = {}
        dom = self.domain
        for b, c in x.terms.items():
            k = self.include_basis(b)
            s = terms.get(k)
            s = c if s is None else s + c
            if dom.is_zero(s):
                terms.pop(k, None)
            else:
                terms[k] = s
        return Element(self, terms)


class Element:
    """A sparse scalar-weighted combination of basis identifiers at one level."""

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra: AlgebraLevel, terms: Vec):
        self.algebra = algebra
        self.terms = terms

    def _check(self, other: "Element") -> None:
        if self.algebra is not other.algebra:
            if (
                self.algebra.tower != other.algebra.tower
                or self.algebra.level != other.algebra.level
            ):
                raise ValueError(
                    f"level mismatch: {self.algebra.tower}@{self.algebra.level}"
                    f" vs {other.algebra.tower}@{other.algebra.level}"
                )

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "Element") -> "Element":
        self._check(other)
        dom = self.algebra.domain
        out = dict(self.terms)
        for k, v in other.terms.items():
            s = out.get(k)
            s = v if s is None else s + v
            if dom.is_zero(s):
                out.pop(k, None)
            else:
                out[k] = s
        return Element(self.algebra, out)

    def __neg__(self) -> "Element":
        return Element(self.algebra, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other: "Element") -> "Element":
        return self + (-other)

    def scale(self, c) -> "Element":
        dom = self.algebra.domain
        c = dom(c) if not isinstance(c, type(dom.one)) else c
        if dom.is_zero(c):
            return Element(self.algebra, {})
        return Element(self.algebra, {k: v * c for k, v in self.terms.items()})

    def __mul__(self, other: "Element") -> "Element":
        self._check(other)
        alg = self.algebra
        dom = alg.domain
        if dom.param is not None and self.terms and other.terms:
            out = _mul_cleared(alg, self.terms, other.terms)
            if out is not None:
                return Element(alg, out)
        out = {}
        for b1, c1 in self.terms.items():
            for b2, c2 in other.terms.items():
                c = c1 * c2
                if dom.is_zero(c):
                    continue
                vec_axpy(out, c, alg.pair_product(b1, b2), dom)
        return Element(alg, out)

    def involve(self) -> "Element":
        alg = self.algebra
        dom = alg.domain
        out: Vec = {}
        for b, c in self.terms.items():
            vec_axpy(out, c, alg._involve_basis(b), dom)
        return Element(alg, out)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Element)
            and self.algebra.tower == other.algebra.tower
            and self.algebra.level == other.algebra.level
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash(
            (self.algebra.tower, self.algebra.level, tuple(sorted(self.terms.items())))
        )

    def coeff(self, b: BasisId) -> Scalar:
        return self.terms.get(b, self.algebra.domain.zero)

    def support(self) -> list[BasisId]:
        return sorted(self.terms)

    def __repr__(self) -> str:
        if not self.terms:
            return "Element(0)"
        bits = [f"{v}*{k}" for k, v in sorted(self.terms.items())[:6]]
        more = "..." if len(self.terms) > 6 else ""
        return f"Element({' + '.join(bits)}{more})"


def element_sum(elements: Iterable[Element]) -> Element:
    it = iter(elements)
    first = next(it)
    out = dict(first.terms)
    dom = first.algebra.domain
    for e in it:
        for k, v in e.terms.items():
            s = out.get(k)
            s = v if s is None else s + v
            if dom.is_zero(s):
                out.pop(k, None)
            else:
                out[k] = s
    return Element(first.algebra, out)

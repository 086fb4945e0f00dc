"""Exact scalar arithmetic: rationals, Laurent polynomials, rational functions.

Every algebra in the engine works over one of three coefficient domains:
the integers, Laurent polynomials in a single named parameter, or ordinary
polynomials in that parameter.  Computations happen over the fraction field,
so the two public scalar kinds are `fractions.Fraction` and
`RationalFunction`.  `LaurentPoly` is the numerator/denominator type.

All values are immutable and normalized eagerly: polynomial fractions are
reduced by gcd after every operation and the denominator is made monic with
lowest exponent zero, so equality is plain structural comparison.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Union

Rational = Fraction

_ZERO = Fraction(0)
_ONE = Fraction(1)


class ParameterMismatch(ValueError):
    """Raised when scalars over different parameters are combined."""


class PoleError(ZeroDivisionError):
    """Raised when evaluating a rational function at a zero of its denominator."""


class LaurentPoly:
    """A Laurent polynomial in one parameter with Fraction coefficients.

    Stored as a map from integer exponent (possibly negative) to nonzero
    coefficient.  Hashable and totally ordered by (parameter, sorted terms)
    so scalars can key dictionaries and sort deterministically.
    """

    __slots__ = ("param", "coeffs", "_hash")

    def __init__(self, param: str, coeffs: dict[int, Fraction]):
        self.param = param
        self.coeffs = {e: c for e, c in coeffs.items() if c != 0}
        self._hash = None

    # -- constructors ------------------------------------------------------

    @staticmethod
    def const(param: str, value) -> "LaurentPoly":
        v = Fraction(value)
        return LaurentPoly(param, {0: v} if v else {})

    @staticmethod
    def gen(param: str, exponent: int = 1) -> "LaurentPoly":
        return LaurentPoly(param, {exponent: _ONE})

    # -- structure ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_const(self) -> bool:
        return not self.coeffs or set(self.coeffs) == {0}

    def const_value(self) -> Fraction:
        if not self.coeffs:
            return _ZERO
        if set(self.coeffs) != {0}:
            raise ValueError(f"not a constant: {self}")
        return self.coeffs[0]

    def min_exp(self) -> int:
        return min(self.coeffs)

    def max_exp(self) -> int:
        return max(self.coeffs)

    def is_monomial(self) -> bool:
        return len(self.coeffs) == 1

    def is_unit(self) -> bool:
        """True iff this is +-(param^k): a unit of the Laurent polynomial ring."""
        if len(self.coeffs) != 1:
            return False
        c = next(iter(self.coeffs.values()))
        return c == 1 or c == -1

    def has_integer_coeffs(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs.values())

    def leading_coeff(self) -> Fraction:
        return self.coeffs[self.max_exp()] if self.coeffs else _ZERO

    def shift(self, k: int) -> "LaurentPoly":
        return LaurentPoly(self.param, {e + k: c for e, c in self.coeffs.items()})

    def degree_span(self) -> int:
        return self.max_exp() - self.min_exp() if self.coeffs else -1

    # -- arithmetic --------------------------------------------------------

    def _check(self, other: "LaurentPoly") -> None:
        if self.param != other.param:
            raise ParameterMismatch(f"{self.param!r} vs {other.param!r}")

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        self._check(other)
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            s = out.get(e, _ZERO) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return LaurentPoly(self.param, out)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(self.param, {e: -c for e, c in self.coeffs.items()})

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        self._check(other)
        if not self.coeffs or not other.coeffs:
            return LaurentPoly(self.param, {})
        # Convolve over the integers after clearing denominators; integer
        # products avoid a gcd per coefficient multiplication.
        d1 = math.lcm(*(c.denominator for c in self.coeffs.values()))
        d2 = math.lcm(*(c.denominator for c in other.coeffs.values()))
        a = {e: int(c * d1) for e, c in self.coeffs.items()}
        b = {e: int(c * d2) for e, c in other.coeffs.items()}
        acc: dict[int, int] = {}
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                e = e1 + e2
                acc[e] = acc.get(e, 0) + c1 * c2
        d = d1 * d2
        return LaurentPoly(
            self.param, {e: Fraction(c, d) for e, c in acc.items() if c}
        )

    def scale(self, k) -> "LaurentPoly":
        k = Fraction(k)
        if not k:
            return LaurentPoly(self.param, {})
        return LaurentPoly(self.param, {e: c * k for e, c in self.coeffs.items()})

    def evaluate(self, point) -> Fraction:
        point = Fraction(point)
        if point == 0 and self.coeffs and self.min_exp() < 0:
            raise PoleError("negative exponent at zero")
        return sum((c * point ** e for e, c in self.coeffs.items()), _ZERO)

    # -- comparison / printing --------------------------------------------

    def _key(self):
        return (self.param, tuple(sorted(self.coeffs.items())))

    def __eq__(self, other) -> bool:
        return isinstance(other, LaurentPoly) and self._key() == other._key()

    def __lt__(self, other) -> bool:
        return self._key() < other._key()

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self._key())
        return self._hash

    def __repr__(self) -> str:
        return f"LaurentPoly({format_laurent(self)!r})"


def format_laurent(p: LaurentPoly) -> str:
    if not p.coeffs:
        return "0"
    parts = []
    for e in sorted(p.coeffs, reverse=True):
        c = p.coeffs[e]
        if e == 0:
            term = str(c)
        else:
            base = p.param if e == 1 else f"{p.param}^{e}"
            if c == 1:
                term = base
            elif c == -1:
                term = f"-{base}"
            else:
                term = f"{c}*{base}"
        parts.append(term)
    out = parts[0]
    for term in parts[1:]:
        out += f" - {term[1:]}" if term.startswith("-") else f" + {term}"
    return out


def _poly_divmod(a: LaurentPoly, b: LaurentPoly) -> tuple[LaurentPoly, LaurentPoly]:
    """Division with remainder for ordinary (nonnegative-exponent) polynomials."""
    if b.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    q: dict[int, Fraction] = {}
    rem = dict(a.coeffs)
    db, lb = b.max_exp(), b.leading_coeff()
    while rem:
        da = max(rem)
        if da < db:
            break
        f = rem[da] / lb
        e = da - db
        q[e] = q.get(e, _ZERO) + f
        for eb, cb in b.coeffs.items():
            k = eb + e
            s = rem.get(k, _ZERO) - f * cb
            if s:
                rem[k] = s
            else:
                rem.pop(k, None)
    return LaurentPoly(a.param, q), LaurentPoly(a.param, rem)


def _int_coeffs(p: LaurentPoly) -> dict[int, int]:
    """Primitive integer coefficients of a polynomial (content divided out)."""
    if not p.coeffs:
        return {}
    scale = math.lcm(*(c.denominator for c in p.coeffs.values()))
    ints = {e: int(c * scale) for e, c in p.coeffs.items()}
    g = math.gcd(*ints.values())
    if g > 1:
        ints = {e: c // g for e, c in ints.items()}
    return ints


_GCD_PRIME = 2**61 - 1


def _coprime_mod_p(u: dict[int, int], v: dict[int, int]) -> bool:
    """Certify gcd(u, v) = 1 by a gcd computation modulo a large prime.

    The gcd mod p has degree at least that of the true gcd whenever p divides
    neither leading coefficient, so a constant answer is conclusive; a
    nonconstant answer only means the fast path does not apply."""
    p = _GCD_PRIME
    if u[max(u)] % p == 0 or v[max(v)] % p == 0:
        return False
    fu = {e: c % p for e, c in u.items() if c % p}
    fv = {e: c % p for e, c in v.items() if c % p}
    while fv:
        du, dv = max(fu), max(fv)
        if du < dv:
            fu, fv = fv, fu
            du, dv = dv, du
        lu, lv = fu.pop(du), fv[dv]
        rem = {e: c * lv % p for e, c in fu.items()}
        for e, c in fv.items():
            if e == dv:
                continue
            k = e + du - dv
            s = (rem.get(k, 0) - lu * c) % p
            if s:
                rem[k] = s
            else:
                rem.pop(k, None)
        fu, fv = fv, rem
    return bool(fu) and max(fu) == 0


def _poly_gcd(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Monic gcd of two nonnegative-exponent polynomials.

    Runs a primitive pseudo-remainder sequence over the integers, which keeps
    coefficients small; Euclid over Fraction coefficients blows up badly.
    A gcd modulo a large prime settles the common coprime case first."""
    u, v = _int_coeffs(a), _int_coeffs(b)
    if u and v:
        if max(u) == 0 or max(v) == 0:
            return LaurentPoly(a.param, {0: _ONE})
        if _coprime_mod_p(u, v):
            return LaurentPoly(a.param, {0: _ONE})
    while v:
        du, dv = max(u), max(v)
        if du < dv:
            u, v = v, u
            du, dv = dv, du
        lv = v[dv]
        # Pseudo-remainder: lv^(du-dv+1) * u mod v, content stripped each step.
        rem = dict(u)
        while rem and max(rem) >= dv:
            dr = max(rem)
            lr = rem.pop(dr)
            rem = {e: c * lv for e, c in rem.items()}
            for e, c in v.items():
                if e == dv:
                    continue
                k = e + dr - dv
                s = rem.get(k, 0) - lr * c
                if s:
                    rem[k] = s
                else:
                    rem.pop(k, None)
        if rem:
            g = math.gcd(*rem.values())
            if g > 1:
                rem = {e: c // g for e, c in rem.items()}
        u, v = v, rem
    if not u:
        return LaurentPoly(a.param, {})
    lead = u[max(u)]
    return LaurentPoly(a.param, {e: Fraction(c, lead) for e, c in u.items()})


class RationalFunction:
    """A reduced quotient of Laurent polynomials over one parameter.

    Invariant: gcd(num, den) = 1 with the denominator an ordinary polynomial
    that is monic with nonzero constant term (lowest exponent 0).  The whole
    Laurent-ness of the value lives in the numerator's exponents.
    """

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num: LaurentPoly, den: LaurentPoly, _normalized: bool = False):
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.param != den.param:
            raise ParameterMismatch(f"{num.param!r} vs {den.param!r}")
        if not _normalized:
            num, den = _reduce(num, den)
        self.num = num
        self.den = den
        self._hash = None

    @property
    def param(self) -> str:
        return self.num.param

    @staticmethod
    def const(param: str, value) -> "RationalFunction":
        return RationalFunction(
            LaurentPoly.const(param, value), LaurentPoly.const(param, 1), _normalized=True
        )

    @staticmethod
    def gen(param: str, exponent: int = 1) -> "RationalFunction":
        return RationalFunction(
            LaurentPoly.gen(param, exponent), LaurentPoly.const(param, 1), _normalized=True
        )

    @staticmethod
    def from_poly(p: LaurentPoly) -> "RationalFunction":
        return RationalFunction(p, LaurentPoly.const(p.param, 1), _normalized=True)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_one(self) -> bool:
        return self.num.is_const() and self.num.const_value() == 1 and self.den.is_const()

    def is_polynomial(self) -> bool:
        return self.den.is_const()

    def is_integral(self) -> bool:
        """True iff the value lies in Z[param, param^-1]."""
        return self.den.is_const() and self.num.has_integer_coeffs()

    def const_value(self) -> Fraction:
        return self.num.const_value() / self.den.const_value()

    def _check(self, other: "RationalFunction") -> None:
        if self.param != other.param:
            raise ParameterMismatch(f"{self.param!r} vs {other.param!r}")

    def __add__(self, other: "RationalFunction") -> "RationalFunction":
        self._check(other)
        if self.den == other.den:
            return RationalFunction(self.num + other.num, self.den)
        # Divide the denominator gcd out first; the residual fraction can
        # only share factors with that gcd, which keeps every gcd call small.
        g = _poly_gcd(self.den, other.den)
        if g.is_const():
            num = self.num * other.den + other.num * self.den
            if num.is_zero():
                return RationalFunction.const(self.param, 0)
            return RationalFunction(num, self.den * other.den, _normalized=True)
        b, _ = _poly_divmod(self.den, g)
        e, _ = _poly_divmod(other.den, g)
        num = self.num * e + other.num * b
        if num.is_zero():
            return RationalFunction.const(self.param, 0)
        num, g = _cancel_common(num, g)
        return RationalFunction(num, g * b * e, _normalized=True)

    def __neg__(self) -> "RationalFunction":
        return RationalFunction(-self.num, self.den, _normalized=True)

    def __sub__(self, other: "RationalFunction") -> "RationalFunction":
        return self + (-other)

    def __mul__(self, other: "RationalFunction") -> "RationalFunction":
        self._check(other)
        if self.num.is_zero() or other.num.is_zero():
            return RationalFunction.const(self.param, 0)
        # Cancel each numerator against the opposite denominator; both inputs
        # are reduced, so the result needs no further gcd.
        a, d2 = _cancel_common(self.num, other.den)
        b, d1 = _cancel_common(other.num, self.den)
        return RationalFunction(a * b, d1 * d2, _normalized=True)

    def __truediv__(self, other: "RationalFunction") -> "RationalFunction":
        self._check(other)
        if other.num.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RationalFunction(self.num * other.den, self.den * other.num)

    def __pow__(self, k: int) -> "RationalFunction":
        if not isinstance(k, int):
            return NotImplemented
        base = self if k >= 0 else self.inverse()
        out = RationalFunction.const(self.param, 1)
        for _ in range(abs(k)):
            out = out * base
        return out

    def inverse(self) -> "RationalFunction":
        return RationalFunction.const(self.param, 1) / self

    def evaluate(self, point) -> Fraction:
        point = Fraction(point)
        d = self.den.evaluate(point)
        if d == 0:
            raise PoleError(f"denominator vanishes at {point}")
        return self.num.evaluate(point) / d

    def _key(self):
        return (self.num._key(), self.den._key())

    def __eq__(self, other) -> bool:
        if isinstance(other, RationalFunction):
            return self._key() == other._key()
        if isinstance(other, (int, Fraction)):
            return self.den.is_const() and self.num.is_const() and self.const_value() == other
        return NotImplemented

    def __lt__(self, other) -> bool:
        return self._key() < other._key()

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self._key())
        return self._hash

    def __repr__(self) -> str:
        return f"RationalFunction({format_scalar(self)!r})"


def _cancel_common(num: LaurentPoly, den: LaurentPoly) -> tuple[LaurentPoly, LaurentPoly]:
    """Divide a shared polynomial factor out of a Laurent numerator and a
    monic ordinary-polynomial denominator."""
    if den.is_const() or num.is_zero():
        return num, den
    s = num.min_exp()
    np = num.shift(-s)
    g = _poly_gcd(np, den)
    if not g.is_const():
        np, _ = _poly_divmod(np, g)
        den, _ = _poly_divmod(den, g)
    return np.shift(s), den


def _reduce(num: LaurentPoly, den: LaurentPoly) -> tuple[LaurentPoly, LaurentPoly]:
    """Canonical form: reduced fraction, denominator monic with lowest exponent 0."""
    param = num.param
    one = LaurentPoly.const(param, 1)
    if num.is_zero():
        return num, one
    # Shift all Laurent-ness into the numerator.
    dshift = den.min_exp()
    den = den.shift(-dshift)
    num = num.shift(-dshift)
    nshift = num.min_exp()
    num_poly = num.shift(-nshift)
    if not den.is_const():
        g = _poly_gcd(num_poly, den)
        if not g.is_const():
            num_poly, _ = _poly_divmod(num_poly, g)
            den, _ = _poly_divmod(den, g)
    lc = den.leading_coeff()
    if lc != 1:
        den = den.scale(1 / lc)
        num_poly = num_poly.scale(1 / lc)
    return num_poly.shift(nshift), den


def common_denominator(values) -> LaurentPoly:
    """Monic lcm of the denominators of the given rational functions."""
    out = None
    for v in values:
        if out is None:
            out = v.den
        elif v.den != out:
            g = _poly_gcd(out, v.den)
            extra, _ = _poly_divmod(v.den, g)
            out = out * extra
    return out


def cleared_numerator(v: RationalFunction, den: LaurentPoly) -> LaurentPoly:
    """The numerator of v written over the given common denominator."""
    if v.den == den:
        return v.num
    q, _ = _poly_divmod(den, v.den)
    return v.num * q


Scalar = Union[Fraction, RationalFunction]


# ---------------------------------------------------------------------------
# Domain helper: uniform construction/coercion for a tower's scalar domain.


class ScalarDomain:
    """The scalar field of one tower: Q when param is None, else Q(param)."""

    def __init__(self, param: str | None):
        self.param = param
        if param is None:
            self.zero: Scalar = _ZERO
            self.one: Scalar = _ONE
        else:
            self.zero = RationalFunction.const(param, 0)
            self.one = RationalFunction.const(param, 1)

    def __call__(self, value) -> Scalar:
        """Coerce an int / Fraction / LaurentPoly / RationalFunction into the field."""
        if self.param is None:
            if isinstance(value, (int, Fraction)):
                return Fraction(value)
            raise ParameterMismatch(f"parameter-free domain got {value!r}")
        if isinstance(value, RationalFunction):
            if value.param != self.param:
                raise ParameterMismatch(f"{value.param!r} vs {self.param!r}")
            return value
        if isinstance(value, LaurentPoly):
            if value.param != self.param:
                raise ParameterMismatch(f"{value.param!r} vs {self.param!r}")
            return RationalFunction.from_poly(value)
        return RationalFunction.const(self.param, value)

    def gen(self, exponent: int = 1) -> Scalar:
        if self.param is None:
            raise ValueError("parameter-free domain has no generator")
        return RationalFunction.gen(self.param, exponent)

    def is_zero(self, s: Scalar) -> bool:
        return s.is_zero() if isinstance(s, RationalFunction) else s == 0

    def __repr__(self) -> str:
        return f"ScalarDomain({self.param!r})"


def is_integral(s: Scalar, ring: str = "laurent") -> bool:
    """Membership of a field scalar in its base domain.

    ring="laurent": Z[param, param^-1] (denominator a unit up to sign/monomial).
    ring="poly":    Z[param] (additionally no negative exponents).
    ring="int":     Z.
    """
    if isinstance(s, Fraction):
        return s.denominator == 1
    if not (s.den.is_const() and s.num.has_integer_coeffs()):
        return False
    if ring == "poly":
        return s.num.is_zero() or s.num.min_exp() >= 0
    if ring == "int":
        return s.num.is_const()
    return True


def common_content_is_unit(values, ring: str = "laurent") -> bool:
    """True iff no non-unit of the base ring divides every given scalar.

    Used to prefer primitive basis vectors: a common factor like the loop
    parameter or an integer would otherwise reappear inverted in expansion
    coefficients.  Values that are not integral for the ring make the notion
    moot and return True.
    """
    values = [v for v in values if not (isinstance(v, Fraction) and v == 0)]
    values = [
        v for v in values if not (isinstance(v, RationalFunction) and v.is_zero())
    ]
    if not values:
        return True
    if ring == "int":
        g = 0
        for v in values:
            if not isinstance(v, Fraction) or v.denominator != 1:
                return True
            g = math.gcd(g, abs(v.numerator))
        return g <= 1
    polys = []
    for v in values:
        if not isinstance(v, RationalFunction) or not v.den.is_const():
            return True
        polys.append(v.num.scale(1 / v.den.const_value()))
    if ring == "poly" and min(p.min_exp() for p in polys) > 0:
        return False
    if all(p.has_integer_coeffs() for p in polys):
        g = 0
        for p in polys:
            for c in p.coeffs.values():
                g = math.gcd(g, abs(c.numerator))
        if g > 1:
            return False
    acc = None
    for p in polys:
        shifted = p.shift(-p.min_exp())
        acc = shifted if acc is None else _poly_gcd(acc, shifted)
        if acc.is_const():
            return True
    return acc.is_const()


def evaluate_at(s: Scalar, point) -> Fraction:
    """Exact evaluation of a scalar at a rational parameter value."""
    if isinstance(s, Fraction):
        return s
    return s.evaluate(point)


# ---------------------------------------------------------------------------
# Textual format (CLI / JSON I/O).


def format_scalar(s: Scalar) -> str:
    if isinstance(s, (Fraction, int)):
        return str(s)
    if s.den.is_const():
        return format_laurent(s.num)
    return f"({format_laurent(s.num)})/({format_laurent(s.den)})"


def parse_scalar(text: str, param: str | None = None) -> Scalar:
    """Parse the textual scalar format: integers, a/b, polynomials, (num)/(den)."""
    text = text.strip()
    if param is None:
        return Fraction(text)
    if text.startswith("(") :
        # (num)/(den)
        depth, split = 0, None
        for i, ch in enumerate(text):
            if ch == "(":
                depth += 1
            elif ch == ")":
                depth -= 1
            elif ch == "/" and depth == 0:
                split = i
                break
        if split is not None:
            num = _parse_poly(text[:split].strip()[1:-1], param)
            den = _parse_poly(text[split + 1 :].strip()[1:-1], param)
            return RationalFunction(num, den)
        return RationalFunction.from_poly(_parse_poly(text[1:-1], param))
    if "/" in text and param not in text:
        return RationalFunction.const(param, Fraction(text))
    return RationalFunction.from_poly(_parse_poly(text, param))


def _parse_poly(text: str, param: str) -> LaurentPoly:
    # Split into signed terms; a "-" directly after "^" is an exponent sign.
    text = re.sub(r"(?<!\^)-", "+-", text.replace(" ", ""))
    if text.startswith("+"):
        text = text[1:]
    coeffs: dict[int, Fraction] = {}
    for raw in text.split("+"):
        term = raw.strip()
        if not term:
            continue
        neg = term.startswith("-")
        if neg:
            term = term[1:].strip()
        if param in term:
            if "*" in term:
                cpart, vpart = term.split("*")
                coeff = Fraction(cpart.strip())
            else:
                vpart = term
                coeff = _ONE
            vpart = vpart.strip()
            if "^" in vpart:
                exp = int(vpart.split("^")[1])
            else:
                exp = 1
        else:
            coeff = Fraction(term)
            exp = 0
        if neg:
            coeff = -coeff
        coeffs[exp] = coeffs.get(exp, _ZERO) + coeff
    return LaurentPoly(param, coeffs)

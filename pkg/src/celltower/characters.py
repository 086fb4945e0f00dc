"""Symmetric-group character oracle, independent of the tower machinery.

Characters come from the Murnaghan-Nakayama recursion on beta-sets; on top of
them sit class sizes, character tables with orthogonality checks, Kronecker
coefficients, Littlewood-Richardson coefficients, Kostka numbers, and the
stable (padded-partition) Kronecker coefficients.  Nothing here touches
algebras, diagrams, or path bases, so these numbers can cross-check the
engine's multiplicity computations.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import factorial

from .combinat import Partition, hook_length_count, partitions_of, size


def _beta_set(lam: Partition, m: int) -> tuple[int, ...]:
    """First-column hook lengths with m rows (m >= len(lam))."""
    padded = tuple(lam) + (0,) * (m - len(lam))
    return tuple(padded[i] + (m - 1 - i) for i in range(m))


def _partition_from_beta(beta: tuple[int, ...]) -> Partition:
    b = sorted(beta, reverse=True)
    m = len(b)
    parts = [b[i] - (m - 1 - i) for i in range(m)]
    return tuple(p for p in parts if p > 0)


@lru_cache(maxsize=None)
def character(lam: Partition, rho: Partition) -> int:
    """chi^lam evaluated on the class of cycle type rho (Murnaghan-Nakayama)."""
    if size(lam) != size(rho):
        raise ValueError("partition sizes differ")
    if not rho:
        return 1
    strip = rho[0]
    rest = tuple(rho[1:])
    m = max(len(lam), 1)
    beta = set(_beta_set(lam, m))
    total = 0
    for b in sorted(beta):
        low = b - strip
        if low < 0 or low in beta:
            continue
        height = sum(1 for x in beta if low < x < b)
        new_beta = tuple(sorted(beta - {b} | {low}))
        mu = _partition_from_beta(new_beta)
        total += (-1) ** height * character(mu, rest)
    return total


@lru_cache(maxsize=None)
def class_size(rho: Partition) -> int:
    """Size of the conjugacy class of cycle type rho in S_{|rho|}."""
    n = size(rho)
    z = 1
    mult: dict[int, int] = {}
    for part in rho:
        mult[part] = mult.get(part, 0) + 1
    for k, m in mult.items():
        z *= k**m * factorial(m)
    return factorial(n) // z


class CharacterTable:
    """The full character table of one symmetric group, with self-checks."""

    def __init__(self, n: int):
        self.n = n
        self.shapes = partitions_of(n)
        self.classes = partitions_of(n)
        self.values = {
            (lam, rho): character(lam, rho)
            for lam in self.shapes
            for rho in self.classes
        }

    def dimension(self, lam: Partition) -> int:
        return self.values[(lam, (1,) * self.n if self.n else ())]

    def dimensions_match_hooks(self) -> bool:
        return all(
            self.dimension(lam) == hook_length_count(lam) for lam in self.shapes
        )

    def dimension_square_sum_ok(self) -> bool:
        return sum(self.dimension(lam) ** 2 for lam in self.shapes) == factorial(self.n)

    def row_orthogonality(self) -> bool:
        order = factorial(self.n)
        for a in self.shapes:
            for b in self.shapes:
                inner = sum(
                    class_size(rho) * self.values[(a, rho)] * self.values[(b, rho)]
                    for rho in self.classes
                )
                if inner != (order if a == b else 0):
                    return False
        return True

    def column_orthogonality(self) -> bool:
        order = factorial(self.n)
        for rho in self.classes:
            for tau in self.classes:
                inner = sum(
                    self.values[(lam, rho)] * self.values[(lam, tau)]
                    for lam in self.shapes
                )
                want = order // class_size(rho) if rho == tau else 0
                if inner != want:
                    return False
        return True


def _as_integer(x: Fraction, what: str) -> int:
    if x.denominator != 1:
        raise ValueError(f"{what} came out non-integral: {x}")
    return int(x)


def kronecker_coefficient(lam: Partition, mu: Partition, nu: Partition) -> int:
    """g(lam, mu, nu) = <chi^lam chi^mu, chi^nu> over S_n."""
    n = size(lam)
    if size(mu) != n or size(nu) != n:
        raise ValueError("Kronecker needs three partitions of the same size")
    acc = Fraction(0)
    for rho in partitions_of(n):
        acc += Fraction(
            class_size(rho)
            * character(lam, rho)
            * character(mu, rho)
            * character(nu, rho)
        )
    return _as_integer(acc / factorial(n), "Kronecker coefficient")


def _merge(alpha: Partition, beta: Partition) -> Partition:
    return tuple(sorted(alpha + beta, reverse=True))


def littlewood_richardson(lam: Partition, mu: Partition, nu: Partition) -> int:
    """c^nu_{lam,mu} = <Res chi^nu, chi^lam x chi^mu> over S_{|lam|} x S_{|mu|}."""
    s, t = size(lam), size(mu)
    if size(nu) != s + t:
        return 0
    acc = Fraction(0)
    for alpha in partitions_of(s):
        for beta in partitions_of(t):
            acc += Fraction(
                class_size(alpha)
                * class_size(beta)
                * character(nu, _merge(alpha, beta))
                * character(lam, alpha)
                * character(mu, beta)
            )
    return _as_integer(
        acc / (factorial(s) * factorial(t)), "Littlewood-Richardson coefficient"
    )


def kostka_number(lam: Partition, mu: Partition) -> int:
    """K_{lam,mu} = <Res chi^lam, trivial> over the Young subgroup S_mu."""
    n = size(lam)
    if size(mu) != n:
        return 0
    acc = Fraction(0)
    for combo in product(*(partitions_of(part) for part in mu)):
        merged: Partition = ()
        weight = 1
        for rho in combo:
            merged = _merge(merged, rho)
            weight *= class_size(rho)
        acc += Fraction(weight * character(lam, merged))
    order = 1
    for part in mu:
        order *= factorial(part)
    return _as_integer(acc / order, "Kostka number")


def pad_partition(lam: Partition, n: int) -> Partition:
    """lam[n] = (n - |lam|, lam), defined when n - |lam| >= lam_1."""
    head = n - size(lam)
    if lam and head < lam[0]:
        raise ValueError(f"{n} too small to pad {lam}")
    return ((head,) + tuple(lam)) if head else tuple(lam)


def stable_kronecker_oracle(lam: Partition, mu: Partition, nu: Partition) -> int:
    """The stable Kronecker coefficient of the reduced partitions.

    Computed at padding sizes n = 2r and n = 2r + 1 with r = |lam| + |mu|;
    the two values must agree (stability), growing n if the padding is not
    yet defined or not yet stationary."""
    r = size(lam) + size(mu)
    n0 = 2 * r
    for p in (lam, mu, nu):
        if p:
            n0 = max(n0, size(p) + p[0])
    while True:
        a = kronecker_coefficient(
            pad_partition(lam, n0), pad_partition(mu, n0), pad_partition(nu, n0)
        )
        b = kronecker_coefficient(
            pad_partition(lam, n0 + 1),
            pad_partition(mu, n0 + 1),
            pad_partition(nu, n0 + 1),
        )
        if a == b:
            return a
        if n0 > 3 * (r + size(nu)) + 6:
            raise ValueError(f"Kronecker not stable by padding {n0}: {a} vs {b}")
        n0 += 1


def lr_and_kostka(lam: Partition, mu: Partition, nu: Partition) -> tuple[int, int]:
    """(Littlewood-Richardson coefficient c^nu_{lam,mu}, skew Kostka number
    K_{nu/lam, mu}), the latter through the LR expansion of the skew shape."""
    c = littlewood_richardson(lam, mu, nu)
    k = 0
    t = size(nu) - size(lam)
    if t == size(mu) and t >= 0:
        for kappa in partitions_of(t):
            c_k = littlewood_richardson(lam, kappa, nu)
            if c_k:
                k += c_k * kostka_number(kappa, mu)
    return c, k

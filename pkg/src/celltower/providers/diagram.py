"""Diagram algebra levels: Temperley-Lieb, Brauer, and partition algebras.

A diagram on k strands is a set partition of the 2k points {top 0..k-1,
bottom k..2k-1}, stored canonically as a sorted tuple of sorted tuples.
Temperley-Lieb and Brauer diagrams are perfect matchings (Temperley-Lieb
additionally non-crossing); the partition algebra allows arbitrary blocks.
Multiplication is stack-and-trace: identify the bottom of the left factor
with the top of the right factor, read off the induced partition on the
outer points, and multiply by the loop parameter once per removed
middle-only component.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations

from ..elements import AlgebraLevel
from ..linalg import Vec
from ..scalars import ScalarDomain

Diagram = tuple[tuple[int, ...], ...]


def canonical(blocks) -> Diagram:
    return tuple(sorted(tuple(sorted(b)) for b in blocks))


def identity_diagram(k: int) -> Diagram:
    return canonical([(i, i + k) for i in range(k)])


def mirror(d: Diagram, k: int) -> Diagram:
    """Top-bottom reflection (the involution)."""
    swap = lambda p: p + k if p < k else p - k
    return canonical([tuple(swap(p) for p in b) for b in d])


def flip_lr(d: Diagram, k: int) -> Diagram:
    """Left-right reflection: strand i -> k+1-i on both rows."""
    f = lambda p: (k - 1 - p) if p < k else (3 * k - 1 - p)
    return canonical([tuple(f(p) for p in b) for b in d])


def add_strands_left(d: Diagram, k: int, s: int) -> Diagram:
    """Embed a diagram on k strands into k+s strands as identity on the s left ones."""
    blocks = [tuple((p + s) if p < k else (p + 2 * s) for p in b) for b in d]
    blocks += [(i, i + k + s) for i in range(s)]
    return canonical(blocks)


def add_strand_right(d: Diagram, k: int) -> Diagram:
    """Embed a diagram on k strands into k+1 strands, new through strand on the right."""
    blocks = [tuple(p if p < k else p + 1 for p in b) for b in d]
    blocks.append((k, 2 * k + 1))
    return canonical(blocks)


def compose(d1: Diagram, d2: Diagram, k: int) -> tuple[Diagram, int]:
    """d1 stacked over d2; returns (result, number of removed middle components).

    Nodes: 0..k-1 top of d1, k..2k-1 middle, 2k..3k-1 bottom of d2.
    """
    parent = list(range(3 * k))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x: int, y: int) -> None:
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[rx] = ry

    for block in d1:
        first = block[0]
        for p in block[1:]:
            union(first, p)
    for block in d2:
        first = block[0] + k
        for p in block[1:]:
            union(first, p + k)
    classes: dict[int, list[int]] = {}
    for x in range(3 * k):
        classes.setdefault(find(x), []).append(x)
    blocks = []
    removed = 0
    for members in classes.values():
        outer = [p if p < k else p - k for p in members if p < k or p >= 2 * k]
        if outer:
            blocks.append(tuple(sorted(outer)))
        elif all(k <= p < 2 * k for p in members):
            removed += 1
    return canonical(blocks), removed


def through_count(d: Diagram, k: int) -> int:
    """Number of blocks meeting both the top and the bottom row."""
    return sum(
        1 for b in d if any(p < k for p in b) and any(p >= k for p in b)
    )


def all_matchings(points: list[int]) -> list[list[tuple[int, int]]]:
    if not points:
        return [[]]
    first, rest = points[0], points[1:]
    out = []
    for i, p in enumerate(rest):
        for sub in all_matchings(rest[:i] + rest[i + 1 :]):
            out.append([(first, p)] + sub)
    return out


def is_noncrossing(d: Diagram, k: int) -> bool:
    """Planarity in the circular order t1..tk, b_k..b_1."""
    pos = lambda p: p if p < k else 3 * k - 1 - p
    pairs = [tuple(sorted(pos(x) for x in b)) for b in d]
    for (a1, b1), (a2, b2) in combinations(pairs, 2):
        if a1 < a2 < b1 < b2 or a2 < a1 < b2 < b1:
            return False
    return True


def all_set_partitions(points: list[int]) -> list[Diagram]:
    if not points:
        return [()]
    first, rest = points[0], points[1:]
    out = []
    for sub in all_set_partitions(rest):
        out.append(canonical(list(sub) + [(first,)]))
        for i in range(len(sub)):
            blocks = list(sub)
            blocks[i] = tuple(sorted(blocks[i] + (first,)))
            out.append(canonical(blocks))
    return sorted(set(out))


@lru_cache(maxsize=None)
def matching_diagrams(k: int, planar: bool) -> tuple[Diagram, ...]:
    diagrams = [canonical(m) for m in all_matchings(list(range(2 * k)))]
    if planar:
        diagrams = [d for d in diagrams if is_noncrossing(d, k)]
    return tuple(sorted(diagrams))


@lru_cache(maxsize=None)
def partition_diagrams(k: int, constrained: bool) -> tuple[Diagram, ...]:
    """Set-partition diagrams on k strands; constrained = last strand's top and
    bottom forced into one block (the half-integer levels)."""
    diagrams = all_set_partitions(list(range(2 * k)))
    if constrained:
        diagrams = [
            d
            for d in diagrams
            if any(k - 1 in b and 2 * k - 1 in b for b in d)
        ]
    return tuple(sorted(diagrams))


class DiagramLevel(AlgebraLevel):
    """Shared machinery for the three diagram towers.

    `strands` is the number of physical strands; `internal_level` the tower
    level (for the partition tower these differ: internal level m uses
    ceil(m/2) strands).
    """

    def __init__(self, tower: str, level: int, strands: int, domain: ScalarDomain):
        super().__init__(tower, level, domain)
        self.strands = strands
        if domain.param is None:
            self.loop = None  # set by subclass to a Fraction
        else:
            self.loop = domain.gen()

    def identity_basis(self):
        return identity_diagram(self.strands)

    def _pair_product(self, a, b) -> Vec:
        result, removed = compose(a, b, self.strands)
        c = self.domain.one
        for _ in range(removed):
            c = c * self.loop
        return {result: c}

    def _involve_basis(self, a) -> Vec:
        return {mirror(a, self.strands): self.domain.one}

    def flip_basis(self, a):
        return flip_lr(a, self.strands)

    # diagram builders -----------------------------------------------------

    def s(self, i: int) -> Diagram:
        """Transposition diagram swapping strands i, i+1 (1-based)."""
        k = self.strands
        blocks = [(j, j + k) for j in range(k) if j not in (i - 1, i)]
        blocks += [(i - 1, i + k), (i, i - 1 + k)]
        return canonical(blocks)

    def e(self, i: int) -> Diagram:
        """Cup-cap diagram on strands i, i+1 (1-based)."""
        k = self.strands
        blocks = [(j, j + k) for j in range(k) if j not in (i - 1, i)]
        blocks += [(i - 1, i), (i - 1 + k, i + k)]
        return canonical(blocks)

    def p(self, i: int) -> Diagram:
        """Strand-cutting diagram: singletons at i and i' (partition algebra)."""
        k = self.strands
        blocks = [(j, j + k) for j in range(k) if j != i - 1]
        blocks += [(i - 1,), (i - 1 + k,)]
        return canonical(blocks)

    def b(self, i: int) -> Diagram:
        """Block-merging diagram joining strands i, i+1 (partition algebra)."""
        k = self.strands
        blocks = [(j, j + k) for j in range(k) if j not in (i - 1, i)]
        blocks += [(i - 1, i, i - 1 + k, i + k)]
        return canonical(blocks)


class TemperleyLiebLevel(DiagramLevel):
    def __init__(self, level: int, domain: ScalarDomain):
        super().__init__("tl", level, level, domain)
        self._basis = matching_diagrams(level, planar=True)

    def basis(self):
        return self._basis

    def include_basis(self, a):
        return add_strand_right(a, self.strands - 1)

    def generator_diagrams(self) -> list[Diagram]:
        return [self.e(i) for i in range(1, self.strands)]


class BrauerLevel(DiagramLevel):
    def __init__(self, level: int, domain: ScalarDomain):
        super().__init__("brauer", level, level, domain)
        self._basis = matching_diagrams(level, planar=False)

    def basis(self):
        return self._basis

    def include_basis(self, a):
        return add_strand_right(a, self.strands - 1)

    def generator_diagrams(self) -> list[Diagram]:
        return [self.s(i) for i in range(1, self.strands)] + [
            self.e(i) for i in range(1, self.strands)
        ]


class PartitionLevel(DiagramLevel):
    """Internal level m of the partition tower: P_{m/2}(n) with integer parameter n.

    Even m = 2l: all set-partition diagrams on l strands.  Odd m = 2l+1:
    diagrams on l+1 strands whose last strand has top and bottom in one block.
    """

    def __init__(self, level: int, n: int, domain: ScalarDomain):
        strands = (level + 1) // 2
        super().__init__("partition", level, strands, domain)
        self.n = n
        self.loop = domain(n)
        self.constrained = level % 2 == 1
        self._basis = partition_diagrams(strands, self.constrained) if strands else ((),)

    def basis(self):
        return self._basis

    def identity_basis(self):
        return identity_diagram(self.strands)

    def include_basis(self, a):
        if self.level % 2 == 1:
            # even 2l -> odd 2l+1: add the constrained through strand.
            return add_strand_right(a, self.strands - 1)
        # odd 2l+1 -> even 2l+2: same diagram, constraint dropped.
        return a

    def generator_diagrams(self) -> list[Diagram]:
        k = self.strands
        if k == 0:
            return []
        top = k - 1 if self.constrained else k
        gens = [self.s(i) for i in range(1, top)]
        gens += [self.p(i) for i in range(1, top + 1)]
        gens += [self.b(i) for i in range(1, k)]
        return gens

"""Partitions, branching graphs, path tableaux, and the two path orders.

A partition is a plain tuple of weakly decreasing positive integers.  A
branching graph is a graded directed graph whose level-k vertices label the
cells of the level-k algebra; a path in it is simultaneously a (skew)
standard tableau and a basis label.  Paths carry two partial orders:
componentwise dominance of the shapes at every level, and the coarser
reverse-lexicographic order that compares at the last differing level.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import factorial
from typing import Callable, Iterable, Optional

Partition = tuple[int, ...]

EMPTY: Partition = ()


def check_partition(parts: Iterable[int]) -> Partition:
    p = tuple(parts)
    if any(a < b for a, b in zip(p, p[1:])) or any(x <= 0 for x in p):
        raise ValueError(f"not a partition: {p}")
    return p


def size(p: Partition) -> int:
    return sum(p)


@lru_cache(maxsize=None)
def partitions_of(n: int) -> tuple[Partition, ...]:
    """All partitions of n, in descending lexicographic (dominance-compatible) order."""
    if n < 0:
        raise ValueError("negative size")
    out: list[Partition] = []

    def rec(remaining: int, cap: int, prefix: tuple[int, ...]) -> None:
        if remaining == 0:
            out.append(prefix)
            return
        for part in range(min(cap, remaining), 0, -1):
            rec(remaining - part, part, prefix + (part,))

    rec(n, n, ())
    return tuple(out)


def dominates(a: Partition, b: Partition) -> bool:
    """a >= b in dominance order (same size assumed by the caller)."""
    sa = sb = 0
    for i in range(max(len(a), len(b))):
        sa += a[i] if i < len(a) else 0
        sb += b[i] if i < len(b) else 0
        if sa < sb:
            return False
    return True


def add_box_positions(p: Partition) -> list[tuple[int, int]]:
    """Row/column coordinates (0-based) where a box may be added."""
    out = []
    for i in range(len(p) + 1):
        row = p[i] if i < len(p) else 0
        above = p[i - 1] if i > 0 else None
        if above is None or row < above:
            out.append((i, row))
    return out


def remove_box_positions(p: Partition) -> list[tuple[int, int]]:
    out = []
    for i, row in enumerate(p):
        below = p[i + 1] if i + 1 < len(p) else 0
        if row > below:
            out.append((i, row - 1))
    return out


def with_box(p: Partition, pos: tuple[int, int]) -> Partition:
    i, _ = pos
    rows = list(p) + [0]
    rows[i] += 1
    return tuple(x for x in rows if x)


def without_box(p: Partition, pos: tuple[int, int]) -> Partition:
    i, _ = pos
    rows = list(p)
    rows[i] -= 1
    return tuple(x for x in rows if x)


def added_box(small: Partition, big: Partition) -> tuple[int, int]:
    """The (row, col) 0-based coordinates of the single box big \\ small."""
    for pos in add_box_positions(small):
        if with_box(small, pos) == big:
            return pos
    raise ValueError(f"{big} is not {small} plus one box")


def content(small: Partition, big: Partition) -> int:
    """Content col - row of the box added when growing small into big (1-based)."""
    i, j = added_box(small, big)
    return j - i


def hook_length_count(p: Partition) -> int:
    """Number of standard Young tableaux of shape p, by the hook length formula."""
    n = size(p)
    if n == 0:
        return 1
    conj = conjugate(p)
    prod = 1
    for i, row in enumerate(p):
        for j in range(row):
            prod *= (row - j) + (conj[j] - i) - 1
    return factorial(n) // prod


def conjugate(p: Partition) -> Partition:
    if not p:
        return ()
    return tuple(sum(1 for row in p if row > j) for j in range(p[0]))


# ---------------------------------------------------------------------------
# Branching graphs.

Comparison = Optional[str]  # ">", "<", "=", or None for incomparable


@dataclass(frozen=True)
class BranchingGraph:
    """A graded branching graph with a strict partial order on each level.

    levels[k] is the sorted tuple of labels at level k; adjacency maps a
    (level, label) pair to the sorted tuple of its targets at level+1.
    Level 0 is always the singleton {()}.
    """

    levels: tuple[tuple[Partition, ...], ...]
    adjacency: dict[tuple[int, Partition], tuple[Partition, ...]]
    level_cmp: Callable[[int, Partition, Partition], Comparison]
    name: str = "graph"

    def __post_init__(self):
        if self.levels[0] != (EMPTY,):
            raise ValueError("level 0 must be the singleton empty label")
        object.__setattr__(self, "_dominance_cache", {})

    @property
    def depth(self) -> int:
        return len(self.levels) - 1

    def targets(self, level: int, label: Partition) -> tuple[Partition, ...]:
        return self.adjacency.get((level, label), ())

    def sources(self, level: int, label: Partition) -> tuple[Partition, ...]:
        """In-edges: labels at level-1 with an edge to this label."""
        return tuple(
            src
            for src in self.levels[level - 1]
            if label in self.adjacency.get((level - 1, src), ())
        )

    def has_edge(self, level: int, src: Partition, tgt: Partition) -> bool:
        return tgt in self.adjacency.get((level, src), ())

    def cmp(self, level: int, a: Partition, b: Partition) -> Comparison:
        return self.level_cmp(level, a, b)

    def dominance_sorted(self, level: int) -> tuple[Partition, ...]:
        """Labels at a level, most dominant first (linear extension of the order)."""
        cached = self._dominance_cache.get(level)
        if cached is not None:
            return cached
        labels = list(self.levels[level])
        out: list[Partition] = []
        remaining = set(labels)
        while remaining:
            # Pick label with no strictly greater label remaining; break ties by sort key.
            candidates = [
                a
                for a in remaining
                if not any(
                    self.cmp(level, b, a) == ">" for b in remaining if b != a
                )
            ]
            pick = min(candidates)
            out.append(pick)
            remaining.remove(pick)
        result = tuple(out)
        self._dominance_cache[level] = result
        return result


def _same_size_dominance(a: Partition, b: Partition) -> Comparison:
    if a == b:
        return "="
    da, db = dominates(a, b), dominates(b, a)
    if da and not db:
        return ">"
    if db and not da:
        return "<"
    return None


def young_dominance_cmp(level: int, a: Partition, b: Partition) -> Comparison:
    return _same_size_dominance(a, b)


def through_strand_cmp(level: int, a: Partition, b: Partition) -> Comparison:
    """Cell order for towers whose products reduce propagating strands.

    Labels with fewer boxes (fewer through strands) sit in smaller two-sided
    ideals, hence are greater in the cell order; equal sizes compare by
    ordinary dominance.
    """
    if a == b:
        return "="
    if size(a) < size(b):
        return ">"
    if size(a) > size(b):
        return "<"
    return _same_size_dominance(a, b)


def young_graph(r: int) -> BranchingGraph:
    levels = tuple(partitions_of(k) for k in range(r + 1))
    adjacency = {}
    for k in range(r):
        for lam in levels[k]:
            adjacency[(k, lam)] = tuple(
                sorted(with_box(lam, pos) for pos in add_box_positions(lam))
            )
    return BranchingGraph(levels, adjacency, young_dominance_cmp, name="young")


def young_graph_max_columns(r: int, max_cols: int) -> BranchingGraph:
    """Young graph restricted to partitions with at most max_cols columns."""
    ok = lambda p: not p or p[0] <= max_cols
    levels = tuple(
        tuple(p for p in partitions_of(k) if ok(p)) for k in range(r + 1)
    )
    adjacency = {}
    for k in range(r):
        for lam in levels[k]:
            adjacency[(k, lam)] = tuple(
                sorted(
                    mu
                    for pos in add_box_positions(lam)
                    if ok(mu := with_box(lam, pos))
                )
            )
    return BranchingGraph(levels, adjacency, young_dominance_cmp, name="young2col")


def brauer_graph(r: int) -> BranchingGraph:
    levels = []
    for k in range(r + 1):
        labels = []
        for m in range(k, -1, -2):
            labels.extend(partitions_of(m))
        levels.append(tuple(sorted(labels)))
    adjacency = {}
    for k in range(r):
        nxt = set(levels[k + 1])
        for lam in levels[k]:
            tgts = {with_box(lam, pos) for pos in add_box_positions(lam)}
            tgts |= {without_box(lam, pos) for pos in remove_box_positions(lam)}
            adjacency[(k, lam)] = tuple(sorted(t for t in tgts if t in nxt))
    return BranchingGraph(tuple(levels), adjacency, through_strand_cmp, name="brauer")


def partition_graph(internal_levels: int) -> BranchingGraph:
    """Branching graph of the partition-algebra tower at half-integer steps.

    Internal level 2l is the whole level l; internal level 2l+1 the half level.
    Vertices at internal level m are partitions of size <= floor(m/2); an
    integer-to-half edge keeps the label or removes a box, a half-to-integer
    edge keeps the label or adds a box.
    """
    levels = []
    for m in range(internal_levels + 1):
        cap = m // 2
        labels = [p for s in range(cap + 1) for p in partitions_of(s)]
        levels.append(tuple(sorted(labels)))
    adjacency = {}
    for m in range(internal_levels):
        nxt = set(levels[m + 1])
        for lam in levels[m]:
            if m % 2 == 0:
                tgts = {lam} | {without_box(lam, p) for p in remove_box_positions(lam)}
            else:
                tgts = {lam} | {with_box(lam, p) for p in add_box_positions(lam)}
            adjacency[(m, lam)] = tuple(sorted(t for t in tgts if t in nxt))
    return BranchingGraph(tuple(levels), adjacency, through_strand_cmp, name="partition")


# ---------------------------------------------------------------------------
# Paths.


@dataclass(frozen=True, order=True)
class PathTableau:
    """A directed path in a branching graph; steps[i] is the label at level start+i."""

    start_level: int
    steps: tuple[Partition, ...]

    def __post_init__(self):
        if not self.steps:
            raise ValueError("empty path")

    @property
    def end_level(self) -> int:
        return self.start_level + len(self.steps) - 1

    @property
    def shape(self) -> Partition:
        return self.steps[-1]

    def label(self, level: int) -> Partition:
        return self.steps[level - self.start_level]

    def truncate(self, level: int) -> "PathTableau":
        """The initial segment ending at the given level."""
        return PathTableau(self.start_level, self.steps[: level - self.start_level + 1])

    def tail(self, level: int) -> "PathTableau":
        """The final segment starting at the given level."""
        return PathTableau(level, self.steps[level - self.start_level :])

    def compose(self, other: "PathTableau") -> "PathTableau":
        if other.start_level != self.end_level or other.steps[0] != self.shape:
            raise ValueError("paths do not concatenate")
        return PathTableau(self.start_level, self.steps + other.steps[1:])

    def edges(self) -> list[tuple[int, Partition, Partition]]:
        """(level-of-source, source, target) for each step."""
        return [
            (self.start_level + i, self.steps[i], self.steps[i + 1])
            for i in range(len(self.steps) - 1)
        ]

    def __str__(self) -> str:
        return "->".join("(" + ",".join(map(str, s)) + ")" for s in self.steps)


@dataclass(frozen=True)
class SkewShape:
    inner: Partition
    outer: Partition
    s: int
    r: int

    def __post_init__(self):
        if self.s > self.r:
            raise ValueError("inner level above outer level")


def enumerate_paths(g: BranchingGraph, shape: SkewShape) -> list[PathTableau]:
    """All paths from (s, inner) to (r, outer), in a deterministic order.

    The order is lexicographic on the label sequence using each level's
    dominance-sorted position (most dominant label first), so dominance-greater
    paths tend to come first.
    """
    if shape.inner not in g.levels[shape.s]:
        raise ValueError(f"{shape.inner} not at level {shape.s}")
    if shape.outer not in g.levels[shape.r]:
        raise ValueError(f"{shape.outer} not at level {shape.r}")
    out: list[PathTableau] = []

    def rec(level: int, prefix: tuple[Partition, ...]) -> None:
        if level == shape.r:
            if prefix[-1] == shape.outer:
                out.append(PathTableau(shape.s, prefix))
            return
        for tgt in g.targets(level, prefix[-1]):
            rec(level + 1, prefix + (tgt,))

    rec(shape.s, (shape.inner,))
    ranks = {
        k: {lab: i for i, lab in enumerate(g.dominance_sorted(k))}
        for k in range(shape.s, shape.r + 1)
    }
    out.sort(
        key=lambda t: tuple(
            ranks[shape.s + i][lab] for i, lab in enumerate(t.steps)
        )
    )
    return out


def standard_paths(g: BranchingGraph, shape: Partition, level: int) -> list[PathTableau]:
    return enumerate_paths(g, SkewShape(EMPTY, shape, 0, level))


def dominance_cmp(g: BranchingGraph, a: PathTableau, b: PathTableau) -> Comparison:
    """Componentwise dominance of the two label sequences."""
    if a.start_level != b.start_level or len(a.steps) != len(b.steps):
        raise ValueError("paths of different span")
    if a == b:
        return "="
    ge = le = True
    for i, (x, y) in enumerate(zip(a.steps, b.steps)):
        c = g.cmp(a.start_level + i, x, y)
        if c == "=":
            continue
        if c == ">":
            le = False
        elif c == "<":
            ge = False
        else:
            return None
        if not ge and not le:
            return None
    if ge and not le:
        return ">"
    if le and not ge:
        return "<"
    return None


def revlex_cmp(g: BranchingGraph, a: PathTableau, b: PathTableau) -> Comparison:
    """Compare at the last level where the paths differ."""
    if a.start_level != b.start_level or len(a.steps) != len(b.steps):
        raise ValueError("paths of different span")
    for i in range(len(a.steps) - 1, -1, -1):
        if a.steps[i] != b.steps[i]:
            return g.cmp(a.start_level + i, a.steps[i], b.steps[i])
    return "="


def maximal_path(g: BranchingGraph, shape: Partition, level: int) -> PathTableau:
    """A dominance-maximal standard path to the shape, with deterministic tie-break.

    Among dominance-maximal paths, prefer revlex-greater ones, then the
    lexicographically smallest label sequence.
    """
    paths = standard_paths(g, shape, level)
    if not paths:
        raise ValueError(f"no standard paths to {shape} at level {level}")
    maximal = [
        t
        for t in paths
        if not any(dominance_cmp(g, s, t) == ">" for s in paths if s != t)
    ]
    best = [
        t
        for t in maximal
        if not any(revlex_cmp(g, s, t) == ">" for s in maximal if s != t)
    ]
    return min(best, key=lambda t: t.steps)

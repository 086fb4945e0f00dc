"""Permutation words: one-line tuples with reduced-word and length utilities."""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations as iter_permutations

Perm = tuple[int, ...]  # one-line notation: p[i] = image of i+1


def identity(r: int) -> Perm:
    return tuple(range(1, r + 1))


def compose(a: Perm, b: Perm) -> Perm:
    """(a b)(i) = a(b(i))."""
    return tuple(a[b[i] - 1] for i in range(len(a)))


def inverse(a: Perm) -> Perm:
    out = [0] * len(a)
    for i, v in enumerate(a):
        out[v - 1] = i + 1
    return tuple(out)


def transposition(r: int, i: int, j: int) -> Perm:
    out = list(range(1, r + 1))
    out[i - 1], out[j - 1] = j, i
    return tuple(out)


def simple(r: int, i: int) -> Perm:
    return transposition(r, i, i + 1)


def length(a: Perm) -> int:
    """Coxeter length = number of inversions."""
    n = len(a)
    return sum(1 for i in range(n) for j in range(i + 1, n) if a[i] > a[j])


def right_descent(a: Perm, i: int) -> bool:
    """True iff multiplying by s_i on the right decreases length: a(i) > a(i+1)."""
    return a[i - 1] > a[i]


@lru_cache(maxsize=None)
def reduced_word(a: Perm) -> tuple[int, ...]:
    """A reduced word (indices of simple transpositions), chosen deterministically."""
    word = []
    a = list(a)
    n = len(a)
    # Bubble sort; each adjacent swap records one letter (word read right to left).
    changed = True
    while changed:
        changed = False
        for i in range(n - 1):
            if a[i] > a[i + 1]:
                a[i], a[i + 1] = a[i + 1], a[i]
                word.append(i + 1)
                changed = True
    word.reverse()
    return tuple(word)


def all_perms(r: int) -> tuple[Perm, ...]:
    return tuple(sorted(iter_permutations(range(1, r + 1))))


def extend(a: Perm, r: int) -> Perm:
    """View a permutation of a smaller set inside S_r, fixing the new points."""
    return a + tuple(range(len(a) + 1, r + 1))


def reverse_conjugate(a: Perm) -> Perm:
    """Conjugation by the longest element: s_i -> s_{r-i}."""
    n = len(a)
    return tuple(n + 1 - a[n - i - 1] for i in range(n))


def young_subgroup(shape: tuple[int, ...], r: int) -> list[Perm]:
    """The row stabilizer S_shape inside S_r (shape padded with fixed points)."""
    blocks = []
    start = 1
    for part in shape:
        blocks.append(list(range(start, start + part)))
        start += part
    while start <= r:
        blocks.append([start])
        start += 1
    out = []

    def rec(i: int, current: list[int]) -> None:
        if i == len(blocks):
            out.append(tuple(current))
            return
        for p in iter_permutations(blocks[i]):
            rec(i + 1, current + list(p))

    rec(0, [])
    # out entries are images listed block by block; blocks are consecutive so
    # the concatenation is already one-line notation.
    return out

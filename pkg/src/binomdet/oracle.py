"""Brute-force signed enumeration of non-intersecting path tuples.

Ground truth for the determinants: a tuple for permutation w has path i running from
start w[i] to end i (0-based) and no lattice vertex is shared by two paths.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations, product
from typing import Iterator, Sequence

from .errors import BinomdetError
from .lattice import LatticePath, Point, PointConfiguration, all_paths


def permutation_sign(w: Sequence[int]) -> int:
    inv = sum(1 for a in range(len(w)) for b in range(a + 1, len(w)) if w[a] > w[b])
    return -1 if inv % 2 else 1


def transposition(p: int, a: int, b: int) -> tuple[int, ...]:
    """The transposition (a b) on 1..p, as a 0-based image tuple."""
    w = list(range(p))
    w[a - 1], w[b - 1] = w[b - 1], w[a - 1]
    return tuple(w)


@dataclass(frozen=True)
class SignedTuple:
    w: tuple[int, ...]
    paths: tuple[LatticePath, ...]

    @property
    def sign(self) -> int:
        return permutation_sign(self.w)

    def is_vertex_disjoint(self) -> bool:
        seen: set = set()
        for pth in self.paths:
            if seen & pth.vertices:
                return False
            seen |= pth.vertices
        return True


@lru_cache(maxsize=1 << 16)
def _paths(a: Point, b: Point) -> tuple[LatticePath, ...]:
    return tuple(all_paths(a, b))


def enumerate_tuples(config: PointConfiguration, w: Sequence[int]) -> list[SignedTuple]:
    """All vertex-disjoint tuples for w, ordered by their concatenated step strings."""
    w = tuple(w)
    p = config.p
    if sorted(w) != list(range(p)):
        raise BinomdetError(f"{w} is not a permutation of 0..{p - 1}")
    options = [_paths(config.starts[w[i]], config.ends[i]) for i in range(p)]
    if any(not o for o in options):
        return []
    out: list[SignedTuple] = []
    chosen: list[LatticePath] = []

    def rec(i: int, used: frozenset):
        if i == p:
            out.append(SignedTuple(w, tuple(chosen)))
            return
        for pth in options[i]:
            if used.isdisjoint(pth.vertices):
                chosen.append(pth)
                rec(i + 1, used | pth.vertices)
                chosen.pop()

    rec(0, frozenset())
    return out


def count_tuples(starts: Sequence[Sequence[int]], ends: Sequence[Sequence[int]], w: Sequence[int]) -> int:
    """Number of vertex-disjoint tuples for w, by an exhaustive sweep over x - y.

    Every step raises x - y by one, so two paths can only share a vertex at the same
    value t of x - y. The state at time t is the x coordinate of every active path.
    """
    p = len(ends)
    src = [Point(*starts[w[i]]) for i in range(p)]
    dst = [Point(*e) for e in ends]
    for a, b in zip(src, dst):
        if b.x < a.x or b.y > a.y:
            return 0
    t0 = min(a.diagonal for a in src)
    t1 = max(b.diagonal for b in dst)
    # None marks a path not started yet or already finished
    states = {tuple([None] * p): 1}
    for t in range(t0, t1 + 1):
        nxt: dict = defaultdict(int)
        for state, cnt in states.items():
            choices = []
            for i in range(p):
                a, b = src[i], dst[i]
                if t < a.diagonal or t > b.diagonal:
                    choices.append((None,))
                elif t == a.diagonal:
                    choices.append((a.x,))
                else:
                    x = state[i]
                    # stay inside the box that can still reach b
                    choices.append(tuple(c for c in (x, x + 1) if b.y + t <= c <= b.x))
            for combo in product(*choices):
                live = [c for c in combo if c is not None]
                if len(live) == len(set(live)):
                    nxt[combo] += cnt
        states = nxt
        if not states:
            return 0
    return sum(states.values())


def signed_count(config: PointConfiguration) -> int:
    """Sum over all w of sign(w) times the number of non-intersecting tuples for w."""
    return sum(permutation_sign(w) * count_tuples(config.starts, config.ends, w)
               for w in permutations(range(config.p)))


def all_tuples(config: PointConfiguration) -> Iterator[SignedTuple]:
    for w in permutations(range(config.p)):
        yield from enumerate_tuples(config, w)


def negative_tuples(config: PointConfiguration) -> list[SignedTuple]:
    if config.p != 3:
        raise BinomdetError("negative tuple classification is for p = 3")
    return [t for w in permutations(range(3)) if permutation_sign(w) < 0
            for t in enumerate_tuples(config, w)]

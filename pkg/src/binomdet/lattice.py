"""Lattice points, monotone East/South paths, path counts and path distances."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterator, NamedTuple, Optional, Sequence

from .combinatorics import Partition, TriangularSequence, as_partition, check_triangular, col_sum, row_sum
from .errors import AmbiguousDistance, BinomdetError, InvariantViolation

INFINITE = math.inf


class Point(NamedTuple):
    x: int
    y: int

    @property
    def diagonal(self) -> int:
        """x - y, which grows by exactly one on every East or South step."""
        return self.x - self.y

    def shifted(self, dx: int, dy: int) -> "Point":
        return Point(self.x + dx, self.y + dy)


@dataclass(frozen=True)
class LatticePath:
    """Path from ``start`` given as a string over {'E', 'S'} (E: x+1, S: y-1)."""

    start: Point
    steps: str = ""

    def __post_init__(self):
        object.__setattr__(self, "start", Point(*self.start))
        if set(self.steps) - {"E", "S"}:
            raise BinomdetError(f"bad step string {self.steps!r}")

    @cached_property
    def points(self) -> tuple[Point, ...]:
        x, y = self.start
        out = [Point(x, y)]
        for c in self.steps:
            if c == "E":
                x += 1
            else:
                y -= 1
            out.append(Point(x, y))
        return tuple(out)

    @cached_property
    def vertices(self) -> frozenset:
        return frozenset(self.points)

    @property
    def end(self) -> Point:
        return self.points[-1]

    def __len__(self) -> int:
        return len(self.steps)

    def index(self, pt: Point) -> int:
        return self.points.index(pt)

    def suffix_from(self, pt: Point) -> "LatticePath":
        n = self.index(pt)
        return LatticePath(pt, self.steps[n:])

    def prefix_to(self, pt: Point) -> "LatticePath":
        n = self.index(pt)
        return LatticePath(self.start, self.steps[:n])

    def translated(self, dx: int, dy: int) -> "LatticePath":
        return LatticePath(self.start.shifted(dx, dy), self.steps)

    def then(self, other: "LatticePath") -> "LatticePath":
        if self.end != other.start:
            raise BinomdetError(f"cannot join path ending at {self.end} to one starting at {other.start}")
        return LatticePath(self.start, self.steps + other.steps)

    @classmethod
    def through(cls, pts: Sequence[Sequence[int]]) -> "LatticePath":
        """Path visiting the given consecutive lattice points."""
        pts = [Point(*p) for p in pts]
        steps = []
        for a, b in zip(pts, pts[1:]):
            if b == (a.x + 1, a.y):
                steps.append("E")
            elif b == (a.x, a.y - 1):
                steps.append("S")
            else:
                raise BinomdetError(f"{a} -> {b} is not a unit East/South step")
        return cls(pts[0], "".join(steps))


def binomial(n: int, k: int) -> int:
    """C(n, k) with C = 0 outside 0 <= k <= n (in particular for n < 0)."""
    if n < 0 or k < 0 or k > n:
        return 0
    return math.comb(n, k)


def path_count(a: Sequence[int], b: Sequence[int]) -> int:
    """Number of monotone East/South paths from a to b."""
    dx = b[0] - a[0]
    dy = a[1] - b[1]
    if dx < 0 or dy < 0:
        return 0
    return math.comb(dx + dy, dx)


def all_paths(a: Sequence[int], b: Sequence[int]) -> Iterator[LatticePath]:
    """Every monotone path a -> b, step strings in lexicographic order ('E' < 'S')."""
    a, b = Point(*a), Point(*b)
    dx, dy = b.x - a.x, a.y - b.y
    if dx < 0 or dy < 0:
        return

    def rec(e: int, s: int, acc: str):
        if e == 0 and s == 0:
            yield LatticePath(a, acc)
            return
        if e:
            yield from rec(e - 1, s, acc + "E")
        if s:
            yield from rec(e, s - 1, acc + "S")

    yield from rec(dx, dy, "")


def end_points(mu, p: Optional[int] = None) -> list[Point]:
    """B_j = (mu_j + p - j + 1, mu_j + p - j + 1) on the main diagonal."""
    mu = as_partition(mu)
    p = len(mu) if p is None else p
    if len(mu) != p:
        raise BinomdetError(f"mu has {len(mu)} parts, expected {p}")
    return [Point(mu[j - 1] + p - j + 1, mu[j - 1] + p - j + 1) for j in range(1, p + 1)]


def start_points(lam, s: TriangularSequence, check: bool = True) -> list[Point]:
    """The starting points A_1(s), ..., A_p(s)."""
    lam = as_partition(lam)
    p = len(lam)
    if check:
        check_triangular(lam, s)
    pts = []
    for j in range(1, p):
        r = row_sum(s, j)
        pts.append(Point(p - j + 1 + s.a(j, j) - r, lam[j - 1] + p - j + 1 - r))
    xp = 1 + sum(col_sum(s, t) - s.a(t, t) for t in range(1, p))
    pts.append(Point(xp, lam[p - 1] + xp))
    if __debug__ and check:
        bad = start_layout_violations(pts)
        if bad:
            raise InvariantViolation("start point layout", "; ".join(bad))
    return pts


def start_layout_violations(pts: Sequence[Point]) -> list[str]:
    """A_1 strictly NE of A_p, and strictly North of every middle A_l."""
    p = len(pts)
    if p < 2:
        return []
    out = []
    a1, ap = pts[0], pts[-1]
    if not (a1.x > ap.x and a1.y > ap.y):
        out.append(f"A_1={a1} not strictly NE of A_{p}={ap}")
    for n in range(1, p - 1):
        if not a1.y > pts[n].y:
            out.append(f"A_1={a1} not strictly North of A_{n + 1}={pts[n]}")
    return out


@dataclass(frozen=True)
class PointConfiguration:
    starts: tuple[Point, ...]
    ends: tuple[Point, ...]
    source: Optional[tuple] = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "starts", tuple(Point(*a) for a in self.starts))
        object.__setattr__(self, "ends", tuple(Point(*b) for b in self.ends))
        if len(self.starts) != len(self.ends):
            raise BinomdetError("need as many start points as end points")

    @property
    def p(self) -> int:
        return len(self.starts)

    @classmethod
    def from_partitions(cls, lam, mu, s: TriangularSequence) -> "PointConfiguration":
        lam, mu = as_partition(lam), as_partition(mu)
        if len(lam) != len(mu):
            raise BinomdetError(f"lambda has {len(lam)} parts but mu has {len(mu)}")
        return cls(tuple(start_points(lam, s)), tuple(end_points(mu)), (lam, mu, s))


def _first_point_at_height(path: LatticePath, y: int) -> Optional[Point]:
    for pt in path.points:
        if pt.y == y:
            return pt
    return None


def horizontal_meet(pi: LatticePath, pi_prime: LatticePath) -> Optional[Point]:
    """Where the horizontal line through the start of pi_prime first meets pi.

    "First" is along pi: the point where pi arrives at that height. Requires pi to
    start strictly higher than pi_prime.
    """
    if not pi.start.y > pi_prime.start.y:
        raise BinomdetError(
            f"horizontal distance needs {pi.start} strictly North of {pi_prime.start}")
    return _first_point_at_height(pi, pi_prime.start.y)


def horizontal_distance(pi: LatticePath, pi_prime: LatticePath):
    """|A'C| for C = horizontal_meet(pi, pi_prime), or INFINITE."""
    c = horizontal_meet(pi, pi_prime)
    return INFINITE if c is None else abs(c.x - pi_prime.start.x)


def _point_on_diagonal(path: LatticePath, d: int) -> Optional[Point]:
    # a monotone path crosses each line x - y = d at most once
    n = d - path.start.diagonal
    if 0 <= n <= len(path):
        return path.points[n]
    return None


def diagonal_meet(pi: LatticePath, pi_prime: LatticePath):
    """Return (anchor, hit) realizing the diagonal distance, or None.

    Either the slope-1 line through pi.start hits pi_prime (anchor = pi.start), or the
    one through pi_prime.start hits pi (anchor = pi_prime.start).
    """
    a, a2 = pi.start, pi_prime.start
    c_prime = _point_on_diagonal(pi_prime, a.diagonal)
    c = _point_on_diagonal(pi, a2.diagonal)
    if c_prime is not None and c is not None:
        if a.diagonal == a2.diagonal:
            # coinciding lines: both segments are A A'
            return (a, c_prime)
        raise AmbiguousDistance(
            f"slope-1 lines through {a} and {a2} meet the opposite paths at {c_prime} and {c}")
    if c_prime is not None:
        return (a, c_prime)
    if c is not None:
        return (a2, c)
    return None


def diagonal_distance(pi: LatticePath, pi_prime: LatticePath):
    m = diagonal_meet(pi, pi_prime)
    if m is None:
        return INFINITE
    anchor, hit = m
    return abs(hit.x - anchor.x)

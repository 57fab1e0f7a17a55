"""Path surgery: the p = 2 positive formula, horizontal and diagonal swaps for p = 3,
the negative-to-positive injection check and balanced-triple counting."""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Optional

from .combinatorics import (Partition, TriangularSequence, as_partition, enumerate_triangular_sequences,
                            is_triangular)
from .determinant import _pair, f_value
from .errors import BinomdetError
from .lattice import (INFINITE, LatticePath, Point, PointConfiguration, diagonal_distance, diagonal_meet,
                      end_points, horizontal_distance, horizontal_meet, start_points)
from .oracle import SignedTuple, enumerate_tuples, permutation_sign

IDENTITY3 = (0, 1, 2)
W12 = (1, 0, 2)  # path to B_1 starts at A_2, path to B_2 at A_1
W23 = (0, 2, 1)


class SwapKind(enum.Enum):
    HORIZONTAL = "horizontal"
    DIAGONAL = "diagonal"


class InversionCase(enum.Enum):
    CASE1_12 = "case1-(12)"
    CASE2_NW = "case2.1-NW"
    CASE2_SE = "case2.2-SE"
    CASE2_SW = "case2.3-SW"


@dataclass(frozen=True)
class SwapResult:
    paths: tuple[LatticePath, ...]  # identity order: paths[r] runs A*_r -> B_r
    ijk: tuple[int, int, int]
    translation: int
    kind: SwapKind


def _ijk_valid(lam: Partition, ijk) -> bool:
    i, j, k = ijk
    return 0 <= k <= lam[1] and 0 <= i <= k and 0 <= j <= lam[2]


# ---------------------------------------------------------------- p = 2

def p2_pairs(lam, mu, i: int) -> int:
    """#Pi(i): non-intersecting pairs A_r(i) -> B_r, identity permutation only."""
    lam, mu = _pair(lam, mu)
    if len(lam) != 2:
        raise BinomdetError("p2_pairs needs p = 2")
    if not 0 <= i <= lam[1]:
        raise BinomdetError(f"i={i} outside 0..{lam[1]}")
    cfg = PointConfiguration.from_partitions(lam, mu, TriangularSequence(2, ((i,),)))
    return len(enumerate_tuples(cfg, (0, 1)))


# ---------------------------------------------------------------- p = 3 swaps

def classify(starts) -> Optional[InversionCase]:
    """Which negative case the start layout allows, from coordinates alone."""
    a1, a2, a3 = starts
    if a2.x > a1.x and a2.y < a1.y:
        return InversionCase.CASE1_12
    if not (a2.x >= a3.x and a2.y >= a3.y):
        if a2.x < a3.x and a2.y >= a3.y:
            return InversionCase.CASE2_NW
        if a2.x >= a3.x and a2.y < a3.y:
            return InversionCase.CASE2_SE
        return InversionCase.CASE2_SW
    return None


def horizontal_swap(pi1: LatticePath, pi2: LatticePath, ijk) -> SwapResult:
    """pi1: A_1 -> B_2, pi2: A_2 -> B_1 (a (12) inversion).

    Chop pi1 where it first reaches the height of A_2; the tail runs to B_2 and the
    head, slid right onto A_2, is glued in front of pi2.
    """
    i, j, k = ijk
    a1, a2 = pi1.start, pi2.start
    if not (a2.x > a1.x and a2.y < a1.y):
        raise BinomdetError(f"not a case-1 layout: A_1={a1}, A_2={a2}")
    c = horizontal_meet(pi1, pi2)
    if c is None:
        raise BinomdetError("horizontal distance is infinite")
    shift = a2.x - c.x
    new1 = pi1.prefix_to(c).translated(shift, 0).then(pi2)
    new2 = pi1.suffix_from(c)
    return SwapResult((new1, new2), (i, j - shift, k + shift), abs(shift), SwapKind.HORIZONTAL)


def diagonal_swap(pi2: LatticePath, pi3: LatticePath, ijk) -> SwapResult:
    """pi2: A_2 -> B_3, pi3: A_3 -> B_2 (a (23) inversion).

    One slope-1 line through a start meets the other path; the path it meets is cut
    there, and its head is slid along the diagonal onto the other start.
    """
    i, j, k = ijk
    m = diagonal_meet(pi3, pi2)
    if m is None:
        raise BinomdetError("diagonal distance is infinite")
    anchor, hit = m
    if anchor == pi3.start:
        # the line through A_3 meets pi2 at hit
        d = anchor.x - hit.x
        to_b2 = pi2.prefix_to(hit).translated(d, d).then(pi3)
        to_b3 = pi2.suffix_from(hit)
    else:
        # the line through A_2 meets pi3 at hit
        d = hit.x - anchor.x
        to_b2 = pi3.suffix_from(hit)
        to_b3 = pi3.prefix_to(hit).translated(-d, -d).then(pi2)
    # A_2 moves by (d, d) and A_3 by (-d, -d), i.e. i -> i - d
    return SwapResult((to_b2, to_b3), (i - d, j, k), abs(d), SwapKind.DIAGONAL)


def swap_negative(t: SignedTuple, ijk) -> tuple[InversionCase, SwapResult]:
    """Apply the swap matching the inversion of a negative non-intersecting triple."""
    starts = tuple(p.start for p in t.paths)
    if t.w == W12:
        to_b1, to_b2, to_b3 = t.paths
        res = horizontal_swap(to_b2, to_b1, ijk)
        a = (to_b2.start, to_b1.start, to_b3.start)
        case = classify(a)
        return case, SwapResult((res.paths[0], res.paths[1], to_b3), res.ijk, res.translation, res.kind)
    if t.w == W23:
        to_b1, to_b2, to_b3 = t.paths
        res = diagonal_swap(to_b3, to_b2, ijk)
        a = (to_b1.start, to_b3.start, to_b2.start)
        case = classify(a)
        return case, SwapResult((to_b1, res.paths[0], res.paths[1]), res.ijk, res.translation, res.kind)
    raise BinomdetError(f"no swap defined for permutation {t.w} (starts {starts})")


# ---------------------------------------------------------------- injection check

@dataclass
class InjectionReport:
    lam: Partition
    mu: Partition
    f: int
    negatives: int = 0
    positives: int = 0
    images: int = 0
    by_case: dict = field(default_factory=dict)
    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def _image_problems(lam, mu, f, res: SwapResult) -> list[str]:
    out = []
    if not _ijk_valid(lam, res.ijk):
        return [f"image sequence {res.ijk} not in S(lambda)"]
    i, j, k = res.ijk
    if j + k != f:
        out.append(f"image sequence {res.ijk} changed f")
    s = TriangularSequence.from_ijk(*res.ijk)
    want_a = start_points(lam, s)
    want_b = end_points(mu)
    for r, pth in enumerate(res.paths):
        if pth.start != want_a[r]:
            out.append(f"image path {r + 1} starts at {pth.start}, A_{r + 1}{res.ijk}={want_a[r]}")
        if pth.end != want_b[r]:
            out.append(f"image path {r + 1} ends at {pth.end}, B_{r + 1}={want_b[r]}")
    if not SignedTuple(IDENTITY3, res.paths).is_vertex_disjoint():
        out.append(f"image at {res.ijk} is not vertex-disjoint")
    return out


def verify_injection(lam, mu, f: int) -> InjectionReport:
    """Swap every negative non-intersecting triple at level f and check the image."""
    lam, mu = _pair(lam, mu)
    if len(lam) != 3:
        raise BinomdetError("injection check needs p = 3")
    rep = InjectionReport(lam, mu, f)
    seen: dict = {}
    for s in enumerate_triangular_sequences(lam):
        if f_value(s) != f:
            continue
        ijk = s.ijk
        cfg = PointConfiguration.from_partitions(lam, mu, s)
        rep.positives += len(enumerate_tuples(cfg, IDENTITY3))
        for w in ((1, 2, 0), (2, 0, 1)):
            n = len(enumerate_tuples(cfg, w))
            if n:
                rep.positives += n
                rep.violations.append(f"{ijk}: {n} non-intersecting triples for 3-cycle {w}")
        for w in (W12, W23, (2, 1, 0)):
            for t in enumerate_tuples(cfg, w):
                rep.negatives += 1
                label = f"{ijk} w={w}"
                if w == (2, 1, 0):
                    rep.violations.append(f"{label}: non-intersecting triple for (13)")
                    continue
                try:
                    case, res = swap_negative(t, ijk)
                except BinomdetError as exc:
                    rep.violations.append(f"{label}: {exc}")
                    continue
                expected = "case1" if w == W12 else "case2"
                if case is None or not case.value.startswith(expected):
                    rep.violations.append(f"{label}: start layout classified as {case}")
                rep.by_case[case] = rep.by_case.get(case, 0) + 1
                probs = _image_problems(lam, mu, f, res)
                if probs:
                    rep.violations.extend(f"{label}: {p}" for p in probs)
                    continue
                key = (res.ijk, tuple(p.steps for p in res.paths))
                if key in seen:
                    rep.violations.append(f"{label}: image collides with image of {seen[key]}")
                else:
                    seen[key] = label
    rep.images = len(seen)
    return rep


# ---------------------------------------------------------------- balanced triples

def is_balanced(lam: Partition, ijk, paths, reading: str = "symmetric") -> bool:
    """Balance test for an identity triple: neither inverse swap lands back in S(lambda).

    ``literal``: l_h infinite, or neither inverse-swap triple is triangular.
    ``symmetric``: each inverse triple is ruled out separately (infinite distance or
    not triangular).
    """
    pi1, pi2, pi3 = paths
    i, j, k = ijk
    lh = horizontal_distance(pi1, pi2)
    ld = diagonal_distance(pi2, pi3)
    h_ok = lh != INFINITE and _ijk_valid(lam, (i, j + lh, k - lh))
    d_ok = ld != INFINITE and _ijk_valid(lam, (i + ld, j, k))
    if reading == "literal":
        return lh == INFINITE or not (h_ok or d_ok)
    if reading == "symmetric":
        return not (h_ok or d_ok)
    raise BinomdetError(f"unknown reading {reading!r}")


def balanced_triples(lam, mu, s: TriangularSequence, reading: str = "symmetric") -> int:
    lam, mu = _pair(lam, mu)
    if len(lam) != 3:
        raise BinomdetError("balanced triples need p = 3")
    cfg = PointConfiguration.from_partitions(lam, mu, s)
    return sum(1 for t in enumerate_tuples(cfg, IDENTITY3) if is_balanced(lam, s.ijk, t.paths, reading))


def balanced_total(lam, mu, reading: str = "symmetric") -> int:
    lam = as_partition(lam)
    return sum(balanced_triples(lam, mu, s, reading) for s in enumerate_triangular_sequences(lam))

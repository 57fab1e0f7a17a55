"""Binomial matrices M(s), exact determinants and the sums c(lambda, mu)."""
from __future__ import annotations

from concurrent.futures import Executor
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .combinatorics import (Partition, TriangularSequence, as_partition, check_triangular,
                            col_sum, enumerate_triangular_sequences, row_sum)
from .errors import BinomdetError, LengthMismatch
from .lattice import PointConfiguration, binomial, path_count


@dataclass(frozen=True)
class BinomialMatrix:
    entries: tuple[tuple[int, ...], ...]
    source: Optional[tuple] = field(default=None, compare=False)

    @property
    def p(self) -> int:
        return len(self.entries)

    def __getitem__(self, rc):
        r, c = rc
        return self.entries[r][c]


def _pair(lam, mu) -> tuple[Partition, Partition]:
    lam, mu = as_partition(lam), as_partition(mu)
    if len(lam) != len(mu):
        raise LengthMismatch(f"lambda has {len(lam)} parts but mu has {len(mu)}")
    return lam, mu


def build_matrix_closed_form(lam, mu, s: TriangularSequence) -> BinomialMatrix:
    """Entries C(lam_r - a_rr, mu_c + r - c + R_r - a_rr) for r < p; bottom row
    C(lam_p, mu_c + p - c + sum_t (a_tt - C_t))."""
    lam, mu = _pair(lam, mu)
    check_triangular(lam, s)
    p = len(lam)
    rows = []
    for r in range(1, p):
        top = lam[r - 1] - s.a(r, r)
        shift = row_sum(s, r) - s.a(r, r)
        rows.append(tuple(binomial(top, mu[c - 1] + r - c + shift) for c in range(1, p + 1)))
    tail = sum(s.a(t, t) - col_sum(s, t) for t in range(1, p))
    rows.append(tuple(binomial(lam[p - 1], mu[c - 1] + p - c + tail) for c in range(1, p + 1)))
    return BinomialMatrix(tuple(rows), (lam, mu, s))


def build_matrix_path_counts(config: PointConfiguration) -> BinomialMatrix:
    return BinomialMatrix(
        tuple(tuple(path_count(a, b) for b in config.ends) for a in config.starts),
        config.source)


def _rows(m) -> list[list[int]]:
    return [list(r) for r in (m.entries if isinstance(m, BinomialMatrix) else m)]


def bareiss_determinant(m) -> int:
    """Fraction-free Gaussian elimination; every division is exact."""
    a = _rows(m)
    n = len(a)
    if any(len(r) != n for r in a):
        raise BinomdetError("determinant of a non-square matrix")
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * pivot - a[i][k] * a[k][j]) // prev
        prev = pivot
    return sign * a[n - 1][n - 1]


def cofactor_determinant(m) -> int:
    a = _rows(m)
    n = len(a)
    if n == 0:
        return 1
    if n == 1:
        return a[0][0]
    if n == 2:
        return a[0][0] * a[1][1] - a[0][1] * a[1][0]
    return sum((-1) ** c * a[0][c] * cofactor_determinant([row[:c] + row[c + 1:] for row in a[1:]])
               for c in range(n) if a[0][c])


def determinant(m) -> int:
    """Exact integer determinant (cofactor expansion up to 3x3, Bareiss beyond)."""
    a = _rows(m)
    if any(len(r) != len(a) for r in a):
        raise BinomdetError("determinant of a non-square matrix")
    return cofactor_determinant(a) if len(a) <= 3 else bareiss_determinant(a)


def _term(args):
    lam, mu, s = args
    return determinant(build_matrix_closed_form(lam, mu, s))


def f_value(s: TriangularSequence) -> int:
    """j + k = a_22 + a_11 for p = 3."""
    i, j, k = s.ijk
    return j + k


@dataclass
class CoefficientReport:
    lam: Partition
    mu: Partition
    total: int
    per_sequence: list[tuple[TriangularSequence, int]]
    per_f: dict[int, int] = field(default_factory=dict)
    oracle_checked: bool = False

    @property
    def p(self) -> int:
        return len(self.lam)

    def terms_at(self, f: int) -> list[tuple[TriangularSequence, int]]:
        return [(s, d) for s, d in self.per_sequence if f_value(s) == f]

    def min_partial(self) -> Optional[int]:
        return min(self.per_f.values()) if self.per_f else None


def coefficient(lam, mu, executor: Optional[Executor] = None) -> CoefficientReport:
    """c(lam, mu) = sum over s in S(lam) of det M(s), with its per-term breakdown."""
    lam, mu = _pair(lam, mu)
    seqs = list(enumerate_triangular_sequences(lam))
    args = [(lam, mu, s) for s in seqs]
    dets = list(executor.map(_term, args)) if executor else [_term(a) for a in args]
    per_sequence = list(zip(seqs, dets))
    per_f: dict[int, int] = {}
    if len(lam) == 3:
        per_f = {f: 0 for f in range(lam[1] + lam[2] + 1)}
        for s, d in per_sequence:
            per_f[f_value(s)] += d
    return CoefficientReport(lam, mu, sum(dets), per_sequence, per_f)


def partial_sum(lam, mu, f: int) -> int:
    """c(lam, mu; f): the p = 3 sum restricted to sequences with j + k = f."""
    lam, mu = _pair(lam, mu)
    if len(lam) != 3:
        raise BinomdetError(f"partial sums are defined for p = 3, got p = {len(lam)}")
    if not 0 <= f <= lam[1] + lam[2]:
        raise BinomdetError(f"f={f} outside 0..{lam[1] + lam[2]}")
    return sum(_term((lam, mu, s)) for s in enumerate_triangular_sequences(lam) if f_value(s) == f)

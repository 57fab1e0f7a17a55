"""Vectorized M(s) construction over all of S(lambda) at once, for exhaustive sweeps.

Both constructions are exact int64 tables; the caller is responsible for keeping
lambda small enough (entries are at most C(lambda_1 + p, ...)).
"""
from __future__ import annotations

import numpy as np

from .combinatorics import as_partition, col_sum, enumerate_triangular_sequences, row_sum
from .errors import BinomdetError
from .lattice import end_points, start_points

MAX_TOP = 60


def pascal_table(n: int) -> np.ndarray:
    t = np.zeros((n + 1, n + 1), dtype=np.int64)
    for i in range(n + 1):
        t[i, 0] = 1
        for k in range(1, i + 1):
            t[i, k] = t[i - 1, k - 1] + t[i - 1, k]
    return t


def _lookup(table: np.ndarray, n: np.ndarray, k: np.ndarray) -> np.ndarray:
    ok = (n >= 0) & (k >= 0) & (k <= n) & (n < table.shape[0])
    out = np.zeros(n.shape, dtype=np.int64)
    out[ok] = table[n[ok], k[ok]]
    return out


class SequenceBatch:
    """Per-sequence data for every s in S(lam): closed-form parameters and start points."""

    def __init__(self, lam):
        self.lam = as_partition(lam)
        p = self.p = len(self.lam)
        self.seqs = list(enumerate_triangular_sequences(self.lam))
        n = len(self.seqs)
        self.top = np.empty((n, p), dtype=np.int64)
        self.shift = np.empty((n, p), dtype=np.int64)
        self.ax = np.empty((n, p), dtype=np.int64)
        self.ay = np.empty((n, p), dtype=np.int64)
        for m, s in enumerate(self.seqs):
            for r in range(1, p):
                self.top[m, r - 1] = self.lam[r - 1] - s.a(r, r)
                self.shift[m, r - 1] = row_sum(s, r) - s.a(r, r)
            self.top[m, p - 1] = self.lam[p - 1]
            self.shift[m, p - 1] = sum(s.a(t, t) - col_sum(s, t) for t in range(1, p))
            for r, a in enumerate(start_points(self.lam, s)):
                self.ax[m, r], self.ay[m, r] = a
        need = max(int(self.top.max()), int((self.ay - self.ax).max()))
        if need > MAX_TOP:
            raise BinomdetError(f"lambda too large for int64 tables ({need} > {MAX_TOP})")
        self.table = pascal_table(max(need, 0) + 1)

    def closed_form(self, mu) -> np.ndarray:
        """Array (n_seq, p, p) of C(top_r, mu_c + r - c + shift_r), 1-based r, c."""
        mu = np.asarray(tuple(mu), dtype=np.int64)
        p = self.p
        r = np.arange(1, p + 1)[:, None]
        c = np.arange(1, p + 1)[None, :]
        k = mu[None, None, :] + (r - c)[None, :, :] + self.shift[:, :, None]
        n = np.broadcast_to(self.top[:, :, None], k.shape)
        return _lookup(self.table, n, k)

    def path_counts(self, mu) -> np.ndarray:
        """Array (n_seq, p, p) of monotone path counts A_r(s) -> B_c."""
        b = np.asarray([pt.x for pt in end_points(mu)], dtype=np.int64)
        dx = b[None, None, :] - self.ax[:, :, None]
        dy = self.ay[:, :, None] - b[None, None, :]
        n = np.where((dx >= 0) & (dy >= 0), dx + dy, -1)
        return _lookup(self.table, n, dx)

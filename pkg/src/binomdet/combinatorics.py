"""Partitions, triangular sequences S(lambda) and their row/column sums."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import BinomdetError, InvalidSequence


@dataclass(frozen=True)
class Partition:
    """Weakly decreasing tuple of nonnegative integers. Zeros are kept (length = p)."""

    parts: tuple[int, ...]

    def __init__(self, parts: Sequence[int]):
        parts = tuple(int(x) for x in parts)
        if not parts:
            raise BinomdetError("a partition needs at least one part")
        if any(x < 0 for x in parts):
            raise BinomdetError(f"negative part in {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise BinomdetError(f"parts not weakly decreasing: {parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def parse(cls, text: str) -> "Partition":
        try:
            return cls([int(x) for x in text.replace(" ", "").split(",") if x != ""])
        except ValueError as exc:
            raise BinomdetError(f"cannot parse partition {text!r}: {exc}") from None

    def __len__(self) -> int:
        return len(self.parts)

    def __getitem__(self, idx):
        return self.parts[idx]

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __str__(self) -> str:
        return ",".join(map(str, self.parts))

    def contains(self, other: "Partition") -> bool:
        """True when ``other`` fits inside this one componentwise."""
        return len(other) == len(self) and all(b <= a for a, b in zip(self.parts, other.parts))


def as_partition(x) -> Partition:
    return x if isinstance(x, Partition) else Partition(x)


@dataclass(frozen=True)
class TriangularSequence:
    """Lower-triangular array ``rows[i-1][j-1] = a_{i,j}`` for 1 <= j <= i <= p-1.

    For p = 3 the short labels are (i, j, k) = (a_{21}, a_{22}, a_{11}).
    """

    p: int
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.p < 1:
            raise BinomdetError("p must be >= 1")
        if len(self.rows) != self.p - 1 or any(len(r) != n + 1 for n, r in enumerate(self.rows)):
            raise BinomdetError(f"rows {self.rows} do not form a triangle of order {self.p - 1}")

    @classmethod
    def from_flat(cls, p: int, flat: Sequence[int]) -> "TriangularSequence":
        """Build from the row-major list a11, a21, a22, a31, ..."""
        flat = list(flat)
        if len(flat) != (p - 1) * p // 2:
            raise BinomdetError(f"expected {(p - 1) * p // 2} entries for p={p}, got {len(flat)}")
        rows, pos = [], 0
        for n in range(1, p):
            rows.append(tuple(int(x) for x in flat[pos:pos + n]))
            pos += n
        return cls(p, tuple(rows))

    @classmethod
    def from_ijk(cls, i: int, j: int, k: int) -> "TriangularSequence":
        return cls(3, ((k,), (i, j)))

    def a(self, i: int, j: int) -> int:
        """Entry a_{i,j}, 1-based."""
        if not 1 <= j <= i <= self.p - 1:
            raise IndexError(f"a_{{{i},{j}}} outside the triangle of order {self.p - 1}")
        return self.rows[i - 1][j - 1]

    def flat(self) -> tuple[int, ...]:
        return tuple(x for r in self.rows for x in r)

    @property
    def ijk(self) -> tuple[int, int, int]:
        if self.p != 3:
            raise BinomdetError("(i, j, k) labels only exist for p = 3")
        return (self.rows[1][0], self.rows[1][1], self.rows[0][0])

    def label(self) -> tuple[int, ...]:
        """(i, j, k) for p = 3, the flat entries otherwise."""
        return self.ijk if self.p == 3 else self.flat()


def row_sum(s: TriangularSequence, j: int) -> int:
    """R_j = a_{j,1} + ... + a_{j,j-1}; R_1 = 0."""
    if not 1 <= j <= s.p - 1:
        raise IndexError(f"row index {j} outside 1..{s.p - 1}")
    return sum(s.rows[j - 1][:j - 1])


def col_sum(s: TriangularSequence, j: int) -> int:
    """C_j = a_{j+1,j} + ... + a_{p-1,j}; C_{p-1} = 0."""
    if not 1 <= j <= s.p - 1:
        raise IndexError(f"column index {j} outside 1..{s.p - 1}")
    return sum(s.rows[i - 1][j - 1] for i in range(j + 1, s.p))


def triangular_violations(lam: Partition, s: TriangularSequence) -> list[str]:
    """Empty list iff ``s`` is in S(lam)."""
    out = []
    if s.p != len(lam):
        return [f"sequence order {s.p} != partition length {len(lam)}"]
    for i in range(1, s.p):
        for j in range(1, i + 1):
            v = s.a(i, j)
            if not 0 <= v <= lam[j]:
                out.append(f"a_{i}{j}={v} outside [0, lambda_{j + 1}={lam[j]}]")
    for j in range(1, s.p - 1):
        acc = 0
        for i in range(j + 1, s.p):
            acc += s.a(i, j)
            if acc > s.a(j, j):
                out.append(f"column {j} partial sum to row {i} is {acc} > a_{j}{j}={s.a(j, j)}")
                break
    return out


def is_triangular(lam: Partition, s: TriangularSequence) -> bool:
    return not triangular_violations(lam, s)


def check_triangular(lam: Partition, s: TriangularSequence) -> None:
    bad = triangular_violations(lam, s)
    if bad:
        raise InvalidSequence(f"{s.flat()} not in S({lam}): " + "; ".join(bad))


def enumerate_triangular_sequences(lam) -> Iterator[TriangularSequence]:
    """Yield S(lam) in lexicographic order of the row-major flat entries."""
    lam = as_partition(lam)
    p = len(lam)
    cells = [(i, j) for i in range(1, p) for j in range(1, i + 1)]
    flat = [0] * len(cells)
    # remaining column budget a_{jj} - (entries below the diagonal so far)
    budget = [0] * p

    def rec(pos: int):
        if pos == len(cells):
            yield TriangularSequence.from_flat(p, flat)
            return
        i, j = cells[pos]
        hi = lam[j] if i == j else min(lam[j], budget[j])
        for v in range(hi + 1):
            flat[pos] = v
            if i == j:
                budget[j] = v
            else:
                budget[j] -= v
            yield from rec(pos + 1)
            if i != j:
                budget[j] += v

    yield from rec(0)


def count_triangular_sequences(lam) -> int:
    return sum(1 for _ in enumerate_triangular_sequences(lam))


def partitions_in_box(bound) -> list[Partition]:
    """All partitions of length p with lam_r <= bound_r, in colex order."""
    bound = tuple(bound)
    p = len(bound)
    out = []

    def rec(prefix: list[int]):
        r = len(prefix)
        if r == p:
            out.append(Partition(prefix))
            return
        cap = bound[r] if r == 0 else min(bound[r], prefix[-1])
        for v in range(cap + 1):
            rec(prefix + [v])

    rec([])
    out.sort(key=lambda lam: lam.parts[::-1])
    return out

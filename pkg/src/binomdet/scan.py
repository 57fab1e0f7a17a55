"""Exhaustive scans over partition pairs mu, lam inside a bounding partition."""
from __future__ import annotations

import json
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Iterator, Optional

from . import kernels
from .combinatorics import Partition, as_partition, enumerate_triangular_sequences, partitions_in_box
from .determinant import build_matrix_closed_form, build_matrix_path_counts, determinant, f_value
from .errors import BinomdetError
from .lattice import PointConfiguration
from .oracle import signed_count
from .surgery import balanced_total, verify_injection

log = logging.getLogger(__name__)

MODES = ("coefficients", "oracle-check", "injection", "balanced")
ORACLE_MAX_PART = 6
ORACLE_MAX_P = 6
# determinant-only scans beyond this many sequences for the largest lambda need --force
COEFF_MAX_SEQUENCES = 1_000_000


@dataclass
class ScanJob:
    bound: Partition
    mode: str = "coefficients"
    jobs: int = 1
    all_pairs: bool = False
    force: bool = False
    checkpoint: Optional[Path] = None

    def __post_init__(self):
        self.bound = as_partition(self.bound)
        if self.mode not in MODES:
            raise BinomdetError(f"unknown mode {self.mode!r}; pick one of {', '.join(MODES)}")
        if self.mode in ("injection", "balanced") and len(self.bound) != 3:
            raise BinomdetError(f"mode {self.mode} needs p = 3, bound has p = {len(self.bound)}")
        if self.force:
            return
        if self.mode != "coefficients":
            if len(self.bound) > ORACLE_MAX_P or max(self.bound) > ORACLE_MAX_PART:
                raise BinomdetError(
                    f"oracle mode {self.mode} refuses p > {ORACLE_MAX_P} or parts > {ORACLE_MAX_PART} without --force")
        else:
            n = _sequence_count(self.bound)
            if n > COEFF_MAX_SEQUENCES:
                raise BinomdetError(f"S({self.bound}) has {n} sequences; rerun with --force")


def _sequence_count(lam) -> int:
    try:
        from ._kernels import sequence_count
    except ImportError:
        from .combinatorics import count_triangular_sequences as sequence_count
    return sequence_count(tuple(lam))


@dataclass
class ScanRecord:
    lam: Partition
    mu: Partition
    c: int
    min_partial: Optional[int] = None
    contained: bool = True
    violations: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {"lambda": list(self.lam), "mu": list(self.mu), "total": str(self.c),
                "min_partial": None if self.min_partial is None else str(self.min_partial),
                "contained": self.contained, "violations": self.violations}

    @classmethod
    def from_dict(cls, d: dict) -> "ScanRecord":
        mp = d.get("min_partial")
        return cls(Partition(d["lambda"]), Partition(d["mu"]), int(d["total"]),
                   None if mp is None else int(mp), d.get("contained", True), list(d.get("violations", [])))

    def csv_row(self) -> list[str]:
        return [str(self.lam), str(self.mu), str(self.c),
                "" if self.min_partial is None else str(self.min_partial), " | ".join(self.violations)]


CSV_COLUMNS = ["lambda", "mu", "total", "min_partial", "violations"]


@dataclass
class ScanSummary:
    records: int = 0
    min_c: Optional[int] = None
    argmin: Optional[tuple] = None
    violations: int = 0
    skipped_lambdas: int = 0

    def add(self, rec: ScanRecord):
        self.records += 1
        if rec.contained and (self.min_c is None or rec.c < self.min_c):
            self.min_c, self.argmin = rec.c, (rec.lam, rec.mu)
        if rec.violations:
            self.violations += 1

    def to_dict(self) -> dict:
        return {"records": self.records, "min_total": None if self.min_c is None else str(self.min_c),
                "argmin": None if self.argmin is None else [list(self.argmin[0]), list(self.argmin[1])],
                "violations": self.violations}


def iter_pairs(bound, all_pairs: bool = False) -> Iterator[tuple[Partition, Partition]]:
    """lam in colex order inside bound; mu in colex order inside lam (or inside bound)."""
    box = partitions_in_box(bound)
    for lam in box:
        for mu in (box if all_pairs else partitions_in_box(lam)):
            yield lam, mu


def _coefficient_checks(lam: Partition, mu: Partition, terms: list[int], rec: ScanRecord):
    p = len(lam)
    if rec.contained:
        if rec.c <= 0:
            rec.violations.append(f"positivity: c={rec.c} <= 0")
    elif rec.c < 0:
        rec.violations.append(f"negative coefficient outside mu <= lambda: c={rec.c}")
    if p == 2:
        for n, d in enumerate(terms):
            if d < 0:
                rec.violations.append(f"p=2 term det M({n}) = {d} < 0")
    if p == 3:
        per_f = {f: 0 for f in range(lam[1] + lam[2] + 1)}
        for s, d in zip(enumerate_triangular_sequences(lam), terms):
            per_f[f_value(s)] += d
        rec.min_partial = min(per_f.values())
        bad = {f: v for f, v in per_f.items() if v < 0}
        if bad:
            rec.violations.append(f"negative partial sums {bad}")
        if rec.contained and per_f[0] <= 0:
            rec.violations.append(f"c(lam,mu;0) = {per_f[0]} not > 0")


def check_pair(mode: str, lam: Partition, mu: Partition) -> ScanRecord:
    terms = kernels.determinant_terms(lam, mu)
    rec = ScanRecord(lam, mu, sum(terms), contained=lam.contains(mu))
    _coefficient_checks(lam, mu, terms, rec)
    if mode == "oracle-check":
        for s, d in zip(enumerate_triangular_sequences(lam), terms):
            cfg = PointConfiguration.from_partitions(lam, mu, s)
            m = build_matrix_path_counts(cfg)
            if m != build_matrix_closed_form(lam, mu, s):
                rec.violations.append(f"{s.label()}: closed form != path counts")
            if determinant(m) != d:
                rec.violations.append(f"{s.label()}: kernel det {d} != {determinant(m)}")
            sc = signed_count(cfg)
            if sc != d:
                rec.violations.append(f"{s.label()}: det {d} != signed count {sc}")
    elif mode == "injection":
        for f in range(lam[1] + lam[2] + 1):
            rep = verify_injection(lam, mu, f)
            rec.violations.extend(f"f={f}: {v}" for v in rep.violations)
    elif mode == "balanced":
        b = balanced_total(lam, mu, reading="symmetric")
        if b != rec.c:
            rec.violations.append(f"balanced count {b} != c {rec.c}")
    return rec


def _check_star(args):
    return check_pair(*args)


def _read_checkpoint(path: Optional[Path]) -> Optional[tuple]:
    if path is None or not path.exists():
        return None
    text = path.read_text().strip()
    return tuple(json.loads(text)["last_lambda"]) if text else None


def run_scan(job: ScanJob, emit: Callable[[ScanRecord], None] = lambda r: None) -> ScanSummary:
    """Scan every pair; ``emit`` receives records in deterministic order."""
    summary = ScanSummary()
    done = _read_checkpoint(job.checkpoint)
    pairs = list(iter_pairs(job.bound, job.all_pairs))
    if done is not None:
        order = [lam.parts for lam in partitions_in_box(job.bound)]
        if done not in order:
            raise BinomdetError(f"checkpoint lambda {done} is not inside bound {job.bound}")
        cut = order.index(done)
        skipped = set(order[:cut + 1])
        summary.skipped_lambdas = len(skipped)
        pairs = [(l, m) for l, m in pairs if l.parts not in skipped]
        log.info("resuming after lambda=%s, %d pairs left", done, len(pairs))
    work = [(job.mode, lam, mu) for lam, mu in pairs]

    def consume(results):
        current = None
        for rec in results:
            if current is not None and rec.lam != current:
                _write_checkpoint(job.checkpoint, current)
            current = rec.lam
            summary.add(rec)
            emit(rec)
        if current is not None:
            _write_checkpoint(job.checkpoint, current)

    if job.jobs > 1:
        with ProcessPoolExecutor(max_workers=job.jobs) as ex:
            # map() yields in submission order, so output is independent of worker count
            consume(ex.map(_check_star, work, chunksize=max(1, len(work) // (job.jobs * 8) or 1)))
    else:
        consume(map(_check_star, work))
    return summary


def _write_checkpoint(path: Optional[Path], lam: Partition):
    if path is not None:
        path.write_text(json.dumps({"last_lambda": list(lam)}) + "\n")

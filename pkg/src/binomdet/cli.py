"""Command line front end: ``binomdet compute|scan|oracle-check|verify-injection|balanced|svg``.

Exit codes: 0 success, 2 malformed input, 3 an invariant or conjecture check failed.
"""
from __future__ import annotations

import csv
import io
import json
import logging
import os
import sys
from pathlib import Path
from typing import Optional

import click

from . import kernels
from .combinatorics import Partition, TriangularSequence, check_triangular, enumerate_triangular_sequences
from .determinant import build_matrix_closed_form, build_matrix_path_counts, coefficient, determinant, partial_sum
from .errors import BinomdetError, InvariantViolation
from .lattice import PointConfiguration
from .oracle import signed_count
from .report import dumps_report, render_table
from .scan import CSV_COLUMNS, ScanJob, ScanRecord, run_scan
from .surgery import balanced_triples, verify_injection
from .svg import first_tuple, render_configuration

EXIT_INVARIANT = 3


class PartitionType(click.ParamType):
    name = "partition"

    def convert(self, value, param, ctx):
        if isinstance(value, Partition):
            return value
        try:
            return Partition.parse(value)
        except BinomdetError as exc:
            self.fail(str(exc), param, ctx)


class IntListType(click.ParamType):
    name = "ints"

    def convert(self, value, param, ctx):
        try:
            return tuple(int(x) for x in value.split(",") if x.strip() != "")
        except ValueError:
            self.fail(f"{value!r} is not a comma-separated integer list", param, ctx)


PARTITION = PartitionType()


def _pair(lam: Partition, mu: Partition):
    if len(lam) != len(mu):
        raise click.UsageError(f"length mismatch: lambda has {len(lam)} parts, mu has {len(mu)}")


def _write(text: str, out: Optional[Path]):
    if out is None:
        click.echo(text, nl=False)
    else:
        out.write_text(text)


def _fail(msg: str):
    click.echo(f"invariant violation: {msg}", err=True)
    sys.exit(EXIT_INVARIANT)


@click.group()
@click.version_option(package_name="binomdet")
def main():
    """Sums of binomial determinants and non-intersecting lattice paths."""
    logging.basicConfig(level=os.environ.get("LGV_LOG", "WARNING").upper(),
                        format="%(levelname)s %(name)s: %(message)s")


@main.command()
@click.option("--lambda", "lam", type=PARTITION, required=True)
@click.option("--mu", type=PARTITION, required=True)
@click.option("--f", "f", type=int, default=None, help="p = 3 only: restrict to j + k = f.")
@click.option("--format", "fmt", type=click.Choice(["table", "json"]), default="table")
@click.option("--out", type=click.Path(dir_okay=False, path_type=Path))
@click.option("--check", is_flag=True, help="Cross-check every term against the path oracle.")
def compute(lam, mu, f, fmt, out, check):
    """c(lambda, mu) with its per-sequence determinants."""
    _pair(lam, mu)
    if f is not None:
        if len(lam) != 3:
            raise click.UsageError("--f needs p = 3")
        if not 0 <= f <= lam[1] + lam[2]:
            raise click.UsageError(f"--f must lie in 0..{lam[1] + lam[2]}")
    try:
        rep = coefficient(lam, mu)
        for s, d in rep.per_sequence:
            cfg = PointConfiguration.from_partitions(lam, mu, s)
            if build_matrix_path_counts(cfg) != build_matrix_closed_form(lam, mu, s):
                raise InvariantViolation("closed form equals path counts", f"s={s.label()}")
            if check and signed_count(cfg) != d:
                raise InvariantViolation("det equals signed non-intersecting count", f"s={s.label()}")
        if sum(kernels.determinant_terms(lam, mu)) != rep.total:
            raise InvariantViolation("kernel total equals reference total")
        if f is not None and partial_sum(lam, mu, f) != rep.per_f[f]:
            raise InvariantViolation("partial sum consistency", f"f={f}")
    except InvariantViolation as exc:
        _fail(str(exc))
    rep.oracle_checked = check
    _write(dumps_report(rep, f) if fmt == "json" else render_table(rep, f), out)


def _scan(bound, mode, jobs, out, fmt, checkpoint, force, all_pairs):
    try:
        job = ScanJob(bound, mode, jobs, all_pairs=all_pairs, force=force, checkpoint=checkpoint)
    except BinomdetError as exc:
        raise click.UsageError(str(exc))
    resume = checkpoint is not None and checkpoint.exists()
    stream = open(out, "a" if resume else "w", newline="") if out else sys.stdout
    writer = csv.writer(stream, delimiter=";") if fmt == "csv" else None
    if writer and not resume:
        writer.writerow(CSV_COLUMNS)

    def emit(rec: ScanRecord):
        if fmt == "json":
            stream.write(json.dumps(rec.to_dict()) + "\n")
        elif fmt == "csv":
            writer.writerow(rec.csv_row())
        else:
            flag = "OK " if not rec.violations else "BAD"
            mp = "" if rec.min_partial is None else f" min_partial={rec.min_partial}"
            stream.write(f"{flag} lambda=({rec.lam}) mu=({rec.mu}) c={rec.c}{mp}"
                         + ("" if rec.contained else " [mu not in lambda]")
                         + "".join(f"\n    {v}" for v in rec.violations) + "\n")
        stream.flush()

    try:
        summary = run_scan(job, emit)
    finally:
        if out:
            stream.close()
    s = summary.to_dict()
    click.echo(f"scan {mode} bound=({bound}) backend={kernels.BACKEND}: {s['records']} pairs, "
               f"min c={s['min_total']} at {s['argmin']}, violations={s['violations']}", err=True)
    if summary.violations:
        sys.exit(EXIT_INVARIANT)


_scan_options = [
    click.option("--jobs", type=click.IntRange(1), default=1),
    click.option("--out", type=click.Path(dir_okay=False, path_type=Path)),
    click.option("--format", "fmt", type=click.Choice(["table", "json", "csv"]), default="table"),
    click.option("--checkpoint", type=click.Path(dir_okay=False, path_type=Path)),
    click.option("--force", is_flag=True, help="Lift the cost guards."),
    click.option("--all-pairs", is_flag=True, help="Also scan mu not contained in lambda."),
]


def scan_options(required: bool):
    def deco(fn):
        for opt in reversed(_scan_options):
            fn = opt(fn)
        return click.option("--bound", type=PARTITION, required=required,
                            help="Bounding partition, e.g. 4,4,4.")(fn)
    return deco


@main.command()
@scan_options(required=True)
@click.option("--mode", type=click.Choice(["coefficients", "oracle-check", "injection", "balanced"]),
              default="coefficients")
def scan(bound, jobs, out, fmt, checkpoint, force, all_pairs, mode):
    """Scan all pairs mu <= lambda <= bound."""
    _scan(bound, mode, jobs, out, fmt, checkpoint, force, all_pairs)


def _single_or_bound(lam, mu, bound):
    if bound is not None and (lam is not None or mu is not None):
        raise click.UsageError("give either --bound or --lambda/--mu")
    if bound is None:
        if lam is None or mu is None:
            raise click.UsageError("give --lambda and --mu, or --bound")
        _pair(lam, mu)


@main.command("oracle-check")
@click.option("--lambda", "lam", type=PARTITION)
@click.option("--mu", type=PARTITION)
@scan_options(required=False)
def oracle_check(lam, mu, bound, jobs, out, fmt, checkpoint, force, all_pairs):
    """det M(s) against the signed count of non-intersecting tuples."""
    _single_or_bound(lam, mu, bound)
    if bound is not None:
        return _scan(bound, "oracle-check", jobs, out, fmt, checkpoint, force, all_pairs)
    bad = 0
    lines = []
    for s in enumerate_triangular_sequences(lam):
        cfg = PointConfiguration.from_partitions(lam, mu, s)
        d = determinant(build_matrix_path_counts(cfg))
        sc = signed_count(cfg)
        bad += d != sc
        lines.append(f"{str(s.label()):>16}  det={d:>8}  signed={sc:>8}  {'ok' if d == sc else 'MISMATCH'}")
    lines.append(f"{len(lines)} sequences, {bad} mismatches")
    _write("\n".join(lines) + "\n", out)
    if bad:
        sys.exit(EXIT_INVARIANT)


@main.command("verify-injection")
@click.option("--lambda", "lam", type=PARTITION)
@click.option("--mu", type=PARTITION)
@click.option("--f", "f", type=int, default=None)
@scan_options(required=False)
def verify_injection_cmd(lam, mu, f, bound, jobs, out, fmt, checkpoint, force, all_pairs):
    """Swap every negative triple and check the images (p = 3)."""
    _single_or_bound(lam, mu, bound)
    if bound is not None:
        return _scan(bound, "injection", jobs, out, fmt, checkpoint, force, all_pairs)
    if len(lam) != 3:
        raise click.UsageError("verify-injection needs p = 3")
    fs = range(lam[1] + lam[2] + 1) if f is None else [f]
    lines, bad = [], 0
    for ff in fs:
        rep = verify_injection(lam, mu, ff)
        cases = ", ".join(f"{k.value}: {v}" for k, v in sorted(rep.by_case.items(), key=lambda kv: kv[0].value))
        lines.append(f"f={ff}: negative={rep.negatives} positive={rep.positives} images={rep.images}"
                     + (f" ({cases})" if cases else "") + ("" if rep.ok else "  VIOLATIONS"))
        lines.extend(f"    {v}" for v in rep.violations)
        bad += len(rep.violations)
    _write("\n".join(lines) + "\n", out)
    if bad:
        sys.exit(EXIT_INVARIANT)


@main.command()
@click.option("--lambda", "lam", type=PARTITION)
@click.option("--mu", type=PARTITION)
@click.option("--reading", type=click.Choice(["symmetric", "literal"]), default="symmetric")
@scan_options(required=False)
def balanced(lam, mu, reading, bound, jobs, out, fmt, checkpoint, force, all_pairs):
    """Count balanced triples and compare with c(lambda, mu) (p = 3)."""
    _single_or_bound(lam, mu, bound)
    if bound is not None:
        return _scan(bound, "balanced", jobs, out, fmt, checkpoint, force, all_pairs)
    if len(lam) != 3:
        raise click.UsageError("balanced needs p = 3")
    rep = coefficient(lam, mu)
    lines, total = [], 0
    for s, d in rep.per_sequence:
        b = balanced_triples(lam, mu, s, reading)
        total += b
        lines.append(f"{str(s.ijk):>12}  det={d:>6}  balanced={b:>6}")
    lines.append(f"balanced total = {total}, c(lambda,mu) = {rep.total}")
    _write("\n".join(lines) + "\n", out)
    if total != rep.total:
        sys.exit(EXIT_INVARIANT)


@main.command()
@click.option("--lambda", "lam", type=PARTITION, required=True)
@click.option("--mu", type=PARTITION, required=True)
@click.option("--s", "flat", type=IntListType(), default=None, help="Row-major entries a11,a21,a22,...")
@click.option("--ijk", type=IntListType(), default=None, help="p = 3 labels i,j,k.")
@click.option("--paths", is_flag=True, help="Overlay the first non-intersecting tuple.")
@click.option("--out", type=click.Path(dir_okay=False, path_type=Path))
def svg(lam, mu, flat, ijk, paths, out):
    """Plot the points A_r(s) and B_r as SVG."""
    _pair(lam, mu)
    p = len(lam)
    try:
        if ijk is not None:
            if p != 3 or len(ijk) != 3:
                raise BinomdetError("--ijk needs p = 3 and three values")
            s = TriangularSequence.from_ijk(*ijk)
        else:
            s = TriangularSequence.from_flat(p, flat or ())
        check_triangular(lam, s)
    except BinomdetError as exc:
        raise click.UsageError(str(exc))
    cfg = PointConfiguration.from_partitions(lam, mu, s)
    overlay = None
    if paths:
        found = first_tuple(cfg)
        overlay = found[1] if found else None
    title = f"lambda=({lam}) mu=({mu}) s={s.label()}"
    _write(render_configuration(cfg, overlay, title), out)


if __name__ == "__main__":
    main()

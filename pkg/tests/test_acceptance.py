"""Acceptance criteria, one test each. All comparisons are exact integer equality."""
import json
import random
import time
from itertools import permutations

import numpy as np
import pytest
from click.testing import CliRunner

from binomdet import kernels
from binomdet.batch import SequenceBatch
from binomdet.cli import main
from binomdet.combinatorics import Partition, enumerate_triangular_sequences, partitions_in_box
from binomdet.determinant import build_matrix_closed_form, build_matrix_path_counts, determinant, f_value
from binomdet.lattice import PointConfiguration
from binomdet.oracle import count_tuples, signed_count
from binomdet.scan import ScanJob, iter_pairs, run_scan
from binomdet.surgery import balanced_total, p2_pairs, verify_injection

P2_BOUND = (5, 5)
P3_BOUND = (4, 4, 4)


def sweep(bound):
    """mu inside lambda inside bound."""
    return list(iter_pairs(bound))


def test_criterion_1_worked_example(criterion):
    t0 = time.perf_counter()
    res = CliRunner().invoke(main, ["compute", "--lambda", "3,3,3", "--mu", "2,2,1", "--f", "2",
                                    "--format", "json"])
    elapsed = time.perf_counter() - t0
    assert res.exit_code == 0, res.output
    doc = json.loads(res.output)
    dets = [int(t["det"]) for t in doc["terms"]]
    partial = int(doc["partial"]["2"])
    ok = partial == 12 and dets == [0, 3, 6, 3, 3, -3] and elapsed < 1.0
    criterion(1, ok, f"c(333,221;2)={partial} terms={dets} in {elapsed:.3f}s")
    assert ok


def test_criterion_2_oracle_equivalence(criterion):
    bad, n = [], 0
    for bound in [(4,), (4, 4), P3_BOUND]:
        for lam, mu in iter_pairs(bound, all_pairs=True):
            for s in enumerate_triangular_sequences(lam):
                d = determinant(build_matrix_closed_form(lam, mu, s))
                sc = signed_count(PointConfiguration.from_partitions(lam, mu, s))
                n += 1
                if d != sc:
                    bad.append((lam.parts, mu.parts, s.flat, d, sc))
    rng = random.Random(20240617)
    for _ in range(200):
        p = rng.randint(1, 3)
        pts = [tuple(rng.randint(-3, 8) for _ in range(2)) for _ in range(2 * p)]
        cfg = PointConfiguration(pts[:p], pts[p:])
        d = determinant(build_matrix_path_counts(cfg))
        sc = signed_count(cfg)
        n += 1
        if d != sc:
            bad.append((cfg.starts, cfg.ends, d, sc))
    criterion(2, not bad, f"{n} configurations, {len(bad)} mismatches {bad[:3]}")
    assert not bad


@pytest.mark.slow
def test_criterion_3_matrix_cross_validation(criterion):
    bad, n = [], 0
    for bound in [(6,), (6, 6), (6, 6, 6), (6, 6, 6, 6)]:
        box = partitions_in_box(bound)
        for lam in box:
            batch = SequenceBatch(lam)
            for mu in box:
                cf, pc = batch.closed_form(mu), batch.path_counts(mu)
                n += cf.shape[0]
                if not np.array_equal(cf, pc):
                    bad.append((lam.parts, mu.parts))
    criterion(3, not bad, f"{n} matrices entrywise, {len(bad)} mismatching pairs {bad[:3]}")
    assert not bad


def test_criterion_4_positivity(criterion):
    out = {}
    for bound in (P2_BOUND, P3_BOUND):
        recs = []
        summary = run_scan(ScanJob(bound, "coefficients"), recs.append)
        nonpos = [(r.lam.parts, r.mu.parts, r.c) for r in recs if r.c <= 0]
        out[bound] = (summary.records, summary.violations, nonpos)
    ok = all(v == 0 and not np_ for _, v, np_ in out.values())
    detail = "; ".join(f"bound {b}: {p} pairs, {v} violations, {len(np_)} non-positive"
                       for b, (p, v, np_) in out.items())
    criterion(4, ok, detail)
    assert ok


def test_criterion_5_partial_sums(criterion):
    bad, n = [], 0
    for lam, mu in sweep(P3_BOUND):
        per_f = dict.fromkeys(range(lam[1] + lam[2] + 1), 0)
        for s, d in zip(enumerate_triangular_sequences(lam), kernels.determinant_terms(lam, mu)):
            per_f[f_value(s)] += d
        n += len(per_f)
        if min(per_f.values()) < 0 or per_f[0] <= 0:
            bad.append((lam.parts, mu.parts, per_f))
    criterion(5, not bad, f"{n} partial sums, {len(bad)} failures {bad[:3]}")
    assert not bad


def test_criterion_6_p2_positive_formula(criterion):
    bad, n = [], 0
    for lam, mu in sweep(P2_BOUND):
        dets, pairs = [], []
        for s in enumerate_triangular_sequences(lam):
            dets.append(determinant(build_matrix_closed_form(lam, mu, s)))
            pairs.append(p2_pairs(lam, mu, s.a(1, 1)))
        n += len(dets)
        c = kernels.coefficient_total(lam, mu)
        if dets != pairs or min(pairs) < 0 or sum(pairs) != c:
            bad.append((lam.parts, mu.parts, dets, pairs, c))
    criterion(6, not bad, f"{n} determinants, {len(bad)} failures {bad[:3]}")
    assert not bad


def test_criterion_7_balanced_triples(criterion):
    bad = []
    pairs = sweep(P3_BOUND)
    for lam, mu in pairs:
        b, c = balanced_total(lam, mu), kernels.coefficient_total(lam, mu)
        if b != c:
            bad.append((lam.parts, mu.parts, b, c))
    criterion(7, not bad, f"{len(pairs)} pairs, {len(bad)} mismatches {bad[:3]}")
    assert not bad


def test_criterion_8_injection(criterion):
    violations, negatives, checks = [], 0, 0
    for lam, mu in sweep(P3_BOUND):
        for f in range(lam[1] + lam[2] + 1):
            rep = verify_injection(lam, mu, f)
            checks += 1
            negatives += rep.negatives
            violations.extend(rep.violations)
    criterion(8, not violations,
              f"{checks} (lambda,mu,f), {negatives} negative triples swapped, "
              f"{len(violations)} violations {violations[:3]}")
    assert not violations


def test_criterion_9_excluded_permutations(criterion):
    # path r runs from A_{w[r]+1} to B_{r+1}; (13) and both 3-cycles
    excluded = [w for w in permutations(range(3)) if w not in {(0, 1, 2), (1, 0, 2), (0, 2, 1)}]
    bad, n = [], 0
    for lam, mu in sweep(P3_BOUND):
        for s in enumerate_triangular_sequences(lam):
            cfg = PointConfiguration.from_partitions(lam, mu, s)
            for w in excluded:
                n += 1
                cnt = count_tuples(cfg.starts, cfg.ends, w)
                if cnt:
                    bad.append((lam.parts, mu.parts, s.ijk, w, cnt))
    criterion(9, not bad, f"{n} (configuration, permutation) checks, {len(bad)} violations {bad[:3]}")
    assert not bad

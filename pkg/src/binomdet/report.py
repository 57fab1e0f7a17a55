"""JSON and table rendering of coefficient reports (big integers as decimal strings)."""
from __future__ import annotations

import json
from typing import Optional

from .combinatorics import Partition, TriangularSequence
from .determinant import CoefficientReport, f_value


def report_to_dict(rep: CoefficientReport, f: Optional[int] = None) -> dict:
    terms = rep.per_sequence if f is None else rep.terms_at(f)
    out = {"lambda": list(rep.lam), "mu": list(rep.mu), "total": str(rep.total)}
    if f is not None:
        out["f"] = f
    rows = []
    for s, d in terms:
        row = {"s": list(s.flat()), "det": str(d)}
        if rep.p == 3:
            row["ijk"] = list(s.ijk)
        rows.append(row)
    out["terms"] = rows
    per_f = rep.per_f if f is None else {f: rep.per_f[f]}
    out["partial"] = {str(k): str(v) for k, v in per_f.items()}
    if rep.oracle_checked:
        out["oracle_checked"] = True
    return out


def dumps_report(rep: CoefficientReport, f: Optional[int] = None) -> str:
    return json.dumps(report_to_dict(rep, f)) + "\n"


def loads_report(text: str) -> CoefficientReport:
    """Inverse of dumps_report for unfiltered reports; totals are recomputed from terms."""
    d = json.loads(text)
    lam, mu = Partition(d["lambda"]), Partition(d["mu"])
    per_sequence = [(TriangularSequence.from_flat(len(lam), t["s"]), int(t["det"])) for t in d["terms"]]
    total = sum(det for _, det in per_sequence)
    per_f: dict[int, int] = {}
    if len(lam) == 3 and "f" not in d:
        per_f = {f: 0 for f in range(lam[1] + lam[2] + 1)}
        for s, det in per_sequence:
            per_f[f_value(s)] += det
    elif "f" in d:
        per_f = {int(d["f"]): sum(det for _, det in per_sequence)}
    if "f" in d:
        total = int(d["total"])
    return CoefficientReport(lam, mu, total, per_sequence, per_f, bool(d.get("oracle_checked", False)))


def render_table(rep: CoefficientReport, f: Optional[int] = None) -> str:
    lines = [f"lambda = ({rep.lam})   mu = ({rep.mu})   p = {rep.p}"]
    terms = rep.per_sequence if f is None else rep.terms_at(f)
    head = "(i,j,k)" if rep.p == 3 else "s"
    lines.append(f"{head:>16}  {'det M(s)':>12}")
    for s, d in terms:
        lines.append(f"{str(s.label()):>16}  {d:>12}")
    if f is not None:
        lines.append(f"terms: {', '.join(str(d) for _, d in terms)}")
        lines.append(f"c(lambda,mu;{f}) = {rep.per_f[f]}")
    elif rep.per_f:
        lines.append("partial sums: " + ", ".join(f"f={k}: {v}" for k, v in rep.per_f.items()))
    lines.append(f"c(lambda,mu) = {rep.total}")
    if rep.oracle_checked:
        lines.append("oracle check: every det M(s) equals its signed non-intersecting count")
    return "\n".join(lines) + "\n"

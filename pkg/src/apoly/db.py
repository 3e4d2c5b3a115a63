"""A-polynomial record store: ingest, normalization, batch verification.

Record file format: UTF-8 text, one record per line,

    name ; polynomial-expression ; [flags]

with '#' comments and blank lines ignored. The only flag is ``refined``,
marking per-component polynomials that are exempt from the M-degree
verdict. Ingested polynomials are renormalized to A-normal form; any
sign/unit/monomial discrepancy with the source is kept as a provenance
note rather than treated as an error.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Optional

from . import newton, structure
from .poly import BivarPoly, PolyParseError, format_poly, parse_poly
from .structure import FAIL, PASS, UNKNOT_OK, AnalysisReport, UnitEvalFailure, analyze

__all__ = [
    "DbRecord",
    "RecordError",
    "LoadResult",
    "load_table",
    "BatchReport",
    "verify_all",
    "parse_poly",
]

VERDICT_NOT_APPLICABLE = "REFINED_NOT_APPLICABLE"

_L_MINUS_1 = BivarPoly({(0, 1): 1, (0, 0): -1})


@dataclass
class DbRecord:
    name: str
    a_poly: BivarPoly
    source: str = "ingested"
    refined: bool = False
    provenance: str = ""
    report: Optional[AnalysisReport] = None

    def __post_init__(self):
        if not self.name:
            raise ValueError("record name must be nonempty")
        nf, stripped = self.a_poly.normalize()
        if nf != self.a_poly:
            notes = []
            if stripped.sign != 1:
                notes.append("sign flipped")
            if stripped.content != 1:
                notes.append(f"content {stripped.content} removed")
            if stripped.i0 or stripped.j0:
                notes.append(f"monomial M^{stripped.i0}*L^{stripped.j0} stripped")
            self.provenance = (self.provenance + " " + "; ".join(notes)).strip()
            self.a_poly = nf


@dataclass(frozen=True)
class RecordError:
    line: int
    name: str
    message: str


@dataclass
class LoadResult:
    records: list
    errors: list


def load_table(path) -> LoadResult:
    """Parse a record file; per-record errors are collected, not fatal."""
    records = []
    errors = []
    seen = set()
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            parts = [p.strip() for p in line.split(";")]
            if len(parts) < 2:
                errors.append(RecordError(lineno, "", "expected 'name ; polynomial [; flags]'"))
                continue
            name, expr = parts[0], parts[1]
            flags = [f for f in (parts[2].split() if len(parts) > 2 and parts[2] else [])]
            if not name:
                errors.append(RecordError(lineno, "", "empty record name"))
                continue
            if name in seen:
                errors.append(RecordError(lineno, name, f"DuplicateName: {name}"))
                continue
            unknown = [f for f in flags if f != "refined"]
            if unknown:
                errors.append(RecordError(lineno, name, f"unknown flag(s): {' '.join(unknown)}"))
                continue
            try:
                poly = parse_poly(expr)
                if poly.is_zero:
                    raise ValueError("zero polynomial")
                rec = DbRecord(name=name, a_poly=poly, refined="refined" in flags)
            except (PolyParseError, ValueError) as exc:
                errors.append(RecordError(lineno, name, str(exc)))
                continue
            seen.add(name)
            records.append(rec)
    return LoadResult(records=records, errors=errors)


@dataclass
class BatchReport:
    """Record-wise reports plus summary counters and an overall status.

    Status FAIL when any non-refined, non-unknot record has M-degree 0
    (which would contradict the nontriviality theorem); ANOMALY when some
    record fails the unit-evaluation form without showing a vertical
    Newton-polygon edge. FAIL takes precedence over ANOMALY.
    """

    records: list
    reports: list
    anomalies: list
    failures: list
    status: str

    @property
    def exit_code(self):
        return {"OK": 0, "FAIL": 2, "ANOMALY": 3}[self.status]

    def as_dict(self):
        return {
            "status": self.status,
            "n_records": len(self.records),
            "n_fail": len(self.failures),
            "n_anomaly": len(self.anomalies),
            "failures": list(self.failures),
            "anomalies": list(self.anomalies),
            "records": [r.as_dict() for r in self.reports],
        }

    def to_text(self):
        lines = []
        w = max([len(r.name) for r in self.reports] + [4])
        lines.append(f"{'name':<{w}}  deg_M  deg_L  eq1  vert  verdict")
        for r in self.reports:
            eq1 = (
                "ok"
                if not isinstance(r.unit_eval_plus, UnitEvalFailure)
                and not isinstance(r.unit_eval_minus, UnitEvalFailure)
                else "FAIL"
            )
            vert = {True: "yes", False: "no", None: "-"}[r.vertical_edge]
            lines.append(
                f"{r.name:<{w}}  {r.deg_m:>5}  {r.deg_l:>5}  {eq1:<4} {vert:<5} {r.verdict}"
            )
        lines.append(
            f"status: {self.status} ({len(self.reports)} records, "
            f"{len(self.failures)} failures, {len(self.anomalies)} anomalies)"
        )
        return "\n".join(lines)


def _verify_one(rec: DbRecord) -> AnalysisReport:
    claims = not rec.refined and rec.a_poly != _L_MINUS_1
    report = analyze(rec.a_poly, name=rec.name, claims_nontrivial_knot=claims)
    if rec.refined:
        report.verdict = VERDICT_NOT_APPLICABLE
    return report


def verify_all(records, jobs: int = 1) -> BatchReport:
    """Run every structural check on every record.

    Deterministic and order-independent: the report follows the input
    record order, and each record is analyzed in isolation.
    """
    if jobs > 1:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(max_workers=jobs) as pool:
            reports = list(pool.map(_verify_one, records))
    else:
        reports = [_verify_one(rec) for rec in records]
    failures = []
    anomalies = []
    for rec, rep in zip(records, reports):
        rec.report = rep
        if rep.verdict == FAIL:
            failures.append(rec.name)
        eq1_failed = isinstance(rep.unit_eval_plus, UnitEvalFailure) or isinstance(
            rep.unit_eval_minus, UnitEvalFailure
        )
        # degenerate polygons are excluded from the implication check
        if eq1_failed and rep.vertical_edge is False:
            if not newton.newton_polygon(rec.a_poly).degenerate:
                anomalies.append(rec.name)
    status = "FAIL" if failures else ("ANOMALY" if anomalies else "OK")
    return BatchReport(
        records=list(records),
        reports=reports,
        anomalies=anomalies,
        failures=failures,
        status=status,
    )

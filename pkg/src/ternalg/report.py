"""Check reports: the uniform result record of every verification routine.

A check either passes or carries a list of residuals, each a (index tuple,
rendered nonzero element) pair.  Reports render to text or to a stable JSON
document; apart from the elapsed_ms fields the JSON is byte-identical for
identical (suite, seed, config) runs.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field, asdict

SCHEMA_VERSION = "1"


@dataclass
class CheckReport:
    check_id: str
    paper_ref: str
    status: str = "pass"
    residuals: list = field(default_factory=list)
    elapsed_ms: float = 0.0
    notes: str = ""

    def add_residual(self, indices, rendered: str):
        self.residuals.append({"indices": list(indices), "element": rendered})
        self.status = "fail"

    @property
    def passed(self) -> bool:
        return self.status == "pass"


class Timer:
    """Context manager stamping elapsed_ms onto a report."""

    def __init__(self, report: CheckReport):
        self.report = report

    def __enter__(self):
        self._t0 = time.perf_counter()
        return self.report

    def __exit__(self, *exc):
        self.report.elapsed_ms = (time.perf_counter() - self._t0) * 1000.0
        return False


def reports_to_document(reports, config: dict) -> dict:
    checks = [asdict(r) for r in sorted(reports, key=lambda r: r.check_id)]
    for c in checks:
        if not c["notes"]:
            del c["notes"]
    return {"version": SCHEMA_VERSION, "config": config, "checks": checks}


def document_to_reports(doc: dict):
    out = []
    for c in doc["checks"]:
        out.append(CheckReport(
            check_id=c["check_id"], paper_ref=c["paper_ref"], status=c["status"],
            residuals=c["residuals"], elapsed_ms=c["elapsed_ms"],
            notes=c.get("notes", "")))
    return out


def emit_json(reports, config: dict) -> str:
    return json.dumps(reports_to_document(reports, config), indent=2)


def emit_text(reports) -> str:
    lines = []
    for r in sorted(reports, key=lambda r: r.check_id):
        lines.append(f"[{r.status.upper():4s}] {r.check_id}  ({r.elapsed_ms:.1f} ms)")
        lines.append(f"       ref: {r.paper_ref}")
        if r.notes:
            lines.append(f"       note: {r.notes}")
        for res in r.residuals[:10]:
            lines.append(f"       residual {res['indices']}: {res['element']}")
        extra = len(r.residuals) - 10
        if extra > 0:
            lines.append(f"       ... {extra} more residuals")
    n_fail = sum(1 for r in reports if not r.passed)
    lines.append(f"{len(reports) - n_fail}/{len(reports)} checks passed")
    return "\n".join(lines)

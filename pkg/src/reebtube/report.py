"""Report assembly: check records, JSON emission against the shipped schema,
and aligned text tables."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources

from .anchors import anchor_for

SCHEMA_VERSION = "1"

STATUS_ORDER = ("fail", "flagged", "pass", "skipped")


@dataclass
class CheckResult:
    id: str
    status: str                  # pass | fail | flagged | skipped
    witness: str = None

    def as_dict(self) -> dict:
        out = {"id": self.id, "paper_anchor": anchor_for(self.id), "status": self.status}
        if self.witness is not None:
            out["witness"] = self.witness
        return out


@dataclass
class Report:
    space: dict
    checks: list = field(default_factory=list)
    notes: list = field(default_factory=list)
    timings: dict = field(default_factory=dict)
    model: dict = None
    tube: dict = None

    def status_counts(self) -> dict:
        counts = {s: 0 for s in STATUS_ORDER}
        for c in self.checks:
            counts[c.status] += 1
        return counts

    def exit_code(self) -> int:
        return 1 if self.status_counts()["fail"] else 0

    def as_dict(self) -> dict:
        out = {
            "schema_version": SCHEMA_VERSION,
            "space": self.space,
            "checks": [c.as_dict() for c in self.checks],
            "timings": {k: round(v, 6) for k, v in self.timings.items()},
        }
        if self.notes:
            out["notes"] = list(self.notes)
        if self.model is not None:
            out["model"] = self.model
        if self.tube is not None:
            out["tube"] = self.tube
        return out


def load_schema() -> dict:
    text = resources.files("reebtube").joinpath("schema/report-v1.schema.json").read_text()
    return json.loads(text)


def validate_report(doc: dict):
    import jsonschema

    jsonschema.validate(doc, load_schema())


def render_json(report: Report) -> str:
    doc = report.as_dict()
    validate_report(doc)
    return json.dumps(doc, indent=2, sort_keys=False)


def render_text(report: Report) -> str:
    lines = []
    sp = report.space
    lines.append(f"space    {sp['spec']}   {sp['name']}")
    for note in report.notes:
        lines.append(f"note     {note}")
    if report.model:
        for key, val in report.model.items():
            if key == "tangent_roots":
                lines.append(f"{'tangent_roots':<24} {len(val)} roots")
                for row in val:
                    lines.append(" " * 25 + "(" + ", ".join(row) + ")")
            else:
                lines.append(f"{key:<24} {val}")
    if report.tube:
        t = report.tube
        lines.append(f"tube     case {t['case']}  radius {t['radius']:.6f}")
        lines.append(_table(
            ["curvature", "value", "multiplicity"],
            [["b = 0", f"{t['curvatures']['b']:+.12f}", str(t["multiplicities"][0])],
             ["d = -tan(t/sqrt2)/sqrt2", f"{t['curvatures']['d']:+.12f}", str(t["multiplicities"][1])],
             ["c = cot(t/sqrt2)/sqrt2", f"{t['curvatures']['c']:+.12f}", str(t["multiplicities"][2])],
             ["a = sqrt2 cot(sqrt2 t)", f"{t['curvatures']['a']:+.12f}", str(t["multiplicities"][3])]],
        ))
        if "reeb_residual" in t:
            lines.append(f"reeb_residual  {t['reeb_residual']:.3e}")
        if "focal_dims" in t:
            dims = "  ".join(f"{k}={v}" for k, v in t["focal_dims"].items())
            lines.append(f"focal_dims     {dims}")
    if report.checks:
        rows = []
        for c in sorted(report.checks, key=lambda c: (STATUS_ORDER.index(c.status), c.id)):
            rows.append([c.status.upper(), c.id, anchor_for(c.id),
                         (c.witness or "")[:96]])
        lines.append(_table(["status", "check", "anchor", "witness"], rows))
        counts = report.status_counts()
        lines.append("summary  " + "  ".join(f"{k}={v}" for k, v in counts.items() if v))
    if report.timings:
        lines.append("timings  " + "  ".join(f"{k}={v:.2f}s" for k, v in report.timings.items()))
    return "\n".join(lines) + "\n"


def _table(header: list, rows: list) -> str:
    widths = [len(h) for h in header]
    for row in rows:
        for i, cell in enumerate(row):
            widths[i] = max(widths[i], len(cell))
    def fmt(row):
        return "  ".join(cell.ljust(widths[i]) for i, cell in enumerate(row)).rstrip()
    sep = "  ".join("-" * w for w in widths)
    return "\n".join([fmt(header), sep] + [fmt(r) for r in rows])

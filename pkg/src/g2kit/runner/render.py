"""Text and JSON renderings of a :class:`RunReport`."""
from __future__ import annotations

import json
from fractions import Fraction

from ..exterior import KForm, Polynomial, VectorField
from ..report import CheckReport, SamplingSpec, Verdict
from .run import CheckResult, RunReport

REPORT_SCHEMA = 1

_TAG = {
    Verdict.PROVEN: ("PASS", "(exact)"),
    Verdict.SAMPLED: ("PASS", "(sampled)"),
    Verdict.FAILED: ("FAIL", ""),
    Verdict.SKIPPED: ("SKIP", ""),
}


def _encode(v, level: int) -> str:
    pad = "  " * (level + 1)
    if isinstance(v, dict) and v:
        items = [f"{pad}{json.dumps(k, ensure_ascii=False)}: {_encode(x, level + 1)}" for k, x in v.items()]
        return "{\n" + ",\n".join(items) + "\n" + "  " * level + "}"
    if isinstance(v, list) and any(isinstance(x, (dict, list)) for x in v):
        return "[\n" + ",\n".join(pad + _encode(x, level + 1) for x in v) + "\n" + "  " * level + "]"
    return json.dumps(v, ensure_ascii=False)


def dumps(doc) -> str:
    """Indented JSON with arrays of scalars kept on one line."""
    return _encode(doc, 0) + "\n"


def _summary(value, names) -> str:
    if isinstance(value, (KForm, Polynomial)):
        return value.pretty(names)
    if isinstance(value, VectorField):
        return value.pretty(names)
    if isinstance(value, dict):
        return "; ".join(f"{k}: {_summary(v, names)}" for k, v in value.items())
    if isinstance(value, tuple):
        return "(" + ", ".join(str(x) for x in value) + ")"
    return str(value)


def _text(r: RunReport) -> str:
    names = r.coordinates
    lines = [f"scenario {r.scenario}: {r.verdict}"]
    if r.structure_error:
        lines.append(f"  G2 structure rejected: {r.structure_error}")
    for res in r.results:
        args = ", ".join(f"{k}={v}" for k, v in res.args.items())
        lines.append(f"[{res.index + 1}] {res.kind}({args}): {res.verdict.value}")
        for c in res.report.clauses:
            tag, suffix = _TAG[c.verdict]
            if c.verdict is Verdict.PROVEN and c.detail.startswith("numeric"):
                suffix = "(numeric)"
            line = f"  {tag} {c.name}"
            if suffix:
                line += f" {suffix}"
            if c.verdict is Verdict.FAILED and c.residual is not None:
                line += f": residual {_summary(c.residual, names)}"
            if c.detail and c.verdict is not Verdict.PROVEN:
                line += f"  [{c.detail}]"
            if c.witness is not None:
                line += f"  at {_summary(c.witness, names)}"
            lines.append(line)
        for key, value in res.report.derived.items():
            lines.append(f"    {key} = {_summary(value, names)}")
    return "\n".join(lines) + "\n"


def report_to_dict(r: RunReport) -> dict:
    names = r.coordinates
    sp = r.sampling
    return {
        "schema": REPORT_SCHEMA,
        "scenario": r.scenario,
        "coordinates": list(names),
        "sampling": {"grid": sp.grid, "low": str(sp.low), "high": str(sp.high),
                     "samples": sp.samples, "seed": sp.seed},
        "tol": r.tol,
        "verdict": r.verdict,
        "structure_error": r.structure_error,
        "checks": [
            {"index": res.index, "type": res.kind, "args": res.args,
             "verdict": res.verdict.value, "report": res.report.to_dict(names)}
            for res in r.results
        ],
    }


def report_from_dict(data: dict) -> RunReport:
    names = tuple(data["coordinates"])
    sp = data["sampling"]
    sampling = SamplingSpec(sp["grid"], Fraction(sp["low"]), Fraction(sp["high"]),
                            sp["samples"], sp["seed"])
    run = RunReport(data["scenario"], names, sampling, data["tol"],
                    structure_error=data["structure_error"])
    for c in data["checks"]:
        run.results.append(CheckResult(c["index"], c["type"], c["args"],
                                       CheckReport.from_dict(c["report"], names)))
    return run


def report_from_json(text: str | bytes) -> RunReport:
    return report_from_dict(json.loads(text))


def render_report(r: RunReport, format: str = "text") -> str:
    if format == "text":
        return _text(r)
    if format == "json":
        return dumps(report_to_dict(r))
    raise ValueError(f"unknown report format {format!r}")

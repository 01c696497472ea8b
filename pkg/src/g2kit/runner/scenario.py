"""Scenario documents: a G2 patch, named forms/fields/scalars and a list of checks.

Every validation error carries a JSON path such as ``$.forms.alpha.terms[2].indices``.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from pathlib import Path
from typing import Any

from ..exterior import ConstantMetric, KForm, Polynomial, VectorField
from ..exterior.metric import MetricError
from ..exterior.polynomial import NVARS, PolynomialSyntaxError, parse_polynomial

SCHEMA_VERSION = 1

# argument kinds per check type; a trailing "?" marks an optional argument
CHECK_SIGNATURES: dict[str, dict[str, str]] = {
    "metric_compat": {},
    "metric_from_phi": {"point": "point?"},
    "torsion": {},
    "contact": {"alpha": "form"},
    "reeb": {"alpha": "form", "R": "field"},
    "reeb_solve": {"alpha": "form", "R": "field", "point": "point?"},
    "a_compatible": {"alpha": "form", "R": "field"},
    "b_compatible": {"alpha": "form", "X": "field", "Y": "field"},
    "contact_g2": {"R": "field", "alpha": "form", "f": "scalar", "g": "scalar"},
    "acms": {"R": "field"},
    "associated": {"R": "field"},
    "fundamental_form": {"R": "field", "alpha": "form"},
    "lambda2": {"beta": "form"},
    "decomposable_contraction": {"X": "field", "Y": "field", "Z": "field"},
    "integrand": {"R": "field"},
    "identity_suite": {"trials": "int?"},
}


class ScenarioError(ValueError):
    def __init__(self, path: str, message: str):
        super().__init__(f"{path}: {message}")
        self.path = path
        self.message = message


@dataclass
class Scenario:
    name: str
    coordinates: tuple[str, ...]
    phi: str
    forms: dict[str, KForm]
    fields: dict[str, VectorField] = field(default_factory=dict)
    scalars: dict[str, Polynomial] = field(default_factory=dict)
    checks: list[dict[str, Any]] = field(default_factory=list)
    orientation: int = 1
    metric: ConstantMetric | None = None
    description: str = ""

    @property
    def phi_form(self) -> KForm:
        return self.forms[self.phi]


def _expect(cond: bool, path: str, message: str):
    if not cond:
        raise ScenarioError(path, message)


def _poly(text, names, path) -> Polynomial:
    if isinstance(text, int) and not isinstance(text, bool):
        return Polynomial.const(text)
    _expect(isinstance(text, str), path, "expected a polynomial string")
    try:
        return parse_polynomial(text, names)
    except PolynomialSyntaxError as exc:
        raise ScenarioError(path, f"malformed polynomial: {exc}") from None


def _rational(x, path) -> Fraction:
    _expect(isinstance(x, (int, str)) and not isinstance(x, bool), path,
            "expected an integer or a rational string")
    try:
        return Fraction(x)
    except (ValueError, ZeroDivisionError):
        raise ScenarioError(path, f"not a rational number: {x!r}") from None


def _parse_form(data, names, path) -> KForm:
    _expect(isinstance(data, dict), path, "expected an object with 'degree' and 'terms'")
    deg = data.get("degree")
    _expect(isinstance(deg, int) and not isinstance(deg, bool) and 0 <= deg <= NVARS,
            f"{path}.degree", "degree must be an integer between 0 and 7")
    terms = data.get("terms")
    _expect(isinstance(terms, list), f"{path}.terms", "expected a list")
    coeffs: dict[tuple, Polynomial] = {}
    for k, term in enumerate(terms):
        tpath = f"{path}.terms[{k}]"
        _expect(isinstance(term, dict), tpath, "expected an object with 'indices' and 'coeff'")
        idx = term.get("indices")
        ipath = f"{tpath}.indices"
        _expect(isinstance(idx, list) and all(isinstance(i, int) and not isinstance(i, bool)
                                              for i in idx), ipath, "expected a list of integers")
        _expect(len(idx) == deg, ipath, f"{len(idx)} indices in a degree-{deg} form")
        _expect(all(1 <= i <= NVARS for i in idx), ipath, "indices must lie in 1..7")
        _expect(all(a < b for a, b in zip(idx, idx[1:])), ipath, f"non-increasing multi-index {idx}")
        key = tuple(idx)
        _expect(key not in coeffs, ipath, f"duplicate multi-index {idx}")
        coeffs[key] = _poly(term.get("coeff"), names, f"{tpath}.coeff")
    return KForm(deg, coeffs)


def _parse_field(data, names, path) -> VectorField:
    if isinstance(data, list):
        _expect(len(data) == NVARS, path, "a field lists seven components")
        return VectorField([_poly(c, names, f"{path}[{k}]") for k, c in enumerate(data)])
    _expect(isinstance(data, dict), path, "expected a list of 7 components or a coordinate map")
    comps = [Polynomial.const(0)] * NVARS
    for key, c in data.items():
        _expect(key in names, f"{path}.{key}", f"unknown coordinate {key!r}")
        comps[names.index(key)] = _poly(c, names, f"{path}.{key}")
    return VectorField(comps)


def _parse_metric(data, path) -> ConstantMetric | None:
    if data is None or data == "identity":
        return None
    _expect(isinstance(data, list) and len(data) == NVARS
            and all(isinstance(r, list) and len(r) == NVARS for r in data),
            path, "metric must be \"identity\" or a 7x7 array")
    rows = [[_rational(x, f"{path}[{i}][{j}]") for j, x in enumerate(r)] for i, r in enumerate(data)]
    try:
        return ConstantMetric(rows)
    except MetricError as exc:
        raise ScenarioError(path, str(exc)) from None


def _parse_check(data, sc: Scenario, path) -> dict:
    _expect(isinstance(data, dict), path, "expected an object with a 'type'")
    kind = data.get("type")
    _expect(kind in CHECK_SIGNATURES, f"{path}.type", f"unknown check type {kind!r}")
    sig = CHECK_SIGNATURES[kind]
    out: dict[str, Any] = {"type": kind}
    for key in data:
        _expect(key == "type" or key in sig, f"{path}.{key}", f"unexpected argument for {kind}")
    for arg, spec in sig.items():
        optional = spec.endswith("?")
        spec = spec.rstrip("?")
        apath = f"{path}.{arg}"
        if arg not in data:
            _expect(optional, path, f"check {kind} needs argument {arg!r}")
            continue
        value = data[arg]
        if spec in ("form", "field", "scalar"):
            table = {"form": sc.forms, "field": sc.fields, "scalar": sc.scalars}[spec]
            _expect(isinstance(value, str), apath, f"expected the name of a {spec}")
            _expect(value in table, apath, f"unresolved {spec} name {value!r}")
            out[arg] = value
        elif spec == "int":
            _expect(isinstance(value, int) and not isinstance(value, bool) and value > 0,
                    apath, "expected a positive integer")
            out[arg] = value
        elif spec == "point":
            _expect(isinstance(value, list) and len(value) == NVARS, apath,
                    "a point lists seven rational coordinates")
            out[arg] = tuple(_rational(x, f"{apath}[{k}]") for k, x in enumerate(value))
    return out


def _named(doc, key, parse, path):
    table = doc.get(key, {})
    _expect(isinstance(table, dict), f"{path}.{key}", "expected an object of named entries")
    return {name: parse(v, f"{path}.{key}.{name}") for name, v in table.items()}


def scenario_from_dict(doc: Any) -> Scenario:
    path = "$"
    _expect(isinstance(doc, dict), path, "scenario must be a JSON object")
    _expect(doc.get("schema") == SCHEMA_VERSION, f"{path}.schema",
            f"unsupported schema {doc.get('schema')!r}; expected {SCHEMA_VERSION}")
    name = doc.get("name")
    _expect(isinstance(name, str) and name, f"{path}.name", "expected a nonempty string")
    coords = doc.get("coordinates", [f"x{i}" for i in range(1, NVARS + 1)])
    _expect(isinstance(coords, list) and len(coords) == NVARS
            and all(isinstance(c, str) and c.isidentifier() for c in coords)
            and len(set(coords)) == NVARS,
            f"{path}.coordinates", "expected seven distinct identifier names")
    names = tuple(coords)
    orientation = doc.get("orientation", 1)
    _expect(orientation in (1, -1) and not isinstance(orientation, bool),
            f"{path}.orientation", "orientation must be 1 or -1")
    metric = _parse_metric(doc.get("metric"), f"{path}.metric")
    forms = _named(doc, "forms", lambda v, p: _parse_form(v, names, p), path)
    fields = _named(doc, "fields", lambda v, p: _parse_field(v, names, p), path)
    scalars = _named(doc, "scalars", lambda v, p: _poly(v, names, p), path)
    phi = doc.get("phi", "phi")
    _expect(isinstance(phi, str) and phi in forms, f"{path}.phi", f"unresolved form name {phi!r}")
    _expect(forms[phi].degree == 3, f"{path}.phi", "phi must name a 3-form")
    description = doc.get("description", "")
    _expect(isinstance(description, str), f"{path}.description", "expected a string")
    sc = Scenario(name, names, phi, forms, fields, scalars, [], orientation, metric, description)
    checks = doc.get("checks", [])
    _expect(isinstance(checks, list), f"{path}.checks", "expected a list")
    sc.checks = [_parse_check(c, sc, f"{path}.checks[{k}]") for k, c in enumerate(checks)]
    return sc


def parse_scenario(data: bytes | str) -> Scenario:
    if isinstance(data, bytes):
        try:
            data = data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ScenarioError("$", f"not UTF-8: {exc}") from None
    try:
        doc = json.loads(data)
    except json.JSONDecodeError as exc:
        raise ScenarioError("$", f"invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    return scenario_from_dict(doc)


def _form_json(f: KForm, names) -> dict:
    return {"degree": f.degree,
            "terms": [{"indices": list(i), "coeff": c.to_string(names)} for i, c in f.sorted_items()]}


def scenario_to_dict(sc: Scenario) -> dict:
    names = sc.coordinates
    doc: dict[str, Any] = {"schema": SCHEMA_VERSION, "name": sc.name}
    if sc.description:
        doc["description"] = sc.description
    doc["coordinates"] = list(names)
    doc["orientation"] = sc.orientation
    doc["metric"] = "identity" if sc.metric is None else [[str(x) for x in r] for r in sc.metric.entries]
    doc["phi"] = sc.phi
    doc["forms"] = {k: _form_json(f, names) for k, f in sc.forms.items()}
    doc["fields"] = {k: {names[i]: c.to_string(names) for i, c in enumerate(v.components) if c}
                     for k, v in sc.fields.items()}
    doc["scalars"] = {k: p.to_string(names) for k, p in sc.scalars.items()}
    doc["checks"] = [{k: [str(x) for x in v] if k == "point" else v for k, v in c.items()}
                     for c in sc.checks]
    return doc


def scenario_to_json(sc: Scenario) -> str:
    from .render import dumps
    return dumps(scenario_to_dict(sc))


_BUNDLE = "scenarios"


def bundled_names() -> list[str]:
    root = resources.files(__package__).joinpath(_BUNDLE)
    return sorted(p.name[:-5] for p in root.iterdir() if p.name.endswith(".json"))


def load_scenario(ref: str) -> Scenario:
    """Load a scenario from a path, or by the name of a bundled scenario."""
    p = Path(ref)
    if p.is_file():
        return parse_scenario(p.read_bytes())
    stem = ref[:-5] if ref.endswith(".json") else ref
    if stem in bundled_names():
        return parse_scenario(resources.files(__package__).joinpath(_BUNDLE, stem + ".json").read_bytes())
    raise FileNotFoundError(f"no scenario file or bundled scenario named {ref!r}")

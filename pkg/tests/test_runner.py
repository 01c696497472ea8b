import copy
import json

import pytest

from g2kit import e, one_form, standard_phi
from g2kit.report import SamplingSpec, Verdict
from g2kit.runner import (
    ScenarioError, bundled_names, load_scenario, parse_scenario, render_report,
    report_from_json, run_checks, scenario_to_dict, scenario_to_json,
)
from g2kit.runner.cli import main

BUNDLED = ["cy_times_r", "k4_times_r3", "r7_second", "r7_standard", "tstar_r3"]
FAST = SamplingSpec(grid=2, samples=16)


def base_doc():
    return {
        "schema": 1,
        "name": "tiny",
        "phi": "phi",
        "forms": {
            "phi": {"degree": 3, "terms": [
                {"indices": list(i), "coeff": str(c.constant_value())}
                for i, c in standard_phi().sorted_items()]},
            "alpha": {"degree": 1, "terms": [
                {"indices": [1], "coeff": "1"}, {"indices": [2], "coeff": "-x3"},
                {"indices": [4], "coeff": "-x5"}, {"indices": [6], "coeff": "-x7"}]},
        },
        "fields": {"R": {"x1": "1"}},
        "scalars": {"one": "1"},
        "checks": [{"type": "a_compatible", "alpha": "alpha", "R": "R"}],
    }


def parse_doc(doc):
    return parse_scenario(json.dumps(doc).encode())


def test_bundled_names():
    assert bundled_names() == BUNDLED


def test_r7_standard_contents():
    sc = load_scenario("r7_standard")
    assert sc.phi_form == standard_phi()
    assert sc.forms["alpha"] == one_form(["1", "-x3", "0", "-x5", "0", "-x7", "0"])
    kinds = [c["type"] for c in sc.checks]
    for kind in ("a_compatible", "b_compatible", "contact_g2", "torsion"):
        assert kind in kinds


def test_minimal_document_parses():
    sc = parse_doc(base_doc())
    assert sc.coordinates == ("x1", "x2", "x3", "x4", "x5", "x6", "x7")
    assert sc.metric is None and sc.orientation == 1


def _error(doc):
    with pytest.raises(ScenarioError) as info:
        parse_doc(doc)
    return info.value


def test_non_increasing_multi_index():
    doc = base_doc()
    doc["forms"]["alpha"] = {"degree": 3, "terms": [{"indices": [2, 2, 3], "coeff": "1"}]}
    err = _error(doc)
    assert "non-increasing multi-index" in str(err)
    assert err.path == "$.forms.alpha.terms[0].indices"


def test_unresolved_field_has_json_path():
    doc = base_doc()
    doc["checks"] = [{"type": "a_compatible", "alpha": "alpha", "R": "W"}]
    err = _error(doc)
    assert err.path == "$.checks[0].R" and "W" in err.message


@pytest.mark.parametrize("mutate, path, text", [
    (lambda d: d["checks"].append({"type": "frobnicate"}), "$.checks[1].type", "unknown check type"),
    (lambda d: d["fields"].update(R={"x1": "2**x1"}), "$.fields.R.x1", "malformed polynomial"),
    (lambda d: d["fields"].update(R={"q": "1"}), "$.fields.R.q", "unknown coordinate"),
    (lambda d: d.update(metric=[[1 if i == j else (1 if (i, j) == (0, 1) else 0) for j in range(7)]
                                for i in range(7)]), "$.metric", "not symmetric"),
    (lambda d: d.update(metric=[[-1 if i == j == 0 else int(i == j) for j in range(7)]
                                for i in range(7)]), "$.metric", "not positive definite"),
    (lambda d: d.update(schema=2), "$.schema", "unsupported schema"),
    (lambda d: d["forms"]["alpha"].update(degree=2), "$.forms.alpha.terms[0].indices", "degree-2"),
    (lambda d: d.update(phi="alpha"), "$.phi", "3-form"),
    (lambda d: d["checks"].append({"type": "torsion", "extra": 1}), "$.checks[1].extra", "unexpected"),
    (lambda d: d["checks"].append({"type": "contact_g2", "R": "R", "alpha": "alpha", "f": "one"}),
     "$.checks[1]", "needs argument 'g'"),
])
def test_located_errors(mutate, path, text):
    doc = base_doc()
    mutate(doc)
    err = _error(doc)
    assert err.path == path and text in err.message


def test_invalid_json_and_utf8():
    with pytest.raises(ScenarioError, match="invalid JSON"):
        parse_scenario(b"{not json")
    with pytest.raises(ScenarioError, match="UTF-8"):
        parse_scenario(b"\xff\xfe")


def test_list_form_fields_and_custom_names():
    doc = base_doc()
    doc["coordinates"] = ["a", "b", "c", "d", "f", "g", "h"]
    doc["forms"]["alpha"]["terms"] = [{"indices": [1], "coeff": "1"}, {"indices": [2], "coeff": "-c"},
                                      {"indices": [4], "coeff": "-f"}, {"indices": [6], "coeff": "-h"}]
    doc["fields"] = {"R": ["1", "0", "0", "0", "0", "0", "0"]}
    sc = parse_doc(doc)
    assert sc.forms["alpha"] == one_form(["1", "-x3", "0", "-x5", "0", "-x7", "0"])
    assert run_checks(sc, FAST).verdict == "proven"


@pytest.mark.parametrize("name", BUNDLED)
def test_bundled_scenarios_pass_and_round_trip(name):
    sc = load_scenario(name)
    report = run_checks(sc)
    assert report.verdict == Verdict.PROVEN.value, render_report(report)
    assert parse_scenario(scenario_to_json(sc)) == sc
    first = render_report(report, "json")
    assert render_report(run_checks(load_scenario(name)), "json") == first
    assert render_report(report_from_json(first), "json") == first


def test_r7_standard_contact_volume():
    report = run_checks(load_scenario("r7_standard"))
    a = next(r for r in report.results if r.kind == "a_compatible")
    assert a.report.derived["contact_volume"] == e(1, 2, 3, 4, 5, 6, 7) * 6


def test_tstar_checks():
    report = run_checks(load_scenario("tstar_r3"))
    kinds = {r.kind: r for r in report.results}
    assert kinds["a_compatible"].verdict is Verdict.PROVEN
    assert [c.verdict for c in kinds["torsion"].report.clauses] == [Verdict.PROVEN] * 2


def test_text_rendering():
    text = render_report(run_checks(load_scenario("r7_standard")))
    assert "  PASS d alpha = iota_R phi (exact)" in text.splitlines()
    assert text.startswith("scenario r7_standard: proven")


def test_failing_clause_json_has_residual_terms():
    doc = base_doc()
    doc["fields"]["R"] = {"x2": "1"}
    report = run_checks(parse_doc(doc), FAST)
    assert report.failed
    data = json.loads(render_report(report, "json"))
    clause = data["checks"][0]["report"]["clauses"][0]
    assert clause["verdict"] == "failed"
    assert clause["residual"]["form"]["terms"]
    text = render_report(report)
    assert "FAIL d alpha = iota_R phi: residual" in text


def test_empty_check_list():
    doc = base_doc()
    doc["checks"] = []
    report = run_checks(parse_doc(doc))
    assert report.verdict == "no checks"
    assert json.loads(render_report(report, "json"))["verdict"] == "no checks"


def test_check_errors_do_not_abort_the_run():
    doc = base_doc()
    doc["fields"]["Z"] = {"x1": "0"}
    doc["checks"] = [{"type": "acms", "R": "Z"}, {"type": "torsion"}]
    report = run_checks(parse_doc(doc), FAST)
    assert report.results[0].verdict is Verdict.FAILED
    assert "VanishingFieldError" in report.results[0].report.clauses[0].detail
    assert report.results[1].verdict is Verdict.PROVEN


def test_incompatible_metric_fails_every_check():
    doc = base_doc()
    doc["metric"] = [[4 if i == j else 0 for j in range(7)] for i in range(7)]
    report = run_checks(parse_doc(doc), FAST)
    assert report.structure_error and report.failed
    assert all(r.verdict is Verdict.FAILED for r in report.results)


def test_scenario_dict_is_stable():
    sc = load_scenario("k4_times_r3")
    doc = scenario_to_dict(sc)
    assert parse_doc(copy.deepcopy(doc)) == sc


# -- command line --------------------------------------------------------------

def sampled_doc(tmp_path):
    doc = base_doc()
    doc["forms"]["beta"] = {"degree": 1, "terms": [
        {"indices": [1], "coeff": "x2 + 2"}, {"indices": [2], "coeff": "-x2*x3 - 2*x3"},
        {"indices": [4], "coeff": "-x2*x5 - 2*x5"}, {"indices": [6], "coeff": "-x2*x7 - 2*x7"}]}
    doc["checks"] = [{"type": "contact", "alpha": "beta"}]
    path = tmp_path / "sampled.json"
    path.write_text(json.dumps(doc))
    return path


def test_cli_exit_codes(tmp_path, capsys):
    assert main(["verify", "r7_standard"]) == 0
    bad = base_doc()
    bad["fields"]["R"] = {"x2": "1"}
    p = tmp_path / "bad.json"
    p.write_text(json.dumps(bad))
    assert main(["verify", str(p), "--grid", "2"]) == 1
    broken = tmp_path / "broken.json"
    broken.write_text("{")
    assert main(["verify", str(broken)]) == 2
    assert main(["verify", "no_such_scenario"]) == 2
    sampled = sampled_doc(tmp_path)
    assert main(["verify", str(sampled), "--grid", "2", "--samples", "8"]) == 0
    assert main(["verify", str(sampled), "--grid", "2", "--samples", "8", "--strict"]) == 3
    capsys.readouterr()


def test_cli_json_report_and_seed(tmp_path, monkeypatch, capsys):
    sampled = sampled_doc(tmp_path)
    out = tmp_path / "r.json"
    assert main(["verify", str(sampled), "--report", "json", "--seed", "5", "-o", str(out)]) == 0
    data = json.loads(out.read_text())
    assert data["sampling"]["seed"] == 5
    monkeypatch.setenv("G2KIT_SEED", "9")
    assert main(["verify", str(sampled), "--report", "json", "--grid", "1"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["sampling"]["seed"] == 9 and data["sampling"]["grid"] == 1


def test_cli_list_and_show(capsys):
    assert main(["list"]) == 0
    out = capsys.readouterr().out
    assert all(name in out for name in BUNDLED)
    assert main(["show", "r7_second"]) == 0
    assert json.loads(capsys.readouterr().out)["name"] == "r7_second"

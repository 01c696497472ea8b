"""Scenario files, check orchestration and report rendering."""
from .render import render_report, report_from_dict, report_from_json, report_to_dict
from .run import CheckResult, RunReport, run_checks
from .scenario import (
    CHECK_SIGNATURES, Scenario, ScenarioError, bundled_names, load_scenario, parse_scenario,
    scenario_from_dict, scenario_to_dict, scenario_to_json,
)

__all__ = [
    "CHECK_SIGNATURES", "CheckResult", "RunReport", "Scenario", "ScenarioError",
    "bundled_names", "load_scenario", "parse_scenario", "render_report", "report_from_dict",
    "report_from_json", "report_to_dict", "run_checks", "scenario_from_dict",
    "scenario_to_dict", "scenario_to_json",
]

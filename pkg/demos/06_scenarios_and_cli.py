"""Scenario files bundle a G2 patch with named forms and fields and a list of
checks. The same runs are available from the command line as ``g2kit verify``."""
import subprocess
import sys

from g2kit import load_scenario, render_report, run_checks
from g2kit.report import SamplingSpec
from g2kit.runner import bundled_names

print("bundled:", ", ".join(bundled_names()))

sc = load_scenario("tstar_r3")
print(f"\n{sc.name}: {sc.description}")
report = run_checks(sc, SamplingSpec(samples=16))
print(render_report(report, "text"))

for args in (["list"], ["verify", "cy_times_r", "--samples", "8"]):
    proc = subprocess.run([sys.executable, "-m", "g2kit", *args], capture_output=True, text=True)
    print(f"$ g2kit {' '.join(args)}   (exit {proc.returncode})")
    print(proc.stdout)

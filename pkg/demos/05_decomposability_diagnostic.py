"""Why iota_Z phi can never be a decomposable 2-form.

For a unit Z, (iota_Z phi)^2 ^ phi = 6 |Z|^2 vol is nonzero, while the square of
any decomposable 2-form vanishes. The check reports the failed hypothesis with this
diagnostic and leaves its conclusions unasserted.
"""
from g2kit import G2Structure, check_decomposable_contraction, coordinate_field

s = G2Structure.standard()
report = check_decomposable_contraction(s, coordinate_field(7), coordinate_field(6), coordinate_field(1))
for c in report.clauses:
    line = f"  {c.verdict.value:>12}  {c.name}"
    if c.detail:
        line += f"  [{c.detail}]"
    print(line)
for key, value in report.derived.items():
    print(f"    {key} = {value}")

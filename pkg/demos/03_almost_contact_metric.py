"""An almost contact metric structure from a unit field via the cross product,
and the fundamental form comparison against d(alpha)."""
from fractions import Fraction

from g2kit import (
    G2Structure, build_acms, check_fundamental_form, constant_field, coordinate_field,
    one_form, verify_acs, verify_metric_structure,
)

s = G2Structure.standard()
# a rational unit vector: (2w, n - 1) / (n + 1) with n = |w|^2
w = [1, 2, 0, -1, 0, 3]
n = sum(x * x for x in w)
R = constant_field([Fraction(2 * x, n + 1) for x in w] + [Fraction(n - 1, n + 1)])
print("R =", R.pretty(), " |R|^2 =", s.norm2(R))

acms = build_acms(s, R)
print("alpha = R-flat =", acms.alpha)
print("J R = 0 and J^2 = -I + alpha (x) R:", verify_acs(acms.J, acms.R, acms.alpha).verdict.value)
print("g(Ju, Jv) = g(u, v) - alpha(u) alpha(v):", verify_metric_structure(acms).verdict.value)

# with R = d/dx1 the fundamental form g(J., .) is exactly d alpha0
alpha0 = one_form(["1", "-x3", "0", "-x5", "0", "-x7", "0"])
report = check_fundamental_form(s, coordinate_field(1), alpha0)
for c in report.clauses:
    print(f"  {c.verdict.value:>8}  {c.name}")

"""The flat G2 structure on R^7 and a contact form that is compatible with it
in both senses: d(alpha) = iota_R phi and alpha = iota_Y iota_X phi."""
from g2kit import (
    ContactG2Structure, G2Structure, VectorField, check_a_compatible, check_b_compatible,
    check_contact_g2, coordinate_field, d, interior_product, one_form, torsion_flags,
)

s = G2Structure.standard()
print("phi0 =", s.phi)
print("*phi0 =", s.star_phi)
print("closed, coclosed:", torsion_flags(s))

alpha = one_form(["1", "-x3", "0", "-x5", "0", "-x7", "0"])
R = coordinate_field(1)
print("\nalpha =", alpha)
print("d alpha =", d(alpha))
print("iota_R phi0 =", interior_product(R, s.phi))

# B-compatibility needs a pair of fields whose double contraction recovers alpha
X = coordinate_field(7)
Y = VectorField(["-x7", 0, "x5", 0, "-x3", -1, 0])
for report in (check_a_compatible(s, alpha, R), check_b_compatible(s, alpha, X, Y)):
    print(f"\n{report.title}: {report.verdict.value}")
    for c in report.clauses:
        print(f"  {c.verdict.value:>20}  {c.name}")

quint = check_contact_g2(ContactG2Structure(s, R, alpha, 1, 1))
print(f"\n{quint.title}: {quint.verdict.value}")
print("alpha ^ (d alpha)^3 =", quint.derived["contact_volume"])

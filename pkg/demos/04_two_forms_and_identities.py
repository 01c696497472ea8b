"""Splitting a 2-form into its 7- and 14-dimensional pieces, and the randomized
identity suite.

Under the orientation where (iota_u phi) ^ (iota_v phi) ^ phi = 6 g(u, v) vol, the
pieces satisfy *(phi ^ b7) = 2 b7 and *(phi ^ b14) = -b14.
"""
import random

from g2kit import (
    G2Structure, e, hodge_star, identity_suite, lambda2_ranks, project_lambda2, random_form, wedge,
)

s = G2Structure.standard()
beta = e(1, 2) + e(3, 4) * 2 - e(5, 6) * "x3"
split = project_lambda2(beta, s)
print("beta      =", beta)
print("part7     =", split.part7)
print("part14    =", split.part14)
print("*(phi ^ part7) - 2 part7  =", hodge_star(wedge(s.phi, split.part7)) - split.part7 * 2)
print("*(phi ^ part14) + part14  =", hodge_star(wedge(s.phi, split.part14)) + split.part14)
print("ranks:", lambda2_ranks(s))

rng = random.Random(1)
bad = sum(project_lambda2(b, s).part7 + project_lambda2(b, s).part14 != b
          for b in (random_form(rng, 2) for _ in range(50)))
print("\nrandom polynomial 2-forms that fail to reassemble:", bad)

suite = identity_suite(s, trials=100, seed=0)
print(f"\nidentity suite, 100 trials: {suite.verdict.value}")
for c in suite.clauses:
    print(f"  {c.verdict.value:>8}  {c.name}")

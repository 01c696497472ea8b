"""Recovering the metric from a 3-form.

The bilinear form B(u, v) vol = (iota_u phi) ^ (iota_v phi) ^ phi / 6 fixes g up to
scale. A rescaled or sign-flipped phi shows how the scale and the orientation move.
"""
import numpy as np

from g2kit import G2Structure, gram_from_phi, metric_from_phi, standard_phi, verify_metric_compat

phi = standard_phi()
ext = metric_from_phi(phi, (0.3, -0.2, 0.1, 0.0, 0.5, -0.7, 0.9))
print("g at a random point equals I:", np.allclose(ext.metric, np.eye(7), atol=1e-12))
print("volume scale", ext.volume_scale, "orientation", ext.orientation)

# 8 phi has B = 512 I, so |det B|^(1/9) = 128 and g = 512 I / 128 = 4 I
big = metric_from_phi(phi * 8)
print("\n8 phi: g = 4 I?", np.allclose(big.metric, 4 * np.eye(7)), "scale", round(big.volume_scale, 6))

flipped = metric_from_phi(-phi)
print("-phi induces orientation", flipped.orientation)
print("B for -phi, first row:", [str(x) for x in gram_from_phi(-phi)[0]])

s = G2Structure.standard()
report = verify_metric_compat(s.phi, s.metric, s.vol)
print("\nexact metric compatibility:", report.verdict.value)

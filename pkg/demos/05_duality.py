"""The theta -> -theta reflection pairing mirrored orderings with class I.

In coordinates (xi, theta = zeta - xi^2) the mirrored two-term family
sits at theta <= 0 and class I at theta >= 0. Reflecting theta maps one
onto the other with identical {alpha, gamma}; points on theta = 0 are
fixed. Spectra of a dual pair are computed side by side and simply
reported; no equality is claimed.
"""

from fractions import Fraction as F

import pdmkeo as pk

# fixed point: theta = 0 (single symmetric-term orderings are self-dual)
d = pk.to_duality(F(-1, 2), F(1, 4))
print(f"ZK point (-1/2, 1/4): theta = {d.theta}, dual = itself -> self-dual")

# a genuine pair at xi = -1/4
profile = pk.lorentzian(m0=1, lam=1)
report = pk.dual_pair_report(
    F(-1, 4), F(1, 16), profile, pk.zero_potential(), pk.Grid(-1.0, 1.0, 600), 4
)
print(f"\ndual pair at xi = {report.xi}, theta = +/-{report.theta}:")
print(f"  mirrored side at (xi, zeta) = {tuple(map(str, report.vr_point))}, "
      f"alpha/gamma = {[str(v) for v in report.vr_alpha_gamma]}")
print(f"  class-I  side at (xi, zeta) = {tuple(map(str, report.class_i_point))}, "
      f"alpha/gamma = {[str(v) for v in report.class_i_alpha_gamma]}")
print(f"  identical parameter sets: {report.parameter_identity}")

print("\n  k   mirrored side     class-I side      difference")
for k, (a, b) in enumerate(
    zip(report.vr_spectrum.eigenvalues, report.class_i_spectrum.eigenvalues)
):
    print(f"  {k}   {a:14.8f}   {b:14.8f}   {b - a:+.3e}")

print("\nnot every point has a dual partner inside the allowed region:")
try:
    pk.dual(pk.to_duality(F(-1, 2), F(0)))
except pk.errors.DualOutsideAllowedRegion as exc:
    print(f"  two-sided ordering at (-1/2, 0): {exc}")

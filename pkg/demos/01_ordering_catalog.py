"""Walk the catalog of named kinetic-operator orderings.

Every ordering is a weighted sum of blocks m^a p m^b p m^c. Two exact
weighted means pin it down completely when it is Hermitian: xi (mean of
gamma) and zeta (mean of alpha*gamma). Several historically distinct
orderings collapse onto the same (xi, zeta) point and are therefore the
same operator.
"""

from fractions import Fraction as F

import pdmkeo as pk

print(f"{'name':14s} {'xi':>6s} {'zeta':>6s} {'hermitian':>9s}   canonical expression")
print("-" * 88)
for name in ("BDD", "GW", "ZK", "MM", "W", "LK", "Lal", "YY",
             "vR(-1/4,-1/2)", "MB(-1/3)", "LKDA(-1/3)", "DA(-1/2)"):
    spec = pk.catalog(name)
    lp = pk.linear_params(spec)
    text = pk.print_canonical(spec)
    print(f"{name:14s} {str(lp.xi):>6s} {str(lp.zeta):>6s} {str(pk.is_hermitian(spec)):>9s}   {text}")

print()
print("LK and W share (-1/4, 0): same operator, different term lists.")
print("DA collapses to (0, 0) for every parameter value:")
for a in (F(-1, 2), F(1, 3), F(2)):
    print(f"  DA({a}): {pk.linear_params(pk.catalog('DA', a)).as_tuple()}")

print()
print("Expressions round-trip through the parser byte for byte:")
zk = pk.print_canonical(pk.catalog("ZK"))
print(f"  {zk!r} -> parse -> print -> {pk.print_canonical(pk.parse(zk))!r}")

"""Map the allowed (xi, zeta) region and its four overlapping classes.

Hermitian orderings live inside 1/4 >= -xi/2 >= zeta >= 0. The mirrored
two-term (vR) family covers zeta <= xi^2 only; classes I, II and III
cover the rest, overlapping along named boundary curves. The script
prints occupancy counts and, when matplotlib is available, saves a
scatter map colored by class membership.
"""

from collections import Counter
from fractions import Fraction as F

import pdmkeo as pk

RESOLUTION = 81

samples = pk.region_samples(RESOLUTION)
print(f"grid {RESOLUTION}x{RESOLUTION}: {len(samples)} points inside the allowed region")

counts = Counter()
for xi, zeta, labels in samples:
    counts[frozenset(lab.region for lab in labels)] += 1
print("\nclass-membership combinations:")
for combo, count in sorted(counts.items(), key=lambda kv: -kv[1]):
    print(f"  {'+'.join(sorted(combo)):12s} {count:6d}")

yy = pk.classify(F(-1, 3), F(1, 6))
print("\nthe (-1/3, 1/6) point (outside every mirrored-pair ordering):")
for lab in yy:
    print(f"  class {lab.region}, boundary flags {sorted(lab.boundaries)}")
print("inverted as class III:", pk.print_canonical(pk.invert(F(-1, 3), F(1, 6), "III")))

try:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
except ImportError:
    print("\nmatplotlib not installed; skipping the plot")
else:
    colors = {"vR": "tab:blue", "I": "tab:orange", "II": "tab:green", "III": "tab:red"}
    fig, ax = plt.subplots(figsize=(7, 5))
    for region, color in colors.items():
        xs = [float(xi) for xi, _, labels in samples if region in {l.region for l in labels}]
        zs = [float(zeta) for _, zeta, labels in samples if region in {l.region for l in labels}]
        ax.scatter(xs, zs, s=4, color=color, alpha=0.35, label=region)
    ax.set_xlabel("xi")
    ax.set_ylabel("zeta")
    ax.legend(loc="upper left")
    ax.set_title("class membership over the allowed region")
    fig.tight_layout()
    fig.savefig("region_map.png", dpi=150)
    print("\nwrote region_map.png")

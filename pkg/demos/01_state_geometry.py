"""
Bell-diagonal state geometry
============================

The correlation vector (r1, r2, r3) of a two-qubit Bell-diagonal state lives
in a tetrahedron with the four Bell projectors at its vertices.  Separable
states fill the octahedron |r1| + |r2| + |r3| <= 1, and the only states with
zero discord sit on the Cartesian axes.  This script samples the tetrahedron,
classifies every point and cross-checks the classification against the
partial-transpose criterion.
"""

import numpy as np

from qcorr import (
    CorrelationVector,
    RegionLabel,
    bd_to_density,
    classify_region,
    is_entangled_ppt,
)
from qcorr.sampling import random_bd_vector

rng = np.random.default_rng(0)

# Sample the tetrahedron uniformly via flat Dirichlet weights on the Bell basis.
points = [random_bd_vector(rng) for _ in range(4000)]
labels = [classify_region(r) for r in points]

counts = {label: labels.count(label) for label in RegionLabel}
print("region populations out of", len(points), "uniform samples:")
for label, n in counts.items():
    print("  %-24s %4d  (%.1f%%)" % (label.value, n, 100 * n / len(points)))

# The separable octahedron occupies exactly half of the tetrahedron volume,
# so the entangled fraction should hover around 50%.
entangled_fraction = counts[RegionLabel.ENTANGLED] / len(points)
print("entangled fraction: %.3f (expected ~0.5)" % entangled_fraction)

# For two qubits the octahedron test and the PPT criterion agree exactly.
mismatches = sum(
    1
    for r, label in zip(points, labels)
    if (label is RegionLabel.ENTANGLED) != is_entangled_ppt(bd_to_density(r))
)
print("octahedron test vs PPT criterion mismatches:", mismatches)

# The four vertices are rank-one Bell projectors.
for vertex in [(1, -1, 1), (-1, 1, 1), (1, 1, -1), (-1, -1, -1)]:
    w = np.linalg.eigvalsh(bd_to_density(CorrelationVector(*vertex)))
    print("vertex %s eigenvalues:" % (vertex,), np.round(w, 12))

# Optional 3-D picture of the sampled classification.
try:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig = plt.figure(figsize=(6, 6))
    ax = fig.add_subplot(projection="3d")
    colors = {
        RegionLabel.ENTANGLED: "goldenrod",
        RegionLabel.SEPARABLE_NONCLASSICAL: "seagreen",
        RegionLabel.CLASSICAL: "black",
    }
    for label in RegionLabel:
        xs = np.array([r.as_array() for r, l in zip(points, labels) if l is label])
        if len(xs):
            ax.scatter(xs[:, 0], xs[:, 1], xs[:, 2], s=3, c=colors[label], label=label.value)
    ax.set_xlabel("r1"), ax.set_ylabel("r2"), ax.set_zlabel("r3")
    ax.legend(loc="upper left", fontsize=8)
    fig.savefig("state_geometry.png", dpi=150, bbox_inches="tight")
    print("wrote state_geometry.png")
except ImportError:
    print("matplotlib not available; skipping the picture")

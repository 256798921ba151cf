"""Bound-state spectra of H = T + V and cross-ordering comparisons.

Spectra default to the staggered kinetic scheme (no odd-even grid
decoupling). Dual-pair spectra are computed and reported side by side
without asserting equality.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Mapping

import numpy as np
import scipy.linalg

from .classify import DualityParams, from_duality, invert
from .discretize import AssembledOperator, Grid, assemble_terms
from .errors import GridMismatch, GridTooLarge, KeoError, NotSymmetric
from .profiles import MassProfile

MAX_DENSE_N = 4000


@dataclass(frozen=True, eq=False)
class PotentialProfile:
    """External potential V(x) in energy units."""

    name: str
    v: Callable[[np.ndarray], np.ndarray]
    parameters: Mapping[str, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "parameters", dict(self.parameters))


def zero_potential() -> PotentialProfile:
    return PotentialProfile("zero", lambda x: np.zeros_like(np.asarray(x, dtype=float)))


def harmonic(k=1, x0=0) -> PotentialProfile:
    p = {"k": Fraction(k), "x0": Fraction(x0)}
    kf, x0f = float(p["k"]), float(p["x0"])

    def v(x):
        return 0.5 * kf * (np.asarray(x, dtype=float) - x0f) ** 2

    return PotentialProfile("harmonic", v, p)


POTENTIALS = {"zero": zero_potential, "harmonic": harmonic}


def make_potential(spec: str) -> PotentialProfile:
    """Build a potential from 'name' or 'name:key=value,...' text."""
    name, _, arg_text = spec.partition(":")
    name = name.strip()
    if name not in POTENTIALS:
        raise ValueError(f"unknown potential {name!r}; known: {', '.join(POTENTIALS)}")
    kwargs = {}
    if arg_text.strip():
        for item in arg_text.split(","):
            key, sep, value = item.partition("=")
            if not sep:
                raise ValueError(f"malformed potential parameter {item!r}")
            kwargs[key.strip()] = Fraction(value.strip())
    return POTENTIALS[name](**kwargs)


@dataclass(frozen=True, eq=False)
class SpectrumResult:
    """Lowest eigenvalues in ascending order plus solve metadata."""

    eigenvalues: tuple[float, ...]
    count_requested: int
    grid: Grid
    provenance: dict
    residuals: tuple[float, ...]


def hamiltonian(keo: AssembledOperator, potential) -> AssembledOperator:
    """H = T + diag(V). The potential is a PotentialProfile evaluated on the
    operator's grid, or another AssembledOperator on the same grid."""
    if isinstance(potential, AssembledOperator):
        if potential.grid != keo.grid:
            raise GridMismatch(
                f"operator grids differ: {keo.grid} vs {potential.grid}"
            )
        matrix = keo.matrix + potential.matrix
        v_name = potential.provenance.get("potential", "operator")
    else:
        v = np.asarray(potential.v(keo.grid.points), dtype=float)
        if not np.all(np.isfinite(v)):
            raise KeoError(f"potential {potential.name!r} is not finite on the grid")
        matrix = keo.matrix + np.diag(v)
        v_name = potential.name
    prov = dict(keo.provenance)
    prov["potential"] = v_name
    return AssembledOperator(matrix, keo.grid, keo.hbar, prov)


def solve(h: AssembledOperator, k: int) -> SpectrumResult:
    """Lowest k eigenvalues of a symmetric dense operator."""
    n = h.grid.n
    if n > MAX_DENSE_N:
        raise GridTooLarge(f"dense solve supports n <= {MAX_DENSE_N}, got {n}")
    if not 1 <= k <= n:
        raise KeoError(f"need 1 <= k <= n = {n}, got k = {k}")
    matrix = h.matrix
    if np.iscomplexobj(matrix):
        if np.max(np.abs(matrix.imag)) > 0:
            raise NotSymmetric(float(np.max(np.abs(matrix - matrix.T.conj()))))
        matrix = matrix.real
    scale = float(np.max(np.abs(matrix))) or 1.0
    asym = float(np.max(np.abs(matrix - matrix.T)))
    if asym > 1e-10 * scale:
        raise NotSymmetric(asym)
    vals, vecs = scipy.linalg.eigh(matrix, subset_by_index=(0, k - 1))
    residuals = tuple(
        float(np.linalg.norm(matrix @ vecs[:, i] - vals[i] * vecs[:, i])
              / np.linalg.norm(vecs[:, i]))
        for i in range(k)
    )
    return SpectrumResult(
        eigenvalues=tuple(float(v) for v in vals),
        count_requested=k,
        grid=h.grid,
        provenance=dict(h.provenance),
        residuals=residuals,
    )


def spectrum_of_spec(
    spec, profile: MassProfile, potential: PotentialProfile, grid: Grid,
    k: int, hbar: float = 1.0, scheme: str = "staggered",
) -> SpectrumResult:
    """Assemble T from an ordering, add V, and solve."""
    keo = assemble_terms(spec, profile, grid, hbar=hbar, scheme=scheme)
    return solve(hamiltonian(keo, potential), k)


def richardson(coarse: float, fine: float) -> tuple[float, float]:
    """Extrapolated value and error estimate for an O(h^2) quantity computed
    at spacing h (coarse) and h/2 (fine)."""
    extrapolated = fine + (fine - coarse) / 3.0
    return extrapolated, abs(fine - coarse) / 3.0


@dataclass(frozen=True, eq=False)
class DualPairReport:
    """Side-by-side spectra of a (xi, theta) dual pair; no equality asserted."""

    xi: Fraction
    theta: Fraction
    vr_point: tuple[Fraction, Fraction]
    class_i_point: tuple[Fraction, Fraction]
    vr_alpha_gamma: tuple
    class_i_alpha_gamma: tuple
    parameter_identity: bool
    vr_spectrum: SpectrumResult
    class_i_spectrum: SpectrumResult


def dual_pair_report(
    xi, theta, profile: MassProfile, potential: PotentialProfile,
    grid: Grid, k: int, hbar: float = 1.0,
) -> DualPairReport:
    """Solve both members of the theta <-> -theta pair: the side with
    zeta <= xi^2 inverted as a mirrored (vR) ordering, the other as class I."""
    xi, theta = Fraction(xi), Fraction(theta)
    mag = abs(theta)
    vr_xi, vr_zeta = from_duality(DualityParams(xi, -mag))
    i_xi, i_zeta = from_duality(DualityParams(xi, mag))
    vr_spec = invert(vr_xi, vr_zeta, "vR")
    i_spec = invert(i_xi, i_zeta, "I")
    vr_ag = frozenset((t.alpha, t.gamma) for t in vr_spec.terms)
    i_ag = frozenset((t.alpha, t.gamma) for t in i_spec.terms)
    vr_set = frozenset(v for pair in vr_ag for v in pair)
    i_set = frozenset(v for pair in i_ag for v in pair)
    return DualPairReport(
        xi=xi,
        theta=theta,
        vr_point=(vr_xi, vr_zeta),
        class_i_point=(i_xi, i_zeta),
        vr_alpha_gamma=tuple(sorted(vr_set)),
        class_i_alpha_gamma=tuple(sorted(i_set)),
        parameter_identity=vr_set == i_set,
        vr_spectrum=spectrum_of_spec(vr_spec, profile, potential, grid, k, hbar=hbar),
        class_i_spectrum=spectrum_of_spec(i_spec, profile, potential, grid, k, hbar=hbar),
    )

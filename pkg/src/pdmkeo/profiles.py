"""Smooth positive mass profiles with closed-form inverse-mass derivatives.

The kinetic assembly needs 1/m and its first two spatial derivatives
analytically; finite-difference derivatives would contaminate the O(h^2)
convergence oracles. Each profile is probed at construction: 1/m must be
positive and the supplied derivatives must agree with central differences.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Mapping

import numpy as np

_PROBE_WINDOW = (-1.0, 1.0)
_PROBE_POINTS = 21
_PROBE_H = 1e-4


@dataclass(frozen=True, eq=False)
class MassProfile:
    """Positive mass m(x) given through inv_m = 1/m and two derivatives."""

    name: str
    inv_m: Callable[[np.ndarray], np.ndarray]
    d_inv_m: Callable[[np.ndarray], np.ndarray]
    dd_inv_m: Callable[[np.ndarray], np.ndarray]
    parameters: Mapping[str, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "parameters", dict(self.parameters))
        _probe(self)

    def mass(self, x):
        return 1.0 / self.inv_m(x)


def _probe(profile: MassProfile) -> None:
    x = np.linspace(*_PROBE_WINDOW, _PROBE_POINTS)
    u = np.asarray(profile.inv_m(x), dtype=float)
    if not np.all(np.isfinite(u)) or np.any(u <= 0):
        raise ValueError(f"profile {profile.name!r}: 1/m must be finite and positive")
    h = _PROBE_H
    fd1 = (profile.inv_m(x + h) - profile.inv_m(x - h)) / (2 * h)
    fd2 = (profile.inv_m(x + h) - 2 * u + profile.inv_m(x - h)) / h**2
    scale = max(1.0, float(np.max(np.abs(u))))
    if np.max(np.abs(fd1 - profile.d_inv_m(x))) > 1e-5 * scale:
        raise ValueError(f"profile {profile.name!r}: d_inv_m disagrees with finite differences")
    if np.max(np.abs(fd2 - profile.dd_inv_m(x))) > 1e-3 * scale:
        raise ValueError(f"profile {profile.name!r}: dd_inv_m disagrees with finite differences")


def _params(**kwargs) -> dict[str, Fraction]:
    return {k: Fraction(v) for k, v in kwargs.items()}


def constant(m0=1) -> MassProfile:
    """m(x) = m0."""
    p = _params(m0=m0)
    u0 = 1.0 / float(p["m0"])
    if u0 <= 0:
        raise ValueError("m0 must be positive")
    return MassProfile(
        name="constant",
        inv_m=lambda x: u0 * np.ones_like(np.asarray(x, dtype=float)),
        d_inv_m=lambda x: np.zeros_like(np.asarray(x, dtype=float)),
        dd_inv_m=lambda x: np.zeros_like(np.asarray(x, dtype=float)),
        parameters=p,
    )


def lorentzian(m0=1, lam=1) -> MassProfile:
    """m(x) = m0 / (1 + lam x^2); inverse mass is the polynomial (1 + lam x^2)/m0."""
    p = _params(m0=m0, lam=lam)
    m0f, lamf = float(p["m0"]), float(p["lam"])
    if m0f <= 0 or lamf < 0:
        raise ValueError("need m0 > 0 and lam >= 0")
    return MassProfile(
        name="lorentzian",
        inv_m=lambda x: (1.0 + lamf * np.asarray(x, dtype=float) ** 2) / m0f,
        d_inv_m=lambda x: 2.0 * lamf * np.asarray(x, dtype=float) / m0f,
        dd_inv_m=lambda x: 2.0 * lamf / m0f * np.ones_like(np.asarray(x, dtype=float)),
        parameters=p,
    )


def _reciprocal_derivatives(m0f, f, f1, f2):
    """Derivatives of 1/(m0 f(x)) from f and its two derivatives."""

    def inv_m(x):
        return 1.0 / (m0f * f(x))

    def d_inv_m(x):
        return -f1(x) / (m0f * f(x) ** 2)

    def dd_inv_m(x):
        fx = f(x)
        return (2.0 * f1(x) ** 2 - fx * f2(x)) / (m0f * fx**3)

    return inv_m, d_inv_m, dd_inv_m


def gaussian_bump(m0=1, lam=1, sigma=1) -> MassProfile:
    """m(x) = m0 (1 + lam exp(-x^2/sigma^2)); a localized mass enhancement."""
    p = _params(m0=m0, lam=lam, sigma=sigma)
    m0f, lamf, sig = float(p["m0"]), float(p["lam"]), float(p["sigma"])
    if m0f <= 0 or sig <= 0 or lamf <= -1:
        raise ValueError("need m0 > 0, sigma > 0 and lam > -1")

    def g(x):
        return np.exp(-np.asarray(x, dtype=float) ** 2 / sig**2)

    def f(x):
        return 1.0 + lamf * g(x)

    def f1(x):
        x = np.asarray(x, dtype=float)
        return lamf * g(x) * (-2.0 * x / sig**2)

    def f2(x):
        x = np.asarray(x, dtype=float)
        return lamf * g(x) * (4.0 * x**2 / sig**4 - 2.0 / sig**2)

    inv_m, d_inv_m, dd_inv_m = _reciprocal_derivatives(m0f, f, f1, f2)
    return MassProfile("gaussian_bump", inv_m, d_inv_m, dd_inv_m, p)


def smoothed_step(m0=1, lam="1/2", sigma=1) -> MassProfile:
    """m(x) = m0 (1 + lam tanh(x/sigma)); a smooth interface, |lam| < 1."""
    p = _params(m0=m0, lam=lam, sigma=sigma)
    m0f, lamf, sig = float(p["m0"]), float(p["lam"]), float(p["sigma"])
    if m0f <= 0 or sig <= 0 or abs(lamf) >= 1:
        raise ValueError("need m0 > 0, sigma > 0 and |lam| < 1")

    def t(x):
        return np.tanh(np.asarray(x, dtype=float) / sig)

    def f(x):
        return 1.0 + lamf * t(x)

    def f1(x):
        return lamf * (1.0 - t(x) ** 2) / sig

    def f2(x):
        tx = t(x)
        return -2.0 * lamf * tx * (1.0 - tx**2) / sig**2

    inv_m, d_inv_m, dd_inv_m = _reciprocal_derivatives(m0f, f, f1, f2)
    return MassProfile("smoothed_step", inv_m, d_inv_m, dd_inv_m, p)


def cosine_bump(m0=1, lam=1, half_width=1) -> MassProfile:
    """m(x) = m0 / (1 + lam cos^2(pi x / (2 half_width))).

    The inverse-mass slope vanishes exactly at x = +-half_width, so on
    that interval boundary rows carry no first-order truncation mismatch;
    the profile of choice for clean convergence-order sweeps.
    """
    p = _params(m0=m0, lam=lam, half_width=half_width)
    m0f, lamf, lf = float(p["m0"]), float(p["lam"]), float(p["half_width"])
    if m0f <= 0 or lf <= 0 or lamf <= -1:
        raise ValueError("need m0 > 0, half_width > 0 and lam > -1")
    w = np.pi / (2.0 * lf)

    def inv_m(x):
        return (1.0 + lamf * np.cos(w * np.asarray(x, dtype=float)) ** 2) / m0f

    def d_inv_m(x):
        return -lamf * w * np.sin(2.0 * w * np.asarray(x, dtype=float)) / m0f

    def dd_inv_m(x):
        return -2.0 * lamf * w**2 * np.cos(2.0 * w * np.asarray(x, dtype=float)) / m0f

    return MassProfile("cosine_bump", inv_m, d_inv_m, dd_inv_m, p)


PROFILES = {
    "constant": constant,
    "lorentzian": lorentzian,
    "gaussian_bump": gaussian_bump,
    "smoothed_step": smoothed_step,
    "cosine_bump": cosine_bump,
}


def make_profile(spec: str) -> MassProfile:
    """Build a profile from 'name' or 'name:key=value,key=value' text."""
    name, _, arg_text = spec.partition(":")
    name = name.strip()
    if name not in PROFILES:
        raise ValueError(f"unknown profile {name!r}; known: {', '.join(PROFILES)}")
    kwargs = {}
    if arg_text.strip():
        for item in arg_text.split(","):
            key, sep, value = item.partition("=")
            if not sep:
                raise ValueError(f"malformed profile parameter {item!r}")
            kwargs[key.strip()] = Fraction(value.strip())
    return PROFILES[name](**kwargs)

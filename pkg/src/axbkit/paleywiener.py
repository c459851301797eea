"""Paley-Wiener subspaces, best approximation, and the Jackson machinery.

Bandlimitedness is defined spectrally against the discrete operator: f is
omega-bandlimited when its spectral measure is supported where
``sqrt(lambda) <= omega``, i.e. f lies in the range of the projection
``1_{[0, omega]}(Delta^{1/2})``.  On the Hilbert instantiation the best
approximation from the band is attained by the orthogonal projection, the
Bernstein inequality ``||Delta^{s/2} f|| <= omega^s ||f||`` is exact in the
discrete functional calculus, and the Riesz-Boas interpolation series

``i sqrt(Delta) f = (omega/pi^2) sum_k (-1)^{k-1}/(k-1/2)^2
                     exp(i (pi/omega)(k-1/2) sqrt(Delta)) f``

is checked with symmetric truncation and an explicit tail bound.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .grids import HalfLineFunction
from .spectral import DiscreteOperator, apply_multiplier

__all__ = [
    "BandLimit",
    "pw_project",
    "best_approx",
    "bernstein_check",
    "riesz_boas",
    "schrodinger_modulus",
    "jackson_check",
    "decay_slope",
]


@dataclass(frozen=True)
class BandLimit:
    """Bound on the spectrum of ``Delta^{1/2}``, i.e. on tau."""

    omega: float

    def __post_init__(self):
        if not self.omega > 0:
            raise ValueError("omega must be positive")


def pw_project(omega: float, f: HalfLineFunction, op: DiscreteOperator | None = None,
               backend: str = "matrix", **kw) -> HalfLineFunction:
    """Band projection ``1_{[0, omega]}(Delta^{1/2}) f``."""
    omega = BandLimit(omega).omega
    return apply_multiplier(
        lambda lam: (np.sqrt(np.maximum(lam, 0.0)) <= omega).astype(float),
        f, backend=backend, op=op, **kw,
    )


def best_approx(sigma: float, f: HalfLineFunction, op: DiscreteOperator) -> float:
    """Distance to the sigma-band: ``||f - P_sigma f||``, computed spectrally.

    Orthogonal projection attains the infimum in a Hilbert space, so this
    is the tail energy ``(sum_{sqrt(lam) > sigma} w_k)^{1/2}``.
    """
    lam, w = op.eigenvalues, op.spectral_weights(f.values)
    return float(np.sqrt(np.sum(w[np.sqrt(np.maximum(lam, 0.0)) > sigma])))


def bernstein_check(f: HalfLineFunction, omega: float, s_exponents, op: DiscreteOperator) -> dict:
    """Ratios ``||Delta^{s/2} f|| / (omega^s ||f||)`` for a bandlimited f."""
    lam, w = op.eigenvalues, op.spectral_weights(f.values)
    total = np.sum(w)
    ratios = {}
    for s in s_exponents:
        num = np.sqrt(np.sum(np.maximum(lam, 0.0) ** s * w))
        ratios[float(s)] = float(num / (omega ** s * np.sqrt(total))) if total > 0 else 0.0
    return {"ratios": ratios, "max_ratio": max(ratios.values()) if ratios else 0.0}


def riesz_boas(omega: float, f: HalfLineFunction, k_trunc: int, op: DiscreteOperator):
    """Truncated Riesz-Boas series for ``i sqrt(Delta) f`` on a bandlimited f.

    The sum runs over ``k in [-k_trunc+1, k_trunc]`` (symmetric about the
    half-integers).  Returns the series value, its relative deviation from
    ``i sqrt(Delta) f``, and the a-priori tail bound
    ``(omega/pi^2) * 2 * sum_{k > k_trunc} (k - 1/2)^{-2} * ||f||``.
    """
    if k_trunc < 1:
        raise ValueError("need k_trunc >= 1")
    lam = np.maximum(op.eigenvalues, 0.0)
    root = np.sqrt(lam)
    ks = np.arange(-k_trunc + 1, k_trunc + 1, dtype=float)
    signs = (-1.0) ** (ks - 1.0)
    inv_sq = 1.0 / (ks - 0.5) ** 2
    phases = np.exp(1j * np.outer(np.pi / omega * (ks - 0.5), root))
    multiplier = (omega / np.pi ** 2) * (signs * inv_sq) @ phases
    c = op.coeffs(f.values)
    series = f.with_values(op.synth(multiplier * c))
    exact = f.with_values(op.synth(1j * root * c))
    norm_exact = op.norm(exact.values)
    err = op.norm(series.values - exact.values) / max(norm_exact, 1e-300)
    tail = (omega / np.pi ** 2) * 2.0 / (k_trunc - 0.5) * op.norm(f.values)
    return series, float(err), float(tail)


def schrodinger_modulus(r: int, t: float, f: HalfLineFunction, op: DiscreteOperator,
                        n_tau: int = 64) -> float:
    """``sup_{0 <= tau <= t} ||(exp(i tau Delta) - I)^r f||`` via spectral weights.

    The unitary group makes each factor a pointwise phase, so the norm is
    ``(sum_k |e^{i tau lam_k} - 1|^{2r} w_k)^{1/2}``; the supremum is taken
    over a uniform tau grid including the endpoint (a lower bound).
    """
    if t < 0:
        raise ValueError("t must be nonnegative")
    if t == 0.0:
        return 0.0
    lam, w = op.eigenvalues, op.spectral_weights(f.values)
    taus = np.linspace(0.0, t, n_tau + 1)[1:]
    phase = np.abs(np.exp(1j * np.outer(taus, lam)) - 1.0) ** (2 * r)
    return float(np.sqrt(np.max(phase @ w)))


def decay_slope(sigmas, values, floor: float = 1e-11) -> float:
    """Log-log slope of a decay profile, ignoring entries at the numeric floor."""
    sigmas = np.asarray(sigmas, dtype=float)
    values = np.asarray(values, dtype=float)
    keep = values > floor
    if np.sum(keep) < 2:
        return float("nan")
    return float(np.polyfit(np.log(sigmas[keep]), np.log(values[keep]), 1)[0])


def jackson_check(sigma_list, r: int, f: HalfLineFunction, op: DiscreteOperator,
                  space) -> dict:
    """Empirical Jackson constant and the large-sigma decay slope.

    For every sigma the ratio ``E(sigma, f) / (Omega^r(1/sigma, f)
    + min(sigma^{-r}, 1) ||f||)`` is recorded; the slope is fitted over an
    adaptively chosen decade where the best-approximation error is neither
    saturated nor at the numeric floor.
    """
    from .moduli import modulus_mixed

    nf = space.norm(f)
    ratios = []
    errors = []
    for sigma in sigma_list:
        err = best_approx(sigma, f, op)
        om = modulus_mixed(space, r, 1.0 / sigma, f)
        denom = om + min(sigma ** (-r), 1.0) * nf
        ratios.append(err / max(denom, 1e-14 * max(nf, 1.0)))
        errors.append(err)
    errors = np.asarray(errors)
    sigmas = np.asarray(list(sigma_list), dtype=float)
    # decade choice: start where the error first drops below 0.5 ||f||
    active = np.where(errors < 0.5 * nf)[0]
    slope = float("nan")
    if active.size:
        lo = sigmas[active[0]]
        window = (sigmas >= lo) & (sigmas <= 10.0 * lo)
        slope = decay_slope(sigmas[window], errors[window], floor=1e-11 * max(nf, 1.0))
    return {
        "C_hat": float(np.max(ratios)),
        "ratios": [float(v) for v in ratios],
        "errors": [float(v) for v in errors],
        "slope": slope,
    }

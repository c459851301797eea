"""Dyadic spectral partitions, band frames, and band-side Besov norms.

Partition of unity: a smooth non-increasing cutoff g with g = 1 on [0, 1]
and g = 0 beyond 2 generates ``h(lam) = g(lam) - g(2 lam)`` supported in
[1/2, 2], and the telescoping family ``Q_0 = g``, ``Q_j = h(2^{-j} lam)``
with partial sums ``sum_{j<=J} Q_j(lam) = g(2^{-J} lam)``.  Applied through
the functional calculus this yields the Littlewood-Paley decomposition
``f = sum_j Q_j(Delta) f`` with the exact energy identity
``sum_j ||F_j(Delta) f||^2 = ||f||^2`` where ``F_j = sqrt(Q_j)``.

Band conventions.  The decomposition above is dyadic in the eigenvalue
``lambda`` of Delta.  Everything Besov-flavored in this module is instead
indexed dyadically in ``tau = sqrt(lambda)`` (the scale of Delta^{1/2}),
because the best-approximation scale, the Bernstein bound, and the
K-functional scale all live on the tau axis; mixing the two conventions
silently doubles exponents.  Every report states its convention.

Frames.  Band j collects the discrete eigenvectors with
``tau in [2^j, 2^{j+1})`` (band 0 takes [0, 2)), a tight frame with bounds
a = b = 1 for its span; bins are disjoint so the union is a tight frame
for the whole space and the global Parseval identity is exact.  A
redundant variant duplicates each atom (bounds a = b = 2) purely to
exercise the dual-frame computation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .grids import HalfLineFunction
from .spectral import DiscreteOperator

__all__ = [
    "g_cutoff",
    "h_cutoff",
    "partition_values",
    "full_band_count",
    "lp_decompose",
    "band_energies",
    "BandFrame",
    "build_band_frame",
    "band_frames",
    "frame_analysis",
    "frame_synthesis",
    "besov_norm_bands",
    "approx_space_norm",
    "direct_inverse_check",
]


def _ramp(t):
    """Smooth increasing 0 -> 1 transition on [0, 1] from exp(-1/t)."""
    t = np.clip(np.asarray(t, dtype=float), 0.0, 1.0)
    with np.errstate(divide="ignore", over="ignore"):
        lo = np.where(t > 0, np.exp(-1.0 / np.maximum(t, 1e-300)), 0.0)
        hi = np.where(t < 1, np.exp(-1.0 / np.maximum(1.0 - t, 1e-300)), 0.0)
    return lo / (lo + hi)


def g_cutoff(lam):
    """The concrete smooth cutoff: 1 on [0, 1], down to 0 across (1, 2)."""
    lam = np.asarray(lam, dtype=float)
    out = np.where(lam <= 1.0, 1.0, 0.0)
    mid = (lam > 1.0) & (lam < 2.0)
    out = np.where(mid, _ramp(2.0 - lam), out)
    return out


def h_cutoff(lam):
    return g_cutoff(lam) - g_cutoff(2.0 * np.asarray(lam, dtype=float))


def partition_values(J: int, lam) -> np.ndarray:
    """Values of ``Q_0 .. Q_J`` at lam; axis 0 indexes the band."""
    lam = np.asarray(lam, dtype=float)
    if np.any(lam < 0):
        raise ValueError("lambda must be nonnegative")
    rows = [g_cutoff(lam)]
    for j in range(1, J + 1):
        rows.append(h_cutoff(2.0 ** (-j) * lam))
    return np.stack(rows)


def _q_band(j: int, lam) -> np.ndarray:
    lam = np.asarray(lam, dtype=float)
    if j == 0:
        return g_cutoff(lam)
    return np.maximum(h_cutoff(2.0 ** (-j) * lam), 0.0)


def full_band_count(op: DiscreteOperator, convention: str = "lambda") -> int:
    """Smallest J with ``g(2^{-J} .) = 1`` on the resolved spectrum."""
    top = float(np.max(op.eigenvalues))
    if convention == "tau":
        top = math.sqrt(max(top, 0.0))
    return max(0, math.ceil(math.log2(max(top, 1.0))))


def lp_decompose(f: HalfLineFunction, op: DiscreteOperator, J: int | None = None):
    """Littlewood-Paley pieces ``Q_j(Delta) f`` for j = 0 .. J (lambda-dyadic).

    With the default J the partial sums telescope to 1 on the whole
    resolved spectrum, so the reconstruction ``sum_j Q_j(Delta) f = f`` is
    exact up to roundoff.  Returns the list of band functions.
    """
    if J is None:
        J = full_band_count(op, "lambda")
    return [f.with_values(op.apply_fn(lambda lam, j=j: _q_band(j, lam), f.values))
            for j in range(J + 1)]


def band_energies(f: HalfLineFunction, op: DiscreteOperator, J: int | None = None,
                  convention: str = "lambda") -> np.ndarray:
    """``||F_j(Delta) f||`` for j = 0 .. J, exact through the spectral weights."""
    if J is None:
        J = full_band_count(op, convention)
    lam = np.maximum(op.eigenvalues, 0.0)
    arg = np.sqrt(lam) if convention == "tau" else lam
    w = op.spectral_weights(f.values)
    return np.array([math.sqrt(float(np.sum(_q_band(j, arg) * w))) for j in range(J + 1)])


@dataclass
class BandFrame:
    """A frame for the span of the eigenvectors inside one tau-dyadic bin.

    ``eigen_indices`` selects the participating eigenvectors; ``amat``
    holds the atoms' coefficients against them (columns are atoms), so the
    orthonormal construction is the identity matrix.
    """

    j: int
    tau_lo: float
    tau_hi: float
    eigen_indices: np.ndarray
    amat: np.ndarray = field(repr=False)
    bounds: tuple[float, float] = (1.0, 1.0)
    convention: str = "tau"

    @property
    def n_atoms(self) -> int:
        return self.amat.shape[1]

    def analysis(self, f: HalfLineFunction, op: DiscreteOperator) -> np.ndarray:
        """Coefficients ``<f, Phi_k>`` for every atom of this band."""
        c = op.coeffs(f.values)
        return self.amat.conj().T @ c[self.eigen_indices]

    def atom(self, k: int, op: DiscreteOperator) -> HalfLineFunction:
        full = np.zeros(op.eigenvalues.shape[0], dtype=complex)
        full[self.eigen_indices] = self.amat[:, k]
        grid = op.meta["grid"]
        return HalfLineFunction(grid, op.synth(full))

    def estimated_bounds(self) -> tuple[float, float]:
        """Extremal nonzero eigenvalues of the frame operator on the span."""
        if self.n_atoms == 0:
            return (0.0, 0.0)
        gram = self.amat @ self.amat.conj().T
        eigs = np.linalg.eigvalsh(gram)
        nonzero = eigs[eigs > 1e-12 * max(eigs.max(), 1.0)]
        if nonzero.size == 0:
            return (0.0, 0.0)
        return (float(nonzero.min()), float(nonzero.max()))

    def dual(self) -> "BandFrame":
        """Canonical dual frame: ``S^+ Phi_k`` with S the frame operator."""
        if self.n_atoms == 0:
            return self
        S = self.amat @ self.amat.conj().T
        damat = np.linalg.pinv(S, hermitian=True) @ self.amat
        lo, hi = self.bounds
        dual_bounds = (1.0 / hi if hi > 0 else 0.0, 1.0 / lo if lo > 0 else 0.0)
        return BandFrame(self.j, self.tau_lo, self.tau_hi, self.eigen_indices,
                         damat, dual_bounds, self.convention)


def _tau_bin(j: int) -> tuple[float, float]:
    return (0.0, 2.0) if j == 0 else (2.0 ** j, 2.0 ** (j + 1))


def build_band_frame(op: DiscreteOperator, j: int, redundant: bool = False) -> BandFrame:
    """Frame for tau-bin j from the discrete eigenvectors (tight by default)."""
    lo, hi = _tau_bin(j)
    tau = np.sqrt(np.maximum(op.eigenvalues, 0.0))
    idx = np.where((tau >= lo) & (tau < hi))[0]
    eye = np.eye(idx.size)
    if redundant:
        amat = np.concatenate([eye, eye], axis=1)
        bounds = (2.0, 2.0)
    else:
        amat = eye
        bounds = (1.0, 1.0)
    if idx.size == 0:
        bounds = (0.0, 0.0)
    return BandFrame(j, lo, hi, idx, amat, bounds)


def band_frames(op: DiscreteOperator, J: int | None = None, redundant: bool = False):
    if J is None:
        J = full_band_count(op, "tau")
    return [build_band_frame(op, j, redundant=redundant) for j in range(J + 1)]


def frame_analysis(f: HalfLineFunction, frames, op: DiscreteOperator):
    """Per-band coefficient arrays ``<f, Phi^j_k>``."""
    return [fr.analysis(f, op) for fr in frames]


def frame_synthesis(coefficients, duals, op: DiscreteOperator) -> HalfLineFunction:
    """Reconstruction ``sum_{j,k} c^j_k Psi^j_k`` from dual-frame atoms."""
    total = np.zeros(op.eigenvalues.shape[0], dtype=complex)
    grid = op.meta["grid"]
    for cvec, fr in zip(coefficients, duals):
        if fr.n_atoms == 0:
            continue
        total[fr.eigen_indices] += fr.amat @ cvec
    return HalfLineFunction(grid, op.synth(total))


def _lq(values, q: float) -> float:
    vals = np.asarray(values, dtype=float)
    if math.isinf(q):
        return float(np.max(vals)) if vals.size else 0.0
    return float(np.sum(vals ** q) ** (1.0 / q))


def besov_norm_bands(f: HalfLineFunction, op: DiscreteOperator, alpha: float, q: float,
                     variant: str = "projections") -> float:
    """Band-side Besov norms, all indexed dyadically in tau.

    * ``approx``: ``||f|| + lq over j of 2^{j alpha} E(2^j, f)`` with E the
      best approximation from the tau-band;
    * ``projections``: ``lq of 2^{j alpha} ||F_j(Delta^{1/2}) f||`` (the
      j = 0 band plays the role of the missing ``||f||`` term);
    * ``frames``: ``lq of 2^{j alpha} (sum_k |<f, Phi^j_k>|^2)^{1/2}`` with
      the tight band frames.
    """
    if alpha <= 0:
        raise ValueError("alpha must be positive")
    if q < 1:
        raise ValueError("q must be >= 1")
    J = full_band_count(op, "tau")
    js = np.arange(J + 1)
    if variant == "approx":
        from .paleywiener import best_approx

        vals = [2.0 ** (j * alpha) * best_approx(2.0 ** j, f, op) for j in js]
        return op.norm(f.values) + _lq(vals, q)
    if variant == "projections":
        energies = band_energies(f, op, J, convention="tau")
        return _lq([2.0 ** (j * alpha) * energies[j] for j in js], q)
    if variant == "frames":
        frames = band_frames(op, J)
        vals = []
        for j, fr in enumerate(frames):
            mass = float(np.sum(np.abs(fr.analysis(f, op)) ** 2))
            vals.append(2.0 ** (j * alpha) * math.sqrt(mass))
        return _lq(vals, q)
    raise ValueError(f"unknown variant {variant!r}")


def approx_space_norm(f: HalfLineFunction, op: DiscreteOperator, alpha: float, q: float,
                      scale_list=None) -> float:
    """Approximation-space quasi-norm from best approximations at given scales.

    The approximating family is the union of the Paley-Wiener bands with
    quasi-norm ``inf { omega : f in PW_omega }``, so the distance at
    budget t is exactly ``best_approx(t, f)``.
    """
    from .paleywiener import best_approx

    if scale_list is None:
        J = full_band_count(op, "tau")
        scale_list = 2.0 ** np.arange(0, J + 1, dtype=float)
    scale_list = np.asarray(scale_list, dtype=float)
    vals = [t ** alpha * best_approx(t, f, op) for t in scale_list]
    if math.isinf(q):
        return float(np.max(vals))
    dlog = np.log(2.0)
    return float((np.sum(np.asarray(vals) ** q) * dlog) ** (1.0 / q))


def direct_inverse_check(f: HalfLineFunction, op: DiscreteOperator, r: int,
                         space, alpha: float = None, q: float = 2.0) -> dict:
    """Empirical constants of the direct (Jackson) and inverse (Bernstein) embeddings.

    Reports the Jackson-hypothesis constant ``max_t t^r E(t, f) / ||f||_graph``,
    the Bernstein margin ``||Delta^{r/2} f|| / (omega_f^r ||f||)`` with
    ``omega_f`` the spectral quasi-norm of f, and the two one-sided ratios
    between the interpolation-space norm and the approximation-space norm.
    """
    from .moduli import BesovParams, besov_norm
    from .paleywiener import best_approx

    if alpha is None:
        alpha = r / 2.0
    lam = np.maximum(op.eigenvalues, 0.0)
    w = op.spectral_weights(f.values)
    total = float(np.sum(w))
    graph = op.norm(f.values) + float(np.sqrt(np.sum(lam ** r * w)))
    J = full_band_count(op, "tau")
    scales = 2.0 ** np.arange(0, J + 1, dtype=float)
    jackson_hat = max(t ** r * best_approx(t, f, op) / graph for t in scales)
    significant = w > 1e-24 * max(total, 1e-300)
    omega_f = float(np.sqrt(np.max(lam[significant]))) if np.any(significant) else 0.0
    bern = float(np.sqrt(np.sum(lam ** r * w)))
    bern_margin = bern / max(omega_f ** r * math.sqrt(total), 1e-300)
    interp = besov_norm(space, f, BesovParams(alpha, q, r), method="k")
    approx = approx_space_norm(f, op, alpha, q, scales)
    return {
        "jackson_hypothesis_hat": float(jackson_hat),
        "bernstein_margin": bern_margin,
        "omega_quasi_norm": omega_f,
        "interp_norm": interp,
        "approx_norm": approx,
        "interp_over_approx": interp / max(approx, 1e-300),
        "approx_over_interp": approx / max(interp, 1e-300),
    }

import math

import numpy as np
import pytest

from axbkit.grids import HalfLineFunction, LogGrid, SpectralGrid
from axbkit.halfline import xp_norm
from axbkit.spectral import (
    KL_CONSTANT,
    Spectrum,
    UnresolvedSpectrumWarning,
    apply_multiplier,
    build_matrix_laplacian,
    estimate_kl_constant,
    fourier_diff_matrix,
    kernel_leakage,
    kl_forward,
    kl_inverse,
    macdonald_kernel,
    spectral_measure,
)


def test_macdonald_against_scipy_real_order():
    import scipy.special as sps

    for x in (0.5, 1.0, 5.0, 20.0):
        assert macdonald_kernel(0.0, x) == pytest.approx(float(sps.k0(x)), rel=1e-12)


def test_macdonald_against_mpmath_imaginary_order():
    mpmath = pytest.importorskip("mpmath")
    for tau in (0.5, 2.0):
        for x in (0.01, 1.0, 3.0):
            expected = float(mpmath.re(mpmath.besselk(1j * tau, mpmath.mpf(x))))
            assert macdonald_kernel(tau, x) == pytest.approx(expected, rel=1e-11)


def test_macdonald_asymptotic_bound():
    # K_{i tau}(x) <= K_0(x) ~ sqrt(pi / 2x) e^{-x} for large x
    x = 25.0
    bound = math.sqrt(math.pi / (2 * x)) * math.exp(-x) * 1.05
    val = macdonald_kernel(1.0, x)
    assert 0.0 < val <= bound


def test_macdonald_rejects_nonpositive_x():
    with pytest.raises(ValueError):
        macdonald_kernel(1.0, -2.0)


def test_fourier_diff_matrix_antisymmetric_and_accurate():
    n, h = 128, 0.1
    D = fourier_diff_matrix(n, h)
    np.testing.assert_allclose(D, -D.T, atol=1e-16)
    u = np.arange(n) * h
    length = n * h
    f = np.sin(2 * np.pi * 3 * u / length)
    df = 2 * np.pi * 3 / length * np.cos(2 * np.pi * 3 * u / length)
    np.testing.assert_allclose(D @ f, df, atol=1e-11)


def test_operator_invariants(grid, op):
    assert float(np.min(op.eigenvalues)) > -1e-10
    assert op.hermitian_residual() < 1e-10
    # ground state of the discretized -d^2/du^2 + e^{2u}: sign-definite up
    # to the spectral discretization floor in the deep-barrier region
    g0 = op.eigenvectors[:, 0]
    g0 = g0 * np.sign(g0[np.argmax(np.abs(g0))])
    neg_mass = float(np.sum(np.minimum(g0, 0.0) ** 2) / np.sum(g0 ** 2))
    assert neg_mass < 1e-4


def test_identity_multiplier(grid, op, f_lg):
    out = apply_multiplier(lambda lam: np.ones_like(lam), f_lg, "matrix", op=op)
    assert xp_norm(out - f_lg) / xp_norm(f_lg) < 1e-12


def test_spectral_measure_eigenvector(grid, op):
    k = 7
    v = HalfLineFunction(grid, op.synth(np.eye(op.eigenvalues.size)[:, k]))
    lam, w = spectral_measure(v, op)
    assert w[k] == pytest.approx(1.0, rel=1e-12)
    others = np.delete(w, k)
    assert np.max(others) < 1e-20


def test_spectral_measure_parseval(grid, op, f_lg):
    _, w = spectral_measure(f_lg, op)
    assert abs(float(np.sum(w)) - xp_norm(f_lg) ** 2) / xp_norm(f_lg) ** 2 < 1e-12


def test_spectral_measure_band_concentration(grid, op, f_lg):
    band = apply_multiplier(lambda lam: ((lam >= 1.0) & (lam <= 9.0)).astype(float),
                            f_lg, "matrix", op=op)
    lam, w = spectral_measure(band, op)
    outside = np.sum(w[(lam < 1.0) | (lam > 9.0)])
    assert outside < 1e-10 * np.sum(w)


def test_spectral_measure_grid_mismatch(op):
    other = LogGrid(-12.0, 6.0, 128)
    g = HalfLineFunction(other, np.exp(-other.u ** 2))
    with pytest.raises(ValueError):
        spectral_measure(g, op)


def test_kl_roundtrip_and_parseval(grid, sgrid, f_lg):
    rt = kl_inverse(kl_forward(f_lg, sgrid), grid)
    assert xp_norm(rt - f_lg) / xp_norm(f_lg) < 1e-5
    assert kernel_leakage(f_lg, sgrid) < 1e-3


def test_kl_forward_zero(grid, sgrid):
    spec = kl_forward(HalfLineFunction(grid, np.zeros(grid.n)), sgrid)
    assert np.all(spec.coeffs == 0.0)


def test_kl_bump_localization(grid, sgrid):
    # synthesize from a narrow spectral bump; the forward transform must
    # recover its location within one grid step
    tau0 = 2.0
    bump = np.exp(-((sgrid.tau - tau0) ** 2) / (2 * 0.2 ** 2))
    f = kl_inverse(Spectrum(sgrid, bump), grid)
    spec = kl_forward(f, sgrid)
    peak = sgrid.tau[int(np.argmax(np.abs(spec.coeffs)))]
    assert abs(peak - tau0) <= sgrid.step + 1e-12


def test_heat_multiplier_two_backends(grid, sgrid, op, f_lg):
    heat_m = apply_multiplier(lambda lam: np.exp(-lam), f_lg, "matrix", op=op)
    heat_k = apply_multiplier(lambda lam: np.exp(-lam), f_lg, "kernel", sgrid=sgrid)
    assert xp_norm(heat_k - heat_m) / xp_norm(heat_m) < 1e-3


def test_multiplier_product_rule(grid, op, f_lg):
    F = lambda lam: np.exp(-lam)
    G = lambda lam: 1.0 / (1.0 + lam)
    fg = apply_multiplier(lambda lam: F(lam) * G(lam), f_lg, "matrix", op=op)
    gf = apply_multiplier(G, apply_multiplier(F, f_lg, "matrix", op=op), "matrix", op=op)
    assert xp_norm(fg - gf) / xp_norm(fg) < 1e-12


def test_unitary_group_isometry(grid, op, f_lg):
    out = apply_multiplier(lambda lam: np.exp(1j * 0.7 * lam), f_lg, "matrix", op=op)
    assert abs(xp_norm(out) - xp_norm(f_lg)) / xp_norm(f_lg) < 1e-10


def test_kernel_backend_flags_unresolved_input(grid, sgrid):
    # a sharply localized profile has dilation content far above tau_max
    f = HalfLineFunction(grid, np.exp(-((grid.u - 1.0) ** 2) / (2 * 0.05 ** 2)))
    f = f * (1.0 / xp_norm(f))
    assert kernel_leakage(f, sgrid) > 1e-3
    with pytest.warns(UnresolvedSpectrumWarning):
        apply_multiplier(lambda lam: np.exp(-lam), f, "kernel", sgrid=sgrid)


def test_kl_constant_least_squares(grid, sgrid):
    fs = [
        HalfLineFunction(grid, np.exp(-((grid.u + 3.0) ** 2) / 2.0)),
        HalfLineFunction(grid, np.exp(-((grid.u + 5.0) ** 2) / 4.0)),
        HalfLineFunction(grid, grid.x * np.exp(-grid.x)),
    ]
    fit = estimate_kl_constant(grid, sgrid, fs)
    assert fit == pytest.approx(KL_CONSTANT, rel=1e-8)


def test_cap_enforced():
    with pytest.raises(ValueError):
        build_matrix_laplacian(LogGrid(-12.0, 6.0, 4096))


def test_kernel_table_disk_cache(tmp_path, monkeypatch):
    import os

    import axbkit.spectral as spec

    monkeypatch.setenv("AXBKIT_CACHE_DIR", str(tmp_path))
    spec.clear_caches()
    grid = LogGrid(-4.0, 2.0, 32)
    sgrid = SpectralGrid(6.0, 48)
    first = spec.kernel_table(grid, sgrid)
    files = [p for p in os.listdir(tmp_path) if p.startswith("ktable_")]
    assert len(files) == 1
    spec.clear_caches()
    second = spec.kernel_table(grid, sgrid)  # reloaded from disk
    np.testing.assert_array_equal(first, second)
    spec.clear_caches()

"""Acceptance suite: one test per criterion, one PASS/FAIL line each.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the per-criterion
report lines.

Criterion 4 (Fourier-preset convergence-order ratios) is kept faithful to
its stated protocol and FAILS BY DESIGN: for Gaussian inputs the quadrature
converges faster than any power of 1/n and the measured error sits at the
double-precision floor (~1e-15) for every n in the tested range, so no
error(n)/error(2n) ratio near 2 exists.  A 1/n rate is an upper bound for a
wider function class, not a rate attained on Gaussians.  See test_04 for
the measured numbers.
"""
import math
import time

import numpy as np

from xft import (
    FrftOrder,
    GaussianParams,
    LctParams,
    QuadratureConfig,
    Signal,
    apply_dft,
    apply_scaled_fourier,
    asymptotic_zeros,
    dense_lct_matrix,
    direct_quadrature_lct,
    fast_lct,
    frft_matrix,
    gaussian_lct_closed_form,
    gaussian_sample,
    naive_dft,
    plan_dft,
    quadrature_on_nodes,
    xft_fourier,
)
from xft.calibration import (
    FIGURE1_GAUSSIAN, FIGURE1_PARAMS, FIGURE1_N, FIGURE1_MAX_ABS,
    FIGURE2_GAUSSIAN, FIGURE2_PARAMS, FIGURE2_N, FIGURE2_MAX_ABS,
)
from xft.kernel import DFT_SIGN

SQRT_2PI = math.sqrt(2 * math.pi)


def report(number, description, ok, detail):
    print(f"{'PASS' if ok else 'FAIL'} criterion {number}: {description} ({detail})")
    return ok


def random_unimodular(rng):
    b = rng.uniform(0.1, 100.0) * rng.choice([-1.0, 1.0])
    a = rng.uniform(-2.0, 2.0)
    d = rng.uniform(-2.0, 2.0)
    return LctParams(a, b, (a * d - 1.0) / b, d)


def central_slice(n):
    return slice(n // 10, (9 * n) // 10)


def test_01_fast_dense_equivalence():
    rng = np.random.default_rng(2024)
    param_sets = [random_unimodular(rng) for _ in range(20)]
    worst = 0.0
    for n in (8, 64, 256):
        sig = Signal(asymptotic_zeros(n),
                     rng.normal(size=n) + 1j * rng.normal(size=n))
        for params in param_sets:
            fast = fast_lct(params, sig).values
            ref = dense_lct_matrix(n, params).apply(sig.values)
            worst = max(worst, float(np.linalg.norm(fast - ref)
                                     / np.linalg.norm(ref)))
    ok = worst <= 1e-12
    assert report(1, "fast path equals dense matrix (rel L2 <= 1e-12)",
                  ok, f"worst rel L2 = {worst:.3e} over 20 params x n in 8/64/256")


def _figure_error(g, params, n):
    res = fast_lct(params, gaussian_sample(g, asymptotic_zeros(n)))
    sl = central_slice(n)
    oracle = quadrature_on_nodes(params, g.evaluate, res.output_nodes[sl],
                                 QuadratureConfig.for_gaussian(g), threads=1)
    return float(np.max(np.abs(res.values[sl] - oracle)))


def test_02_figure1_reproduction():
    err = _figure_error(FIGURE1_GAUSSIAN, FIGURE1_PARAMS, FIGURE1_N)
    ok = err <= FIGURE1_MAX_ABS
    assert report(2, "figure-1 configuration vs quadrature oracle (central 80%)",
                  ok, f"max-abs = {err:.3e}, frozen threshold {FIGURE1_MAX_ABS:.2e}")


def test_03_figure2_reproduction():
    err = _figure_error(FIGURE2_GAUSSIAN, FIGURE2_PARAMS, FIGURE2_N)
    ok = err <= FIGURE2_MAX_ABS
    assert report(3, "figure-2 Fresnel configuration vs quadrature oracle",
                  ok, f"max-abs = {err:.3e}, frozen threshold {FIGURE2_MAX_ABS:.2e}")


def test_04_convergence_order_fourier():
    # Faithful to the stated protocol; red by design (see module docstring).
    g = GaussianParams(1.0, 0.0, 0.0)
    errors = {}
    for n in (128, 256, 512, 1024):
        res = xft_fourier(gaussian_sample(g, asymptotic_zeros(n)))
        oracle = np.sqrt(np.pi) * np.exp(-res.output_nodes ** 2 / 4)
        errors[n] = float(np.max(np.abs(res.values - oracle)))
    ratios = {n: errors[n] / errors[2 * n] for n in (128, 256, 512)}
    ok = all(1.6 <= r <= 2.4 for r in ratios.values())
    detail = ", ".join(f"e({n})={errors[n]:.2e}" for n in errors)
    detail += "; ratios " + ", ".join(f"{r:.2f}" for r in ratios.values())
    detail += " -- errors are at the rounding floor, no 1/n regime exists"
    assert report(4, "error(n)/error(2n) in [1.6, 2.4] for the Fourier preset",
                  ok, detail)


def test_05_dense_frft_properties():
    n = 32
    rng = np.random.default_rng(5)
    ident = frft_matrix(n, FrftOrder(1.0)).entries
    identity_err = float(np.max(np.abs(ident - SQRT_2PI * np.eye(n))))

    group_err = 0.0
    for _ in range(10):
        raw = rng.normal(size=4)
        z = complex(raw[0], raw[1])
        w = complex(raw[2], raw[3])
        z /= max(1.0, abs(z))
        w /= max(1.0, abs(w))
        fz = frft_matrix(n, FrftOrder(z)).entries
        fw = frft_matrix(n, FrftOrder(w)).entries
        fzw = frft_matrix(n, FrftOrder(z * w)).entries
        group_err = max(group_err, float(np.max(np.abs(fz @ fw - SQRT_2PI * fzw))))

    unitary_err = 0.0
    for angle in rng.uniform(0, 2 * np.pi, size=5):
        f = frft_matrix(n, FrftOrder(np.exp(1j * angle))).entries / SQRT_2PI
        unitary_err = max(unitary_err,
                          float(np.max(np.abs(f @ np.conj(f.T) - np.eye(n)))))

    ok = identity_err <= 1e-12 and group_err <= 1e-8 and unitary_err <= 1e-9
    assert report(5, "dense fractional-matrix identity/group-law/unitarity",
                  ok, f"identity {identity_err:.1e}, group {group_err:.1e}, "
                      f"unitary {unitary_err:.1e}")


def test_06_kernel_norm_scaling():
    rng = np.random.default_rng(6)
    worst = 0.0
    for n in (7, 64, 1000):
        v = rng.normal(size=n) + 1j * rng.normal(size=n)
        out = apply_scaled_fourier(v)
        lhs = float(np.sum(np.abs(out) ** 2))
        rhs = (np.pi ** 2 / 2) * float(np.sum(np.abs(v) ** 2))
        worst = max(worst, abs(lhs - rhs) / rhs)
    ok = worst <= 1e-10
    assert report(6, "||F f||^2 = (pi^2/2) ||f||^2 at n in 7/64/1000",
                  ok, f"worst rel deviation = {worst:.3e}")


def test_07_fft_engine_against_naive():
    rng = np.random.default_rng(7)
    worst = 0.0
    for n in list(range(1, 65)) + [1000, 2048]:
        v = rng.normal(size=n) + 1j * rng.normal(size=n)
        for sign in (1, -1):
            got = apply_dft(plan_dft(n, sign), v)
            ref = naive_dft(v, sign)
            worst = max(worst, float(np.linalg.norm(got - ref)
                                     / np.linalg.norm(ref)))
    # Parseval and inversion at a representative pair of sizes
    invariants_ok = True
    for n in (256, 1000):
        v = rng.normal(size=n) + 1j * rng.normal(size=n)
        out = apply_dft(plan_dft(n, -1), v)
        parseval = abs(np.sum(np.abs(out) ** 2) - n * np.sum(np.abs(v) ** 2)) \
            / (n * np.sum(np.abs(v) ** 2))
        back = apply_dft(plan_dft(n, 1), out) / n
        roundtrip = float(np.linalg.norm(back - v) / np.linalg.norm(v))
        invariants_ok &= parseval <= 1e-12 and roundtrip <= 1e-12
    ok = worst <= 1e-11 and invariants_ok
    assert report(7, "FFT engine vs naive DFT (n in 1..64, 1000, 2048)",
                  ok, f"worst rel error = {worst:.3e}, invariants ok = {invariants_ok}")


def test_08_complexity_scaling():
    g = GaussianParams(1.0, 0.0, 0.0)
    params = LctParams.fourier()
    medians = {}
    for e in range(15, 20):
        n = 1 << e
        sig = gaussian_sample(g, asymptotic_zeros(n))
        plan = plan_dft(n, DFT_SIGN)
        fast_lct(params, sig, plan=plan)  # warmup
        times = []
        for _ in range(5):
            t0 = time.perf_counter()
            fast_lct(params, sig, plan=plan)
            times.append(time.perf_counter() - t0)
        times.sort()
        medians[n] = times[2]
    ratios = {n: medians[2 * n] / medians[n] for n in list(medians)[:-1]}
    ok = all(r <= 2.6 for r in ratios.values())
    detail = ", ".join(f"t(2^{int(math.log2(n))+1})/t(2^{int(math.log2(n))})"
                       f"={r:.2f}" for n, r in ratios.items())
    assert report(8, "doubling-time ratios <= 2.6 for n = 2^15..2^19 (median of 5)",
                  ok, detail)


def test_09_oracle_cross_validation():
    worst = 0.0
    for g, params in ((FIGURE1_GAUSSIAN, FIGURE1_PARAMS),
                      (FIGURE2_GAUSSIAN, FIGURE2_PARAMS)):
        cfg = QuadratureConfig.for_gaussian(g)
        for y in (-8.0, -3.0, 0.0, 2.5, 7.0):
            closed = gaussian_lct_closed_form(g, params, y)
            brute = direct_quadrature_lct(params, g.evaluate, y, cfg)
            worst = max(worst, abs(closed - brute))
    ok = worst <= 1e-8
    assert report(9, "closed form vs direct quadrature on both configurations",
                  ok, f"worst |closed - quadrature| = {worst:.3e}")

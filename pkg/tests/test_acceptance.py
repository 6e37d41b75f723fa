"""Acceptance suite: one test per release criterion, each printing a
PASS/FAIL line (run with ``pytest -s tests/test_acceptance.py`` to see them).
"""

import math
from dataclasses import replace

import numpy as np
import pytest

from dcavity import response, sweep, timedomain
from dcavity.params import ReducedParams

TWO_PI = 2 * math.pi


def _report(name: str, ok: bool, detail: str = "") -> bool:
    print(f"{'PASS' if ok else 'FAIL'}: {name}" + (f" ({detail})" if detail else ""))
    return ok


def test_transparency_identity(device_broad):
    n_star = response.transparency_ratio(device_broad)
    ratio_ok = abs(n_star - 0.7) / 0.7 < 3e-2
    eps_t = response.transmission_quadrature(replace(device_broad, n=n_star), 0.0)
    dip_ok = abs(eps_t) < 1e-10
    assert _report(
        "transparency identity",
        ratio_ok and dip_ok,
        f"n*={n_star:.4f}, |eps_T(0)|={abs(eps_t):.2e}",
    )


def test_mechanical_oscillation_peak(device_narrow):
    r = replace(device_narrow, n=1.0)
    amps = response.fluctuation_amplitudes(r, 0.0)
    peak = abs(r.kappa * amps.b_plus) ** 2
    in_range = 5.8e5 <= peak <= 6.4e5
    closed_form = (2 * r.g / r.gamma_m) ** 2
    matches = abs(peak - closed_form) / closed_form < 1e-10
    assert _report(
        "mechanical oscillation peak",
        in_range and matches,
        f"peak={peak:.4e}",
    )


def test_output_energies_magnitude(device_narrow):
    r = replace(device_narrow, n=1.0)
    amps = response.fluctuation_amplitudes(r, 0.0)
    out_l = abs(amps.outL_plus) ** 2
    out_r = abs(amps.outR_minus) ** 2
    ok = 1.5e5 <= out_l <= 1.7e5 and 1.5e5 <= out_r <= 1.7e5
    assert _report(
        "output energies magnitude", ok, f"outL={out_l:.4e}, outR={out_r:.4e}"
    )


def test_output_energies_difference_identity(device_narrow):
    # Stated release criterion: |outL|^2 - |outR|^2 == 1 - 2*Re[eps_T] to
    # 1e-8 relative.  Implemented exactly as stated.
    r = replace(device_narrow, n=1.0)
    amps = response.fluctuation_amplitudes(r, 0.0)
    lhs = abs(amps.outL_plus) ** 2 - abs(amps.outR_minus) ** 2
    rhs = 1.0 - 2.0 * amps.eps_T.real
    ok = abs(lhs - rhs) <= 1e-8 * abs(rhs)
    assert _report(
        "output energy difference identity", ok, f"lhs={lhs:.6e}, rhs={rhs:.6e}"
    )


def test_boundary_values(device_narrow):
    r = replace(device_narrow, n=0.0)
    amps = response.fluctuation_amplitudes(r, 0.0)
    out_l = abs(amps.outL_plus) ** 2
    out_r = abs(amps.outR_minus) ** 2
    # exact zero-ratio closed form at x = 0: eps_T = 2s, |outL|^2 = (1 - 2s)^2
    s = (r.kappa * r.gamma_m / 2) / (r.kappa * r.gamma_m / 2 + r.g**2)
    exact = (1 - 2 * s) ** 2
    headroom = 1e-2 * s
    left_ok = abs(out_l - exact) <= headroom and abs(exact - 1.0) <= 5 * s
    right_ok = out_r == 0.0
    assert _report(
        "boundary output values",
        left_ok and right_ok,
        f"outL={out_l:.6f} (exact {exact:.6f}), outR={out_r}",
    )


def test_oracle_equivalence(device_narrow):
    worst = 0.0
    for n in (0.0, 0.3, 0.7, 0.9):
        r = replace(device_narrow, n=n)
        stable, margin = response.is_stable(r)
        if not stable or margin <= 1e-3 * r.kappa:
            continue
        for xk in (-0.5, -0.1, 0.0, 0.1, 0.5):
            devs = timedomain.compare_with_closed_form(r, xk * r.kappa)
            worst = max(worst, max(devs.values()))
    ok = worst < 1e-6
    assert _report("oracle equivalence", ok, f"max rel dev {worst:.2e}")


def test_stability_coincidence():
    gamma_m = TWO_PI * 141.0
    kappa = TWO_PI * 215e3
    mismatches = 0
    for g_over_k in np.linspace(0.04, 2.0, 50):
        for n in np.linspace(0.0, 1.2, 50):
            r = ReducedParams(
                kappa=kappa, gamma_m=gamma_m, g=float(g_over_k) * kappa, n=float(n)
            )
            stable, _ = response.is_stable(r)
            eig_stable = timedomain.eigenvalues(r)[0].real < 0
            mismatches += stable != eig_stable
    assert _report("stability coincidence", mismatches == 0, f"{mismatches} mismatches")


def test_symmetry_suite():
    rng = np.random.default_rng(20240817)
    grid = np.linspace(0.0, 1.5, 31)
    worst = 0.0
    checked = 0
    while checked < 20:
        kappa = 10.0 ** rng.uniform(3, 7)
        r = ReducedParams(
            kappa=kappa,
            gamma_m=kappa * 10.0 ** rng.uniform(-5, -1),
            g=kappa * 10.0 ** rng.uniform(-2, 0.3),
            n=rng.uniform(0.0, 1.0),
        )
        stable, margin = response.is_stable(r)
        if not stable or margin <= 1e-6 * kappa:
            continue
        checked += 1
        for xk in grid:
            x = float(xk) * kappa
            plus = response.fluctuation_amplitudes(r, x)
            minus = response.fluctuation_amplitudes(r, -x)
            scale = max(abs(plus.eps_T), 1e-300)
            worst = max(
                worst,
                abs(minus.eps_T.real - plus.eps_T.real) / scale,
                abs(minus.eps_T.imag + plus.eps_T.imag) / scale,
            )
    ok = worst < 1e-10
    assert _report("symmetry suite", ok, f"worst asymmetry {worst:.2e}")

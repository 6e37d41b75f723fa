"""Time-domain oracle: integrate the linear fluctuation equations and demodulate.

This module never uses the closed-form response; it exists to check it.  The
state vector is (<db>, <dc1>, <dc2^dag>), which closes under the rotating-wave
dynamics and is driven only at e^{-i x t}.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .errors import StepTooLarge, UnstableSystem, WindowTooShort
from .params import ReducedParams
from .response import ResponseAmplitudes, fluctuation_amplitudes, is_stable

try:
    from numpy import trapezoid as _trapz
except ImportError:  # numpy < 2.0
    from numpy import trapz as _trapz

_METHODS = ("rk4_fixed", "adaptive")

# Settle budget in units of 1/gamma_eff.  The slow transient amplitude decays
# at gamma_eff/2, so 40 units leave a residual ~e^-20, comfortably below the
# 1e-6 oracle-equivalence budget.
DEFAULT_SETTLE_PERIODS = 40
DEFAULT_DEMOD_PERIODS = 4


@dataclass(frozen=True)
class IntegrationConfig:
    dt: float
    settle_periods: int = DEFAULT_SETTLE_PERIODS
    demod_periods: int = DEFAULT_DEMOD_PERIODS
    method: str = "rk4_fixed"

    def __post_init__(self):
        if self.dt <= 0:
            raise ValueError("dt must be positive")
        if self.settle_periods < 10:
            raise ValueError("settle_periods must be at least 10")
        if self.demod_periods < 4:
            raise ValueError("demod_periods must be at least 4")
        if self.method not in _METHODS:
            raise ValueError(f"method must be one of {_METHODS}")


@dataclass(frozen=True)
class Trajectory:
    """Sampled mean fluctuation amplitudes (<db>, <dc1>, <dc2^dag>)."""

    times: np.ndarray
    b: np.ndarray
    c1: np.ndarray
    c2_dag: np.ndarray

    def __post_init__(self):
        lengths = {len(self.times), len(self.b), len(self.c1), len(self.c2_dag)}
        if len(lengths) != 1:
            raise ValueError("trajectory arrays must have equal length")
        if np.any(np.diff(self.times) <= 0):
            raise ValueError("times must be strictly increasing")


def drift_matrix(r: ReducedParams) -> np.ndarray:
    """Drift matrix of the (<db>, <dc1>, <dc2^dag>) system under real control amplitudes."""
    g, n = r.g, r.n
    return np.array(
        [
            [-r.gamma_m / 2, 1j * g, -1j * n * g],
            [1j * g, -r.kappa, 0.0],
            [1j * n * g, 0.0, -r.kappa],
        ],
        dtype=complex,
    )


def eigenvalues(r: ReducedParams) -> np.ndarray:
    """Eigenvalues of the drift matrix, sorted by real part, descending."""
    vals = np.linalg.eigvals(drift_matrix(r))
    return vals[np.argsort(-vals.real)]


def effective_mech_decay(r: ReducedParams) -> float:
    """Effective mechanical linewidth gamma_m + 2 g^2 (1 - n^2) / kappa."""
    return r.gamma_m + 2 * r.g**2 * (1 - r.n**2) / r.kappa


def default_config(r: ReducedParams, x: float) -> IntegrationConfig:
    dt = 0.02 / max(r.kappa, r.g, r.gamma_m, abs(x))
    return IntegrationConfig(dt=dt)


def _demod_window(r: ReducedParams, x: float, cfg: IntegrationConfig) -> float:
    if x != 0.0:
        return cfg.demod_periods * 2 * math.pi / abs(x)
    # At x = 0 the settled signal is constant; use a fixed cavity-scale window.
    return cfg.demod_periods * 2 * math.pi / r.kappa


def integrate(
    r: ReducedParams,
    x: float,
    cfg: IntegrationConfig,
    *,
    margin_floor: float = 0.0,
) -> Trajectory:
    """Fixed-step RK4 integration from zero fluctuations under unit probe drive.

    The trajectory is long enough to contain the settle window plus the
    demodulation window.

    Raises
    ------
    UnstableSystem
        No steady oscillation exists (unstable, or too close to threshold for
        the transient to die out in any reasonable time).
    StepTooLarge
        ``cfg.dt`` cannot resolve the fastest rate of the system.
    """
    stable, margin = is_stable(r)
    if not stable or margin <= margin_floor:
        raise UnstableSystem(
            f"refusing to integrate: stability margin {margin:.3e} rad/s"
        )
    gamma_eff = effective_mech_decay(r)
    if gamma_eff < 1e-3 * r.gamma_m:
        raise UnstableSystem(
            "effective mechanical linewidth collapsed; transient time diverges"
        )
    fastest = max(r.kappa, r.g, r.gamma_m, abs(x))
    if cfg.dt >= 0.1 / fastest:
        raise StepTooLarge(f"dt = {cfg.dt:.3e} s cannot resolve rate {fastest:.3e}")

    t_total = cfg.settle_periods / gamma_eff + _demod_window(r, x, cfg)
    n_steps = int(math.ceil(t_total / cfg.dt))
    dt = cfg.dt

    times = np.arange(n_steps + 1) * dt
    b_arr = np.empty(n_steps + 1, dtype=complex)
    c1_arr = np.empty(n_steps + 1, dtype=complex)
    c2_arr = np.empty(n_steps + 1, dtype=complex)

    m11 = -r.gamma_m / 2
    m12 = 1j * r.g
    m13 = -1j * r.n * r.g
    m21 = 1j * r.g
    m31 = 1j * r.n * r.g
    mk = -r.kappa

    b = 0j
    c1 = 0j
    c2 = 0j
    b_arr[0] = c1_arr[0] = c2_arr[0] = 0j

    e_half = cmath.exp(-1j * x * dt / 2)
    ph = 1 + 0j
    h2 = dt / 2
    h6 = dt / 6
    for k in range(n_steps):
        if k % 1024 == 0:
            # resync the drive phase to cap accumulated roundoff
            ph = cmath.exp(-1j * x * (k * dt))
        ph_mid = ph * e_half
        ph_end = ph_mid * e_half

        kb1 = m11 * b + m12 * c1 + m13 * c2
        k11 = m21 * b + mk * c1 + ph
        k21 = m31 * b + mk * c2

        bb = b + h2 * kb1
        cc1 = c1 + h2 * k11
        cc2 = c2 + h2 * k21
        kb2 = m11 * bb + m12 * cc1 + m13 * cc2
        k12 = m21 * bb + mk * cc1 + ph_mid
        k22 = m31 * bb + mk * cc2

        bb = b + h2 * kb2
        cc1 = c1 + h2 * k12
        cc2 = c2 + h2 * k22
        kb3 = m11 * bb + m12 * cc1 + m13 * cc2
        k13 = m21 * bb + mk * cc1 + ph_mid
        k23 = m31 * bb + mk * cc2

        bb = b + dt * kb3
        cc1 = c1 + dt * k13
        cc2 = c2 + dt * k23
        kb4 = m11 * bb + m12 * cc1 + m13 * cc2
        k14 = m21 * bb + mk * cc1 + ph_end
        k24 = m31 * bb + mk * cc2

        b = b + h6 * (kb1 + 2 * kb2 + 2 * kb3 + kb4)
        c1 = c1 + h6 * (k11 + 2 * k12 + 2 * k13 + k14)
        c2 = c2 + h6 * (k21 + 2 * k22 + 2 * k23 + k24)
        ph = ph_end

        b_arr[k + 1] = b
        c1_arr[k + 1] = c1
        c2_arr[k + 1] = c2

    return Trajectory(times=times, b=b_arr, c1=c1_arr, c2_dag=c2_arr)


def demodulate(
    traj: Trajectory,
    r: ReducedParams,
    x: float,
    cfg: IntegrationConfig,
) -> ResponseAmplitudes:
    """Extract the steady oscillation amplitudes by projection onto e^{-i x t}.

    <dc2^dag> oscillates as (dc2_-)* e^{-i x t}, so its projection is
    conjugated to recover dc2_-.  The derived output fields use the same
    input-output relations as the closed-form path.
    """
    window = _demod_window(r, x, cfg)
    t_end = traj.times[-1]
    span = t_end - traj.times[0]
    if span < window:
        raise WindowTooShort(
            f"trajectory spans {span:.3e} s but demod window is {window:.3e} s"
        )
    start = np.searchsorted(traj.times, t_end - window)
    if len(traj.times) - start < 8:
        raise WindowTooShort("fewer than 8 samples inside the demod window")

    tw = traj.times[start:]
    weight = np.exp(1j * x * tw)
    duration = tw[-1] - tw[0]

    def project(samples: np.ndarray) -> complex:
        return complex(_trapz(samples[start:] * weight, tw) / duration)

    b_plus = project(traj.b)
    c1_plus = project(traj.c1)
    c2_minus = complex(project(traj.c2_dag)).conjugate()
    eps_t = 2 * r.kappa * c1_plus
    return ResponseAmplitudes(
        b_plus=b_plus,
        c1_plus=c1_plus,
        c2_minus=c2_minus,
        eps_T=eps_t,
        outL_plus=eps_t - 1.0,
        outR_minus=2 * r.kappa * c2_minus,
        x=x,
    )


def compare_with_closed_form(
    r: ReducedParams,
    x: float,
    cfg: IntegrationConfig | None = None,
    *,
    margin_floor: float = 0.0,
) -> dict[str, float]:
    """Relative deviation of the demodulated amplitudes from the closed form.

    Returns a mapping for the three independently interesting quantities:
    ``b_plus``, ``eps_T`` and ``outR_minus``.
    """
    if cfg is None:
        cfg = default_config(r, x)
    traj = integrate(r, x, cfg, margin_floor=margin_floor)
    demod = demodulate(traj, r, x, cfg)
    exact = fluctuation_amplitudes(r, x)
    devs = {}
    for name in ("b_plus", "eps_T", "outR_minus"):
        ref = getattr(exact, name)
        got = getattr(demod, name)
        scale = abs(ref) if ref != 0 else 1.0
        devs[name] = abs(got - ref) / scale
    return devs


def dump_trajectory_csv(traj: Trajectory, destination) -> None:
    """Write a trajectory as CSV with columns t, re/im of each amplitude."""
    header = "t,re_b,im_b,re_c1,im_c1,re_c2dag,im_c2dag"
    data = np.column_stack(
        [
            traj.times,
            traj.b.real,
            traj.b.imag,
            traj.c1.real,
            traj.c1.imag,
            traj.c2_dag.real,
            traj.c2_dag.imag,
        ]
    )
    np.savetxt(destination, data, delimiter=",", header=header, comments="")

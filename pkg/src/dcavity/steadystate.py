"""Self-consistent mean-field steady state of the driven double cavity.

The static mechanical displacement feeds back on the effective cavity
detunings, so the steady state is a (mild) fixed-point problem.  Only the
solution branch continuously connected to the undriven state is returned.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, replace

from .errors import AmbiguousBranch, LinearizationWarning, NoConvergence
from .params import PhysicalParams, drive_amplitude, single_photon_coupling

DEFAULT_TOL = 1e-12
DEFAULT_MAX_ITER = 1000
DEFAULT_DAMPING = 0.5

# g0*|b_s|/omega_m above this triggers a warning: the linearization around the
# static displacement is getting questionable.
SMALL_DISPLACEMENT_RATIO = 1e-3


@dataclass(frozen=True)
class SteadyState:
    """Mean-field amplitudes and effective detunings.

    ``delta_1``/``delta_2`` already include the back-action shift of the
    static membrane displacement (they equal the bare detunings when the
    solver is run with ``ignore_backaction=True``).
    """

    b_s: complex
    c_1s: complex
    c_2s: complex
    delta_1: float
    delta_2: float


def _amplitudes(p: PhysicalParams, eps_c: float, eps_d: float, q: float):
    """Field amplitudes for a given static displacement coordinate q = b_s + b_s*."""
    g0 = single_photon_coupling(p)
    d1 = p.detuning_c - g0 * q
    d2 = p.detuning_d + g0 * q
    c1 = eps_c / (p.kappa + 1j * d1)
    c2 = eps_d / (p.kappa + 1j * d2)
    b = -1j * g0 * (abs(c2) ** 2 - abs(c1) ** 2) / (p.mech_decay / 2 + 1j * p.mech_freq)
    return b, c1, c2, d1, d2


def solve_steady_state(
    p: PhysicalParams,
    *,
    ignore_backaction: bool = False,
    tol: float = DEFAULT_TOL,
    max_iter: int = DEFAULT_MAX_ITER,
    damping: float = DEFAULT_DAMPING,
) -> SteadyState:
    """Solve the coupled mean-field equations by damped fixed-point iteration.

    Starts from zero displacement and keeps the branch connected to it.  The
    relative residual of the returned state is below ``tol``.

    Raises
    ------
    NoConvergence
        Iteration budget exhausted without meeting the tolerance.
    AmbiguousBranch
        The damped iteration oscillates between candidate fixed points.
    """
    g0 = single_photon_coupling(p)
    eps_c = drive_amplitude(p.power_c, p.omega_laser, p.kappa) if p.power_c else 0.0
    eps_d = drive_amplitude(p.power_d, p.omega_laser, p.kappa) if p.power_d else 0.0

    if eps_c == 0.0 and eps_d == 0.0:
        return SteadyState(0j, 0j, 0j, p.detuning_c, p.detuning_d)

    if ignore_backaction:
        b, c1, c2, _, _ = _amplitudes(p, eps_c, eps_d, 0.0)
        state = SteadyState(b, c1, c2, p.detuning_c, p.detuning_d)
        _warn_if_large_displacement(p, g0, b)
        return state

    q = 0.0
    diffs: list[float] = []
    for _ in range(max_iter):
        b, c1, c2, d1, d2 = _amplitudes(p, eps_c, eps_d, q)
        q_new = 2.0 * b.real
        # The only inconsistency left is the detuning shift between q and
        # q_new; relative to the cavity equations it is g0*|dq| / |kappa+i*d|.
        scale = min(abs(p.kappa + 1j * d1), abs(p.kappa + 1j * d2))
        residual = g0 * abs(q_new - q) / scale
        if residual <= tol:
            b, c1, c2, d1, d2 = _amplitudes(p, eps_c, eps_d, q_new)
            state = SteadyState(b, c1, c2, d1, d2)
            _warn_if_large_displacement(p, g0, b)
            return state
        diffs.append(q_new - q)
        q = (1.0 - damping) * q + damping * q_new

    if _is_oscillating(diffs):
        raise AmbiguousBranch(
            "damped iteration oscillates between candidate fixed points"
        )
    raise NoConvergence("steady-state iteration did not converge", residual)


def _is_oscillating(diffs: list[float]) -> bool:
    tail = diffs[-6:]
    if len(tail) < 6:
        return False
    signs_alternate = all(a * b < 0 for a, b in zip(tail, tail[1:]))
    not_decaying = abs(tail[-1]) >= 0.5 * abs(tail[0])
    return signs_alternate and not_decaying


def _warn_if_large_displacement(p: PhysicalParams, g0: float, b: complex) -> None:
    if g0 * abs(b) >= SMALL_DISPLACEMENT_RATIO * p.mech_freq:
        warnings.warn(
            f"g0*|b_s|/omega_m = {g0 * abs(b) / p.mech_freq:.2e} is not small; "
            "the linearized response may be inaccurate",
            LinearizationWarning,
            stacklevel=3,
        )


def apply_phase_convention(s: SteadyState) -> SteadyState:
    """Return an equivalent state with real, non-negative cavity amplitudes.

    The linear response only depends on |c_1s| and |c_2s|, so the phases can
    be absorbed without loss of generality.  |b_s| is preserved.
    """
    return replace(s, c_1s=complex(abs(s.c_1s)), c_2s=complex(abs(s.c_2s)))


def residual(p: PhysicalParams, s: SteadyState) -> float:
    """Largest relative residual of the mean-field equations at a stored state.

    Used by tests to verify solver output independently of the iteration.
    """
    eps_c = drive_amplitude(p.power_c, p.omega_laser, p.kappa) if p.power_c else 0.0
    eps_d = drive_amplitude(p.power_d, p.omega_laser, p.kappa) if p.power_d else 0.0
    res = 0.0
    for c, delta, eps in ((s.c_1s, s.delta_1, eps_c), (s.c_2s, s.delta_2, eps_d)):
        if eps > 0:
            res = max(res, abs(c * (p.kappa + 1j * delta) - eps) / eps)
        else:
            res = max(res, abs(c))
    g0 = single_photon_coupling(p)
    b_rhs = (
        -1j
        * g0
        * (abs(s.c_2s) ** 2 - abs(s.c_1s) ** 2)
        / (p.mech_decay / 2 + 1j * p.mech_freq)
    )
    scale = max(abs(s.b_s), abs(b_rhs), 1.0)
    res = max(res, abs(s.b_s - b_rhs) / scale)
    # Detuning/displacement consistency, measured on the cavity-equation scale.
    q_stored = (p.detuning_c - s.delta_1) / g0
    dq = 2.0 * s.b_s.real - q_stored
    denom = min(abs(p.kappa + 1j * s.delta_1), abs(p.kappa + 1j * s.delta_2))
    res = max(res, g0 * abs(dq) / denom)
    return res

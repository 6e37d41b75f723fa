"""Linear response and stability of a doubly driven two-cavity optomechanical system.

The package solves the mean-field steady state, evaluates the closed-form
probe response and output fields, checks them against an independent
time-domain integrator, and tabulates figure data as CSV.
"""

from .params import (
    PhysicalParams,
    ReducedParams,
    device_params,
    drive_amplitude,
    load_config,
    reduce_params,
    single_photon_coupling,
)
from .response import (
    ResponseAmplitudes,
    divergence_ratio,
    fluctuation_amplitudes,
    is_stable,
    transmission_quadrature,
    transparency_ratio,
)
from .steadystate import SteadyState, apply_phase_convention, solve_steady_state
from .sweep import SweepResult, SweepSpec, emit_csv, figure_preset, read_csv, run_sweep
from .timedomain import (
    IntegrationConfig,
    Trajectory,
    demodulate,
    drift_matrix,
    eigenvalues,
    integrate,
)

__all__ = [
    "PhysicalParams",
    "ReducedParams",
    "ResponseAmplitudes",
    "SteadyState",
    "SweepResult",
    "SweepSpec",
    "IntegrationConfig",
    "Trajectory",
    "apply_phase_convention",
    "demodulate",
    "device_params",
    "divergence_ratio",
    "drift_matrix",
    "drive_amplitude",
    "eigenvalues",
    "emit_csv",
    "figure_preset",
    "fluctuation_amplitudes",
    "integrate",
    "is_stable",
    "load_config",
    "read_csv",
    "reduce_params",
    "run_sweep",
    "single_photon_coupling",
    "solve_steady_state",
    "transmission_quadrature",
    "transparency_ratio",
]

__version__ = "0.1.0"

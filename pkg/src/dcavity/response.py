"""Closed-form linear probe response, output fields and stability predicate.

All quantities are per unit probe amplitude, so the probe power never enters.
``x`` is the probe offset from the mechanical sideband, in rad/s.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import NearSingular, ZeroCoupling
from .params import ReducedParams

# |full denominator| below this fraction of kappa^2 * max(gamma_m/2, kappa)
# counts as sitting on the divergence point.
SINGULAR_REL_TOL = 1e-9


@dataclass(frozen=True)
class ResponseAmplitudes:
    """Per-unit-probe fluctuation amplitudes and derived output quantities.

    ``b_plus``, ``c1_plus`` and ``c2_minus`` carry units of seconds (amplitude
    per unit probe drive); the output ratios are dimensionless.
    """

    b_plus: complex
    c1_plus: complex
    c2_minus: complex
    eps_T: complex
    outL_plus: complex
    outR_minus: complex
    x: float


def _core_denominator(r: ReducedParams, x: float) -> complex:
    return (r.kappa - 1j * x) * (r.gamma_m / 2 - 1j * x) + r.g**2 * (1 - r.n**2)


def _singular_floor(r: ReducedParams) -> float:
    return SINGULAR_REL_TOL * r.kappa**2 * max(r.gamma_m / 2, r.kappa)


def fluctuation_amplitudes(r: ReducedParams, x: float) -> ResponseAmplitudes:
    """Evaluate the closed-form response at probe offset ``x``.

    Raises
    ------
    NearSingular
        At (or numerically next to) the divergence point of the linear
        system, where no finite steady response exists.
    """
    a = r.kappa - 1j * x
    b = r.gamma_m / 2 - 1j * x
    core = _core_denominator(r, x)
    den1 = a * core
    if abs(den1) < _singular_floor(r):
        raise NearSingular(
            f"response denominator {abs(den1):.3e} below singular floor at x={x:.6e}"
        )
    b_plus = 1j * r.g / core
    c1_plus = (-(r.n**2) * r.g**2 + a * b) / den1
    c2_minus = -r.n * r.g**2 / ((r.kappa + 1j * x) * core.conjugate())
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


def transmission_quadrature(r: ReducedParams, x: float) -> complex:
    """Probe-frequency quadrature of the left output field.

    Real part: absorption; imaginary part: dispersion.  Evaluated directly
    from its own closed form, which tests compare against
    ``2*kappa*c1_plus`` from :func:`fluctuation_amplitudes`.
    """
    a = r.kappa - 1j * x
    b = r.gamma_m / 2 - 1j * x
    numerator = 2 * r.kappa * (-(r.n**2) * r.g**2 + a * b)
    denominator = a**2 * b + r.g**2 * (1 - r.n**2) * a
    if abs(denominator) < _singular_floor(r):
        raise NearSingular(
            f"quadrature denominator {abs(denominator):.3e} below singular floor"
        )
    return numerator / denominator


def transparency_ratio(r: ReducedParams) -> float:
    """Amplitude ratio sqrt(gamma_m*kappa/(2 g^2)) giving a perfect transparency dip."""
    if r.g == 0:
        raise ZeroCoupling("transparency ratio undefined at g = 0")
    return math.sqrt(r.gamma_m * r.kappa / (2 * r.g**2))


def divergence_ratio(r: ReducedParams) -> float:
    """Amplitude ratio sqrt(1 + gamma_m*kappa/(2 g^2)) at which the response diverges."""
    if r.g == 0:
        raise ZeroCoupling("divergence ratio undefined at g = 0")
    return math.sqrt(1 + r.gamma_m * r.kappa / (2 * r.g**2))


def is_stable(r: ReducedParams) -> tuple[bool, float]:
    """Parametric-stability predicate and margin.

    The margin is (kappa*gamma_m/2 + g^2*(1 - n^2)) / kappa in rad/s;
    the boundary (margin == 0) counts as unstable.
    """
    expr = r.kappa * r.gamma_m / 2 + r.g**2 * (1 - r.n**2)
    return expr > 0, expr / r.kappa

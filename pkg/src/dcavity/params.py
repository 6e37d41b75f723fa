"""Laboratory-unit parameter model and its reduction to the four-number linear model.

All internal rates are angular (rad/s).  The JSON config interface accepts
ordinary frequencies in Hz (key names carry the unit) and multiplies by 2*pi
at the boundary; see ``load_config``.
"""

from __future__ import annotations

import json
import math
import warnings
from dataclasses import dataclass
from typing import Any, Mapping

from .errors import ConfigError, ResolvedSidebandWarning, ZeroCouplingField

# Pinned physical constants for bit-reproducible output.
HBAR = 1.054571817e-34  # J s
C_LIGHT = 299792458.0  # m/s

TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class PhysicalParams:
    """Device and laser description in laboratory units.

    Attributes
    ----------
    cavity_length : float
        Length of each cavity [m].
    mass : float
        Effective mass of the mechanical resonator [kg].
    kappa : float
        Common decay rate of both cavity modes [rad/s].
    mech_freq : float
        Mechanical eigenfrequency [rad/s].
    mech_decay : float
        Mechanical decay rate [rad/s].
    wavelength : float
        Wavelength of the coupling laser [m].
    power_c, power_d, power_p : float
        Powers of the coupling, driving and probe fields [W].
    detuning_c, detuning_d : float
        Bare detunings of coupling and driving lasers from the cavity
        resonance [rad/s].
    """

    cavity_length: float
    mass: float
    kappa: float
    mech_freq: float
    mech_decay: float
    wavelength: float
    power_c: float
    power_d: float
    power_p: float = 0.0
    detuning_c: float = 0.0
    detuning_d: float = 0.0

    def __post_init__(self):
        for name in ("cavity_length", "mass", "kappa", "mech_freq", "wavelength"):
            if getattr(self, name) <= 0:
                raise ConfigError(f"{name} must be strictly positive")
        if self.mech_decay < 0:
            raise ConfigError("mech_decay must be non-negative")
        for name in ("power_c", "power_d", "power_p"):
            if getattr(self, name) < 0:
                raise ConfigError(f"{name} must be non-negative")
        if self.mech_freq <= self.kappa:
            warnings.warn(
                "not in the resolved-sideband regime (mech_freq <= kappa)",
                ResolvedSidebandWarning,
                stacklevel=2,
            )

    @property
    def omega_laser(self) -> float:
        """Angular frequency of the laser field, 2*pi*c/wavelength [rad/s]."""
        return TWO_PI * C_LIGHT / self.wavelength

    @property
    def quality_factor(self) -> float:
        return self.mech_freq / self.mech_decay


@dataclass(frozen=True)
class ReducedParams:
    """The four numbers that fully determine the linear probe response.

    ``g`` is the pump-enhanced optomechanical coupling and ``n`` the amplitude
    ratio of the two intracavity control fields.
    """

    kappa: float
    gamma_m: float
    g: float
    n: float

    def __post_init__(self):
        if self.kappa <= 0:
            raise ConfigError("kappa must be strictly positive")
        if self.gamma_m < 0 or self.g < 0 or self.n < 0:
            raise ConfigError("gamma_m, g and n must be non-negative")


def single_photon_coupling(p: PhysicalParams) -> float:
    """Single-photon optomechanical coupling rate [rad/s].

    (omega_laser / L) * sqrt(hbar / (2 m omega_m)).
    """
    return (p.omega_laser / p.cavity_length) * math.sqrt(
        HBAR / (2.0 * p.mass * p.mech_freq)
    )


def drive_amplitude(power: float, omega: float, kappa: float) -> float:
    """Drive amplitude sqrt(2 kappa P / (hbar omega)) [1/s] for a field of given power."""
    if power < 0:
        raise ConfigError("power must be non-negative")
    if omega <= 0 or kappa <= 0:
        raise ConfigError("omega and kappa must be strictly positive")
    return math.sqrt(2.0 * kappa * power / (HBAR * omega))


def reduce_params(p: PhysicalParams, s) -> ReducedParams:
    """Collapse a solved steady state to the reduced four-parameter model.

    g = g0 * |c_1s| and n = |c_2s| / |c_1s|; kappa and gamma_m are copied.

    Raises
    ------
    ZeroCouplingField
        If the red-sideband intracavity amplitude ``c_1s`` vanishes.
    """
    c1 = abs(s.c_1s)
    if c1 == 0.0:
        raise ZeroCouplingField("c_1s = 0: amplitude ratio n is undefined")
    g0 = single_photon_coupling(p)
    return ReducedParams(
        kappa=p.kappa,
        gamma_m=p.mech_decay,
        g=g0 * c1,
        n=abs(s.c_2s) / c1,
    )


def device_params(
    gamma_m_hz: float = 141.0,
    power_c_w: float = 1e-3,
    power_d_w: float = 0.0,
    power_p_w: float = 0.0,
) -> PhysicalParams:
    """Membrane-in-the-middle reference device used across docs, presets and tests.

    L = 25 mm, m = 145 ng, kappa = 2*pi*215 kHz, omega_m = 2*pi*947 kHz,
    lambda = 1064 nm.  The coupling laser sits on the red sideband and the
    driving laser on the blue one.
    """
    omega_m = TWO_PI * 947e3
    return PhysicalParams(
        cavity_length=25e-3,
        mass=145e-12,
        kappa=TWO_PI * 215e3,
        mech_freq=omega_m,
        mech_decay=TWO_PI * gamma_m_hz,
        wavelength=1064e-9,
        power_c=power_c_w,
        power_d=power_d_w,
        power_p=power_p_w,
        detuning_c=omega_m,
        detuning_d=-omega_m,
    )


@dataclass(frozen=True)
class ModelConfig:
    """Parsed JSON configuration: either a physical or a reduced parameter set."""

    mode: str
    physical: PhysicalParams | None = None
    reduced: ReducedParams | None = None
    ignore_backaction: bool = False


_PHYSICAL_REQUIRED = (
    "cavity_length_m",
    "mass_kg",
    "kappa_hz",
    "mech_freq_hz",
    "gamma_m_hz",
    "wavelength_m",
    "power_c_w",
)
_REDUCED_REQUIRED = ("kappa_hz", "gamma_m_hz", "coupling_g_hz", "ratio_n")


def _require(data: Mapping[str, Any], key: str, mode: str) -> float:
    if key not in data:
        raise ConfigError(f"missing field '{key}' in {mode}-mode config")
    value = data[key]
    if not isinstance(value, (int, float)) or isinstance(value, bool):
        raise ConfigError(f"field '{key}' must be a number")
    return float(value)


def parse_config(data: Mapping[str, Any]) -> ModelConfig:
    """Build a ``ModelConfig`` from a decoded JSON mapping.

    Frequencies are given as ordinary frequencies under ``*_hz`` keys and are
    converted to angular rates here.
    """
    mode = data.get("mode")
    if mode not in ("physical", "reduced"):
        raise ConfigError("config field 'mode' must be 'physical' or 'reduced'")
    ignore = bool(data.get("ignore_backaction", False))
    if mode == "physical":
        fields = {key: _require(data, key, mode) for key in _PHYSICAL_REQUIRED}
        mech_freq = TWO_PI * fields["mech_freq_hz"]
        physical = PhysicalParams(
            cavity_length=fields["cavity_length_m"],
            mass=fields["mass_kg"],
            kappa=TWO_PI * fields["kappa_hz"],
            mech_freq=mech_freq,
            mech_decay=TWO_PI * fields["gamma_m_hz"],
            wavelength=fields["wavelength_m"],
            power_c=fields["power_c_w"],
            power_d=float(data.get("power_d_w", 0.0)),
            power_p=float(data.get("power_p_w", 0.0)),
            detuning_c=TWO_PI * float(data.get("detuning_c_hz", mech_freq / TWO_PI)),
            detuning_d=TWO_PI * float(data.get("detuning_d_hz", -mech_freq / TWO_PI)),
        )
        return ModelConfig(mode=mode, physical=physical, ignore_backaction=ignore)
    fields = {key: _require(data, key, mode) for key in _REDUCED_REQUIRED}
    reduced = ReducedParams(
        kappa=TWO_PI * fields["kappa_hz"],
        gamma_m=TWO_PI * fields["gamma_m_hz"],
        g=TWO_PI * fields["coupling_g_hz"],
        n=fields["ratio_n"],
    )
    return ModelConfig(mode=mode, reduced=reduced, ignore_backaction=ignore)


def load_config(path) -> ModelConfig:
    """Read and parse a JSON config file; see README for the schema."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise ConfigError(f"cannot read config file {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ConfigError(f"config file {path} is not valid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise ConfigError("config root must be a JSON object")
    return parse_config(data)

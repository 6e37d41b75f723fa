"""Parameter scans over x or n, figure-data presets and CSV serialization.

The x axis is stored and emitted in units of kappa (matching the figure
axes); the conversion to rad/s happens only at the evaluation boundary.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass, replace

import numpy as np

from . import steadystate
from .errors import NearSingular, UnknownPreset
from .params import ReducedParams, device_params, reduce_params
from .response import fluctuation_amplitudes

AXES = ("x_over_kappa", "n")

QUANTITIES = ("re_epsT", "im_epsT", "abs2_b", "abs2_outL", "abs2_outR")

DEFAULT_POINTS = 1001

PRESET_NAMES = (
    "fig2",
    "fig2_inset",
    "fig3",
    "fig4",
    "fig4_inset",
    "fig5",
    "fig5_inset",
    "fig6",
    "fig6_inset",
)


def _extract(amps, quantity: str, kappa: float) -> float:
    if quantity == "re_epsT":
        return amps.eps_T.real
    if quantity == "im_epsT":
        return amps.eps_T.imag
    if quantity == "abs2_b":
        return abs(kappa * amps.b_plus) ** 2
    if quantity == "abs2_outL":
        return abs(amps.outL_plus) ** 2
    if quantity == "abs2_outR":
        return abs(amps.outR_minus) ** 2
    raise ValueError(f"unknown quantity '{quantity}'")


@dataclass(frozen=True)
class SweepSpec:
    base: ReducedParams
    axis: str
    start: float
    stop: float
    points: int
    overlays: tuple[dict, ...] = ()
    quantities: tuple[str, ...] = ("re_epsT",)
    fixed_x: float = 0.0  # rad/s; used only for n-axis sweeps

    def __post_init__(self):
        if self.axis not in AXES:
            raise ValueError(f"axis must be one of {AXES}")
        if self.points < 2:
            raise ValueError("point count must be at least 2")
        if not (math.isfinite(self.start) and math.isfinite(self.stop)):
            raise ValueError("sweep range must be finite")
        if not self.quantities:
            raise ValueError("quantities must be non-empty")
        for q in self.quantities:
            if q not in QUANTITIES:
                raise ValueError(f"unknown quantity '{q}'")


@dataclass
class SweepResult:
    axis: str
    axis_values: np.ndarray
    columns: dict[str, np.ndarray]  # masked points hold NaN
    mask: np.ndarray  # True where any column hit the singular point

    def __eq__(self, other):
        if not isinstance(other, SweepResult):
            return NotImplemented
        if self.axis != other.axis or set(self.columns) != set(other.columns):
            return False
        if not np.array_equal(self.axis_values, other.axis_values):
            return False
        if not np.array_equal(self.mask, other.mask):
            return False
        return all(
            np.array_equal(self.columns[k], other.columns[k], equal_nan=True)
            for k in self.columns
        )


def _column_name(quantity: str, overlay: dict | None) -> str:
    if not overlay:
        return quantity
    label = ",".join(f"{key}={value:g}" for key, value in sorted(overlay.items()))
    return f"{quantity}__{label}"


def run_sweep(spec: SweepSpec) -> SweepResult:
    """Evaluate the closed-form response on the grid; singular points are masked."""
    axis_values = np.linspace(spec.start, spec.stop, spec.points)
    overlays = spec.overlays if spec.overlays else (None,)
    columns: dict[str, np.ndarray] = {}
    mask = np.zeros(spec.points, dtype=bool)

    for overlay in overlays:
        r_overlay = replace(spec.base, **overlay) if overlay else spec.base
        cols = {
            _column_name(q, overlay): np.full(spec.points, np.nan)
            for q in spec.quantities
        }
        for i, value in enumerate(axis_values):
            if spec.axis == "x_over_kappa":
                r, x = r_overlay, value * r_overlay.kappa
            else:
                r, x = replace(r_overlay, n=float(value)), spec.fixed_x
            try:
                amps = fluctuation_amplitudes(r, x)
            except NearSingular:
                mask[i] = True
                continue
            for q in spec.quantities:
                cols[_column_name(q, overlay)][i] = _extract(amps, q, r.kappa)
        columns.update(cols)

    return SweepResult(
        axis=spec.axis, axis_values=axis_values, columns=columns, mask=mask
    )


def device_reduced(gamma_m_hz: float, power_c_w: float = 1e-3) -> ReducedParams:
    """Reduced parameters of the reference device, coupling laser only.

    The steady state is solved self-consistently; the overlay mechanism then
    dials n directly, holding g fixed.
    """
    p = device_params(gamma_m_hz=gamma_m_hz, power_c_w=power_c_w)
    s = steadystate.solve_steady_state(p)
    return reduce_params(p, s)


def figure_preset(name: str, points: int = DEFAULT_POINTS) -> SweepSpec:
    """Fully specified sweep behind one of the reference figures (or its inset).

    Main panels scan x/kappa over [-1, 1]; insets scan n over [0, 1] at x=0.
    The broad-linewidth panels (fig2/fig3) use gamma_m = 2*pi*14.1 kHz; all
    others use the narrow device linewidth 2*pi*141 Hz.
    """
    if name not in PRESET_NAMES:
        raise UnknownPreset(
            f"unknown preset '{name}'; valid names: {', '.join(PRESET_NAMES)}"
        )
    broad = ("fig2", "fig3")
    base = device_reduced(gamma_m_hz=14.1e3 if name in broad else 141.0)
    four = ({"n": 0.0}, {"n": 0.7}, {"n": 0.8}, {"n": 0.9})
    x_axis = dict(axis="x_over_kappa", start=-1.0, stop=1.0, points=points)
    n_axis = dict(axis="n", start=0.0, stop=1.0, points=points, fixed_x=0.0)
    table = {
        "fig2": dict(
            overlays=({"n": 0.0}, {"n": 0.7}), quantities=("re_epsT",), **x_axis
        ),
        "fig2_inset": dict(overlays=({"n": 0.7},), quantities=("re_epsT",), **x_axis),
        "fig3": dict(
            overlays=({"n": 0.0}, {"n": 0.7}), quantities=("im_epsT",), **x_axis
        ),
        "fig4": dict(overlays=four, quantities=("abs2_b",), **x_axis),
        "fig4_inset": dict(quantities=("abs2_b",), **n_axis),
        "fig5": dict(overlays=four, quantities=("abs2_outL",), **x_axis),
        "fig5_inset": dict(quantities=("abs2_outL",), **n_axis),
        "fig6": dict(overlays=four, quantities=("abs2_outR",), **x_axis),
        "fig6_inset": dict(quantities=("abs2_outR",), **n_axis),
    }
    return SweepSpec(base=base, **table[name])


def emit_csv(result: SweepResult, destination) -> None:
    """Write a sweep as CSV; masked cells are empty, values keep full precision."""
    names = sorted(result.columns)
    close = False
    if hasattr(destination, "write"):
        fh = destination
    else:
        fh = open(destination, "w", newline="", encoding="utf-8")
        close = True
    try:
        writer = csv.writer(fh)
        writer.writerow([result.axis] + names)
        for i, value in enumerate(result.axis_values):
            row = [repr(float(value))]
            for name in names:
                cell = result.columns[name][i]
                row.append("" if np.isnan(cell) else repr(float(cell)))
            writer.writerow(row)
    finally:
        if close:
            fh.close()


def read_csv(source) -> SweepResult:
    """Parse a file produced by :func:`emit_csv` back into a ``SweepResult``."""
    close = False
    if hasattr(source, "read"):
        fh = source
    else:
        fh = open(source, "r", newline="", encoding="utf-8")
        close = True
    try:
        reader = csv.reader(fh)
        header = next(reader)
        axis, names = header[0], header[1:]
        axis_values = []
        cols: dict[str, list[float]] = {name: [] for name in names}
        for row in reader:
            axis_values.append(float(row[0]))
            for name, cell in zip(names, row[1:]):
                cols[name].append(float(cell) if cell else np.nan)
    finally:
        if close:
            fh.close()
    columns = {name: np.array(values) for name, values in cols.items()}
    mask = np.zeros(len(axis_values), dtype=bool)
    for values in columns.values():
        mask |= np.isnan(values)
    return SweepResult(
        axis=axis, axis_values=np.array(axis_values), columns=columns, mask=mask
    )

"""CSV loading and matplotlib rendering for the figure recipes.

The CSV layout is the one emitted by the sweep CLI: first column is the axis
(``x_over_kappa`` or ``n``), remaining columns are named quantities, masked
cells are empty.  Empty cells become NaN, which matplotlib draws as a curve
break.

Rendering is deterministic: a pinned ``svg.hashsalt`` and stripped date
metadata make repeated renders of the same CSVs byte-identical.
"""

from __future__ import annotations

import csv
from pathlib import Path

import matplotlib
import numpy as np

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402  (backend must be set first)

from .recipes import FigureRecipe

_RC = {
    "svg.hashsalt": "dcavity-figures",
    "figure.dpi": 120,
    "font.size": 10,
    "axes.linewidth": 0.8,
}

_INSET_RECT = (0.62, 0.58, 0.30, 0.30)  # fraction of the parent axes


class MissingColumnError(KeyError):
    """A recipe references a column the CSV does not contain."""


class EmptyDataError(ValueError):
    """The CSV holds no finite data points for a requested curve."""


def _read_table(path: Path) -> tuple[np.ndarray, dict[str, np.ndarray]]:
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.reader(fh)
        header = next(reader)
        rows = list(reader)
    if not rows:
        raise EmptyDataError(f"{path} contains no data rows")
    data = np.array(
        [[float(cell) if cell else np.nan for cell in row] for row in rows]
    )
    axis = data[:, 0]
    columns = {name: data[:, j + 1] for j, name in enumerate(header[1:])}
    return axis, columns


def load_curves(
    recipe: FigureRecipe, indir: str | Path
) -> tuple[np.ndarray, dict[str, np.ndarray]]:
    """Axis values and the recipe's curve columns, validated against the CSV."""
    indir = Path(indir)
    axis, columns = _read_table(indir / recipe.csv_name)
    out: dict[str, np.ndarray] = {}
    for name in recipe.curves:
        if name not in columns:
            raise MissingColumnError(
                f"{recipe.csv_name} has no column '{name}' "
                f"(found: {', '.join(sorted(columns))})"
            )
        col = columns[name]
        if not np.any(np.isfinite(col)):
            raise EmptyDataError(f"column '{name}' in {recipe.csv_name} is all-masked")
        out[name] = col
    return axis, out


def _load_inset(recipe: FigureRecipe, indir: Path):
    inset = recipe.inset
    axis, columns = _read_table(indir / inset.csv_name)
    if inset.column not in columns:
        raise MissingColumnError(
            f"{inset.csv_name} has no column '{inset.column}' "
            f"(found: {', '.join(sorted(columns))})"
        )
    return axis, columns[inset.column] + inset.offset


def render(
    recipe: FigureRecipe, indir: str | Path, outdir: str | Path
) -> list[Path]:
    """Draw one figure (main panel plus inset if any) as PNG and SVG.

    Returns the written paths.
    """
    indir, outdir = Path(indir), Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    axis, curves = load_curves(recipe, indir)

    with plt.rc_context(_RC):
        fig, ax = plt.subplots(figsize=(4.5, 3.4))
        for name, style in recipe.curves.items():
            ax.plot(
                axis,
                curves[name],
                color=style.color,
                linestyle=style.linestyle,
                label=style.label,
                linewidth=1.4,
            )
        ax.set_xlabel(recipe.xlabel)
        ax.set_ylabel(recipe.ylabel)
        # the inset occupies the upper right, keep the legend clear of it
        ax.legend(frameon=False, fontsize=8, loc="upper left")

        if recipe.inset is not None:
            in_axis, in_col = _load_inset(recipe, indir)
            inset_ax = ax.inset_axes(_INSET_RECT)
            style = recipe.inset.style
            inset_ax.plot(
                in_axis,
                in_col,
                color=style.color,
                linestyle=style.linestyle,
                linewidth=1.0,
            )
            inset_ax.set_xlabel(recipe.inset.xlabel, fontsize=7)
            inset_ax.set_ylabel(recipe.inset.ylabel, fontsize=7)
            inset_ax.tick_params(labelsize=6)

        fig.tight_layout()
        written = []
        for ext in ("png", "svg"):
            path = outdir / f"{recipe.name}.{ext}"
            fig.savefig(path, metadata=_metadata(ext))
            written.append(path)
        plt.close(fig)
    return written


def _metadata(ext: str) -> dict:
    # strip anything time- or version-dependent from the output files
    if ext == "svg":
        return {"Date": None, "Creator": None}
    return {"Software": None}

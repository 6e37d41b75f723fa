"""Acceptance suite for the figure pipeline, printing a PASS/FAIL line
(run with ``pytest -s``)."""

import numpy as np

from dcavity_figures import RECIPES, load_curves, recipe, render


def _report(name: str, ok: bool, detail: str = "") -> bool:
    print(f"{'PASS' if ok else 'FAIL'}: {name}" + (f" ({detail})" if detail else ""))
    return ok


def test_figure_regression(csv_dir, tmp_path):
    problems = []

    # qualitative extrema of the freshly generated data
    axis, curves = load_curves(recipe("fig2"), csv_dir)
    dip = curves["re_epsT__n=0.7"]
    mid = np.argmin(np.abs(axis))
    if not (abs(dip[mid]) < 5e-2 and dip[mid] == np.nanmin(dip)):
        problems.append("fig2 dip")
    for name in ("fig4", "fig5", "fig6"):
        axis, curves = load_curves(recipe(name), csv_dir)
        mid = np.argmin(np.abs(axis))
        for col_name, col in curves.items():
            if not col_name.endswith("n=0") and col[mid] != np.nanmax(col):
                problems.append(f"{name} {col_name} peak")

    # every preset renders, and re-rendering unchanged inputs is pixel-identical
    for name in RECIPES:
        first = render(recipe(name), csv_dir, tmp_path / "a")
        second = render(recipe(name), csv_dir, tmp_path / "b")
        for p1, p2 in zip(first, second):
            if p1.read_bytes() != p2.read_bytes():
                problems.append(f"{name} {p1.suffix} not reproducible")

    assert _report(
        "figure regression",
        not problems,
        "all presets rendered twice" if not problems else "; ".join(problems),
    )

"""Figure recipes: which CSV columns go where, and how each curve is styled.

Line styles follow the source captions word for word (red-dashed,
black-solid, black-dotted, green-dotted-dashed, blue-dashed, red-solid) so
the output can be diffed visually against the originals.
"""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class CurveStyle:
    color: str
    linestyle: str
    label: str


@dataclass(frozen=True)
class InsetSpec:
    csv_name: str  # file name (without directory) holding the inset data
    column: str
    xlabel: str
    ylabel: str
    style: CurveStyle
    offset: float = 0.0  # added to the column before plotting


@dataclass(frozen=True)
class FigureRecipe:
    name: str
    csv_name: str
    xlabel: str
    ylabel: str
    # column name in the CSV -> how to draw it, in legend order
    curves: dict[str, CurveStyle] = field(default_factory=dict)
    inset: InsetSpec | None = None


_TWO_CURVE = {
    "n=0": CurveStyle("red", "--", "n = 0"),
    "n=0.7": CurveStyle("black", "-", "n = 0.7"),
}

_FOUR_CURVE = {
    "n=0": CurveStyle("black", ":", "n = 0"),
    "n=0.7": CurveStyle("green", "-.", "n = 0.7"),
    "n=0.8": CurveStyle("blue", "--", "n = 0.8"),
    "n=0.9": CurveStyle("red", "-", "n = 0.9"),
}


def _curves(quantity: str, styles: dict[str, CurveStyle]) -> dict[str, CurveStyle]:
    return {f"{quantity}__{suffix}": style for suffix, style in styles.items()}


RECIPES: dict[str, FigureRecipe] = {
    "fig2": FigureRecipe(
        name="fig2",
        csv_name="fig2.csv",
        xlabel=r"$x/\kappa$",
        ylabel=r"Re$[\varepsilon_T]$",
        curves=_curves("re_epsT", _TWO_CURVE),
        inset=InsetSpec(
            csv_name="fig2_inset.csv",
            column="re_epsT__n=0.7",
            xlabel=r"$x/\kappa$",
            ylabel=r"Re$[\varepsilon_T]$",
            style=CurveStyle("black", "-", "n = 0.7"),
        ),
    ),
    "fig3": FigureRecipe(
        name="fig3",
        csv_name="fig3.csv",
        xlabel=r"$x/\kappa$",
        ylabel=r"Im$[\varepsilon_T]$",
        curves=_curves("im_epsT", _TWO_CURVE),
    ),
    "fig4": FigureRecipe(
        name="fig4",
        csv_name="fig4.csv",
        xlabel=r"$x/\kappa$",
        ylabel=r"$|\kappa\,\delta b_+/\varepsilon_p|^2$",
        curves=_curves("abs2_b", _FOUR_CURVE),
        inset=InsetSpec(
            csv_name="fig4_inset.csv",
            column="abs2_b",
            xlabel=r"$n$",
            ylabel=r"$|\kappa\,\delta b_+/\varepsilon_p|^2$",
            style=CurveStyle("black", "-", ""),
        ),
    ),
    "fig5": FigureRecipe(
        name="fig5",
        csv_name="fig5.csv",
        xlabel=r"$x/\kappa$",
        ylabel=r"$|\varepsilon_{outL+}/\varepsilon_p|^2$",
        curves=_curves("abs2_outL", _FOUR_CURVE),
        inset=InsetSpec(
            csv_name="fig5_inset.csv",
            column="abs2_outL",
            xlabel=r"$n$",
            ylabel=r"$|\varepsilon_{outL+}/\varepsilon_p|^2$",
            style=CurveStyle("black", "-", ""),
        ),
    ),
    "fig6": FigureRecipe(
        name="fig6",
        csv_name="fig6.csv",
        xlabel=r"$x/\kappa$",
        ylabel=r"$|\varepsilon_{outR-}/\varepsilon_p|^2$",
        curves=_curves("abs2_outR", _FOUR_CURVE),
        inset=InsetSpec(
            csv_name="fig6_inset.csv",
            column="abs2_outR",
            xlabel=r"$n$",
            # the reference inset plots the right output shifted up by one
            ylabel=r"$|\varepsilon_{outR-}/\varepsilon_p|^2 + 1$",
            style=CurveStyle("black", "-", ""),
            offset=1.0,
        ),
    ),
}


def recipe(name: str) -> FigureRecipe:
    try:
        return RECIPES[name]
    except KeyError:
        valid = ", ".join(RECIPES)
        raise KeyError(f"unknown figure '{name}'; valid names: {valid}") from None

"""Figure rendering for dcavity sweep CSV data."""

from .recipes import RECIPES, FigureRecipe, InsetSpec, recipe
from .render import EmptyDataError, MissingColumnError, load_curves, render

__all__ = [
    "RECIPES",
    "FigureRecipe",
    "InsetSpec",
    "recipe",
    "EmptyDataError",
    "MissingColumnError",
    "load_curves",
    "render",
]

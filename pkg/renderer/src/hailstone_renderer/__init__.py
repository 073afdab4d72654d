"""Image rendering for the hailstone figure datasets (pure view, no math)."""

from .render import RenderSpec, build_figure, load_style, render
from .schema import SchemaError, load_dataset

__version__ = "0.1.0"

__all__ = ["RenderSpec", "SchemaError", "build_figure", "load_dataset", "load_style", "render"]

"""Regret-curve figures from experiment-harness CSV output."""

__version__ = "0.1.0"

from .plotting import PlotSpec, SchemaError, build_figure, load_series, render

__all__ = ["PlotSpec", "SchemaError", "build_figure", "load_series", "render", "__version__"]

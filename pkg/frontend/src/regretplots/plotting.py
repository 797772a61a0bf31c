"""Render mean-regret curves with standard-deviation bands.

Consumes the harness CSV schema
``round,mean_cum_regret,std_cum_regret,rep_0,...`` and reads only the
three aggregate columns. Rendering is a pure function of the CSV
contents: the same inputs produce an identical plot data layer.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

import matplotlib
import numpy as np

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402  (backend must be pinned first)

EXPECTED_PREFIX = ("round", "mean_cum_regret", "std_cum_regret")


class SchemaError(ValueError):
    """The CSV does not match the harness output schema."""


@dataclass(frozen=True)
class PlotSpec:
    inputs: tuple[Path, ...]
    labels: tuple[str, ...]
    output: Path
    logy: bool = False

    def __post_init__(self) -> None:
        object.__setattr__(self, "inputs", tuple(Path(p) for p in self.inputs))
        object.__setattr__(self, "labels", tuple(self.labels))
        object.__setattr__(self, "output", Path(self.output))
        if not self.inputs:
            raise SchemaError("at least one input CSV is required")
        if len(self.labels) != len(self.inputs):
            raise SchemaError(
                f"{len(self.inputs)} inputs but {len(self.labels)} labels"
            )


def load_series(path: str | Path) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """(rounds, mean, std) from one harness CSV; aggregate columns only."""
    path = Path(path)
    if not path.exists():
        raise FileNotFoundError(path)
    with open(path) as fh:
        header = fh.readline().strip().split(",")
    if tuple(header[:3]) != EXPECTED_PREFIX:
        raise SchemaError(f"{path}: header starts with {header[:3]}, want {list(EXPECTED_PREFIX)}")
    data = np.loadtxt(path, delimiter=",", skiprows=1, usecols=(0, 1, 2), ndmin=2)
    if data.size == 0:
        raise SchemaError(f"{path}: no data rows")
    return data[:, 0], data[:, 1], data[:, 2]


def build_figure(spec: PlotSpec):
    """One axes: a mean line plus a +/- one-std band per policy, in spec order."""
    series = [load_series(p) for p in spec.inputs]
    rounds = series[0][0]
    for (other, _, _), path in zip(series[1:], spec.inputs[1:]):
        if not np.array_equal(rounds, other):
            raise SchemaError(f"{path}: round column differs from {spec.inputs[0]}")
    fig, ax = plt.subplots(figsize=(7.0, 4.5))
    for (r, mean, std), label in zip(series, spec.labels):
        ax.plot(r, mean, label=label, linewidth=1.5)
        ax.fill_between(r, mean - std, mean + std, alpha=0.25, linewidth=0)
    ax.set_xlabel("round")
    ax.set_ylabel("mean cumulative regret")
    if spec.logy:
        ax.set_yscale("log")
    ax.legend(loc="upper left")
    fig.tight_layout()
    return fig


def render(spec: PlotSpec) -> Path:
    """Write the figure to spec.output and return the path."""
    fig = build_figure(spec)
    spec.output.parent.mkdir(parents=True, exist_ok=True)
    fig.savefig(spec.output, dpi=150)
    plt.close(fig)
    return spec.output

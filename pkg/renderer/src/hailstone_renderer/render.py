"""Build and save the five figures from validated dataset columns.

No mathematics happens here; every plotted number comes from the input
files. Figure 2 uses a log-scaled value axis, figure 5 a log-scaled
interval axis; figure 4 combines the sequence panel (4a) with the
histogram panel (4b).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
from matplotlib.figure import Figure

from .schema import SchemaError, load_dataset

FIGURE_IDS = ("1", "2", "3", "4", "5")

# dataset ids each figure consumes, in input order
FIGURE_INPUTS = {
    "1": ["1"],
    "2": ["2"],
    "3": ["3"],
    "4": ["4a", "4b"],
    "5": ["5"],
}

DEFAULT_STYLE = {
    "figsize": [8.0, 5.0],
    "dpi": 100,
    "color": "#1f77b4",
    "secondary_color": "#d62728",
    "line_width": 1.0,
    "marker_size": 4.0,
    "grid": True,
}


@dataclass
class RenderSpec:
    """One rendering job: which figure, which input files, where to save."""

    figure_id: str
    inputs: list[Path]
    output: Path
    style: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.figure_id not in FIGURE_IDS:
            raise SchemaError(f"unknown figure id {self.figure_id!r}")
        expected = len(FIGURE_INPUTS[self.figure_id])
        if len(self.inputs) != expected:
            raise SchemaError(
                f"figure {self.figure_id} takes {expected} input file(s), got {len(self.inputs)}"
            )


def load_style(path: str | Path | None = None) -> dict:
    """The default style, optionally overridden by a JSON config file."""
    style = dict(DEFAULT_STYLE)
    if path is not None:
        with open(path) as handle:
            overrides = json.load(handle)
        if not isinstance(overrides, dict):
            raise SchemaError("style config must be a JSON object")
        unknown = set(overrides) - set(DEFAULT_STYLE)
        if unknown:
            raise SchemaError(f"unknown style keys: {sorted(unknown)}")
        style.update(overrides)
    return style


def build_figure(spec: RenderSpec) -> Figure:
    """Validate the inputs and return the assembled matplotlib figure."""
    style = {**DEFAULT_STYLE, **spec.style}
    datasets = [load_dataset(path, dataset_id)
                for path, dataset_id in zip(spec.inputs, FIGURE_INPUTS[spec.figure_id])]
    builder = {
        "1": _build_fig1,
        "2": _build_fig2,
        "3": _build_fig3,
        "4": _build_fig4,
        "5": _build_fig5,
    }[spec.figure_id]
    fig = builder(datasets, style)
    fig.set_dpi(style["dpi"])
    return fig


def render(spec: RenderSpec) -> Path:
    """Render one figure to spec.output (format from the suffix: .png or .svg)."""
    fig = build_figure(spec)
    try:
        fig.savefig(spec.output)
    finally:
        plt.close(fig)
    return Path(spec.output)


def _new_axes(style, ncols=1):
    fig, axes = plt.subplots(1, ncols, figsize=tuple(style["figsize"]))
    for ax in (axes if ncols > 1 else [axes]):
        if style["grid"]:
            ax.grid(True, alpha=0.3)
    return fig, axes


def _build_fig1(datasets, style):
    (data,) = datasets
    fig, ax = _new_axes(style)
    ax.plot(data["x"], data["pow2_factor"], color=style["color"],
            linewidth=style["line_width"], drawstyle="steps-mid")
    ax.set_xlabel("x")
    ax.set_ylabel("largest power-of-two divisor")
    ax.set_title("Even factors of the integers")
    return fig


def _build_fig2(datasets, style):
    (data,) = datasets
    fig, ax = _new_axes(style)
    ax.plot(data["n"], data["reflected_tzs"], color=style["color"],
            linewidth=style["line_width"], label="trailing zeros of reflected index")
    ax.plot(data["n"], data["sorted_tzs"], color=style["secondary_color"],
            linewidth=style["line_width"], linestyle="--", label="sorted trailing zeros")
    ax.set_yscale("log")
    ax.set_xlabel("n")
    ax.set_ylabel("trailing zeros")
    ax.set_title("Trailing zeros over reflected indices")
    ax.legend()
    return fig


def _build_fig3(datasets, style):
    (data,) = datasets
    fig, ax = _new_axes(style)
    ax.scatter(data["reflect_prev"], data["reflect_curr"], s=style["marker_size"],
               color=style["color"])
    ax.set_xlabel("reflection of x - 1")
    ax.set_ylabel("reflection of x")
    ax.set_title("Global map of consecutive reflections")
    return fig


def _build_fig4(datasets, style):
    sequence, histograms = datasets
    fig, (left, right) = _new_axes(style, ncols=2)
    left.plot(sequence["n"], sequence["rld"], color=style["color"],
              linewidth=style["line_width"])
    left.set_xlabel("n")
    left.set_ylabel("block count")
    left.set_title("Run-length block counts")
    width = 0.4
    values = histograms["value"]
    right.bar([v - width / 2 for v in values], histograms["rld_count"], width=width,
              color=style["color"], label="block count")
    right.bar([v + width / 2 for v in values], histograms["digit_sum_count"], width=width,
              color=style["secondary_color"], label="digit sum")
    right.set_xlabel("value")
    right.set_ylabel("occurrences")
    right.set_title("Distributions")
    right.legend()
    fig.tight_layout()
    return fig


def _build_fig5(datasets, style):
    (data,) = datasets
    fig, ax = _new_axes(style)
    ax.plot(data["L"], data["p_ratio"], color=style["color"], marker="o",
            markersize=style["marker_size"], linewidth=style["line_width"],
            label="block-count mass ratio")
    ax.plot(data["L"], data["q_gap_mean"], color=style["secondary_color"], marker="s",
            markersize=style["marker_size"], linewidth=style["line_width"],
            label="mean mirror length gap")
    ax.set_xscale("log", base=2)
    ax.set_xlabel("interval length L")
    ax.set_ylabel("ratio / gap")
    ax.set_title("Mass ratios across intervals")
    ax.legend()
    return fig

"""Render the three benchmark figures from a series,x,y CSV.

This package is a pure view layer: it parses the figure-data CSV written
by the frlab CLI (comment lines beginning with '#', then a series,x,y
header, then rows) and draws static figures. It never recomputes a norm
and has no dependency on the numerics package.

Figures:
  fr_curve         -- ratio vs R, log x axis, dashed benchmark line
  deviation_loglog -- |ratio - benchmark| vs R on a log-log scale, with a
                      slope -1/2 guide line through the last point
  comparison_bars  -- one bar per sequence label, dashed benchmark line
"""

import math
import warnings
from dataclasses import dataclass
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

FIGURES = ("fr_curve", "deviation_loglog", "comparison_bars")
IMAGE_FORMATS = ("svg", "png")
KNOWN_SERIES = ("fr_curve", "deviation", "bars", "benchmark")

#: L1/L2 ratio of a centered Gaussian; fallback when the CSV carries no
#: benchmark row.
BENCHMARK = math.sqrt(2.0 / math.pi)

# Fixed canvas and embedded hash salt keep output bytes stable run to run.
_FIGSIZE = (7.0, 4.5)
_DPI = 100
matplotlib.rcParams["svg.hashsalt"] = "figplot"


@dataclass(frozen=True)
class FigureSpec:
    input_csv: Path
    figure: str
    output_path: Path
    image_format: str = "svg"

    def __post_init__(self):
        if self.figure not in FIGURES:
            raise ValueError(f"unknown figure {self.figure!r}")
        if self.image_format not in IMAGE_FORMATS:
            raise ValueError(f"unknown image format {self.image_format!r}")


def validate_csv(path) -> list[str]:
    """Schema diagnostics for a series,x,y file; empty when conformant.

    Each diagnostic carries the 1-based line number in the file. Comment
    lines ('#...') and blank lines are allowed anywhere before the data.
    """
    text = Path(path).read_text(encoding="utf-8")
    diagnostics = []
    header_seen = False
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip() or line.startswith("#"):
            continue
        cells = line.split(",")
        if not header_seen:
            if cells != ["series", "x", "y"]:
                diagnostics.append(
                    f"line {lineno}: header must be 'series,x,y', got {line!r}")
                return diagnostics
            header_seen = True
            continue
        if len(cells) != 3:
            diagnostics.append(f"line {lineno}: expected 3 fields, got {len(cells)}")
            continue
        series, _, y = cells
        if not series:
            diagnostics.append(f"line {lineno}: empty series label")
        try:
            float(y)
        except ValueError:
            diagnostics.append(f"line {lineno}: y is not numeric: {y!r}")
    if not header_seen:
        diagnostics.append("line 1: missing series,x,y header")
    return diagnostics


def read_rows(path) -> list[tuple[str, str, float]]:
    """Parse a validated file into (series, x, y) rows."""
    diagnostics = validate_csv(path)
    if diagnostics:
        raise ValueError(f"malformed figure CSV: {diagnostics[0]}")
    rows = []
    header_seen = False
    for line in Path(path).read_text(encoding="utf-8").splitlines():
        if not line.strip() or line.startswith("#"):
            continue
        if not header_seen:
            header_seen = True
            continue
        series, x, y = line.split(",")
        rows.append((series, x, float(y)))
    unknown = sorted({s for s, _, _ in rows} - set(KNOWN_SERIES))
    if unknown:
        raise ValueError(f"unknown series labels: {', '.join(unknown)}")
    return rows


def _benchmark_value(rows) -> float:
    for series, _, y in rows:
        if series == "benchmark":
            return y
    return BENCHMARK


def _series_xy(rows, name):
    pairs = [(float(x), y) for series, x, y in rows if series == name]
    return [x for x, _ in pairs], [y for _, y in pairs]


def build_figure(figure: str, rows) -> "plt.Figure":
    """Assemble the matplotlib figure for one of the three plots."""
    fig, ax = plt.subplots(figsize=_FIGSIZE, dpi=_DPI)
    bench = _benchmark_value(rows)

    if figure == "fr_curve":
        x, y = _series_xy(rows, "fr_curve")
        if not x:
            raise ValueError("no fr_curve rows in input")
        ax.plot(x, y, marker="o", color="tab:blue", label="Fourier ratio")
        ax.axhline(bench, linestyle="--", color="black",
                   label=f"benchmark {bench:.4f}")
        ax.set_xscale("log")
        ax.set_xlabel("R")
        ax.set_ylabel("L1/L2 ratio")
        ax.legend()

    elif figure == "deviation_loglog":
        x, y = _series_xy(rows, "deviation")
        kept = [(a, b) for a, b in zip(x, y) if b > 0.0]
        dropped = len(x) - len(kept)
        if dropped:
            warnings.warn(f"dropped {dropped} non-positive deviation row(s); "
                          "log scale cannot show them")
        if not kept:
            raise ValueError("no positive deviation rows in input")
        xs = [a for a, _ in kept]
        ys = [b for _, b in kept]
        ax.plot(xs, ys, marker="o", color="tab:blue", label="|ratio - benchmark|")
        # slope -1/2 through the last point; a visual guide only
        x0, y0 = xs[-1], ys[-1]
        guide_y = [y0 * math.sqrt(x0 / a) for a in xs]
        ax.plot(xs, guide_y, linestyle="--", color="gray", label="visual guide (slope -1/2)")
        ax.set_xscale("log")
        ax.set_yscale("log")
        ax.set_xlabel("R")
        ax.set_ylabel("deviation")
        ax.legend()

    else:  # comparison_bars
        labels_y = [(x, y) for series, x, y in rows if series == "bars"]
        if not labels_y:
            raise ValueError("no bars rows in input")
        labels = [x for x, _ in labels_y]
        heights = [y for _, y in labels_y]
        ax.bar(range(len(labels)), heights, color="tab:blue")
        ax.set_xticks(range(len(labels)))
        ax.set_xticklabels(labels, rotation=20, ha="right", fontsize=8)
        ax.axhline(bench, linestyle="--", color="black",
                   label=f"benchmark {bench:.4f}")
        ax.set_ylabel("L1/L2 ratio")
        ax.legend()

    fig.tight_layout()
    return fig


def render(spec: FigureSpec) -> Path:
    """Render the requested figure to spec.output_path; returns the path."""
    rows = read_rows(spec.input_csv)
    fig = build_figure(spec.figure, rows)
    out = Path(spec.output_path)
    out.parent.mkdir(parents=True, exist_ok=True)
    # Suppressing the date metadata keeps SVG output byte-stable.
    metadata = {"Date": None} if spec.image_format == "svg" else None
    fig.savefig(out, format=spec.image_format, metadata=metadata)
    plt.close(fig)
    return out

"""Graph output: a hand-built SVG for the string graph and matplotlib report figures."""

from .fractal import graph_polyline
from .raga import decode_amplitudes

WIDTH = 800
HEIGHT = 400
MARGIN_LEFT = 50
MARGIN_RIGHT = 20
MARGIN_TOP = 20
MARGIN_BOTTOM = 40


def _fmt(v):
    s = f"{v:.3f}".rstrip("0").rstrip(".")
    return "0" if s == "-0" else s


def svg_graph(ls, title=None):
    """SVG document for the graph of ``ls``.

    Contains a single ``<polyline>`` with one vertex per symbol; ticks on the
    y axis sit on bin boundaries, with each symbol labelled inside its bin.
    Output bytes depend only on the input levels and ``title``.
    """
    plot_w = WIDTH - MARGIN_LEFT - MARGIN_RIGHT
    plot_h = HEIGHT - MARGIN_TOP - MARGIN_BOTTOM
    bottom = MARGIN_TOP + plot_h

    def sx(x):
        return MARGIN_LEFT + x * plot_w

    def sy(y):
        return bottom - y * plot_h

    n = ls.raga.n_levels
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{WIDTH}" '
        f'height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}">',
    ]
    if title:
        out.append(f"<title>{_escape(title)}</title>")
    out.append('<rect x="0" y="0" width="100%" height="100%" fill="white"/>')
    out.append('<g stroke="black" stroke-width="1" fill="none">')
    out.append(
        f'<rect x="{MARGIN_LEFT}" y="{MARGIN_TOP}" width="{plot_w}" height="{plot_h}"/>'
    )
    for k in range(n + 1):
        y = _fmt(sy(k / n))
        out.append(f'<line x1="{MARGIN_LEFT - 5}" y1="{y}" x2="{MARGIN_LEFT}" y2="{y}"/>')
    out.append("</g>")

    out.append('<g font-family="monospace" font-size="11" fill="black" text-anchor="end">')
    for k, sym in enumerate(ls.raga.alphabet):
        y = _fmt(sy((2 * k + 1) / (2 * n)) + 4)
        out.append(f'<text x="{MARGIN_LEFT - 8}" y="{y}">{_escape(sym)}</text>')
    out.append("</g>")

    out.append('<g font-family="monospace" font-size="11" fill="black" text-anchor="middle">')
    out.append(f'<text x="{_fmt(sx(0))}" y="{bottom + 15}">1</text>')
    out.append(f'<text x="{_fmt(sx(1))}" y="{bottom + 15}">{len(ls)}</text>')
    out.append("</g>")

    if len(ls) == 1:
        pts = [(0.0, decode_amplitudes(ls)[0])]
    else:
        pts = graph_polyline(ls)
    coords = " ".join(f"{_fmt(sx(x))},{_fmt(sy(y))}" for x, y in pts)
    out.append(
        f'<polyline fill="none" stroke="#1f4e9c" stroke-width="0.8" points="{coords}"/>'
    )
    out.append("</svg>")
    return "\n".join(out) + "\n"


def _escape(s):
    return s.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;").replace('"', "&quot;")


def render_report_figure(ls, report, path, label=None, paper_dimension=None):
    """Write a two-panel figure: the string graph and its box-count fit."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
    import numpy as np

    xs, ys = zip(*graph_polyline(ls))
    ms = np.array([-np.log2(size) for size, _ in report.scales])
    logc = np.array([np.log2(c) for _, c in report.scales])
    slope = report.dimension
    intercept = logc.mean() - slope * ms.mean()

    fig, (ax0, ax1) = plt.subplots(1, 2, figsize=(11, 3.8), gridspec_kw={"width_ratios": [2, 1]})
    ax0.plot(xs, ys, lw=0.6, color="#1f4e9c")
    n = ls.raga.n_levels
    ax0.set_yticks([k / n for k in range(n + 1)])
    ax0.set_yticklabels([])
    ax0.set_yticks([(2 * k + 1) / (2 * n) for k in range(n)], minor=True)
    ax0.set_yticklabels(ls.raga.alphabet, minor=True)
    ax0.tick_params(axis="y", which="minor", length=0)
    ax0.set_xlim(0, 1)
    ax0.set_ylim(0, 1)
    ax0.grid(axis="y", lw=0.3)
    ax0.set_xlabel("position (normalized)")
    ax0.set_title(label or f"{ls.raga.name}, length {len(ls)}")

    ax1.plot(ms, logc, "o", color="black", ms=4)
    ax1.plot(ms, intercept + slope * ms, "-", color="#c0392b", lw=1)
    ax1.set_xlabel("m  (box size 2^-m)")
    ax1.set_ylabel("log2 count")
    text = f"D = {slope:.4f}\nR² = {report.fit_r2:.4f}"
    if paper_dimension is not None:
        text += f"\nref = {paper_dimension}"
    ax1.text(0.05, 0.95, text, transform=ax1.transAxes, va="top", fontsize=9)

    fig.tight_layout()
    fig.savefig(path, dpi=120, metadata={"Software": None})
    plt.close(fig)

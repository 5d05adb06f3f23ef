"""CSV tables and standalone SVG line charts of solutions."""

from __future__ import annotations

import html

import numpy as np

from fracnabla.solver import Solution

__all__ = ["emit_csv", "emit_svg", "format_real"]


def format_real(x: float) -> str:
    """Shortest decimal string that round-trips to *x*; integral values drop
    the trailing ``.0``."""
    text = repr(float(x))
    if text.endswith(".0"):
        text = text[:-2]
    return text


def emit_csv(solution: Solution) -> str:
    """Render ``t,u`` rows for every grid point, LF line endings."""
    grid = solution.values
    lines = ["t,u"]
    lines += [f"{t},{format_real(u)}" for t, u in zip(grid.t, grid.values)]
    return "\n".join(lines) + "\n"


def _fmt(x: float) -> str:
    return f"{x:.2f}"


def emit_svg(
    solution: Solution, width: int = 640, height: int = 400, title: str | None = None
) -> str:
    """Render the solution as a single polyline with labelled axes.

    A constant solution is drawn on the horizontal midline by padding the
    value range symmetrically.
    """
    grid = solution.values
    if len(grid) < 2:
        raise ValueError("need at least two grid points to draw a line")
    if title is None:
        title = solution.problem.name or solution.problem.kind

    t = grid.t.astype(float)
    u = grid.values
    t_lo, t_hi = float(t[0]), float(t[-1])
    u_lo, u_hi = float(np.min(u)), float(np.max(u))
    if u_hi == u_lo:
        pad = max(abs(u_lo), 1.0)
        u_lo, u_hi = u_lo - pad, u_hi + pad

    left, right, top, bottom = 70, 20, 40, 40
    plot_w = width - left - right
    plot_h = height - top - bottom
    xs = left + (t - t_lo) / (t_hi - t_lo) * plot_w
    ys = top + (u_hi - u) / (u_hi - u_lo) * plot_h
    points = " ".join(f"{_fmt(x)},{_fmt(y)}" for x, y in zip(xs, ys))

    x0, x1 = left, left + plot_w
    y0, y1 = top + plot_h, top
    label = html.escape(title)
    return (
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">\n'
        f'<rect width="{width}" height="{height}" fill="white"/>\n'
        f'<text x="{width / 2:g}" y="22" text-anchor="middle" '
        f'font-family="sans-serif" font-size="14">{label}</text>\n'
        f'<g stroke="black" stroke-width="1">\n'
        f'<line x1="{x0}" y1="{y0}" x2="{x1}" y2="{y0}"/>\n'
        f'<line x1="{x0}" y1="{y0}" x2="{x0}" y2="{y1}"/>\n'
        f"</g>\n"
        f'<g font-family="sans-serif" font-size="11">\n'
        f'<text x="{x0}" y="{y0 + 16}" text-anchor="middle">{t_lo:g}</text>\n'
        f'<text x="{x1}" y="{y0 + 16}" text-anchor="middle">{t_hi:g}</text>\n'
        f'<text x="{x0 - 6}" y="{y0}" text-anchor="end">{u_lo:.6g}</text>\n'
        f'<text x="{x0 - 6}" y="{y1 + 4}" text-anchor="end">{u_hi:.6g}</text>\n'
        f'<text x="{(x0 + x1) / 2:g}" y="{height - 6}" text-anchor="middle">t</text>\n'
        f"</g>\n"
        f'<polyline fill="none" stroke="steelblue" stroke-width="1.5" '
        f'points="{points}"/>\n'
        f"</svg>\n"
    )

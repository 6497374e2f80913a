"""Standalone SVG rendering of power curves: sample size on X, power on Y
in [0, 1], one polyline per effect size, with a legend."""

from __future__ import annotations

from .errors import DomainError
from .power import CurveTable

_PALETTE = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b")

_WIDTH, _HEIGHT = 720, 480
_LEFT, _RIGHT, _TOP, _BOTTOM = 64, 150, 28, 52


def curve_svg(curve: CurveTable) -> str:
    """Render the curve table to an SVG document string."""
    if not len(curve):
        raise DomainError("cannot plot an empty curve table")

    n_values = [p.n_total for p in curve]
    n_min, n_max = min(n_values), max(n_values)
    span = max(1, n_max - n_min)

    def sx(n: float) -> float:
        return _LEFT + (n - n_min) / span * (_WIDTH - _LEFT - _RIGHT)

    def sy(power: float) -> float:
        return _TOP + (1.0 - power) * (_HEIGHT - _TOP - _BOTTOM)

    # group points per effect size, preserving first-appearance order
    series: dict[float, list] = {}
    for point in curve:
        series.setdefault(point.f, []).append(point)

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_WIDTH}" '
        f'height="{_HEIGHT}" viewBox="0 0 {_WIDTH} {_HEIGHT}" '
        f'font-family="sans-serif" font-size="12">',
        f'<rect width="{_WIDTH}" height="{_HEIGHT}" fill="white"/>',
    ]

    # axes and ticks
    x_axis_y = sy(0.0)
    parts.append(
        f'<line x1="{_LEFT}" y1="{_TOP}" x2="{_LEFT}" y2="{x_axis_y}" '
        f'stroke="black"/>'
    )
    parts.append(
        f'<line x1="{_LEFT}" y1="{x_axis_y}" x2="{_WIDTH - _RIGHT}" '
        f'y2="{x_axis_y}" stroke="black"/>'
    )
    for tick in range(0, 11, 2):
        power = tick / 10.0
        y = sy(power)
        parts.append(
            f'<line x1="{_LEFT - 4}" y1="{y:.1f}" x2="{_LEFT}" y2="{y:.1f}" stroke="black"/>'
        )
        parts.append(
            f'<text x="{_LEFT - 8}" y="{y + 4:.1f}" text-anchor="end">{power:.1f}</text>'
        )
    n_ticks = sorted({n_min, n_max, *(n_min + round(k * span / 4) for k in range(1, 4))})
    for n in n_ticks:
        x = sx(n)
        parts.append(
            f'<line x1="{x:.1f}" y1="{x_axis_y}" x2="{x:.1f}" y2="{x_axis_y + 4}" stroke="black"/>'
        )
        parts.append(
            f'<text x="{x:.1f}" y="{x_axis_y + 18}" text-anchor="middle">{n}</text>'
        )
    parts.append(
        f'<text x="{(_LEFT + _WIDTH - _RIGHT) / 2:.1f}" y="{_HEIGHT - 12}" '
        f'text-anchor="middle">total sample size N</text>'
    )
    parts.append(
        f'<text x="16" y="{(_TOP + x_axis_y) / 2:.1f}" text-anchor="middle" '
        f'transform="rotate(-90 16 {(_TOP + x_axis_y) / 2:.1f})">power (1 - beta)</text>'
    )

    # one polyline (or lone marker) per effect size
    legend_y = _TOP + 10
    for idx, (f_value, points) in enumerate(series.items()):
        color = _PALETTE[idx % len(_PALETTE)]
        points = sorted(points, key=lambda p: p.n_total)
        if len(points) > 1:
            coords = " ".join(f"{sx(p.n_total):.2f},{sy(p.power):.2f}" for p in points)
            parts.append(
                f'<polyline points="{coords}" fill="none" stroke="{color}" stroke-width="2"/>'
            )
        for p in points if len(points) == 1 else points[:: max(1, len(points) - 1)]:
            parts.append(
                f'<circle cx="{sx(p.n_total):.2f}" cy="{sy(p.power):.2f}" r="3" fill="{color}"/>'
            )
        lx = _WIDTH - _RIGHT + 14
        parts.append(
            f'<line x1="{lx}" y1="{legend_y}" x2="{lx + 24}" y2="{legend_y}" '
            f'stroke="{color}" stroke-width="2"/>'
        )
        parts.append(
            f'<text x="{lx + 30}" y="{legend_y + 4}">f = {f_value:g}</text>'
        )
        legend_y += 18

    parts.append("</svg>")
    return "\n".join(parts)


def write_curve_svg(curve: CurveTable, path: str) -> None:
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(curve_svg(curve))

"""Barcode rendering as standalone SVG documents."""

from __future__ import annotations

from xml.sax.saxutils import escape

from .reduction import Barcode

CANVAS_WIDTH = 960
_MARGIN_LEFT = 70
_MARGIN_RIGHT = 50
_MARGIN_TOP = 34
_MARGIN_BOTTOM = 42
_BAR_HEIGHT = 10
_BAR_GAP = 4
_GROUP_HEADER = 20
_PALETTE = ("#1b6ca8", "#c0392b", "#1e8449", "#7d3c98", "#b7950b", "#34495e")


def _fmt(x: float) -> str:
    return f"{x:.2f}"


def render_barcode_svg(
    barcode: Barcode,
    include_zero_length: bool = False,
    axis_max: float | None = None,
    title: str | None = None,
    config: dict | None = None,
) -> str:
    """Draw one horizontal bar per interval, grouped by dimension.

    The x-axis spans [0, axis_max] (defaulting to the largest finite
    value in the barcode); infinite deaths run to the right margin and
    end in an arrowhead. ``config`` key/value pairs are echoed in an
    XML comment after the declaration, mirroring the ``#`` headers of
    the TSV outputs. Output is deterministic for fixed input.
    """
    groups = [
        (k, barcode.intervals(k, include_zero_length=include_zero_length))
        for k in barcode.dims
    ]
    groups = [(k, ivs) for k, ivs in groups if ivs]

    if axis_max is None:
        axis_max = barcode.max_finite_value()
    if axis_max <= 0:
        axis_max = 1.0

    n_bars = sum(len(ivs) for _, ivs in groups)
    height = (
        _MARGIN_TOP
        + len(groups) * _GROUP_HEADER
        + n_bars * (_BAR_HEIGHT + _BAR_GAP)
        + _MARGIN_BOTTOM
    )
    plot_w = CANVAS_WIDTH - _MARGIN_LEFT - _MARGIN_RIGHT

    def x_of(value: float) -> float:
        return _MARGIN_LEFT + plot_w * min(value, axis_max) / axis_max

    out = ['<?xml version="1.0" encoding="UTF-8"?>']
    if config:
        echo = " ".join(f"{k}={config[k]}" for k in sorted(config))
        out.append(f"<!-- {escape(echo).replace('--', '- -')} -->")
    out += [
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{CANVAS_WIDTH}" height="{height}" '
        f'viewBox="0 0 {CANVAS_WIDTH} {height}">',
        f'<rect x="0" y="0" width="{CANVAS_WIDTH}" height="{height}" fill="white"/>',
    ]
    if title:
        out.append(
            f'<text x="{CANVAS_WIDTH // 2}" y="20" text-anchor="middle" '
            f'font-family="sans-serif" font-size="14">{escape(title)}</text>'
        )

    axis_y = height - _MARGIN_BOTTOM + 12
    out.append(
        f'<line x1="{_MARGIN_LEFT}" y1="{axis_y}" x2="{_MARGIN_LEFT + plot_w}" '
        f'y2="{axis_y}" stroke="black" stroke-width="1"/>'
    )
    for t in range(5):
        value = axis_max * t / 4
        x = x_of(value)
        out.append(
            f'<line x1="{_fmt(x)}" y1="{axis_y}" x2="{_fmt(x)}" y2="{axis_y + 5}" '
            f'stroke="black" stroke-width="1"/>'
        )
        out.append(
            f'<text x="{_fmt(x)}" y="{axis_y + 18}" text-anchor="middle" '
            f'font-family="sans-serif" font-size="11">{value:.3g}</text>'
        )

    y = _MARGIN_TOP
    for k, intervals in groups:
        color = _PALETTE[k % len(_PALETTE)]
        out.append(
            f'<text x="8" y="{y + 14}" font-family="sans-serif" '
            f'font-size="12" fill="{color}">k = {k} ({len(intervals)})</text>'
        )
        y += _GROUP_HEADER
        for iv in intervals:
            x0 = x_of(iv.birth)
            if iv.is_infinite:
                x1 = _MARGIN_LEFT + plot_w
            else:
                x1 = x_of(iv.death)
            width = max(x1 - x0, 1.0)
            out.append(
                f'<rect x="{_fmt(x0)}" y="{y}" width="{_fmt(width)}" '
                f'height="{_BAR_HEIGHT}" fill="{color}"/>'
            )
            if iv.is_infinite:
                tip = _MARGIN_LEFT + plot_w + 12
                mid = y + _BAR_HEIGHT / 2
                out.append(
                    f'<polygon points="{_fmt(x1)},{_fmt(y - 2)} {_fmt(tip)},{_fmt(mid)} '
                    f'{_fmt(x1)},{_fmt(y + _BAR_HEIGHT + 2)}" fill="{color}"/>'
                )
            y += _BAR_HEIGHT + _BAR_GAP
    out.append("</svg>")
    return "\n".join(out) + "\n"

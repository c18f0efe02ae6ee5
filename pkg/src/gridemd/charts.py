"""Two-panel SVG chart from sweep summaries, built as plain strings.

Left panel: mean relative error of the raw vectorized estimate and of the
quasi distance against the exact distance, per grid height. Right panel:
mean per-call times of all three computations on a log scale. No plotting
library is used; the output is self-contained static SVG.
"""

from __future__ import annotations

import math
from typing import Sequence, TextIO
from xml.sax.saxutils import escape

from .bench import SweepSummary
from .errors import EmptyInputError

PANEL_W = 440
PANEL_H = 360
MARGIN_L = 64
MARGIN_R = 16
MARGIN_T = 40
MARGIN_B = 48
GAP = 40

ERROR_SERIES = (
    ("series-err-wd", "mean_err_wd", "#d62728", "raw 1D on vec"),
    ("series-err-qmwd", "mean_err_qmwd", "#1f77b4", "quasi distance"),
)
TIME_SERIES = (
    ("series-time-mwd", "mean_time_mwd_ns", "#2ca02c", "exact"),
    ("series-time-qmwd", "mean_time_qmwd_ns", "#1f77b4", "quasi"),
    ("series-time-wd", "mean_time_wd_ns", "#d62728", "raw 1D"),
)


def _fmt(x: float) -> str:
    return f"{x:.2f}".rstrip("0").rstrip(".") or "0"


def _x_positions(ms: Sequence[int], x0: float, width: float) -> dict[int, float]:
    lo, hi = min(ms), max(ms)
    span = (hi - lo) or 1
    return {m: x0 + (m - lo) / span * width for m in ms}


def _linear_ticks(top: float, count: int = 5) -> list[float]:
    if top <= 0:
        return [0.0, 1.0]
    step = top / count
    mag = 10 ** math.floor(math.log10(step))
    for mult in (1, 2, 2.5, 5, 10):
        if mag * mult >= step:
            step = mag * mult
            break
    n = math.ceil(top / step)
    return [i * step for i in range(n + 1)]


def _log_ticks(lo: float, hi: float) -> list[float]:
    lo_e = math.floor(math.log10(lo))
    hi_e = math.ceil(math.log10(hi))
    return [10.0**e for e in range(lo_e, hi_e + 1)]


def _axis_x(parts: list[str], ms: Sequence[int], xs: dict[int, float], y: float) -> None:
    shown = ms if len(ms) <= 12 else ms[:: max(1, len(ms) // 12)]
    for m in shown:
        x = xs[m]
        parts.append(
            f'<line x1="{x:.1f}" y1="{y:.1f}" x2="{x:.1f}" y2="{y + 5:.1f}" '
            'stroke="#444" stroke-width="1"/>'
        )
        parts.append(
            f'<text x="{x:.1f}" y="{y + 18:.1f}" font-size="11" '
            f'text-anchor="middle" fill="#444">{m}</text>'
        )


def _panel_frame(parts: list[str], x0: float, y0: float, title: str) -> None:
    parts.append(
        f'<rect x="{x0:.1f}" y="{y0:.1f}" width="{PANEL_W}" height="{PANEL_H}" '
        'fill="none" stroke="#888" stroke-width="1"/>'
    )
    parts.append(
        f'<text x="{x0 + PANEL_W / 2:.1f}" y="{y0 - 12:.1f}" font-size="14" '
        f'text-anchor="middle" fill="#222">{escape(title)}</text>'
    )


def _legend(
    parts: list[str],
    entries: Sequence[tuple[str, str]],
    x: float,
    y: float,
) -> None:
    for i, (color, label) in enumerate(entries):
        ly = y + i * 18
        parts.append(
            f'<line x1="{x:.1f}" y1="{ly:.1f}" x2="{x + 22:.1f}" y2="{ly:.1f}" '
            f'stroke="{color}" stroke-width="2"/>'
        )
        parts.append(
            f'<text x="{x + 28:.1f}" y="{ly + 4:.1f}" font-size="12" '
            f'fill="#222">{escape(label)}</text>'
        )


def _polyline(parts: list[str], sid: str, color: str, pts: list[tuple[float, float]]) -> None:
    body = " ".join(f"{x:.1f},{y:.1f}" for x, y in pts)
    parts.append(
        f'<polyline id="{sid}" points="{body}" fill="none" '
        f'stroke="{color}" stroke-width="2"/>'
    )
    for x, y in pts:
        parts.append(f'<circle cx="{x:.1f}" cy="{y:.1f}" r="2.5" fill="{color}"/>')


def emit_svg(summaries: Sequence[SweepSummary], dest: TextIO) -> None:
    """Render the two-panel chart for the given per-size summaries."""
    if not summaries:
        raise EmptyInputError("no summaries to chart")
    rows = sorted(summaries, key=lambda s: s.m)
    ms = [s.m for s in rows]
    n = rows[0].n

    total_w = MARGIN_L + PANEL_W + GAP + MARGIN_L + PANEL_W + MARGIN_R
    total_h = MARGIN_T + PANEL_H + MARGIN_B
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{total_w}" '
        f'height="{total_h}" viewBox="0 0 {total_w} {total_h}">',
        f'<rect x="0" y="0" width="{total_w}" height="{total_h}" fill="#ffffff"/>',
    ]

    # Left panel: mean relative error, linear y starting at 0.
    ex0, ey0 = float(MARGIN_L), float(MARGIN_T)
    xs = _x_positions(ms, ex0 + 10, PANEL_W - 20)
    _panel_frame(parts, ex0, ey0, f"Mean relative error vs exact (n={n})")
    err_top = max(
        (getattr(s, field) or 0.0 for s in rows for _, field, _, _ in ERROR_SERIES),
        default=0.0,
    )
    ticks = _linear_ticks(err_top if err_top > 0 else 1.0)
    top_val = ticks[-1]
    for tv in ticks:
        y = ey0 + PANEL_H - tv / top_val * (PANEL_H - 20)
        parts.append(
            f'<line x1="{ex0:.1f}" y1="{y:.1f}" x2="{ex0 + PANEL_W:.1f}" '
            f'y2="{y:.1f}" stroke="#ddd" stroke-width="1"/>'
        )
        parts.append(
            f'<text x="{ex0 - 6:.1f}" y="{y + 4:.1f}" font-size="11" '
            f'text-anchor="end" fill="#444">{_fmt(tv)}</text>'
        )
    for sid, field, color, _ in ERROR_SERIES:
        pts = []
        for s in rows:
            v = getattr(s, field)
            if v is None:
                continue
            pts.append((xs[s.m], ey0 + PANEL_H - v / top_val * (PANEL_H - 20)))
        _polyline(parts, sid, color, pts)
    _axis_x(parts, ms, xs, ey0 + PANEL_H)
    parts.append(
        f'<text x="{ex0 + PANEL_W / 2:.1f}" y="{ey0 + PANEL_H + 38:.1f}" '
        'font-size="12" text-anchor="middle" fill="#222">grid height m</text>'
    )
    _legend(
        parts,
        [(c, lbl) for _, _, c, lbl in ERROR_SERIES],
        ex0 + 16,
        ey0 + 20,
    )

    # Right panel: mean per-call time, log y.
    tx0, ty0 = float(MARGIN_L + PANEL_W + GAP + MARGIN_L), float(MARGIN_T)
    txs = _x_positions(ms, tx0 + 10, PANEL_W - 20)
    _panel_frame(parts, tx0, ty0, "Mean time per call (log scale)")
    times = [
        max(float(getattr(s, field)), 1.0)
        for s in rows
        for _, field, _, _ in TIME_SERIES
        if getattr(s, field) is not None
    ]
    t_lo, t_hi = (min(times), max(times)) if times else (1.0, 10.0)
    if t_lo == t_hi:
        t_hi = t_lo * 10
    lticks = _log_ticks(t_lo, t_hi)
    lo_l, hi_l = math.log10(lticks[0]), math.log10(lticks[-1])

    def ty(v: float) -> float:
        frac = (math.log10(max(v, 1.0)) - lo_l) / (hi_l - lo_l)
        return ty0 + PANEL_H - frac * (PANEL_H - 20)

    for tv in lticks:
        y = ty(tv)
        label = f"{tv / 1e6:g} ms" if tv >= 1e6 else f"{tv / 1e3:g} us" if tv >= 1e3 else f"{tv:g} ns"
        parts.append(
            f'<line x1="{tx0:.1f}" y1="{y:.1f}" x2="{tx0 + PANEL_W:.1f}" '
            f'y2="{y:.1f}" stroke="#ddd" stroke-width="1"/>'
        )
        parts.append(
            f'<text x="{tx0 - 6:.1f}" y="{y + 4:.1f}" font-size="11" '
            f'text-anchor="end" fill="#444">{escape(label)}</text>'
        )
    for sid, field, color, _ in TIME_SERIES:
        pts = []
        for s in rows:
            v = getattr(s, field)
            if v is None:
                continue
            pts.append((txs[s.m], ty(float(v))))
        _polyline(parts, sid, color, pts)
    _axis_x(parts, ms, txs, ty0 + PANEL_H)
    parts.append(
        f'<text x="{tx0 + PANEL_W / 2:.1f}" y="{ty0 + PANEL_H + 38:.1f}" '
        'font-size="12" text-anchor="middle" fill="#222">grid height m</text>'
    )
    _legend(
        parts,
        [(c, lbl) for _, _, c, lbl in TIME_SERIES],
        tx0 + 16,
        ty0 + 20,
    )

    parts.append("</svg>")
    dest.write("\n".join(parts) + "\n")

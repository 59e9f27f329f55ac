"""CSV, SVG and JSON writers. Data files carry no timestamps so reruns are byte-identical."""
import json
import math

import numpy as np

SVG_WIDTH = 800
SVG_HEIGHT = 500
_MARGIN = dict(left=70, right=20, top=20, bottom=50)


def fmt(x):
    return f"{x:.12g}"


def trace_csv(times, values):
    lines = ["t,negativity"]
    lines += [f"{fmt(t)},{fmt(v)}" for t, v in zip(times, values)]
    return "\n".join(lines) + "\n"


def read_trace_csv(text):
    rows = text.strip().splitlines()
    if not rows or rows[0] != "t,negativity":
        raise ValueError("not a negativity trace: missing 't,negativity' header")
    data = np.array([[float(x) for x in row.split(",")] for row in rows[1:]], dtype=float)
    data = data.reshape(-1, 2)
    return data[:, 0], data[:, 1]


def sweep_csv(param, rows):
    lines = [f"{param},min,max,time_average"]
    lines += [f"{fmt(value)},{fmt(s.min)},{fmt(s.max)},{fmt(s.time_average)}" for value, s in rows]
    return "\n".join(lines) + "\n"


def stats_json(stats):
    return json.dumps(stats.as_dict(), indent=2, sort_keys=True) + "\n"


def nice_ticks(lo, hi, target=6):
    """Round-number tick positions covering [lo, hi]."""
    if hi <= lo:
        hi = lo + 1.0
    raw = (hi - lo) / target
    mag = 10.0 ** math.floor(math.log10(raw))
    step = next(m * mag for m in (1, 2, 2.5, 5, 10) if m * mag >= raw)
    first = math.ceil(lo / step - 1e-9) * step
    ticks = []
    k = 0
    while first + k * step <= hi + 1e-9 * step:
        ticks.append(round(first + k * step, 12))
        k += 1
    return ticks


def trace_svg(times, values, title="negativity"):
    times = np.asarray(times, dtype=float)
    values = np.asarray(values, dtype=float)
    x0, x1 = float(times[0]), float(times[-1])
    if x1 == x0:
        x1 = x0 + 1.0
    y0, y1 = 0.0, 0.5
    if values.size and values.max() > y1:
        y1 = float(values.max())
    left, right, top, bottom = (_MARGIN[k] for k in ("left", "right", "top", "bottom"))
    pw = SVG_WIDTH - left - right
    ph = SVG_HEIGHT - top - bottom

    def sx(t):
        return left + (t - x0) / (x1 - x0) * pw

    def sy(v):
        return top + (1.0 - (v - y0) / (y1 - y0)) * ph

    pts = " ".join(f"{sx(t):.2f},{sy(v):.2f}" for t, v in zip(times, values))
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {SVG_WIDTH} {SVG_HEIGHT}" '
        f'width="{SVG_WIDTH}" height="{SVG_HEIGHT}">',
        '<rect width="100%" height="100%" fill="white"/>',
        f'<rect x="{left}" y="{top}" width="{pw}" height="{ph}" fill="none" stroke="black"/>',
    ]
    for t in nice_ticks(x0, x1):
        x = sx(t)
        out.append(f'<line x1="{x:.2f}" y1="{top + ph}" x2="{x:.2f}" y2="{top + ph + 5}" stroke="black"/>')
        out.append(
            f'<text x="{x:.2f}" y="{top + ph + 20}" font-size="12" text-anchor="middle">{t:g}</text>'
        )
    for v in nice_ticks(y0, y1, target=5):
        y = sy(v)
        out.append(f'<line x1="{left - 5}" y1="{y:.2f}" x2="{left}" y2="{y:.2f}" stroke="black"/>')
        out.append(
            f'<text x="{left - 8}" y="{y + 4:.2f}" font-size="12" text-anchor="end">{v:g}</text>'
        )
    out.append(
        f'<text x="{left + pw / 2:.2f}" y="{SVG_HEIGHT - 10}" font-size="14" text-anchor="middle">t</text>'
    )
    out.append(
        f'<text x="18" y="{top + ph / 2:.2f}" font-size="14" text-anchor="middle" '
        f'transform="rotate(-90 18 {top + ph / 2:.2f})">{title}</text>'
    )
    out.append(f'<polyline fill="none" stroke="#1f77b4" stroke-width="1.5" points="{pts}"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"

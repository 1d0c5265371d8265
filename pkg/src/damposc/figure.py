"""Self-contained SVG rendering of density snapshots over one period.

No plotting dependency: the panel is assembled from polylines with fixed
decimal formatting, so identical inputs give byte-identical files.
"""

import math

_W, _H = 880, 520
_ML, _MR, _MT, _MB = 70, 160, 40, 55


def _color(frac: float) -> str:
    # cold-to-warm sweep across the snapshot sequence
    r = round(40 + 200 * frac)
    g = round(70 + 40 * math.sin(math.pi * frac))
    b = round(220 - 180 * frac)
    return f"rgb({r},{g},{b})"


def _path(xs, ys, x_lo, x_hi, y_hi):
    sx = (_W - _ML - _MR) / (x_hi - x_lo)
    sy = (_H - _MT - _MB) / y_hi
    pts = []
    for x, y in zip(xs, ys):
        if x < x_lo or x > x_hi:
            continue
        px = _ML + (x - x_lo) * sx
        py = _H - _MB - max(0.0, y) * sy
        pts.append(f"{px:.2f},{py:.2f}")
    return " ".join(pts)


def render_density_svg(xs, snapshots, x_window=None, title="Density over one period"):
    """Build the SVG panel.

    snapshots: sequence of (t, rho_numeric, rho_analytic) with rho arrays
    aligned to xs.  The analytic curves are drawn dashed over the numeric
    ones.  Returns the SVG document as a string.
    """
    if x_window is None:
        x_window = (float(xs[0]), float(xs[-1]))
    x_lo, x_hi = x_window
    y_hi = 0.0
    for _, rho_n, rho_a in snapshots:
        y_hi = max(y_hi, float(max(rho_n.max(), rho_a.max())))
    y_hi = 1.08 * y_hi if y_hi > 0 else 1.0

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_W}" height="{_H}" '
        f'viewBox="0 0 {_W} {_H}">',
        f'<rect width="{_W}" height="{_H}" fill="white"/>',
        f'<text x="{_ML}" y="24" font-family="sans-serif" font-size="16">{title}</text>',
        f'<line x1="{_ML}" y1="{_H - _MB}" x2="{_W - _MR}" y2="{_H - _MB}" '
        'stroke="black" stroke-width="1"/>',
        f'<line x1="{_ML}" y1="{_MT}" x2="{_ML}" y2="{_H - _MB}" '
        'stroke="black" stroke-width="1"/>',
    ]

    n_xticks = 9
    for i in range(n_xticks):
        x = x_lo + (x_hi - x_lo) * i / (n_xticks - 1)
        px = _ML + (_W - _ML - _MR) * i / (n_xticks - 1)
        out.append(f'<line x1="{px:.2f}" y1="{_H - _MB}" x2="{px:.2f}" '
                   f'y2="{_H - _MB + 5}" stroke="black" stroke-width="1"/>')
        out.append(f'<text x="{px:.2f}" y="{_H - _MB + 20}" font-family="sans-serif" '
                   f'font-size="11" text-anchor="middle">{x:.1f}</text>')
    for i in range(5):
        y = y_hi * i / 4
        py = _H - _MB - (_H - _MT - _MB) * i / 4
        out.append(f'<line x1="{_ML - 5}" y1="{py:.2f}" x2="{_ML}" y2="{py:.2f}" '
                   'stroke="black" stroke-width="1"/>')
        out.append(f'<text x="{_ML - 9}" y="{py + 4:.2f}" font-family="sans-serif" '
                   f'font-size="11" text-anchor="end">{y:.3f}</text>')
    out.append(f'<text x="{(_ML + _W - _MR) / 2:.0f}" y="{_H - 12}" font-family="sans-serif" '
               'font-size="13" text-anchor="middle">x</text>')
    out.append(f'<text x="18" y="{(_MT + _H - _MB) / 2:.0f}" font-family="sans-serif" '
               f'font-size="13" transform="rotate(-90 18 {(_MT + _H - _MB) / 2:.0f})" '
               'text-anchor="middle">density</text>')

    n_snap = len(snapshots)
    for i, (t, rho_n, rho_a) in enumerate(snapshots):
        frac = i / max(1, n_snap - 1)
        col = _color(frac)
        out.append(f'<polyline points="{_path(xs, rho_n, x_lo, x_hi, y_hi)}" '
                   f'fill="none" stroke="{col}" stroke-width="1.6"/>')
        out.append(f'<polyline points="{_path(xs, rho_a, x_lo, x_hi, y_hi)}" '
                   f'fill="none" stroke="{col}" stroke-width="1.1" '
                   'stroke-dasharray="5,4" opacity="0.75"/>')
        ly = _MT + 18 * i
        lx = _W - _MR + 12
        out.append(f'<line x1="{lx}" y1="{ly}" x2="{lx + 24}" y2="{ly}" '
                   f'stroke="{col}" stroke-width="2"/>')
        out.append(f'<text x="{lx + 30}" y="{ly + 4}" font-family="sans-serif" '
                   f'font-size="11">t = {t:.4f}</text>')
    ly = _MT + 18 * n_snap + 8
    lx = _W - _MR + 12
    out.append(f'<line x1="{lx}" y1="{ly}" x2="{lx + 24}" y2="{ly}" stroke="gray" '
               'stroke-width="1.2" stroke-dasharray="5,4"/>')
    out.append(f'<text x="{lx + 30}" y="{ly + 4}" font-family="sans-serif" '
               'font-size="11">analytic</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"

"""Radar (spider) SVG rendering of per-index deviations.

One figure per measure plus one for the index itself: tickers sit uniformly
on a circle, the radial coordinate is the absolute scaled deviation from the
efficient-market value (circle center = no deviation), and the red polyline
through the vertices is closed. Radii are rescaled by the largest deviation
in the figure so the shape stays readable.
"""

import math

SVG_SIZE = 640
CENTER = SVG_SIZE / 2
RING_RADIUS = 240
LABEL_RADIUS = RING_RADIUS + 18


def radial_layout(labels, magnitudes):
    """Angles and normalized radii for each label.

    Radii are scaled so the largest magnitude touches the outer ring; an
    all-zero figure collapses to the center.
    """
    if len(labels) != len(magnitudes):
        raise ValueError("labels and magnitudes must have equal length")
    if not labels:
        raise ValueError("nothing to draw")
    scale = max(magnitudes)
    if scale <= 0.0:
        scale = 1.0
    n = len(labels)
    layout = []
    for k, (label, mag) in enumerate(zip(labels, magnitudes)):
        angle = -math.pi / 2.0 + 2.0 * math.pi * k / n
        layout.append((label, angle, mag / scale))
    return layout


def _point(angle, radius_frac):
    return (
        CENTER + RING_RADIUS * radius_frac * math.cos(angle),
        CENTER + RING_RADIUS * radius_frac * math.sin(angle),
    )


def render_radar(title, labels, magnitudes):
    """SVG 1.1 document for one radar figure."""
    layout = radial_layout(labels, magnitudes)
    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{SVG_SIZE}" height="{SVG_SIZE}" '
        f'viewBox="0 0 {SVG_SIZE} {SVG_SIZE}">',
        f'<rect width="{SVG_SIZE}" height="{SVG_SIZE}" fill="white"/>',
        f'<text x="{CENTER:.1f}" y="24" text-anchor="middle" '
        f'font-family="sans-serif" font-size="16">{title}</text>',
        f'<circle cx="{CENTER:.1f}" cy="{CENTER:.1f}" r="{RING_RADIUS}" '
        'fill="none" stroke="#999" stroke-width="1"/>',
        f'<circle cx="{CENTER:.1f}" cy="{CENTER:.1f}" r="{RING_RADIUS / 2:.1f}" '
        'fill="none" stroke="#ddd" stroke-width="1"/>',
    ]
    for label, angle, _ in layout:
        x, y = _point(angle, 1.0)
        parts.append(
            f'<line x1="{CENTER:.1f}" y1="{CENTER:.1f}" x2="{x:.2f}" y2="{y:.2f}" '
            'stroke="#eee" stroke-width="1"/>'
        )
        lx = CENTER + LABEL_RADIUS * math.cos(angle)
        ly = CENTER + LABEL_RADIUS * math.sin(angle)
        parts.append(
            f'<text x="{lx:.2f}" y="{ly:.2f}" text-anchor="middle" '
            f'dominant-baseline="middle" font-family="sans-serif" '
            f'font-size="9">{label}</text>'
        )
    vertices = [_point(angle, frac) for _, angle, frac in layout]
    points = " ".join(f"{x:.2f},{y:.2f}" for x, y in vertices)
    parts.append(
        f'<polygon points="{points}" fill="none" stroke="red" stroke-width="1.5"/>'
    )
    for (label, _, _), (x, y) in zip(layout, vertices):
        parts.append(f'<circle cx="{x:.2f}" cy="{y:.2f}" r="2.5" fill="red"/>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def radar_documents(tickers, deviation_rows, ei_values):
    """SVG documents keyed by figure name.

    deviation_rows holds one (hurst, fractal, entropy) scaled-deviation tuple
    per ticker; the index figure uses the index values as radii.
    """
    docs = {}
    for pos, measure in enumerate(("hurst", "fractal", "entropy")):
        magnitudes = [abs(devs[pos]) for devs in deviation_rows]
        docs[measure] = render_radar(
            f"{measure} deviation from the efficient market", tickers, magnitudes
        )
    docs["ei"] = render_radar("efficiency index", tickers, list(ei_values))
    return docs

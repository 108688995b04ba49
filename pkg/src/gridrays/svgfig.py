"""Deterministic SVG figures: lattice grid, staircases, reference lines.

Purely presentational; coordinates are written with 6 decimal places and
element order is fixed, so identical inputs produce byte-identical files.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

PALETTE = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b")

CELL = 24.0  # pixels per lattice unit
MARGIN = 1.5  # lattice units of padding around the window


@dataclass(frozen=True)
class SceneItem:
    kind: str  # "path" (polyline through points) or "line" (infinite ray)
    points: tuple[tuple[float, float], ...]
    label: str = ""
    color: str = ""


def _fmt(x: float) -> str:
    return f"{x:.6f}"


class Scene:
    def __init__(self, window: tuple[float, float, float, float]):
        xmin, xmax, ymin, ymax = window
        if xmax <= xmin or ymax <= ymin:
            raise ValueError("empty window")
        self.window = (xmin, xmax, ymin, ymax)
        self.items: list[SceneItem] = []

    def add_path(self, points: Sequence[tuple[float, float]],
                 label: str = "", color: str = "") -> None:
        self.items.append(SceneItem("path", tuple(points), label, color))

    def add_ray_line(self, direction: tuple[float, float],
                     label: str = "", color: str = "") -> None:
        xmin, xmax, ymin, ymax = self.window
        dx, dy = direction
        scale = 2 * max(xmax - xmin, ymax - ymin) / max(abs(dx) + abs(dy), 1e-9)
        self.items.append(SceneItem(
            "line", ((0.0, 0.0), (dx * scale, dy * scale)), label, color))

    def _to_px(self, p: tuple[float, float]) -> tuple[float, float]:
        xmin, _, _, ymax = self.window
        return ((p[0] - xmin + MARGIN) * CELL,
                (ymax + MARGIN - p[1]) * CELL)

    def render(self) -> str:
        xmin, xmax, ymin, ymax = self.window
        w = (xmax - xmin + 2 * MARGIN) * CELL
        h = (ymax - ymin + 2 * MARGIN) * CELL
        out = [
            '<?xml version="1.0" encoding="UTF-8"?>',
            f'<svg xmlns="http://www.w3.org/2000/svg" '
            f'viewBox="0 0 {_fmt(w)} {_fmt(h)}" '
            f'width="{_fmt(w)}" height="{_fmt(h)}">',
            '<rect width="100%" height="100%" fill="#ffffff"/>',
            '<g stroke="#dddddd" stroke-width="1">',
        ]
        x = int(xmin)
        while x <= int(xmax):
            a = self._to_px((x, ymin))
            b = self._to_px((x, ymax))
            out.append(f'<line x1="{_fmt(a[0])}" y1="{_fmt(a[1])}" '
                       f'x2="{_fmt(b[0])}" y2="{_fmt(b[1])}"/>')
            x += 1
        y = int(ymin)
        while y <= int(ymax):
            a = self._to_px((xmin, y))
            b = self._to_px((xmax, y))
            out.append(f'<line x1="{_fmt(a[0])}" y1="{_fmt(a[1])}" '
                       f'x2="{_fmt(b[0])}" y2="{_fmt(b[1])}"/>')
            y += 1
        out.append("</g>")
        for idx, item in enumerate(self.items):
            color = item.color or PALETTE[idx % len(PALETTE)]
            pts = " ".join(f"{_fmt(px)},{_fmt(py)}"
                           for px, py in map(self._to_px, item.points))
            dash = ' stroke-dasharray="6 4"' if item.kind == "line" else ""
            out.append(f'<polyline fill="none" stroke="{color}" '
                       f'stroke-width="2"{dash} points="{pts}"/>')
            if item.label:
                lx, ly = self._to_px(item.points[-1])
                out.append(f'<text x="{_fmt(lx + 4)}" y="{_fmt(ly - 4)}" '
                           f'font-size="12" fill="{color}">{item.label}</text>')
        out.append("</svg>")
        return "\n".join(out) + "\n"

    def write(self, path: str) -> None:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(self.render())

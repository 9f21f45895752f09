"""Static figures of lattice polygons.

Edge colours: green for a fixed top face, blue for lattice-point-free outer
edges, red for outer edges with interior lattice points, black otherwise.
"""

from __future__ import annotations

from typing import Iterable, Optional

import matplotlib

matplotlib.use("Agg")
matplotlib.rcParams["svg.hashsalt"] = "jacpair"
import matplotlib.pyplot as plt  # noqa: E402

from .newton import LatticePolygon, edge_interior_lattice_points, edges  # noqa: E402

__all__ = ["plot_polygon", "plot_polygons"]


def _draw(ax, poly: LatticePolygon, top_face=None, marks: Iterable = (), title: str = ""):
    verts = poly.vertices
    span = max(max(max(v) for v in verts), 5)
    for i in range(span + 1):
        for j in range(span + 1 - i):
            ax.plot(i, j, ".", color="0.75", ms=3)
    if len(verts) >= 3:
        xs, ys = zip(*verts)
        ax.fill(xs, ys, color="0.9", zorder=0)
    top = set(map(tuple, top_face)) if top_face else None
    if len(verts) == 1:
        ax.plot(*verts[0], "ko", ms=5)
    else:
        es = edges(poly)[:1] if len(verts) == 2 else edges(poly)
        for e in es:
            (a, b) = e.points
            if top is not None and set(e.points) == top:
                color = "green"
            elif e.direction.is_outer():
                color = "red" if edge_interior_lattice_points(e) else "blue"
            else:
                color = "black"
            ax.plot([a[0], b[0]], [a[1], b[1]], color=color, lw=2)
    for p in marks:
        ax.plot(p[0], p[1], "o", mfc="none", mec="black", ms=7)
    ax.set_aspect("equal")
    ax.set_xlim(-0.5, span + 0.5)
    ax.set_ylim(-0.5, span + 0.5)
    ax.set_xticks(range(span + 1))
    ax.set_yticks(range(span + 1))
    if title:
        ax.set_title(title, fontsize=9)


def plot_polygon(poly: LatticePolygon, path: str, *, top_face=None, marks: Iterable = (),
                 title: str = "") -> str:
    """Write one polygon figure; format follows the file extension."""
    fig, ax = plt.subplots(figsize=(3, 3))
    _draw(ax, poly, top_face, marks, title)
    fig.tight_layout()
    fig.savefig(path, metadata={"Date": None} if path.endswith(".svg") else None)
    plt.close(fig)
    return path


def plot_polygons(items: list[tuple[str, LatticePolygon]], path: str, *,
                  top_face=None, columns: int = 5) -> Optional[str]:
    """Grid of labelled polygons in one file."""
    if not items:
        return None
    rows = (len(items) + columns - 1) // columns
    fig, axes = plt.subplots(rows, columns, figsize=(2.4 * columns, 2.4 * rows), squeeze=False)
    for ax in axes.flat[len(items):]:
        ax.axis("off")
    for ax, (label, poly) in zip(axes.flat, items):
        _draw(ax, poly, top_face, (), label)
    fig.tight_layout()
    fig.savefig(path, metadata={"Date": None} if path.endswith(".svg") else None)
    plt.close(fig)
    return path

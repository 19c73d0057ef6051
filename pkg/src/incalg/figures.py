"""Matplotlib rendering of quotient comparability graphs.

Vertices are laid out in layers by longest-chain height; spanning-tree edges
are drawn solid, chords dashed.  Used by the CLI report verbs to drop a
picture next to the JSON output.
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402

from .poset import QuotientPoset, comparability, spanning_forest  # noqa: E402

__all__ = ["draw_comparability"]


def _heights(q: QuotientPoset):
    h = {}

    def height(x):
        if x not in h:
            below = [height(y) for y in range(q.k) if q.lt_pair(y, x)]
            h[x] = 1 + max(below) if below else 0
        return h[x]

    for x in range(q.k):
        height(x)
    return h


def draw_comparability(q: QuotientPoset, path: str):
    """Render the comparability graph of the quotient poset to an image file."""
    g = comparability(q)
    forest = spanning_forest(g)
    h = _heights(q)
    layers = {}
    pos = {}
    for x in range(q.k):
        row = layers.setdefault(h[x], [])
        pos[x] = (len(row), h[x])
        row.append(x)
    # center each layer horizontally
    width = max((len(row) for row in layers.values()), default=1)
    for x, (i, y) in pos.items():
        row = layers[y]
        pos[x] = (i - (len(row) - 1) / 2 + width / 2, y)

    fig, ax = plt.subplots(figsize=(max(4, width * 1.2),
                                    max(3, (max(h.values(), default=0) + 1) * 1.2)))
    tree = set(forest.tree_edges)
    for (x, y) in g.edges:
        (x0, y0), (x1, y1) = pos[x], pos[y]
        style = "-" if (x, y) in tree else "--"
        color = "tab:blue" if (x, y) in tree else "tab:red"
        ax.plot([x0, x1], [y0, y1], style, color=color, zorder=1)
    for x, (px, py) in pos.items():
        ax.scatter([px], [py], s=400, color="white", edgecolors="black", zorder=2)
        label = str(q.classes[x][0]) if q.class_size(x) == 1 else \
            "{" + ",".join(str(s) for s in q.classes[x]) + "}"
        ax.annotate(label, (px, py), ha="center", va="center", zorder=3)
    ax.set_axis_off()
    ax.set_title(f"{q.k} classes, {g.m} edges, cyclomatic {g.cyclomatic}")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)

"""Figure rendering for diagrams and Dehn function tables.

Used by the CLI's --plot flag: figures are written to files (format chosen
by extension) alongside the regular delimited output.  Layout is simple and
deterministic: BFS layers on concentric circles, one color per edge label.
"""

import math

import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt

from .cayley import CayleyDiagram

_COLORS = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
           "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"]


def _layers_of(diagram):
    if isinstance(diagram, CayleyDiagram) and diagram.layers:
        return diagram.layers, list(range(len(diagram.vertices)))
    # BFS from the first vertex over the undirected edge set.
    vertices = (list(range(len(diagram.vertices)))
                if isinstance(diagram, CayleyDiagram) else list(diagram.vertices))
    neighbors = {v: [] for v in vertices}
    for u, v, _ in diagram.edges:
        neighbors[u].append(v)
        neighbors[v].append(u)
    seen = {vertices[0]}
    layers = [[vertices[0]]]
    frontier = [vertices[0]]
    while frontier:
        nxt = []
        for u in frontier:
            for v in neighbors[u]:
                if v not in seen:
                    seen.add(v)
                    nxt.append(v)
        if not nxt:
            break
        layers.append(nxt)
        frontier = nxt
    rest = [v for v in vertices if v not in seen]
    if rest:
        layers.append(rest)
    return layers, vertices


def _positions(diagram):
    layers, vertices = _layers_of(diagram)
    pos = {}
    for depth, layer in enumerate(layers):
        count = len(layer)
        for i, v in enumerate(layer):
            theta = 2 * math.pi * i / count + depth * 0.35
            r = float(depth)
            pos[v] = (r * math.cos(theta), r * math.sin(theta))
    for v in vertices:
        pos.setdefault(v, (0.0, 0.0))
    return pos


def save_diagram_figure(diagram, path, title=None):
    pos = _positions(diagram)
    labels = sorted({s for _, _, s in diagram.edges})
    color = {s: _COLORS[i % len(_COLORS)] for i, s in enumerate(labels)}
    involutions = diagram.involutions

    fig, ax = plt.subplots(figsize=(7, 7))
    for u, v, s in diagram.edges:
        (x0, y0), (x1, y1) = pos[u], pos[v]
        if u == v:
            loop = plt.Circle((x0 + 0.12, y0 + 0.12), 0.12, fill=False,
                              color=color[s], lw=1.2)
            ax.add_patch(loop)
            continue
        if s in involutions:
            ax.plot([x0, x1], [y0, y1], color=color[s], lw=1.2)
        else:
            ax.annotate("", xy=(x1, y1), xytext=(x0, y0),
                        arrowprops=dict(arrowstyle="-|>", color=color[s],
                                        lw=1.2, shrinkA=4, shrinkB=4))
    xs = [xy[0] for xy in pos.values()]
    ys = [xy[1] for xy in pos.values()]
    ax.scatter(xs, ys, s=24, color="black", zorder=3)
    handles = [plt.Line2D([0], [0], color=color[s], lw=2,
                          label=s + (" (involution)" if s in involutions else ""))
               for s in labels]
    if handles:
        ax.legend(handles=handles, loc="upper right", fontsize=8)
    if title:
        ax.set_title(title)
    ax.set_aspect("equal")
    ax.axis("off")
    fig.savefig(path, bbox_inches="tight", dpi=150)
    plt.close(fig)
    return path


def save_dehn_function_figure(rows, path, title=None):
    ns = [row.n for row in rows]
    deltas = [row.delta for row in rows]
    exact = [row.exactness == "exact" for row in rows]

    fig, ax = plt.subplots(figsize=(6, 4))
    ax.step(ns, deltas, where="post", color=_COLORS[0], lw=1.5)
    ax.scatter([n for n, e in zip(ns, exact) if e],
               [d for d, e in zip(deltas, exact) if e],
               color=_COLORS[0], s=24, label="exact")
    if not all(exact):
        ax.scatter([n for n, e in zip(ns, exact) if not e],
                   [d for d, e in zip(deltas, exact) if not e],
                   facecolors="none", edgecolors=_COLORS[1], s=28,
                   label="lower bound")
    ax.set_xlabel("n")
    ax.set_ylabel("delta(n)")
    ax.legend(loc="upper left", fontsize=8)
    if title:
        ax.set_title(title)
    fig.savefig(path, bbox_inches="tight", dpi=150)
    plt.close(fig)
    return path

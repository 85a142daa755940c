"""Figures written next to CLI reports (matplotlib, non-interactive backend)."""

from __future__ import annotations

from pathlib import Path


def _pyplot():
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    return plt


def heatmap(matrix, row_labels, col_labels, title: str, path: str | Path) -> Path:
    """Integer matrix as an annotated heatmap."""
    plt = _pyplot()
    n_r, n_c = len(row_labels), len(col_labels)
    fig, ax = plt.subplots(figsize=(max(4, 0.45 * n_c + 2), max(3, 0.4 * n_r + 1.5)))
    ax.imshow([[int(v) for v in row] for row in matrix] or [[0]], cmap="Blues", vmin=0)
    ax.set_xticks(range(n_c), labels=col_labels, rotation=60, ha="right", fontsize=7)
    ax.set_yticks(range(n_r), labels=row_labels, fontsize=7)
    for i, row in enumerate(matrix):
        for j, v in enumerate(row):
            if v:
                ax.text(j, i, str(v), ha="center", va="center", fontsize=7)
    ax.set_title(title)
    fig.tight_layout()
    path = Path(path)
    fig.savefig(path)
    plt.close(fig)
    return path


def graph_figure(g, labels: dict, title: str, path: str | Path, directed: bool = False) -> Path:
    """Draw a networkx graph with a deterministic (seeded) layout."""
    import networkx as nx

    plt = _pyplot()
    fig, ax = plt.subplots(figsize=(6, 6))
    if len(g) and nx.is_connected(g.to_undirected()) and len(g) > 2:
        pos = nx.kamada_kawai_layout(g)
    else:
        pos = nx.spring_layout(g, seed=0)
    nx.draw_networkx(g, pos, ax=ax, labels=labels, node_size=300, font_size=7, arrows=directed,
                     node_color="#cfe2f3")
    ax.set_title(title)
    ax.set_axis_off()
    fig.tight_layout()
    path = Path(path)
    fig.savefig(path)
    plt.close(fig)
    return path


def bar_chart(values: dict, title: str, path: str | Path) -> Path:
    plt = _pyplot()
    fig, ax = plt.subplots(figsize=(6, 3.5))
    keys = list(values)
    ax.bar(range(len(keys)), [values[k] for k in keys], color="#6fa8dc")
    ax.set_xticks(range(len(keys)), labels=[str(k) for k in keys], rotation=45, ha="right", fontsize=7)
    ax.set_title(title)
    fig.tight_layout()
    path = Path(path)
    fig.savefig(path)
    plt.close(fig)
    return path

"""Deterministic Graphviz DOT text for quivers, Ext-compatibility graphs and exchange graphs."""

from __future__ import annotations

from typing import Iterable


def _quote(s) -> str:
    s = str(s)
    if s.isdigit() or (s.isidentifier() and s.isascii()):
        return s
    return '"' + s.replace('"', '\\"') + '"'


def digraph(name: str, nodes: Iterable, edges: dict | Iterable, labels: dict | None = None) -> str:
    """``edges`` is either {(u, v): multiplicity} or an iterable of (u, v) pairs."""
    lines = [f"digraph {_quote(name)} {{"]
    labels = labels or {}
    for v in sorted(nodes):
        extra = f' [label="{labels[v]}"]' if v in labels else ""
        lines.append(f"  {_quote(v)}{extra};")
    items = sorted(edges.items()) if isinstance(edges, dict) else sorted((e, 1) for e in edges)
    for (u, v), mult in items:
        for _ in range(mult):
            lines.append(f"  {_quote(u)} -> {_quote(v)};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def graph(name: str, nodes: Iterable, edges: Iterable, labels: dict | None = None) -> str:
    lines = [f"graph {_quote(name)} {{"]
    labels = labels or {}
    for v in sorted(nodes):
        extra = f' [label="{labels[v]}"]' if v in labels else ""
        lines.append(f"  {_quote(v)}{extra};")
    for u, v in sorted(tuple(sorted(e)) for e in edges):
        lines.append(f"  {_quote(u)} -- {_quote(v)};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def quiver_dot(q, name: str = "Q") -> str:
    """Quiver with valued arrows labelled by their valuation."""
    lines = [f"digraph {_quote(name)} {{"]
    lines += [f"  {v};" for v in q.vertices]
    for a in q.arrows:
        extra = "" if a.valuation == (1, 1) else f' [label="({a.valuation[0]},{a.valuation[1]})"]'
        lines.append(f"  {a.source} -> {a.target}{extra};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def gabriel_dot(labels, arrows: dict, name: str = "Lambda") -> str:
    return digraph(name, labels, arrows)


def ext_graph_dot(names: list[str], compatible: Iterable[tuple[int, int]], name: str = "ExtFree") -> str:
    """Nodes are objects (indexed), edges join Ext^1-free pairs."""
    return graph(name, range(len(names)), compatible, {i: s for i, s in enumerate(names)})


def exchange_dot(set_names: list[str], edges: Iterable[tuple[int, int]], name: str = "Exchange") -> str:
    return graph(name, range(len(set_names)), edges, {i: s for i, s in enumerate(set_names)})

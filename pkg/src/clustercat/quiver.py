"""Valued quivers: orientations of valued graphs, reflections and homological matrices."""

from __future__ import annotations

import hashlib
import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Literal

import numpy as np

from . import linalg
from .errors import InputError
from .roots import CartanData, RootVec, reflection_matrix, standard_cartan


@dataclass(frozen=True, order=True)
class Arrow:
    """Arrow ``source -> target`` carrying the valuation ``(d_st, d_ts)``.

    The Cartan entries are ``a_st = -d_st`` and ``a_ts = -d_ts``.
    """

    source: int
    target: int
    valuation: tuple[int, int] = (1, 1)

    def reversed(self) -> "Arrow":
        return Arrow(self.target, self.source, (self.valuation[1], self.valuation[0]))

    @property
    def key(self) -> tuple[int, int]:
        return (self.source, self.target)


@dataclass(frozen=True)
class ValuedQuiver:
    n: int
    arrows: tuple[Arrow, ...]

    def __post_init__(self):
        arrows = tuple(sorted(self.arrows))
        object.__setattr__(self, "arrows", arrows)
        if self.n < 1:
            raise InputError("a quiver needs at least one vertex")
        edges = set()
        for a in arrows:
            for v in (a.source, a.target):
                if not 1 <= v <= self.n:
                    raise InputError(f"arrow {a.source} -> {a.target} uses vertex outside 1..{self.n}")
            if a.source == a.target:
                raise InputError(f"loop at vertex {a.source}")
            if min(a.valuation) < 1:
                raise InputError("valuations must be positive")
            e = frozenset(a.key)
            if e in edges:
                raise InputError(f"more than one arrow between {a.source} and {a.target}")
            edges.add(e)
        if _has_cycle(self.n, arrows):
            raise InputError("quiver has an oriented cycle")
        # validates symmetrizability
        self.cartan

    @classmethod
    def from_edges(cls, n: int, edges) -> "ValuedQuiver":
        """Build from ``(i, j)`` or ``(i, j, dij, dji)`` tuples."""
        arrows = []
        for e in edges:
            if len(e) == 2:
                arrows.append(Arrow(e[0], e[1]))
            else:
                arrows.append(Arrow(e[0], e[1], (e[2], e[3])))
        return cls(n, tuple(arrows))

    @classmethod
    def linear(cls, label: str) -> "ValuedQuiver":
        """Standard orientation of a Dynkin type: each edge i - j with i < j points i -> j."""
        a = standard_cartan(label)
        n = len(a)
        arrows = [
            Arrow(i + 1, j + 1, (-a[i][j], -a[j][i]))
            for i in range(n)
            for j in range(i + 1, n)
            if a[i][j] != 0
        ]
        return cls(n, tuple(arrows))

    @cached_property
    def cartan(self) -> CartanData:
        a = [[2 if i == j else 0 for j in range(self.n)] for i in range(self.n)]
        for arr in self.arrows:
            s, t = arr.source - 1, arr.target - 1
            a[s][t] = -arr.valuation[0]
            a[t][s] = -arr.valuation[1]
        return CartanData(tuple(tuple(r) for r in a))

    @property
    def simply_laced(self) -> bool:
        return all(a.valuation == (1, 1) for a in self.arrows)

    @property
    def is_dynkin(self) -> bool:
        return self.cartan.is_dynkin

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    def arrow(self, i: int, j: int) -> Arrow | None:
        return next((a for a in self.arrows if a.key == (i, j)), None)

    def incoming(self, k: int) -> list[Arrow]:
        return [a for a in self.arrows if a.target == k]

    def outgoing(self, k: int) -> list[Arrow]:
        return [a for a in self.arrows if a.source == k]

    @cached_property
    def sinks(self) -> tuple[int, ...]:
        return tuple(k for k in self.vertices if not self.outgoing(k))

    @cached_property
    def sources(self) -> tuple[int, ...]:
        return tuple(k for k in self.vertices if not self.incoming(k))

    @cached_property
    def digest(self) -> str:
        """Deterministic hash used for cache keys and reports."""
        text = f"n={self.n};" + ";".join(
            f"{a.source}->{a.target}[{a.valuation[0]},{a.valuation[1]}]" for a in self.arrows
        )
        return hashlib.sha256(text.encode()).hexdigest()[:16]

    def __str__(self):
        return format_quiver_inline(self)


def format_quiver_inline(q: ValuedQuiver) -> str:
    parts = []
    for a in q.arrows:
        s = f"{a.source}->{a.target}"
        if a.valuation != (1, 1):
            s += f"[{a.valuation[0]} {a.valuation[1]}]"
        parts.append(s)
    return f"Q(n={q.n}: " + ", ".join(parts) + ")"


def _has_cycle(n: int, arrows) -> bool:
    indeg = {v: 0 for v in range(1, n + 1)}
    for a in arrows:
        indeg[a.target] += 1
    ready = [v for v in indeg if indeg[v] == 0]
    done = 0
    while ready:
        v = ready.pop()
        done += 1
        for a in arrows:
            if a.source == v:
                indeg[a.target] -= 1
                if indeg[a.target] == 0:
                    ready.append(a.target)
    return done != n


def _check_vertex(q: ValuedQuiver, k: int) -> None:
    if not (isinstance(k, (int, np.integer)) and 1 <= k <= q.n):
        raise InputError(f"vertex {k} out of range 1..{q.n}")


VertexClass = Literal["sink", "source", "interior"]


def classify_vertex(q: ValuedQuiver, k: int) -> VertexClass:
    """``sink`` if no arrow starts at k, ``source`` if none ends there.

    An isolated vertex is both; it is reported as a sink.
    """
    _check_vertex(q, k)
    if not q.outgoing(k):
        return "sink"
    if not q.incoming(k):
        return "source"
    return "interior"


def is_sink(q: ValuedQuiver, k: int) -> bool:
    _check_vertex(q, k)
    return not q.outgoing(k)


def is_source(q: ValuedQuiver, k: int) -> bool:
    _check_vertex(q, k)
    return not q.incoming(k)


def reflect_orientation(q: ValuedQuiver, k: int) -> ValuedQuiver:
    """Reverse every arrow incident to k (valuations swap with the direction)."""
    _check_vertex(q, k)
    return ValuedQuiver(q.n, tuple(a.reversed() if k in a.key else a for a in q.arrows))


def topological_order(q: ValuedQuiver) -> list[int]:
    """Vertices ordered so that every arrow points forward (ties by label)."""
    order, placed = [], set()
    while len(order) < q.n:
        v = min(v for v in q.vertices if v not in placed and all(a.source in placed for a in q.incoming(v)))
        order.append(v)
        placed.add(v)
    return order


def sink_admissible_order(q: ValuedQuiver) -> list[int]:
    """k_1..k_n with k_m a sink of s_{k_{m-1}}...s_{k_1} Q; smallest unused label first."""
    order, cur = [], q
    for _ in range(q.n):
        k = min(v for v in cur.sinks if v not in order)
        order.append(k)
        cur = reflect_orientation(cur, k)
    assert cur == q
    return order


def projective_dims(q: ValuedQuiver) -> dict[int, RootVec]:
    """dim P_i by the sink-ward recursion (P_i)_j = delta_ij + sum_{l->j} (-a_jl)(P_i)_l."""
    order = topological_order(q)
    out = {}
    for i in q.vertices:
        v = [0] * q.n
        for j in order:
            val = 1 if j == i else 0
            for a in q.incoming(j):
                val += -q.cartan.entry(j, a.source) * v[a.source - 1]
            v[j - 1] = val
        out[i] = tuple(v)
    return out


def injective_dims(q: ValuedQuiver) -> dict[int, RootVec]:
    """dim I_i by the source-ward recursion (I_i)_l = delta_li + sum_{l->j} (-a_lj)(I_i)_j."""
    order = topological_order(q)[::-1]
    out = {}
    for i in q.vertices:
        v = [0] * q.n
        for l in order:
            val = 1 if l == i else 0
            for a in q.outgoing(l):
                val += -q.cartan.entry(l, a.target) * v[a.target - 1]
            v[l - 1] = val
        out[i] = tuple(v)
    return out


def euler_matrix(q: ValuedQuiver) -> np.ndarray:
    """E with <x, y> = x^T E y; E_ii = d_i and E_ij = d_i a_ij for each arrow i -> j."""
    d = q.cartan.symmetrizers
    e = linalg.zeros(q.n, q.n)
    for i in q.vertices:
        e[i - 1, i - 1] = d[i - 1]
    for a in q.arrows:
        i, j = a.source, a.target
        e[i - 1, j - 1] = d[i - 1] * q.cartan.entry(i, j)
    return e


def euler_form(q: ValuedQuiver, x: RootVec, y: RootVec) -> int:
    e = euler_matrix(q)
    return int(linalg.matmul(linalg.matmul(linalg.matrix([x]), e), linalg.column(y))[0, 0])


def coxeter_matrix(q: ValuedQuiver) -> np.ndarray:
    """Matrix of tau on dimension vectors: s_{k_n} ... s_{k_1} for the sink order.

    Calibrated against the reflection-functor translate: for every
    non-projective indecomposable X, coxeter @ dim X = dim tau X.
    """
    m = linalg.eye(q.n)
    for k in sink_admissible_order(q):
        m = linalg.matmul(reflection_matrix(k, q.cartan), m)
    return m


def projective_data(q: ValuedQuiver) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """(C, Euler, Coxeter): column i of C is dim P_i."""
    proj = projective_dims(q)
    c = linalg.matrix([[proj[i][j] for i in q.vertices] for j in range(q.n)])
    return c, euler_matrix(q), coxeter_matrix(q)


def apply_matrix(m: np.ndarray, v: RootVec) -> RootVec:
    out = linalg.matmul(m, linalg.column(v))
    return tuple(int(x) for x in out[:, 0])


def all_orientations(label_or_quiver) -> list[ValuedQuiver]:
    """Every orientation of the underlying valued graph (trees are always acyclic)."""
    q = ValuedQuiver.linear(label_or_quiver) if isinstance(label_or_quiver, str) else label_or_quiver
    out = []
    for flips in itertools.product((False, True), repeat=len(q.arrows)):
        arrows = tuple(a.reversed() if f else a for a, f in zip(q.arrows, flips))
        if not _has_cycle(q.n, arrows):
            out.append(ValuedQuiver(q.n, arrows))
    return out

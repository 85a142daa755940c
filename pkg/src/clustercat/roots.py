"""Cartan data of valued graphs, Weyl reflections and almost positive roots.

Roots live in simple-root coordinates: ``alpha_i`` is the i-th standard basis
vector.  Vertices are 1-based throughout the public API.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from math import gcd, lcm

import numpy as np

from . import linalg
from .errors import InputError, InvariantViolation

RootVec = tuple[int, ...]


@dataclass(frozen=True)
class CartanData:
    """A symmetrizable generalized Cartan matrix with its symmetrizers.

    ``symmetrizers`` are the smallest positive integers ``d_i`` with
    ``d_i a_ij = d_j a_ji`` (computed per connected component).  Positive
    definiteness is not enforced here; see :attr:`is_dynkin`.
    """

    cartan: tuple[tuple[int, ...], ...]
    symmetrizers: tuple[int, ...] = field(default=(), compare=False)

    def __post_init__(self):
        a = tuple(tuple(int(x) for x in row) for row in self.cartan)
        n = len(a)
        if n == 0 or any(len(row) != n for row in a):
            raise InputError("Cartan matrix must be square and non-empty")
        for i in range(n):
            if a[i][i] != 2:
                raise InputError(f"diagonal entry a[{i + 1}][{i + 1}] must be 2")
            for j in range(n):
                if i != j:
                    if a[i][j] > 0:
                        raise InputError("off-diagonal Cartan entries must be <= 0")
                    if (a[i][j] == 0) != (a[j][i] == 0):
                        raise InputError(f"a_ij = 0 iff a_ji = 0 fails at ({i + 1},{j + 1})")
        object.__setattr__(self, "cartan", a)
        object.__setattr__(self, "symmetrizers", _symmetrizers(a))

    @property
    def rank(self) -> int:
        return len(self.cartan)

    def entry(self, i: int, j: int) -> int:
        """a_ij with 1-based indices."""
        return self.cartan[i - 1][j - 1]

    def neighbors(self, i: int) -> list[int]:
        return [j for j in range(1, self.rank + 1) if j != i and self.entry(i, j) != 0]

    @cached_property
    def is_dynkin(self) -> bool:
        """True iff the symmetrized matrix ``D A`` is positive definite."""
        d = self.symmetrizers
        b = linalg.matrix([[d[i] * self.cartan[i][j] for j in range(self.rank)] for i in range(self.rank)])
        return all(linalg.determinant(b[:k, :k]) > 0 for k in range(1, self.rank + 1))

    @cached_property
    def is_simply_laced(self) -> bool:
        return all(x in (0, -1) for i, row in enumerate(self.cartan) for j, x in enumerate(row) if i != j)

    @cached_property
    def type_label(self) -> str:
        return dynkin_label(self)

    @classmethod
    def from_type(cls, label: str) -> "CartanData":
        return cls(standard_cartan(label))


def _symmetrizers(a) -> tuple[int, ...]:
    n = len(a)
    d: list[Fraction | None] = [None] * n
    for start in range(n):
        if d[start] is not None:
            continue
        d[start] = Fraction(1)
        queue = deque([start])
        comp = [start]
        while queue:
            i = queue.popleft()
            for j in range(n):
                if j != i and a[i][j] != 0:
                    want = d[i] * a[i][j] / a[j][i]
                    if d[j] is None:
                        d[j] = want
                        queue.append(j)
                        comp.append(j)
                    elif d[j] != want:
                        raise InputError("Cartan matrix is not symmetrizable")
        scale = lcm(*(d[i].denominator for i in comp))
        ints = [d[i] * scale for i in comp]
        g = 0
        for x in ints:
            g = gcd(g, int(x))
        for i in comp:
            d[i] = d[i] * scale / g
    return tuple(int(x) for x in d)


def standard_cartan(label: str) -> tuple[tuple[int, ...], ...]:
    """Cartan matrix of a connected Dynkin type such as ``"A3"``, ``"B2"``, ``"E6"``.

    Chain types are numbered along the chain.  B_n/C_n put the double bond
    between n-1 and n (B_n: short root n; C_n: long root n).  D_n branches at
    n-2; E_n is the chain 1..n-1 with vertex n attached to 3.  G_2 has
    a_12 = -1, a_21 = -3.
    """
    label = label.strip().upper()
    kind, n = label[0], int(label[1:])
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def bond(i, j, aij=-1, aji=-1):
        a[i - 1][j - 1], a[j - 1][i - 1] = aij, aji

    if kind == "A" and n >= 1:
        for i in range(1, n):
            bond(i, i + 1)
    elif kind in "BC" and n >= 2:
        for i in range(1, n - 1):
            bond(i, i + 1)
        if kind == "B":
            bond(n - 1, n, -1, -2)
        else:
            bond(n - 1, n, -2, -1)
    elif kind == "D" and n >= 4:
        for i in range(1, n - 1):
            bond(i, i + 1)
        bond(n - 2, n)
    elif kind == "E" and n in (6, 7, 8):
        for i in range(1, n - 1):
            bond(i, i + 1)
        bond(3, n)
    elif kind == "F" and n == 4:
        bond(1, 2)
        bond(2, 3, -1, -2)
        bond(3, 4)
    elif kind == "G" and n == 2:
        bond(1, 2, -1, -3)
    else:
        raise InputError(f"unknown Dynkin type {label!r}")
    return tuple(tuple(r) for r in a)


def dynkin_label(c: CartanData) -> str:
    """Recognize the Dynkin type of each connected component (reporting only)."""
    if not c.is_dynkin:
        return "non-Dynkin"
    seen: set[int] = set()
    labels = []
    for v in range(1, c.rank + 1):
        if v in seen:
            continue
        comp, queue = [], [v]
        seen.add(v)
        while queue:
            i = queue.pop()
            comp.append(i)
            for j in c.neighbors(i):
                if j not in seen:
                    seen.add(j)
                    queue.append(j)
        labels.append(_component_label(c, sorted(comp)))
    return "x".join(sorted(labels, key=lambda s: (s[0], int(s[1:]))))


def _component_label(c: CartanData, comp: list[int]) -> str:
    n = len(comp)
    degree = {i: len(c.neighbors(i)) for i in comp}
    weights = {}
    for i in comp:
        for j in c.neighbors(i):
            if i < j:
                weights[(i, j)] = c.entry(i, j) * c.entry(j, i)
    if any(w == 3 for w in weights.values()):
        return "G2"
    double = [e for e, w in weights.items() if w == 2]
    if double:
        if n == 2:
            return "B2"
        i, j = double[0]
        if degree[i] == 2 and degree[j] == 2:
            return "F4"
        end, inner = (i, j) if degree[i] == 1 else (j, i)
        # symmetrizers are proportional to squared root lengths
        short_end = c.symmetrizers[end - 1] < c.symmetrizers[inner - 1]
        return f"B{n}" if short_end else f"C{n}"
    branch = [i for i in comp if degree[i] == 3]
    if not branch:
        return f"A{n}"
    b = branch[0]
    arms = []
    for start in c.neighbors(b):
        length, prev, cur = 1, b, start
        while degree[cur] == 2:
            nxt = next(j for j in c.neighbors(cur) if j != prev)
            prev, cur = cur, nxt
            length += 1
        arms.append(length)
    arms.sort()
    if arms[0] == 1 and arms[1] == 1:
        return f"D{n}"
    return f"E{n}"


def reflection_matrix(k: int, c: CartanData) -> np.ndarray:
    """Matrix of s_k acting on simple-root coordinates."""
    _check_vertex(k, c.rank)
    m = linalg.eye(c.rank)
    for j in range(1, c.rank + 1):
        m[k - 1, j - 1] -= c.entry(k, j)
    return m


def simple_reflection(k: int, v: RootVec, c: CartanData) -> RootVec:
    """s_k(v) = v - (sum_j a_kj v_j) alpha_k."""
    _check_vertex(k, c.rank)
    if len(v) != c.rank:
        raise InputError(f"vector of length {len(v)} for rank {c.rank}")
    pairing = sum(c.entry(k, j + 1) * x for j, x in enumerate(v))
    out = list(v)
    out[k - 1] -= pairing
    return tuple(out)


def simple_root(i: int, n: int) -> RootVec:
    _check_vertex(i, n)
    return tuple(1 if j == i - 1 else 0 for j in range(n))


def height(v: RootVec) -> int:
    return sum(v)


def enumerate_positive_roots(c: CartanData) -> tuple[RootVec, ...]:
    """All positive roots, sorted by (height, coordinates).

    Breadth-first closure of the simple roots under simple reflections,
    keeping positive images.
    """
    if not c.is_dynkin:
        raise InputError(f"root enumeration needs Dynkin Cartan data (got {c.cartan})")
    return _positive_roots(c.cartan)


_ROOT_CACHE: dict = {}


def _positive_roots(cartan) -> tuple[RootVec, ...]:
    if cartan in _ROOT_CACHE:
        return _ROOT_CACHE[cartan]
    c = CartanData(cartan)
    n = c.rank
    simples = [simple_root(i, n) for i in range(1, n + 1)]
    seen = set(simples)
    queue = deque(simples)
    while queue:
        v = queue.popleft()
        for k in range(1, n + 1):
            w = simple_reflection(k, v, c)
            if all(x >= 0 for x in w) and w not in seen:
                seen.add(w)
                queue.append(w)
    out = tuple(sorted(seen, key=lambda v: (height(v), v)))
    _ROOT_CACHE[cartan] = out
    return out


@dataclass(frozen=True, order=True)
class AlmostPositiveRoot:
    """Element of the almost positive roots: a positive root or some -alpha_i.

    Stored as a coordinate vector; ``negative_simple`` is the vertex i when
    the value is -alpha_i and None for positive roots.
    """

    coords: RootVec

    def __post_init__(self):
        v = tuple(int(x) for x in self.coords)
        object.__setattr__(self, "coords", v)
        if all(x >= 0 for x in v) and any(v):
            return
        negs = [i for i, x in enumerate(v) if x != 0]
        if len(negs) == 1 and v[negs[0]] == -1:
            return
        raise InputError(f"{v} is neither positive nor a negative simple root")

    @classmethod
    def positive(cls, v: RootVec) -> "AlmostPositiveRoot":
        if not all(x >= 0 for x in v):
            raise InputError(f"{v} is not positive")
        return cls(tuple(v))

    @classmethod
    def negative_simple_root(cls, i: int, n: int) -> "AlmostPositiveRoot":
        return cls(tuple(-x for x in simple_root(i, n)))

    @property
    def negative_simple(self) -> int | None:
        if any(x < 0 for x in self.coords):
            return next(i + 1 for i, x in enumerate(self.coords) if x < 0)
        return None

    @property
    def is_positive(self) -> bool:
        return self.negative_simple is None

    def __str__(self):
        i = self.negative_simple
        if i is not None:
            return f"-a{i}"
        return "+".join(f"{x}a{j + 1}" if x != 1 else f"a{j + 1}" for j, x in enumerate(self.coords) if x)


def almost_positive_roots(c: CartanData) -> tuple[AlmostPositiveRoot, ...]:
    n = c.rank
    negs = [AlmostPositiveRoot.negative_simple_root(i, n) for i in range(1, n + 1)]
    return tuple(negs) + tuple(AlmostPositiveRoot(v) for v in enumerate_positive_roots(c))


def truncated_reflection(k: int, alpha: AlmostPositiveRoot, c: CartanData) -> AlmostPositiveRoot:
    """sigma_k: fixes -alpha_j for j != k, acts as s_k otherwise."""
    _check_vertex(k, c.rank)
    j = alpha.negative_simple
    if j is not None and j != k:
        return alpha
    image = simple_reflection(k, alpha.coords, c)
    try:
        out = AlmostPositiveRoot(image)
    except InputError:
        raise InvariantViolation(f"sigma_{k}({alpha.coords}) = {image} left the almost positive roots")
    if out.is_positive and out.coords not in set(_positive_roots(c.cartan)):
        raise InvariantViolation(f"sigma_{k}({alpha.coords}) = {image} is not a root")
    return out


def _check_vertex(k: int, n: int) -> None:
    if not (isinstance(k, (int, np.integer)) and 1 <= k <= n):
        raise InputError(f"vertex {k} out of range 1..{n}")

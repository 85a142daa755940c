"""Cluster category C(Q) = D^b / F with F = tau^-1[1], and root category D^b / [2].

Objects are represented in the fundamental domain ind H u {P_i[1]}.  Orbit
homs are Hom_D(X, Y) (+) Hom_D(X, FY); every other power of F is checked to
contribute nothing over a window of degrees.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

import networkx as nx
import numpy as np
import sympy
from sympy.matrices.normalforms import invariant_factors

from . import linalg
from .derived import DerivedHom, DerivedModel, DerivedObject
from .errors import InputError, InvariantViolation
from .quiver import ValuedQuiver
from .roots import RootVec

WINDOW = range(-3, 4)

ClusterObject = DerivedObject


@dataclass
class ClusterHom:
    """Hom_C(X, Y) as deg0 = Hom_D(X, Y) and deg1 = Hom_D(X, FY)."""

    source: DerivedObject
    target: DerivedObject
    deg0: DerivedHom
    deg1: DerivedHom

    @property
    def total_dim(self) -> int:
        return self.deg0.dim + self.deg1.dim

    def split(self, coords):
        return coords[: self.deg0.dim], coords[self.deg0.dim :]


class ClusterCategory:
    def __init__(self, q: ValuedQuiver):
        self.model = DerivedModel(q)
        self.quiver = q
        self.n = q.n
        self._homs: dict = {}
        self._tensors: dict = {}
        self._ext: dict = {}

    # -- objects ----------------------------------------------------------

    @cached_property
    def objects(self) -> list[DerivedObject]:
        """ind H followed by P_1[1], ..., P_n[1]."""
        mods = [DerivedObject(k, 0) for k in self.model.roots]
        return mods + [self.model.P(i, 1) for i in self.quiver.vertices]

    @cached_property
    def index(self) -> dict[DerivedObject, int]:
        return {x: i for i, x in enumerate(self.objects)}

    def in_domain(self, x: DerivedObject) -> bool:
        if x.shift == 0:
            return True
        return x.shift == 1 and self.model.projective_index(x.key) is not None

    def normalize(self, x: DerivedObject) -> DerivedObject:
        """The fundamental-domain representative of the F-orbit of x."""
        self.model.check(x)
        for _ in range(4 * (abs(x.shift) + 2)):
            if self.in_domain(x):
                return x
            x = self.model.F_inv(x) if x.shift >= 1 else self.model.F(x)
        raise InvariantViolation(f"could not normalize {x}")

    def is_shifted_projective(self, x: DerivedObject) -> bool:
        return x.shift == 1

    def tau(self, x: DerivedObject) -> DerivedObject:
        """Translate in C: induced by tau on D, then normalized."""
        return self.normalize(self.model.tau(x))

    def tau_inv(self, x: DerivedObject) -> DerivedObject:
        return self.normalize(self.model.tau_inv(x))

    def shift(self, x: DerivedObject, m: int = 1) -> DerivedObject:
        return self.normalize(x.shifted(m))

    def _check(self, x: DerivedObject) -> None:
        if not self.in_domain(x):
            raise InputError(f"{x} is not a fundamental-domain representative")

    # -- homs -------------------------------------------------------------

    def window_dims(self, x: DerivedObject, y: DerivedObject) -> dict[int, int]:
        """dim Hom_D(X, F^i Y) for i in the checked window."""
        out = {}
        for i in WINDOW:
            z = y
            step = self.model.F if i > 0 else self.model.F_inv
            for _ in range(abs(i)):
                z = step(z)
            out[i] = self.model.hom_dim(x, z)
        return out

    def hom(self, x: DerivedObject, y: DerivedObject, check_window: bool = False) -> ClusterHom:
        self._check(x)
        self._check(y)
        if check_window:
            stray = {i: d for i, d in self.window_dims(x, y).items() if d and i not in (0, 1)}
            if stray:
                raise InvariantViolation(f"Hom_D({x}, F^i {y}) nonzero for i in {sorted(stray)}")
        if (x, y) not in self._homs:
            fy = self.model.F(y)
            self._homs[(x, y)] = ClusterHom(x, y, self.model.hom(x, y), self.model.hom(x, fy))
        return self._homs[(x, y)]

    def hom_dim(self, x: DerivedObject, y: DerivedObject) -> int:
        return self.model.hom_dim(x, y) + self.model.hom_dim(x, self.model.F(y))

    def ext1_derived(self, x: DerivedObject, y: DerivedObject) -> int:
        return self.model.hom_dim(x, y.shifted(1))

    def ext1(self, x: DerivedObject, y: DerivedObject) -> int:
        """dim Ext^1_C(X, Y) = dim Ext^1_D(X, Y) + dim Ext^1_D(Y, X) on representatives."""
        if (x, y) not in self._ext:
            self._ext[(x, y)] = self.ext1_derived(x, y) + self.ext1_derived(y, x)
        return self._ext[(x, y)]

    # -- composition ------------------------------------------------------

    def _F_of_deg0(self, y: DerivedObject, z: DerivedObject, g0, hyz: DerivedHom):
        """F applied to a degree-0 map Y -> Z between non-injective modules (literal C^-)."""
        cat = self.model.catalog
        if hyz.kind != "hom" or y.shift != 0 or z.shift != 0:
            return None
        if cat.is_injective(y.key) or cat.is_injective(z.key):
            return None
        return cat.tau_inv_morphism(g0)

    def composition_tensor(self, x: DerivedObject, y: DerivedObject, z: DerivedObject) -> np.ndarray:
        """T[r, p, q]: coefficient of basis r of Hom_C(X, Z) in (basis q of Hom_C(Y, Z)) o (basis p of Hom_C(X, Y))."""
        key = (x, y, z)
        if key in self._tensors:
            return self._tensors[key]
        m = self.model
        hxy, hyz, hxz = self.hom(x, y), self.hom(y, z), self.hom(x, z)
        out = np.empty((hxz.total_dim, hxy.total_dim, hyz.total_dim), dtype=object)
        out.fill(linalg.ZERO)
        n0xy, n0yz, n0xz = hxy.deg0.dim, hyz.deg0.dim, hxz.deg0.dim
        fy, fz = m.F(y), m.F(z)
        for p in range(hxy.total_dim):
            unit_p = [int(i == p) for i in range(hxy.total_dim)]
            c0, c1 = unit_p[:n0xy], unit_p[n0xy:]
            for q_ in range(hyz.total_dim):
                unit_q = [int(i == q_) for i in range(hyz.total_dim)]
                d0, d1 = unit_q[:n0yz], unit_q[n0yz:]
                if p < n0xy and q_ < n0yz:
                    f0, g0 = m.element(hxy.deg0, c0), m.element(hyz.deg0, d0)
                    out[:n0xz, p, q_] = m.compose_data(hxy.deg0, f0, hyz.deg0, g0, hxz.deg0)
                elif p < n0xy:
                    f0, g1 = m.element(hxy.deg0, c0), m.element(hyz.deg1, d1)
                    out[n0xz:, p, q_] = m.compose_data(hxy.deg0, f0, hyz.deg1, g1, hxz.deg1)
                elif q_ < n0yz:
                    if hxz.deg1.dim == 0:
                        continue
                    g0 = m.element(hyz.deg0, d0)
                    fg0 = self._F_of_deg0(y, z, g0, hyz.deg0)
                    if fg0 is None:
                        raise InvariantViolation(f"need F on a map {y} -> {z} outside the catalog")
                    f1 = m.element(hxy.deg1, c1)
                    hf = DerivedHom(fy, fz, "hom", m.catalog.hom(fy.key, fz.key), 1)
                    out[n0xz:, p, q_] = m.compose_data(hxy.deg1, f1, hf, fg0, hxz.deg1)
        self._tensors[key] = out
        return out

    def compose(self, x, y, z, f, g) -> np.ndarray:
        """Coordinates of g o f for f in Hom_C(X, Y), g in Hom_C(Y, Z) (coordinate vectors)."""
        t = self.composition_tensor(x, y, z)
        f = np.asarray(f, dtype=object)
        g = np.asarray(g, dtype=object)
        if t.size == 0:
            return linalg.zeros(t.shape[0], 1)[:, 0]
        return np.tensordot(np.tensordot(t, g, axes=([2], [0])), f, axes=([1], [0]))

    def identity(self, x: DerivedObject) -> list:
        h = self.hom(x, x)
        return [linalg.ONE] + [linalg.ZERO] * (h.total_dim - 1)

    # -- tilting ----------------------------------------------------------

    def is_rigid(self, x: DerivedObject) -> bool:
        return self.ext1(x, x) == 0

    def is_exceptional(self, objs: Iterable[DerivedObject]) -> bool:
        objs = list(objs)
        return all(self.ext1(a, b) == 0 for a in objs for b in objs)

    def ext_free_graph(self) -> nx.Graph:
        g = nx.Graph()
        objs = self.objects
        g.add_nodes_from(range(len(objs)))
        for i, j in itertools.combinations(range(len(objs)), 2):
            if self.ext1(objs[i], objs[j]) == 0:
                g.add_edge(i, j)
        return g

    def maximal_ext_free_sets(self) -> list[tuple[DerivedObject, ...]]:
        """All maximal Ext^1-free sets (maximal cliques, Bron-Kerbosch)."""
        objs = self.objects
        for x in objs:
            if not self.is_rigid(x):
                raise InvariantViolation(f"{x} has self-extensions")
        cliques = nx.find_cliques(self.ext_free_graph())
        return sorted(tuple(objs[i] for i in sorted(c)) for c in cliques)

    def tilting_sets(self) -> list[tuple[DerivedObject, ...]]:
        """Maximal Ext-free sets, each checked to have exactly n members."""
        out = self.maximal_ext_free_sets()
        for t in out:
            if len(t) != self.n:
                raise InvariantViolation(f"maximal Ext-free set of size {len(t)} != {self.n}: {t}")
        return out

    def completions(self, partial: Sequence[DerivedObject]) -> list[DerivedObject]:
        """All X with partial u {X} tilting; asserts there are exactly two."""
        partial = list(partial)
        for x in partial:
            self._check(x)
        if len(set(partial)) != self.n - 1:
            raise InputError(f"an almost complete set needs {self.n - 1} distinct objects")
        if not self.is_exceptional(partial):
            raise InputError("the given objects have extensions between them")
        out = [
            x
            for x in self.objects
            if x not in partial and self.is_rigid(x) and all(self.ext1(x, b) == 0 for b in partial)
        ]
        if len(out) != 2:
            raise InvariantViolation(f"{len(out)} completions of {partial}")
        return out

    def exchange_graph(self, tilting: list | None = None) -> nx.Graph:
        """Tilting sets, adjacent when they share n - 1 members."""
        tilting = self.tilting_sets() if tilting is None else tilting
        g = nx.Graph()
        g.add_nodes_from(range(len(tilting)))
        by_partial: dict = {}
        for i, t in enumerate(tilting):
            for x in t:
                by_partial.setdefault(frozenset(t) - {x}, []).append(i)
        for members in by_partial.values():
            for a, b in itertools.combinations(members, 2):
                g.add_edge(a, b)
        return g

    # -- gamma ------------------------------------------------------------

    def gamma(self, x: DerivedObject):
        from .roots import AlmostPositiveRoot

        self._check(x)
        if x.shift == 0:
            return AlmostPositiveRoot(x.key)
        i = self.model.projective_index(x.key)
        return AlmostPositiveRoot.negative_simple_root(i, self.n)


# ---------------------------------------------------------------------------
# root category


def ind_root_category(model: DerivedModel) -> list[DerivedObject]:
    """ind H u ind H[1], representatives of D^b / [2]."""
    return [DerivedObject(k, s) for s in (0, 1) for k in model.roots]


def root_normalize(x: DerivedObject) -> DerivedObject:
    return DerivedObject(x.key, x.shift % 2)


def root_dim(x: DerivedObject) -> RootVec:
    """M -> dim M, M[1] -> -dim M."""
    return x.k0_class()


def root_hom_dim(model: DerivedModel, x: DerivedObject, y: DerivedObject) -> int:
    """dim Hom_R(X, Y) = sum_i dim Hom_D(X, Y[2i]) over the checked window."""
    dims = {i: model.hom_dim(x, y.shifted(2 * i)) for i in WINDOW}
    return sum(dims.values())


# ---------------------------------------------------------------------------
# Grothendieck groups


@dataclass
class GrothendieckQuotient:
    rank: int
    relation: list[list[int]]
    invariant_factors: list[int]
    description: str = field(default="")


def _describe(n: int, factors: list[int]) -> str:
    nonzero = [f for f in factors if f != 0]
    free = n - len(nonzero)
    parts = [f"Z/{f}" for f in nonzero if f != 1]
    if free:
        parts.append("Z" if free == 1 else f"Z^{free}")
    return " + ".join(parts) if parts else "trivial group"


def k0_quotient(q: ValuedQuiver, auto: str = "F") -> GrothendieckQuotient:
    """Z^n / im(I - M) for M the action of the automorphism on K_0.

    ``auto`` is 'F' (M = -Coxeter^-1), '[2]' (M = I) or 'id' (M = I).
    """
    model = DerivedModel(q)
    n = q.n
    if auto == "F":
        m = -model.coxeter_inv
    elif auto in ("[2]", "shift2", "2", "id"):
        m = linalg.eye(n)
    else:
        raise InputError(f"unknown automorphism {auto!r} (use F or [2])")
    rel = linalg.integer_matrix(linalg.eye(n) - m)
    return GrothendieckQuotient(n, rel, (factors := smith_factors(rel)), _describe(n, factors))


def smith_factors(rel: list[list[int]]) -> list[int]:
    """Invariant factors d_1 | d_2 | ... padded with zeros to the matrix size."""
    n = len(rel)
    if n == 0:
        return []
    mat = sympy.Matrix(rel)
    if mat.is_zero_matrix:
        return [0] * n
    fs = [abs(int(f)) for f in invariant_factors(mat, domain=sympy.ZZ)]
    fs += [0] * (n - len(fs))
    return fs


_CATEGORIES: dict[ValuedQuiver, ClusterCategory] = {}


def cluster_category(q: ValuedQuiver) -> ClusterCategory:
    """Shared ClusterCategory per quiver, so hom and composition caches are reused."""
    if q not in _CATEGORIES:
        _CATEGORIES[q] = ClusterCategory(q)
    return _CATEGORIES[q]

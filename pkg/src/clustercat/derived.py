"""Indecomposables of D^b(mod H) for Dynkin H as (module, shift) pairs.

Every indecomposable complex over a hereditary algebra is a shifted module,
so ``DerivedObject(key, shift)`` is a normal form.  For simply-laced quivers
the module keys are backed by the representation catalog and all homs are
explicit; for valued quivers only the dimension-vector level is available.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

import numpy as np

from . import linalg
from .errors import InputError, InvariantViolation
from .quiver import ValuedQuiver, apply_matrix, coxeter_matrix, injective_dims, projective_dims
from .rep import (
    ExtPresentation,
    HomSpace,
    RepCatalog,
    compose_cochain_after,
    compose_cochain_before,
)
from .roots import RootVec, enumerate_positive_roots


@dataclass(frozen=True, order=True)
class DerivedObject:
    """The stalk complex ``M[shift]`` for the indecomposable module with dimension vector ``key``."""

    key: RootVec
    shift: int = 0

    def shifted(self, m: int) -> "DerivedObject":
        return DerivedObject(self.key, self.shift + m)

    def k0_class(self) -> RootVec:
        sign = -1 if self.shift % 2 else 1
        return tuple(sign * x for x in self.key)

    def __str__(self):
        base = "(" + ",".join(map(str, self.key)) + ")"
        return base if self.shift == 0 else f"{base}[{self.shift}]"


Auto = Literal["tau", "tau-1", "F", "F-1", "shift"]


@dataclass
class DerivedHom:
    """Hom_D(M[a], N[b]): ``kind`` is 'hom' (b = a), 'ext' (b = a + 1) or 'zero'."""

    source: DerivedObject
    target: DerivedObject
    kind: str
    space: HomSpace | ExtPresentation | None = None
    dim: int = 0


class DerivedModel:
    """tau, tau^-1, [m] and F = tau^-1[1] on normal forms for a Dynkin quiver."""

    def __init__(self, q: ValuedQuiver):
        if not q.is_dynkin:
            raise InputError("the derived-category model needs a Dynkin quiver")
        self.quiver = q
        self.n = q.n
        self.roots = enumerate_positive_roots(q.cartan)
        self._root_set = set(self.roots)
        self.projective = projective_dims(q)
        self.injective = injective_dims(q)
        self._proj_index = {v: i for i, v in self.projective.items()}
        self._inj_index = {v: i for i, v in self.injective.items()}
        self.coxeter = coxeter_matrix(q)
        self.coxeter_inv = linalg.inverse(self.coxeter)
        self.catalog: RepCatalog | None = None
        if q.simply_laced:
            from .cache import get_catalog

            self.catalog = get_catalog(q)

    # -- objects ---------------------------------------------------------

    def check(self, x: DerivedObject) -> DerivedObject:
        if x.key not in self._root_set:
            raise InputError(f"{x.key} is not the dimension vector of an indecomposable")
        return x

    def projective_index(self, key: RootVec) -> int | None:
        return self._proj_index.get(key)

    def injective_index(self, key: RootVec) -> int | None:
        return self._inj_index.get(key)

    def P(self, i: int, shift: int = 0) -> DerivedObject:
        return DerivedObject(self.projective[i], shift)

    def I(self, i: int, shift: int = 0) -> DerivedObject:
        return DerivedObject(self.injective[i], shift)

    def simple(self, i: int, shift: int = 0) -> DerivedObject:
        return DerivedObject(tuple(int(j == i) for j in self.quiver.vertices), shift)

    # -- automorphisms ---------------------------------------------------

    def _module_tau(self, key: RootVec, direction: int) -> RootVec:
        if self.catalog is not None:
            out = self.catalog.tau[key] if direction == 1 else self.catalog.tau_inv[key]
        else:
            m = self.coxeter if direction == 1 else self.coxeter_inv
            out = apply_matrix(m, key)
        if out is None or out not in self._root_set:
            raise InvariantViolation(f"translate of {key} left the positive roots")
        return out

    def tau(self, x: DerivedObject) -> DerivedObject:
        i = self._proj_index.get(x.key)
        if i is not None:
            return DerivedObject(self.injective[i], x.shift - 1)
        return DerivedObject(self._module_tau(x.key, 1), x.shift)

    def tau_inv(self, x: DerivedObject) -> DerivedObject:
        i = self._inj_index.get(x.key)
        if i is not None:
            return DerivedObject(self.projective[i], x.shift + 1)
        return DerivedObject(self._module_tau(x.key, -1), x.shift)

    def F(self, x: DerivedObject) -> DerivedObject:
        return self.tau_inv(x).shifted(1)

    def F_inv(self, x: DerivedObject) -> DerivedObject:
        return self.tau(x.shifted(-1))

    def apply_auto(self, x: DerivedObject, which: Auto, m: int = 1) -> DerivedObject:
        self.check(x)
        if which == "shift":
            return x.shifted(m)
        step = {"tau": self.tau, "tau-1": self.tau_inv, "F": self.F, "F-1": self.F_inv}.get(which)
        if step is None:
            raise InputError(f"unknown automorphism {which!r}")
        if m < 0:
            raise InputError("use the inverse automorphism for negative powers")
        for _ in range(m):
            x = step(x)
        return x

    def k0_class(self, x: DerivedObject) -> RootVec:
        return x.k0_class()

    # -- homs -------------------------------------------------------------

    def _need_catalog(self) -> RepCatalog:
        if self.catalog is None:
            raise InputError("explicit Hom spaces need a simply-laced quiver")
        return self.catalog

    def hom_dim(self, x: DerivedObject, y: DerivedObject) -> int:
        cat = self._need_catalog()
        d = y.shift - x.shift
        if d == 0:
            return cat.hom_dim(x.key, y.key)
        if d == 1:
            return cat.ext_dim(x.key, y.key)
        return 0

    def hom(self, x: DerivedObject, y: DerivedObject) -> DerivedHom:
        """Hom(M[a], N[b]) by the hereditary degree rule, with explicit bases."""
        cat = self._need_catalog()
        d = y.shift - x.shift
        if d == 0:
            sp = cat.hom(x.key, y.key)
            return DerivedHom(x, y, "hom", sp, sp.dim)
        if d == 1:
            sp = cat.ext(x.key, y.key)
            return DerivedHom(x, y, "ext", sp, sp.dim)
        return DerivedHom(x, y, "zero")

    def element(self, h: DerivedHom, coords):
        """Module-level datum for a coordinate vector: a morphism or a cochain."""
        if h.kind == "hom":
            return h.space.element(coords)
        if h.kind == "ext":
            sp = h.space
            out = None
            for c, b in zip(coords, sp.basis):
                term = {key: m * c for key, m in b.items()}
                out = term if out is None else {key: out[key] + term[key] for key in out}
            if out is None:
                out = {a.key: linalg.zeros(sp.target.dim(a.target), sp.source.dim(a.source)) for a in self.quiver.arrows}
            return out
        return None

    def compose_data(self, first: DerivedHom, f, second: DerivedHom, g, result: DerivedHom) -> np.ndarray:
        """Coordinates in ``result`` of g o f, where f is in ``first`` and g in ``second``."""
        if result.dim == 0:
            return linalg.zeros(0, 1)[:, 0]
        if first.kind == "hom" and second.kind == "hom":
            return result.space.coords(g @ f)
        if first.kind == "ext" and second.kind == "hom":
            return result.space.coords(compose_cochain_after(g, f))
        if first.kind == "hom" and second.kind == "ext":
            return result.space.coords(compose_cochain_before(g, f))
        return linalg.zeros(result.dim, 1)[:, 0]

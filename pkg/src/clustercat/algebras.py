"""Basic algebras with structure constants, and the cluster-tilted algebra of a tilting set.

Two independent constructions of End_C(T):

* ``trivial_extension_model``: A = End_H(T) and the bimodule D Hom_H(T, tau^2 T),
  all on explicit module representations (works for any acyclic simply-laced
  quiver, e.g. affine ones, as long as T consists of modules);
* ``orbit_endomorphism_algebra``: composition in the orbit category directly.

Basis elements carry a type ``source -> target`` meaning a map T_source -> T_target;
the product ``x * y`` is the composite x o y (x after y).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from . import linalg
from .cluster import ClusterCategory
from .derived import DerivedObject
from .errors import InputError, InvariantViolation
from .rep import (
    MorphismMatrix,
    Representation,
    coxeter_functor,
    coxeter_functor_morphism,
    hom_ext,
    hom_ext_dims,
)


@dataclass(frozen=True)
class BasisElement:
    source: int
    target: int
    degree: int = 0
    name: str = ""


class BasicAlgebra:
    """Finite-dimensional algebra on typed basis elements.

    ``table[(a, b)]`` is a dict ``{c: coefficient}`` giving basis_a o basis_b.
    Missing pairs multiply to zero.
    """

    def __init__(self, labels: Sequence[int], basis: Sequence[BasisElement], table: dict):
        self.labels = list(labels)
        self.basis = list(basis)
        self.table = {k: {c: Fraction(v) for c, v in d.items() if v != 0} for k, d in table.items()}
        # the first element of each diagonal block is the identity; the rest
        # of the block must be radical (checked by is_unital / is_local)
        self._ids = {}
        for s in self.labels:
            diag = self.block(s, s)
            if not diag:
                raise InputError(f"summand {s} has no identity element")
            self._ids[s] = diag[0]

    @property
    def dim(self) -> int:
        return len(self.basis)

    def block(self, s: int, t: int) -> list[int]:
        """Indices of basis elements of type s -> t."""
        return [i for i, b in enumerate(self.basis) if (b.source, b.target) == (s, t)]

    def identity_index(self, s: int) -> int:
        return self._ids[s]

    def mul_basis(self, a: int, b: int) -> dict[int, Fraction]:
        return self.table.get((a, b), {})

    def product(self, u, v) -> list[Fraction]:
        out = [Fraction(0)] * self.dim
        for a, ua in enumerate(u):
            if not ua:
                continue
            for b, vb in enumerate(v):
                if not vb:
                    continue
                for c, coef in self.mul_basis(a, b).items():
                    out[c] += ua * vb * coef
        return out

    def unit(self) -> list[Fraction]:
        out = [Fraction(0)] * self.dim
        for s in self.labels:
            out[self._ids[s]] = Fraction(1)
        return out

    def _unit_vec(self, a: int) -> list[Fraction]:
        return [Fraction(int(i == a)) for i in range(self.dim)]

    def is_associative(self) -> bool:
        for a, b, c in itertools.product(range(self.dim), repeat=3):
            ea, eb, ec = self._unit_vec(a), self._unit_vec(b), self._unit_vec(c)
            if self.product(self.product(ea, eb), ec) != self.product(ea, self.product(eb, ec)):
                return False
        return True

    def is_unital(self) -> bool:
        one = self.unit()
        return all(
            self.product(one, self._unit_vec(a)) == self._unit_vec(a) == self.product(self._unit_vec(a), one)
            for a in range(self.dim)
        )

    def respects_types(self) -> bool:
        for (a, b), row in self.table.items():
            x, y = self.basis[a], self.basis[b]
            for c in row:
                z = self.basis[c]
                if y.target != x.source or (z.source, z.target) != (y.source, x.target):
                    return False
        return True

    def degree_one_square_zero(self) -> bool:
        ones = [i for i, b in enumerate(self.basis) if b.degree == 1]
        return all(not self.mul_basis(a, b) for a in ones for b in ones)

    def is_local(self) -> bool:
        """Non-identity diagonal elements are nilpotent, so the algebra is basic."""
        for s in self.labels:
            for a in self.block(s, s)[1:]:
                v = self._unit_vec(a)
                for _ in range(len(self.block(s, s))):
                    v = self.product(v, self._unit_vec(a))
                if any(v):
                    return False
        return True

    def radical(self) -> list[int]:
        ids = set(self._ids.values())
        return [i for i in range(self.dim) if i not in ids]

    def gabriel_quiver(self) -> dict[tuple[int, int], int]:
        """Arrow multiplicities of the Gabriel quiver.

        An element of type s -> t that survives in rad/rad^2 is an arrow t -> s.
        """
        rad = self.radical()
        products: dict[tuple[int, int], list[list[Fraction]]] = {}
        for a in rad:
            for b in rad:
                prod = self.mul_basis(a, b)
                if prod:
                    key = (self.basis[b].source, self.basis[a].target)
                    vec = [Fraction(0)] * self.dim
                    for c, v in prod.items():
                        vec[c] = v
                    products.setdefault(key, []).append(vec)
        out = {}
        for s in self.labels:
            for t in self.labels:
                idx = [i for i in self.block(s, t) if i not in self._ids.values()]
                if not idx:
                    continue
                vecs = products.get((s, t), [])
                r2 = linalg.rank(linalg.matrix([[v[i] for i in idx] for v in vecs], shape=(len(vecs), len(idx))))
                count = len(idx) - r2
                if count:
                    out[(t, s)] = count
        return dict(sorted(out.items()))

    def is_hereditary(self) -> bool:
        """Path algebra of its Gabriel quiver: acyclic and dim = number of paths."""
        quiver = self.gabriel_quiver()
        return gabriel_is_acyclic(self.labels, quiver) and count_paths(self.labels, quiver) == self.dim


def gabriel_is_acyclic(labels, arrows: dict) -> bool:
    import networkx as nx

    g = nx.DiGraph()
    g.add_nodes_from(labels)
    g.add_edges_from(arrows)
    return nx.is_directed_acyclic_graph(g)


def count_paths(labels, arrows: dict) -> int:
    """Number of paths (including trivial ones) in an acyclic quiver with multiplicities."""
    import networkx as nx

    g = nx.DiGraph()
    g.add_nodes_from(labels)
    g.add_edges_from(arrows)
    from_v = {}
    for v in reversed(list(nx.topological_sort(g))):
        from_v[v] = 1 + sum(arrows[(v, w)] * from_v[w] for w in g.successors(v))
    return sum(from_v.values())


# ---------------------------------------------------------------------------
# trivial-extension model


@dataclass
class ClusterTiltedResult:
    A: BasicAlgebra
    Lam: BasicAlgebra
    bimodule_dim: int
    tau2_dims: list[tuple[int, ...]]


def double_tau(v: Representation) -> Representation:
    return coxeter_functor(coxeter_functor(v, 1), 1)


def check_tilting_module(T: Sequence[Representation]) -> None:
    if not T:
        raise InputError("empty tilting set")
    q = T[0].quiver
    if len(T) != q.n:
        raise InputError(f"a tilting module needs {q.n} summands, got {len(T)}")
    if len({t.dims for t in T}) != len(T):
        raise InputError("summands are not pairwise non-isomorphic")
    for a, b in itertools.product(T, repeat=2):
        if hom_ext_dims(a, b)[1]:
            raise InputError(f"Ext^1({a.dims}, {b.dims}) != 0: not a tilting module")


def trivial_extension_model(T: Sequence[Representation], check: bool = True) -> ClusterTiltedResult:
    """A = End_H(T), M = D Hom_H(T, tau^2 T), Lambda = A x| M.

    Summand T_i gets label i (1-based, in the given order).
    """
    if check:
        check_tilting_module(T)
    m = len(T)
    labels = list(range(1, m + 1))
    homs = {(s, t): hom_ext(T[s - 1], T[t - 1])[0] for s in labels for t in labels}

    basis: list[BasisElement] = []
    mor: dict[int, MorphismMatrix] = {}
    where: dict[tuple[int, int], list[int]] = {}
    for s in labels:
        for t in labels:
            where[(s, t)] = []
            for u, f in enumerate(homs[(s, t)].basis):
                where[(s, t)].append(len(basis))
                mor[len(basis)] = f
                basis.append(BasisElement(s, t, 0, f"a{s}{t}_{u}"))
    a_table: dict = {}
    for r, s, t in itertools.product(labels, repeat=3):
        for y in where[(r, s)]:
            for x in where[(s, t)]:
                coords = homs[(r, t)].coords(mor[x] @ mor[y])
                a_table[(x, y)] = {where[(r, t)][c]: v for c, v in enumerate(coords) if v}
    A = BasicAlgebra(labels, basis, a_table)

    tau2 = [double_tau(t) for t in T]
    # N_(j, i) = Hom(T_j, tau^2 T_i); its dual basis elements have type i -> j
    nsp = {(j, i): hom_ext(T[j - 1], tau2[i - 1])[0] for j in labels for i in labels}
    tau2_mor: dict[int, MorphismMatrix] = {}
    for x, f in mor.items():
        g = coxeter_functor_morphism(coxeter_functor_morphism(f, 1), 1)
        tau2_mor[x] = MorphismMatrix(tau2[basis[x].source - 1], tau2[basis[x].target - 1], g.blocks)

    lam_basis = list(basis)
    dual: dict[tuple[int, int], list[int]] = {}
    for j in labels:
        for i in labels:
            dual[(j, i)] = []
            for u in range(nsp[(j, i)].dim):
                dual[(j, i)].append(len(lam_basis))
                lam_basis.append(BasisElement(i, j, 1, f"xi{j}{i}_{u}"))
    table = dict(a_table)
    for j, i in itertools.product(labels, repeat=2):
        for u, xi in enumerate(dual[(j, i)]):
            # a o xi for a of type j -> t: lands in D Hom(T_t, tau^2 T_i)
            for t in labels:
                for a in where[(j, t)]:
                    row = {}
                    for v, h in enumerate(nsp[(t, i)].basis):
                        c = nsp[(j, i)].coords(h @ mor[a])[u]
                        if c:
                            row[dual[(t, i)][v]] = c
                    if row:
                        table[(a, xi)] = row
            # xi o b for b of type r -> i: lands in D Hom(T_j, tau^2 T_r)
            for r in labels:
                for b in where[(r, i)]:
                    row = {}
                    for v, h in enumerate(nsp[(j, r)].basis):
                        c = nsp[(j, i)].coords(tau2_mor[b] @ h)[u]
                        if c:
                            row[dual[(j, r)][v]] = c
                    if row:
                        table[(xi, b)] = row
    lam = BasicAlgebra(labels, lam_basis, table)
    bdim = sum(sp.dim for sp in nsp.values())
    if lam.dim != A.dim + bdim:
        raise InvariantViolation("dim Lambda != dim A + dim of the bimodule")
    return ClusterTiltedResult(A, lam, bdim, [t.dims for t in tau2])


# ---------------------------------------------------------------------------
# orbit model


def orbit_endomorphism_algebra(cc: ClusterCategory, T: Sequence[DerivedObject]) -> BasicAlgebra:
    """End_C(T) with structure constants from orbit-category composition."""
    labels = list(range(1, len(T) + 1))
    basis: list[BasisElement] = []
    where: dict[tuple[int, int], list[int]] = {}
    for s in labels:
        for t in labels:
            h = cc.hom(T[s - 1], T[t - 1])
            where[(s, t)] = []
            for u in range(h.total_dim):
                where[(s, t)].append(len(basis))
                deg = 0 if u < h.deg0.dim else 1
                basis.append(BasisElement(s, t, deg, f"e{s}{t}_{u}"))
    table = {}
    for r, s, t in itertools.product(labels, repeat=3):
        ten = cc.composition_tensor(T[r - 1], T[s - 1], T[t - 1])
        for p, y in enumerate(where[(r, s)]):
            for q, x in enumerate(where[(s, t)]):
                row = {where[(r, t)][c]: v for c, v in enumerate(ten[:, p, q]) if v}
                if row:
                    table[(x, y)] = row
    return BasicAlgebra(labels, basis, table)


# ---------------------------------------------------------------------------
# modules over End_C(T)


class LambdaModule:
    """Right module: ``spaces[s]`` is the dimension at summand s; basis element
    lambda of type s -> t acts by a matrix V_t -> V_s.
    """

    def __init__(self, algebra: BasicAlgebra, spaces: dict[int, int], action: dict[int, np.ndarray]):
        self.algebra = algebra
        self.spaces = dict(spaces)
        self.action = action

    @property
    def total_dim(self) -> int:
        return sum(self.spaces.values())

    def respects_products(self) -> bool:
        """M(x o y) = M(y) M(x) for all composable basis pairs."""
        alg = self.algebra
        for (x, y), row in alg.table.items():
            bx, by = alg.basis[x], alg.basis[y]
            lhs = linalg.zeros(self.spaces[by.source], self.spaces[bx.target])
            for c, v in row.items():
                lhs = lhs + self.action[c] * v
            if not linalg.equal(lhs, linalg.matmul(self.action[y], self.action[x])):
                return False
        for s in alg.labels:
            if not linalg.equal(self.action[alg.identity_index(s)], linalg.eye(self.spaces[s])):
                return False
        return True


def module_over_cta(cc: ClusterCategory, T: Sequence[DerivedObject], alg: BasicAlgebra, x: DerivedObject) -> LambdaModule:
    """G X = Hom_C(T, X) with Lambda acting by precomposition."""
    labels = alg.labels
    spaces = {s: cc.hom(T[s - 1], x).total_dim for s in labels}
    action = {}
    for s, t in itertools.product(labels, repeat=2):
        idx = alg.block(s, t)
        if not idx:
            continue
        ten = cc.composition_tensor(T[s - 1], T[t - 1], x)
        for p, lam in enumerate(idx):
            mat = linalg.zeros(spaces[s], spaces[t])
            for q in range(spaces[t]):
                mat[:, q] = ten[:, p, q]
            action[lam] = mat
    return LambdaModule(alg, spaces, action)


def projective_module(alg: BasicAlgebra, t: int) -> LambdaModule:
    """The indecomposable projective e_t Lambda: basis elements of type s -> t for all s."""
    spaces = {s: len(alg.block(s, t)) for s in alg.labels}
    action = {}
    for lam, b in enumerate(alg.basis):
        s, u = b.source, b.target
        mat = linalg.zeros(spaces[s], spaces[u])
        for q, phi in enumerate(alg.block(u, t)):
            for c, v in alg.mul_basis(phi, lam).items():
                mat[alg.block(s, t).index(c), q] += v
        action[lam] = mat
    return LambdaModule(alg, spaces, action)


def direct_sum(mods: Sequence[LambdaModule]) -> LambdaModule:
    alg = mods[0].algebra
    spaces = {s: sum(m.spaces[s] for m in mods) for s in alg.labels}
    action = {}
    for lam, b in enumerate(alg.basis):
        blocks = [m.action[lam] for m in mods]
        out = linalg.zeros(spaces[b.source], spaces[b.target])
        r = c = 0
        for blk in blocks:
            out[r : r + blk.shape[0], c : c + blk.shape[1]] = blk
            r += blk.shape[0]
            c += blk.shape[1]
        action[lam] = out
    return LambdaModule(alg, spaces, action)


def hom_lambda_dim(m: LambdaModule, n: LambdaModule) -> int:
    """Dimension of {psi : psi_s M(lambda) = N(lambda) psi_t for every basis lambda of type s -> t}."""
    alg = m.algebra
    off, nvar = {}, 0
    for s in alg.labels:
        off[s] = nvar
        nvar += n.spaces[s] * m.spaces[s]
    rows = []
    for lam, b in enumerate(alg.basis):
        s, t = b.source, b.target
        ml, nl = m.action[lam], n.action[lam]
        # entry (r, c) of psi_s M - N psi_t, an (n_s x m_t) matrix
        for r in range(n.spaces[s]):
            for c in range(m.spaces[t]):
                row = [0] * nvar
                for k in range(m.spaces[s]):
                    if ml[k, c]:
                        row[off[s] + r * m.spaces[s] + k] += ml[k, c]
                for k in range(n.spaces[t]):
                    if nl[r, k]:
                        row[off[t] + k * m.spaces[t] + c] -= nl[r, k]
                rows.append(row)
    if nvar == 0:
        return 0
    return nvar - linalg.rank(linalg.matrix(rows, shape=(len(rows), nvar)))


def hom_quotient_dim(cc: ClusterCategory, T: Sequence[DerivedObject], x: DerivedObject, y: DerivedObject) -> int:
    """dim Hom_C(X, Y) minus the maps factoring through add(tau T)."""
    tt = [cc.tau(t) for t in T]
    if x in tt or y in tt:
        raise InputError("objects of add(tau T) are excluded")
    total = cc.hom(x, y).total_dim
    vecs = []
    for z in tt:
        hxz, hzy = cc.hom(x, z).total_dim, cc.hom(z, y).total_dim
        if not hxz or not hzy:
            continue
        ten = cc.composition_tensor(x, z, y)
        for p in range(hxz):
            for q in range(hzy):
                vecs.append(list(ten[:, p, q]))
    if not vecs or total == 0:
        return total
    return total - linalg.rank(linalg.matrix(vecs, shape=(len(vecs), total)))


def module_reps(cc: ClusterCategory, T: Sequence[DerivedObject]) -> list[Representation]:
    """Catalog representations of a tilting set consisting of modules."""
    out = []
    for t in T:
        if t.shift != 0:
            raise InputError(f"{t} is not a module; reflect the tilting set first")
        out.append(cc.model.catalog[t.key])
    return out


def apr_tilting(cc: ClusterCategory, k: int) -> list[DerivedObject]:
    """T(k): P_i at label i for i != k, and tau^-1 E_k at label k."""
    model = cc.model
    return [cc.tau_inv(model.simple(k)) if i == k else model.P(i) for i in cc.quiver.vertices]


def apr_bimodule_dim(cc: ClusterCategory, k: int) -> int:
    """dim Hom_H(T'(k), tau E_k), T'(k) = sum of P_i, i != k.

    Zero when E_k is projective (k a sink). When k is a source the APR object
    contains P_k[1] and the cluster-tilted algebra is hereditary, so 0 as well.
    """
    model = cc.model
    q = cc.quiver
    if model.projective_index(model.simple(k).key) is not None or not q.incoming(k):
        return 0
    te = model.tau(model.simple(k))
    return sum(model.hom_dim(model.P(i), te) for i in cc.quiver.vertices if i != k)

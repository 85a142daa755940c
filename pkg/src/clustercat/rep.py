"""Representations of simply-laced quivers over the rationals.

Hom and Ext^1 come from the standard two-term complex

    d: (+)_i Hom(X_i, Y_i) -> (+)_{a: i->j} Hom(X_i, Y_j),
    d(phi)_a = phi_j x_a - y_a phi_i,

so Hom(X, Y) = ker d and Ext^1(X, Y) = coker d.  BGP reflection functors are
implemented on objects and morphisms; the Auslander-Reiten translate is the
Coxeter functor built from them.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterator

import numpy as np

from . import linalg
from .errors import InputError, InvariantViolation
from .quiver import (
    ValuedQuiver,
    injective_dims,
    is_sink,
    is_source,
    reflect_orientation,
    sink_admissible_order,
)
from .roots import RootVec, enumerate_positive_roots, simple_root

Cochain = dict  # arrow key (i, j) -> matrix of shape (Y_j, X_i)


class Representation:
    """Vector spaces ``Q^dims[i]`` with one matrix per arrow (shape target x source)."""

    __slots__ = ("quiver", "dims", "mats")

    def __init__(self, quiver: ValuedQuiver, dims, mats: dict | None = None):
        if not quiver.simply_laced:
            raise InputError("explicit representations need a simply-laced quiver")
        dims = tuple(int(x) for x in dims)
        if len(dims) != quiver.n or min(dims) < 0:
            raise InputError(f"bad dimension vector {dims} for {quiver.n} vertices")
        mats = dict(mats or {})
        out = {}
        for a in quiver.arrows:
            shape = (dims[a.target - 1], dims[a.source - 1])
            m = mats.pop(a.key, None)
            if m is None:
                m = linalg.zeros(*shape)
            elif not isinstance(m, np.ndarray) or m.dtype != object:
                m = linalg.matrix(m, shape=shape)
            if m.shape != shape:
                raise InputError(f"matrix for arrow {a.key} has shape {m.shape}, expected {shape}")
            out[a.key] = m
        if mats:
            raise InputError(f"matrices given for non-arrows {sorted(mats)}")
        self.quiver = quiver
        self.dims = dims
        self.mats = out

    def dim(self, i: int) -> int:
        return self.dims[i - 1]

    @property
    def total_dim(self) -> int:
        return sum(self.dims)

    @property
    def is_zero(self) -> bool:
        return self.total_dim == 0

    def __eq__(self, other):
        if not isinstance(other, Representation):
            return NotImplemented
        return (
            self.quiver == other.quiver
            and self.dims == other.dims
            and all(linalg.equal(self.mats[k], other.mats[k]) for k in self.mats)
        )

    __hash__ = None

    def __repr__(self):
        return f"Representation(dims={self.dims})"


class MorphismMatrix:
    """Per-vertex blocks ``blocks[i]`` of shape (target.dims[i], source.dims[i])."""

    __slots__ = ("source", "target", "blocks")

    def __init__(self, source: Representation, target: Representation, blocks: dict):
        if source.quiver != target.quiver:
            raise InputError("morphism between representations of different quivers")
        self.source = source
        self.target = target
        self.blocks = {}
        for i in source.quiver.vertices:
            shape = (target.dim(i), source.dim(i))
            b = blocks.get(i)
            if b is None:
                b = linalg.zeros(*shape)
            if b.shape != shape:
                raise InputError(f"block at vertex {i} has shape {b.shape}, expected {shape}")
            self.blocks[i] = b

    def is_intertwiner(self) -> bool:
        for a in self.source.quiver.arrows:
            i, j = a.key
            lhs = linalg.matmul(self.blocks[j], self.source.mats[a.key])
            rhs = linalg.matmul(self.target.mats[a.key], self.blocks[i])
            if not linalg.equal(lhs, rhs):
                return False
        return True

    def flat(self) -> np.ndarray:
        parts = [self.blocks[i].reshape(-1) for i in self.source.quiver.vertices]
        return np.concatenate(parts).reshape(-1, 1) if parts else linalg.zeros(0, 1)

    def __matmul__(self, other: "MorphismMatrix") -> "MorphismMatrix":
        """``self @ other`` is the composite ``self o other``."""
        if not (other.target is self.source or other.target == self.source):
            raise InputError("composition of non-composable morphisms")
        blocks = {i: linalg.matmul(self.blocks[i], other.blocks[i]) for i in self.blocks}
        return MorphismMatrix(other.source, self.target, blocks)

    def __add__(self, other):
        return MorphismMatrix(self.source, self.target, {i: self.blocks[i] + other.blocks[i] for i in self.blocks})

    def scaled(self, c) -> "MorphismMatrix":
        return MorphismMatrix(self.source, self.target, {i: self.blocks[i] * Fraction(c) for i in self.blocks})

    def is_zero(self) -> bool:
        return all(linalg.is_zero(b) for b in self.blocks.values())

    def __eq__(self, other):
        if not isinstance(other, MorphismMatrix):
            return NotImplemented
        return all(linalg.equal(self.blocks[i], other.blocks[i]) for i in self.blocks)

    __hash__ = None

    @classmethod
    def identity(cls, v: Representation) -> "MorphismMatrix":
        return cls(v, v, {i: linalg.eye(v.dim(i)) for i in v.quiver.vertices})

    @classmethod
    def zero(cls, source: Representation, target: Representation) -> "MorphismMatrix":
        return cls(source, target, {})


# ---------------------------------------------------------------------------
# standard modules


def _paths(q: ValuedQuiver, start: int) -> list[tuple[int, ...]]:
    """All paths leaving ``start`` (as vertex sequences), including the trivial one."""
    out, stack = [], [(start,)]
    while stack:
        p = stack.pop()
        out.append(p)
        for a in q.outgoing(p[-1]):
            stack.append(p + (a.target,))
    return sorted(out)


def build_projective(q: ValuedQuiver, i: int) -> Representation:
    """P_i with basis the paths starting at i."""
    paths = _paths(q, i)
    at = {v: [p for p in paths if p[-1] == v] for v in q.vertices}
    dims = [len(at[v]) for v in q.vertices]
    mats = {}
    for a in q.arrows:
        m = linalg.zeros(dims[a.target - 1], dims[a.source - 1])
        for c, p in enumerate(at[a.source]):
            m[at[a.target].index(p + (a.target,)), c] = 1
        mats[a.key] = m
    return Representation(q, dims, mats)


def build_injective(q: ValuedQuiver, i: int) -> Representation:
    """I_i: at vertex v, the dual basis of paths from v to i."""
    ending = {v: [p for p in _paths(q, v) if p[-1] == i] for v in q.vertices}
    dims = [len(ending[v]) for v in q.vertices]
    mats = {}
    for a in q.arrows:
        m = linalg.zeros(dims[a.target - 1], dims[a.source - 1])
        for c, p in enumerate(ending[a.source]):
            if len(p) > 1 and p[1] == a.target:
                m[ending[a.target].index(p[1:]), c] = 1
        mats[a.key] = m
    return Representation(q, dims, mats)


def build_simple(q: ValuedQuiver, i: int) -> Representation:
    return Representation(q, simple_root(i, q.n))


def thin_representation(q: ValuedQuiver, dims) -> Representation:
    """Representation with all arrow maps between nonzero spaces equal to 1 (0/1 dims only)."""
    if any(d not in (0, 1) for d in dims):
        raise InputError("thin representations need a 0/1 dimension vector")
    mats = {a.key: linalg.matrix([[1]]) for a in q.arrows if dims[a.source - 1] and dims[a.target - 1]}
    return Representation(q, dims, mats)


# ---------------------------------------------------------------------------
# Hom and Ext


def _layout(x: Representation, y: Representation):
    q = x.quiver
    var_off, n_var = {}, 0
    for i in q.vertices:
        var_off[i] = n_var
        n_var += y.dim(i) * x.dim(i)
    eq_off, n_eq = {}, 0
    for a in q.arrows:
        eq_off[a.key] = n_eq
        n_eq += y.dim(a.target) * x.dim(a.source)
    return var_off, n_var, eq_off, n_eq


def _differential(x: Representation, y: Representation) -> tuple[np.ndarray, dict, dict]:
    if x.quiver != y.quiver:
        raise InputError("Hom between representations of different quivers")
    var_off, n_var, eq_off, n_eq = _layout(x, y)
    rows = [[0] * n_var for _ in range(n_eq)]
    for a in x.quiver.arrows:
        i, j = a.key
        xa, ya = x.mats[a.key], y.mats[a.key]
        xi, xj, yi, yj = x.dim(i), x.dim(j), y.dim(i), y.dim(j)
        base = eq_off[a.key]
        for r in range(yj):
            for c in range(xi):
                row = rows[base + r * xi + c]
                for m in range(xj):
                    if xa[m, c] != 0:
                        row[var_off[j] + r * xj + m] += xa[m, c]
                for m in range(yi):
                    if ya[r, m] != 0:
                        row[var_off[i] + m * xi + c] -= ya[r, m]
    d = linalg.matrix(rows, shape=(n_eq, n_var))
    return d, var_off, eq_off


def _unflatten_morphism(x, y, vec, var_off) -> MorphismMatrix:
    blocks = {}
    for i in x.quiver.vertices:
        size = y.dim(i) * x.dim(i)
        blocks[i] = vec[var_off[i] : var_off[i] + size].reshape(y.dim(i), x.dim(i))
    return MorphismMatrix(x, y, blocks)


def flatten_cochain(x: Representation, y: Representation, c: Cochain) -> np.ndarray:
    parts = [c[a.key].reshape(-1) for a in x.quiver.arrows]
    return np.concatenate(parts).reshape(-1, 1) if parts else linalg.zeros(0, 1)


def _unflatten_cochain(x, y, vec, eq_off) -> Cochain:
    out = {}
    for a in x.quiver.arrows:
        i, j = a.key
        size = y.dim(j) * x.dim(i)
        out[a.key] = vec[eq_off[a.key] : eq_off[a.key] + size].reshape(y.dim(j), x.dim(i))
    return out


class HomSpace:
    """A basis of Hom(X, Y) with coordinate extraction."""

    def __init__(self, source: Representation, target: Representation, basis: list[MorphismMatrix]):
        self.source = source
        self.target = target
        self.basis = basis
        flat = [b.flat() for b in basis]
        n = sum(target.dim(i) * source.dim(i) for i in source.quiver.vertices)
        mat = np.concatenate(flat, axis=1) if flat else linalg.zeros(n, 0)
        self._coords = linalg.Coordinates(mat)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def coords(self, f: MorphismMatrix, check: bool = False) -> np.ndarray:
        return self._coords.coords(f.flat(), check=check)[:, 0]

    def element(self, coords) -> MorphismMatrix:
        out = MorphismMatrix.zero(self.source, self.target)
        for c, b in zip(coords, self.basis):
            if c:
                out = out + b.scaled(c)
        return out


class ExtPresentation:
    """Ext^1(X, Y) presented as cochains modulo the image of d.

    ``basis`` holds cochains (standard unit cochains completing im d);
    ``coords`` maps any cochain to its class in that basis.
    """

    def __init__(self, source, target, d: np.ndarray, eq_off: dict):
        self.source = source
        self.target = target
        self._eq_off = eq_off
        n_eq = d.shape[0]
        image = linalg.column_basis(d)
        comp = linalg.complement_coordinates(image)
        frame = np.concatenate([image, linalg.eye(n_eq)[:, comp]], axis=1) if n_eq else linalg.zeros(0, 0)
        self._projection = linalg.inverse(frame)[image.shape[1] :, :] if n_eq else linalg.zeros(0, 0)
        self.basis = []
        for c in comp:
            vec = linalg.zeros(n_eq, 1)
            vec[c, 0] = linalg.ONE
            self.basis.append(_unflatten_cochain(source, target, vec, eq_off))

    @property
    def dim(self) -> int:
        return len(self.basis)

    def coords(self, cochain: Cochain) -> np.ndarray:
        if self.dim == 0:
            return linalg.zeros(0, 1)[:, 0]
        vec = flatten_cochain(self.source, self.target, cochain)
        return linalg.matmul(self._projection, vec)[:, 0]


def hom_ext(x: Representation, y: Representation) -> tuple[HomSpace, ExtPresentation]:
    """Bases of Hom(X, Y) (kernel of d) and a presentation of Ext^1(X, Y) (cokernel).

    When X and Y are the same representation, the identity is the first
    basis element of Hom.
    """
    d, var_off, eq_off = _differential(x, y)
    kernel = linalg.nullspace(d)
    columns = [kernel[:, j : j + 1] for j in range(kernel.shape[1])]
    if x == y and kernel.shape[1]:
        ident = MorphismMatrix.identity(x).flat()
        chosen = [ident]
        for col in columns:
            trial = np.concatenate(chosen + [col], axis=1)
            if linalg.rank(trial) == len(chosen) + 1:
                chosen.append(col)
            if len(chosen) == len(columns):
                break
        columns = chosen
    basis = [_unflatten_morphism(x, y, col[:, 0], var_off) for col in columns]
    return HomSpace(x, y, basis), ExtPresentation(x, y, d, eq_off)


def hom_ext_dims(x: Representation, y: Representation) -> tuple[int, int]:
    """(dim Hom(X, Y), dim Ext^1(X, Y)) from a single rank computation."""
    d, _, _ = _differential(x, y)
    r = linalg.rank(d)
    return d.shape[1] - r, d.shape[0] - r


def compose_cochain_after(g: MorphismMatrix, c: Cochain) -> Cochain:
    """Class of g o c for c in Ext^1(X, Y) and g: Y -> Y'."""
    return {key: linalg.matmul(g.blocks[key[1]], m) for key, m in c.items()}


def compose_cochain_before(c: Cochain, f: MorphismMatrix) -> Cochain:
    """Class of c o f for c in Ext^1(X, Y) and f: X' -> X."""
    return {key: linalg.matmul(m, f.blocks[key[0]]) for key, m in c.items()}


# ---------------------------------------------------------------------------
# BGP reflection functors


def _plus_frame(v: Representation, k: int):
    nbrs = sorted(a.source for a in v.quiver.incoming(k))
    offsets, total = {}, 0
    for j in nbrs:
        offsets[j] = total
        total += v.dim(j)
    if nbrs:
        phi = np.concatenate([v.mats[(j, k)] for j in nbrs], axis=1)
    else:
        phi = linalg.zeros(v.dim(k), 0)
    return nbrs, offsets, linalg.nullspace(phi)


def _minus_frame(v: Representation, k: int):
    nbrs = sorted(a.target for a in v.quiver.outgoing(k))
    offsets, total = {}, 0
    for j in nbrs:
        offsets[j] = total
        total += v.dim(j)
    if nbrs:
        psi = np.concatenate([v.mats[(k, j)] for j in nbrs], axis=0)
    else:
        psi = linalg.zeros(0, v.dim(k))
    image = linalg.column_basis(psi)
    comp = linalg.complement_coordinates(image)
    frame = np.concatenate([image, linalg.eye(total)[:, comp]], axis=1) if total else linalg.zeros(0, 0)
    projection = linalg.inverse(frame)[image.shape[1] :, :] if total else linalg.zeros(0, 0)
    section = linalg.eye(total)[:, comp] if total else linalg.zeros(0, 0)
    return nbrs, offsets, projection, section


def _check_sign(v: Representation, k: int, sign: int) -> None:
    if sign == +1 and not is_sink(v.quiver, k):
        raise InputError(f"S_{k}^+ needs vertex {k} to be a sink")
    if sign == -1 and not is_source(v.quiver, k):
        raise InputError(f"S_{k}^- needs vertex {k} to be a source")
    if sign not in (1, -1):
        raise InputError("sign must be +1 or -1")


def reflect(k: int, sign: int, v: Representation) -> Representation:
    """S_k^+ (sign +1, k a sink) or S_k^- (sign -1, k a source)."""
    _check_sign(v, k, sign)
    q2 = reflect_orientation(v.quiver, k)
    mats = {key: m for key, m in v.mats.items() if k not in key}
    dims = list(v.dims)
    if sign == 1:
        nbrs, offsets, kernel = _plus_frame(v, k)
        dims[k - 1] = kernel.shape[1]
        for j in nbrs:
            mats[(k, j)] = kernel[offsets[j] : offsets[j] + v.dim(j), :]
    else:
        nbrs, offsets, projection, _ = _minus_frame(v, k)
        dims[k - 1] = projection.shape[0]
        for j in nbrs:
            mats[(j, k)] = projection[:, offsets[j] : offsets[j] + v.dim(j)]
    return Representation(q2, dims, mats)


def reflect_morphism(k: int, sign: int, f: MorphismMatrix) -> MorphismMatrix:
    """Action of S_k^+/S_k^- on a morphism (restriction, resp. corestriction at k)."""
    src, tgt = f.source, f.target
    _check_sign(src, k, sign)
    ws, wt = reflect(k, sign, src), reflect(k, sign, tgt)
    blocks = {i: b for i, b in f.blocks.items() if i != k}
    if sign == 1:
        nbrs, offs_s, ks = _plus_frame(src, k)
        _, offs_t, kt = _plus_frame(tgt, k)
        big = _block_diagonal([f.blocks[j] for j in nbrs])
        rhs = linalg.matmul(big, ks)
        beta = linalg.solve(kt, rhs)
        if beta is None:
            raise InvariantViolation("reflected morphism does not restrict to the kernels")
        blocks[k] = beta
    else:
        nbrs, _, _, sec_s = _minus_frame(src, k)
        _, _, proj_t, _ = _minus_frame(tgt, k)
        big = _block_diagonal([f.blocks[j] for j in nbrs])
        blocks[k] = linalg.matmul(linalg.matmul(proj_t, big), sec_s)
    return MorphismMatrix(ws, wt, blocks)


def _block_diagonal(blocks: list[np.ndarray]) -> np.ndarray:
    rows = sum(b.shape[0] for b in blocks)
    cols = sum(b.shape[1] for b in blocks)
    out = linalg.zeros(rows, cols)
    r = c = 0
    for b in blocks:
        out[r : r + b.shape[0], c : c + b.shape[1]] = b
        r += b.shape[0]
        c += b.shape[1]
    return out


def _coxeter_steps(q: ValuedQuiver, direction: int) -> list[tuple[int, int]]:
    order = sink_admissible_order(q)
    if direction == 1:
        return [(k, 1) for k in order]
    if direction == -1:
        return [(k, -1) for k in reversed(order)]
    raise InputError("direction must be +1 (tau) or -1 (tau inverse)")


def coxeter_functor(v: Representation, direction: int) -> Representation:
    """C^+ (direction +1) or C^- (direction -1) as a raw composite; may be zero."""
    for k, sign in _coxeter_steps(v.quiver, direction):
        v = reflect(k, sign, v)
    return v


def coxeter_functor_morphism(f: MorphismMatrix, direction: int) -> MorphismMatrix:
    for k, sign in _coxeter_steps(f.source.quiver, direction):
        f = reflect_morphism(k, sign, f)
    return f


def coxeter_translate(obj, direction: int):
    """tau (direction +1) or tau^-1 (direction -1) via Coxeter functors.

    On a representation, returns None when the result is zero (tau of a
    projective, tau^-1 of an injective).  On a morphism, returns the image
    morphism, whose endpoints may be zero representations.
    """
    if isinstance(obj, MorphismMatrix):
        return coxeter_functor_morphism(obj, direction)
    out = coxeter_functor(obj, direction)
    return None if out.is_zero else out


# ---------------------------------------------------------------------------
# catalog of indecomposables


class RepCatalog:
    """One representation per positive root of a simply-laced Dynkin quiver.

    Built from the projectives by repeated tau^-1 = C^-, so that
    ``C^-(catalog[X])`` is literally ``catalog[tau^-1 X]``.  Keys are
    dimension vectors.
    """

    def __init__(self, q: ValuedQuiver, reps: dict | None = None, tau_inv: dict | None = None):
        if not q.simply_laced:
            raise InputError("the representation catalog needs a simply-laced quiver")
        if not q.is_dynkin:
            raise InputError("the representation catalog needs a Dynkin quiver")
        self.quiver = q
        if reps is None:
            reps, tau_inv = {}, {}
            for i in q.vertices:
                v = build_projective(q, i)
                while not v.is_zero:
                    if v.dims in reps:
                        raise InvariantViolation(f"dimension vector {v.dims} met twice")
                    nxt = coxeter_functor(v, -1)
                    reps[v.dims] = v
                    tau_inv[v.dims] = None if nxt.is_zero else nxt.dims
                    v = nxt
        self.reps: dict[RootVec, Representation] = reps
        self.tau_inv: dict[RootVec, RootVec | None] = tau_inv
        roots = set(enumerate_positive_roots(q.cartan))
        if set(reps) != roots:
            raise InvariantViolation("catalog keys differ from the positive roots")
        self.tau: dict[RootVec, RootVec | None] = {k: None for k in reps}
        for k, t in tau_inv.items():
            if t is not None:
                self.tau[t] = k
        self.projective = {i: build_projective(q, i).dims for i in q.vertices}
        self.injective = injective_dims(q)
        self._homext: dict = {}
        self._dims: dict = {}

    def keys(self) -> list[RootVec]:
        return sorted(self.reps, key=lambda v: (sum(v), v))

    def __getitem__(self, key: RootVec) -> Representation:
        return self.reps[key]

    def __contains__(self, key) -> bool:
        return key in self.reps

    def __len__(self) -> int:
        return len(self.reps)

    def __iter__(self) -> Iterator[RootVec]:
        return iter(self.keys())

    def is_projective(self, key: RootVec) -> bool:
        return self.tau[key] is None

    def is_injective(self, key: RootVec) -> bool:
        return self.tau_inv[key] is None

    def hom_ext(self, a: RootVec, b: RootVec) -> tuple[HomSpace, ExtPresentation]:
        if (a, b) not in self._homext:
            self._homext[(a, b)] = hom_ext(self.reps[a], self.reps[b])
        return self._homext[(a, b)]

    def hom(self, a: RootVec, b: RootVec) -> HomSpace:
        return self.hom_ext(a, b)[0]

    def ext(self, a: RootVec, b: RootVec) -> ExtPresentation:
        return self.hom_ext(a, b)[1]

    def dims(self, a: RootVec, b: RootVec) -> tuple[int, int]:
        if (a, b) not in self._dims:
            if (a, b) in self._homext:
                h, e = self._homext[(a, b)]
                self._dims[(a, b)] = (h.dim, e.dim)
            else:
                self._dims[(a, b)] = hom_ext_dims(self.reps[a], self.reps[b])
        return self._dims[(a, b)]

    def hom_dim(self, a: RootVec, b: RootVec) -> int:
        return self.dims(a, b)[0]

    def ext_dim(self, a: RootVec, b: RootVec) -> int:
        return self.dims(a, b)[1]

    def tau_inv_morphism(self, f: MorphismMatrix) -> MorphismMatrix:
        """C^- on a morphism between non-injective catalog objects."""
        out = coxeter_functor_morphism(f, -1)
        for end in (out.source, out.target):
            if end.dims not in self.reps or not end == self.reps[end.dims]:
                raise InvariantViolation("C^- left the catalog representatives")
        return MorphismMatrix(self.reps[out.source.dims], self.reps[out.target.dims], out.blocks)

    def __getstate__(self):
        return {"quiver": self.quiver, "reps": self.reps, "tau_inv": self.tau_inv}

    def __setstate__(self, state):
        self.__init__(state["quiver"], state["reps"], state["tau_inv"])


def catalog_indecomposables(q: ValuedQuiver) -> dict[RootVec, Representation]:
    """Map positive root -> indecomposable representation with that dimension vector."""
    from .cache import get_catalog

    return dict(get_catalog(q).reps)

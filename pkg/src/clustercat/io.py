"""Text formats: quiver files and object tokens.

Quiver file::

    # comments start with '#'
    type D5 rank 5        (optional header; either part may be omitted)
    1 -> 2
    2 -> 3 [1 2]          (valuation d_ij d_ji; default [1 1])

Object tokens (cluster / derived objects): ``P3``, ``I2``, ``S1`` or ``E1``,
a dimension vector ``(1,1,0)``, ``tau(X)``, ``tau^-1(X)``, ``tau^2(X)``, each
optionally followed by a shift such as ``[1]``.
"""

from __future__ import annotations

import re
from pathlib import Path

from .derived import DerivedModel, DerivedObject
from .errors import InputError
from .quiver import Arrow, ValuedQuiver
from .roots import dynkin_label

_ARROW = re.compile(r"^(\d+)\s*->\s*(\d+)\s*(?:\[\s*(\d+)\s*[ ,]\s*(\d+)\s*\])?$")
_HEADER = re.compile(r"^(?:type\s+([A-Ga-g]\d+))?\s*(?:rank\s+(\d+))?$")
_LABEL = re.compile(r"^[A-G]\d+$")


def parse_quiver_text(text: str, allow_non_dynkin: bool = False) -> ValuedQuiver:
    arrows: list[Arrow] = []
    label = None
    rank = None
    seen_arrow = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        m = _ARROW.match(line)
        if m:
            seen_arrow = True
            i, j = int(m.group(1)), int(m.group(2))
            val = (int(m.group(3)), int(m.group(4))) if m.group(3) else (1, 1)
            if i < 1 or j < 1:
                raise InputError("vertices are numbered from 1", line=lineno)
            if min(val) < 1:
                raise InputError("valuations must be positive", line=lineno)
            arrows.append(Arrow(i, j, val))
            continue
        h = _HEADER.match(line)
        if h and (h.group(1) or h.group(2)):
            if seen_arrow:
                raise InputError("header must come before the arrows", line=lineno)
            label = h.group(1).upper() if h.group(1) else None
            rank = int(h.group(2)) if h.group(2) else None
            continue
        raise InputError(f"cannot parse {line!r}", line=lineno)
    if rank is None and label is not None:
        rank = int(label[1:])
    n = max([rank or 0] + [v for a in arrows for v in a.key])
    if rank is not None and n > rank:
        raise InputError(f"arrow uses a vertex beyond the declared rank {rank}")
    if n == 0:
        raise InputError("empty quiver: give arrows or a 'rank' header")
    q = ValuedQuiver(n, tuple(arrows))
    if not allow_non_dynkin and not q.is_dynkin:
        raise InputError("the underlying valued graph is not of Dynkin type")
    if label is not None and q.is_dynkin and dynkin_label(q.cartan) != label:
        raise InputError(f"declared type {label} but the quiver has type {dynkin_label(q.cartan)}")
    return q


def parse_quiver(source: str | Path, allow_non_dynkin: bool = False) -> ValuedQuiver:
    """Read a quiver from a file path, a type label (linear orientation) or inline text.

    Inline text may separate arrows with ';'.
    """
    src = str(source)
    path = Path(src)
    if "->" not in src and path.exists():
        return parse_quiver_text(path.read_text(), allow_non_dynkin)
    if _LABEL.match(src.strip().upper()):
        try:
            return ValuedQuiver.linear(src.strip().upper())
        except (KeyError, ValueError) as exc:
            raise InputError(f"unknown Dynkin type {src!r}") from exc
    if "->" in src or src.strip().lower().startswith(("rank", "type")):
        return parse_quiver_text(src.replace(";", "\n"), allow_non_dynkin)
    raise InputError(f"{src!r} is neither a file, a Dynkin label nor inline quiver text")


def format_quiver(q: ValuedQuiver) -> str:
    """Quiver file text; ``parse_quiver_text(format_quiver(q)) == q``."""
    head = f"rank {q.n}"
    if q.is_dynkin:
        head = f"type {dynkin_label(q.cartan)} rank {q.n}"
    lines = [head]
    for a in q.arrows:
        s = f"{a.source} -> {a.target}"
        if a.valuation != (1, 1):
            s += f" [{a.valuation[0]} {a.valuation[1]}]"
        lines.append(s)
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# object tokens

_SHIFT = re.compile(r"^(.*?)\[(-?\d+)\]$")
_TAU = re.compile(r"^tau(?:\^(-?\d+))?\((.*)\)$")
_NAMED = re.compile(r"^([PISE])(\d+)$")
_DIMS = re.compile(r"^\(([\d,\s]+)\)$")


def parse_object(token: str, model: DerivedModel) -> DerivedObject:
    tok = token.strip().replace(" ", "")
    m = _SHIFT.match(tok)
    if m and not _TAU.match(tok):
        return parse_object(m.group(1), model).shifted(int(m.group(2)))
    m = _TAU.match(tok)
    if m:
        power = int(m.group(1)) if m.group(1) else 1
        inner = parse_object(m.group(2), model)
        which = "tau" if power >= 0 else "tau-1"
        return model.apply_auto(inner, which, abs(power))
    m = _NAMED.match(tok)
    if m:
        kind, i = m.group(1), int(m.group(2))
        if not 1 <= i <= model.n:
            raise InputError(f"vertex {i} out of range in {token!r}")
        if kind == "P":
            return model.P(i)
        if kind == "I":
            return model.I(i)
        return model.simple(i)
    m = _DIMS.match(tok)
    if m:
        key = tuple(int(x) for x in m.group(1).split(",") if x)
        if len(key) != model.n:
            raise InputError(f"{token!r} has {len(key)} entries, expected {model.n}")
        return model.check(DerivedObject(key))
    raise InputError(f"cannot parse object {token!r}")


def split_objects(text: str) -> list[str]:
    """Split on whitespace or ';' outside parentheses."""
    out, cur, depth = [], [], 0
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if depth == 0 and (ch.isspace() or ch == ";"):
            if cur:
                out.append("".join(cur))
                cur = []
            continue
        cur.append(ch)
    if cur:
        out.append("".join(cur))
    return out


def object_name(x: DerivedObject, model: DerivedModel) -> str:
    """Readable token: P_i / I_i / S_i when applicable, else the dimension vector."""
    i = model.projective_index(x.key)
    if i is not None:
        base = f"P{i}"
    elif model.injective_index(x.key) is not None:
        base = f"I{model.injective_index(x.key)}"
    elif sum(x.key) == 1:
        base = f"S{x.key.index(1) + 1}"
    else:
        base = "(" + ",".join(map(str, x.key)) + ")"
    return base if x.shift == 0 else f"{base}[{x.shift}]"


_THIN = re.compile(r"^thin\(([\d,\s]+)\)$")


def parse_module(token: str, q: ValuedQuiver):
    """Explicit representation for a module token; works for any acyclic simply-laced quiver.

    Accepts ``P3``, ``I2``, ``S1``/``E1``, ``thin(1,0,0,1,1)`` and ``tau^m(X)``;
    a dimension vector ``(..)`` is looked up in the catalog (Dynkin only).
    """
    from .cache import get_catalog
    from .rep import build_injective, build_projective, build_simple, coxeter_functor, thin_representation

    tok = token.strip().replace(" ", "")
    m = _TAU.match(tok)
    if m:
        power = int(m.group(1)) if m.group(1) else 1
        v = parse_module(m.group(2), q)
        for _ in range(abs(power)):
            v = coxeter_functor(v, 1 if power > 0 else -1)
            if v.is_zero:
                raise InputError(f"{token!r} is zero in the module category")
        return v
    m = _NAMED.match(tok)
    if m:
        kind, i = m.group(1), int(m.group(2))
        if not 1 <= i <= q.n:
            raise InputError(f"vertex {i} out of range in {token!r}")
        return {"P": build_projective, "I": build_injective}.get(kind, build_simple)(q, i)
    m = _THIN.match(tok)
    if m:
        dims = tuple(int(x) for x in m.group(1).split(",") if x)
        if len(dims) != q.n:
            raise InputError(f"{token!r} has {len(dims)} entries, expected {q.n}")
        return thin_representation(q, dims)
    m = _DIMS.match(tok)
    if m:
        key = tuple(int(x) for x in m.group(1).split(",") if x)
        cat = get_catalog(q)
        if key not in cat:
            raise InputError(f"{token!r} is not the dimension vector of an indecomposable")
        return cat[key]
    if _SHIFT.match(tok):
        raise InputError(f"{token!r} is not a module; shifted objects need a Dynkin quiver")
    raise InputError(f"cannot parse module {token!r}")

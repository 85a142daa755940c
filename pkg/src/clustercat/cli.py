"""Command-line interface.

Every subcommand takes a QUIVER (file path, Dynkin label such as ``D5`` for
the standard orientation, or inline text like ``"1->2; 3->2"``) and prints a
tab-delimited text report, a JSON report (``--format json``) or DOT
(``--format dot``).  ``--figure PATH`` additionally renders a figure.

Exit codes: 0 success, 1 verification failure, 2 input error.
"""

from __future__ import annotations

import argparse
import logging
import sys
import time

from . import dot as dotmod
from .algebras import (
    apr_bimodule_dim,
    apr_tilting,
    module_reps,
    orbit_endomorphism_algebra,
    trivial_extension_model,
)
from .cluster import cluster_category, ind_root_category, k0_quotient, root_dim
from .errors import ClusterCatError, InputError, InvariantViolation
from .io import format_quiver, object_name, parse_module, parse_object, parse_quiver, split_objects
from .orbit_functors import (
    cluster_reflect,
    verify_boundary_images,
    normalize_to_modules,
    reflection_sign,
    root_reflect,
    verify_gamma_commutes,
    verify_dim_commutes,
)
from .quiver import reflect_orientation
from .report import Check, dumps, envelope
from .roots import almost_positive_roots, dynkin_label, enumerate_positive_roots
from .verify import run_verification

log = logging.getLogger("clustercat")

DEFAULT_RANK_CAP = 8


class Output:
    """Collects text lines, structured results, checks and DOT text for one command."""

    def __init__(self):
        self.lines: list[str] = []
        self.results: dict = {}
        self.checks: list[Check] = []
        self.dot: str | None = None

    def row(self, *cells) -> None:
        self.lines.append("\t".join(str(c) for c in cells))

    def blank(self) -> None:
        self.lines.append("")


def _roots_str(v) -> str:
    return "(" + ",".join(map(str, v)) + ")"


def _type_label(q) -> str:
    return dynkin_label(q.cartan) if q.is_dynkin else "non-Dynkin"


def _enforce_cap(q, args) -> None:
    if q.n > args.rank_cap:
        raise InputError(f"rank {q.n} exceeds the cap {args.rank_cap} (raise it with --rank-cap)")


def _need_simply_laced(q, what: str) -> None:
    if not q.simply_laced:
        raise InputError(f"{what} needs a simply-laced quiver (valued types are supported by roots, k0, reflect)")


def _objects(args, model) -> list:
    if not args.objects:
        raise InputError("give the objects with --objects, e.g. --objects 'E1 P1 P3'")
    return [parse_object(t, model) for t in split_objects(args.objects)]


# ---------------------------------------------------------------------------
# subcommands


def cmd_roots(q, args, out: Output) -> None:
    c = q.cartan
    pos = enumerate_positive_roots(c)
    apr = almost_positive_roots(c)
    out.results = {
        "type": _type_label(q),
        "positive_roots": [list(v) for v in pos],
        "almost_positive_roots": [str(a) for a in apr],
        "counts": {"positive": len(pos), "almost_positive": len(apr)},
    }
    out.row("type", _type_label(q))
    out.row("positive_roots", len(pos))
    out.row("almost_positive_roots", len(apr))
    out.blank()
    out.row("root", "height", "kind")
    for a in apr:
        out.row(_roots_str(a.coords), sum(a.coords), "positive" if a.is_positive else "negative simple")
    if args.figure:
        from .plotting import bar_chart

        counts = {}
        for v in pos:
            counts[sum(v)] = counts.get(sum(v), 0) + 1
        bar_chart({f"height {h}": counts[h] for h in sorted(counts)}, "positive roots by height", args.figure)


def cmd_ind(q, args, out: Output) -> None:
    cc = cluster_category(q)
    m = cc.model
    rows = []
    out.row("object", "dims", "shift", "gamma")
    for x in cc.objects:
        g = cc.gamma(x)
        rows.append({"name": object_name(x, m), "dims": list(x.key), "shift": x.shift, "gamma": list(g.coords)})
        out.row(object_name(x, m), _roots_str(x.key), x.shift, str(g))
    out.results = {"objects": rows, "count": len(rows)}
    chk = Check("gamma-is-bijective")
    chk.checked = len(rows)
    if sorted(cc.gamma(x) for x in cc.objects) != sorted(almost_positive_roots(q.cartan)):
        chk.fail(reason="gamma is not a bijection onto the almost positive roots")
    out.checks.append(chk)


def cmd_homs(q, args, out: Output) -> None:
    _need_simply_laced(q, "homs")
    cc = cluster_category(q)
    m = cc.model
    if args.category == "module":
        objs = [x for x in cc.objects if x.shift == 0]
        hom = [[m.hom_dim(x, y) for y in objs] for x in objs]
        ext = [[m.hom_dim(x, y.shifted(1)) for y in objs] for x in objs]
        names = ("Hom_H", "Ext1_H")
    else:
        _enforce_cap(q, args)
        objs = cc.objects
        hom = [[cc.hom_dim(x, y) for y in objs] for x in objs]
        ext = [[cc.ext1(x, y) for y in objs] for x in objs]
        names = ("Hom_C", "Ext1_C")
    labels = [object_name(x, m) for x in objs]
    out.results = {"category": args.category, "objects": labels, names[0]: hom, names[1]: ext}
    for title, mat in zip(names, (hom, ext)):
        out.row(f"# {title}(row, column)")
        out.row("", *labels)
        for lab, r in zip(labels, mat):
            out.row(lab, *r)
        out.blank()
    if args.figure:
        from .plotting import heatmap

        heatmap(ext, labels, labels, f"dim {names[1]}(row, column)", args.figure)


def cmd_tilting(q, args, out: Output) -> None:
    _need_simply_laced(q, "tilting")
    _enforce_cap(q, args)
    cc = cluster_category(q)
    m = cc.model
    sets = cc.tilting_sets()
    names = [[object_name(x, m) for x in t] for t in sets]
    ex = cc.exchange_graph(sets)
    degrees = sorted({d for _, d in ex.degree()})
    out.results = {"count": len(sets), "tilting_sets": names, "exchange_degrees": degrees}
    out.row("count", len(sets))
    out.row("exchange_graph_degrees", ",".join(map(str, degrees)))
    out.blank()
    out.row("index", "members")
    for i, t in enumerate(names):
        out.row(i, " ".join(t))
    chk = Check("tilting-sets-have-n-members")
    chk.checked = len(sets)
    out.checks.append(chk)
    set_names = [" ".join(t) for t in names]
    out.dot = dotmod.exchange_dot(set_names, ex.edges())
    if args.figure:
        from .plotting import graph_figure

        graph_figure(ex, {i: str(i) for i in ex.nodes}, f"exchange graph ({len(sets)} tilting sets)", args.figure)


def cmd_complete(q, args, out: Output) -> None:
    _need_simply_laced(q, "complete")
    _enforce_cap(q, args)
    cc = cluster_category(q)
    m = cc.model
    partial = [cc.normalize(x) for x in _objects(args, m)] if args.objects else []
    if q.n == 1 and not partial:
        comps = [x for x in cc.objects if cc.is_rigid(x)]
        if len(comps) != 2:
            raise InvariantViolation("A_1 should have two completions of the empty set")
    else:
        comps = cc.completions(partial)
    names = [object_name(x, m) for x in comps]
    out.results = {"partial": [object_name(x, m) for x in partial], "completions": names}
    out.row("partial", " ".join(object_name(x, m) for x in partial) or "-")
    for x in names:
        out.row("completion", x)
    chk = Check("exactly-two-completions")
    chk.checked = 1
    out.checks.append(chk)


def _algebra_rows(out: Output, tag: str, alg) -> dict:
    quiver = alg.gabriel_quiver()
    out.row(f"{tag}.dim", alg.dim)
    out.row(f"{tag}.quiver", " ".join(f"{s}->{t}" + (f"x{c}" if c > 1 else "") for (s, t), c in quiver.items()) or "-")
    out.row(f"{tag}.hereditary", alg.is_hereditary())
    return {"dim": alg.dim, "quiver": [[s, t, c] for (s, t), c in quiver.items()], "hereditary": alg.is_hereditary()}


def cmd_cta(q, args, out: Output) -> None:
    _need_simply_laced(q, "cta")
    tokens = split_objects(args.objects or "")
    if not tokens:
        raise InputError("give the tilting set with --objects, e.g. --objects 'E1 P1 P3'")
    checks = []
    if not q.is_dynkin:
        reps = [parse_module(t, q) for t in tokens]
        te = trivial_extension_model(reps)
        out.row("model", "trivial extension (explicit modules)")
        res = {"A": _algebra_rows(out, "A", te.A), "Lambda": _algebra_rows(out, "Lambda", te.Lam)}
        lam = te.Lam
    else:
        cc = cluster_category(q)
        objs = [cc.normalize(parse_object(t, cc.model)) for t in tokens]
        if len(objs) != q.n or not cc.is_exceptional(objs) or len(set(objs)) != q.n:
            raise InputError("the objects do not form a tilting set in the cluster category")
        orbit = orbit_endomorphism_algebra(cc, objs)
        if all(x.shift == 0 for x in objs):
            te = trivial_extension_model(module_reps(cc, objs))
            path = []
        else:
            q2, objs2, path = normalize_to_modules(q, objs)
            te = trivial_extension_model(module_reps(cluster_category(q2), objs2))
            out.row("reflected_at", ",".join(map(str, path)))
        res = {"A": _algebra_rows(out, "A", te.A), "Lambda": _algebra_rows(out, "Lambda", te.Lam)}
        chk = Check("trivial-extension-matches-orbit-model")
        chk.checked = 1
        if orbit.dim != te.Lam.dim or orbit.gabriel_quiver() != te.Lam.gabriel_quiver():
            chk.fail(orbit=orbit.gabriel_quiver(), trivial_extension=te.Lam.gabriel_quiver())
        checks.append(chk)
        res["reflected_at"] = path
        res["objects"] = [object_name(x, cc.model) for x in objs]
        lam = te.Lam
    out.row("bimodule.dim", te.bimodule_dim)
    res["bimodule_dim"] = te.bimodule_dim
    sq = Check("degree-one-squares-to-zero")
    sq.checked = 1
    if not lam.degree_one_square_zero() or lam.dim != te.A.dim + te.bimodule_dim:
        sq.fail(reason="trivial-extension structure violated")
    checks.append(sq)
    out.results = res
    out.checks.extend(checks)
    out.dot = dotmod.gabriel_dot(lam.labels, lam.gabriel_quiver())
    if args.figure:
        import networkx as nx

        from .plotting import graph_figure

        g = nx.MultiDiGraph()
        g.add_nodes_from(lam.labels)
        for (s, t), c in lam.gabriel_quiver().items():
            for _ in range(c):
                g.add_edge(s, t)
        graph_figure(g, {v: str(v) for v in g.nodes}, "Gabriel quiver of the cluster-tilted algebra", args.figure, directed=True)


def cmd_apr(q, args, out: Output) -> None:
    _need_simply_laced(q, "apr")
    cc = cluster_category(q)
    m = cc.model
    vertices = [args.vertex] if args.vertex else list(q.vertices)
    rows = []
    chk = Check("apr-sink-source-hereditary")
    out.row("k", "class", "T(k)", "bimodule_dim", "dim_Lambda", "Lambda_quiver", "hereditary")
    for k in vertices:
        if not 1 <= k <= q.n:
            raise InputError(f"vertex {k} out of range 1..{q.n}")
        T = apr_tilting(cc, k)
        orbit = orbit_endomorphism_algebra(cc, T)
        quiver = orbit.gabriel_quiver()
        cls = "sink" if not q.outgoing(k) else "source" if not q.incoming(k) else "interior"
        bdim = apr_bimodule_dim(cc, k)
        row = {
            "k": k,
            "class": cls,
            "tilting_set": [object_name(x, m) for x in T],
            "bimodule_dim": bdim,
            "dim_Lambda": orbit.dim,
            "Lambda_quiver": [[s, t, c] for (s, t), c in quiver.items()],
            "hereditary": orbit.is_hereditary(),
        }
        if cls != "interior":
            chk.checked += 1
            want = {a.key: 1 for a in reflect_orientation(q, k).arrows}
            if not orbit.is_hereditary() or quiver != want:
                chk.fail(k=k, quiver=quiver)
        rows.append(row)
        out.row(k, cls, " ".join(row["tilting_set"]), bdim, orbit.dim,
                " ".join(f"{s}->{t}" for (s, t), c in quiver.items()), row["hereditary"])
    out.results = {"apr": rows}
    out.checks.append(chk)


def cmd_k0(q, args, out: Output) -> None:
    g = k0_quotient(q, args.auto)
    out.results = {"auto": args.auto, "relation": g.relation, "invariant_factors": g.invariant_factors,
                   "group": g.description}
    out.row("auto", args.auto)
    out.row("invariant_factors", " ".join(map(str, g.invariant_factors)))
    out.row("group", g.description)


def cmd_reflect(q, args, out: Output) -> None:
    k = args.vertex
    if k is None:
        raise InputError("give the vertex with --vertex")
    sign = reflection_sign(q, k)
    q2 = reflect_orientation(q, k)
    cc = cluster_category(q)
    cc2 = cluster_category(q2)
    rows = []
    if args.category == "cluster":
        out.row("object", "image", "gamma", "gamma_image")
        for x in cc.objects:
            y = cluster_reflect(q, k, x)
            rows.append({"object": object_name(x, cc.model), "image": object_name(y, cc2.model),
                         "gamma": str(cc.gamma(x)), "gamma_image": str(cc2.gamma(y))})
            out.row(*rows[-1].values())
        out.checks += [verify_gamma_commutes(q, k), verify_boundary_images(q, k)]
    else:
        out.row("object", "image", "dim", "dim_image")
        for x in ind_root_category(cc.model):
            y = root_reflect(q, k, x)
            rows.append({"object": object_name(x, cc.model), "image": object_name(y, cc2.model),
                         "dim": list(root_dim(x)), "dim_image": list(root_dim(y))})
            out.row(rows[-1]["object"], rows[-1]["image"], _roots_str(root_dim(x)), _roots_str(root_dim(y)))
        out.checks.append(verify_dim_commutes(q, k))
    out.results = {"vertex": k, "functor": "S+" if sign == 1 else "S-", "category": args.category,
                   "reflected_quiver": format_quiver(q2).splitlines(), "images": rows}


def cmd_verify(q, args, out: Output) -> None:
    _enforce_cap(q, args)
    checks = run_verification(q, algebras=not args.no_algebras)
    out.checks.extend(checks)
    out.row("check", "checked", "counterexamples", "status")
    for c in checks:
        out.row(c.name, c.checked, len(c.counterexamples), "ok" if c.ok else "FAIL")
    out.results = {"suites": len(checks), "failed": [c.name for c in checks if not c.ok]}


def cmd_dot(q, args, out: Output) -> None:
    if args.graph == "quiver":
        out.dot = dotmod.quiver_dot(q)
    else:
        _need_simply_laced(q, "dot")
        _enforce_cap(q, args)
        cc = cluster_category(q)
        names = [object_name(x, cc.model) for x in cc.objects]
        if args.graph == "ext":
            out.dot = dotmod.ext_graph_dot(names, cc.ext_free_graph().edges())
        else:
            sets = cc.tilting_sets()
            out.dot = dotmod.exchange_dot([" ".join(object_name(x, cc.model) for x in t) for t in sets],
                                          cc.exchange_graph(sets).edges())
    out.lines = out.dot.splitlines()
    out.results = {"graph": args.graph, "dot": out.dot}


COMMANDS = {
    "roots": (cmd_roots, "list positive and almost positive roots"),
    "ind": (cmd_ind, "list indecomposables of the cluster category with their gamma labels"),
    "homs": (cmd_homs, "dimension matrices of Hom and Ext^1"),
    "tilting": (cmd_tilting, "enumerate tilting sets of the cluster category"),
    "complete": (cmd_complete, "complete an almost complete tilting set"),
    "cta": (cmd_cta, "cluster-tilted algebra of a tilting set"),
    "apr": (cmd_apr, "APR tilting objects and their cluster-tilted algebras"),
    "k0": (cmd_k0, "Grothendieck group of an orbit category"),
    "reflect": (cmd_reflect, "apply the induced reflection functor at a sink or source"),
    "verify": (cmd_verify, "run every invariant suite (exit 1 on failure)"),
    "dot": (cmd_dot, "emit DOT for the quiver, the Ext-free graph or the exchange graph"),
}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="clustercat", description="Cluster categories of Dynkin quivers.")
    p.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = p.add_subparsers(dest="command", required=True)
    for name, (_, help_text) in COMMANDS.items():
        sp = sub.add_parser(name, help=help_text, description=help_text)
        sp.add_argument("quiver", help="quiver file, Dynkin label (e.g. A3) or inline text ('1->2; 2->3')")
        sp.add_argument("--format", choices=["text", "json", "dot"], default="text")
        sp.add_argument("--figure", metavar="PATH", help="also render a figure to PATH (png, svg, pdf)")
        sp.add_argument("--rank-cap", type=int, default=DEFAULT_RANK_CAP, help="largest rank for enumerations")
        sp.add_argument("--allow-non-dynkin", action="store_true", help="accept non-Dynkin quivers (cta only)")
        if name in ("complete", "cta"):
            sp.add_argument("--objects", help="objects such as 'E1 P1 P3' or 'P2[1] (1,1,0)'")
        if name in ("apr", "reflect"):
            sp.add_argument("--vertex", type=int)
        if name == "homs":
            sp.add_argument("--category", choices=["module", "cluster"], default="module")
        if name == "reflect":
            sp.add_argument("--category", choices=["cluster", "root"], default="cluster")
        if name == "k0":
            sp.add_argument("--auto", choices=["F", "[2]"], default="F")
        if name == "verify":
            sp.add_argument("--no-algebras", action="store_true", help="skip cluster-tilted algebra checks")
        if name == "dot":
            sp.add_argument("--graph", choices=["quiver", "ext", "exchange"], default="quiver")
    return p


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(name)s: %(message)s")
    start = time.perf_counter()
    out = Output()
    try:
        allow = args.allow_non_dynkin and args.command == "cta"
        q = parse_quiver(args.quiver, allow_non_dynkin=allow)
        log.info("quiver %s (%s)", q, _type_label(q))
        COMMANDS[args.command][0](q, args, out)
    except InvariantViolation as exc:
        print(f"clustercat: internal check failed: {exc}", file=sys.stderr)
        return 1
    except (ClusterCatError, ValueError) as exc:
        print(f"clustercat: error: {exc}", file=sys.stderr)
        return 2
    elapsed = time.perf_counter() - start
    ok = all(c.ok for c in out.checks)
    if args.format == "json":
        print(dumps(envelope(args.command, argv, q.digest, out.results, out.checks, elapsed)))
    elif args.format == "dot":
        if out.dot is None:
            print(f"clustercat: error: '{args.command}' has no graph output", file=sys.stderr)
            return 2
        sys.stdout.write(out.dot)
    else:
        print(f"# clustercat {args.command}\tquiver={q.digest}\ttype={_type_label(q)}")
        for line in out.lines:
            print(line)
        if out.checks:
            print(f"# verification\t{'ok' if ok else 'FAILED'}")
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())

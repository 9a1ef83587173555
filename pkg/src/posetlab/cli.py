"""Command-line entry point: generation, solvers, embeddings, and the
verification suites.

All stdout output is line-oriented and tab-delimited; figures are written
only to files (per-subcommand --svg/--dot, and PNG charts next to the
verify report). Exit codes: 0 success, 1 verification failure, 2
malformed input, 3 a cap was hit.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import networkx as nx

from . import harness
from .containment import (
    NotFound,
    contains_subposet,
    kelly_number,
    se,
    verify_embedding,
    wheel_number,
)
from .dimension import Budget, dim_exact
from .errors import BudgetExceeded, PosetlabError
from .families import (
    canonical_interval_order,
    interval_order,
    kelly,
    random_cover_planar_with_unique_min,
    standard_example,
    wheel,
)
from .graph_metrics import grid_minor, grid_subgraph, treewidth_exact
from .planar import (
    INF,
    NonPlanarWitness,
    embed_anchored,
    embedding_from_dict,
    embedding_to_dict,
)
from .poset import Poset
from .witness import IntervalCertificate, verify_interval_certificate, witnessing_path

EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_MALFORMED = 2
EXIT_CAP = 3


class MalformedInput(Exception):
    pass


def _load_poset(path: str) -> Poset:
    try:
        return Poset.load(path)
    except (OSError, json.JSONDecodeError, KeyError, TypeError, PosetlabError) as exc:
        raise MalformedInput(f"cannot read poset from {path}: {exc}") from exc


def _load_graph(path: str) -> nx.Graph:
    """Graph JSON is the poset cover format with orientation ignored."""
    try:
        with open(path) as fh:
            data = json.load(fh)
        g = nx.Graph()
        g.add_nodes_from(data["elements"])
        g.add_edges_from(tuple(e) for e in data["cover"])
        return g
    except (OSError, json.JSONDecodeError, KeyError, TypeError) as exc:
        raise MalformedInput(f"cannot read graph from {path}: {exc}") from exc


def _load_embedding(p: Poset, path: str):
    try:
        with open(path) as fh:
            data = json.load(fh)
        return embedding_from_dict(p, data)
    except (OSError, json.JSONDecodeError, KeyError, TypeError, ValueError, PosetlabError) as exc:
        raise MalformedInput(f"cannot read embedding from {path}: {exc}") from exc


def _write_json(path: str, data: dict | list) -> None:
    with open(path, "w") as fh:
        json.dump(data, fh, indent=1)
        fh.write("\n")


# -- figures ---------------------------------------------------------------


def _layout(p: Poset) -> dict[str, tuple[float, float]]:
    g = nx.Graph()
    g.add_nodes_from(p.elements)
    g.add_edges_from(p.cover_pairs())
    ok, emb = nx.check_planarity(g)
    pos = nx.planar_layout(emb) if ok else nx.spring_layout(g, seed=0)
    return {v: (float(x), float(y)) for v, (x, y) in pos.items()}


def _draw_poset(p: Poset, path: str, highlight: tuple[str, ...] = ()) -> None:
    pos = _layout(p)
    fig, ax = plt.subplots(figsize=(7, 7))
    g = nx.Graph()
    g.add_nodes_from(p.elements)
    g.add_edges_from(p.cover_pairs())
    nx.draw_networkx(g, pos, ax=ax, node_size=350, node_color="#cfe3ff", font_size=7)
    if highlight:
        edges = list(zip(highlight, highlight[1:]))
        nx.draw_networkx_edges(g, pos, edgelist=edges, ax=ax, width=3, edge_color="#d33")
        nx.draw_networkx_nodes(
            g, pos, nodelist=list(highlight), ax=ax, node_size=350, node_color="#ffb3b3"
        )
    ax.set_axis_off()
    fig.savefig(path)
    plt.close(fig)


def _write_dot(p: Poset, path: str) -> None:
    """Cover graph in DOT, with rank hints grouping elements by height."""
    from .poset import linear_extension_of

    depth: dict[str, int] = {}
    for e in linear_extension_of(p).order:
        below = [depth[f] for f in p.elements if f != e and p.less(f, e)]
        depth[e] = 1 + max(below, default=-1)
    lines = ["digraph cover {", "  rankdir=BT;"]
    by_level: dict[int, list[str]] = {}
    for e, lvl in depth.items():
        by_level.setdefault(lvl, []).append(e)
    for lvl in sorted(by_level):
        names = " ".join(f'"{e}";' for e in sorted(by_level[lvl]))
        lines.append(f"  {{ rank=same; {names} }}")
    for a, b in p.cover_pairs():
        lines.append(f'  "{a}" -> "{b}";')
    lines.append("}")
    Path(path).write_text("\n".join(lines) + "\n")


# -- subcommands -------------------------------------------------------------


def cmd_gen(args) -> int:
    fam = args.family
    if fam == "standard":
        p = standard_example(args.order)
    elif fam == "wheel":
        p = wheel(args.order, attach_max=args.attach_max)
    elif fam == "kelly":
        p = kelly(args.order)
    elif fam == "interval":
        if args.seed is not None:
            p = interval_order(args.seed, args.order)
        else:
            p = canonical_interval_order(args.order)
    elif fam == "random":
        p = random_cover_planar_with_unique_min(args.seed or 0, args.order)
    else:  # pragma: no cover - argparse restricts choices
        raise MalformedInput(f"unknown family {fam}")
    p.save(args.out)
    print(f"gen\t{fam}\t{args.order}\t{len(p)}\t{args.out}")
    return EXIT_OK


def cmd_dim(args) -> int:
    p = _load_poset(args.infile)
    result = dim_exact(p, cap=args.cap)
    print(f"dim\t{result.value}")
    if args.certificate:
        _write_json(
            args.certificate,
            {"extensions": [list(ext.order) for ext in result.realizer.extensions]},
        )
    return EXIT_OK


def cmd_se(args) -> int:
    p = _load_poset(args.infile)
    value, witness = se(p, cap=args.cap)
    print(f"se\t{value}")
    if args.witness:
        _write_json(args.witness, {"pairs": [list(w) for w in witness]})
    return EXIT_OK


def _cmd_parameter(args, fn, name: str) -> int:
    p = _load_poset(args.infile)
    value, mapping = fn(p, cap=args.cap)
    print(f"{name}\t{value}")
    if args.witness:
        _write_json(args.witness, {"mapping": mapping or {}})
    return EXIT_OK


def cmd_contains(args) -> int:
    host = _load_poset(args.infile)
    pattern = _load_poset(args.pattern)
    found = contains_subposet(host, pattern)
    if isinstance(found, NotFound):
        print("contains\tfalse")
    else:
        assert verify_embedding(host, pattern, found)
        print("contains\ttrue")
        for k in sorted(found):
            print(f"map\t{k}\t{found[k]}")
    return EXIT_OK


def cmd_embed(args) -> int:
    p = _load_poset(args.infile)
    emb = embed_anchored(p)
    if isinstance(emb, NonPlanarWitness):
        for a, b in emb.edges:
            print(f"nonplanar\t{a}\t{b}")
        return EXIT_VERIFICATION_FAILED
    print(f"embed\t{len(p)}\t{emb.e_infinity}")
    if args.out:
        _write_json(args.out, embedding_to_dict(emb))
    if args.svg:
        _draw_poset(p, args.svg)
        print(f"figure\t{args.svg}")
    if args.dot:
        _write_dot(p, args.dot)
        print(f"figure\t{args.dot}")
    return EXIT_OK


def cmd_paths(args) -> int:
    p = _load_poset(args.infile)
    emb = _load_embedding(p, args.embedding)
    side = "L" if args.side == "left" else "R"
    path = witnessing_path(emb, args.target, side)
    print("path\t" + "\t".join(path))
    if args.svg:
        _draw_poset(p, args.svg, highlight=path)
        print(f"figure\t{args.svg}")
    return EXIT_OK


def cmd_verify_certificate(args) -> int:
    p = _load_poset(args.infile)
    emb = _load_embedding(p, args.embedding)
    try:
        with open(args.cert) as fh:
            cert = IntervalCertificate.from_dict(json.load(fh))
    except (OSError, json.JSONDecodeError, TypeError) as exc:
        raise MalformedInput(f"cannot read certificate from {args.cert}: {exc}")
    report = verify_interval_certificate(p, emb, cert)
    items = [
        ("shadowing", report.shadowing),
        ("standard_example", report.standard_example),
        ("hat_structure", report.hat_structure),
        ("left_pairs", report.left_pairs),
    ]
    for name, ok in items:
        print(f"item\t{name}\t{'pass' if ok else 'fail'}")
    for name, ce in report.counterexamples.items():
        print(f"counterexample\t{name}\t{ce}")
    return EXIT_OK if report.ok else EXIT_VERIFICATION_FAILED


def cmd_tw(args) -> int:
    g = _load_graph(args.infile)
    value, _ = treewidth_exact(g, cap=args.cap)
    print(f"tw\t{value}")
    return EXIT_OK


def cmd_grid(args) -> int:
    g = _load_graph(args.infile)
    if args.minor:
        found = grid_minor(g, args.n)
        if isinstance(found, NotFound):
            print("grid\tnotfound")
        else:
            print("grid\tminor")
            for cell in sorted(found):
                print(f"branch\t{cell[0]},{cell[1]}\t" + "\t".join(sorted(found[cell])))
    else:
        found = grid_subgraph(g, args.n)
        if isinstance(found, NotFound):
            print("grid\tnotfound")
        else:
            print("grid\tsubgraph")
            for cell in sorted(found):
                print(f"map\t{cell[0]},{cell[1]}\t{found[cell]}")
    return EXIT_OK


def _verify_figures(reports: list[harness.SuiteReport], out: str) -> list[str]:
    """PNG charts written next to the JSON report."""
    base = Path(out)
    written = []
    statuses = ["Pass", "Fail", "Unknown", "Skipped"]
    fig, ax = plt.subplots(figsize=(8, 4.5))
    width = 0.8 / max(1, len(reports))
    for i, rep in enumerate(reports):
        counts = rep.counts()
        xs = [k + i * width for k in range(len(statuses))]
        ax.bar(xs, [counts[s] for s in statuses], width=width, label=rep.suite)
    ax.set_xticks([k + 0.4 - width / 2 for k in range(len(statuses))])
    ax.set_xticklabels(statuses)
    ax.set_ylabel("instances")
    ax.set_title("suite outcomes")
    ax.legend()
    path = str(base.with_name(base.stem + "_status.png"))
    fig.savefig(path)
    plt.close(fig)
    written.append(path)

    points = [
        (r.details["dim"], r.details.get("height"))
        for rep in reports
        if rep.suite == "height"
        for r in rep.results
        if r.status == "Pass"
    ]
    if points:
        fig, ax = plt.subplots(figsize=(6, 6))
        hs = [h for _, h in points]
        ds = [d for d, _ in points]
        ax.scatter(hs, ds, alpha=0.4)
        top = max(hs + [1])
        ax.plot([0, top], [2, 2 * top + 2], color="#d33", label="2h+2 bound")
        ax.set_xlabel("height")
        ax.set_ylabel("dimension")
        ax.set_title("dimension against the height bound")
        ax.legend()
        path = str(base.with_name(base.stem + "_bounds.png"))
        fig.savefig(path)
        plt.close(fig)
        written.append(path)
    return written


def cmd_verify(args) -> int:
    if args.manifest:
        try:
            manifest = harness.load_manifest(args.manifest)
        except (OSError, json.JSONDecodeError, ValueError) as exc:
            raise MalformedInput(f"cannot read manifest from {args.manifest}: {exc}")
    else:
        manifest = harness.default_manifest()
    corpus = harness.build_corpus(manifest)
    names = list(harness.SUITES) if args.suite == "all" else [args.suite]
    reports = harness.run_suites(names, corpus)
    for rep in reports:
        for r in rep.results:
            detail = ",".join(f"{k}={v}" for k, v in sorted(r.details.items()))
            print(f"{rep.suite}\t{r.instance_id}\t{r.status}\t{detail}")
        counts = rep.counts()
        summary = ",".join(f"{s}={counts[s]}" for s in ("Pass", "Fail", "Unknown", "Skipped"))
        print(f"suite\t{rep.suite}\t{summary}")
    if args.out:
        _write_json(args.out, [rep.to_dict() for rep in reports])
        for path in _verify_figures(reports, args.out):
            print(f"figure\t{path}")
    if any(rep.failed for rep in reports):
        return EXIT_VERIFICATION_FAILED
    if any(rep.blocked for rep in reports):
        return EXIT_CAP
    return EXIT_OK


# -- parser ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(prog="posetlab", description=__doc__)
    sub = top.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="generate a family member")
    g.add_argument("--family", required=True,
                   choices=["standard", "wheel", "kelly", "interval", "random"])
    g.add_argument("--order", type=int, required=True)
    g.add_argument("--attach-max", action="store_true")
    g.add_argument("--seed", type=int)
    g.add_argument("--out", required=True)
    g.set_defaults(fn=cmd_gen)

    d = sub.add_parser("dim", help="exact dimension")
    d.add_argument("--in", dest="infile", required=True)
    d.add_argument("--cap", type=int, default=12)
    d.add_argument("--certificate")
    d.set_defaults(fn=cmd_dim)

    s = sub.add_parser("se", help="standard example number")
    s.add_argument("--in", dest="infile", required=True)
    s.add_argument("--cap", type=int, default=64)
    s.add_argument("--witness")
    s.set_defaults(fn=cmd_se)

    for name, fn in (("wheel", wheel_number), ("kelly", kelly_number)):
        w = sub.add_parser(name, help=f"{name} number")
        w.add_argument("--in", dest="infile", required=True)
        w.add_argument("--cap", type=int, default=16)
        w.add_argument("--witness")
        w.set_defaults(fn=lambda a, f=fn, n=name: _cmd_parameter(a, f, n))

    c = sub.add_parser("contains", help="subposet containment")
    c.add_argument("--in", dest="infile", required=True)
    c.add_argument("--pattern", required=True)
    c.set_defaults(fn=cmd_contains)

    e = sub.add_parser("embed", help="anchored plane embedding")
    e.add_argument("--in", dest="infile", required=True)
    e.add_argument("--out")
    e.add_argument("--svg")
    e.add_argument("--dot")
    e.set_defaults(fn=cmd_embed)

    p = sub.add_parser("paths", help="extreme witnessing path")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--embedding", required=True)
    p.add_argument("--target", required=True)
    p.add_argument("--side", required=True, choices=["left", "right"])
    p.add_argument("--svg")
    p.set_defaults(fn=cmd_paths)

    vc = sub.add_parser("verify-certificate", help="check an interval certificate")
    vc.add_argument("--in", dest="infile", required=True)
    vc.add_argument("--embedding", required=True)
    vc.add_argument("--cert", required=True)
    vc.set_defaults(fn=cmd_verify_certificate)

    t = sub.add_parser("tw", help="exact treewidth")
    t.add_argument("--in", dest="infile", required=True)
    t.add_argument("--cap", type=int)
    t.set_defaults(fn=cmd_tw)

    gr = sub.add_parser("grid", help="grid subgraph or minor search")
    gr.add_argument("--in", dest="infile", required=True)
    gr.add_argument("--n", type=int, required=True)
    gr.add_argument("--minor", action="store_true")
    gr.set_defaults(fn=cmd_grid)

    v = sub.add_parser("verify", help="bound verification suites")
    v.add_argument("--suite", default="all",
                   choices=["wheel", "height", "minimal-tw", "grid", "all"])
    v.add_argument("--manifest")
    v.add_argument("--out")
    v.set_defaults(fn=cmd_verify)

    return top


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on bad flags, which matches the malformed-input code
        return int(exc.code or 0)
    try:
        return args.fn(args)
    except MalformedInput as exc:
        print(f"error\t{exc}", file=sys.stderr)
        return EXIT_MALFORMED
    except BudgetExceeded as exc:
        print(f"cap\t{exc}", file=sys.stderr)
        return EXIT_CAP
    except PosetlabError as exc:
        print(f"error\t{exc}", file=sys.stderr)
        return EXIT_MALFORMED


if __name__ == "__main__":
    sys.exit(main())

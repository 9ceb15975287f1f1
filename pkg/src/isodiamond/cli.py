"""Command-line interface.

Exit status: 0 for success or a positive verdict, 1 for a negative verdict
(a JSON certificate is written to stdout), 2 for usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import diamond as dmd
from .drawing import DrawingConfig, UnsupportedDimension, emit_svg
from .generators import NAMED_GRAPHS, ResourceLimitExceeded, generate_diamond_patch, generate_named
from .graph import GraphError, check_connected, format_edge_list, parse_edge_list
from .partial_cube import is_partial_cube

EXIT_OK, EXIT_NO, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _dump(doc) -> str:
    return json.dumps(doc, sort_keys=True)


def _write(text: str, out: str | None, stdout) -> None:
    if out is None or out == "-":
        stdout.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8")


def _load_graph(args, stdin):
    if args.named is not None:
        try:
            return generate_named(args.named)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
    if args.file is not None:
        try:
            text = Path(args.file).read_text(encoding="utf-8")
        except OSError as exc:
            raise UsageError(f"cannot read {args.file}: {exc}") from exc
    else:
        text = stdin.read()
    return parse_edge_list(text)


def _no(certificate: dmd.Certificate, stdout) -> int:
    stdout.write(_dump(certificate.to_json()) + "\n")
    return EXIT_NO


def cmd_recognize(args, g, stdout) -> int:
    verdict = dmd.is_isometric_diamond_subgraph(g)
    cert = verdict.certificate
    doc = {
        "embeddable": verdict.embeddable,
        "num_classes": len(verdict.classes),
        "partial_cube": verdict.embeddable or cert.reason == "incoherent_cut",
    }
    if cert is not None:
        doc["certificate"] = cert.to_json()
    stdout.write(_dump(doc) + "\n")
    return EXIT_OK if verdict else EXIT_NO


def cmd_classes(args, g, stdout) -> int:
    if g.n == 0:
        return _no(dmd.Certificate("empty"), stdout)
    if not check_connected(g):
        return _no(dmd.Certificate("disconnected"), stdout)
    pc = is_partial_cube(g)
    if not pc:
        return _no(dmd.Certificate(pc.reason, pc.witness), stdout)
    doc = {"classes": [
        {"id": c.id, "edges": [list(e) for e in c.endpoints],
         "semicube_a": sorted(c.semicube_a), "semicube_b": sorted(c.semicube_b)}
        for c in pc.classes],
        "labeling": ["".join(map(str, b)) for b in pc.labeling.bits]}
    stdout.write(_dump(doc) + "\n")
    return EXIT_OK


def cmd_coherence(args, g, stdout) -> int:
    verdict = dmd.is_isometric_diamond_subgraph(g)
    if not verdict:
        return _no(verdict.certificate, stdout)
    doc = {"cuts": [{"class": c.class_id, "white_side": sorted(c.white_side),
                     "black_side": sorted(c.black_side)} for c in verdict.cuts]}
    stdout.write(_dump(doc) + "\n")
    return EXIT_OK


def cmd_dimension(args, g, stdout) -> int:
    verdict = dmd.is_isometric_diamond_subgraph(g)
    if not verdict:
        return _no(verdict.certificate, stdout)
    if verdict.cuts:
        width, chains = dmd.poset_width_and_chains(dmd.cut_poset(verdict.cuts))
        doc = {"dimension": width - 1, "width": width, "chains": [list(c) for c in chains.chains]}
    else:
        doc = {"dimension": 0, "width": 0, "chains": []}
    stdout.write(_dump(doc) + "\n")
    return EXIT_OK


def _embedding(args, g):
    build = dmd.embed_direct if args.direct else dmd.embed_minimum
    return build(g)


def cmd_embed(args, g, stdout) -> int:
    try:
        emb = _embedding(args, g)
    except dmd.NotDiamondEmbeddable as exc:
        return _no(exc.certificate, stdout)
    _write(_dump(emb.to_json()) + "\n", args.out, stdout)
    return EXIT_OK


def cmd_verify(args, g, stdout) -> int:
    try:
        doc = json.loads(Path(args.embedding).read_text(encoding="utf-8"))
        emb = dmd.DiamondEmbedding.from_json(doc)
    except (OSError, ValueError, KeyError, TypeError) as exc:
        raise UsageError(f"cannot load embedding {args.embedding}: {exc}") from exc
    check = dmd.verify_embedding(g, emb)
    stdout.write(_dump({"ok": check.ok, "violation": check.violation,
                        "vertices": list(check.vertices)}) + "\n")
    return EXIT_OK if check else EXIT_NO


def cmd_generate(args, stdout) -> int:
    if args.diamond is not None:
        k, r = args.diamond
        patch = generate_diamond_patch(k, r, metric=args.metric, cap=args.cap)
        g = patch.graph
        if args.coords:
            emb = dmd.DiamondEmbedding(k, patch.coords)
            Path(args.coords).write_text(_dump(emb.to_json()) + "\n", encoding="utf-8")
    else:
        try:
            g = generate_named(args.named)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
    _write(format_edge_list(g), args.out, stdout)
    return EXIT_OK


def cmd_draw(args, g, stdout) -> int:
    try:
        emb = _embedding(args, g)
    except dmd.NotDiamondEmbeddable as exc:
        return _no(exc.certificate, stdout)
    if emb.dimension < 2:
        emb = emb.padded(2)
    try:
        cfg = DrawingConfig(args.scale, args.margin, args.radius)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    try:
        svg = emit_svg(g, emb, cfg)
    except UnsupportedDimension:
        return _no(dmd.Certificate("unsupported_dimension", (emb.dimension,)), stdout)
    if args.png:
        from .plotting import save_embedding_figure
        save_embedding_figure(g, emb, args.png, labels=args.labels)
    _write(svg, args.out, stdout)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="isodiamond",
        description="Isometric embeddings into hexagonal, diamond and higher diamond graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    def graph_input(p):
        src = p.add_mutually_exclusive_group()
        src.add_argument("--named", metavar="NAME",
                         help=f"fixture graph ({', '.join(NAMED_GRAPHS)})")
        src.add_argument("--file", metavar="PATH", help="edge-list file (default: stdin)")

    for name, help_text in [
        ("recognize", "decide whether the graph is an isometric diamond subgraph"),
        ("classes", "print Djokovic-Winkler classes and the hypercube labeling"),
        ("coherence", "print the oriented cuts, or an incoherent-cut certificate"),
        ("dimension", "compute the diamond dimension and an optimal chain decomposition"),
    ]:
        graph_input(sub.add_parser(name, help=help_text))

    def embed_kind(p):
        kind = p.add_mutually_exclusive_group()
        kind.add_argument("--direct", action="store_true", help="one coordinate per class")
        kind.add_argument("--minimum", action="store_true", help="minimum dimension (default)")

    p = sub.add_parser("embed", help="emit an embedding as JSON")
    graph_input(p)
    embed_kind(p)
    p.add_argument("--out", metavar="PATH", help="output file (default: stdout)")

    p = sub.add_parser("verify", help="check an embedding JSON file against the graph")
    graph_input(p)
    p.add_argument("--embedding", required=True, metavar="PATH")

    p = sub.add_parser("generate", help="write a fixture graph or diamond patch as an edge list")
    which = p.add_mutually_exclusive_group(required=True)
    which.add_argument("--diamond", nargs=2, type=int, metavar=("K", "R"))
    which.add_argument("--named", metavar="NAME")
    p.add_argument("--metric", choices=("box", "ball"), default="box",
                   help="patch region: coordinate box or L1 ball (default: box)")
    p.add_argument("--cap", type=int, default=200_000, help="maximum patch vertices")
    p.add_argument("--coords", metavar="PATH", help="also write patch coordinates as embedding JSON")
    p.add_argument("--out", metavar="PATH")

    p = sub.add_parser("draw", help="render a 2-dimensional embedding as SVG")
    graph_input(p)
    embed_kind(p)
    p.add_argument("--out", metavar="PATH", help="SVG output file (default: stdout)")
    p.add_argument("--png", metavar="PATH", help="also save a matplotlib figure")
    p.add_argument("--labels", action="store_true", help="label vertices in the matplotlib figure")
    p.add_argument("--scale", type=float, default=100.0)
    p.add_argument("--margin", type=float, default=20.0)
    p.add_argument("--radius", type=float, default=4.0)
    return parser


_HANDLERS = {
    "recognize": cmd_recognize,
    "classes": cmd_classes,
    "coherence": cmd_coherence,
    "dimension": cmd_dimension,
    "embed": cmd_embed,
    "verify": cmd_verify,
    "draw": cmd_draw,
}


def run(argv=None, stdin=None, stdout=None, stderr=None) -> int:
    stdin = sys.stdin if stdin is None else stdin
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        if args.command == "generate":
            return cmd_generate(args, stdout)
        g = _load_graph(args, stdin)
        return _HANDLERS[args.command](args, g, stdout)
    except (UsageError, GraphError, ResourceLimitExceeded, ValueError) as exc:
        stderr.write(f"isodiamond: error: {exc}\n")
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()

"""Command-line interface.

Every subcommand prints one JSON report on stdout; human-readable notes go to
stderr. Exit codes: 0 success, 1 verdict false (``verify`` only), 2 usage or
input error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import __version__
from .coloring import (
    STRATEGIES,
    coloring_from_json,
    coloring_to_json,
    color_graph,
    theorem2_bound,
)
from .decompose import block_decomposition, block_ordering, ear_decomposition
from .exact import MAX_EXACT_EDGES, exact_rc_certificate
from .exceptions import RainbowError
from .generators import Figure1Params, block_chain, figure1_graph, figure2_graph, random_two_connected
from .graph import TWO_CONNECTED, TWO_EDGE_CONNECTED, Graph, diameter, format_edge_list, parse_graph, structure_class
from .verify import verify_rainbow

EXIT_OK, EXIT_FALSE, EXIT_USAGE = 0, 1, 2


class CommandError(Exception):
    """Input or usage problem; reported with exit code 2."""


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise CommandError(f"cannot read {path}: {exc.strerror}") from None


def _load_graph(path: str) -> Graph:
    return parse_graph(_read_text(path))


def _summary(g: Graph) -> dict:
    return {"n": g.n, "m": g.m, "class": structure_class(g)}


def _require_connected(g: Graph) -> None:
    if structure_class(g) == "disconnected":
        raise CommandError("input graph is disconnected")


def _write(path: str, text: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)


def _dump(payload: dict) -> str:
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def cmd_color(args) -> tuple[dict, int]:
    g = _load_graph(args.graph)
    _require_connected(g)
    outcome = color_graph(g, args.strategy)
    doc = outcome.to_json()
    if args.out:
        _write(args.out, _dump(doc))
    result = {"coloring": doc, "fallback_notes": outcome.notes}
    if structure_class(g) in (TWO_CONNECTED, TWO_EDGE_CONNECTED) and g.n >= 3:
        result["theorem2_bound"] = theorem2_bound(g.n)
    print(f"colored with {outcome.coloring.palette_size} colors (bound {outcome.bound}, {outcome.bound_kind})",
          file=sys.stderr)
    report = {
        "command": "color",
        "input": _summary(g),
        "result": result,
        "bound": outcome.bound,
        "verified": outcome.verified,
    }
    return report, EXIT_OK


def cmd_verify(args) -> tuple[dict, int]:
    g = _load_graph(args.graph)
    try:
        payload = json.loads(_read_text(args.coloring))
    except json.JSONDecodeError as exc:
        raise CommandError(f"coloring file is not JSON: {exc}") from None
    if isinstance(payload, dict) and "coloring" in payload.get("result", {}):
        payload = payload["result"]["coloring"]
    if not isinstance(payload, dict):
        raise CommandError("coloring document must be a JSON object")
    c = coloring_from_json(g, payload)
    rep = verify_rainbow(g, c)
    if rep.verdict:
        print(f"rainbow connected with {c.palette_size} colors", file=sys.stderr)
    else:
        print(f"not rainbow connected: no rainbow path between {rep.witness[0]} and {rep.witness[1]}",
              file=sys.stderr)
    report = {
        "command": "verify",
        "input": _summary(g),
        "result": rep.to_json(),
        "bound": None,
        "verified": rep.verdict,
    }
    return report, EXIT_OK if rep.verdict else EXIT_FALSE


def cmd_exact(args) -> tuple[dict, int]:
    g = _load_graph(args.graph)
    _require_connected(g)
    rc, c = exact_rc_certificate(g, cap=args.cap, max_edges=args.max_edges)
    verified = verify_rainbow(g, c).verdict
    if args.out:
        _write(args.out, _dump(coloring_to_json(c, verified=verified)))
    print(f"rc = {rc}", file=sys.stderr)
    report = {
        "command": "exact",
        "input": _summary(g),
        "result": {"rc": rc, "diameter": diameter(g), "coloring": coloring_to_json(c, verified=verified)},
        "bound": None,
        "verified": verified,
    }
    return report, EXIT_OK


def cmd_decompose(args) -> tuple[dict, int]:
    g = _load_graph(args.graph)
    _require_connected(g)
    d = block_decomposition(g)
    result = d.to_json()
    result["ordering"] = block_ordering(d).to_json()
    if d.q == 1 and g.n >= 3:
        root = g.vertices[0] if args.root is None else args.root
        result["ear_decomposition"] = ear_decomposition(g, root).to_json()
    print(f"q={d.q} blocks, r={d.r} even, {len(d.cut_vertices)} cut vertices", file=sys.stderr)
    report = {"command": "decompose", "input": _summary(g), "result": result, "bound": None, "verified": True}
    return report, EXIT_OK


def cmd_generate(args) -> tuple[dict, int]:
    family = args.family
    if family == "figure1":
        _need(args, "q", "r", "n")
        params = {"q": args.q, "r": args.r, "n": args.n}
        g = figure1_graph(Figure1Params(args.q, args.r, args.n))
    elif family == "figure2":
        _need(args, "k", "variant")
        params = {"k": args.k, "variant": args.variant}
        g = figure2_graph(args.k, args.variant)
    elif family == "random2c":
        _need(args, "n")
        params = {"n": args.n, "ears": args.ears, "seed": args.seed}
        g = random_two_connected(args.n, args.ears, args.seed)
    else:
        _need(args, "blocks")
        params = {"blocks": args.blocks}
        g = block_chain([b for b in args.blocks.split(",") if b])
    text = format_edge_list(g, comment=f"{family} {json.dumps(params, sort_keys=True)}")
    if args.out == "-":
        sys.stdout.write(text)
    else:
        _write(args.out, text)
    report = {
        "command": "generate",
        "input": _summary(g),
        "result": {"family": family, "params": params, "order": g.n, "diameter": diameter(g), "out": args.out},
        "bound": None,
        "verified": True,
    }
    return report, EXIT_OK


def _need(args, *names) -> None:
    missing = [f"--{n}" for n in names if getattr(args, n) is None]
    if missing:
        raise CommandError(f"{args.family} needs {', '.join(missing)}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="rainbowcolor", description="Rainbow edge-colorings within block-count bounds.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", metavar="PATH", help="also write the report to PATH")
    common.add_argument("--timing", action="store_true", help="add elapsed_ms to the report")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("color", parents=[common], help="build and verify a rainbow coloring")
    p.add_argument("graph", help="edge-list file, or - for stdin")
    p.add_argument("--strategy", choices=STRATEGIES, default="auto")
    p.add_argument("--out", help="write the coloring JSON here")
    p.set_defaults(func=cmd_color)

    p = sub.add_parser("verify", parents=[common], help="check a coloring for rainbow connectivity")
    p.add_argument("graph")
    p.add_argument("coloring", help="coloring JSON (as written by color --out)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("exact", parents=[common], help="exact rainbow connection number (small graphs)")
    p.add_argument("graph")
    p.add_argument("--cap", type=int, default=None, help="largest number of colors to try")
    p.add_argument("--max-edges", type=int, default=MAX_EXACT_EDGES, dest="max_edges")
    p.add_argument("--out", help="write the certificate coloring JSON here")
    p.set_defaults(func=cmd_exact)

    p = sub.add_parser("decompose", parents=[common], help="blocks, block ordering and ear decomposition")
    p.add_argument("graph")
    p.add_argument("--root", type=int, default=None, help="root vertex of the ear decomposition")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("generate", parents=[common], help="write an example graph as an edge list")
    p.add_argument("family", choices=("figure1", "figure2", "random2c", "chain"))
    p.add_argument("--q", type=int)
    p.add_argument("--r", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--variant", type=int)
    p.add_argument("--ears", type=int, default=0)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--blocks", help="comma-separated descriptors, e.g. k2,cycle3,clique4")
    p.add_argument("--out", default="-", help="edge-list destination; - writes it to stdout "
                                              "and moves the report to stderr")
    p.set_defaults(func=cmd_generate)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    start = time.perf_counter()
    try:
        report, code = args.func(args)
    except (CommandError, RainbowError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.timing:
        report["elapsed_ms"] = round((time.perf_counter() - start) * 1000, 3)
    text = _dump(report)
    if args.json:
        _write(args.json, text)
    stream = sys.stderr if getattr(args, "out", None) == "-" else sys.stdout
    stream.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())

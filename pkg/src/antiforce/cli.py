"""Command line front end: ``antiforce <subcommand> ...``.

Exit status is 0 on success, 1 when a check fails and 2 for usage or input
errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .antiforcing import bounds, max_antiforcing, min_antiforcing
from .construction import ConstructionTrace, decompose, random_extremal
from .errors import FormatError, InvalidInput, NotNice
from .generators import FAMILIES, FamilySpec, generate
from .graph import format_graph, read_graph, write_graph
from .matchings import PerfectMatching, format_matching, read_matching
from .nice import edge_involutions, enumerate_nice, equivalence_classes
from .products import cartesian_product, is_isomorphic, prime_by_theta, theta_partition
from .suite import emit_report, paper_suite


class UsageError(Exception):
    pass


def _out(text: str, path=None) -> None:
    if path:
        with open(path, "w", encoding="ascii", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True) + "\n"


def format_classes(classes: dict) -> str:
    lines = []
    for i in sorted(classes):
        edges = ", ".join(f"{u} {v}" for u, v in sorted(classes[i]))
        lines.append(f"class {i}: {edges}")
    return "\n".join(lines) + ("\n" if lines else "")


def parse_classes(text: str) -> dict[int, list[tuple[int, int]]]:
    out = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        head, sep, body = line.partition(":")
        words = head.split()
        if not sep or len(words) != 2 or words[0] != "class":
            raise FormatError("expected 'class i: u v, u v, ...'", lineno)
        try:
            idx = int(words[1])
            edges = []
            for chunk in body.split(","):
                if chunk.strip():
                    u, v = chunk.split()
                    edges.append((int(u), int(v)))
        except ValueError:
            raise FormatError(f"bad class line {line.strip()!r}", lineno) from None
        out[idx] = edges
    return out


def _load(reader, path, *extra):
    try:
        return reader(path, *extra)
    except FormatError as exc:
        raise UsageError(f"{path}: {exc}") from None


# -- subcommands -------------------------------------------------------


def cmd_gen(args) -> int:
    G, classes = generate(FamilySpec(args.family, tuple(args.params)))
    _out(format_graph(G), args.output)
    if args.classes:
        _out(format_classes(classes), args.classes)
    return 0


def _matching_for(args, G) -> PerfectMatching:
    if args.matching:
        return _load(read_matching, args.matching, G)
    i = args.matching_class
    if args.classes:
        with open(args.classes, encoding="ascii") as fh:
            try:
                classes = parse_classes(fh.read())
            except FormatError as exc:
                raise UsageError(f"{args.classes}: {exc}") from None
        if i not in classes:
            raise UsageError(f"no class {i} in {args.classes}")
        edges = classes[i]
    else:
        # without a sidecar, number the Theta* classes from 1 by least edge
        parts = sorted(theta_partition(G).classes(), key=min)
        if not 1 <= i <= len(parts):
            raise UsageError(f"class index {i} outside 1..{len(parts)}")
        edges = parts[i - 1]
    try:
        return PerfectMatching.from_edges(G.n, edges)
    except InvalidInput as exc:
        raise UsageError(f"class {i} is not a perfect matching: {exc}") from None


def cmd_af(args) -> int:
    G = _load(read_graph, args.graph)
    b = bounds(G)
    if args.max:
        value, M = max_antiforcing(G, workers=args.threads)
        res = min_antiforcing(G, M)
        assert res.value == value
    elif args.matching or args.matching_class is not None:
        M = _matching_for(args, G)
        res = min_antiforcing(G, M)
    else:
        raise UsageError("af needs --matching, --matching-class or --max")
    doc = {
        "graph": args.graph,
        "matching": [list(e) for e in M.edges],
        "af": res.value,
        "witness": [list(e) for e in res.witness],
        "lower_bound_c4": res.lower_bound_c4,
        "quarter_bound": str(b.quarter),
        "cyclomatic_bound": b.cyclomatic,
    }
    _out(_dump(doc))
    return 0


def cmd_nice(args) -> int:
    G = _load(read_graph, args.graph)
    S = enumerate_nice(G)
    if args.list:
        _out("\n".join(format_matching(M) for M in S))
    elif args.classes:
        _out("".join(_dump(c) for c in equivalence_classes(G, S)))
    else:
        _out(f"{S.count}\n")
    return 0


def cmd_involutions(args) -> int:
    G = _load(read_graph, args.graph)
    _out("".join(" ".join(map(str, a.alpha)) + "\n" for a in edge_involutions(G)))
    return 0


def cmd_theta(args) -> int:
    G = _load(read_graph, args.graph)
    if args.prime:
        _out(prime_by_theta(G) + "\n")
        return 0
    P = theta_partition(G)
    _out(format_classes({i + 1: c for i, c in enumerate(P.classes())}))
    return 0


def cmd_product(args) -> int:
    if args.build:
        A, B = (_load(read_graph, p) for p in args.build)
        _out(format_graph(cartesian_product(A, B).graph), args.output)
        return 0
    A, B = (_load(read_graph, p) for p in args.verify_iso)
    phi = is_isomorphic(A, B)
    if phi is None:
        _out("not isomorphic\n")
        return 1
    _out(" ".join(map(str, phi)) + "\n")
    return 0


def cmd_construct(args) -> int:
    if args.decompose:
        G = _load(read_graph, args.decompose[0])
        M = _load(read_matching, args.decompose[1], G)
        trace = decompose(G, M)
    else:
        trace = random_extremal(args.seed, args.steps, args.max_vertices)
    _out(trace.to_json() + "\n", args.output)
    if args.graph_out:
        write_graph(trace.graph, args.graph_out)
    if args.matching_out:
        _out(format_matching(trace.matching), args.matching_out)
    return 0


def cmd_replay(args) -> int:
    with open(args.trace, encoding="ascii") as fh:
        trace = ConstructionTrace.from_json(fh.read())
    _out(format_graph(trace.graph), args.output)
    return 0


def cmd_verify(args) -> int:
    R = paper_suite(args.max_dim, args.seed, args.timings)
    data = emit_report(R, args.format)
    if args.output:
        with open(args.output, "wb") as fh:
            fh.write(data)
    else:
        sys.stdout.buffer.write(data)
        sys.stdout.flush()
    return 0 if R.passed else 1


# -- parser ------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    fmt = argparse.ArgumentDefaultsHelpFormatter
    p = argparse.ArgumentParser(prog="antiforce", description=__doc__.splitlines()[0], formatter_class=fmt)
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    p.add_argument("--threads", type=int, default=1, help="worker processes for parallel subcommands")
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="generate a family member", formatter_class=fmt)
    g.add_argument("family", choices=FAMILIES, help="graph family")
    g.add_argument("params", type=int, nargs="+", help="integer family parameters, e.g. n or n k")
    g.add_argument("-o", "--output", default=None, help="graph file (stdout if omitted)")
    g.add_argument("--classes", default=None, help="write the edge-class sidecar here")
    g.set_defaults(func=cmd_gen)

    a = sub.add_parser("af", help="anti-forcing number of a matching", formatter_class=fmt)
    a.add_argument("graph", help="graph file")
    a.add_argument("--matching", default=None, help="matching file")
    a.add_argument("--matching-class", type=int, default=None, help="use edge class I as the matching")
    a.add_argument("--classes", default=None, help="class sidecar for --matching-class (else Theta* classes)")
    a.add_argument("--max", action="store_true", help="maximise over all perfect matchings")
    a.set_defaults(func=cmd_af)

    n = sub.add_parser("nice", help="nice perfect matchings", formatter_class=fmt)
    n.add_argument("graph", help="graph file")
    mode = n.add_mutually_exclusive_group()
    mode.add_argument("--count", action="store_true", help="print the number (default)")
    mode.add_argument("--list", action="store_true", help="print each matching, blank-line separated")
    mode.add_argument("--classes", action="store_true", help="print equivalence classes of indices")
    n.set_defaults(func=cmd_nice)

    i = sub.add_parser("involutions", help="edge-involutions, one image list per line", formatter_class=fmt)
    i.add_argument("graph", help="graph file")
    i.set_defaults(func=cmd_involutions)

    t = sub.add_parser("theta", help="Theta* classes or the primality test", formatter_class=fmt)
    t.add_argument("graph", help="graph file")
    mode = t.add_mutually_exclusive_group()
    mode.add_argument("--classes", action="store_true", help="print the classes (default)")
    mode.add_argument("--prime", action="store_true", help="print prime or inconclusive")
    t.set_defaults(func=cmd_theta)

    pr = sub.add_parser("product", help="Cartesian products", formatter_class=fmt)
    mode = pr.add_mutually_exclusive_group(required=True)
    mode.add_argument("--build", nargs=2, metavar=("A", "B"), help="write the product of two graph files")
    mode.add_argument("--verify-iso", nargs=2, metavar=("A", "B"), help="exit 0 with a witness if isomorphic, else 1")
    pr.add_argument("-o", "--output", default=None, help="product file (stdout if omitted)")
    pr.set_defaults(func=cmd_product)

    c = sub.add_parser("construct", help="expansion traces", formatter_class=fmt)
    c.add_argument("--seed", type=int, default=0, help="random trace seed")
    c.add_argument("--steps", type=int, default=8, help="expansion steps to attempt")
    c.add_argument("--max-vertices", type=int, default=14, help="size cap for joined graphs")
    c.add_argument("--decompose", nargs=2, metavar=("GRAPH", "MATCHING"), default=None,
                   help="trace rebuilding a graph with a nice matching")
    c.add_argument("-o", "--output", default=None, help="trace file (stdout if omitted)")
    c.add_argument("--graph-out", default=None, help="also write the final graph here")
    c.add_argument("--matching-out", default=None, help="also write the final matching here")
    c.set_defaults(func=cmd_construct)

    r = sub.add_parser("replay", help="rebuild the graph of a trace file", formatter_class=fmt)
    r.add_argument("trace", help="trace JSON file")
    r.add_argument("-o", "--output", default=None, help="graph file (stdout if omitted)")
    r.set_defaults(func=cmd_replay)

    v = sub.add_parser("verify", help="run the built-in check suite", formatter_class=fmt)
    v.add_argument("--suite", choices=["paper"], default="paper", help="check suite")
    v.add_argument("--max-dim", type=int, choices=[3, 4, 5], default=4, help="largest hypercube dimension")
    v.add_argument("--format", choices=["json", "tsv"], default="json", help="report format")
    v.add_argument("--seed", type=int, default=0, help="seed for the random construction checks")
    v.add_argument("--timings", action="store_true", help="record millis (makes output run-dependent)")
    v.add_argument("-o", "--output", default=None, help="report file (stdout if omitted)")
    v.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.threads < 1:
        print("antiforce: --threads must be >= 1", file=sys.stderr)
        return 2
    try:
        return args.func(args)
    except (FormatError, InvalidInput, UsageError, NotNice) as exc:
        print(f"antiforce: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"antiforce: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())

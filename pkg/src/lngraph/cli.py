"""Command-line interface.

Exit codes: 0 success, 1 verification failure or violated claim, 2 bad input
or unmet precondition, 3 I/O or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from lngraph import certificates
from lngraph.certificates import CertificateFormatError
from lngraph.cycles import cycle_through, pancyclicity_survey
from lngraph.errors import LnGraphError
from lngraph.graph import (
    DEFAULT_N_CAP,
    build_bn,
    build_ln,
    bn_to_dot,
    bn_to_edgelist,
    check_order,
    is_valid_vertex,
    metrics,
    to_dot,
    to_edgelist,
)
from lngraph.hamilton import DEFAULT_SEED, hamilton_path, hamilton_survey
from lngraph.oracle import DEFAULT_BUDGET, negatives_survey, spectrum_survey, verify

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_IO = 3


class CliError(Exception):
    def __init__(self, message: str, code: int = EXIT_USAGE):
        super().__init__(message)
        self.code = code


def parse_vertex(text: str):
    try:
        head, tail = (int(p) for p in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected 'head,tail', got {text!r}") from None
    return head, tail


def _emit(text: str, output: Optional[str]) -> None:
    if output is None or output == "-":
        sys.stdout.write(text)
        return
    try:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text)
    except OSError as exc:
        raise CliError(f"cannot write {output}: {exc}", EXIT_IO) from exc


def _graph(args):
    try:
        return build_ln(args.n, cap=args.n_cap)
    except LnGraphError as exc:
        raise CliError(str(exc)) from exc


def _vertex(g, v, flag: str):
    if not is_valid_vertex(v, g.n):
        raise CliError(f"{flag} {v[0]},{v[1]} is not a vertex of L({g.n})")
    return v


def cmd_gen(args) -> int:
    try:
        check_order(args.n, args.n_cap)
    except LnGraphError as exc:
        raise CliError(str(exc)) from exc
    if args.bn:
        b = build_bn(args.n, cap=args.n_cap)
        if args.format == "dot":
            text = bn_to_dot(b)
        elif args.format == "edgelist":
            text = bn_to_edgelist(b)
        elif args.format == "json":
            data = {
                "n": b.n,
                "graph": "B",
                "vertices": [list(x.elements) for x in b.vertices],
                "edges": [[list(x.elements), list(y.elements)] for x, y in b.sorted_edges()],
            }
            text = json.dumps(data) + "\n"
        else:
            text = f"B({b.n}): {len(b.vertices)} vertices, {len(b.edges)} edges\n"
        _emit(text, args.output)
        return EXIT_OK
    g = _graph(args)
    if args.format == "dot":
        text = to_dot(g)
    elif args.format == "edgelist":
        text = to_edgelist(g)
    elif args.format == "json":
        data = {
            "n": g.n,
            "graph": "L",
            "vertices": [list(v) for v in g.vertices],
            "edges": [[list(u), list(v)] for u, v in g.edges()],
        }
        text = json.dumps(data) + "\n"
    else:
        m = metrics(g)
        text = (
            f"L({g.n}): order {m.order}, size {m.size}, degree {m.min_degree}..{m.max_degree}, "
            f"girth {m.girth}, diameter {m.diameter}, connected {m.connected}\n"
        )
    _emit(text, args.output)
    return EXIT_OK


def _emit_certificate(g, cert, length, output) -> int:
    res = verify(g, cert, length)
    if not res.ok:
        for line in res.lines():
            print(line, file=sys.stderr)
        return EXIT_FAILED
    _emit(certificates.dumps(cert), output)
    return EXIT_OK


def cmd_cycle(args) -> int:
    g = _graph(args)
    v = _vertex(g, args.vertex, "--vertex")
    try:
        cert = cycle_through(g, v, args.m)
    except LnGraphError as exc:
        raise CliError(str(exc)) from exc
    return _emit_certificate(g, cert, args.m, args.output)


def cmd_hampath(args) -> int:
    g = _graph(args)
    u = _vertex(g, args.u, "--u")
    v = _vertex(g, args.v, "--v")
    try:
        cert = hamilton_path(g, u, v)
    except LnGraphError as exc:
        raise CliError(str(exc)) from exc
    return _emit_certificate(g, cert, g.order - 1, args.output)


def cmd_verify(args) -> int:
    try:
        if args.file == "-":
            text = sys.stdin.read()
        else:
            with open(args.file, encoding="utf-8") as fh:
                text = fh.read()
    except OSError as exc:
        raise CliError(f"cannot read {args.file}: {exc}", EXIT_IO) from exc
    try:
        cert = certificates.loads(text)
    except CertificateFormatError as exc:
        raise CliError(str(exc), EXIT_IO) from exc
    try:
        g = build_ln(cert.n, cap=args.n_cap)
    except LnGraphError as exc:
        raise CliError(str(exc)) from exc
    res = verify(g, cert, args.length)
    for line in res.lines():
        print(line)
    if res.ok:
        print(f"ok: {cert.kind} of {len(cert.vertices)} vertices in L({cert.n})")
        return EXIT_OK
    return EXIT_FAILED


def cmd_survey(args) -> int:
    g = _graph(args)
    try:
        if args.kind == "pancyclic":
            report = pancyclicity_survey(g)
        elif args.kind == "hamilton":
            report = hamilton_survey(g, sample=args.sample, seed=args.seed)
        elif args.kind == "negatives":
            report = negatives_survey(g, budget=args.budget)
        else:
            report = spectrum_survey(g)
    except LnGraphError as exc:
        raise CliError(str(exc)) from exc
    if args.format == "json":
        _emit(json.dumps(report.to_dict()) + "\n", args.output)
    else:
        _emit(report.summary() + "\n", args.output)
    return EXIT_OK if report.ok else EXIT_FAILED


def _positive(text: str) -> int:
    value = int(text)
    if value <= 0:
        raise argparse.ArgumentTypeError(f"must be positive, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="lngraph", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n-cap", type=_positive, default=DEFAULT_N_CAP, help="largest n accepted (default %(default)s)")
    common.add_argument("-o", "--output", help="write to this file instead of stdout")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", parents=[common], help="emit L(n) or B(n)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=["json", "dot", "edgelist", "text"], default="edgelist")
    p.add_argument("--bn", action="store_true", help="emit B(n) instead of L(n)")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("cycle", parents=[common], help="cycle of length m through a vertex (n ≥ 6)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--vertex", type=parse_vertex, required=True, metavar="HEAD,TAIL")
    p.add_argument("--m", type=int, required=True)
    p.set_defaults(func=cmd_cycle)

    p = sub.add_parser("hampath", parents=[common], help="Hamiltonian path between two vertices (n ≥ 4)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--u", type=parse_vertex, required=True, metavar="HEAD,TAIL")
    p.add_argument("--v", type=parse_vertex, required=True, metavar="HEAD,TAIL")
    p.set_defaults(func=cmd_hampath)

    p = sub.add_parser("verify", parents=[common], help="check a certificate JSON file ('-' for stdin)")
    p.add_argument("file")
    p.add_argument("--length", type=int, help="also require this length (edges for paths, vertices for cycles)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("survey", parents=[common], help="run a full sweep")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--kind", choices=["pancyclic", "hamilton", "negatives", "spectrum"], required=True)
    p.add_argument("--sample", type=_positive, help="number of vertex pairs to sample (hamilton)")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--budget", type=_positive, default=DEFAULT_BUDGET, help="node expansions per search")
    p.add_argument("--format", choices=["json", "text"], default="text")
    p.set_defaults(func=cmd_survey)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())

"""``deza`` command-line tool.

Every subcommand prints one JSON document.  Exit status is 0 on success, 1 on
a domain error (with ``{"error", "detail"}`` on stdout) and 2 on usage errors.
Graphs travel as graph6; a subcommand reading a graph accepts ``--graph6``,
``--edges FILE``, or stdin holding either a bare graph6 line or the JSON
printed by ``construct``/``switch``.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import analysis, constructions, cyclotomic, enumeration, spectra
from .graph import Graph, GraphError, VertexPermutation, complete_graph, lexicographic_product
from .graphio import from_edge_list, from_graph6, to_graph6


class DomainError(Exception):
    pass


def _read_graph(args: argparse.Namespace) -> Graph:
    if getattr(args, "graph6", None):
        return from_graph6(args.graph6)
    if getattr(args, "edges", None):
        try:
            text = Path(args.edges).read_text()
        except OSError as exc:
            raise DomainError(f"cannot read {args.edges}: {exc.strerror}") from exc
        return from_edge_list(text)
    text = sys.stdin.read().strip()
    if not text:
        raise DomainError("no graph given (use --graph6, --edges, or stdin)")
    if text.startswith("{"):
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise DomainError(f"malformed JSON on stdin: {exc}") from exc
        if "graph6" not in doc:
            raise DomainError("JSON on stdin has no 'graph6' field")
        return from_graph6(doc["graph6"])
    return from_graph6(text.splitlines()[0])


def _graph_doc(g: Graph, **extra) -> dict:
    return {"n": g.n, "graph6": to_graph6(g), **extra}


def cmd_analyze(args):
    return analysis.classify(_read_graph(args)).to_json()


def cmd_construct(args):
    fam, ps = args.family, args.params
    try:
        if fam == "quasi-lattice":
            _need(ps, 1, fam)
            which = constructions.Involution(args.involution or "main-diagonal")
            g = constructions.quasi_lattice(ps[0], which)
        elif fam == "quasi-triangular":
            _need(ps, 1, fam)
            g = constructions.quasi_triangular(ps[0])
        elif fam == "lex":
            if not (args.outer and args.inner):
                raise DomainError("lex needs --outer and --inner graph6 strings")
            g = lexicographic_product(from_graph6(args.outer), from_graph6(args.inner))
        elif fam == "2ce" and args.outer:
            g = lexicographic_product(from_graph6(args.outer), complete_graph(2))
        else:
            g = constructions.build(constructions.FamilySpec(constructions.Family(fam), tuple(ps)))
    except ValueError as exc:
        if isinstance(exc, GraphError):
            raise
        raise DomainError(str(exc)) from exc
    return _graph_doc(g, family=fam, params=list(ps))


def _need(ps, count, fam):
    if len(ps) != count:
        raise DomainError(f"{fam} takes {count} parameter(s)")


def cmd_switch(args):
    g = _read_graph(args)
    if args.search:
        found = constructions.find_switching_involutions(g, limit=args.limit)
        return {"n": g.n, "count": len(found), "involutions": [p.cycle_notation() for p in found]}
    if not args.involution:
        raise DomainError("give --involution CYCLES or --search")
    p = VertexPermutation.parse(g.n, args.involution)
    try:
        switched = constructions.dual_seidel_switch(g, p)
    except constructions.SwitchingError as exc:
        raise DomainError(f"{type(exc).__name__}: {exc}") from exc
    return _graph_doc(
        switched,
        involution=p.cycle_notation(),
        spectrum_check=spectra.switching_spectrum_check(g, switched),
        report=analysis.classify(switched).to_json(),
    )


def cmd_spectrum(args):
    g = _read_graph(args)
    spec = spectra.spectrum(g)
    out = {"n": g.n, "eigenvalues": spec.to_json()}
    if args.children:
        rep = analysis.classify(g)
        if rep.b is None or rep.a is None:
            raise DomainError(f"graph is {rep.kind}; children need two common-neighbour values")
        kids = analysis.children(g, rep)
        sa, sb = spectra.children_spectra(rep, spec)
        out["children"] = {
            "a": {"formula": sa.to_json(), "direct": spectra.spectrum(kids.child_a).to_json()},
            "b": {"formula": sb.to_json(), "direct": spectra.spectrum(kids.child_b).to_json()},
            "agree": sa.matches(spectra.spectrum(kids.child_a)) and sb.matches(spectra.spectrum(kids.child_b)),
        }
    return out


def cmd_scheme(args):
    try:
        return cyclotomic.scheme_report(args.q)
    except (ValueError, ArithmeticError) as exc:
        raise DomainError(str(exc)) from exc


def cmd_enumerate(args):
    try:
        records = enumeration.enumerate_circulants(args.n, strict_only=args.strict_only, jobs=args.jobs)
    except ValueError as exc:
        raise DomainError(str(exc)) from exc
    out = {"n": args.n, "strict_only": args.strict_only, "classes": len(records),
           "records": [r.to_json() for r in records]}
    if not args.no_persist:
        try:
            out["path"] = str(enumeration.persist_census(records, args.n, args.strict_only))
        except enumeration.CensusDivergence as exc:
            raise DomainError(str(exc)) from exc
    return out


def cmd_verify(args):
    try:
        return enumeration.verify_2p(args.p, jobs=args.jobs).to_json()
    except ValueError as exc:
        raise DomainError(str(exc)) from exc


def _add_graph_input(p: argparse.ArgumentParser) -> None:
    src = p.add_mutually_exclusive_group()
    src.add_argument("--graph6", help="graph6 string")
    src.add_argument("--edges", help="edge-list file ('n m' then m lines 'u v')")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="deza", description="Deza graph toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="classify a graph")
    _add_graph_input(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("construct", help="build a named graph")
    p.add_argument(
        "family",
        choices=["paley", "lattice", "triangular", "lattice-c", "triangular-c", "hypercube-c",
                 "quasi-lattice", "quasi-triangular", "2ce", "kx-ym", "lex"],
    )
    p.add_argument("params", nargs="*", type=int)
    p.add_argument("--involution", choices=["main-diagonal", "point-reflection"])
    p.add_argument("--outer", help="graph6 of the outer factor (lex, 2ce)")
    p.add_argument("--inner", help="graph6 of the inner factor (lex)")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("switch", help="dual Seidel switching")
    _add_graph_input(p)
    p.add_argument("--involution", help='cycle notation, e.g. "(0 3)(1 2)"')
    p.add_argument("--search", action="store_true", help="list valid switching involutions")
    p.add_argument("--limit", type=int)
    p.set_defaults(func=cmd_switch)

    p = sub.add_parser("spectrum", help="adjacency spectrum")
    _add_graph_input(p)
    p.add_argument("--children", action="store_true", help="also compare children spectra")
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("scheme", help="3-class cyclotomic scheme on GF(q)")
    p.add_argument("--q", type=int, required=True)
    p.set_defaults(func=cmd_scheme)

    p = sub.add_parser("enumerate-circulants", help="census of Deza circulants")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--strict-only", action="store_true")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--no-persist", action="store_true", help="skip the results/ regression file")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify-2p", help="classify strictly Deza circulants on 2p vertices")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        result = args.func(args)
    except (DomainError, GraphError) as exc:
        print(json.dumps({"error": type(exc).__name__, "detail": str(exc)}))
        return 1
    print(json.dumps(result))
    return 0


if __name__ == "__main__":
    sys.exit(main())

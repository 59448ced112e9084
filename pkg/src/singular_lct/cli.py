"""Command-line surface.

Exit codes: 0 success, 1 usage error, 2 computation error, 3 a theorem
check failed (never expected).  Machine output is versioned JSON with a
"schema" field; all rationals are rendered exactly as "num/den".
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import List, Optional

from . import serialize
from .cluster import (
    change_basis,
    BasisVector,
    BRANCH,
    TOTAL,
    is_unloaded,
    jumping_numbers_curve,
    lct_cluster,
    unload,
)
from .engine import MainTheoremViolation, check_main_theorem
from .enriques import EnriquesDiagram, t_pq, union
from .newton import (
    MonomialIdeal,
    integral_closure,
    jumping_numbers_monomial,
    lct_monomial,
    newton_facets,
    term_ideal,
)
from .poly import BivariatePolynomial, ParseError
from .resolution import resolve_curve
from .corpus import corpus_curves


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _frac(s: str) -> Fraction:
    return Fraction(s)


def build_parser() -> _Parser:
    p = _Parser(prog="singular-lct", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, **kw):
        sp = sub.add_parser(name, **kw)
        sp.add_argument("--json", action="store_true", help="machine JSON output")
        return sp

    sp = add("lct", help="log-canonical threshold of a curve at the origin")
    sp.add_argument("--curve", required=True, metavar="POLY")

    sp = add("monomial-lct", help="lct of a monomial ideal / term ideal")
    src = sp.add_mutually_exclusive_group(required=True)
    src.add_argument("--poly", metavar="POLY", help="use the term ideal of POLY")
    src.add_argument("--file", metavar="PATH", help="ideal as JSON [[m,n],...]")

    sp = add("newton", help="term ideal, closure, facets and lct")
    sp.add_argument("--poly", required=True, metavar="POLY")

    sp = add("jumping", help="jumping numbers")
    src = sp.add_mutually_exclusive_group(required=True)
    src.add_argument("--curve", metavar="POLY")
    src.add_argument("--monomial", metavar="POLY", help="term ideal of POLY")
    src.add_argument("--file", metavar="PATH", help="ideal as JSON [[m,n],...]")
    sp.add_argument("--bound", type=_frac, required=True)

    sp = add("resolve", help="minimal log resolution cluster and diagram")
    sp.add_argument("--curve", required=True, metavar="POLY")

    sp = add("unload", help="unload a weighted cluster (JSON file)")
    sp.add_argument("--file", required=True, metavar="PATH")

    sp = add("tpq", help="staircase tree of x^p - y^q")
    sp.add_argument("p", type=int)
    sp.add_argument("q", type=int)
    sp.add_argument("--dot", metavar="PATH")

    sp = add("union", help="union of diagrams (JSON files)")
    sp.add_argument("files", nargs="+", metavar="PATH")
    sp.add_argument("--dot", metavar="PATH")

    sp = add("diagram", help="Enriques diagram of a curve, with DOT export")
    sp.add_argument("--curve", required=True, metavar="POLY")
    sp.add_argument("--dot", metavar="PATH")

    sp = add("check-theorem", help="compare the two lct computations")
    sp.add_argument("--curve", required=True, metavar="POLY")

    sp = add("corpus", help="run the built-in curve corpus")
    sp.add_argument("--cusp-limit", type=int, default=12)
    return p


def export_dot(d: EnriquesDiagram, path: str) -> None:
    """Write a DOT graph with pinned positions: slant edges at 45 degrees,
    horizontal at 0, vertical at 90, mimicking the usual figures."""
    pos = {0: (0, 0)}
    taken = {(0, 0)}
    step = {"s": (1, 1), "h": (1, 0), "v": (0, 1)}
    for v in range(1, len(d)):
        px, py = pos[d.tree.parents[v]]
        dx, dy = step[d.tree.kinds[v]]
        x, y = px + dx, py + dy
        while (x, y) in taken:
            x += 1
        pos[v] = (x, y)
        taken.add((x, y))
    styles = {"s": "solid", "h": "dashed", "v": "dotted"}
    lines = ["digraph enriques {", '  graph [layout=neato];', "  node [shape=circle];"]
    for v in range(len(d)):
        x, y = pos[v]
        lines.append(f'  n{v + 1} [label="{d.weights[v]}", pos="{x},{y}!"];')
    for v in range(1, len(d)):
        kind = d.tree.kinds[v]
        lines.append(
            f"  n{d.tree.parents[v] + 1} -> n{v + 1} "
            f'[style={styles[kind]}, xlabel="{kind}"];'
        )
    lines.append("}")
    with open(path, "w") as fh:
        fh.write("\n".join(lines) + "\n")


def _load_ideal(args) -> MonomialIdeal:
    if getattr(args, "poly", None):
        return term_ideal(BivariatePolynomial.parse(args.poly))
    if getattr(args, "monomial", None):
        return term_ideal(BivariatePolynomial.parse(args.monomial))
    with open(args.file) as fh:
        return serialize.ideal_from_json(json.load(fh))


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        payload = {"schema": serialize.SCHEMA, **payload}
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(text)


def _run(args) -> int:
    fts = serialize.fraction_to_str
    if args.command == "lct":
        kl, _ = resolve_curve(BivariatePolynomial.parse(args.curve))
        if kl.is_empty():
            value = Fraction(1)  # smooth at the origin
        else:
            value, _ = lct_cluster(kl)
        _emit(args, {"lct": fts(value)}, fts(value))
        return 0

    if args.command == "monomial-lct":
        value = lct_monomial(_load_ideal(args))
        _emit(args, {"lct": fts(value)}, fts(value))
        return 0

    if args.command == "newton":
        a = term_ideal(BivariatePolynomial.parse(args.poly))
        closure = integral_closure(a)
        facets = [
            {"p": f.p, "q": f.q, "d": f.d, "start": list(f.start), "end": list(f.end)}
            for f in newton_facets(a)
        ]
        value = lct_monomial(a)
        payload = {
            "term_ideal": serialize.ideal_to_json(a),
            "integral_closure": serialize.ideal_to_json(closure),
            "facets": facets,
            "lct": fts(value),
        }
        text = "\n".join(
            [
                f"term ideal       {a}",
                f"integral closure {closure}",
                "facets           "
                + ", ".join(f"(p={f.p}, q={f.q}, d={f.d})" for f in newton_facets(a)),
                f"lct              {fts(value)}",
            ]
        )
        _emit(args, payload, text)
        return 0

    if args.command == "jumping":
        if args.curve:
            kl, _ = resolve_curve(BivariatePolynomial.parse(args.curve))
            jumps = jumping_numbers_curve(kl, args.bound)
        else:
            jumps = jumping_numbers_monomial(_load_ideal(args), args.bound)
        _emit(
            args,
            {"jumping_numbers": [fts(x) for x in jumps]},
            ", ".join(fts(x) for x in jumps),
        )
        return 0

    if args.command == "resolve":
        kl, diagram = resolve_curve(BivariatePolynomial.parse(args.curve))
        payload = {
            "cluster": serialize.cluster_to_json(kl),
            "diagram": serialize.diagram_to_json(diagram),
        }
        lines = [f"{len(kl.cluster)} infinitely near points"]
        for i in range(len(kl.cluster)):
            prox = ",".join(f"P{a + 1}" for a in kl.cluster.targets[i])
            lines.append(
                f"  P{i + 1}: weight {kl.weights[i]}"
                + (f", proximate to {prox}" if prox else " (proper point)")
            )
        _emit(args, payload, "\n".join(lines))
        return 0

    if args.command == "unload":
        with open(args.file) as fh:
            kl = serialize.cluster_from_json(json.load(fh))
        result = unload(kl)
        branch = change_basis(
            BasisVector(result.weights, TOTAL), BRANCH, result.cluster
        )
        payload = {
            "cluster": serialize.cluster_to_json(result),
            "branch": list(branch.entries),
            "was_unloaded": is_unloaded(kl),
        }
        _emit(
            args,
            payload,
            f"weights {list(result.weights)}  branch {list(branch.entries)}",
        )
        return 0

    if args.command == "tpq":
        d = t_pq(args.p, args.q)
        if args.dot:
            export_dot(d, args.dot)
        _emit(
            args,
            {"diagram": serialize.diagram_to_json(d)},
            f"weights {list(d.weights)}  kinds {[k for k in d.tree.kinds[1:]]}",
        )
        return 0

    if args.command == "union":
        diagrams = []
        for path in args.files:
            with open(path) as fh:
                diagrams.append(serialize.diagram_from_json(json.load(fh)))
        out = diagrams[0]
        for d in diagrams[1:]:
            out = union(out, d)
        if args.dot:
            export_dot(out, args.dot)
        _emit(
            args,
            {"diagram": serialize.diagram_to_json(out)},
            f"weights {list(out.weights)}",
        )
        return 0

    if args.command == "diagram":
        _, d = resolve_curve(BivariatePolynomial.parse(args.curve))
        if args.dot:
            export_dot(d, args.dot)
        _emit(
            args,
            {"diagram": serialize.diagram_to_json(d)},
            f"weights {list(d.weights)}  kinds {[k for k in d.tree.kinds[1:]]}",
        )
        return 0

    if args.command == "check-theorem":
        _, d = resolve_curve(BivariatePolynomial.parse(args.curve))
        report = check_main_theorem(d)
        payload = {
            "lct_direct": fts(report.lct_direct),
            "lct_term": fts(report.lct_term),
            "equal": report.equal,
            "witness_vertices": [v + 1 for v in report.witness_vertices],
            "candidates": [
                {
                    "rho": None if c.rho is None else c.rho + 1,
                    "lct": fts(c.lct),
                    "staircase": serialize.staircase_to_json(c.staircase),
                }
                for c in report.candidates
            ],
        }
        _emit(args, payload, str(report))
        return 0

    if args.command == "corpus":
        rows = []
        failures = 0
        for name, curve in corpus_curves(args.cusp_limit):
            try:
                _, d = resolve_curve(BivariatePolynomial.parse(curve))
                report = check_main_theorem(d)
                rows.append((name, curve, fts(report.lct_direct), "ok"))
            except MainTheoremViolation:
                failures += 1
                rows.append((name, curve, "-", "THEOREM VIOLATION"))
        width = max(len(r[0]) for r in rows)
        text = "\n".join(
            f"{name:<{width}}  {status:<4}  lct={value}  {curve}"
            for name, curve, value, status in rows
        )
        text += f"\n{len(rows)} curves, {failures} failures"
        payload = {
            "curves": [
                {"name": n, "curve": c, "lct": v, "status": s}
                for n, c, v, s in rows
            ],
            "failures": failures,
        }
        _emit(args, payload, text)
        return 3 if failures else 0

    raise _UsageError(f"unknown command {args.command}")


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return _run(args)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except MainTheoremViolation as exc:
        print(f"THEOREM VIOLATION\n{exc}", file=sys.stderr)
        return 3
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

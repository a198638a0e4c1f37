"""Command-line client.  Every command goes through the service layer."""
from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from pydantic import ValidationError

from . import service
from .models import (
    DecomposeRequest,
    IntervalRequest,
    PBWTerm,
    PhiRequest,
    RunConfig,
    ThetaRequest,
)

EXIT_FAILED = 1
EXIT_BAD_INPUT = 2


class BadInput(Exception):
    pass


def _int_list(text: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    try:
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _load_json(path: str) -> dict:
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise BadInput(f"cannot read {path}: {exc}") from exc


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int, default=2, help="rank (default 2)")
    common.add_argument("--mode", choices=("generic", "cyclotomic"), default="generic")
    common.add_argument("--t", type=int, help="order of q in cyclotomic mode (t > 4)")
    common.add_argument("--bicharacter", metavar="FILE", help="JSON bicharacter {n, parameters, matrix}")
    common.add_argument("--degree-bound", type=int, default=8)
    common.add_argument("--json", action="store_true", help="machine-readable output")

    parser = argparse.ArgumentParser(prog="coideal-lab",
                                     description="Right coideal subalgebras of U_q^+(so_2n+1).")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("phi", parents=[common], help="compute Phi^S(k,m)")
    p.add_argument("--S", type=_int_list, default=[], help="black points, e.g. 1,2,3")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--m", type=int, required=True)

    p = sub.add_parser("coproduct", parents=[common], help="coproduct of u[k,m] vs closed form")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--m", type=int, required=True)

    p = sub.add_parser("decompose", parents=[common], help="PBW decomposition")
    p.add_argument("--S", type=_int_list, default=[])
    p.add_argument("--k", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--element", metavar="FILE", help="element JSON {degree, terms}")

    p = sub.add_parser("classify", parents=[common], help="describe U_theta")
    p.add_argument("--theta", type=_int_list, required=True)

    sub.add_parser("enumerate", parents=[common], help="all subalgebras of rank n")
    sub.add_parser("lattice", parents=[common], help="Hasse diagram under inclusion")

    p = sub.add_parser("verify", parents=[common], help="run verification suites")
    p.add_argument("--suite", default="all",
                   help=f"one of {', '.join(service.SUITES)}, a comma list, or 'all'")
    return parser


def _config(args) -> RunConfig:
    doc = _load_json(args.bicharacter) if args.bicharacter else None
    return RunConfig(n=args.n, mode=args.mode, t=args.t, bicharacter=doc,
                     degree_bound=args.degree_bound)


def _mono(term: PBWTerm) -> str:
    if not term.monomial:
        return "1"
    return "*".join(s if e == 1 else f"{s}^{e}" for s, e in term.monomial)


def _pbw_text(terms: list[PBWTerm]) -> str:
    if not terms:
        return "0"
    return " + ".join(f"({t.coeff})*{_mono(t)}" for t in terms)


def _braces(items) -> str:
    return "{" + ",".join(map(str, items)) + "}"


# --- commands ----------------------------------------------------------------

def cmd_phi(args) -> tuple[object, list[str]]:
    res = service.compute_phi(PhiRequest(config=_config(args), S=args.S, k=args.k, m=args.m))
    lines = [
        f"Phi^{_braces(res.S)}({res.k},{res.m}) = {res.text}",
        f"PBW: {_pbw_text(res.decomposition)}",
        f"leading term: {_mono(res.leading_term) if res.leading_term else 'none'}",
        f"regularity: {'; '.join(res.flags)}",
        f"scheme: {res.scheme.plain}",
    ]
    if res.scheme.shifted:
        lines.append("shifted scheme:")
        lines.extend(res.scheme.shifted.splitlines())
    return res, lines


def cmd_coproduct(args):
    res = service.coproduct(IntervalRequest(config=_config(args), k=args.k, m=args.m))
    verdict = "matches" if res.matches else "DOES NOT match"
    lines = [f"coproduct of u[{res.k},{res.m}] {verdict} the closed form "
             f"({len(res.computed)} computed, {len(res.expected)} expected terms)"]
    for t in res.computed:
        lines.append(f"  ({t.coeff}) g{tuple(t.group)} {t.left} (x) {t.right}")
    for t in res.mismatched:
        lines.append(f"  difference: ({t.coeff}) g{tuple(t.group)} {t.left} (x) {t.right}")
    return res, lines


def cmd_decompose(args):
    element = _load_json(args.element) if args.element else None
    req = DecomposeRequest(config=_config(args), S=args.S, k=args.k, m=args.m, element=element)
    res = service.decompose(req)
    lines = [f"degree: {res.degree}", f"PBW: {_pbw_text(res.decomposition)}",
             f"leading term: {_mono(res.leading_term) if res.leading_term else 'none'}"]
    return res, lines


def _subalgebra_lines(res) -> list[str]:
    lines = [f"theta = ({','.join(map(str, res.theta))})"]
    for k in sorted(res.R, key=int):
        lines.append(f"  R_{k} = {_braces(res.R[k])}   T_{k} = {_braces(res.T[k])}")
    gens = ", ".join(f"Phi^{_braces(g.S)}({g.k},{g.m})" for g in res.generators) or "none"
    lines.append(f"  generators: {gens}")
    lines.append(f"  simple roots: {' '.join(res.simple_roots) or 'none'}")
    lines.append(f"  roots: {' '.join(res.roots) or 'none'}")
    return lines


def cmd_classify(args):
    res = service.classify(ThetaRequest(config=_config(args), theta=args.theta))
    return res, _subalgebra_lines(res)


def cmd_enumerate(args):
    res = service.enumerate_all(_config(args))
    lines = [f"{res.count} right coideal subalgebras for n={res.n}"]
    for row in res.subalgebras:
        lines.append(f"({','.join(map(str, row.theta))})  simple roots: {' '.join(row.simple_roots) or 'none'}")
    return res, lines


def cmd_lattice(args):
    res = service.hasse_diagram(_config(args))
    lines = [f"Hasse diagram for n={res.n} ({len(res.nodes)} nodes, edges point upward)"]
    for node in res.nodes:
        up = res.edges[node]
        lines.append(f"({node}) -> {' '.join(f'({u})' for u in up) if up else 'top'}")
    return res, lines


def cmd_verify(args):
    config = _config(args)
    if args.suite == "all":
        suites = list(service.SUITES)
    else:
        suites = [s.strip() for s in args.suite.split(",") if s.strip()]
    unknown = [s for s in suites if s not in service.SUITES]
    if unknown or not suites:
        raise BadInput(f"unknown suite {', '.join(unknown) or '(none)'}; "
                       f"choose from {', '.join(service.SUITES)}")
    reports = service.verify_many(config, suites)
    lines = []
    for rep in reports:
        lines.append(f"[{rep.suite}] {'PASS' if rep.ok else 'FAIL'}")
        for r in rep.results:
            tail = "" if r.ok else f"; first counterexample: {r.failures[0]}"
            lines.append(f"  {'PASS' if r.ok else 'FAIL'} {r.name} ({r.checked} cases{tail})")
    payload = {"ok": all(r.ok for r in reports), "suites": [r.model_dump() for r in reports]}
    return payload, lines


COMMANDS = {
    "phi": cmd_phi,
    "coproduct": cmd_coproduct,
    "decompose": cmd_decompose,
    "classify": cmd_classify,
    "enumerate": cmd_enumerate,
    "lattice": cmd_lattice,
    "verify": cmd_verify,
}


def _dump(payload) -> str:
    if hasattr(payload, "model_dump"):
        payload = payload.model_dump()
    return json.dumps(payload, sort_keys=True, indent=2)


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        payload, lines = COMMANDS[args.command](args)
    except ValidationError as exc:
        msgs = "; ".join(e["msg"] for e in exc.errors())
        print(f"error: {msgs}", file=sys.stderr)
        return EXIT_BAD_INPUT
    except (BadInput, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    print(_dump(payload) if args.json else "\n".join(lines))
    failed = (args.command == "verify" and not payload["ok"]) or \
             (args.command == "coproduct" and not payload.matches)
    return EXIT_FAILED if failed else 0


if __name__ == "__main__":
    sys.exit(main())

"""Command-line interface.

Exit codes:
    0  success / certificate accepted
    1  certificate rejected
    2  usage error or unreadable input
    3  alpha(G) > 2
    4  no Andrasfai target found up to --d-max
    5  other precondition failure
    6  internal construction error (a bug)
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Any

from .andrasfai import build_gamma, default_d_max, search_gamma_target
from .certificate import CertificateSchemaError, dumps_certificate, load_certificate
from .errors import AlphaTooLarge, ConstructionError, GammaTargetNotFound, GraphParseError, PreconditionError
from .gauthier import construct_2n5_immersion
from .generators import gen_blowup_complement, gen_random_alpha2
from .graph import Graph, parse_graph, serialize_graph
from .immersion import Finding, Violation, construct_from_clique_coloring, verify_immersion
from .oracles import chromatic_number_alpha2, clique_cover_number, gate_check, independence_number
from .vergara import construct_chi_immersion

EXIT_OK = 0
EXIT_REJECTED = 1
EXIT_USAGE = 2
EXIT_ALPHA = 3
EXIT_NO_TARGET = 4
EXIT_PRECONDITION = 5
EXIT_INTERNAL = 6


class InputError(Exception):
    pass


def _read_graph(path: str) -> Graph:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None
    try:
        return parse_graph(text)
    except GraphParseError as exc:
        raise InputError(f"{path}: {exc}") from None


def _csv_ints(text: str) -> list[int]:
    text = text.strip()
    return [int(x) for x in text.split(",")] if text else []


def _emit(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        Path(path).write_text(text, encoding="utf-8")


def _json(obj: Any) -> str:
    return json.dumps(obj, indent=1) + "\n"


def cmd_analyze(args: argparse.Namespace) -> int:
    g = _read_graph(args.graph)
    report = gate_check(g)
    lines = [
        f"n: {g.n}",
        f"m: {g.num_edges()}",
        f"max_degree: {g.max_degree()}",
        f"min_degree: {g.min_degree()}",
        f"alpha: {independence_number(g)}",
        f"alpha_le_2: {str(report.alpha_le_2).lower()}",
    ]
    if report.alpha_le_2:
        lines.append(f"chi: {chromatic_number_alpha2(g)}")
    else:
        lines.append("chi: n/a (alpha > 2)")
    cover = clique_cover_number(g, args.cap)
    lines.append(f"clique_cover: {cover if cover is not None else f'>{args.cap}'}")
    lines.append(f"thm4: {str(report.thm4).lower()}")
    lines.append(f"thm5: {str(report.thm5).lower()}")
    lines.append(f"guaranteed: {str(report.applies).lower()}")
    sys.stdout.write("\n".join(lines) + "\n")
    return EXIT_OK


def cmd_construct(args: argparse.Namespace) -> int:
    g = _read_graph(args.graph)
    trace: dict[str, Any] | None
    if args.method == "vergara":
        im, vtrace = construct_chi_immersion(g, args.d_max)
        trace = vtrace.to_dict()
    elif args.method == "gauthier":
        im, gtrace = construct_2n5_immersion(g)
        trace = gtrace.to_dict()
    else:
        if args.d1 is None or args.d2 is None or args.d3 is None:
            raise InputError("--method coloring needs --d1, --d2 and --d3")
        coloring = (_csv_ints(args.d1), _csv_ints(args.d2), _csv_ints(args.d3))
        im = construct_from_clique_coloring(g, coloring)
        trace = {"method": "coloring", "coloring": [sorted(p) for p in coloring]}
    if args.trace is not None:
        _emit(_json(trace), args.trace)
    _emit(dumps_certificate(im, g.n, args.method, args.trace), args.cert)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    g = _read_graph(args.graph)
    try:
        text = Path(args.certificate).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"{args.certificate}: {exc.strerror}") from None
    try:
        n, im, findings = load_certificate(text)
    except CertificateSchemaError as exc:
        findings = [Violation(Finding.MALFORMED, str(exc))]
        _print_report(False, None, None, findings, args.json)
        return EXIT_REJECTED
    if n != g.n:
        findings.append(Violation(Finding.MALFORMED, f"certificate is for n = {n}, graph has n = {g.n}"))
    report = verify_immersion(g, im, args.strong, args.totally_odd)
    findings.extend(report.violations)
    ok = not findings
    _print_report(ok, report.strong, report.totally_odd, findings, args.json)
    return EXIT_OK if ok else EXIT_REJECTED


def _print_report(ok: bool, strong: bool | None, odd: bool | None, findings: list[Violation], as_json: bool) -> None:
    if as_json:
        payload = {"valid": ok, "strong": strong, "totally_odd": odd, "violations": [f.to_dict() for f in findings]}
        sys.stdout.write(_json(payload))
        return
    lines = [f"valid: {str(ok).lower()}"]
    if strong is not None:
        lines.append(f"strong: {str(strong).lower()}")
        lines.append(f"totally_odd: {str(odd).lower()}")
    lines.extend(f"violation {f.kind.value}: {f.message}" for f in findings)
    sys.stdout.write("\n".join(lines) + "\n")


def cmd_generate(args: argparse.Namespace) -> int:
    if args.family == "blowup":
        g = gen_blowup_complement(args.d, _csv_ints(args.sizes), args.seed)
    else:
        g = gen_random_alpha2(args.n, args.p, args.seed)
    _emit(serialize_graph(g) + "\n", args.output)
    return EXIT_OK


def cmd_gamma(args: argparse.Namespace) -> int:
    _emit(serialize_graph(build_gamma(args.d).graph) + "\n", args.output)
    return EXIT_OK


def cmd_hom(args: argparse.Namespace) -> int:
    f = _read_graph(args.graph)
    found = search_gamma_target(f, args.d_max)
    if found is None:
        raise GammaTargetNotFound(args.d_max if args.d_max is not None else default_d_max(f.n))
    d, h = found
    sys.stdout.write(_json({"d": d, "map": list(h.map)}))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="clique-immersion", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="report n, degrees, alpha, chi, clique cover and the degree gates")
    p.add_argument("graph")
    p.add_argument("--cap", type=int, default=4, help="largest clique cover number to search")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("construct", help="build an immersion certificate")
    p.add_argument("graph")
    p.add_argument("--method", choices=("vergara", "gauthier", "coloring"), required=True)
    p.add_argument("--d-max", type=int, default=None)
    p.add_argument("--cert", default=None, help="certificate output path (default stdout)")
    p.add_argument("--trace", default=None, help="trace JSON output path")
    p.add_argument("--d1", default=None, help="comma-separated first class (coloring method)")
    p.add_argument("--d2", default=None)
    p.add_argument("--d3", default=None)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="check a certificate against a graph")
    p.add_argument("graph")
    p.add_argument("certificate")
    p.add_argument("--strong", action="store_true")
    p.add_argument("--totally-odd", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("generate", help="write a seeded alpha <= 2 instance")
    fam = p.add_subparsers(dest="family", required=True)
    b = fam.add_parser("blowup", help="complement of a Gamma_d blow-up")
    b.add_argument("--d", type=int, required=True)
    b.add_argument("--sizes", required=True, help="comma-separated class sizes (3d-1 of them)")
    r = fam.add_parser("random", help="complement of a random triangle-free graph")
    r.add_argument("--n", type=int, required=True)
    r.add_argument("--p", type=float, required=True)
    for q in (b, r):
        q.add_argument("--seed", type=int, default=0)
        q.add_argument("-o", "--output", default=None)
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("gamma", help="write the Andrasfai graph Gamma_d")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=cmd_gamma)

    p = sub.add_parser("hom", help="least d with a homomorphism from a triangle-free graph into Gamma_d")
    p.add_argument("graph")
    p.add_argument("--d-max", type=int, default=None)
    p.set_defaults(func=cmd_hom)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except AlphaTooLarge as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ALPHA
    except GammaTargetNotFound as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NO_TARGET
    except PreconditionError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except ConstructionError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())

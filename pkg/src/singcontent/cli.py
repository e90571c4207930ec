"""Command line interface.

Exit status: 0 on success, 1 when a mathematical check fails, 2 on bad input.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Callable

from singcontent.cones import (
    QuotientSingularityType,
    TypeParseError,
    decompose,
    format_residue,
    is_T_singularity,
    profile,
    residue,
    singularity_content as cone_content,
    type_to_cone,
)
from singcontent.hj import a_correction, hj_data
from singcontent.lattice import format_rational, gcd, rational_to_json
from singcontent.mutation import (
    Factor,
    InvariantViolation,
    MutationGraph,
    explore_orbit,
    mutate,
)
from singcontent.polygon import (
    FanoPolygon,
    PolygonError,
    degree,
    degree_oracle,
    ehrhart_hilbert_oracle,
    hilbert_series,
    noether_terms,
    picard_bound,
    picard_rank,
    polygon_from_json,
    singularity_content,
    wps_weights,
)

SCHEMA = "singcontent/1"

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_INPUT_ERROR = 2


class InputError(Exception):
    pass


def _type_json(sigma):
    return None if sigma is None else str(sigma)


def _content_json(sc) -> dict:
    return {"n": sc.n, "basket": [str(s) for s in sc.basket]}


def _rat_list(values) -> list[str]:
    return [rational_to_json(v) for v in values]


def _fmt_list(values) -> str:
    return "[" + ", ".join(format_rational(v) for v in values) + "]"


def load_polygon(path: str) -> FanoPolygon:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    if not text.strip():
        raise InputError(f"{path}: empty file")
    try:
        return polygon_from_json(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    except PolygonError as exc:
        raise InputError(f"{path}: {type(exc).__name__}: {exc}") from None


def required_terms(p: FanoPolygon) -> int:
    """Hilbert coefficients needed to cover every basket period twice."""
    periods = [s.r for s in singularity_content(p).basket]
    return max(20, 2 * max(periods, default=0) + 3)


# -- commands -------------------------------------------------------------


def cmd_cone(args) -> tuple[dict, list[str], int]:
    try:
        sigma = QuotientSingularityType.parse(args.type)
    except TypeParseError as exc:
        raise InputError(str(exc)) from None
    w, l, n, rho = profile(sigma)
    res = residue(sigma)
    try:
        pieces = decompose(type_to_cone(sigma), args.slot)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    t_flag = is_T_singularity(sigma)
    payload = {
        "input": args.type,
        "type": str(sigma),
        "r": sigma.r,
        "w": w,
        "l": l,
        "n": n,
        "rho": rho,
        "residue": _type_json(res),
        "content": {"n": n, "residue": _type_json(res)},
        "t_singularity": t_flag,
        "slot": args.slot,
        "decomposition": [str(t) for _, t in pieces],
    }
    lines = [
        f"type: {sigma}",
        f"r: {sigma.r}",
        f"width w: {w}",
        f"local index l: {l}",
        f"n: {n}",
        f"rho: {rho}",
        f"residue: {format_residue(res)}",
        f"content: {cone_content(sigma)}",
        f"T-singularity: {'yes' if t_flag else 'no'}",
        f"decomposition (m={args.slot}): " + ", ".join(str(t) for _, t in pieces),
    ]
    if sigma.r > 1:
        data = hj_data(sigma)
        A = a_correction(sigma)
        payload["hj"] = {
            "b": list(data.b),
            "alpha": list(data.alpha),
            "beta": list(data.beta),
            "discrepancies": _rat_list(data.d),
            "A": rational_to_json(A),
        }
        lines += [
            f"HJ continued fraction: {list(data.b)}",
            f"alpha: {list(data.alpha)}",
            f"beta: {list(data.beta)}",
            f"discrepancies: {_fmt_list(data.d)}",
            f"A: {format_rational(A)}",
        ]
    return payload, lines, EXIT_OK


def _polygon_report(p: FanoPolygon, terms: int) -> tuple[dict, list[str], bool]:
    sc = singularity_content(p)
    k2 = degree(p)
    k2_oracle = degree_oracle(p)
    hs = hilbert_series(p, terms)
    oracle = ehrhart_hilbert_oracle(p, terms)
    wps = wps_weights(p)
    rho, bound = picard_rank(p), picard_bound(p)
    lead = hs.leading_numerator
    payload = {
        "vertices": [[v.x, v.y] for v in p.vertices],
        "valid": True,
        "content": _content_json(sc),
        "degree": rational_to_json(k2),
        "degree_oracle": rational_to_json(k2_oracle),
        "degree_match": k2 == k2_oracle,
        "picard_rank": rho,
        "picard_bound": bound,
        "wps": None if wps is None else {"weights": list(wps.weights), "index": wps.index},
        "hilbert": {
            "leading_numerator": _rat_list(lead),
            "corrections": [
                {"type": str(c.sigma), "period": c.period, "numerator": _rat_list(c.numerator)}
                for c in hs.corrections
            ],
            "coefficients": list(hs.expanded),
            "oracle": oracle,
            "match": list(hs.expanded) == oracle,
        },
    }
    lines = [
        "valid Fano polygon: " + " ".join(f"({v.x},{v.y})" for v in p.vertices),
        f"singularity content: {sc}",
        f"degree (formula): {format_rational(k2)}",
        f"degree (dual area): {format_rational(k2_oracle)}",
        f"degree match: {'yes' if k2 == k2_oracle else 'NO'}",
        f"Picard rank: {rho} (bound n + |B| - 2 = {bound})",
    ]
    if wps is not None:
        w = ", ".join(str(x) for x in wps.weights)
        kind = "weighted projective plane" if wps.index == 1 else "fake weighted projective plane"
        lines.append(f"weights: ({w}), index {wps.index} ({kind})")
    lines.append(
        f"Hilbert series leading term: (1 + ({format_rational(lead[1])})t + t^2)/(1-t)^3"
    )
    for c in hs.corrections:
        lines.append(f"  correction {c.sigma}: numerator {_fmt_list(c.numerator)} / (1 - t^{c.period})")
    lines.append("coefficients: " + ",".join(str(x) for x in hs.expanded))
    lines.append(f"oracle match: {'yes' if list(hs.expanded) == oracle else 'NO'}")
    ok = k2 == k2_oracle and list(hs.expanded) == oracle and rho <= bound
    return payload, lines, ok


def cmd_polygon(args) -> tuple[dict, list[str], int]:
    p = load_polygon(args.file)
    payload, lines, ok = _polygon_report(p, args.terms)
    return payload, lines, EXIT_OK if ok else EXIT_CHECK_FAILED


def _parse_h(text: str) -> Factor:
    try:
        x, y = (int(part) for part in text.split(","))
    except ValueError:
        raise InputError(f"h must look like 'x,y', got {text!r}") from None
    if gcd(x, y) != 1:
        raise InputError(f"h=({x},{y}) is not primitive")
    return Factor.for_grading((x, y))


def cmd_mutate(args) -> tuple[dict, list[str], int]:
    p = load_polygon(args.file)
    text = args.h_opt if args.h_opt is not None else args.h
    if text is None:
        raise InputError("missing grading h")
    fac = _parse_h(text)
    q = mutate(p, fac)
    sc_p = singularity_content(p)
    payload = {
        "source": p.to_dict(),
        "h": list(fac.h),
        "f": list(fac.f),
        "target": None if q is None else q.to_dict(),
        "source_content": _content_json(sc_p),
        "target_content": None if q is None else _content_json(singularity_content(q)),
    }
    lines = [f"source content: {sc_p}"]
    if q is None:
        lines.append("no mutation exists for this h")
    else:
        lines.append(f"target content: {singularity_content(q)}")
        lines.append(json.dumps(q.to_dict()))
        if args.out:
            Path(args.out).write_text(json.dumps(q.to_dict()) + "\n")
    return payload, lines, EXIT_OK


def graph_to_json(graph: MutationGraph) -> dict:
    ids = {key: i for i, key in enumerate(sorted(graph.nodes))}
    nodes = []
    for key in sorted(graph.nodes):
        node = graph.nodes[key]
        wps = wps_weights(node.polygon)
        nodes.append(
            {
                "id": ids[key],
                "depth": node.depth,
                "vertices": [[v.x, v.y] for v in node.polygon.vertices],
                "normal_form": [[v.x, v.y] for v in node.normal_form.vertices],
                "content": _content_json(singularity_content(node.polygon)),
                "degree": rational_to_json(degree(node.polygon)),
                "weights": None if wps is None else list(wps.weights),
            }
        )
    edges = [
        {"source": ids[e.source], "target": ids[e.target], "h": list(e.factor.h), "f": list(e.factor.f)}
        for e in graph.edges
    ]
    return {
        "root": ids[graph.root],
        "content": _content_json(graph.content),
        "degree": rational_to_json(graph.degree),
        "max_depth": graph.max_depth,
        "truncated": graph.truncated,
        "nodes": nodes,
        "edges": edges,
    }


def graph_to_dot(graph: MutationGraph) -> str:
    ids = {key: i for i, key in enumerate(sorted(graph.nodes))}
    out = ["graph mutations {"]
    for key in sorted(graph.nodes):
        node = graph.nodes[key]
        wps = wps_weights(node.polygon)
        if wps is not None:
            label = "P(" + ",".join(str(x) for x in wps.weights) + ")"
            if wps.index != 1:
                label += f"/{wps.index}"
        else:
            label = " ".join(f"({v.x},{v.y})" for v in node.polygon.vertices)
        out.append(f'  n{ids[key]} [label="{label}"];')
    for e in graph.edges:
        out.append(f'  n{ids[e.source]} -- n{ids[e.target]} [label="h=({e.factor.h.x},{e.factor.h.y})"];')
    out.append("}")
    return "\n".join(out) + "\n"


def cmd_orbit(args) -> tuple[dict, list[str], int]:
    p = load_polygon(args.file)
    if args.depth < 0 or args.max_nodes < 1:
        raise InputError("--depth must be >= 0 and --max-nodes >= 1")
    try:
        graph = explore_orbit(p, args.depth, args.max_nodes)
    except InvariantViolation as exc:
        return {"error": str(exc)}, [f"invariant violation: {exc}"], EXIT_CHECK_FAILED
    data = graph_to_json(graph)
    lines = [
        f"nodes: {len(graph.nodes)}",
        f"edges: {len(graph.edges)}",
        f"content: {graph.content}",
        f"degree: {format_rational(graph.degree)}",
    ]
    if graph.truncated:
        lines.append(f"truncated at {args.max_nodes} nodes")
    if args.out:
        base = Path(args.out)
        if base.suffix in (".json", ".dot"):
            base = base.with_suffix("")
        json_path, dot_path = base.with_suffix(".json"), base.with_suffix(".dot")
        json_path.write_text(json.dumps({"schema": SCHEMA, **data}, indent=2) + "\n")
        dot_path.write_text(graph_to_dot(graph))
        lines.append(f"wrote {json_path} and {dot_path}")
    return data, lines, EXIT_OK


def run_checks(p: FanoPolygon) -> list[dict]:
    """Every identity that should hold for `p`, as ``{name, ok, detail}``."""
    checks = []
    k2, k2o = degree(p), degree_oracle(p)
    checks.append(
        {"name": "degree", "ok": k2 == k2o,
         "detail": f"formula {format_rational(k2)} vs dual area {format_rational(k2o)}"}
    )
    terms = required_terms(p)
    hs = hilbert_series(p, terms).expanded
    oracle = ehrhart_hilbert_oracle(p, terms)
    bad = [m for m in range(terms) if hs[m] != oracle[m]]
    checks.append(
        {"name": "hilbert", "ok": not bad,
         "detail": f"{terms} coefficients" + (f", first mismatch at t^{bad[0]}" if bad else "")}
    )
    rho, bound = picard_rank(p), picard_bound(p)
    checks.append({"name": "picard_bound", "ok": rho <= bound, "detail": f"{rho} <= {bound}"})
    if not singularity_content(p).basket:
        nk2, nrho, mu = noether_terms(p)
        checks.append(
            {"name": "noether", "ok": nk2 + nrho + mu == 10,
             "detail": f"{format_rational(nk2)} + {nrho} + {mu} = {format_rational(nk2 + nrho + mu)}"}
        )
    return checks


def cmd_check(args) -> tuple[dict, list[str], int]:
    p = load_polygon(args.file)
    checks = run_checks(p)
    failures = [c["name"] for c in checks if not c["ok"]]
    payload = {"checks": checks, "failures": failures, "ok": not failures}
    lines = [f"{'PASS' if c['ok'] else 'FAIL'} {c['name']}: {c['detail']}" for c in checks]
    if failures:
        lines.append("failures: " + ",".join(failures))
    return payload, lines, EXIT_CHECK_FAILED if failures else EXIT_OK


# -- entry point ----------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    # subcommands must not reset a --json given before the subcommand name
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="emit a single JSON object")

    parser = argparse.ArgumentParser(
        prog="singcontent",
        description="Singularity content of cyclic quotient singularities and Fano polygons.",
    )
    parser.add_argument("--json", action="store_true", help="emit a single JSON object")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("cone", parents=[common], help="analyse a singularity 1/r(a,b)")
    p.add_argument("type", help="singularity type such as 1/60(1,23)")
    p.add_argument("--slot", type=int, default=0, help="position of the residual subcone (default 0)")
    p.set_defaults(func=cmd_cone)

    p = sub.add_parser("polygon", parents=[common], help="report on a Fano polygon file")
    p.add_argument("file")
    p.add_argument("--terms", type=int, default=12, help="Hilbert coefficients to print (default 12)")
    p.set_defaults(func=cmd_polygon)

    p = sub.add_parser("mutate", parents=[common], help="mutate a polygon along a grading h")
    p.add_argument("file")
    p.add_argument("h", nargs="?", help="primitive grading as 'x,y' (use --h=x,y when x < 0)")
    p.add_argument("--h", dest="h_opt", metavar="X,Y", help="grading given as an option")
    p.add_argument("--out", help="also write the mutated polygon JSON here")
    p.set_defaults(func=cmd_mutate)

    p = sub.add_parser("orbit", parents=[common], help="explore the mutation orbit of a polygon")
    p.add_argument("file")
    p.add_argument("--depth", type=int, default=3)
    p.add_argument("--max-nodes", type=int, default=1000)
    p.add_argument("--out", help="base path for the .json and .dot graph files")
    p.set_defaults(func=cmd_orbit)

    p = sub.add_parser("check", parents=[common], help="verify all identities for one polygon")
    p.add_argument("file")
    p.set_defaults(func=cmd_check)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    func: Callable = args.func
    try:
        payload, lines, status = func(args)
    except InputError as exc:
        if args.json:
            print(json.dumps({"schema": SCHEMA, "command": args.command, "error": str(exc)}))
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    if args.json:
        print(json.dumps({"schema": SCHEMA, "command": args.command, **payload}))
    else:
        print("\n".join(lines))
    return status


if __name__ == "__main__":
    raise SystemExit(main())

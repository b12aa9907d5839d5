"""Command-line entry point.

Exit status: 0 feasible / valid / agreement, 1 infeasible / invalid /
counterexample, 2 usage or parse error, 3 size limit exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Optional, Sequence, TextIO

from .criteria import CERTIFICATE_VERTEX_LIMIT, Certificate, delta, eta, verify_factor, verify_orientation
from .factor import find_parity_orientation, solve_parity_factor
from .graph import Bounds, Graph, GraphError, ParseError, SizeLimitError, parse_graph, serialize_graph
from .oracle import STYLES, ValidationConfig, cross_validate, random_instance
from .subdivision import lift_bounds, out_degrees, subdivide

EXIT_OK, EXIT_NO, EXIT_USAGE, EXIT_LIMIT = 0, 1, 2, 3


class _Out:
    def __init__(self, stream: TextIO, structured: bool):
        self.stream = stream
        self.structured = structured

    def record(self, **fields: Any) -> None:
        self.stream.write(json.dumps(fields) + "\n")

    def line(self, text: str = "") -> None:
        self.stream.write(text + "\n")


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


def _load(path: str) -> tuple[Graph, Bounds]:
    return parse_graph(_read_text(path))


def _vertex_list(text: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    try:
        return [int(x) for x in text.replace(",", " ").split()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated vertex ids, got {text!r}") from None


def _fmt_set(vs) -> str:
    return "{" + ", ".join(str(v) for v in sorted(vs)) + "}"


def _emit_components(out: _Out, comps) -> None:
    for c in comps:
        if out.structured:
            out.record(
                odd_component=c.sorted_vertices(),
                inner_edges=c.inner_edges,
                to_s=c.to_s,
                to_t=c.to_t,
            )
        else:
            out.line(
                f"  odd component {_fmt_set(c.vertices)}: inner={c.inner_edges} "
                f"to_S={c.to_s} to_T={c.to_t}"
            )


def _emit_certificate(out: _Out, cert: Certificate, name: str) -> None:
    if out.structured:
        out.record(status="infeasible", S=sorted(cert.s), T=sorted(cert.t), **{name: cert.value})
    else:
        out.line("infeasible")
        out.line(f"S = {_fmt_set(cert.s)}")
        out.line(f"T = {_fmt_set(cert.t)}")
        out.line(f"{name} = {cert.value}")
    _emit_components(out, cert.odd_components)


def _emit_uncertified(out: _Out, limit: int) -> None:
    if out.structured:
        out.record(status="infeasible", certificate=None, certificate_limit=limit)
    else:
        out.line("infeasible")
        out.line(f"# no certificate: instance exceeds the {limit}-vertex search limit")


def cmd_orient(args, out: _Out) -> int:
    graph, bounds = _load(args.graph)
    result = find_parity_orientation(graph, bounds, args.cert_limit)
    if result.feasible:
        tails = result.orientation
        if out.structured:
            out.record(status="feasible", edges=graph.m)
            for i, t in enumerate(tails):
                out.record(edge=i, tail=t, head=graph.other(i, t))
        else:
            out.line("# feasible")
            out.line("# out-degrees: " + " ".join(map(str, out_degrees(graph, tails))))
            for i, t in enumerate(tails):
                out.line(f"{i} {t}")
        return EXIT_OK
    if result.certificate is None:
        _emit_uncertified(out, args.cert_limit)
    else:
        _emit_certificate(out, result.certificate, "eta")
    return EXIT_NO


def cmd_factor(args, out: _Out) -> int:
    graph, bounds = _load(args.graph)
    result = solve_parity_factor(graph, bounds, args.cert_limit)
    if result.feasible:
        chosen = sorted(result.factor)
        if out.structured:
            out.record(status="feasible", edges=len(chosen))
            for e in chosen:
                u, w = graph.edges[e]
                out.record(edge=e, u=u, w=w)
        else:
            out.line("# feasible")
            for e in chosen:
                out.line(str(e))
        return EXIT_OK
    if result.certificate is None:
        _emit_uncertified(out, args.cert_limit)
    else:
        _emit_certificate(out, result.certificate, "delta")
    return EXIT_NO


def cmd_check(args, out: _Out) -> int:
    graph, bounds = _load(args.graph)
    eta_value, eta_odd = eta(graph, bounds, args.s, args.t)
    delta_value, delta_odd = delta(graph, bounds, args.s, args.t)
    if out.structured:
        out.record(S=sorted(set(args.s)), T=sorted(set(args.t)), eta=eta_value, delta=delta_value)
        for name, comps in (("eta", eta_odd), ("delta", delta_odd)):
            for c in comps:
                out.record(
                    criterion=name,
                    odd_component=c.sorted_vertices(),
                    inner_edges=c.inner_edges,
                    to_s=c.to_s,
                    to_t=c.to_t,
                )
    else:
        out.line(f"S = {_fmt_set(args.s)}")
        out.line(f"T = {_fmt_set(args.t)}")
        out.line(f"eta = {eta_value}")
        _emit_components(out, eta_odd)
        out.line(f"delta = {delta_value}")
        _emit_components(out, delta_odd)
    return EXIT_NO if min(eta_value, delta_value) < 0 else EXIT_OK


def parse_witness(text: str, graph: Graph, kind: str) -> list[int]:
    """Witness lines: ``edge tail`` for orientations, ``edge`` for factors."""
    fields = 2 if kind == "orientation" else 1
    seen: dict[int, int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != fields:
            raise ParseError(lineno, f"expected {fields} integers, got {len(parts)} fields")
        try:
            nums = [int(p) for p in parts]
        except ValueError:
            raise ParseError(lineno, f"non-integer field in {line!r}") from None
        e = nums[0]
        if not 0 <= e < graph.m:
            raise ParseError(lineno, f"edge index {e} out of range")
        if e in seen:
            raise ParseError(lineno, f"edge {e} listed twice")
        seen[e] = nums[-1]
    if kind == "factor":
        return sorted(seen)
    missing = [e for e in range(graph.m) if e not in seen]
    if missing:
        raise GraphError(f"orientation does not cover edges {missing}")
    return [seen[e] for e in range(graph.m)]


def cmd_verify(args, out: _Out) -> int:
    graph, bounds = _load(args.graph)
    witness = parse_witness(_read_text(args.witness), graph, args.kind)
    if args.kind == "orientation":
        verdict = verify_orientation(graph, bounds, witness)
    else:
        verdict = verify_factor(graph, bounds, witness)
    if out.structured:
        out.record(valid=verdict.ok, violations=len(verdict.violations))
        for v in verdict.violations:
            out.record(vertex=v.vertex, degree=v.degree, g=v.g, f=v.f)
    else:
        out.line("valid" if verdict.ok else "invalid")
        for v in verdict.violations:
            out.line(f"  vertex {v.vertex}: degree {v.degree} not in {{{v.g}, {v.g}+2, ..., {v.f}}}")
    return EXIT_OK if verdict.ok else EXIT_NO


def cmd_subdivide(args, out: _Out) -> int:
    graph, bounds = _load(args.graph)
    sm = subdivide(graph)
    header = [f"subdivision of a graph with {graph.n} vertices and {graph.m} edges"]
    header += [f"y {sm.y_vertex(i)} = edge {i} ({u}, {w})" for i, (u, w) in enumerate(graph.edges)]
    out.stream.write(serialize_graph(sm.sub_graph, lift_bounds(sm, bounds), header))
    return EXIT_OK


def cmd_validate(args, out: _Out) -> int:
    config = ValidationConfig(args.seed, args.trials, args.n_max, args.m_max, args.style)
    report = cross_validate(config)
    if out.structured:
        out.record(
            instances=report.instances,
            agreements=report.agreements,
            counts=dict(sorted(report.counts.items())),
            counterexample=report.counterexample,
        )
    else:
        for line in report.lines():
            out.line(line)
    return EXIT_OK if report.ok else EXIT_NO


def cmd_gen(args, out: _Out) -> int:
    graph, bounds = random_instance(args.seed, args.n, args.density, args.style, args.max_edges)
    comment = f"seed={args.seed} n={args.n} density={args.density} style={args.style}"
    out.stream.write(serialize_graph(graph, bounds, [comment]))
    return EXIT_OK


def _positive(text: str) -> int:
    value = int(text)
    if value <= 0:
        raise argparse.ArgumentTypeError("must be positive")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="parityorient",
        description="Exact (g,f)-parity orientations and parity factors with infeasibility certificates.",
    )
    parser.add_argument("--format", choices=("human", "structured"), default="human",
                        help="structured output is one JSON record per line")
    sub = parser.add_subparsers(dest="command", required=True)

    def graph_cmd(name: str, help: str):
        p = sub.add_parser(name, help=help)
        p.add_argument("graph", help="graph file, or - for stdin")
        return p

    for name, help in (("orient", "find a parity orientation or a certificate"),
                       ("factor", "find a parity factor or a certificate")):
        p = graph_cmd(name, help)
        p.add_argument("--cert-limit", type=_positive, default=CERTIFICATE_VERTEX_LIMIT,
                       help="largest vertex count for the exhaustive certificate search")

    p = graph_cmd("check", "evaluate eta and delta on an explicit pair (S, T); exits 1 if either is negative")
    p.add_argument("--s", type=_vertex_list, default=[], help="comma-separated vertex ids")
    p.add_argument("--t", type=_vertex_list, default=[], help="comma-separated vertex ids")

    p = graph_cmd("verify", "check a witness file against the graph's bounds")
    p.add_argument("witness", help="witness file: 'edge tail' lines or 'edge' lines")
    p.add_argument("--kind", choices=("orientation", "factor"), default="orientation")

    graph_cmd("subdivide", "emit the subdivided graph with lifted bounds")

    p = sub.add_parser("validate", help="cross-check the characterizations against brute force")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=200)
    p.add_argument("--n-max", type=int, default=7)
    p.add_argument("--m-max", type=int, default=12)
    p.add_argument("--style", choices=STYLES + ("any",), default="any")

    p = sub.add_parser("gen", help="emit a random instance")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--n", type=_positive, default=6)
    p.add_argument("--density", type=float, default=0.5)
    p.add_argument("--style", choices=STYLES, default="mixed")
    p.add_argument("--max-edges", type=int, default=None)
    return parser


COMMANDS = {
    "orient": cmd_orient,
    "factor": cmd_factor,
    "check": cmd_check,
    "verify": cmd_verify,
    "subdivide": cmd_subdivide,
    "validate": cmd_validate,
    "gen": cmd_gen,
}


def run_cli(argv: Optional[Sequence[str]] = None, stdout: TextIO = None, stderr: TextIO = None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    out = _Out(stdout, args.format == "structured")
    try:
        return COMMANDS[args.command](args, out)
    except SizeLimitError as exc:
        stderr.write(f"error: {exc}\n")
        return EXIT_LIMIT
    except (GraphError, OSError, ValueError) as exc:
        stderr.write(f"error: {exc}\n")
        return EXIT_USAGE


def main() -> None:
    sys.exit(run_cli())

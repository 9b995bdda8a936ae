"""Command-line frontend: one subcommand per pipeline stage.

Exit codes: 0 success/verified, 1 verification failure, 2 input error,
3 solver non-convergence.  Output is JSON by default (floats serialized
with shortest round-trip representation, so identical runs are
byte-identical); ``--format text`` renders small human tables.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

import numpy as np

from . import graph as graph_mod
from . import instances as instances_mod
from . import loor as loor_mod
from . import realify as realify_mod
from . import theta as theta_mod

__all__ = ["RunConfig", "main", "run"]

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_INPUT_ERROR = 2
EXIT_NO_CONVERGENCE = 3


@dataclass
class RunConfig:
    command: str
    tol: float = 1e-8
    max_iters: int = 200_000
    rank_tol: float = 1e-7
    ortho_tol: float = 1e-9
    fmt: str = "json"
    output: str | None = None
    seed: int = 0  # reserved; the solvers are deterministic

    def __post_init__(self):
        for name in ("tol", "rank_tol", "ortho_tol"):
            if getattr(self, name) <= 0:
                raise ValueError(f"--{name.replace('_', '-')} must be positive")
        if self.max_iters < 1:
            raise ValueError("--max-iters must be at least 1")


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _emit(text: str, cfg: RunConfig) -> None:
    if cfg.output:
        with open(cfg.output, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        sys.stdout.write(text + "\n")


def _render(payload: dict, cfg: RunConfig) -> str:
    if cfg.fmt == "json":
        return json.dumps(payload, indent=2)
    lines = []
    for key, value in payload.items():
        if isinstance(value, list):
            if value and isinstance(value[0], list):
                lines.append(f"{key}:")
                lines.extend("  " + "  ".join(repr(x) for x in row) for row in value)
            else:
                lines.append(f"{key}: " + " ".join(repr(x) for x in value))
        else:
            lines.append(f"{key}: {value!r}" if isinstance(value, float) else f"{key}: {value}")
    return "\n".join(lines)


def _load_graph(path: str) -> graph_mod.ExclusivityGraph:
    return graph_mod.parse_graph(_read_text(path))


def _load_rep(path: str) -> loor_mod.OrthRep:
    return loor_mod.parse_rep(_read_text(path))


def _cfg_from(args) -> RunConfig:
    return RunConfig(
        command=args.command,
        tol=getattr(args, "tol", 1e-8),
        max_iters=getattr(args, "max_iters", 200_000),
        rank_tol=getattr(args, "rank_tol", 1e-7),
        ortho_tol=getattr(args, "ortho_tol", 1e-9),
        fmt=args.format,
        output=args.output,
        seed=getattr(args, "seed", 0),
    )


def _cmd_theta(args) -> int:
    cfg = _cfg_from(args)
    g = _load_graph(args.graph_path)
    solve = theta_mod.lovasz_theta if args.field == "real" else theta_mod.lovasz_theta_complex
    sol = solve(g, tol=cfg.tol, max_iters=cfg.max_iters)
    _emit(_render({
        "value": sol.value,
        "converged": sol.converged,
        "primal_residual": sol.primal_residual,
        "psd_residual": sol.psd_residual,
        "iterations": sol.iterations,
    }, cfg), cfg)
    return EXIT_OK if sol.converged else EXIT_NO_CONVERGENCE


def _cmd_alpha(args) -> int:
    cfg = _cfg_from(args)
    g = _load_graph(args.graph_path)
    alpha, witness = graph_mod.independence_number(g)
    _emit(_render({"alpha": alpha, "witness": list(witness)}, cfg), cfg)
    return EXIT_OK


def _cmd_extract(args) -> int:
    cfg = _cfg_from(args)
    g = _load_graph(args.graph_path)
    sol = theta_mod.lovasz_theta(g, tol=cfg.tol, max_iters=cfg.max_iters)
    if not sol.converged:
        print(f"solver did not converge within {cfg.max_iters} iterations", file=sys.stderr)
        return EXIT_NO_CONVERGENCE
    rep = loor_mod.rep_from_gram(sol.X, g, rank_tol=cfg.rank_tol)
    _emit(loor_mod.serialize_rep(rep, indent=2), cfg)
    return EXIT_OK


def _cmd_realify(args) -> int:
    cfg = _cfg_from(args)
    rep = _load_rep(args.rep_path)
    n = rep.n
    g = graph_mod.ExclusivityGraph(n=n, weights=np.ones(n), edges=())
    convert = (realify_mod.projector_realify if args.method == "projector"
               else realify_mod.vector_realify)
    _emit(loor_mod.serialize_rep(convert(rep, g), indent=2), cfg)
    return EXIT_OK


def _cmd_verify(args) -> int:
    cfg = _cfg_from(args)
    rep = _load_rep(args.rep_path)
    g = _load_graph(args.graph)
    report = loor_mod.verify_rep(
        rep, g, tol=cfg.tol, target=args.target, value_tol=args.value_tol,
        with_sic=args.sic,
    )
    payload = {
        "passed": report.passed,
        "value": report.value,
        "max_norm_residual": report.max_norm_residual,
        "max_edge_residual": report.max_edge_residual,
        "per_vertex_overlap": [float(x) for x in report.per_vertex_overlap],
    }
    if report.target is not None:
        payload["target"] = report.target
    if args.sic:
        payload["sic"] = report.sic
        payload["sic_spectrum"] = [float(x) for x in report.sic_spectrum]
    _emit(_render(payload, cfg), cfg)
    return EXIT_OK if report.passed else EXIT_VERIFY_FAILED


def _cmd_orthograph(args) -> int:
    cfg = _cfg_from(args)
    rep = _load_rep(args.rep_path)
    if args.weights is not None:
        try:
            weights = [float(x) for x in args.weights.split(",")]
        except ValueError as exc:
            raise ValueError(f"--weights must be comma-separated numbers: {exc}") from exc
    else:
        weights = None
    g = graph_mod.orthogonality_graph(rep.vectors, weights, tol=cfg.ortho_tol)
    worst = graph_mod.max_edge_overlap(rep.vectors, g)
    print(f"orthogonality threshold {cfg.ortho_tol!r}, "
          f"max accepted-edge overlap {worst!r}", file=sys.stderr)
    _emit(graph_mod.serialize_graph(g, indent=2), cfg)
    return EXIT_OK


def _cmd_instance(args) -> int:
    cfg = _cfg_from(args)
    by_name = {inst.name: inst for inst in instances_mod.all_instances()}
    if args.name not in by_name:
        raise ValueError(f"unknown instance {args.name!r}; available: {sorted(by_name)}")
    inst = by_name[args.name]
    if args.what == "graph":
        _emit(graph_mod.serialize_graph(inst.graph, indent=2), cfg)
        return EXIT_OK
    rep = inst.complex_rep if args.what == "rep-complex" else inst.real_rep
    if rep is None:
        raise ValueError(f"instance {args.name!r} has no {args.what} representation")
    _emit(loor_mod.serialize_rep(rep, indent=2), cfg)
    return EXIT_OK


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.add_argument("--output", default=None, help="write to this path instead of stdout")


def _add_solver_opts(p: argparse.ArgumentParser) -> None:
    p.add_argument("--tol", type=float, default=1e-8)
    p.add_argument("--max-iters", type=int, default=200_000, dest="max_iters")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="loorkit",
        description="Weighted Lovász numbers and real/complex optimal "
                    "orthogonal representations of exclusivity graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("theta", help="solve the Lovász-number SDP for a graph file")
    p.add_argument("graph_path", nargs="?", default="-")
    p.add_argument("--field", choices=("real", "complex"), default="real")
    _add_solver_opts(p)
    _add_common(p)
    p.set_defaults(func=_cmd_theta)

    p = sub.add_parser("alpha", help="exact weighted independence number")
    p.add_argument("graph_path", nargs="?", default="-")
    _add_common(p)
    p.set_defaults(func=_cmd_alpha)

    p = sub.add_parser("extract", help="solve, then extract a representation")
    p.add_argument("graph_path", nargs="?", default="-")
    _add_solver_opts(p)
    p.add_argument("--rank-tol", type=float, default=1e-7, dest="rank_tol")
    _add_common(p)
    p.set_defaults(func=_cmd_extract)

    p = sub.add_parser("realify", help="convert a complex representation to a real one")
    p.add_argument("rep_path", nargs="?", default="-")
    p.add_argument("--method", choices=("projector", "vector"), required=True)
    _add_common(p)
    p.set_defaults(func=_cmd_realify)

    p = sub.add_parser("verify", help="check a representation against a graph")
    p.add_argument("rep_path", nargs="?", default="-")
    p.add_argument("--graph", required=True, help="graph file the representation claims")
    p.add_argument("--tol", type=float, default=1e-8)
    p.add_argument("--target", type=float, default=None)
    p.add_argument("--value-tol", type=float, default=1e-6, dest="value_tol")
    p.add_argument("--sic", action="store_true", help="report the operator spectrum")
    _add_common(p)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("orthograph", help="derive the exclusivity graph of a vector file")
    p.add_argument("rep_path", nargs="?", default="-")
    p.add_argument("--weights", default=None, help="comma-separated vertex weights")
    p.add_argument("--ortho-tol", type=float, default=1e-9, dest="ortho_tol")
    _add_common(p)
    p.set_defaults(func=_cmd_orthograph)

    p = sub.add_parser("instance", help="emit a built-in instance document")
    p.add_argument("name")
    p.add_argument("--what", choices=("graph", "rep-complex", "rep-real"), default="graph")
    _add_common(p)
    p.set_defaults(func=_cmd_instance)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT_ERROR if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR


def run() -> None:
    sys.exit(main())

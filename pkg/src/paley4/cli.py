"""Command-line interface.

Exit codes: 0 success, 1 property violation / negative verdict,
2 input error, 3 search budget exceeded.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
import time
from pathlib import Path

from . import designs, io
from .errors import BudgetExceeded, FormatError, Paley4Error
from .field import field_make, parse_modulus
from .hypergraph import (
    Hypergraph,
    de_caen_bound,
    design_parameters,
    fingerprint,
    gamma_graph,
    max_triangles_per_edge,
    verify_span,
)
from .realize import DEFAULT_BUDGET, odd_cycle_obstruction, realize_as_tournament
from .tournament import (
    Tournament,
    baber_density,
    baber_hypergraph,
    extended_paley_tournament,
    paley_tournament,
    switch,
    switching_equivalent,
)

EXIT_OK, EXIT_VIOLATION, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2, 3

CONSTRUCT_KINDS = (
    "paley-hypergraph",
    "paley-tournament",
    "extended-paley",
    "m11",
    "two-graph-example",
    "non-tournament-example",
)


class InputError(Exception):
    pass


class Report:
    """Ordered key/value results, printed as ``key: value`` lines."""

    def __init__(self, command: str):
        self.data: dict = {"command": command}
        self.started = time.perf_counter()

    def __setitem__(self, key, value):
        self.data[key] = value

    def lines(self, status: int) -> list[str]:
        out = []
        for key, value in self.data.items():
            if isinstance(value, dict):
                out += [f"{key}.{k}: {_fmt(v)}" for k, v in value.items()]
            else:
                out.append(f"{key}: {_fmt(value)}")
        out.append(f"duration_s: {time.perf_counter() - self.started:.3f}")
        out.append(f"exit_status: {status}")
        return out

    def finish(self, status: int, report_out: str | None) -> int:
        print("\n".join(self.lines(status)))
        if report_out:
            # duration is left out so the file is identical across runs
            payload = dict(self.data, exit_status=status)
            Path(report_out).write_text(json.dumps(payload, indent=2, default=_jsonable) + "\n")
        return status


def _fmt(value) -> str:
    if isinstance(value, (list, tuple)):
        return " ".join(_fmt(v) for v in value) if value else "-"
    if isinstance(value, dict):
        return " ".join(f"{k}={v}" for k, v in value.items())
    if isinstance(value, bool):
        return "true" if value else "false"
    if value is None:
        return "-"
    return str(value)


def _jsonable(value):
    if isinstance(value, (set, frozenset)):
        return sorted(value)
    return str(value)


def _digest(path: str) -> str:
    try:
        return hashlib.sha256(Path(path).read_bytes()).hexdigest()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from None


def _field(args):
    if args.q is not None:
        if args.p is not None and args.p != args.q:
            raise InputError("--q and --p disagree")
        args.p, args.ell = args.q, 1
    if args.p is None:
        raise InputError("a field is required: pass --p (and --ell/--modulus) or --q")
    try:
        return field_make(args.p, args.ell, parse_modulus(args.modulus))
    except ValueError as exc:
        raise InputError(str(exc)) from None


def _read(path: str, kind: type):
    try:
        obj = io.read_any(path)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from None
    except FormatError as exc:
        raise InputError(f"{path}: {exc}") from None
    if not isinstance(obj, kind):
        raise InputError(f"{path}: expected a {kind.__name__.lower()} file")
    return obj


def _write(obj, out: str | None) -> None:
    if out:
        io.write_text(out, obj)
    else:
        text = io.hypergraph_to_text(obj) if isinstance(obj, Hypergraph) else io.tournament_to_text(obj)
        sys.stdout.write(text)


# -- subcommands ------------------------------------------------------------------

def cmd_construct(args) -> int:
    rep = Report("construct")
    rep["kind"] = args.kind
    if args.kind in ("paley-hypergraph", "paley-tournament", "extended-paley"):
        spec = _field(args)
        rep["field"] = {"p": spec.p, "ell": spec.ell, "q": spec.q, "modulus": list(spec.modulus)}
        if not spec.paley_admissible:
            raise InputError(f"q = {spec.q} is not 3 mod 4")
        from .hypergraph import build_paley_hypergraph

        builder = {
            "paley-hypergraph": build_paley_hypergraph,
            "paley-tournament": paley_tournament,
            "extended-paley": extended_paley_tournament,
        }[args.kind]
        obj = builder(spec)
    elif args.kind == "m11":
        obj = designs.load_m11()
    elif args.kind == "two-graph-example":
        obj = designs.two_graph_from_graph(designs.two_graph_example_graph())
    else:
        obj = designs.non_tournament_example()
    _write(obj, args.out)
    rep["n"] = obj.n
    if isinstance(obj, Hypergraph):
        rep["k"] = obj.k
        rep["edges"] = obj.num_edges
    else:
        rep["pairs"] = len(obj.orient)
        rep["sinks"] = [v for v, d in enumerate(obj.out_degrees().tolist()) if d == 0]
    rep["digest"] = obj.digest() if isinstance(obj, Hypergraph) else hashlib.sha256(
        io.tournament_to_text(obj).encode()).hexdigest()
    if args.out:
        rep["out"] = args.out
    return rep.finish(EXIT_OK, args.report_out) if args.out else EXIT_OK


def _check_gamma(h: Hypergraph) -> dict:
    g = gamma_graph(h)
    degrees = sorted(set(g.degrees()))
    regular = len(degrees) == 1
    tri = max_triangles_per_edge(g)
    summary = f"{degrees[0]}-regular, {g.n} vertices" if regular else f"irregular, {g.n} vertices"
    return {"ok": regular and tri <= 1, "summary": summary, "degrees": degrees,
            "max_triangles_per_edge": tri}


def cmd_verify(args) -> int:
    rep = Report("verify")
    rep["input"] = args.path
    rep["input_sha256"] = _digest(args.path)
    h = _read(args.path, Hypergraph)
    rep["n"], rep["k"], rep["edges"] = h.n, h.k, h.num_edges
    props = []
    if args.zero_or_two:
        props.append("zero-or-two")
    if args.at_most_two:
        props.append("at-most-two")
    if args.design is not None:
        props.append(f"design:t={args.design}")
    if args.de_caen:
        props.append("de-caen")
    if args.two_graph:
        props.append("two-graph")
    if args.gamma:
        props.append("gamma")
    if not props:
        props = ["two-graph"] if h.k == 3 else ["zero-or-two", "at-most-two", "design:t=3", "de-caen"]
    rep["properties"] = props
    all_ok = True
    for prop in props:
        if prop in ("zero-or-two", "at-most-two", "two-graph"):
            if prop == "two-graph" and h.k != 3:
                raise InputError("two-graph property needs a 3-uniform hypergraph")
            mode = {"zero-or-two": "exactly-0-or-2", "at-most-two": "at-most-2", "two-graph": "even"}[prop]
            r = verify_span(h, mode)
            res = {"ok": r.ok, "histogram": r.counts, "violation": r.first_violation}
        elif prop.startswith("design:t="):
            t = int(prop.split("=")[1])
            if not 0 <= t < h.k:
                raise InputError(f"design strength must be below k = {h.k}")
            r = design_parameters(h, t)
            res = {"ok": r.is_design, "lambda": r.lam, "histogram": r.histogram}
        elif prop == "de-caen":
            if h.k < 2 or h.k > h.n:
                raise InputError("de Caen bound needs 2 <= k <= n")
            bound = de_caen_bound(h.n, h.k)
            res = {"ok": h.num_edges <= bound, "bound": str(bound), "equality": h.num_edges == bound}
        else:
            if h.k != 4:
                raise InputError("gamma graph property needs a 4-uniform hypergraph")
            res = _check_gamma(h)
        rep[prop] = res
        all_ok &= bool(res["ok"])
    return rep.finish(EXIT_OK if all_ok else EXIT_VIOLATION, args.report_out)


def cmd_baber(args) -> int:
    rep = Report("baber")
    rep["input"] = args.path
    rep["input_sha256"] = _digest(args.path)
    h = baber_hypergraph(_read(args.path, Tournament))
    _write(h, args.out)
    rep["n"], rep["edges"], rep["digest"] = h.n, h.num_edges, h.digest()
    return rep.finish(EXIT_OK, args.report_out) if args.out else EXIT_OK


def _parse_subset(text: str, n: int) -> list[int]:
    try:
        verts = [int(tok) for tok in text.split(",") if tok.strip()]
    except ValueError:
        raise InputError(f"bad --subset {text!r}") from None
    if any(not 0 <= v < n for v in verts):
        raise InputError(f"--subset vertex out of range [0, {n})")
    return verts


def cmd_switch(args) -> int:
    t = _read(args.path, Tournament)
    subset = _parse_subset(args.subset, t.n)
    out = switch(t, subset)
    _write(out, args.out)
    if args.out:
        rep = Report("switch")
        rep["input"] = args.path
        rep["subset"] = sorted(set(subset))
        rep["out"] = args.out
        return rep.finish(EXIT_OK, args.report_out)
    return EXIT_OK


def cmd_switch_equiv(args) -> int:
    rep = Report("switch-equiv")
    t1, t2 = _read(args.first, Tournament), _read(args.second, Tournament)
    rep["inputs"] = [args.first, args.second]
    rep["input_sha256"] = [_digest(args.first), _digest(args.second)]
    if t1.n != t2.n:
        raise InputError(f"tournaments have {t1.n} and {t2.n} vertices")
    cert = switching_equivalent(t1, t2)
    rep["equivalent"] = cert is not None
    rep["certificate"] = sorted(cert.subset) if cert is not None else None
    return rep.finish(EXIT_OK if cert is not None else EXIT_VIOLATION, args.report_out)


def cmd_realize(args) -> int:
    rep = Report("realize")
    rep["input"] = args.path
    rep["input_sha256"] = _digest(args.path)
    h = _read(args.path, Hypergraph)
    if h.k != 4:
        raise InputError("realize needs a 4-uniform hypergraph")
    rep["budget"] = args.budget
    obstruction = odd_cycle_obstruction(h)
    rep["odd_cycle_obstruction"] = (
        {"pair": list(obstruction[0]), "cycle": list(obstruction[1])} if obstruction else None
    )
    try:
        outcome = realize_as_tournament(h, args.budget)
    except BudgetExceeded as exc:
        rep["result"] = "BudgetExceeded"
        rep["nodes"] = exc.nodes
        return rep.finish(EXIT_BUDGET, args.report_out)
    rep["result"] = outcome.status
    rep["nodes"] = outcome.nodes
    if outcome.witness is not None:
        rep["witness_arcs"] = [f"{u}>{v}" for u, v in outcome.witness.arcs()]
        if args.out:
            io.write_text(args.out, outcome.witness)
            rep["out"] = args.out
    return rep.finish(EXIT_OK if outcome.realizable else EXIT_VIOLATION, args.report_out)


def cmd_fingerprint(args) -> int:
    rep = Report("fingerprint")
    rep["input"] = args.path
    rep["input_sha256"] = _digest(args.path)
    h = _read(args.path, Hypergraph)
    if h.k != 4:
        raise InputError("fingerprint needs a 4-uniform hypergraph")
    fp = fingerprint(h)
    rep["n"] = fp.n
    rep["edges"] = fp.num_edges
    rep["design_histogram"] = dict(fp.design_histogram)
    rep["independent_6_sets"] = fp.independent_6_sets
    rep["gamma_degrees"] = _compress(fp.gamma_degrees)
    return rep.finish(EXIT_OK, args.report_out)


def _compress(values) -> dict:
    out: dict[int, int] = {}
    for v in values:
        out[v] = out.get(v, 0) + 1
    return out


def cmd_density(args) -> int:
    rep = Report("density")
    if args.n < 4 or args.trials < 1:
        raise InputError("need --n >= 4 and --trials >= 1")
    mean, stderr, _ = baber_density(args.n, args.trials, args.seed)
    rep["n"], rep["trials"], rep["seed"] = args.n, args.trials, args.seed
    rep["mean_density"] = f"{mean:.6f}"
    rep["stderr"] = f"{stderr:.6f}"
    return rep.finish(EXIT_OK, args.report_out)


# -- parser ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="paley4", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--report-out", help="also write the report as JSON to this path")
    common.add_argument("--threads", type=int, default=os.cpu_count(),
                        help="accepted for compatibility; scans are vectorized and single-threaded")

    fieldopts = argparse.ArgumentParser(add_help=False)
    fieldopts.add_argument("--p", type=int, help="field characteristic")
    fieldopts.add_argument("--ell", type=int, default=1, help="extension degree")
    fieldopts.add_argument("--modulus", help="irreducible modulus, comma-separated, constant term first")
    fieldopts.add_argument("--q", type=int, help="shorthand for a prime field GF(q)")

    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", parents=[common, fieldopts], help="build a hypergraph or tournament")
    p.add_argument("kind", choices=CONSTRUCT_KINDS)
    p.add_argument("--out", help="output path (default: stdout)")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", parents=[common], help="check structural properties of a hypergraph")
    p.add_argument("path")
    p.add_argument("--zero-or-two", action="store_true")
    p.add_argument("--at-most-two", action="store_true")
    p.add_argument("--design", type=int, nargs="?", const=3, metavar="T")
    p.add_argument("--de-caen", action="store_true")
    p.add_argument("--two-graph", action="store_true")
    p.add_argument("--gamma", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("baber", parents=[common], help="Baber 4-graph of a tournament")
    p.add_argument("path")
    p.add_argument("--out")
    p.set_defaults(func=cmd_baber)

    p = sub.add_parser("switch", parents=[common], help="switch a tournament on a vertex subset")
    p.add_argument("path")
    p.add_argument("--subset", required=True, help="comma-separated vertices")
    p.add_argument("--out")
    p.set_defaults(func=cmd_switch)

    p = sub.add_parser("switch-equiv", parents=[common], help="test switching equivalence")
    p.add_argument("first")
    p.add_argument("second")
    p.set_defaults(func=cmd_switch_equiv)

    p = sub.add_parser("realize", parents=[common], help="find a tournament realizing a 4-graph")
    p.add_argument("path")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--out", help="write the witness tournament here")
    p.set_defaults(func=cmd_realize)

    p = sub.add_parser("fingerprint", parents=[common], help="isomorphism invariants of a 4-graph")
    p.add_argument("path")
    p.set_defaults(func=cmd_fingerprint)

    p = sub.add_parser("density", parents=[common], help="Monte Carlo Baber edge density")
    p.add_argument("--n", type=int, default=24)
    p.add_argument("--trials", type=int, default=200)
    p.add_argument("--seed", type=int, default=1)
    p.set_defaults(func=cmd_density)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (InputError, Paley4Error) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())

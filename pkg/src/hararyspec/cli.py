"""Command-line front end.

Subcommands: spectrum, bounds, psd, closed-form, verify-extremal.
Graphs come from a graph6 string or file, an edge-list file, or a named
constructor like ``complete:4`` / ``bipartite:2,3`` / ``multipartite:2,2,2``.

Exit codes: 0 success or confirmed, 1 usage/parse error, 2 refuted,
3 tie, 4 budget exceeded.  All floats print with 12 significant digits
so outputs diff cleanly.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from . import closed_forms, extremal, psd
from .bounds import bipartite_bound, bound_report, rq_relation_bounds
from .eigen import rd_alpha_energy, rd_alpha_spectrum
from .errors import BudgetError, Graph6Error, NotConnectedError
from .graph6 import parse_edge_list, parse_graph6, to_graph6
from .graphs import (
    Graph,
    complete,
    complete_bipartite,
    complete_multipartite,
    complete_split,
    cycle,
    edgeless,
    path,
    reciprocal_transmissions,
    star,
    turan,
    wheel,
)
from .invariants import bipartition
from .matrices import build_bundle

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_REFUTED = 2
EXIT_TIE = 3
EXIT_BUDGET = 4

_CONSTRUCTORS = {
    "complete": (complete, 1),
    "edgeless": (edgeless, 1),
    "path": (path, 1),
    "cycle": (cycle, 1),
    "star": (star, 1),
    "wheel": (wheel, 1),
    "bipartite": (complete_bipartite, 2),
    "split": (complete_split, 2),
    "turan": (turan, 2),
    "kite": (extremal.build_kite, 2),
    "multipartite": (lambda *parts: complete_multipartite(parts), None),
}


@dataclass
class RunConfig:
    command: str
    graph: Graph | None
    construct: tuple[str, tuple[int, ...]] | None
    alphas: list[float]
    fmt: str
    output: str | None
    tol: float


def _fmt(x):
    return f"{float(x):.12g}"


def _round12(obj):
    """Round every float in a JSON-ready structure to 12 significant digits."""
    if isinstance(obj, float):
        return float(f"{obj:.12g}")
    if isinstance(obj, dict):
        return {k: _round12(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_round12(v) for v in obj]
    return obj


def _parse_construct(spec):
    if ":" in spec:
        name, _, arg_text = spec.partition(":")
        args = tuple(int(tok) for tok in arg_text.split(",") if tok != "")
    else:
        name, args = spec, ()
    if name not in _CONSTRUCTORS:
        known = ", ".join(sorted(_CONSTRUCTORS))
        raise ValueError(f"unknown constructor {name!r} (known: {known})")
    builder, arity = _CONSTRUCTORS[name]
    if arity is not None and len(args) != arity:
        raise ValueError(f"constructor {name!r} takes {arity} integer parameter(s), got {len(args)}")
    return name, args, builder(*args)


def _load_config(args):
    sources = [
        args.graph6 is not None,
        args.graph6_file is not None,
        args.edge_list is not None,
        getattr(args, "construct", None) is not None,
    ]
    needs_graph = args.command != "verify-extremal"
    if needs_graph and sum(sources) != 1:
        raise ValueError("exactly one input source is required "
                         "(--graph6, --graph6-file, --edge-list or --construct)")
    graph = None
    construct = None
    if args.graph6 is not None:
        graph = parse_graph6(args.graph6)
    elif args.graph6_file is not None:
        with open(args.graph6_file, "r", encoding="ascii") as handle:
            line = next((ln.strip() for ln in handle if ln.strip()), None)
        if line is None:
            raise ValueError(f"no graph6 line found in {args.graph6_file}")
        graph = parse_graph6(line)
    elif args.edge_list is not None:
        with open(args.edge_list, "r", encoding="ascii") as handle:
            graph = parse_edge_list(handle.read())
    elif getattr(args, "construct", None) is not None:
        name, params, graph = _parse_construct(args.construct)
        construct = (name, params)
    alphas = [float(tok) for tok in args.alpha.split(",") if tok != ""]
    if not alphas:
        raise ValueError("at least one alpha value is required")
    for a in alphas:
        if not 0.0 <= a <= 1.0:
            raise ValueError(f"alpha must lie in [0, 1], got {a}")
    return RunConfig(
        command=args.command,
        graph=graph,
        construct=construct,
        alphas=alphas,
        fmt=args.format,
        output=args.output,
        tol=args.tol,
    )


def _emit(config, text):
    if config.output:
        with open(config.output, "w", encoding="utf-8") as handle:
            handle.write(text if text.endswith("\n") else text + "\n")
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _emit_json(config, payload):
    _emit(config, json.dumps(_round12(payload), indent=2, sort_keys=True))


def cmd_spectrum(config):
    g = config.graph
    bundle = build_bundle(g)
    harary = bundle.harary
    reports = []
    lines = [f"n = {g.n}, graph6 = {to_graph6(g)}"]
    lines.append("transmissions: " + " ".join(_fmt(t) for t in bundle.transmissions))
    lines.append(f"harary index: {_fmt(harary)}")
    for a in config.alphas:
        values = rd_alpha_spectrum(g, a).values
        energy = rd_alpha_energy(g, a)
        reports.append(
            {
                "n": g.n,
                "alpha": a,
                "eigenvalues": [float(v) for v in values],
                "harary": harary,
                "energy": energy,
            }
        )
        lines.append(
            f"alpha = {_fmt(a)}: eigenvalues ["
            + ", ".join(_fmt(v) for v in values)
            + f"], energy {_fmt(energy)}"
        )
    if config.fmt == "json":
        _emit_json(config, reports)
    else:
        _emit(config, "\n".join(lines))
    return EXIT_OK


def _record_payload(rec):
    return {
        "name": rec.name,
        "kind": rec.kind,
        "value": rec.value,
        "applicable": rec.applicable,
        "reason": rec.reason,
        "tight": rec.tight,
    }


def cmd_bounds(config):
    g = config.graph
    reports = []
    lines = []
    for a in config.alphas:
        rho = float(rd_alpha_spectrum(g, a).values[0])
        records = bound_report(g, a) + rq_relation_bounds(g, a)
        if bipartition(g)[0]:
            records.append(bipartite_bound(g, a))
        reports.append(
            {
                "n": g.n,
                "alpha": a,
                "rho": rho,
                "records": [_record_payload(r) for r in records],
            }
        )
        lines.append(f"alpha = {_fmt(a)}: rho = {_fmt(rho)}")
        for rec in records:
            status = "" if rec.applicable else f"  [not applicable: {rec.reason}]"
            tight = "  [tight]" if rec.tight else ""
            lines.append(f"  {rec.name:<32} {rec.kind:<5} {_fmt(rec.value):>18}{tight}{status}")
    if config.fmt == "json":
        _emit_json(config, reports)
    else:
        _emit(config, "\n".join(lines))
    return EXIT_OK


def cmd_psd(config):
    g = config.graph
    result = psd.alpha0_bisection(g, tol=config.tol)
    payload = {
        "n": g.n,
        "alpha0": result.alpha0,
        "method": result.method,
        "residual": result.residual,
    }
    tr = reciprocal_transmissions(g)
    if tr.max() - tr.min() <= 1e-8:
        closed = psd.alpha0_transmission_regular(g)
        payload["closed_form"] = {"alpha0": closed.alpha0, "method": "transmission_regular"}
    if config.construct:
        name, params = config.construct
        if name == "wheel":
            closed = psd.alpha0_wheel(params[0])
            payload["closed_form"] = {"alpha0": closed.alpha0, "method": "wheel"}
        elif name == "bipartite":
            a_part, b_part = sorted(params)
            n = a_part + b_part
            if n >= 4:
                closed = psd.alpha0_complete_bipartite(a_part, n)
                payload["closed_form"] = {"alpha0": closed.alpha0, "method": "complete_bipartite"}
    if config.fmt == "json":
        _emit_json(config, payload)
    else:
        lines = [f"alpha0 = {_fmt(result.alpha0)} ({result.method}), residual {_fmt(result.residual)}"]
        if "closed_form" in payload:
            cf = payload["closed_form"]
            lines.append(f"closed form ({cf['method']}): alpha0 = {_fmt(cf['alpha0'])}")
        _emit(config, "\n".join(lines))
    return EXIT_OK


def _closed_form_for(config, alpha):
    name, params = config.construct
    if name == "complete":
        return closed_forms.spectrum_complete(params[0], alpha)
    if name == "bipartite":
        return closed_forms.spectrum_complete_bipartite(params[0], params[1], alpha)
    if name == "split":
        return closed_forms.spectrum_complete_split(params[0], params[1], alpha)
    if name == "wheel":
        return closed_forms.spectrum_wheel(params[0], alpha)
    if name == "multipartite":
        return closed_forms.spectrum_multipartite(params, alpha)
    if name == "turan":
        n, r = params
        big, rest = divmod(n, r)
        return closed_forms.spectrum_multipartite([big + 1] * rest + [big] * (r - rest), alpha)
    raise ValueError(f"no closed-form spectrum for constructor {name!r}")


def cmd_closed_form(config):
    if config.construct is None:
        raise ValueError("closed-form requires --construct with a supported family")
    g = config.graph
    reports = []
    lines = []
    for a in config.alphas:
        spec = _closed_form_for(config, a)
        numeric = rd_alpha_spectrum(g, a).values
        deviation = float(abs(spec.eigenvalues() - numeric).max())
        reports.append(
            {
                "n": g.n,
                "alpha": a,
                "source": spec.source,
                "eigenvalues": [[float(v), int(m)] for v, m in spec.pairs],
                "max_deviation_vs_numeric": deviation,
            }
        )
        lines.append(f"alpha = {_fmt(a)} [{spec.source}]")
        for v, m in sorted(spec.pairs, reverse=True):
            lines.append(f"  {_fmt(v):>18}  (multiplicity {m})")
        lines.append(f"  max deviation vs numeric eigensolver: {_fmt(deviation)}")
    if config.fmt == "json":
        _emit_json(config, reports)
    else:
        _emit(config, "\n".join(lines))
    return EXIT_OK


_VERIFIERS = {
    "vertex-connectivity": extremal.verify_vertex_connectivity_extremal,
    "edge-connectivity": extremal.verify_edge_connectivity_extremal,
    "chromatic-number": extremal.verify_chromatic_extremal,
    "independence-number": extremal.verify_independence_extremal,
}


def cmd_verify_extremal(config, n, constraint, value):
    verifier = _VERIFIERS[constraint]
    reports = [verifier(n, value, a) for a in config.alphas]
    payload = [r.to_json() for r in reports]
    if config.fmt == "json":
        _emit_json(config, payload)
    else:
        lines = []
        for r in reports:
            tag = " (exploratory)" if r.exploratory else ""
            lines.append(
                f"n={r.n} {r.constraint}={r.value} alpha={_fmt(r.alpha)}: "
                f"{r.verdict}{tag}, rho_max={_fmt(r.rho_max)}, "
                f"maximizers={list(r.maximizers)}, predicted={r.predicted}"
            )
        _emit(config, "\n".join(lines))
    verdicts = {r.verdict for r in reports}
    if "refuted" in verdicts:
        return EXIT_REFUTED
    if "tie" in verdicts:
        return EXIT_TIE
    return EXIT_OK


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="hararyspec",
        description="Spectra, bounds, PSD thresholds and extremal checks "
        "for reciprocal-distance matrix blends of connected graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, with_construct=True):
        p.add_argument("--graph6", help="graph6 string (optionally with the >>graph6<< header)")
        p.add_argument("--graph6-file", help="file with one graph6 line (first non-empty line is used)")
        p.add_argument("--edge-list", help="file in 'n m' + 'u v' edge-list format")
        if with_construct:
            p.add_argument(
                "--construct",
                help="named graph, e.g. complete:4, cycle:5, bipartite:2,3, "
                "split:2,3, wheel:6, turan:6,3, multipartite:2,2,2, kite:5,2",
            )
        p.add_argument("--alpha", default="0", help="comma-separated blend weights in [0,1]")
        p.add_argument("--format", choices=("table", "json"), default="table")
        p.add_argument("--output", help="write the report to this path instead of stdout")
        p.add_argument("--tol", type=float, default=1e-9, help="tolerance override where applicable")

    add_common(sub.add_parser("spectrum", help="blend eigenvalues, transmissions, Harary index, energy"))
    add_common(sub.add_parser("bounds", help="evaluate every spectral-radius bound record"))
    add_common(sub.add_parser("psd", help="smallest alpha making the blend positive semidefinite"))
    add_common(sub.add_parser("closed-form", help="closed-form family spectrum with numeric cross-check"))

    ver = sub.add_parser("verify-extremal", help="exhaustive maximizer verification for one class")
    ver.add_argument("--n", type=int, required=True)
    ver.add_argument("--constraint", choices=sorted(_VERIFIERS), required=True)
    ver.add_argument("--value", type=int, required=True)
    add_common(ver, with_construct=False)
    return parser


def main(argv=None):
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    try:
        config = _load_config(args)
        if args.command == "spectrum":
            return cmd_spectrum(config)
        if args.command == "bounds":
            return cmd_bounds(config)
        if args.command == "psd":
            return cmd_psd(config)
        if args.command == "closed-form":
            return cmd_closed_form(config)
        return cmd_verify_extremal(config, args.n, args.constraint, args.value)
    except BudgetError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (Graph6Error, NotConnectedError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def console_entry():
    sys.exit(main())


if __name__ == "__main__":
    console_entry()

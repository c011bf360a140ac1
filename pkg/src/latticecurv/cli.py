"""Command-line interface: ``latticecurv analyze|render|verify|ground-state``."""

from __future__ import annotations

import argparse
import json
import os
import sys

from .config import BondRange, dump_configuration, read_configuration
from .energy import Potential, energy_decomposition
from .errors import LatticeCurvError
from .groundstate import build_minimizer
from .render import render_svg
from .report import analyze, energy_dict
from .suites import SUITES
from .bondgraph import build_bond_graph
from .triangulation import EARCLIP, FAN, triangulate

EXIT_OK, EXIT_VIOLATION, EXIT_INPUT = 0, 1, 2


def _env_tol() -> float | None:
    raw = os.environ.get("LATTICECURV_TOL")
    if raw is None or raw == "":
        return None
    tol = float(raw)
    if not tol >= 0:
        raise ValueError(f"LATTICECURV_TOL must be non-negative, got {raw!r}")
    return tol


def _potential(args) -> Potential:
    if args.potential == "lj":
        return Potential.lennard_jones(args.p)
    return Potential.heitmann_radin()


def _bond_range(args) -> BondRange | None:
    if args.alpha is None and args.beta is None:
        return None
    return BondRange(1.0 if args.alpha is None else args.alpha, 1.0 if args.beta is None else args.beta)


def _load(args):
    return read_configuration(args.input, args.input_format, _env_tol())


def _write(text: str, out: str | None) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def cmd_analyze(args) -> int:
    X = _load(args)
    rep = analyze(X, _potential(args), _bond_range(args), args.strategy)
    text = rep.to_json(indent=2) + "\n" if args.format == "json" else rep.to_text()
    _write(text, args.out)
    return EXIT_OK


def cmd_render(args) -> int:
    X = _load(args)
    G = build_bond_graph(X, _bond_range(args) or BondRange())
    svg = render_svg(triangulate(G, args.strategy), color_by=args.color_by, labels=args.labels)
    _write(svg, args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    kwargs = {"trials": args.trials, "seed": args.seed}
    if args.suite == "decomposition":
        kwargs["potential"] = _potential(args)
    if args.trials is None:
        del kwargs["trials"]
    res = SUITES[args.suite](**kwargs)
    for case in res.cases:
        print(f"{'PASS' if case.ok else 'FAIL'} {res.name} {case.label}: {case.detail}")
    if res.summary:
        print(res.summary)
    print(f"{res.name}: {len(res.cases) - res.failures}/{len(res.cases)} passed")
    return EXIT_OK if res.ok else EXIT_VIOLATION


def cmd_ground_state(args) -> int:
    X = build_minimizer(args.n)
    br = energy_decomposition(X, Potential.heitmann_radin())
    if args.format == "json":
        doc = json.loads(dump_configuration(X, "json"))
        doc["energy"] = energy_dict(br)
        text = json.dumps(doc, indent=2, sort_keys=True) + "\n"
    else:
        text = f"# N={args.n} E={br.total:g} P={br.perimeter} mu={br.defect}\n"
        text += dump_configuration(X, "xy-text")
    _write(text, args.out)
    return EXIT_OK


def _add_input(p: argparse.ArgumentParser) -> None:
    p.add_argument("input", help="configuration file (.json or xy-text)")
    p.add_argument("--input-format", choices=["json", "xy-text"], default=None,
                   help="override the format inferred from the extension")
    p.add_argument("--alpha", type=float, default=None, help="lower bond length")
    p.add_argument("--beta", type=float, default=None, help="upper bond length")
    p.add_argument("--strategy", choices=[EARCLIP, FAN], default=EARCLIP)


def _add_potential(p: argparse.ArgumentParser) -> None:
    p.add_argument("--potential", choices=["hr", "lj"], default="hr")
    p.add_argument("--p", type=int, default=6, help="Lennard-Jones exponent")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="latticecurv", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="bond graph, curvature and energy report")
    _add_input(p)
    _add_potential(p)
    p.add_argument("--format", choices=["json", "text"], default="json")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("render", help="draw the bond graph as SVG")
    _add_input(p)
    p.add_argument("--out", default=None)
    p.add_argument("--color-by", choices=["class", "curvature"], default="class")
    p.add_argument("--labels", action="store_true", help="label vertices by index")
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("verify", help="run an invariant suite")
    p.add_argument("--suite", choices=sorted(SUITES), required=True)
    p.add_argument("--trials", type=int, default=None)
    p.add_argument("--seed", type=int, default=1)
    _add_potential(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("ground-state", help="closed-shell minimizer for N particles")
    p.add_argument("n", type=int)
    p.add_argument("--format", choices=["json", "xy-text"], default="json")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_ground_state)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except LatticeCurvError as exc:
        print(json.dumps(exc.to_dict(), default=str), file=sys.stderr)
        return exc.exit_code
    except (OSError, ValueError) as exc:
        print(json.dumps({"error": type(exc).__name__, "message": str(exc)}), file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())

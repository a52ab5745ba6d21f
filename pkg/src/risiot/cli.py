"""Command line entry point: ``risiot {power-map,ebl-map,sweep,validate}``."""

from __future__ import annotations

import argparse
import contextlib
import json
import sys

from . import output
from .scenario import DEFAULT_SCENARIO, ScenarioError, field_names, load_scenario
from .sweep import evaluate_map, sweep_n_c

EXIT_OK, EXIT_INVALID, EXIT_IO = 0, 1, 2


def _parse_grid(text: str) -> tuple[int, int]:
    try:
        n_d, n_theta = (int(v) for v in text.lower().split("x"))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected NxM, got {text!r}") from None
    return n_d, n_theta


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--scenario", help="JSON scenario file (default: Table 1 values)")
    common.add_argument("--grid", type=_parse_grid, metavar="NxM",
                        help="radial x angular cell count")
    common.add_argument("--out", default="-", help="output path, '-' for stdout")
    common.add_argument("--workers", type=int, default=1, help="threads for grid evaluation")
    keys = common.add_argument_group("scenario overrides")
    for name in field_names():
        keys.add_argument("--" + name.replace("_", "-"), dest="set_" + name, metavar="VALUE",
                          help=f"default: {getattr(DEFAULT_SCENARIO, name)}")

    parser = argparse.ArgumentParser(prog="risiot", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("power-map", parents=[common], help="required transmit power per cell")
    sub.add_parser("ebl-map", parents=[common], help="expected battery lifetime per cell")
    sw = sub.add_parser("sweep", parents=[common], help="area statistics over (N, C)")
    sw.add_argument("--format", choices=("csv", "json"), default="csv")
    sub.add_parser("validate", parents=[common], help="load and print the resolved scenario")
    return parser


def _scenario_from_args(args):
    scen = load_scenario(args.scenario)
    overrides = {
        name: getattr(args, "set_" + name)
        for name in field_names()
        if getattr(args, "set_" + name) is not None
    }
    if args.grid is not None:
        overrides["n_d"], overrides["n_theta"] = args.grid
    return scen.replace(**overrides) if overrides else scen


@contextlib.contextmanager
def _open_sink(path):
    if path == "-":
        yield sys.stdout
    else:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            yield fh


def run(args) -> int:
    scen = _scenario_from_args(args)
    if args.command == "validate":
        doc = scen.to_dict()
        link = scen.link()
        doc["derived"] = {
            "beta0": link.beta0,
            "sigma_w2_w": link.sigma_w2,
            "rho_max_w": link.rho_max,
            "gamma_target": link.gamma_target,
            "config_angles_rad": list(scen.config_set().angles),
        }
        with _open_sink(args.out) as sink:
            json.dump(doc, sink, indent=2)
            sink.write("\n")
        return EXIT_OK

    if args.command in ("power-map", "ebl-map"):
        gmap = evaluate_map(scen.grid(), scen.geometry(), scen.config_set(), scen.link(),
                            scen.frame(), scen.profile(), workers=args.workers)
        with _open_sink(args.out) as sink:
            output.emit_grid_csv(gmap, sink)
        return EXIT_OK

    summaries = sweep_n_c(scen.n_x_list, scen.c_list, scen.grid(), scen.link(),
                          scen.frame(), scen.profile(), workers=args.workers)
    with _open_sink(args.out) as sink:
        output.emit_summary(summaries, sink, format=args.format)
    return EXIT_OK


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return run(args)
    except ScenarioError as exc:
        print(f"risiot: invalid scenario: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except ValueError as exc:
        print(f"risiot: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except OSError as exc:
        print(f"risiot: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())

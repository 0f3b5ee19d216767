"""Command line interface.

Subcommands:

* ``cbf tables``    pairwise measure tables for a list of distributions
* ``cbf distance``  shorthand for a distance-only table
* ``cbf sweep``     (mu2, sigma2) grid sweep against a fixed distribution
* ``cbf discrete conf``  discrete conflict report for two .bba files

Distribution specs use the ``normal:MU,SIGMA`` / ``exp:RATE`` forms; sweep
ranges use ``START:STOP:STEP``.  All numeric output carries 6 significant
digits.
"""

from __future__ import annotations

import argparse
import sys

from .discrete import conflict, d_inc, jousselme_distance, parse_bba, sigma_inc
from .experiments import (
    DIRECTIONS,
    FORMATS,
    MEASURES,
    SWEEP_MEASURES,
    Scenario,
    SweepSpec,
    render_tables,
    run_sweep,
    run_tables,
    sweep_csv,
)
from .quadrature import RULES, QuadratureConfig

__all__ = ["main"]


def _parse_range(text: str) -> tuple[float, float, float]:
    parts = text.split(":")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError(f"expected START:STOP:STEP, got {text!r}")
    try:
        start, stop, step = (float(p) for p in parts)
    except ValueError:
        raise argparse.ArgumentTypeError(f"non-numeric range bound in {text!r}") from None
    return start, stop, step


def _parse_measures(text: str) -> tuple[str, ...]:
    return tuple(tok.strip() for tok in text.split(",") if tok.strip())


def _add_quadrature_flags(parser: argparse.ArgumentParser):
    group = parser.add_argument_group("quadrature")
    group.add_argument("--grid", type=int, default=512, metavar="N",
                       help="points per axis (default 512)")
    group.add_argument("--rule", choices=RULES, default="gauss_legendre",
                       help="quadrature rule (default gauss_legendre)")
    group.add_argument("--trunc-k", type=float, default=8.0, metavar="K",
                       help="domain truncation in scale units (default 8)")
    group.add_argument("--tol", type=float, default=1e-4, metavar="T",
                       help="relative refinement tolerance (default 1e-4)")
    group.add_argument("--seed", type=int, default=0,
                       help="seed for Monte Carlo cross-checks (unused by grid paths)")


def _config_from_args(args) -> QuadratureConfig:
    return QuadratureConfig(
        points_per_axis=args.grid,
        rule=args.rule,
        truncation_k=args.trunc_k,
        target_rel_tol=args.tol,
    )


def _emit(text: str, out_path: str | None):
    if out_path:
        with open(out_path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _cmd_tables(args) -> int:
    scenario = Scenario(
        distributions=tuple(args.dists),
        measures=args.measures,
        quadrature=_config_from_args(args),
        output_format=args.format,
    )
    tset = run_tables(scenario)
    _emit(render_tables(tset, args.format), args.out)
    return 0


def _cmd_distance(args) -> int:
    scenario = Scenario(
        distributions=tuple(args.dists),
        measures=("distance",),
        quadrature=_config_from_args(args),
        output_format=args.format,
    )
    tset = run_tables(scenario)
    _emit(render_tables(tset, args.format), args.out)
    return 0


def _cmd_sweep(args) -> int:
    scenario = Scenario(
        sweep=SweepSpec(
            fixed=args.fixed,
            mu2=args.mu2,
            sigma2=args.sigma2,
            measure=args.measure,
            direction=args.direction,
        ),
        measures=(args.measure,),
        quadrature=_config_from_args(args),
    )
    rows = run_sweep(scenario)
    _emit(sweep_csv(rows), args.out)
    return 0


def _cmd_discrete_conf(args) -> int:
    with open(args.m1, "r", encoding="utf-8") as fh:
        text1 = fh.read()
    with open(args.m2, "r", encoding="utf-8") as fh:
        text2 = fh.read()
    # Shared frame: the union of the labels used by either file.
    labels1 = {lab for labels, _ in parse_bba(text1).items() for lab in labels}
    labels2 = {lab for labels, _ in parse_bba(text2).items() for lab in labels}
    frame = tuple(sorted(labels1 | labels2))
    m1 = parse_bba(text1, frame)
    m2 = parse_bba(text2, frame)
    lines = [
        f"d_inc_1in2 = {d_inc(m1, m2):.6g}",
        f"d_inc_2in1 = {d_inc(m2, m1):.6g}",
        f"sigma_inc = {sigma_inc(m1, m2):.6g}",
        f"jousselme = {jousselme_distance(m1, m2):.6g}",
        f"conflict = {conflict(m1, m2, variant=args.variant):.6g}",
    ]
    _emit("\n".join(lines) + "\n", args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cbf",
        description="Inclusion, distance and conflict measures for belief functions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_tables = sub.add_parser("tables", help="pairwise measure tables")
    p_tables.add_argument("--dists", nargs="+", required=True, metavar="SPEC",
                          help="distribution specs, e.g. normal:0,1 exp:2")
    p_tables.add_argument("--measures", type=_parse_measures, default=("incstr", "incpar"),
                          help=f"comma-separated subset of {','.join(MEASURES)}")
    p_tables.add_argument("--format", choices=FORMATS, default="markdown")
    p_tables.add_argument("--out", default=None, help="write output to this file")
    _add_quadrature_flags(p_tables)
    p_tables.set_defaults(func=_cmd_tables)

    p_dist = sub.add_parser("distance", help="pairwise distance table")
    p_dist.add_argument("--dists", nargs="+", required=True, metavar="SPEC")
    p_dist.add_argument("--format", choices=FORMATS, default="markdown")
    p_dist.add_argument("--out", default=None)
    _add_quadrature_flags(p_dist)
    p_dist.set_defaults(func=_cmd_distance)

    p_sweep = sub.add_parser("sweep", help="grid sweep against a fixed distribution")
    p_sweep.add_argument("--fixed", required=True, metavar="SPEC")
    p_sweep.add_argument("--mu2", type=_parse_range, required=True, metavar="LO:HI:STEP")
    p_sweep.add_argument("--sigma2", type=_parse_range, required=True, metavar="LO:HI:STEP")
    p_sweep.add_argument("--measure", choices=SWEEP_MEASURES, default="incpar")
    p_sweep.add_argument("--direction", choices=DIRECTIONS, default="1in2")
    p_sweep.add_argument("--out", default=None, help="write CSV here instead of stdout")
    _add_quadrature_flags(p_sweep)
    p_sweep.set_defaults(func=_cmd_sweep)

    p_disc = sub.add_parser("discrete", help="discrete mass function tools")
    disc_sub = p_disc.add_subparsers(dest="discrete_command", required=True)
    p_conf = disc_sub.add_parser("conf", help="conflict report for two .bba files")
    p_conf.add_argument("--m1", required=True, help="first .bba file")
    p_conf.add_argument("--m2", required=True, help="second .bba file")
    p_conf.add_argument("--variant", choices=("discounted", "complement"),
                        default="discounted", help="conflict reading (default discounted)")
    p_conf.add_argument("--out", default=None)
    p_conf.set_defaults(func=_cmd_discrete_conf)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

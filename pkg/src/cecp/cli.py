"""Command-line interface.

Two subcommands: ``run`` drives the full report pipeline over one or more
CSV inputs, ``bounds`` exports the envelope curves on their own.  Flags
mirror the run-configuration field names in kebab-case; a run may instead
be configured from a JSON file (including the metadata file of a previous
run, which reproduces it).  Environment variables are never consulted.

Exit codes: 0 success, 2 configuration error, 3 data error, 4 internal
invariant violation.
"""

from __future__ import annotations

import argparse
import sys

from .bounds import DEFAULT_GRID, bounds_curve
from .errors import ConfigError, DataError, InvariantError
from .pipeline import RunConfig, SeriesInput, load_config, run_pipeline

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_DATA = 3
EXIT_INVARIANT = 4


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cecp",
        description=(
            "Ordinal-pattern quantifiers on the complexity-entropy causality plane"
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="run the full report pipeline")
    run.add_argument("--config", help="JSON run configuration (or a metadata.json)")
    run.add_argument(
        "--input", action="append", default=[], metavar="PATH",
        help="input CSV; repeat for multiple series",
    )
    run.add_argument(
        "--series-name", action="append", default=[], metavar="NAME",
        help="name for the matching --input (default: file stem)",
    )
    run.add_argument("--value-column", default="value", help="value column header")
    run.add_argument("--date-column", default=None, help="date column header")
    run.add_argument("--dimension", type=int, default=4, help="pattern length D")
    run.add_argument("--delay", type=int, default=1, help="embedding delay")
    run.add_argument("--window-length", type=int, default=300, help="rows per window")
    run.add_argument("--step", type=int, default=20, help="rows between window starts")
    run.add_argument(
        "--max-windows", type=int, default=None,
        help="truncate each trajectory after this many windows",
    )
    run.add_argument(
        "--surrogate-seeds", type=int, nargs="+", default=[0], metavar="SEED",
        help="seeds for the shuffled surrogates",
    )
    run.add_argument(
        "--reference", default=None,
        help="series name the mean-equality F-tests compare against",
    )
    run.add_argument("--output-dir", required=True, help="directory for the report bundle")
    run.add_argument("--output-format", choices=("csv", "json"), default="csv",
                     help="format of the cross-series table")
    run.add_argument("--first-difference", action="store_true",
                     help="analyze successive differences instead of levels")
    run.add_argument("--bounds-grid", type=int, default=DEFAULT_GRID,
                     help="samples per envelope family")
    run.add_argument("--no-figures", action="store_true", help="skip PNG rendering")

    bounds = sub.add_parser("bounds", help="export the envelope curves only")
    bounds.add_argument("--alphabet-size", type=int, required=True,
                        help="number of symbols M (D! for ordinal patterns)")
    bounds.add_argument("--grid-size", type=int, default=DEFAULT_GRID)
    bounds.add_argument("--output", required=True, help="destination CSV")
    return parser


def _run_config(args) -> RunConfig:
    if args.config:
        return load_config(args.config, args.output_dir)
    if not args.input:
        raise ConfigError("provide --input at least once, or --config")
    if args.series_name and len(args.series_name) != len(args.input):
        raise ConfigError(
            f"{len(args.series_name)} series names for {len(args.input)} inputs"
        )
    inputs = tuple(
        SeriesInput(
            path=path,
            value_column=args.value_column,
            date_column=args.date_column,
            name=args.series_name[i] if args.series_name else None,
        )
        for i, path in enumerate(args.input)
    )
    return RunConfig(
        inputs=inputs,
        output_dir=args.output_dir,
        dimension=args.dimension,
        delay=args.delay,
        window_length=args.window_length,
        step=args.step,
        max_windows=args.max_windows,
        surrogate_seeds=tuple(args.surrogate_seeds),
        reference=args.reference,
        output_format=args.output_format,
        first_difference=args.first_difference,
        bounds_grid=args.bounds_grid,
        figures=not args.no_figures,
    )


def _cmd_run(args) -> int:
    report = run_pipeline(_run_config(args))
    print(f"wrote {len(report.paths)} files to {report.output_dir}")
    return EXIT_OK


def _cmd_bounds(args) -> int:
    from .pipeline import _full, _write_csv

    curve = bounds_curve(args.alphabet_size, args.grid_size)
    _write_csv(
        args.output,
        ["H", "c_min", "c_max"],
        [
            [_full(h), _full(lo), _full(hi)]
            for h, lo, hi in zip(curve.h, curve.c_min, curve.c_max)
        ],
    )
    print(f"wrote {args.output}")
    return EXIT_OK


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        if args.command == "run":
            return _cmd_run(args)
        return _cmd_bounds(args)
    except ConfigError as exc:
        print(f"cecp: configuration error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except DataError as exc:
        print(f"cecp: data error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except InvariantError as exc:
        print(f"cecp: internal invariant violated: {exc}", file=sys.stderr)
        return EXIT_INVARIANT


if __name__ == "__main__":
    sys.exit(main())

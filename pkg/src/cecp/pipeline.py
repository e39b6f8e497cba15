"""End-to-end report pipeline: ingest, window, test, export.

For every configured series the pipeline writes a dated trajectory, its
causality-plane scatter, an entropy-evolution track, a shuffled-surrogate
comparison, and a thinned movement scheme; across series it writes the
envelope curves, the descriptive-statistics table with mean-equality
F-tests against a reference series, and a metadata file that pins every
parameter, seed, and input digest needed to reproduce the run.  Figures
mirroring the data files are rendered alongside them unless disabled.

Data files are plain CSV with one header line and full-precision values;
the cross-series table rounds to 6 significant digits.  Reruns with the
same configuration and inputs are byte-identical.
"""

from __future__ import annotations

import csv
import hashlib
import json
import math
import re
from dataclasses import dataclass
from pathlib import Path

from . import plots
from .bounds import DEFAULT_GRID, BoundsCurve, bounds_curve, in_bounds
from .errors import ConfigError, DataError, InvariantError
from .ingest import ingest_csv
from .ordinal import OrdinalConfig, TimeSeries
from .stats import GENERATOR_NAME, mean_equality_test, shuffle_surrogate, summarize
from .windows import Trajectory, WindowSpec, slide, subsample_trajectory

SCHEME_RATIO = 4  # 1:4 thinning for the movement-scheme export

_TABLE_ROWS = ("Mean", "Median", "StdDev", "Min", "Max", "F", "p-value")


@dataclass(frozen=True)
class SeriesInput:
    """One CSV input and its column mapping; the name defaults to the file stem."""

    path: str
    value_column: str = "value"
    date_column: str | None = None
    name: str | None = None

    def __post_init__(self) -> None:
        if self.name is None:
            object.__setattr__(self, "name", Path(self.path).stem)


@dataclass(frozen=True)
class RunConfig:
    """Everything one pipeline run depends on."""

    inputs: tuple[SeriesInput, ...]
    output_dir: str
    dimension: int = 4
    delay: int = 1
    window_length: int = 300
    step: int = 20
    max_windows: int | None = None
    surrogate_seeds: tuple[int, ...] = (0,)
    reference: str | None = None
    output_format: str = "csv"
    first_difference: bool = False
    bounds_grid: int = DEFAULT_GRID
    figures: bool = True

    def __post_init__(self) -> None:
        inputs = tuple(
            s if isinstance(s, SeriesInput) else SeriesInput(**s) for s in self.inputs
        )
        object.__setattr__(self, "inputs", inputs)
        if not inputs:
            raise ConfigError("no input series configured")
        names = [s.name for s in inputs]
        if len(set(names)) != len(names):
            raise ConfigError(f"duplicate series names: {names}")
        if self.output_format not in ("csv", "json"):
            raise ConfigError(
                f"output_format must be 'csv' or 'json', got {self.output_format!r}"
            )
        seeds = tuple(int(s) for s in self.surrogate_seeds)
        if len(set(seeds)) != len(seeds):
            raise ConfigError(f"duplicate surrogate seeds: {seeds}")
        object.__setattr__(self, "surrogate_seeds", seeds)
        if self.reference is not None and self.reference not in names:
            raise ConfigError(
                f"reference series {self.reference!r} is not among inputs {names}"
            )

    def window_spec(self) -> WindowSpec:
        return WindowSpec(
            window_length=self.window_length,
            step=self.step,
            ordinal=OrdinalConfig(dimension=self.dimension, delay=self.delay),
        )


@dataclass
class RunReport:
    """In-memory results of a pipeline run plus the files it wrote."""

    output_dir: Path
    paths: list[Path]
    trajectories: dict[str, Trajectory]
    surrogates: dict[str, dict[int, Trajectory]]
    table: dict
    curve: BoundsCurve
    metadata: dict


def first_difference(series: TimeSeries) -> TimeSeries:
    """Successive differences of the series; the first label is dropped."""
    if len(series) < 2:
        raise DataError(f"series '{series.name}': differencing needs >= 2 values")
    values = series.values[1:] - series.values[:-1]
    labels = series.labels[1:] if series.labels is not None else None
    return TimeSeries(values=values, labels=labels, name=series.name)


def config_from_dict(raw: dict, output_dir) -> RunConfig:
    """Build a RunConfig from the config-file / metadata-file schema."""
    if not isinstance(raw, dict) or "inputs" not in raw:
        raise ConfigError("config must be an object with an 'inputs' list")
    inputs = []
    for entry in raw["inputs"]:
        fields = {
            k: entry[k]
            for k in ("path", "value_column", "date_column", "name")
            if k in entry
        }
        inputs.append(SeriesInput(**fields))
    params = dict(raw.get("parameters", {}))
    known = {
        "dimension", "delay", "window_length", "step", "max_windows",
        "surrogate_seeds", "reference", "output_format", "first_difference",
        "bounds_grid", "figures",
    }
    unknown = set(params) - known
    if unknown:
        raise ConfigError(f"unknown parameters in config: {sorted(unknown)}")
    if "surrogate_seeds" in params:
        params["surrogate_seeds"] = tuple(params["surrogate_seeds"])
    return RunConfig(inputs=tuple(inputs), output_dir=str(output_dir), **params)


def load_config(path, output_dir) -> RunConfig:
    """Read a JSON config (or a previous run's metadata file)."""
    try:
        raw = json.loads(Path(path).read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from exc
    return config_from_dict(raw, output_dir)


def _full(x) -> str:
    """Shortest decimal that round-trips the float exactly."""
    return repr(float(x))


def _report_number(x) -> str:
    if x is None or (isinstance(x, float) and math.isnan(x)):
        return ""
    if isinstance(x, float) and math.isinf(x):
        return "inf"
    return f"{x:.6g}"


def _report_p(p) -> str:
    if p is None or (isinstance(p, float) and math.isnan(p)):
        return ""
    if p < 1e-15:
        return "0.00000"
    return f"{p:.6g}"


def _round6(x):
    if x is None or (isinstance(x, float) and (math.isnan(x) or math.isinf(x))):
        return None if x is None or math.isnan(x) else x
    return float(f"{x:.6g}")


def _safe_name(name: str) -> str:
    return re.sub(r"[^A-Za-z0-9._-]", "_", name)


def _write_csv(path: Path, header, rows) -> None:
    with open(path, "w", newline="", encoding="utf-8") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)


def _check_bounds(trajectory: Trajectory, curve: BoundsCurve) -> None:
    for r in trajectory.results:
        q = r.quantifiers
        if not in_bounds(q.normalized_entropy, q.complexity, curve):
            raise InvariantError(
                f"series '{trajectory.series_name}' window {r.index}: "
                f"(H, C) = ({q.normalized_entropy}, {q.complexity}) escapes the envelope"
            )


def _sha256(path) -> str:
    digest = hashlib.sha256()
    with open(path, "rb") as handle:
        for chunk in iter(lambda: handle.read(1 << 16), b""):
            digest.update(chunk)
    return digest.hexdigest()


def _build_table(config: RunConfig, trajectories: dict[str, Trajectory]) -> dict:
    table: dict[str, dict] = {}
    reference = config.reference
    ref_entropies = trajectories[reference].entropies if reference else None
    for inp in config.inputs:
        stats = summarize(trajectories[inp.name].entropies)
        cell = {
            "mean": stats.mean,
            "median": stats.median,
            "std_dev": stats.std_dev,
            "min": stats.minimum,
            "max": stats.maximum,
            "f": None,
            "p_value": None,
        }
        if reference is not None and inp.name != reference:
            test = mean_equality_test(trajectories[inp.name].entropies, ref_entropies)
            cell["f"] = test.f_statistic
            cell["p_value"] = test.p_value
        table[inp.name] = cell
    return table


def _write_table(config: RunConfig, table: dict, out: Path) -> Path:
    names = [inp.name for inp in config.inputs]
    if config.output_format == "json":
        path = out / "table1.json"
        payload = {
            "reference": config.reference,
            "series": {
                name: {key: _round6(value) for key, value in table[name].items()}
                for name in names
            },
        }
        path.write_text(
            json.dumps(payload, indent=2, sort_keys=True) + "\n", encoding="utf-8"
        )
        return path
    path = out / "table1.csv"
    keys = ("mean", "median", "std_dev", "min", "max", "f", "p_value")
    rows = []
    for label, key in zip(_TABLE_ROWS, keys):
        formatter = _report_p if key == "p_value" else _report_number
        rows.append([label] + [formatter(table[name][key]) for name in names])
    _write_csv(path, ["statistic"] + names, rows)
    return path


def _build_metadata(config: RunConfig) -> dict:
    from . import __version__

    return {
        "tool": "cecp",
        "version": __version__,
        "rng": {"bit_generator": GENERATOR_NAME},
        "parameters": {
            "dimension": config.dimension,
            "delay": config.delay,
            "window_length": config.window_length,
            "step": config.step,
            "max_windows": config.max_windows,
            "surrogate_seeds": list(config.surrogate_seeds),
            "reference": config.reference,
            "output_format": config.output_format,
            "first_difference": config.first_difference,
            "bounds_grid": config.bounds_grid,
            "figures": config.figures,
        },
        "inputs": [
            {
                "path": inp.path,
                "name": inp.name,
                "value_column": inp.value_column,
                "date_column": inp.date_column,
                "sha256": _sha256(inp.path),
            }
            for inp in config.inputs
        ],
    }


def run_pipeline(config: RunConfig) -> RunReport:
    """Run the whole analysis and write the report bundle.

    Any ingestion or windowing problem aborts with an error naming the
    failing series and stage; every emitted (H, C) point is checked
    against the envelope before anything is written.
    """
    out = Path(config.output_dir)
    out.mkdir(parents=True, exist_ok=True)
    spec = config.window_spec()
    alphabet = spec.ordinal.alphabet_size
    curve = bounds_curve(alphabet, config.bounds_grid)

    series_list: list[TimeSeries] = []
    for inp in config.inputs:
        try:
            series = ingest_csv(
                inp.path,
                date_column=inp.date_column,
                value_column=inp.value_column,
                name=inp.name,
            )
            if config.first_difference:
                series = first_difference(series)
        except DataError as exc:
            raise DataError(f"series '{inp.name}' (ingest): {exc}") from exc
        series_list.append(series)

    trajectories: dict[str, Trajectory] = {}
    surrogates: dict[str, dict[int, Trajectory]] = {}
    for series in series_list:
        try:
            trajectory = slide(series, spec, config.max_windows)
            surrogates[series.name] = {
                seed: slide(shuffle_surrogate(series, seed), spec, config.max_windows)
                for seed in config.surrogate_seeds
            }
        except DataError as exc:
            raise DataError(f"series '{series.name}' (windowing): {exc}") from exc
        _check_bounds(trajectory, curve)
        for surrogate in surrogates[series.name].values():
            _check_bounds(surrogate, curve)
        trajectories[series.name] = trajectory

    paths: list[Path] = []
    for series in series_list:
        name = series.name
        safe = _safe_name(name)
        trajectory = trajectories[name]

        path = out / f"trajectory_{safe}.csv"
        _write_csv(
            path,
            ["index", "begin", "end", "S", "H", "C"],
            [
                [
                    str(r.index), r.begin_label, r.end_label,
                    _full(r.quantifiers.shannon),
                    _full(r.quantifiers.normalized_entropy),
                    _full(r.quantifiers.complexity),
                ]
                for r in trajectory.results
            ],
        )
        paths.append(path)

        path = out / f"cecp_{safe}.csv"
        _write_csv(
            path,
            ["H", "C"],
            [
                [_full(r.quantifiers.normalized_entropy), _full(r.quantifiers.complexity)]
                for r in trajectory.results
            ],
        )
        paths.append(path)

        path = out / f"entropy_{safe}.csv"
        _write_csv(
            path,
            ["index", "H"],
            [
                [str(r.index), _full(r.quantifiers.normalized_entropy)]
                for r in trajectory.results
            ],
        )
        paths.append(path)

        path = out / f"surrogate_{safe}.csv"
        rows = [
            ["original", "", str(r.index),
             _full(r.quantifiers.normalized_entropy), _full(r.quantifiers.complexity)]
            for r in trajectory.results
        ]
        for seed in config.surrogate_seeds:
            rows.extend(
                ["surrogate", str(seed), str(r.index),
                 _full(r.quantifiers.normalized_entropy), _full(r.quantifiers.complexity)]
                for r in surrogates[name][seed].results
            )
        _write_csv(path, ["source", "seed", "index", "H", "C"], rows)
        paths.append(path)

        path = out / f"scheme_{safe}.csv"
        thinned = subsample_trajectory(trajectory, SCHEME_RATIO)
        _write_csv(
            path,
            ["index", "begin", "end", "H", "C"],
            [
                [str(r.index), r.begin_label, r.end_label,
                 _full(r.quantifiers.normalized_entropy), _full(r.quantifiers.complexity)]
                for r in thinned.results
            ],
        )
        paths.append(path)

    path = out / f"bounds_M{alphabet}.csv"
    _write_csv(
        path,
        ["H", "c_min", "c_max"],
        [
            [_full(h), _full(lo), _full(hi)]
            for h, lo, hi in zip(curve.h, curve.c_min, curve.c_max)
        ],
    )
    paths.append(path)

    table = _build_table(config, trajectories)
    paths.append(_write_table(config, table, out))

    metadata = _build_metadata(config)
    path = out / "metadata.json"
    path.write_text(json.dumps(metadata, indent=2, sort_keys=True) + "\n", encoding="utf-8")
    paths.append(path)

    if config.figures:
        ordered = [trajectories[inp.name] for inp in config.inputs]
        path = out / "cecp_plane.png"
        plots.plot_cecp_plane(path, curve, ordered)
        paths.append(path)
        path = out / "entropy_evolution.png"
        plots.plot_entropy_evolution(path, ordered)
        paths.append(path)
        for inp in config.inputs:
            safe = _safe_name(inp.name)
            path = out / f"surrogate_{safe}.png"
            plots.plot_surrogate_plane(
                path, curve, trajectories[inp.name], surrogates[inp.name]
            )
            paths.append(path)
            path = out / f"scheme_{safe}.png"
            plots.plot_scheme(
                path, curve, subsample_trajectory(trajectories[inp.name], SCHEME_RATIO)
            )
            paths.append(path)

    return RunReport(
        output_dir=out,
        paths=paths,
        trajectories=trajectories,
        surrogates=surrogates,
        table=table,
        curve=curve,
        metadata=metadata,
    )

"""Pipeline and CLI: outputs, determinism, metadata round-trip, exit codes."""

import hashlib
import json

import numpy as np
import pytest

from cecp import (
    ConfigError,
    RunConfig,
    SeriesInput,
    first_difference,
    TimeSeries,
    load_config,
    run_pipeline,
)
from cecp.cli import main

GRID = 400  # envelope resolution; keeps these tests quick


def write_series(tmp_path, name, values, with_dates=True):
    path = tmp_path / f"{name}.csv"
    if with_dates:
        rows = "".join(f"d{i + 1},{float(v)!r}\n" for i, v in enumerate(values))
        path.write_text("date,rate\n" + rows, encoding="utf-8")
    else:
        rows = "".join(f"{float(v)!r}\n" for v in values)
        path.write_text("rate\n" + rows, encoding="utf-8")
    return path


@pytest.fixture
def noise_and_ramp(tmp_path):
    rng = np.random.default_rng(107)
    noise = write_series(tmp_path, "noise", rng.random(1000))
    ramp = write_series(tmp_path, "ramp", np.arange(1000.0))
    return noise, ramp


def config_for(tmp_path, paths, **overrides):
    settings = dict(
        inputs=tuple(
            SeriesInput(path=str(p), value_column="rate", date_column="date")
            for p in paths
        ),
        output_dir=str(tmp_path / "out"),
        surrogate_seeds=(0,),
        bounds_grid=GRID,
        figures=False,
    )
    settings.update(overrides)
    return RunConfig(**settings)


def hash_tree(directory):
    return {
        p.name: hashlib.sha256(p.read_bytes()).hexdigest()
        for p in sorted(directory.iterdir())
    }


class TestRunPipeline:
    def test_smoke_known_endpoints(self, tmp_path, noise_and_ramp):
        report = run_pipeline(config_for(tmp_path, noise_and_ramp, reference="noise"))
        noise = report.trajectories["noise"]
        ramp = report.trajectories["ramp"]
        assert (noise.entropies >= 0.95).all()
        assert (noise.complexities <= 0.07).all()
        assert (ramp.entropies == 0.0).all()
        assert (ramp.complexities == 0.0).all()
        assert len(ramp) == (1000 - 300) // 20 + 1

    def test_expected_files_written(self, tmp_path, noise_and_ramp):
        report = run_pipeline(config_for(tmp_path, noise_and_ramp, reference="noise"))
        names = {p.name for p in report.paths}
        for series in ("noise", "ramp"):
            for prefix in ("trajectory", "cecp", "entropy", "surrogate", "scheme"):
                assert f"{prefix}_{series}.csv" in names
        assert "bounds_M24.csv" in names
        assert "table1.csv" in names
        assert "metadata.json" in names
        assert all(p.exists() for p in report.paths)

    def test_trajectory_csv_layout(self, tmp_path, noise_and_ramp):
        report = run_pipeline(config_for(tmp_path, noise_and_ramp))
        lines = (report.output_dir / "trajectory_ramp.csv").read_text().splitlines()
        assert lines[0] == "index,begin,end,S,H,C"
        first = lines[1].split(",")
        assert first[:3] == ["1", "d1", "d300"]
        assert first[3:] == ["0.0", "0.0", "0.0"]

    def test_table_blank_for_reference(self, tmp_path, noise_and_ramp):
        report = run_pipeline(config_for(tmp_path, noise_and_ramp, reference="noise"))
        lines = (report.output_dir / "table1.csv").read_text().splitlines()
        assert lines[0] == "statistic,noise,ramp"
        rows = {line.split(",")[0]: line.split(",")[1:] for line in lines[1:]}
        assert rows["F"][0] == "" and rows["F"][1] != ""
        assert rows["p-value"][0] == "" and rows["p-value"][1] != ""
        assert set(rows) == {"Mean", "Median", "StdDev", "Min", "Max", "F", "p-value"}

    def test_json_table(self, tmp_path, noise_and_ramp):
        report = run_pipeline(
            config_for(tmp_path, noise_and_ramp, reference="noise", output_format="json")
        )
        payload = json.loads((report.output_dir / "table1.json").read_text())
        assert payload["reference"] == "noise"
        assert payload["series"]["noise"]["f"] is None
        assert payload["series"]["ramp"]["f"] is not None
        assert 0.95 <= payload["series"]["noise"]["mean"] <= 1.0

    def test_max_windows_truncates(self, tmp_path):
        rng = np.random.default_rng(109)
        path = write_series(tmp_path, "long", rng.random(3996))
        config = config_for(tmp_path, [path], max_windows=184)
        report = run_pipeline(config)
        assert len(report.trajectories["long"]) == 184
        lines = (report.output_dir / "trajectory_long.csv").read_text().splitlines()
        assert len(lines) == 185  # header + 184 windows

    def test_rerun_is_byte_identical(self, tmp_path, noise_and_ramp):
        config_a = config_for(
            tmp_path, noise_and_ramp, reference="noise",
            surrogate_seeds=(0, 1), figures=True,
            output_dir=str(tmp_path / "a"),
        )
        config_b = config_for(
            tmp_path, noise_and_ramp, reference="noise",
            surrogate_seeds=(0, 1), figures=True,
            output_dir=str(tmp_path / "b"),
        )
        report_a = run_pipeline(config_a)
        report_b = run_pipeline(config_b)
        assert hash_tree(report_a.output_dir) == hash_tree(report_b.output_dir)
        assert any(p.suffix == ".png" for p in report_a.paths)

    def test_metadata_round_trip(self, tmp_path, noise_and_ramp):
        config = config_for(
            tmp_path, noise_and_ramp, reference="noise",
            output_dir=str(tmp_path / "first"),
        )
        report = run_pipeline(config)
        reloaded = load_config(report.output_dir / "metadata.json", tmp_path / "second")
        rerun = run_pipeline(reloaded)
        first = hash_tree(report.output_dir)
        second = hash_tree(rerun.output_dir)
        assert first == second

    def test_metadata_records_seeds_digests_generator(self, tmp_path, noise_and_ramp):
        report = run_pipeline(config_for(tmp_path, noise_and_ramp, surrogate_seeds=(3, 9)))
        meta = json.loads((report.output_dir / "metadata.json").read_text())
        assert meta["rng"]["bit_generator"] == "PCG64"
        assert meta["parameters"]["surrogate_seeds"] == [3, 9]
        for entry in meta["inputs"]:
            assert len(entry["sha256"]) == 64

    def test_surrogate_file_has_both_sources(self, tmp_path, noise_and_ramp):
        report = run_pipeline(config_for(tmp_path, noise_and_ramp, surrogate_seeds=(0, 1)))
        lines = (report.output_dir / "surrogate_ramp.csv").read_text().splitlines()
        assert lines[0] == "source,seed,index,H,C"
        sources = {line.split(",")[0] for line in lines[1:]}
        assert sources == {"original", "surrogate"}
        seeds = {line.split(",")[1] for line in lines[1:] if line.startswith("surrogate")}
        assert seeds == {"0", "1"}

    def test_config_errors(self, tmp_path, noise_and_ramp):
        with pytest.raises(ConfigError, match="reference"):
            config_for(tmp_path, noise_and_ramp, reference="nope")
        with pytest.raises(ConfigError, match="output_format"):
            config_for(tmp_path, noise_and_ramp, output_format="xml")
        with pytest.raises(ConfigError, match="no input"):
            config_for(tmp_path, [])

    def test_data_error_names_series_and_stage(self, tmp_path):
        path = write_series(tmp_path, "tiny", np.arange(50.0))
        from cecp import DataError

        with pytest.raises(DataError, match="series 'tiny' \\(windowing\\)"):
            run_pipeline(config_for(tmp_path, [path]))


class TestFirstDifference:
    def test_differences_values_and_drops_first_label(self):
        series = TimeSeries([1.0, 4.0, 9.0], labels=("a", "b", "c"), name="sq")
        diffed = first_difference(series)
        assert diffed.values.tolist() == [3.0, 5.0]
        assert diffed.labels == ("b", "c")
        assert diffed.name == "sq"


class TestCli:
    def test_run_and_exit_zero(self, tmp_path, noise_and_ramp, capsys):
        noise, ramp = noise_and_ramp
        code = main([
            "run",
            "--input", str(noise), "--input", str(ramp),
            "--value-column", "rate", "--date-column", "date",
            "--reference", "noise",
            "--output-dir", str(tmp_path / "cli_out"),
            "--bounds-grid", str(GRID),
            "--no-figures",
        ])
        assert code == 0
        assert (tmp_path / "cli_out" / "table1.csv").exists()
        assert "wrote" in capsys.readouterr().out

    def test_config_error_exits_2(self, tmp_path, noise_and_ramp, capsys):
        noise, _ = noise_and_ramp
        code = main([
            "run", "--input", str(noise),
            "--value-column", "rate",
            "--reference", "missing",
            "--output-dir", str(tmp_path / "x"),
        ])
        assert code == 2
        assert "configuration error" in capsys.readouterr().err

    def test_data_error_exits_3(self, tmp_path, capsys):
        bad = tmp_path / "bad.csv"
        bad.write_text("date,rate\nd1,NA\n", encoding="utf-8")
        code = main([
            "run", "--input", str(bad),
            "--value-column", "rate", "--date-column", "date",
            "--output-dir", str(tmp_path / "y"),
            "--bounds-grid", str(GRID),
            "--no-figures",
        ])
        assert code == 3
        err = capsys.readouterr().err
        assert "data error" in err and "row 1" in err

    def test_bounds_subcommand(self, tmp_path):
        out = tmp_path / "bounds.csv"
        code = main([
            "bounds", "--alphabet-size", "6",
            "--grid-size", "300", "--output", str(out),
        ])
        assert code == 0
        lines = out.read_text().splitlines()
        assert lines[0] == "H,c_min,c_max"
        assert len(lines) == 302  # header + grid + 1 samples

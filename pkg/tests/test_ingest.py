"""CSV ingestion: happy path, row-numbered rejections, header problems."""

import numpy as np
import pytest

from cecp import DataError, OrdinalConfig, WindowSpec, ingest_csv, slide


def write(tmp_path, text, name="input.csv"):
    path = tmp_path / name
    path.write_text(text, encoding="utf-8")
    return path


class TestHappyPath:
    def test_two_row_file(self, tmp_path):
        path = write(tmp_path, "date,rate\n1999-05-17,5.25\n1999-05-18,5.26\n")
        series = ingest_csv(path, date_column="date", value_column="rate")
        assert len(series) == 2
        assert series.values.tolist() == [5.25, 5.26]
        assert series.labels == ("1999-05-17", "1999-05-18")
        assert series.name == "input"

    def test_value_only_file(self, tmp_path):
        path = write(tmp_path, "rate\n1.0\n2.0\n3.0\n")
        series = ingest_csv(path, value_column="rate", name="short")
        assert series.labels is None
        assert series.name == "short"

    def test_long_synthetic_file_window_count(self, tmp_path):
        rng = np.random.default_rng(103)
        rows = "".join(f"r{i},{float(v)!r}\n" for i, v in enumerate(rng.random(3996)))
        path = write(tmp_path, "date,rate\n" + rows)
        series = ingest_csv(path, date_column="date", value_column="rate")
        assert len(series) == 3996
        trajectory = slide(series, WindowSpec(300, 20, OrdinalConfig(4, 1)))
        assert len(trajectory) == 185


class TestRejections:
    def test_na_value_names_the_row(self, tmp_path):
        rows = "\n".join(f"d{i},{i}.5" for i in range(1, 7))
        path = write(tmp_path, f"date,rate\n{rows}\nd7,NA\nd8,8.5\n")
        with pytest.raises(DataError, match="row 7"):
            ingest_csv(path, date_column="date", value_column="rate")

    def test_blank_value_names_the_row(self, tmp_path):
        path = write(tmp_path, "date,rate\nd1,1.0\nd2,\n")
        with pytest.raises(DataError, match="row 2.*blank"):
            ingest_csv(path, date_column="date", value_column="rate")

    def test_non_finite_value_rejected(self, tmp_path):
        path = write(tmp_path, "rate\n1.0\ninf\n")
        with pytest.raises(DataError, match="row 2.*non-finite"):
            ingest_csv(path, value_column="rate")

    def test_missing_column(self, tmp_path):
        path = write(tmp_path, "date,rate\nd1,1.0\n")
        with pytest.raises(DataError, match="'price' not found"):
            ingest_csv(path, value_column="price")

    def test_duplicate_header(self, tmp_path):
        path = write(tmp_path, "rate,rate\n1.0,2.0\n")
        with pytest.raises(DataError, match="appears 2 times"):
            ingest_csv(path, value_column="rate")

    def test_empty_file(self, tmp_path):
        path = write(tmp_path, "")
        with pytest.raises(DataError, match="empty"):
            ingest_csv(path, value_column="rate")

    def test_header_only_file(self, tmp_path):
        path = write(tmp_path, "date,rate\n")
        with pytest.raises(DataError, match="no data rows"):
            ingest_csv(path, date_column="date", value_column="rate")

    def test_short_row_missing_value_field(self, tmp_path):
        path = write(tmp_path, "date,rate\nd1,1.0\nd2\n")
        with pytest.raises(DataError, match="row 2"):
            ingest_csv(path, date_column="date", value_column="rate")

import numpy as np
import pytest

from app.core.errors import DataError
from app.repositories.series import read_series_csv, write_series_csv
from app.domain.series import SeriesPair


class TestReadSeries:
    def test_three_rows(self, tmp_path):
        path = tmp_path / "s.csv"
        path.write_text("t,r,x\n1,0.5,1.2\n2,-0.3,0.8\n3,0.1,2.5\n")
        series = read_series_csv(path)
        assert series.T == 3
        np.testing.assert_array_equal(series.r, [0.5, -0.3, 0.1])
        np.testing.assert_array_equal(series.x, [1.2, 0.8, 2.5])

    def test_extra_columns_ignored(self, tmp_path):
        path = tmp_path / "s.csv"
        path.write_text("t,r,x,h\n1,0.5,1.2,9\n2,-0.3,0.8,9\n")
        assert read_series_csv(path).T == 2

    def test_written_values_read_back_exactly(self, tmp_path):
        rng = np.random.default_rng(4)
        series = SeriesPair(r=rng.standard_normal(200) * 1e-3, x=np.exp(rng.normal(-5, 3, 200)))
        back = read_series_csv(write_series_csv(tmp_path / "s.csv", series))
        assert np.array_equal(back.r, series.r) and np.array_equal(back.x, series.x)

    def test_non_increasing_t(self, tmp_path):
        path = tmp_path / "s.csv"
        path.write_text("t,r,x\n1,0.5,1.2\n2,-0.3,0.8\n2,0.1,2.5\n")
        with pytest.raises(DataError) as exc:
            read_series_csv(path)
        assert exc.value.row == 3 and exc.value.column == "t"

    def test_missing_column(self, tmp_path):
        path = tmp_path / "s.csv"
        path.write_text("t,r\n1,0.5\n")
        with pytest.raises(DataError) as exc:
            read_series_csv(path)
        assert exc.value.column == "x"

    def test_not_a_number(self, tmp_path):
        path = tmp_path / "s.csv"
        path.write_text("t,r,x\n1,0.5,1.2\n2,abc,0.8\n")
        with pytest.raises(DataError) as exc:
            read_series_csv(path)
        assert (exc.value.row, exc.value.column) == (2, "r")

    def test_negative_measure(self, tmp_path):
        path = tmp_path / "s.csv"
        path.write_text("t,r,x\n1,0.5,1.2\n2,0.1,-0.8\n")
        with pytest.raises(DataError) as exc:
            read_series_csv(path)
        assert exc.value.exit_code == 3 and exc.value.row == 2

    def test_missing_file(self, tmp_path):
        with pytest.raises(DataError):
            read_series_csv(tmp_path / "absent.csv")

    def test_undecodable_bytes(self, tmp_path):
        path = tmp_path / "s.csv"
        path.write_bytes(b"t,r,x\n1,0.1,1.0\n2,0.2,\xff\xfe\n")
        with pytest.raises(DataError, match="cannot read series file") as exc:
            read_series_csv(path)
        assert exc.value.exit_code == 3

    def test_directory_instead_of_file(self, tmp_path):
        with pytest.raises(DataError):
            read_series_csv(tmp_path)

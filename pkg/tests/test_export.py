"""Tests for tabular records and their serializations."""

import math

import orjson
import pytest

from conftest import SINGLET
from relational_qubit_comm.common.types import Parameter
from relational_qubit_comm.export import (
    OutputFormat,
    Records,
    density_records,
    figure_records,
    fmt_number,
    infogain_records,
    scan2d_records,
    scan_records,
    state_records,
    table_records,
)
from relational_qubit_comm.inference import (
    EncodingScheme,
    QuadratureConfig,
    discrete_prior,
    info_gain,
)
from relational_qubit_comm.scans import TableCell, TableOneReport
from relational_qubit_comm.scans.figures import FigureData
from relational_qubit_comm.scans.sweep import Scan2DResult, ScanResult
from relational_qubit_comm.su2 import StateVector2Q
from relational_qubit_comm.twirl import twirl_analytic


@pytest.fixture
def theta_scheme() -> EncodingScheme:
    return EncodingScheme.of("theta", alpha=0.0, psi=0.0)


@pytest.fixture
def theta_curve(theta_scheme) -> ScanResult:
    return ScanResult(
        axis=Parameter.ALPHA,
        axis_values=[0.0, math.pi / 4],
        avg_gain=[0.311, 1.0],
        scheme=theta_scheme,
        prior=discrete_prior(Parameter.THETA),
        quad=QuadratureConfig(n_points=33),
    )


class TestRecords:
    """Test the generic record container."""

    def test_add_checks_width(self):
        """Test a row of the wrong width is rejected."""
        records = Records(["a", "b"])
        with pytest.raises(ValueError):
            records.add(1.0)

    def test_csv(self):
        """Test header, number formatting, booleans and blanks."""
        records = Records(["x", "flag", "note"])
        records.add(1 / 3, True, None)
        assert records.to_csv() == "x,flag,note\n0.333333333333,true,\n"

    def test_json(self):
        """Test rows become objects and floats carry 12 significant digits."""
        records = Records(["x", "y"], title="t", metadata={"ratio": 2 / 3})
        records.add(1 / 3, float("nan"))
        data = orjson.loads(records.to_json())
        assert data["title"] == "t"
        assert data["metadata"]["ratio"] == 0.666666666667
        assert data["rows"] == [{"x": 0.333333333333, "y": None}]

    def test_render_dispatch(self):
        """Test render returns JSON or CSV text."""
        records = Records(["x"])
        records.add(1.0)
        assert records.render(OutputFormat.JSON).startswith("{")
        assert records.render(OutputFormat.CSV) == "x\n1\n"

    def test_table(self):
        """Test the rich table has one row per record."""
        records = Records(["basis", "re"], title="amplitudes")
        records.add("00", 1.0)
        records.add("01", 0.0)
        table = records.to_table()
        assert table.row_count == 2
        assert [c.header for c in table.columns] == ["basis", "re"]

    def test_fmt_number(self):
        """Test the decimal form."""
        assert fmt_number(math.pi) == "3.14159265359"
        assert fmt_number(0.5) == "0.5"

    def test_negative_zero(self):
        """Test -0.0 serializes as a plain zero in every format."""
        records = Records(["re", "im"])
        records.add(-0.0, -0.0)
        assert records.to_csv() == "re,im\n0,0\n"
        row = orjson.loads(records.to_json())["rows"][0]
        assert math.copysign(1.0, row["im"]) == 1.0
        assert b"-0" not in records.to_json().encode()


class TestBuilders:
    """Test the result-to-record builders."""

    def test_state_records(self):
        """Test one row per basis state."""
        records = state_records(StateVector2Q(SINGLET))
        assert [row[0] for row in records.rows] == ["00", "01", "10", "11"]
        assert records.rows[1][1] == pytest.approx(1 / math.sqrt(2))
        assert records.rows[2][1] == pytest.approx(-1 / math.sqrt(2))

    def test_density_records(self):
        """Test sixteen entries of the twirled singlet."""
        rho = twirl_analytic(StateVector2Q(SINGLET).outer())
        records = density_records(rho)
        assert len(records.rows) == 16
        entries = {(r[0], r[1]): r[2] for r in records.rows}
        assert entries[("01", "10")] == pytest.approx(-0.5)

    def test_infogain_records(self, theta_scheme):
        """Test the single gain row and prior metadata."""
        result = info_gain(theta_scheme, discrete_prior(Parameter.THETA))
        records = infogain_records(result)
        assert records.columns[-1] == "avg_gain"
        assert records.rows[0][-1] == pytest.approx(1.5 - 0.75 * math.log2(3))
        assert records.metadata["prior"].startswith("discrete")

    def test_scan_records(self, theta_curve):
        """Test one row per node."""
        records = scan_records(theta_curve)
        assert records.rows == [[0.0, 0.311], [math.pi / 4, 1.0]]
        assert records.metadata["axis"] == "alpha"

    def test_scan2d_records(self, theta_scheme):
        """Test the map is flattened in row-major order."""
        grid = Scan2DResult(
            axis_a=Parameter.ALPHA,
            axis_b=Parameter.PSI,
            a_values=[0.0, 0.5],
            b_values=[0.0, 1.0, 2.0],
            avg_gain=[[0.1, 0.2, 0.3], [0.4, 0.5, 0.6]],
            scheme=theta_scheme,
            prior=discrete_prior(Parameter.THETA),
            quad=QuadratureConfig(n_points=33),
        )
        records = scan2d_records(grid)
        assert len(records.rows) == 6
        assert records.rows[3] == [0.5, 0.0, 0.4]

    def test_table_records(self):
        """Test one row per cell with baselines in the metadata."""
        report = TableOneReport(
            cells=[
                TableCell(
                    encoding=Parameter.ALPHA,
                    prior="discrete",
                    fixed_values={Parameter.THETA: math.pi, Parameter.PSI: 0.0},
                    max_gain=0.3113,
                    mirrored_gain=0.3113,
                )
            ],
            baselines={"uniform": 0.1412, "discrete": 0.3113},
            advantage=3.23,
            quad_points=33,
            resolution=3,
        )
        records = table_records(report)
        assert records.rows == [["discrete", "alpha", 0.3113, None, math.pi, 0.0, 0.3113]]
        assert records.metadata["advantage"] == 3.23
        assert records.to_csv().splitlines()[1] == "discrete,alpha,0.3113,,3.14159265359,0,0.3113"

    def test_figure_records_curves(self, theta_curve):
        """Test curve figures are tagged by prior family."""
        data = FigureData(figure_id=3, title="t", curves={"discrete": theta_curve})
        records = figure_records(data)
        assert records.columns == ["prior", "axis_value", "avg_gain"]
        assert [row[0] for row in records.rows] == ["discrete", "discrete"]

"""Command line surface: formats, determinism, exit codes."""

import csv
import io
import json
import xml.etree.ElementTree as ET

import pytest

from boltzmann_billiard.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def parse_csv(text):
    rows = list(csv.reader(io.StringIO(text)))
    return rows[0], rows[1:]


class TestClassify:
    def test_json_fields(self, capsys):
        code, out = run_cli(capsys, "classify", "--D", "1.5", "--E", "-0.2",
                            "--format", "json")
        assert code == 0
        doc = json.loads(out)
        assert doc["class"] == "I"
        assert doc["D"] == 1.5 and doc["E"] == -0.2
        assert doc["k2"] < 0.0
        assert doc["nonempty"] is True
        assert doc["alpha"] == pytest.approx(0.707115615675, abs=1e-9)
        assert doc["flips_component"] is False

    def test_two_component_class(self, capsys):
        code, out = run_cli(capsys, "classify", "--D", "2.5", "--E", "-0.1",
                            "--format", "json")
        doc = json.loads(out)
        assert doc["class"] == "IIplus"
        assert doc["flips_component"] is True

    def test_degenerate_yields_nulls(self, capsys):
        code, out = run_cli(capsys, "classify", "--D", "1.0", "--E", "-0.5",
                            "--format", "json")
        assert code == 0
        doc = json.loads(out)
        assert doc["class"] == "DegenerateTangent"
        assert doc["alpha"] is None
        assert doc["R"] is None

    def test_text_format(self, capsys):
        code, out = run_cli(capsys, "classify", "--D", "1.5", "--E", "-0.2")
        assert code == 0
        assert "class = I" in out

    def test_invalid_numerics_exit_2(self, capsys):
        code, _ = run_cli(capsys, "classify", "--D", "nan", "--E", "-0.2")
        assert code == 2


class TestOrbit:
    def test_csv_shape_and_conservation(self, capsys):
        code, out = run_cli(capsys, "orbit", "--D", "1.5", "--E", "-0.2",
                            "--steps", "100")
        assert code == 0
        header, rows = parse_csv(out)
        assert header == ["step", "x", "A1", "A2", "L", "D_resid", "E_check"]
        assert len(rows) == 101
        for row in rows:
            assert abs(float(row[5])) < 1e-8
            assert float(row[6]) == pytest.approx(-0.2, abs=1e-8)

    def test_floats_carry_17_digits(self, capsys):
        _, out = run_cli(capsys, "orbit", "--D", "1.5", "--E", "-0.2",
                         "--steps", "2")
        _, rows = parse_csv(out)
        # full-precision decimal round trip
        for row in rows:
            assert float(row[1]) == float(repr(float(row[1])))
            assert len(row[1].replace("-", "").replace(".", "").split("e")[0]) >= 10

    def test_zero_steps_single_row(self, capsys):
        code, out = run_cli(capsys, "orbit", "--D", "1.5", "--E", "-0.2",
                            "--steps", "0")
        assert code == 0
        _, rows = parse_csv(out)
        assert len(rows) == 1 and rows[0][0] == "0"

    def test_period3_closure(self, capsys):
        _, out = run_cli(capsys, "orbit", "--D", "1.75", "--E",
                         repr(-5.0 / 24.0), "--steps", "3")
        _, rows = parse_csv(out)
        first, last = rows[0], rows[3]
        for k in (1, 2, 3):
            assert float(last[k]) == pytest.approx(float(first[k]), abs=1e-7)

    def test_deterministic_bytes(self, capsys):
        _, a = run_cli(capsys, "orbit", "--D", "2.5", "--E", "-0.1",
                       "--steps", "40", "--seed", "3")
        _, b = run_cli(capsys, "orbit", "--D", "2.5", "--E", "-0.1",
                       "--steps", "40", "--seed", "3")
        assert a == b
        _, c = run_cli(capsys, "orbit", "--D", "2.5", "--E", "-0.1",
                       "--steps", "40", "--seed", "4")
        assert c != a

    def test_json_format(self, capsys):
        code, out = run_cli(capsys, "orbit", "--D", "1.5", "--E", "-0.2",
                            "--steps", "5", "--format", "json")
        doc = json.loads(out)
        assert doc["class"] == "I"
        assert len(doc["rows"]) == 6

    def test_divergent_orbit_exit_1(self, capsys):
        # positive-energy one-oval set, conics swing out to large abscissae;
        # a tight ceiling aborts, and the partial orbit is still emitted
        code, out = run_cli(capsys, "orbit", "--D", "0.3", "--E", "0.4",
                            "--steps", "2000", "--abort-abscissa", "50")
        assert code == 1
        _, rows = parse_csv(out)
        assert 1 <= len(rows) < 2001
        assert all(abs(float(r[1])) <= 50.0 for r in rows)

    def test_empty_set_exit_2(self, capsys):
        code, _ = run_cli(capsys, "orbit", "--D", "6.0", "--E", "-0.1",
                          "--steps", "5")
        assert code == 2

    def test_svg_output(self, capsys):
        code, out = run_cli(capsys, "orbit", "--D", "1.5", "--E", "-0.2",
                            "--steps", "7", "--format", "svg")
        assert code == 0
        root = ET.fromstring(out)
        assert root.tag.endswith("svg")
        arcs = [el for el in root.iter() if el.tag.endswith("path")
                and el.get("class") == "arc"]
        assert len(arcs) == 7

    def test_out_file(self, capsys, tmp_path):
        target = tmp_path / "orbit.csv"
        code, out = run_cli(capsys, "orbit", "--D", "1.5", "--E", "-0.2",
                            "--steps", "3", "--out", str(target))
        assert code == 0 and out == ""
        header, rows = parse_csv(target.read_text())
        assert header[0] == "step" and len(rows) == 4


class TestRotation:
    def test_single_point_json(self, capsys):
        code, out = run_cli(capsys, "rotation", "--D", "2.5", "--E", "-0.1",
                            "--steps", "3000", "--format", "json")
        assert code == 0
        doc = json.loads(out)
        assert doc["alpha_analytic"] == pytest.approx(0.339505868735, abs=1e-9)
        assert doc["difference"] < 1e-6
        assert doc["flips_component"] is True

    def test_grid_csv(self, capsys):
        code, out = run_cli(capsys, "rotation", "--grid", "0.5:3.5:-0.4:-0.1:5")
        assert code == 0
        header, rows = parse_csv(out)
        assert header == ["D", "E", "class", "alpha"]
        assert len(rows) == 25
        by_class = {}
        for row in rows:
            by_class.setdefault(row[2], []).append(row)
            if row[2] in ("I", "IIplus", "IIminus"):
                assert 0.0 <= float(row[3]) < 1.0
            else:
                # degenerate cells carry an empty alpha field
                assert row[3] == ""
        assert "I" in by_class and "IIplus" in by_class

    def test_missing_args_exit_2(self, capsys):
        code, _ = run_cli(capsys, "rotation", "--D", "1.5")
        assert code == 2

    def test_bad_grid_exit_2(self, capsys):
        code, _ = run_cli(capsys, "rotation", "--grid", "1:2:3")
        assert code == 2


class TestPeriodScan:
    def test_finds_exact_root(self, capsys):
        code, out = run_cli(capsys, "period-scan", "--E", repr(-5.0 / 24.0))
        assert code == 0
        header, rows = parse_csv(out)
        assert header == ["E", "p", "D_root", "period3_residual"]
        assert len(rows) == 1
        assert float(rows[0][2]) == pytest.approx(1.75, abs=1e-8)
        assert abs(float(rows[0][3])) < 1e-10

    def test_low_periods_yield_nothing(self, capsys):
        code, out = run_cli(capsys, "period-scan", "--E", "-0.2",
                            "--p-list", "1,2")
        assert code == 0
        _, rows = parse_csv(out)
        assert rows == []

    def test_multiple_periods(self, capsys):
        code, out = run_cli(capsys, "period-scan", "--E", "-0.2",
                            "--p-list", "3,5", "--D-range", "0.2", "1.99")
        assert code == 0
        _, rows = parse_csv(out)
        ps = {row[1] for row in rows}
        assert "3" in ps and "5" in ps
        # polynomial residual only vanishes on the p = 3 rows
        for row in rows:
            if row[1] == "3":
                assert abs(float(row[3])) < 1e-8


class TestRender:
    def test_orbit_style(self, capsys):
        code, out = run_cli(capsys, "render", "--D", "1.5", "--E", "-0.2",
                            "--steps", "5")
        assert code == 0
        root = ET.fromstring(out)
        arcs = [el for el in root.iter() if el.tag.endswith("path")
                and el.get("class") == "arc"]
        assert len(arcs) == 5

    def test_levelset_style_components(self, capsys):
        code, out = run_cli(capsys, "render", "--D", "2.5", "--E", "-0.1",
                            "--style", "levelset")
        assert code == 0
        root = ET.fromstring(out)
        comps = [el for el in root.iter() if el.get("class") == "component"]
        assert len(comps) == 2
        code, out = run_cli(capsys, "render", "--D", "1.5", "--E", "-0.2",
                            "--style", "levelset")
        root = ET.fromstring(out)
        comps = [el for el in root.iter() if el.get("class") == "component"]
        assert len(comps) == 1


class TestSelftest:
    def test_passes(self, capsys):
        code, out = run_cli(capsys, "selftest")
        assert code == 0
        assert "all checks passed" in out
        assert out.count("ok") >= 7

    def test_forced_failure(self, capsys):
        code, out = run_cli(capsys, "selftest", "--force-fail")
        assert code == 1
        assert "FAIL" in out


def test_unknown_command_exit_2(capsys):
    assert main(["frobnicate"]) == 2


def test_no_command_exit_2():
    assert main([]) == 2


def test_help_exit_0(capsys):
    assert main(["--help"]) == 0
    assert "classify" in capsys.readouterr().out

import json
import math

import pytest

from hypwidth.cli import main
from hypwidth.polyio import SCAN_CSV_HEADER, emit_polygon, parse_polygon
from hypwidth.reduced import regular_apothem, regular_ngon


@pytest.fixture
def pentagon_file(tmp_path):
    path = tmp_path / "pentagon.json"
    path.write_text(emit_polygon(regular_ngon(5, 1.0), model="klein"))
    return str(path)


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


class TestHappyPaths:
    def test_width_side(self, capsys, pentagon_file):
        code, out = run(capsys, "width", "--input", pentagon_file, "--side", "0")
        assert code == 0
        doc = json.loads(out)
        expected = 1.0 + regular_apothem(5, 1.0)
        assert doc["width"] == pytest.approx(expected, abs=1e-10)

    def test_width_explicit_line(self, capsys, pentagon_file):
        # supporting line tangent to the pentagon at vertex 0
        line = f"{math.cosh(1.0)},0,{math.sinh(1.0)}"
        code, out = run(capsys, "width", "--input", pentagon_file, "--line", line)
        assert code == 0
        assert json.loads(out)["width"] > 0

    def test_thickness(self, capsys, pentagon_file):
        code, out = run(capsys, "thickness", "--input", pentagon_file)
        assert code == 0
        doc = json.loads(out)
        assert doc["thickness"] == pytest.approx(1.0 + regular_apothem(5, 1.0), abs=1e-9)
        assert doc["achieved_on_side"] is not None

    def test_diameter(self, capsys, pentagon_file):
        code, out = run(capsys, "diameter", "--input", pentagon_file)
        assert code == 0
        doc = json.loads(out)
        assert len(doc["pair"]) == 2

    def test_check_reduced(self, capsys, pentagon_file):
        code, out = run(capsys, "check-reduced", "--input", pentagon_file)
        assert code == 0
        doc = json.loads(out)
        assert doc["verdict"] is True
        assert len(doc["vertices"]) == 5

    def test_regular_by_thickness(self, capsys, tmp_path):
        out_path = tmp_path / "t.json"
        code, _ = run(capsys, "regular", "--n", "3", "--thickness", "1.0",
                      "--output", str(out_path))
        assert code == 0
        V = parse_polygon(out_path.read_text())
        assert V.n == 3

    def test_solve_roundtrip(self, capsys, tmp_path, pentagon_file):
        code, out = run(capsys, "solve", "--seed", pentagon_file, "--delta",
                        str(1.0 + regular_apothem(5, 1.0)))
        assert code == 0
        V = parse_polygon(out)
        assert V.n == 5

    def test_verify_claims_on_input(self, capsys, pentagon_file):
        code, out = run(capsys, "verify", "--theorem", "claims",
                        "--input", pentagon_file)
        assert code == 0
        doc = json.loads(out)
        assert doc["results"][0]["passed"] is True

    def test_verify_theorem3_default_corpus(self, capsys):
        code, out = run(capsys, "verify", "--theorem", "3", "--seed-rng", "1")
        assert code == 0
        doc = json.loads(out)
        assert all(r["passed"] for r in doc["results"])

    def test_verify_reducedness_on_input(self, capsys, pentagon_file):
        code, out = run(capsys, "verify", "--theorem", "1", "--input", pentagon_file)
        assert code == 0
        assert json.loads(out)["results"][0]["verdict"] is True

    def test_verify_halving_on_input(self, capsys, pentagon_file):
        code, out = run(capsys, "verify", "--theorem", "2", "--input", pentagon_file)
        assert code == 0
        assert json.loads(out)["results"][0]["passed"] is True

    def test_scan_csv(self, capsys):
        code, out = run(capsys, "scan", "--ns", "3", "--deltas", "0.5,1.0")
        assert code == 0
        lines = out.strip().split("\n")
        assert lines[0] == ",".join(SCAN_CSV_HEADER)
        assert len(lines) == 3

    def test_render_svg(self, capsys, tmp_path, pentagon_file):
        out_path = tmp_path / "p.svg"
        code, _ = run(capsys, "render", "--input", pentagon_file, "--chart",
                      "poincare", "--show-feet", "--output", str(out_path))
        assert code == 0
        assert out_path.read_text().startswith("<?xml")

    def test_line_relation(self, capsys):
        code, out = run(capsys, "line-relation", "--line1", "0,1,0",
                        "--line2", "1,0,0")
        assert code == 0
        assert json.loads(out)["kind"] == "intersecting"


class TestExitCodes:
    def test_validation_error_is_2(self, capsys, tmp_path):
        bad = tmp_path / "bad.json"
        bad.write_text('{"model":"klein","vertices":[[0.4,0],[0,0.4],[-0.4,-0.4],[0.05,0]]}')
        code, _ = run(capsys, "thickness", "--input", str(bad))
        assert code == 2

    def test_schema_error_is_2(self, capsys, tmp_path):
        bad = tmp_path / "bad.json"
        bad.write_text("not json")
        code, _ = run(capsys, "diameter", "--input", str(bad))
        assert code == 2

    def test_numerical_failure_is_3(self, capsys, tmp_path, pentagon_file):
        # one iteration cannot reach the residual target from a far-off delta
        code, _ = run(capsys, "solve", "--seed", pentagon_file, "--delta", "2.5",
                      "--max-iterations", "1")
        assert code == 3

    def test_bracket_failure_is_3(self, capsys):
        code, _ = run(capsys, "regular", "--n", "3", "--thickness", "60")
        assert code == 3

    def test_io_error_is_4(self, capsys):
        code, _ = run(capsys, "width", "--input", "/nonexistent/poly.json",
                      "--side", "0")
        assert code == 4

    def test_conflicting_flags_is_2(self, capsys, pentagon_file):
        code, _ = run(capsys, "width", "--input", pentagon_file)
        assert code == 2

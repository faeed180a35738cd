import json
from fractions import Fraction

import pytest

from liegen.cli import main, matrix_from_doc, matrix_to_doc
from liegen.exact import Matrix
from liegen.groups import exp_lower, exp_upper


def run(capsys, *args):
    code = main(list(args))
    captured = capsys.readouterr()
    doc = json.loads(captured.out) if captured.out.strip() else None
    return code, doc


class TestMatrixDocuments:
    def test_roundtrip(self):
        m = Matrix([[Fraction(1, 3), 2], [Fraction(-7, 5), 0]])
        assert matrix_from_doc(matrix_to_doc(m)) == m

    def test_exact_strings(self):
        doc = matrix_to_doc(exp_upper(Fraction(1, 3), 3).matrix)
        assert doc["entries"][0][2] == "1/18"

    def test_inconsistent_doc_rejected(self):
        with pytest.raises(ValueError):
            matrix_from_doc({"rows": 2, "cols": 2, "entries": [["1", "0"]]})


class TestGen:
    def test_corner(self, capsys):
        code, doc = run(capsys, "gen", "--family", "corner", "--n", "3")
        assert code == 0
        assert matrix_from_doc(doc["second"]) == Matrix.unit(3, 3, 1)

    def test_g2(self, capsys):
        code, doc = run(capsys, "gen", "--family", "g2")
        assert code == 0
        assert doc["n"] == 7
        assert matrix_from_doc(doc["second"])[4, 3] == 2

    def test_lower_doubling(self, capsys):
        code, doc = run(capsys, "gen", "--family", "lower", "--n", "4", "--b", "doubling")
        assert code == 0
        assert doc["b"] == ["8", "12", "14"]

    def test_bad_family_exits_2(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["gen", "--family", "nonsense", "--n", "3"])
        assert exc.value.code == 2
        capsys.readouterr()

    def test_missing_n_is_error(self, capsys):
        code, _ = run(capsys, "gen", "--family", "corner")
        assert code == 2


class TestClassifyAndClosure:
    def test_classify_corner6(self, capsys):
        code, doc = run(capsys, "classify", "--family", "corner", "--n", "6")
        assert code == 0
        assert doc["type"]["name"] == "C3" and doc["dim"] == 21

    def test_classify_double_corner7(self, capsys):
        code, doc = run(capsys, "classify", "--family", "double_corner", "--n", "7")
        assert code == 0
        assert doc["type"]["name"] == "G2" and doc["dim"] == 14

    def test_closure_files(self, capsys, tmp_path):
        a = tmp_path / "a.json"
        b = tmp_path / "b.json"
        a.write_text(json.dumps(matrix_to_doc(Matrix.unit(2, 1, 2))))
        b.write_text(json.dumps(matrix_to_doc(Matrix.unit(2, 2, 1))))
        code, doc = run(capsys, "closure", str(a), str(b))
        assert code == 0
        assert doc["dim"] == 3 and doc["type"]["name"] == "A1"

    def test_closure_malformed_exits_2(self, capsys, tmp_path):
        bad = tmp_path / "bad.json"
        bad.write_text("{not json")
        code, _ = run(capsys, "closure", str(bad))
        assert code == 2

    def test_closure_unrecognized_exits_1(self, capsys, tmp_path):
        f = tmp_path / "m.json"
        f.write_text(json.dumps(matrix_to_doc(Matrix.unit(3, 1, 2))))
        code, doc = run(capsys, "closure", str(f))
        assert code == 1
        assert doc["type"]["family"] == "unrecognized"


class TestBounds:
    def test_corner_n2(self, capsys):
        code, doc = run(capsys, "bounds", "--family", "corner", "--n", "2")
        assert code == 0
        assert doc["s0"] == "2"
        assert 2 < Fraction(doc["t"]["safe_value"]) < Fraction(21, 10)

    def test_g2(self, capsys):
        code, doc = run(capsys, "bounds", "--family", "g2")
        assert code == 0
        assert Fraction(doc["t"]["safe_value"]) <= 17
        assert Fraction(doc["r"]["safe_value"]) <= 17

    def test_lower_doubling(self, capsys):
        code, doc = run(capsys, "bounds", "--family", "lower", "--n", "4")
        assert code == 0
        assert Fraction(doc["r"]["safe_value"]) <= 1

    def test_width_env(self, capsys, monkeypatch):
        monkeypatch.setenv("LIEGEN_DEFAULT_WIDTH", "1/16")
        code, doc = run(capsys, "bounds", "--family", "corner", "--n", "2")
        assert code == 0 and doc["width"] == "1/16"

    def test_width_flag(self, capsys):
        code, doc = run(capsys, "bounds", "--family", "corner", "--n", "3",
                        "--width", "1/32")
        assert code == 0 and doc["width"] == "1/32"


class TestExp:
    def test_upper(self, capsys):
        code, doc = run(capsys, "exp", "--kind", "upper", "--n", "4", "--t", "1/3")
        assert code == 0
        assert matrix_from_doc(doc["matrix"]) == exp_upper(Fraction(1, 3), 4).matrix

    def test_lower(self, capsys):
        code, doc = run(capsys, "exp", "--kind", "lower", "--n", "4",
                        "--r", "2", "--b", "8,12,14")
        assert code == 0
        assert matrix_from_doc(doc["matrix"]) == exp_lower(2, (8, 12, 14)).matrix

    def test_missing_parameter(self, capsys):
        code, _ = run(capsys, "exp", "--kind", "upper", "--n", "3")
        assert code == 2


class TestCertify:
    def test_corner_certified(self, capsys):
        code, doc = run(capsys, "certify", "--family", "corner", "--n", "4",
                        "--t", "8", "--s", "3")
        assert code == 0
        assert doc["conclusion"] == "free_dense_certified"
        # the embedded polynomial matches the cleared integer form
        assert doc["bounds"]["t"]["polynomials"][0]["integer_coefficients"] == [
            -12, -12, -6, 1,
        ]

    def test_below_bounds_exits_1(self, capsys):
        code, doc = run(capsys, "certify", "--family", "corner", "--n", "4",
                        "--t", "1", "--s", "1")
        assert code == 1
        assert doc["conclusion"] == "dense_only"

    def test_g2(self, capsys):
        code, doc = run(capsys, "certify", "--family", "g2", "--t", "18", "--r", "18")
        assert code == 0
        assert doc["closure"]["dim"] == 14


class TestScan:
    def test_clean(self, capsys):
        code, doc = run(capsys, "scan", "--n", "4", "--t", "8", "--s", "3",
                        "--max-syll", "3", "--max-exp", "1")
        assert code == 0 and doc["collisions"] == []

    def test_collision_exits_1(self, capsys):
        code, doc = run(capsys, "scan", "--n", "2", "--t", "1", "--s", "1",
                        "--max-syll", "6", "--max-exp", "1")
        assert code == 1 and len(doc["collisions"]) >= 1


class TestThin:
    def test_certified(self, capsys):
        code, doc = run(capsys, "thin", "--n", "3", "--q", "3", "--s", "3")
        assert code == 0 and doc["certified"] is True
        m = matrix_from_doc(doc["first"])
        assert all(x.denominator == 1 for x in m.flatten())

    def test_uncertified_exits_1(self, capsys):
        code, doc = run(capsys, "thin", "--n", "4", "--q", "1", "--s", "3")
        assert code == 1 and doc["warning"]

import io
import json
import subprocess
import sys

import pytest

from corpus import TREFOIL_PD
from qatwist.cli import MissingDataFile, data_dir, load_table, main, table_verify
from qatwist.diagram import parse_pd
from qatwist.families import pretzel_diagram
from qatwist.tait import goeritz_determinant


def run(*argv):
    buf = io.StringIO()
    code = main(list(argv), buf)
    return code, buf.getvalue()


@pytest.fixture
def trefoil_file(tmp_path):
    p = tmp_path / "trefoil.pd"
    p.write_text(TREFOIL_PD + "\n")
    return str(p)


@pytest.fixture
def pd_file(tmp_path):
    def make(d, name="d.pd"):
        p = tmp_path / name
        p.write_text(d.to_pd() + "\n")
        return str(p)
    return make


class TestDet:
    def test_all_engines(self, trefoil_file):
        code, out = run("det", trefoil_file, "--engine", "all")
        assert code == 0
        assert out.splitlines() == ["tree 3", "goeritz 3", "jones 3", "AGREE"]

    def test_single_engine(self, trefoil_file):
        assert run("det", trefoil_file, "--engine", "goeritz") == (0, "goeritz 3\n")

    def test_stdin(self, monkeypatch):
        monkeypatch.setattr(sys, "stdin", io.StringIO(TREFOIL_PD))
        assert run("det", "-", "--engine", "tree") == (0, "tree 3\n")

    def test_missing_file(self, tmp_path):
        assert run("det", str(tmp_path / "nope.pd"))[0] == 2

    def test_bad_pd(self, tmp_path):
        p = tmp_path / "bad.pd"
        p.write_text("X[1,1,2,3]")
        assert run("det", str(p))[0] == 2

    def test_jones_budget(self, pd_file):
        assert run("jones", pd_file(pretzel_diagram((9, 9))))[0] == 2


class TestCertify:
    def test_round_trip(self, trefoil_file, tmp_path):
        cert = tmp_path / "cert.json"
        code, out = run("qa", "certify", trefoil_file, "-o", str(cert))
        assert code == 0 and out.startswith("Certified det=3")
        assert json.loads(cert.read_text())["det"] == 3
        assert run("qa", "verify", str(cert), trefoil_file) == (0, "VALID\n")

    def test_deterministic(self, trefoil_file):
        assert run("qa", "certify", trefoil_file) == run("qa", "certify", trefoil_file)

    def test_wrong_diagram(self, trefoil_file, pd_file, tmp_path):
        cert = tmp_path / "cert.json"
        run("qa", "certify", trefoil_file, "-o", str(cert))
        code, out = run("qa", "verify", str(cert), pd_file(pretzel_diagram((2, 2, -3))))
        assert code == 1 and out == "INVALID\n"

    def test_malformed_cert(self, trefoil_file, tmp_path):
        cert = tmp_path / "cert.json"
        cert.write_text("{}")
        assert run("qa", "verify", str(cert), trefoil_file)[0] == 1

    def test_unknown(self, pd_file):
        code, out = run("qa", "certify", pd_file(pretzel_diagram((3, 3, -3))))
        assert code == 1 and out.startswith("Unknown")

    def test_det_zero(self, pd_file):
        code, out = run("qa", "certify", pd_file(pretzel_diagram((2, -2))))
        assert code == 1 and out.startswith("NotQA")


class TestTwist:
    def test_c532(self, pd_file):
        code, out = run("twist", pd_file(pretzel_diagram((-1, -1, -1))),
                        "--crossing", "0", "--tangle", "5,3,2")
        assert code == 0
        assert parse_pd(out).n == 12

    def test_negative_tangle(self, trefoil_file):
        code, out = run("twist", trefoil_file, "--crossing", "1", "--tangle", "-3")
        assert code == 0 and goeritz_determinant(parse_pd(out)) == 7

    def test_violation(self, trefoil_file):
        assert run("twist", trefoil_file, "--crossing", "0", "--tangle", "2,1")[0] == 2

    def test_bad_crossing(self, trefoil_file):
        assert run("twist", trefoil_file, "--crossing", "7", "--tangle", "-1")[0] == 2


class TestPretzel:
    def test_classify(self):
        code, out = run("pretzel", "classify", "2,2,-2,-2")
        assert code == 0
        assert out == "NotQA (Theorem 3.2(2)); adequate; Turaev genus 1\n"

    def test_classify_negative_first(self):
        code, out = run("pretzel", "classify", "-2,-2,3")
        assert code == 0 and out.startswith("QA (Theorem 3.2(1))")

    def test_det(self):
        assert run("pretzel", "det", "2,3,-7") == (0, "29\n")

    def test_diagram(self):
        code, out = run("pretzel", "diagram", "3,3,-4")
        assert code == 0 and parse_pd(out).n == 10

    def test_bad_spec(self):
        assert run("pretzel", "det", "2,0")[0] == 2


class TestStates:
    def test_adequacy(self, pd_file):
        code, out = run("adequacy", pd_file(pretzel_diagram((2, 2, -2, -2))))
        assert code == 0 and out.splitlines()[-1] == "adequate"

    def test_turaev(self, pd_file, trefoil_file):
        assert run("turaev-genus", trefoil_file) == (0, "0\n")
        assert run("turaev-genus", pd_file(pretzel_diagram((3, 3, -4)))) == (0, "1\n")


class TestTable:
    def test_bundled(self, tmp_path):
        certs = tmp_path / "certs"
        code, out = run("table", "verify", "--certs", str(certs))
        lines = out.splitlines()
        assert code == 0 and lines[-1] == "15/15 passed"
        assert any(line.startswith("10_129") and "PASS" in line for line in lines)
        assert any(line.startswith("10_160") and "PASS" in line for line in lines)
        root = data_dir()
        for cert in sorted(certs.glob("*.cert.json")):
            name = cert.name.split(".")[0]
            knot = root / ("%s.knot.pd" % name)
            assert run("qa", "verify", str(cert), str(knot)) == (0, "VALID\n")
        assert len(list(certs.glob("*.cert.json"))) == 13

    def test_entries(self):
        entries, negatives = load_table()
        assert len(entries) == 13 and {n.name for n in negatives} == {"9_46", "10_140"}
        by_name = {e.name: e for e in entries}
        assert by_name["10_129"].conway.startswith("32")
        assert all(goeritz_determinant(e.knot) == e.det for e in entries)
        assert all(e.knot.n == 10 for e in entries)

    def test_empty_dir(self, tmp_path):
        with pytest.raises(MissingDataFile):
            table_verify(tmp_path)
        assert run("table", "verify", "--data", str(tmp_path))[0] == 2

    def test_env_override(self, tmp_path, monkeypatch):
        monkeypatch.setenv("QACERT_DATA", str(tmp_path))
        assert data_dir() == tmp_path
        assert run("table", "verify")[0] == 2

    def test_missing_pd(self, tmp_path):
        (tmp_path / "table.json").write_text(json.dumps({"entries": [{
            "name": "x", "conway": "", "reduced": "x.pd", "knot": "x.pd",
            "crossing": 0, "tangle": [1], "axes": 0, "det": 1}]}))
        with pytest.raises(MissingDataFile):
            load_table(tmp_path)


class TestUsage:
    def test_no_command(self):
        assert run()[0] == 2

    def test_module_entry_point(self, trefoil_file):
        res = subprocess.run([sys.executable, "-m", "qatwist", "det", trefoil_file],
                             capture_output=True, text=True)
        assert res.returncode == 0 and res.stdout.endswith("AGREE\n")

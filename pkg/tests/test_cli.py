import json
import subprocess
import sys
from pathlib import Path

from sphclass import manifest as mf
from sphclass.cli import EXIT_CAP, EXIT_FAIL, EXIT_OK, EXIT_USAGE, main, merge_reports

GOLDEN = Path(__file__).parent / "golden"


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def jsonl(text):
    return [json.loads(line) for line in text.splitlines() if line.strip()]


def test_tables_c_char2(capsys):
    code, out, _ = run(capsys, "tables", "--type", "C", "--max-rank", "6", "--char", "2", "--json")
    recs = jsonl(out)
    assert code == EXIT_OK
    assert len(recs) == 10 and {r["family_id"] for r in recs} == {"C.c", "C.a"}
    assert sorted({r["n"] for r in recs}) == [2, 3, 4, 5, 6]
    assert all(r["status"] == "pass" for r in recs)


def test_tables_e8_none_row(capsys):
    code, out, _ = run(capsys, "tables", "--type", "E8", "--char", "2", "--json")
    recs = jsonl(out)
    assert code == EXIT_OK and [r["family_id"] for r in recs] == ["E8.p2.none"]


def test_tables_g2_golden(capsys):
    code, out, _ = run(capsys, "tables", "--type", "G2", "--json")
    assert code == EXIT_OK
    assert out == (GOLDEN / "tables_G2.jsonl").read_text()
    dims = [c["computed"] for r in jsonl(out) for c in r["checks"] if c["name"] == "dim_formula"]
    assert dims == [6, 8]


def test_cells_examples(capsys):
    assert run(capsys, "cells", "--type", "A", "--rank", "3", "--field", "q")[0] == EXIT_OK
    code, out, _ = run(capsys, "cells", "--type", "D", "--rank", "4", "--field", "f5", "--json")
    assert code == EXIT_OK and len(jsonl(out)) == 3
    code, out, _ = run(capsys, "cells", "--type", "F4")
    assert code == EXIT_OK
    assert "not applicable: no classical realization" in out


def test_orbits_examples(capsys):
    code, out, _ = run(capsys, "orbits", "appendix-gl3", "--q", "3,5", "--json")
    recs = jsonl(out)
    assert code == EXIT_OK
    assert [c["computed"] for r in recs for c in r["checks"] if c["name"] == "distinct_b_orbits"] == [2, 4]
    code, out, _ = run(capsys, "orbits", "centralizer", "--type", "A", "--rank", "3", "--q", "3", "--json")
    recs = jsonl(out)
    assert code == EXIT_OK
    assert [r["status"] for r in recs] == ["skipped", "pass"]


def test_exit_codes(capsys):
    assert run(capsys, "tables", "--nope")[0] == EXIT_USAGE
    assert run(capsys, "tables", "--type", "Z9")[0] == EXIT_USAGE
    assert run(capsys, "orbits", "growth", "--case", "nope")[0] == EXIT_USAGE
    assert run(capsys, "orbits", "growth", "--case", "sl2-unipotent", "--q", "11")[0] == EXIT_CAP


def test_resource_cap_env(capsys, monkeypatch):
    monkeypatch.setenv("SPHCLASS_MAX_CLASS", "50")
    assert run(capsys, "orbits", "appendix-gl3", "--q", "5")[0] == EXIT_CAP


def test_failure_exit_code(capsys):
    # the SL(4) three-eigenvalue probe is not increasing over {3, 5, 7}
    code, out, _ = run(capsys, "orbits", "growth", "--case", "sl4-3eigen", "--q", "3,5,7", "--json")
    assert code == EXIT_FAIL
    rec = jsonl(out)[0]
    assert rec["status"] == "fail"
    assert [c for c in rec["checks"] if not c["pass"]][0]["name"] == "growth_signature"


def test_deterministic_output(capsys, tmp_path):
    a = run(capsys, "cells", "--type", "C", "--max-rank", "3", "--json", "-o", str(tmp_path / "a.jsonl"))
    b = run(capsys, "cells", "--type", "C", "--max-rank", "3", "--json", "-o", str(tmp_path / "b.jsonl"),
            "--jobs", "2")
    assert a == b
    assert (tmp_path / "a.jsonl").read_bytes() != b""
    la = (tmp_path / "a.jsonl").read_text().splitlines()
    lb = (tmp_path / "b.jsonl").read_text().splitlines()
    assert la[1:] == lb[1:]
    assert json.loads(la[0])["kind"] == "manifest"


def test_seed_changes_random_lambda():
    m1 = mf.RunManifest("cells", seed=1)
    m2 = mf.RunManifest("cells", seed=1)
    assert m1.lambda_values() == m2.lambda_values()
    assert m1.lambda_values()[:2] == list(mf.LAMBDAS)
    assert len(m1.lambda_values()) == 3
    assert not mf.RunManifest("cells", randomized=False).lambda_values()[2:]


def test_report_merge(capsys, tmp_path):
    runs = tmp_path / "runs"
    runs.mkdir()
    run(capsys, "tables", "--type", "G2", "-o", str(runs / "t.jsonl"))
    run(capsys, "cells", "--type", "C", "--max-rank", "2", "-o", str(runs / "c.jsonl"))
    code, out, _ = run(capsys, "report", str(runs))
    assert code == EXIT_OK
    summary = json.loads(out)
    assert len(summary["families"]) == 25
    fams = {f["family_id"]: f for f in summary["families"]}
    assert fams["G2.p3.a1a1"]["tables"] == {"p=3": "pass"}
    assert fams["C.c"]["cells"]["Q"] == "pass"
    assert fams["E8.p35.d8"]["status"] == "not run"
    # merging the same files again gives the same document
    code2, out2, _ = run(capsys, "report", str(runs / "c.jsonl"), str(runs / "t.jsonl"))
    assert json.loads(out2) == summary


def test_report_empty_directory(capsys, tmp_path):
    assert run(capsys, "report", str(tmp_path))[0] == EXIT_USAGE
    assert run(capsys, "report", str(tmp_path / "missing"))[0] == EXIT_USAGE


def test_merge_marks_failures():
    rec = {"kind": "table", "family_id": "C.c", "group": "C3", "n": 3, "p": 0, "field": "Q",
           "status": "fail", "checks": [], "notes": []}
    assert merge_reports([rec])["status"] == "fail"


def test_console_entry_point():
    out = subprocess.run([sys.executable, "-m", "sphclass", "tables", "--type", "G2", "--char", "2"],
                         capture_output=True, text=True)
    assert out.returncode == 0
    assert "G2.p2.a2" in out.stdout and "1 reports, 0 failing" in out.stdout

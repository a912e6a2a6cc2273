import io
import json
import subprocess
import sys

import pytest

from lie2bialg.bigbracket import degree
from lie2bialg.catalog import catalog_names, export, get_entry
from lie2bialg.cli import main
from lie2bialg.coboundary import lambda_r
from lie2bialg.fileio import Cocycle, dumps, from_file, read_file, to_file, write_file


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out)
    return code, out.getvalue()


@pytest.fixture
def catalog_file(tmp_path):
    def make(name):
        path = tmp_path / f"{name}.json"
        write_file(path, export(name))
        return str(path)
    return make


def test_catalog_list():
    code, text = run("catalog", "list")
    assert code == 0
    assert len(text.strip().splitlines()) == len(catalog_names()) >= 7


def test_catalog_export_matches_library(tmp_path):
    code, text = run("catalog", "export", "gl2-sl2-projection")
    assert code == 0 and text == dumps(export("gl2-sl2-projection"))
    out = tmp_path / "gl2.json"
    assert run("catalog", "export", "gl2-sl2-projection", "--output", str(out))[0] == 0
    assert out.read_text() == text
    assert run("catalog", "export", "nope")[0] == 2
    assert run("catalog", "export")[0] == 2


@pytest.mark.parametrize("name", catalog_names())
def test_verify_every_entry(name, catalog_file):
    code, text = run("verify", "--input", catalog_file(name))
    assert code == 0, text
    assert "PASS" in text


def test_string_unfolded_route(catalog_file):
    assert run("verify", "--input", catalog_file("string-sl2"), "--route", "unfolded")[0] == 0


def test_corrupted_string_reports_witness(tmp_path, catalog_file):
    data = json.loads(open(catalog_file("string-sl2")).read())
    data["tensors"]["bracket_g"][0][-1] = "3"
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(data))
    code, text = run("verify", "--input", str(bad), "--route", "unfolded")
    assert code == 1
    assert "violated jacobiator-plus-phi-h at (0, 1, 2)" in text
    code, text = run("verify", "--input", str(bad), "--report", "machine")
    report = json.loads(text)
    assert code == 1 and report["verdict"] == "fail"
    assert report["schema"] == "lie2-report/1"
    assert {v["identity"] for v in report["violations"]} == {"jacobiator-plus-phi-h", "{s,s}=0"}


def test_machine_report_schema(catalog_file):
    code, text = run("verify", "--input", catalog_file("identity-sl2"), "--report", "machine")
    report = json.loads(text)
    assert code == 0
    assert set(report) == {"schema", "target", "verdict", "classification", "checked",
                           "violations", "notes", "elapsed_seconds", "input", "structure", "route"}
    assert report["verdict"] == "pass" and report["violations"] == []


def test_input_errors(tmp_path, catalog_file):
    empty = tmp_path / "empty.json"
    empty.write_text("")
    assert run("verify", "--input", str(empty))[0] == 2
    assert run("verify", "--input", str(tmp_path / "missing.json"))[0] == 2
    code, text = run("verify", "--input", str(empty), "--report", "machine")
    assert code == 2 and json.loads(text)["verdict"] == "error"
    # a crossed module cannot be read as a Lie 2-coalgebra
    assert run("verify", "--input", catalog_file("identity-sl2"), "--structure", "lie2coalg")[0] == 2
    assert run("verify")[0] == 2
    assert run("frobnicate")[0] == 2


def test_worst_status_wins(tmp_path, catalog_file):
    empty = tmp_path / "empty.json"
    empty.write_text("")
    good = catalog_file("identity-sl2")
    assert run("verify", "--input", good, "--input", str(empty))[0] == 2


def test_parallel_verify_is_deterministic(monkeypatch, catalog_file):
    paths = [catalog_file(n) for n in ("string-sl2", "identity-sl2", "u2-manin")]
    argv = ["verify", "--report", "machine"] + [a for p in paths for a in ("--input", p)]
    serial = run(*argv)
    monkeypatch.setenv("LIE2_JOBS", "3")
    parallel = run(*argv)
    strip = lambda t: [{k: v for k, v in json.loads(line).items() if k != "elapsed_seconds"}
                       for line in t.splitlines()]
    assert serial[0] == parallel[0] == 0
    assert strip(serial[1]) == strip(parallel[1])


def construct(tmp_path, sub, *inputs, name="out.json"):
    out = tmp_path / name
    argv = ["construct", sub, "--output", str(out)]
    for p in inputs:
        argv += ["--input", str(p)]
    code, _ = run(*argv)
    return code, out


def test_from_r_gives_strict_bialgebra(tmp_path, catalog_file):
    code, out = construct(tmp_path, "from-r", catalog_file("gl2-sl2-r-matrix"))
    assert code == 0
    assert run("verify", "--input", str(out))[0] == 0
    assert run("verify", "--input", str(out), "--structure", "lie2bialg")[0] == 0
    assert not from_file(read_file(out)).eta


def test_dual_module_pipeline(tmp_path, catalog_file):
    code, out = construct(tmp_path, "dual-module", catalog_file("sl2-ideal-r-matrix"))
    assert code == 0
    assert read_file(out).structure == "bicrossed-module"
    assert run("verify", "--input", str(out))[0] == 0


def test_dual_module_precondition_fails(tmp_path, catalog_file):
    data = json.loads(open(catalog_file("gl2-sl2-r-matrix")).read())
    data["tensors"]["r"] = [["u0", "u1", "1"], ["u1", "u2", "1"]]
    bad = tmp_path / "bad-r.json"
    bad.write_text(json.dumps(data))
    assert run("verify", "--input", str(bad))[0] == 1
    code, out = construct(tmp_path, "dual-module", bad)
    assert code == 1 and not out.exists()
    # the quasi triple still exists and verifies
    code, out = construct(tmp_path, "from-r", bad)
    assert code == 0 and run("verify", "--input", str(out))[0] == 0


def test_from_cocycle_agrees_with_from_r(tmp_path, catalog_file):
    code, via_r = construct(tmp_path, "from-r", catalog_file("gl2-sl2-r-matrix"), name="t.json")
    assert code == 0
    r = from_file(read_file(catalog_file("gl2-sl2-r-matrix")))
    coc = tmp_path / "coc.json"
    write_file(coc, to_file(Cocycle(r.cm, lambda_r(r.r, r.cm))))
    assert run("verify", "--input", str(coc))[0] == 0
    code, via_lambda = construct(tmp_path, "from-cocycle", coc, name="t2.json")
    assert code == 0
    tensors = lambda path: json.loads(path.read_text())["tensors"]
    assert tensors(via_lambda) == tensors(via_r)


def test_semidirect_of_identity(tmp_path, catalog_file):
    code, out = construct(tmp_path, "semidirect", catalog_file("identity-sl2"))
    assert code == 0
    sf = read_file(out)
    assert (sf.structure, sf.g_dim) == ("lie-algebra", 6)
    assert run("verify", "--input", str(out))[0] == 0


def test_encode_decode_bracket(tmp_path, catalog_file):
    code, enc = construct(tmp_path, "encode", catalog_file("string-sl2"), name="s.json")
    assert code == 0
    element = from_file(read_file(enc)).element
    assert degree(element) == -4
    code, dec = construct(tmp_path, "decode", enc, name="back.json")
    assert code == 0
    assert from_file(read_file(dec)) == get_entry("string-sl2").object()
    code, br = construct(tmp_path, "bracket", enc, enc, name="br.json")
    assert code == 0
    assert not from_file(read_file(br)).element  # {s, s} = 0
    # add a phi term, which breaks phi-equivariance
    data = json.loads(enc.read_text())
    data["tensors"]["element"].append(["x1", "kappa0", "1"])
    other = tmp_path / "other.json"
    other.write_text(json.dumps(data))
    code, br = construct(tmp_path, "bracket", enc, other, name="br2.json")
    assert code == 0
    assert degree(from_file(read_file(br)).element) == -5


def test_construct_input_errors(tmp_path, catalog_file):
    assert construct(tmp_path, "from-r", catalog_file("identity-sl2"))[0] == 2
    assert construct(tmp_path, "decode", catalog_file("identity-sl2"))[0] == 2
    assert construct(tmp_path, "bracket", catalog_file("identity-sl2"))[0] == 2
    assert construct(tmp_path, "semidirect", catalog_file("string-sl2"))[0] == 2
    code, _ = run("construct", "from-r", "--input", catalog_file("gl2-sl2-r-matrix"),
                  "--input", catalog_file("gl2-sl2-r-matrix"))
    assert code == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "lie2bialg", "catalog", "list"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and "string-sl2" in proc.stdout

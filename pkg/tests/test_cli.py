"""Command-line interface: output shapes, exit codes, determinism."""

import json
import os

import pytest

from lietype import cli


def run(*argv):
    """Invoke the entry point in-process; argparse exits are folded in."""
    import contextlib
    import io

    out, err = io.StringIO(), io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        try:
            code = cli.main(list(argv))
        except SystemExit as e:
            code = e.code if isinstance(e.code, int) else 2
    return code, out.getvalue(), err.getvalue()


def test_chartable_text():
    code, out, _ = run("chartable", "--family", "gl", "--n", "2", "--q", "2")
    assert code == 0
    assert out.splitlines()[0] == "3 irreducibles, degrees 1, 1, 2"


def test_orders_exact_value():
    code, out, _ = run("orders", "--type", "E", "--rank", "8", "--q", "2")
    assert code == 0
    assert "337804753143634806261388190614085595079991692242467651576160959909068800000" in out


def test_orders_requires_one_addressing_mode():
    code, _, err = run("orders", "--type", "A", "--rank", "2", "--family", "gl", "--n", "3")
    assert code == 2 and "usage error" in err
    code, _, err = run("orders")
    assert code == 2


def test_tori_tsv_header():
    code, out, _ = run("tori", "--family", "gl", "--n", "2", "--format", "tsv")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "tag\torder_poly\tweyl_order\tsplit_rank\tanisotropic"
    assert lines[1].startswith("(2)\tq^2 - 1\t2\t1")


def test_dl_dims_tsv_frozen():
    code, out, _ = run("dl", "dims", "--family", "gl", "--n", "2", "--q", "5", "--format", "tsv")
    assert code == 0
    assert out.splitlines()[1:] == ["(2)\t24\t2\t-1\t-4", "(1,1)\t16\t2\t1\t6"]


def test_json_is_deterministic_and_versioned():
    runs = [run("green", "--n", "2", "--q", "3", "--chi", "1", "--json") for _ in range(2)]
    assert runs[0] == runs[1]
    payload = json.loads(runs[0][1])
    assert payload["schema"] == 1
    assert payload["degree"] == 2 and payload["verified"]


def test_seed_env_override(monkeypatch):
    monkeypatch.setenv("LIETYPE_SEED", "123")
    code, out, _ = run("chartable", "--family", "gl", "--n", "2", "--q", "2", "--json")
    assert code == 0 and json.loads(out)["degrees"] == [1, 1, 2]
    monkeypatch.setenv("LIETYPE_SEED", "xyz")
    code, _, err = run("chartable", "--family", "gl", "--n", "2", "--q", "2")
    assert code == 2 and "LIETYPE_SEED" in err


def test_verify_single_check():
    code, out, _ = run("verify", "--suite", "2")
    assert code == 0
    lines = out.splitlines()
    assert lines[0].startswith("[PASS]  2 weyl-exponent-identities")
    assert lines[-1] == "1/1 checks passed"


def test_verify_json_shape():
    code, out, _ = run("verify", "--suite", "2", "--json")
    payload = json.loads(out)
    assert code == 0 and payload["ok"] is True
    assert payload["results"][0]["number"] == 2
    assert "seconds" not in payload["results"][0]


def test_verify_rejects_unknown_checks():
    for bad in ("0", "14", "1,99", "nope"):
        code, _, err = run("verify", "--suite", bad)
        assert code == 2, bad


def test_verify_exit_one_on_failure(monkeypatch):
    from lietype.acceptance import CheckResult

    def fake_suite(numbers=None, seed=0):
        return [CheckResult(1, "stub", False, "forced failure", 0.0)]

    monkeypatch.setattr(cli, "run_suite", fake_suite)
    code, out, _ = run("verify", "--suite", "1")
    assert code == 1
    assert out.splitlines()[0].startswith("[FAIL]")


def test_resource_exit_codes():
    code, _, err = run("group", "--family", "gl", "--n", "4", "--q", "3")
    assert code == 3 and "24261120" in err
    code, _, err = run("dl", "drinfeld", "--q", "7", "--ext", "5")
    assert code == 3 and "282475249" in err


def test_usage_and_verification_exit_codes():
    code, _, err = run("tori", "--family", "sp", "--n", "3")
    assert code == 2
    code, _, err = run("green", "--n", "2", "--q", "3", "--chi", "4")
    assert code == 2 and "regular" in err


def test_field_subcommand():
    code, out, _ = run("field", "--q", "9")
    assert code == 0
    assert out.splitlines()[0] == "F_9 = F_3[x] / (2*x^0 + 2*x^1 + 1*x^2)"
    code, _, err = run("field", "--q", "12")
    assert code == 2


def test_oct_verify():
    code, out, _ = run("oct", "verify", "--p", "5", "--samples", "200")
    assert code == 0
    assert "composition identity holds on 200 random pairs over F_5" in out
    assert "non-associating basis triple" in out


def test_u3_json_frozen():
    code, out, _ = run("dl", "u3", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["dimension"] == -3
    assert payload["constituents"] == [[1, 1], [8, -1], [2, 2]]


def test_report_writes_files(tmp_path):
    out_dir = str(tmp_path / "rep")
    code, out, _ = run("report", "--family", "gl", "--n", "2", "--q", "3", "--out", out_dir)
    assert code == 0
    names = sorted(os.listdir(out_dir))
    assert names == [
        "gl2_f3_degrees.png",
        "gl2_f3_table.tsv",
        "gl2_f3_tori.png",
        "gl2_f3_torus_dims.tsv",
    ]
    table = (tmp_path / "rep" / "gl2_f3_table.tsv").read_text().splitlines()
    assert table[0].startswith("degree\t")
    assert len(table) == 9  # header + 8 rows

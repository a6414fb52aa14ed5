import json

import pytest

from butforms.cli import EXIT_BOUND, EXIT_FAIL, EXIT_PASS, EXIT_USAGE, Report, RunConfig, UsageError, main, run_suite


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr()


def test_suite_passes(capsys):
    code, out = run(capsys, "reduction")
    assert code == EXIT_PASS
    assert out.out.strip().endswith("reduction: pass (13 checks)")


def test_suite_flag_form(capsys):
    code, _ = run(capsys, "--suite", "braid", "--shape", "uniform:3,1")
    assert code == EXIT_PASS


def test_json_report(capsys, tmp_path):
    out = tmp_path / "r.json"
    code, printed = run(capsys, "algebroid", "--json", "--out", str(out))
    rep = json.loads(out.read_text())
    assert code == EXIT_PASS and printed.out == out.read_text()
    assert rep["status"] == "pass" and rep["config"]["suite"] == "algebroid"
    assert all(c["witness"] is None and "elapsed" not in c for c in rep["checks"])


def test_timings_flag(capsys):
    code, printed = run(capsys, "rmatrix", "--shape", "full:2", "--json", "--timings")
    assert code == EXIT_PASS
    assert all("elapsed" in c for c in json.loads(printed.out)["checks"])


@pytest.mark.parametrize(
    "argv",
    [["nosuch"], ["jacobi", "--shape", "blob:3"], ["jacobi", "--K", "0"], ["dump", "nothing"], ["jacobi", "extra"], ["--bogus"]],
)
def test_usage_errors(capsys, argv):
    code, _ = run(capsys, *argv)
    assert code == EXIT_USAGE


def test_max_n_gives_resource_bound(capsys):
    code, out = run(capsys, "rmatrix", "--max-N", "2")
    assert code == EXIT_BOUND
    assert "resource-bound" in out.out


def test_step_bound_gives_resource_bound(capsys):
    code, _ = run(capsys, "quantum", "--shape", "full:3", "--step-bound", "5")
    assert code == EXIT_BOUND


def test_failing_check_exit_code():
    rep = Report("x", {}, [{"id": "a", "status": "pass"}, {"id": "b", "status": "fail"}])
    assert rep.exit_code == EXIT_FAIL
    rep = Report("x", {}, [{"id": "a", "status": "resource-bound"}])
    assert rep.exit_code == EXIT_BOUND


def test_config_file_overrides_flags(capsys, tmp_path):
    cfg = tmp_path / "c.json"
    cfg.write_text(json.dumps({"suite": "reduction", "seed": 5}))
    code, out = run(capsys, "jacobi", "--config", str(cfg), "--json")
    rep = json.loads(out.out)
    assert code == EXIT_PASS and rep["suite"] == "reduction" and rep["config"]["seed"] == 5


def test_config_file_rejects_unknown_keys(capsys, tmp_path):
    cfg = tmp_path / "c.json"
    cfg.write_text(json.dumps({"colour": 1}))
    assert run(capsys, "jacobi", "--config", str(cfg))[0] == EXIT_USAGE


def test_validate():
    with pytest.raises(UsageError):
        RunConfig(suite="jacobi", samples=0).validate()


def test_dump_objects(capsys, tmp_path):
    code, out = run(capsys, "dump", "braid-matrix", "--shape", "uniform:2,1")
    assert code == EXIT_PASS
    assert json.loads(out.out)["matrix"] == [["a[1,2]", "-1"], ["1", "0"]]
    m = tmp_path / "m.json"
    m.write_text(json.dumps([["1", "3/2"], ["0", "1"]]))
    code, out = run(capsys, "dump", "braid-matrix", "--shape", "uniform:2,1", "--matrix", str(m))
    assert json.loads(out.out)["matrix"] == [["3/2", "-1"], ["1", "0"]]
    code, out = run(capsys, "dump", "shape", "--shape", "uniform:2,1")
    assert json.loads(out.out)["free"] == ["a[1,2]"]
    code, out = run(capsys, "dump", "r-matrix", "--N", "2")
    assert json.loads(out.out)["N"] == 2
    code, out = run(capsys, "dump", "central-set", "--shape", "uniform:3,1")
    assert code == EXIT_PASS and json.loads(out.out)["c"]


def test_dump_needs_shape(capsys):
    assert run(capsys, "dump", "shape")[0] == EXIT_USAGE


def test_conjectures_do_not_gate_status():
    rep = run_suite(RunConfig(suite="conjectures", m=2))
    assert rep.checks == []
    assert rep.status == "pass"
    assert all(c["label"] == "CONJECTURE" for c in rep.conjectures)


def test_parallel_matches_serial():
    a = run_suite(RunConfig(suite="central", jobs=1)).to_json()
    b = run_suite(RunConfig(suite="central", jobs=3)).to_json()
    assert a == b

"""Acceptance criteria 1-11, exact (tolerance 0).

Each criterion selects check records from one suite report and requires every
selected record to pass. One pass/fail line per criterion is printed in the
terminal summary.
"""

import os
import subprocess
import sys
from pathlib import Path

import pytest

from butforms.cli import RunConfig, run_suite

SEED = 0

# criterion -> (suite, id prefixes, minimum number of selected checks)
CRITERIA = {
    1: ("jacobi", ("jacobi.symbolic[", "jacobi.numeric[full:6]"), 7),
    2: ("reduction", ("reduction.coisotropy[", "reduction.symmetric_table["), 11),
    3: ("reduction", ("reduction.triangular_table[5]",), 1),
    4: ("central", ("central.elements[", "central.minor_commutation[", "central.palindrome["), 19),
    5: ("central", ("central.rank[",), 6),
    6: ("algebroid", ("algebroid.",), 11),
    7: ("groupoid", ("groupoid.",), 8),
    8: ("braid", ("braid.",), 11),
    9: ("rmatrix", ("rmatrix.ybe[", "rmatrix.bracket[", "rmatrix.r_operators[", "rmatrix.q_one["), 8),
    10: ("quantum", ("quantum.",), 28),
}
NAMES = {
    1: "jacobi identity",
    2: "reduction and coisotropy",
    3: "triangular bracket table",
    4: "central elements",
    5: "rank and leaf dimension",
    6: "algebroid",
    7: "groupoid",
    8: "braid action",
    9: "R-matrix",
    10: "quantum algebra",
    11: "determinism",
}

RESULTS = {}
_REPORTS = {}


def report(suite):
    if suite not in _REPORTS:
        _REPORTS[suite] = run_suite(RunConfig(suite=suite, seed=SEED))
    return _REPORTS[suite]


def selected(suite, prefixes):
    return [c for c in report(suite).checks if c["id"].startswith(prefixes)]


@pytest.mark.parametrize("k", sorted(CRITERIA))
def test_criterion(k):
    suite, prefixes, least = CRITERIA[k]
    recs = selected(suite, prefixes)
    bad = [(c["id"], c["status"], c["witness"]) for c in recs if c["status"] != "pass"]
    RESULTS[k] = not bad and len(recs) >= least
    assert len(recs) >= least, f"only {len(recs)} checks selected"
    assert not bad, bad


def fresh_run(suite):
    # a separate interpreter, so no cache carries over between runs
    src = str(Path(__file__).resolve().parents[1] / "src")
    env = dict(os.environ, PYTHONPATH=src + os.pathsep + os.environ.get("PYTHONPATH", ""))
    cmd = [sys.executable, "-m", "butforms.cli", suite, "--seed", str(SEED), "--json"]
    return subprocess.run(cmd, capture_output=True, text=True, env=env).stdout


def test_criterion_11():
    suites = sorted({s for s, _, _ in CRITERIA.values()})
    diffs = [s for s in suites if report(s).to_json() != fresh_run(s)]
    RESULTS[11] = not diffs
    assert not diffs, diffs


def summary_lines():
    out = []
    for k in range(1, 12):
        if k in RESULTS:
            out.append(f"criterion {k:2d} {NAMES[k]:<26} {'PASS' if RESULTS[k] else 'FAIL'}")
    return out

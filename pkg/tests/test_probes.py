"""Conjecture probes. These record findings; they never gate acceptance."""

import pytest

from butforms.quantum.probes import (
    LABEL,
    affine_bn1_probe,
    braid_m3_probe,
    braid_probe_consistency,
    conjecture_probe,
)


def by_name(rep):
    return {c["check"]: c for c in rep["checks"]}


def test_probe_path_reproduces_closed_form_at_m2():
    assert braid_probe_consistency(2)["status"] == "pass"


def test_braid_probe_at_m2():
    rep = braid_m3_probe(m=2)
    assert rep["label"] == LABEL
    assert rep["status"] == "pass"
    assert rep["middle_entry_exponents"] == [-1]


@pytest.mark.slow
def test_braid_probe_at_m3():
    rep = braid_m3_probe(m=3)
    assert rep["status"] == "pass", [c for c in rep["checks"] if c["status"] != "pass"]
    assert (rep["a"], rep["b"]) == (3, 2)
    assert rep["middle_entry_exponents"] == [-3]


def test_affine_probe_finding():
    # the conjectured matrix keeps the level structure and the mask, but the
    # corner block comes out as q^2 times the transposed block, which breaks
    # the relations and the conjugation law on level 0
    rep = affine_bn1_probe()
    checks = by_name(rep)
    assert rep["status"] == "fail"
    assert rep["corner_transpose_exponents"] == [2]
    for name in ("levels", "level0.mask", "level1.dagger"):
        assert checks[name]["status"] == "pass"
    for name in ("level0.relations", "level0.conjugation"):
        assert checks[name]["status"] == "fail"


def test_affine_probe_needs_m2():
    assert affine_bn1_probe(m=3)["status"] == "unsupported"


def test_dispatch():
    assert conjecture_probe("braid-m3", m=2)["probe"] == "braid-m3"
    with pytest.raises(ValueError):
        conjecture_probe("nope")

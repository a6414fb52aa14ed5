import pytest

from butforms.quantum.braid import (
    automorphism_n2,
    braid_relation,
    conjugation_preservation,
    default_exponents,
    inverse_identity,
    middle_entry_law,
    relation_preservation,
    total_braid,
)
from butforms.quantum.matrices import UnsupportedBlock
from butforms.shapes import ButShape


@pytest.mark.parametrize("m, ab", [(1, (1, 0)), (2, (2, 1))])
def test_default_exponents(m, ab):
    assert default_exponents(m) == ab


def test_default_exponents_unsupported():
    with pytest.raises(UnsupportedBlock):
        default_exponents(3)


@pytest.mark.parametrize("label", ["uniform:2,1", "uniform:2,2"])
def test_relations_preserved_exhaustively(label):
    rep = relation_preservation(ButShape.parse(label))
    assert rep["status"] == "pass"
    assert rep["checked"] == ButShape.parse(label).N ** 4


def test_relations_preserved_sampled_3_2():
    rep = relation_preservation(ButShape.uniform(3, 2), count=40, seed=7)
    assert rep["status"] == "pass" and rep["checked"] == 40


def test_conjugation_preserved():
    assert conjugation_preservation(ButShape.uniform(2, 2))["status"] == "pass"


@pytest.mark.parametrize("m", [1, 2])
def test_swap(m):
    assert automorphism_n2(m)["status"] == "pass"


def test_middle_entry():
    assert middle_entry_law(2)["status"] == "pass"


def test_q_braid_relation():
    assert braid_relation(3, 1)["status"] == "pass"


def test_total_braid():
    assert total_braid(3, 1)["status"] == "pass"


def test_inverse_identity():
    assert inverse_identity(ButShape.uniform(2, 2))["status"] == "pass"


def test_wrong_exponents_break_relations():
    rep = relation_preservation(ButShape.uniform(2, 2), a=0, b=0)
    assert rep["status"] == "fail"

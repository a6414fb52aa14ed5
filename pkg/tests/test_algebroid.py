import pytest

from butforms.algebroid import (
    BIVECTOR_SCALE,
    braid_generators_membership,
    bracket_recovery_check,
    groupoid_axioms,
    groupoid_membership,
    kernel_witness,
    section_closure_check,
    skew_symmetry_check,
    tangency_check,
)
from butforms.kernel.linalg import identity
from butforms.shapes import ButShape

U = ButShape.uniform


def test_bivector_scale():
    assert BIVECTOR_SCALE == -2


@pytest.mark.parametrize("shape", [ButShape.full(2), ButShape.full(3), U(2, 2)], ids=str)
def test_skew_symmetry(shape):
    assert skew_symmetry_check(shape)["status"] == "pass"


@pytest.mark.parametrize("shape", [U(3, 1), U(2, 2)], ids=str)
def test_bracket_recovery(shape):
    assert bracket_recovery_check(shape)["status"] == "pass"


@pytest.mark.parametrize("shape", [U(2, 1), U(1, 2)], ids=str)
def test_section_closure(shape):
    assert section_closure_check(shape)["status"] == "pass"


@pytest.mark.parametrize("shape", [U(2, 2), U(3, 1), U(1, 2)], ids=str)
def test_tangency(shape):
    assert tangency_check(shape)["status"] == "pass"


def test_kernel_witness_on_single_block():
    assert kernel_witness(U(1, 2)) is not None


@pytest.mark.parametrize("shape", [U(3, 1), U(2, 2)], ids=str)
def test_groupoid_axioms(shape):
    assert groupoid_axioms(shape, count=5, seed=1)["status"] == "pass"


@pytest.mark.parametrize("shape", [U(3, 1), U(2, 2), U(3, 2)], ids=str)
def test_braid_generators_are_members(shape):
    assert braid_generators_membership(shape, seed=2)["status"] == "pass"


def test_scaling_that_breaks_the_shape_is_rejected():
    from butforms.algebroid import base_matrix
    from butforms.brackets import shape_point
    from butforms.kernel.sampling import rand_small, task_rng

    shape = U(2, 2)
    A = base_matrix(shape, shape_point(shape, task_rng(1, "x"), rand_small))
    B = [[2, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]
    assert not groupoid_membership(shape, A, B)[0]
    assert groupoid_membership(shape, A, identity(4))[0]

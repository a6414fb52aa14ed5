import pytest
from hypothesis import given
from hypothesis import strategies as st

from butforms.kernel.gens import a_gen
from butforms.shapes import FIG_STAIRCASE, ButShape, ShapeError


@pytest.mark.parametrize(
    "label, N, free",
    [
        ("full:3", 3, 9),
        ("symmetric:3", 3, 6),
        ("uniform:3,1", 3, 3),
        ("uniform:2,2", 4, 12),
        ("partition:2,3", 5, 4 + 9 + 6),
    ],
)
def test_parse_and_free_count(label, N, free):
    s = ButShape.parse(label)
    assert s.N == N
    assert s.label() == label
    assert len(s.free_gens) == free


@pytest.mark.parametrize("bad", ["", "full", "uniform:2", "partition:0,2", "staircase:3,1", "cube:3"])
def test_bad_descriptors(bad):
    with pytest.raises(ShapeError):
        ButShape.parse(bad)


@given(st.integers(1, 4), st.integers(1, 3))
def test_uniform_mask(n, m):
    s = ButShape.uniform(n, m)
    for i in range(1, s.N + 1):
        for j in range(1, s.N + 1):
            assert s.admitted(i, j) == (s.block_of(i) <= s.block_of(j))
    assert ButShape.from_json(s.to_json()) == s


def test_staircase_figure_shape():
    s = ButShape.staircase(FIG_STAIRCASE)
    assert s.admitted(2, 1) and not s.admitted(3, 1) and s.admitted(3, 2)
    assert a_gen(2, 1) in s.free_gens


def test_unit_diagonal_for_size_one_blocks():
    s = ButShape.uniform(3, 1)
    assert all(s.unit_entry(i, i) for i in range(1, 4))
    assert a_gen(1, 1) not in s.free_gens

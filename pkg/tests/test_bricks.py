import pytest

from klrspecht.bricks import BrickSpace, block_swap, compositions, verify_brick_theorems
from klrspecht.garnir import COLUMN, ROW
from klrspecht.klr import sign_map


def test_compositions():
    assert compositions(0) == [()]
    assert compositions(3) == [(3,), (1, 2), (2, 1), (1, 1, 1)]
    assert len(compositions(5)) == 16


def test_block_swap():
    assert block_swap(1, 2, 2) == (3, 4, 1, 2)
    assert block_swap(2, 3, 1) == (1, 3, 2)
    with pytest.raises(ValueError):
        block_swap(2, 2, 2)


def test_rejects_bad_input():
    with pytest.raises(ValueError):
        BrickSpace(0, (1, 1))
    with pytest.raises(ValueError):
        BrickSpace(2, (1, 0))


def test_two_blocks_e_two():
    sp = BrickSpace(2, (1, 1), ROW)
    assert len(sp.weight_indices) == 2 == sp.expected_dimension
    rep = verify_brick_theorems(sp)
    assert rep.passed, rep.first_failure()


def test_sigma_kills_generator_inside_a_part():
    sp = BrickSpace(2, (2,), ROW)
    assert not sp.sigma(1, sp.generator)
    assert sp.tau(1, sp.generator) == sp.generator


def test_sigma_square():
    sp = BrickSpace(3, (1, 1, 1), COLUMN)
    for idx in sp.weight_indices:
        v = sp.sigma(1, {idx: 1})
        assert sp.sigma(1, v) == {k: -2 * c for k, c in v.items()}


def test_tau_braid_e3():
    sp = BrickSpace(3, (1, 1, 1), ROW)
    for idx in sp.weight_indices:
        b = {idx: 1}
        assert sp.tau(1, sp.tau(2, sp.tau(1, b))) == sp.tau(2, sp.tau(1, sp.tau(2, b)))


def test_k_one_is_vacuous():
    rep = verify_brick_theorems(BrickSpace(3, (1,), ROW))
    assert rep.passed and any(c.name == "vacuous" for c in rep.checks)


def test_sign_map_swaps_orientation():
    row = BrickSpace(3, (1, 1), ROW, 1)
    col = BrickSpace(3, (1, 1), COLUMN, 2)
    assert sign_map(row.sigma_element(1)) == col.sigma_element(1)


@pytest.mark.parametrize("orientation", [ROW, COLUMN])
@pytest.mark.parametrize("e", [2, 3])
@pytest.mark.parametrize("lam", [lam for k in (2, 3) for lam in compositions(k)])
def test_brick_theorem_grid(e, lam, orientation):
    rep = verify_brick_theorems(BrickSpace(e, lam, orientation))
    assert rep.passed, rep.first_failure()


@pytest.mark.parametrize("i", [1, 2])
def test_other_residues(i):
    rep = verify_brick_theorems(BrickSpace(3, (1, 1, 1), ROW, i))
    assert rep.passed, rep.first_failure()

import pytest

from klrspecht.garnir import COLUMN, ROW
from klrspecht.ground import GroundData
from klrspecht.specht import SpechtConfig, SpechtModule
from klrspecht.tableaux import multipartitions, parse_shape
from klrspecht.verify import (
    bruhat_adjacent_filter,
    check_relations,
    dual_degree_formula,
    verify_duality,
    verify_induction,
    verify_sign_twist,
    verify_specht,
)

CFG = SpechtConfig()
G2 = GroundData(2, (0,))


@pytest.mark.parametrize("orientation", [ROW, COLUMN])
def test_two_one_full_pass(orientation):
    rep = verify_specht(SpechtModule(parse_shape("2,1"), G2, orientation))
    assert rep.passed, rep.first_failure()
    names = {c.name for c in rep.checks}
    assert {"rank", "garnir-kills-generator", "cyclotomic", "straighten-triangular"} <= names


def test_one_one_cyclotomic():
    S = SpechtModule(parse_shape("1,1"), G2)
    assert S.rank == 1
    assert verify_specht(S).passed


def test_empty_is_vacuous():
    S = SpechtModule(parse_shape("-"), G2)
    assert verify_specht(S).passed
    assert verify_sign_twist(parse_shape("-"), G2, CFG).passed


def test_sign_twist_examples():
    assert verify_sign_twist(parse_shape("2,1"), G2, CFG).passed
    rep = verify_sign_twist(parse_shape("1|1"), GroundData(2, (0, 1)), CFG)
    assert rep.passed, rep.first_failure()


def test_duality_and_dual_degrees():
    rep = verify_duality(parse_shape("2,1"), G2, CFG)
    assert rep.passed, rep.first_failure()
    assert {"gdim-identity", "rank"} <= {c.name for c in rep.checks}
    assert dual_degree_formula(parse_shape("3,1"), GroundData(3, (0,)), CFG).passed


def test_induction_examples():
    assert verify_induction(parse_shape("1|1"), GroundData(2, (0, 0)), CFG).passed
    assert verify_induction(parse_shape("3"), G2, CFG).passed


def test_bruhat_adjacent_filter():
    assert bruhat_adjacent_filter(parse_shape("3,2,1")).passed


def test_broken_module_is_caught():
    """Corrupting one cached action column must make the relation check fail."""
    S = SpechtModule(parse_shape("3,1"), G2)
    S.act_basis(("p", 1), 0)
    key = next(k for k in S._cols if k[0] == ("p", 1))
    S._cols[key] = {0: 7}
    assert not all(c.passed for c in check_relations(S, G2))


SWEEP = [
    (mu, GroundData(e, ch))
    for e in (0, 2, 3)
    for level, top, charges in ((1, 5, ((0,),)), (2, 3, ((0, 0), (0, 1))))
    for ch in charges
    for n in range(top + 1)
    for mu in multipartitions(n, level)
]


@pytest.mark.parametrize("mu, g", SWEEP, ids=lambda x: getattr(x, "to_text", lambda: f"e{x.e}k{x.charge}")())
def test_suites_on_small_grid(mu, g):
    for rep in (
        verify_specht(SpechtModule(mu, g, ROW)),
        verify_specht(SpechtModule(mu, g, COLUMN)),
        verify_sign_twist(mu, g, CFG),
        verify_duality(mu, g, CFG),
        dual_degree_formula(mu, g, CFG),
    ):
        assert rep.passed, (rep.title, rep.first_failure())

import pytest

from klrspecht.garnir import COLUMN, ROW, garnir_nodes
from klrspecht.ground import GroundData
from klrspecht.klr import normal_form
from klrspecht.perms import preferred_word
from klrspecht.specht import (
    ResourceCap,
    SpechtConfig,
    SpechtModule,
    brick_sign,
    build_specht,
    garnir_element,
)
from klrspecht.tableaux import (
    Node,
    arrow_relation,
    codegree,
    degree,
    enumerate_tableaux,
    initial_tableaux,
    multipartitions,
    parse_shape,
    parse_tableau,
    permutation_between,
)

G2 = GroundData(2, (0,))


def test_two_one_module():
    S = build_specht(parse_shape("2,1"), G2)
    assert S.M.rank == 3 and S.rank == 2
    assert [t.to_text() for t in S.standard_tableaux] == ["1,2|3", "1,3|2"]
    assert S.basis_degrees == [1, -1]


def test_single_row_and_empty():
    S = build_specht(parse_shape("4"), G2)
    assert S.rank == 1
    top, _ = initial_tableaux(parse_shape("4"))
    assert dict(S.character()) == {(degree(top, G2), top.residue_sequence(G2)): 1}
    E = build_specht(parse_shape("-"), G2)
    assert E.rank == 1


def test_size_cap():
    with pytest.raises(ResourceCap):
        SpechtModule(parse_shape("1|7,7,4,1"), GroundData(2, (0, 0)))
    with pytest.raises(ResourceCap):
        SpechtModule(parse_shape("3,2"), G2, config=SpechtConfig(cap=5))


def test_straighten_examples():
    S = build_specht(parse_shape("2,1"), G2)
    assert S.straighten(parse_tableau("2,3|1")) == {}
    t = parse_tableau("1,3|2")
    assert S.straighten(t) == {t: 1}


def test_generator_relations_two_one():
    S = build_specht(parse_shape("2,1"), G2)
    z = S.generator
    top, _ = initial_tableaux(S.mu)
    i_mu = top.residue_sequence(G2)
    assert S.act(("e", i_mu), z) == z
    assert not S.act(("e", (1, 0, 1)), z)
    for r in range(1, 3):
        if arrow_relation(top, r) == "right":
            assert not S.act(("p", r), z)


def test_garnir_element_small():
    ge = garnir_element(parse_shape("2,1"), Node(1, 1, 1), ROW, G2)
    assert ge.data.k == 1 and len(ge.data.coset_perms) == 1
    assert ge.element == normal_form([("p", 1), ("p", 2), ("e", (0, 1, 1))], 2, (0, 1, 1))


def test_garnir_element_without_bricks_is_the_garnir_psi():
    mu = parse_shape("1|7,7,4,1")
    g = GroundData(0, (0, 0))
    ge = garnir_element(mu, Node(2, 3, 2), ROW, g)
    top, _ = initial_tableaux(mu)
    w = permutation_between(top, ge.data.garnir_tableau)
    j = top.residue_sequence(g)
    assert ge.element == normal_form([("p", r) for r in preferred_word(w)] + [("e", j)], 0, j)
    assert len(ge.element.terms) == 1


def test_worked_garnir_element():
    mu = parse_shape("1|7,7,4,1")
    ge = garnir_element(mu, Node(2, 3, 2), ROW, GroundData(2, (0, 0)))
    assert ge.summands == 3
    assert ge.element.degrees() == {ge.degree}
    col = garnir_element(mu, Node(3, 1, 2), COLUMN, GroundData(2, (0, 0)))
    assert col.summands == 2


def test_brick_sign():
    assert brick_sign(ROW, 3) == 1
    assert brick_sign(COLUMN, 2) == 1
    assert brick_sign(COLUMN, 3) == -1


SMALL = [
    (mu, GroundData(e, ch))
    for e in (0, 2, 3)
    for level, top, charges in ((1, 5, ((0,),)), (2, 4, ((0, 0), (0, 1))))
    for ch in charges
    for n in range(top + 1)
    for mu in multipartitions(n, level)
]


@pytest.mark.parametrize("orientation", [ROW, COLUMN])
@pytest.mark.parametrize("mu, g", SMALL, ids=lambda x: getattr(x, "to_text", lambda: f"e{x.e}k{x.charge}")())
def test_basis_and_straightening(mu, g, orientation):
    S = SpechtModule(mu, g, orientation)
    st_ = enumerate_tableaux(mu, "standard")
    assert S.rank == len(st_)
    want = [degree(t, g) if orientation == ROW else codegree(t, g) for t in S.standard_tableaux]
    assert S.basis_degrees == want
    kind = "row_strict" if orientation == ROW else "column_strict"
    for t in enumerate_tableaux(mu, kind):
        exp = S.straighten(t)
        if t.is_standard():
            assert exp == {t: 1}
            continue
        for s, c in exp.items():
            assert s.is_standard() and c != 0
            assert s.residue_sequence(g) == t.residue_sequence(g)
    for A in garnir_nodes(mu, orientation):
        ge = garnir_element(mu, A, orientation, g)
        vec = S.M.generator
        out = {}
        for (u, m, i), c in ge.element.terms:
            if any(m):
                continue
            v = S.M.act_word(preferred_word(u), S.M.act(("e", i), vec))
            for k, x in v.items():
                out[k] = out.get(k, 0) + c * x
        assert not S.project({k: x for k, x in out.items() if x})

import pytest

from klrspecht.klr import normal_form
from klrspecht.soundness import FAMILIES, engine_soundness, relation, rewriter_confluence


def test_small_soundness_run_passes():
    rep = engine_soundness(es=(0, 2, 3), max_d=5, per_family=40, seed=3)
    assert rep.passed, rep.first_failure()
    names = {c.name for c in rep.checks}
    assert names == {f"e={e} {fam}" for e in (0, 2, 3) for fam in FAMILIES}


def test_small_confluence_run_passes():
    rep = rewriter_confluence(count=100, seed=5)
    assert rep.passed


@pytest.mark.parametrize("e", [2, 3])
def test_wrong_right_hand_side_is_detected(e):
    """Dropping the error term of the braid relation must leave a nonzero difference."""
    x = (0, 1, 0) if e == 2 else (1, 0, 1)
    lhs, rhs = relation("braid", x, 1, 0, e)
    truncated = rhs[:1]

    def total(side):
        out = None
        for c, toks in side:
            term = normal_form(toks, e, x, c)
            out = term if out is None else out + term
        return out

    assert (total(lhs) - total(rhs)).is_zero()
    assert not (total(lhs) - total(truncated)).is_zero()


def test_wrong_quadratic_is_detected():
    x = (0, 1)
    lhs, rhs = relation("quadratic", x, 1, 0, 2)
    flipped = [(-c, toks) for c, toks in rhs]
    a = normal_form(lhs[0][1], 2, x)
    b = sum((normal_form(t, 2, x, c) for c, t in flipped), normal_form([("e", x)], 2, x, 0))
    assert not (a - b).is_zero()


def test_unknown_family():
    with pytest.raises(ValueError):
        relation("nonsense", (0, 0), 1, 0, 2)

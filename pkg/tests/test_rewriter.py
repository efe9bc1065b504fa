import random

import pytest

from klrspecht.klr import normal_form
from klrspecht.perms import braid_graph, is_fully_commutative
from klrspecht.rewriter import TokenRewriter, rewrite
from klrspecht.soundness import random_tokens


def test_rejects_unknown_strategy():
    with pytest.raises(ValueError):
        TokenRewriter(2, "middle")


def test_simple_relations():
    assert rewrite([("p", 1), ("p", 1), ("e", (0, 0))], 2, (0, 0)).is_zero()
    assert rewrite([("p", 1), ("y", 2), ("e", (1, 1))], 3, (1, 1)) == normal_form(
        [("p", 1), ("y", 2), ("e", (1, 1))], 3, (1, 1)
    )


@pytest.mark.parametrize("e", [0, 2, 3])
@pytest.mark.parametrize("strategy", ["left", "right"])
def test_rewriter_matches_engine(e, strategy):
    rng = random.Random(e * 7 + len(strategy))
    pool = list(range(e)) if e else [0, 1, 2, 3]
    for _ in range(150):
        d = rng.randint(2, 5)
        i = tuple(rng.choice(pool) for _ in range(d))
        tokens = random_tokens(rng, d, rng.randint(1, 7)) + [("e", i)]
        assert rewrite(tokens, e, i, strategy) == normal_form(tokens, e, i)


@pytest.mark.parametrize("e", [0, 2, 3])
def test_fully_commutative_words_give_one_normal_form(e):
    rng = random.Random(40 + e)
    pool = list(range(e)) if e else [0, 1, 2]
    checked = 0
    while checked < 30:
        d = rng.randint(3, 5)
        w = tuple(rng.sample(range(1, d + 1), d))
        if not is_fully_commutative(w):
            continue
        i = tuple(rng.choice(pool) for _ in range(d))
        words, _ = braid_graph(w)
        forms = {rewrite([("p", r) for r in word] + [("e", i)], e, i) for word in words}
        assert len(forms) == 1
        checked += 1

"""Randomized soundness checks for the normal-form engine and the token rewriter.

Relation instances are checked in context: a relation L = R holding at the
idempotent e(i) is sandwiched between a random left factor and a random
right factor whose weight flows into i, and both products are normalized.
The idempotent at the far right is pulled back through the right factor, so
every instance is a genuine element identity in R_alpha rather than a
restatement of one recursion step.
"""

from __future__ import annotations

import random
from itertools import product
from typing import Sequence

from .ground import canonical
from .klr import KlrAlgebra, Token, braid_poly, normal_form, quad_poly
from .report import CheckCollector, Report
from .rewriter import TokenRewriter

FAMILIES = (
    "idempotent",
    "y-idempotent",
    "psi-idempotent",
    "y-commute",
    "psi-y-commute",
    "psi-commute",
    "y-psi",
    "psi-y",
    "quadratic",
    "braid",
)

Sum = list[tuple[int, list[Token]]]


def _swap(x: tuple, r: int) -> tuple:
    return x[: r - 1] + (x[r], x[r - 1]) + x[r + 1 :]


def _residue_pool(e: int) -> list[int]:
    return list(range(e)) if e else [0, 1, 2, 3]


def _poly_tokens(mono: Sequence[int]) -> list[Token]:
    out: list[Token] = []
    for s, k in enumerate(mono, 1):
        out += [("y", s)] * k
    return out


def random_tokens(rng: random.Random, d: int, n: int) -> list[Token]:
    """A random product of n generators y_s and psi_r (no idempotents)."""
    out: list[Token] = []
    for _ in range(n):
        if d > 1 and rng.random() < 0.6:
            out.append(("p", rng.randrange(1, d)))
        else:
            out.append(("y", rng.randrange(1, d + 1)))
    return out


def _flow(tokens: Sequence[Token], i: tuple) -> tuple:
    x = i
    for t in reversed(tokens):
        if t[0] == "p":
            x = _swap(x, t[1])
    return x


def relation(family: str, x: tuple, r: int, s: int, e: int) -> tuple[Sum, Sum]:
    """Both sides of one defining relation at the idempotent e(x)."""
    d = len(x)
    ex: Token = ("e", x)
    if family == "idempotent":
        other = x if s % 2 else _swap(x, r)
        lhs = [(1, [("e", other), ex])]
        return lhs, ([(1, [ex])] if other == x else [])
    if family == "y-idempotent":
        return [(1, [("y", s), ex])], [(1, [ex, ("y", s), ex])]
    if family == "psi-idempotent":
        return [(1, [("p", r), ex])], [(1, [("e", _swap(x, r)), ("p", r), ex])]
    if family == "y-commute":
        t = 1 + (s % d)
        return [(1, [("y", s), ("y", t), ex])], [(1, [("y", t), ("y", s), ex])]
    if family == "psi-y-commute":
        return [(1, [("p", r), ("y", s), ex])], [(1, [("y", s), ("p", r), ex])]
    if family == "psi-commute":
        return [(1, [("p", r), ("p", s), ex])], [(1, [("p", s), ("p", r), ex])]
    delta = 1 if x[r - 1] == x[r] else 0
    if family == "y-psi":
        rhs: Sum = [(1, [("y", r), ("p", r), ex])]
        if delta:
            rhs.append((1, [ex]))
        return [(1, [("p", r), ("y", r + 1), ex])], rhs
    if family == "psi-y":
        rhs = [(1, [("p", r), ("y", r), ex])]
        if delta:
            rhs.append((1, [ex]))
        return [(1, [("y", r + 1), ("p", r), ex])], rhs
    if family == "quadratic":
        rhs = [(c, _poly_tokens(mono) + [ex]) for mono, c in quad_poly(x, r, e).items()]
        return [(1, [("p", r), ("p", r), ex])], rhs
    if family == "braid":
        lhs = [(1, [("p", r), ("p", r + 1), ("p", r), ex])]
        rhs = [(1, [("p", r + 1), ("p", r), ("p", r + 1), ex])]
        rhs += [(c, _poly_tokens(mono) + [ex]) for mono, c in braid_poly(x, r, e).items()]
        return lhs, rhs
    raise ValueError(f"unknown relation family {family!r}")


def _indices(family: str, rng: random.Random, d: int) -> tuple[int, int] | None:
    """Pick (r, s) valid for the family, or None if d is too small."""
    if family == "braid":
        if d < 3:
            return None
        return rng.randrange(1, d - 1), 0
    if family in ("idempotent",):
        return (rng.randrange(1, d) if d > 1 else 1), rng.randrange(2)
    if family in ("y-idempotent", "y-commute"):
        return 1, rng.randrange(1, d + 1)
    if d < 2:
        return None
    r = rng.randrange(1, d)
    if family == "psi-y-commute":
        choices = [s for s in range(1, d + 1) if s not in (r, r + 1)]
        return (r, rng.choice(choices)) if choices else None
    if family == "psi-commute":
        choices = [s for s in range(1, d) if abs(s - r) > 1]
        return (r, rng.choice(choices)) if choices else None
    return r, 0


def _evaluate(side: Sum, left: list[Token], right: list[Token], e: int, alpha, alg) -> object:
    total = None
    for coef, tokens in side:
        term = normal_form(left + tokens + right, e, alpha, coef, alg)
        total = term if total is None else total + term
    return total


def engine_soundness(
    es: Sequence[int] = (0, 2, 3),
    max_d: int = 6,
    per_family: int = 500,
    seed: int = 0,
    context: int = 3,
) -> Report:
    """Normalize random in-context relation instances; every difference must vanish.

    For each e and family the first instances walk through every local
    residue pattern on three consecutive strands (covering all the e = 2
    double-arrow cases); the rest are random.
    """
    rng = random.Random(seed)
    rep = Report("engine relations", {"es": list(es), "max_d": max_d, "per_family": per_family, "seed": seed})
    for e in es:
        alg = KlrAlgebra(e)
        pool = _residue_pool(e)
        patterns = list(product(pool, repeat=3))
        for family in FAMILIES:
            col = CheckCollector()
            done = 0
            attempts = 0
            while done < per_family:
                attempts += 1
                low = {"braid": 3, "psi-commute": 4}.get(family, 2)
                d = rng.randint(min(low, max_d), max_d)
                picked = _indices(family, rng, d)
                if picked is None:
                    if attempts > 50 * per_family:
                        break
                    continue
                r, s = picked
                site = [rng.choice(pool) for _ in range(d)]
                if done < len(patterns):
                    start = min(r, d - 2) - 1
                    for off, val in enumerate(patterns[done]):
                        if start + off < d:
                            site[start + off] = val
                x_at = tuple(canonical(a, e) for a in site)
                right = random_tokens(rng, d, rng.randint(0, context))
                x = _flow(right[::-1], x_at)
                left = random_tokens(rng, d, rng.randint(0, context))
                lhs, rhs = relation(family, x_at, r, s, e)
                tail = right + [("e", x)]
                a = _evaluate(lhs, left, tail, e, x, alg)
                b = _evaluate(rhs, left, tail, e, x, alg) if rhs else None
                diff = a if b is None else a - b
                col.record(
                    f"e={e} {family}",
                    diff.is_zero(),
                    {"left": left, "residues": list(x_at), "r": r, "s": s, "right": right},
                )
                done += 1
            rep.extend(col.checks())
    return rep


def rewriter_confluence(
    count: int = 1000,
    seed: int = 0,
    es: Sequence[int] = (0, 2, 3),
    max_d: int = 5,
    max_len: int = 7,
) -> Report:
    """Random token products rewritten with both strategies and with the engine."""
    rng = random.Random(seed)
    rep = Report("rewriter confluence", {"count": count, "seed": seed, "max_d": max_d, "max_len": max_len})
    col = CheckCollector()
    for n in range(count):
        e = es[n % len(es)]
        pool = _residue_pool(e)
        d = rng.randint(2, max_d)
        i = tuple(rng.choice(pool) for _ in range(d))
        tokens = random_tokens(rng, d, rng.randint(1, max_len)) + [("e", i)]
        left = TokenRewriter(e, "left").normal_form(tokens, i)
        right = TokenRewriter(e, "right").normal_form(tokens, i)
        engine = normal_form(tokens, e, i)
        col.record("left=right", left == right, {"e": e, "tokens": tokens})
        col.record("rewriter=engine", left == engine, {"e": e, "tokens": tokens})
    rep.extend(col.checks())
    return rep


__all__ = ["FAMILIES", "engine_soundness", "random_tokens", "relation", "rewriter_confluence"]

"""Independent reference implementations used only by the test suite."""

from __future__ import annotations

from itertools import combinations, permutations

import sympy

from klrspecht.ground import arrow
from klrspecht.perms import length


def poly_symbols(d: int):
    return sympy.symbols(f"y1:{d + 1}")


def _swap_vars(f, ys, r):
    a, b = ys[r - 1], ys[r]
    return f.subs({a: b, b: a}, simultaneous=True)


def _twist(x, r, e, ys):
    kind = arrow(x[r - 1], x[r], e)
    if kind in ("from", "double"):
        return ys[r] - ys[r - 1]
    return sympy.Integer(1)


def poly_rep_apply(tokens, i, f, e):
    """Apply a token string to f e(i) in the polynomial representation.

    Returns a dict idempotent -> polynomial (only one idempotent survives).
    Demazure operators handle equal residues; otherwise psi_r swaps the
    variables and multiplies by a twisting polynomial.
    """
    d = len(i)
    ys = poly_symbols(d)
    x = tuple(i)
    f = sympy.expand(f)
    for t in reversed(tokens):
        if t[0] == "e":
            if tuple(t[1]) != x:
                return None
        elif t[0] == "y":
            f = sympy.expand(ys[t[1] - 1] * f)
        else:
            r = t[1]
            sf = _swap_vars(f, ys, r)
            if x[r - 1] == x[r]:
                f = sympy.cancel((sf - f) / (ys[r - 1] - ys[r]))
            else:
                f = _twist(x, r, e, ys) * sf
            f = sympy.expand(f)
            x = x[: r - 1] + (x[r], x[r - 1]) + x[r + 1 :]
    return x, f


def rank_oracle_bruhat(u, w) -> bool:
    """Tableau criterion: u <= w iff every rank count of u is bounded by w's."""
    d = len(u)
    for p in range(1, d + 1):
        for q in range(1, d + 1):
            cu = sum(1 for a in range(p) if u[a] >= q)
            cw = sum(1 for a in range(p) if w[a] >= q)
            if cu > cw:
                return False
    return True


def all_perms(d):
    return [tuple(p) for p in permutations(range(1, d + 1))]


def inversions(w) -> int:
    return sum(1 for a, b in combinations(range(len(w)), 2) if w[a] > w[b])


def brute_min_coset_reps(composition):
    """Filter all of S_d for elements shortest in their coset w S_lambda."""
    d = sum(composition)
    blocks, start = [], 0
    for part in composition:
        blocks.append(list(range(start, start + part)))
        start += part
    seen = {}
    for w in all_perms(d):
        key = tuple(frozenset(w[p] for p in block) for block in blocks)
        if key not in seen or length(w) < length(seen[key]):
            seen[key] = w
    return sorted(seen.values())

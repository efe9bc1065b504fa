"""A literal token rewriter for KLR expressions.

This is deliberately independent of the memoized engine in :mod:`klr`: it
rewrites whole token strings with the defining relations, choosing redexes
either from the left or from the right. Agreement of the two strategies with
each other and with the engine is the confluence check.

Rules, applied to a term with a fixed right idempotent:

1. idempotent tokens are resolved against the weight flowing through them;
2. a ``y`` immediately left of a ``psi`` is moved right;
3. a non-reduced psi-word is shortened with the quadratic relation after a
   braid-graph walk that makes the two equal letters adjacent;
4. a reduced psi-word that is not the preferred word is walked to the
   preferred word, queueing the braid error terms.
"""

from __future__ import annotations

from typing import Sequence

from .ground import canonical
from .klr import (
    DEFAULT_BUDGET,
    KlrElement,
    Token,
    braid_poly,
    idempotents,
    quad_poly,
)
from .perms import BudgetExceeded, is_reduced, preferred_word, word_to_perm

STRATEGIES = ("left", "right")


def _swap(x: tuple, r: int) -> tuple:
    return x[: r - 1] + (x[r], x[r - 1]) + x[r + 1 :]


def _idem_right_of(tokens: Sequence[Token], pos: int, i: tuple) -> tuple:
    """The idempotent just to the right of position ``pos - 1``."""
    x = i
    for t in reversed(tokens[pos:]):
        if t[0] == "p":
            x = _swap(x, t[1])
    return x


def _poly_tokens(mono: Sequence[int]) -> list[Token]:
    out: list[Token] = []
    for s, k in enumerate(mono, 1):
        out += [("y", s)] * k
    return out


def _front_moves(word: list[int], t: int, offset: int, moves: list) -> None:
    """Moves making ``word`` start with ``t`` (a left descent of its permutation)."""
    if word[0] == t:
        return
    r = word[0]
    sub = word[1:]
    _front_moves(sub, t, offset + 1, moves)
    word[1:] = sub
    if abs(r - t) > 1:
        moves.append((offset, "commute"))
        word[0], word[1] = word[1], word[0]
        return
    sub = word[2:]
    _front_moves(sub, r, offset + 2, moves)
    word[2:] = sub
    moves.append((offset, "braid"))
    word[0:3] = [t, r, t]


def _back_moves(word: list[int], t: int, offset: int, moves: list) -> None:
    """Moves making ``word`` end with ``t`` (a right descent of its permutation)."""
    if word[-1] == t:
        return
    r = word[-1]
    n = len(word)
    sub = word[:-1]
    _back_moves(sub, t, offset, moves)
    word[:-1] = sub
    if abs(r - t) > 1:
        moves.append((offset + n - 2, "commute"))
        word[-2], word[-1] = word[-1], word[-2]
        return
    sub = word[:-2]
    _back_moves(sub, r, offset, moves)
    word[:-2] = sub
    moves.append((offset + n - 3, "braid"))
    word[-3:] = [t, r, t]


class TokenRewriter:
    def __init__(self, e: int, strategy: str = "left", budget: int = DEFAULT_BUDGET):
        if strategy not in STRATEGIES:
            raise ValueError(f"strategy must be one of {STRATEGIES}")
        self.e = e
        self.strategy = strategy
        self.budget = budget
        self.steps = 0

    def _tick(self) -> None:
        self.steps += 1
        if self.steps > self.budget:
            raise BudgetExceeded(f"rewrite budget of {self.budget} steps exhausted")

    def normal_form(
        self, tokens: Sequence[Token], alpha: Sequence[int], coefficient: int = 1
    ) -> KlrElement:
        e = self.e
        alpha = tuple(sorted(canonical(a, e) for a in alpha))
        d = len(alpha)
        result: dict = {}
        for i in idempotents(alpha):
            resolved = self._resolve(tokens, i)
            if resolved is None:
                continue
            for (u, m), c in self._reduce(resolved, i, coefficient, d).items():
                result[(u, m, i)] = c
        return KlrElement.build(e, alpha, result)

    def _resolve(self, tokens: Sequence[Token], i: tuple) -> list[Token] | None:
        x = i
        kept: list[Token] = []
        for t in reversed(tokens):
            if t[0] == "e":
                if tuple(canonical(a, self.e) for a in t[1]) != x:
                    return None
                continue
            if t[0] == "p":
                x = _swap(x, t[1])
            kept.append(t)
        kept.reverse()
        return kept

    def _reduce(self, tokens: list[Token], i: tuple, coefficient: int, d: int) -> dict:
        out: dict = {}
        work = [(coefficient, list(tokens))]
        while work:
            coef, toks = work.pop()
            self._tick()
            done = self._step(coef, toks, i, d, work)
            if done is not None:
                key = done
                value = out.get(key, 0) + coef
                if value:
                    out[key] = value
                else:
                    out.pop(key)
        return out

    def _step(self, coef: int, toks: list[Token], i: tuple, d: int, work: list):
        """Rewrite one term; return its basis key once it is normal."""
        redexes = [
            p for p in range(len(toks) - 1) if toks[p][0] == "y" and toks[p + 1][0] == "p"
        ]
        if redexes:
            p = redexes[0] if self.strategy == "left" else redexes[-1]
            s, r = toks[p][1], toks[p + 1][1]
            x = _idem_right_of(toks, p + 2, i)
            if s not in (r, r + 1):
                work.append((coef, toks[:p] + [toks[p + 1], toks[p]] + toks[p + 2 :]))
                return None
            other = r + 1 if s == r else r
            work.append((coef, toks[:p] + [("p", r), ("y", other)] + toks[p + 2 :]))
            if x[r - 1] == x[r]:
                sign = -1 if s == r else 1
                work.append((sign * coef, toks[:p] + toks[p + 2 :]))
            return None

        n = sum(1 for t in toks if t[0] == "p")
        word = [t[1] for t in toks[:n]]
        ys = toks[n:]
        if not is_reduced(word, d):
            self._shorten(coef, toks, word, i, work)
            return None
        target = preferred_word(word_to_perm(word, d))
        if tuple(word) != target:
            self._walk(coef, toks, word, list(target), i, work)
            return None
        m = [0] * d
        for t in ys:
            m[t[1] - 1] += 1
        return word_to_perm(word, d), tuple(m)

    def _apply_moves(self, coef: int, toks: list[Token], moves, i: tuple, work: list) -> None:
        for pos, kind in moves:
            a, b = toks[pos][1], toks[pos + 1][1]
            if kind == "commute":
                toks[pos], toks[pos + 1] = toks[pos + 1], toks[pos]
                continue
            x = _idem_right_of(toks, pos + 3, i)
            r = min(a, b)
            sign = 1 if a == r else -1
            for mono, c in braid_poly(x, r, self.e).items():
                work.append(
                    (sign * c * coef, toks[:pos] + _poly_tokens(mono) + toks[pos + 3 :])
                )
            toks[pos : pos + 3] = [("p", b), ("p", a), ("p", b)]

    def _shorten(self, coef: int, toks: list[Token], word: list[int], i: tuple, work: list) -> None:
        d = len(i)
        moves: list = []
        if self.strategy == "left":
            j = next(j for j in range(1, len(word) + 1) if not is_reduced(word[:j], d)) - 1
            prefix = word[:j]
            _back_moves(prefix, word[j], 0, moves)
            first = j - 1
        else:
            j = next(j for j in range(len(word) - 1, -1, -1) if not is_reduced(word[j:], d))
            suffix = word[j + 1 :]
            _front_moves(suffix, word[j], j + 1, moves)
            first = j
        toks = list(toks)
        self._apply_moves(coef, toks, moves, i, work)
        r = toks[first][1]
        assert toks[first + 1] == ("p", r), "walk failed to make equal letters adjacent"
        x = _idem_right_of(toks, first + 2, i)
        for mono, c in quad_poly(x, r, self.e).items():
            work.append((c * coef, toks[:first] + _poly_tokens(mono) + toks[first + 2 :]))

    def _walk(
        self, coef: int, toks: list[Token], word: list[int], target: list[int], i: tuple, work: list
    ) -> None:
        moves: list = []
        cur = list(word)
        if self.strategy == "left":
            for idx, t in enumerate(target):
                sub = cur[idx:]
                _front_moves(sub, t, idx, moves)
                cur[idx:] = sub
        else:
            for idx in range(len(target) - 1, -1, -1):
                sub = cur[: idx + 1]
                _back_moves(sub, target[idx], 0, moves)
                cur[: idx + 1] = sub
        toks = list(toks)
        self._apply_moves(coef, toks, moves, i, work)
        work.append((coef, toks))


def rewrite(
    tokens: Sequence[Token], e: int, alpha: Sequence[int], strategy: str = "left", coefficient: int = 1
) -> KlrElement:
    return TokenRewriter(e, strategy).normal_form(tokens, alpha, coefficient)

"""Permutations of {1, ..., d} in one-line notation.

Permutations are plain tuples; ``w[x - 1]`` is the image of ``x``. Products
compose right to left, so ``compose(u, v)(x) = u(v(x))``. The simple
reflection s_r acting on the left swaps the *values* r and r + 1.
"""

from __future__ import annotations

from collections import deque
from functools import lru_cache
from itertools import combinations
from typing import Iterator, Sequence

Perm = tuple[int, ...]
Word = tuple[int, ...]

#: Name of the reduced-word policy recorded in every persisted output.
POLICY = "leftmost-descent"


class BudgetExceeded(RuntimeError):
    """A configurable enumeration or rewriting budget was exhausted."""


def identity(d: int) -> Perm:
    return tuple(range(1, d + 1))


def compose(u: Perm, v: Perm) -> Perm:
    return tuple(u[x - 1] for x in v)


def inverse(w: Perm) -> Perm:
    inv = [0] * len(w)
    for pos, x in enumerate(w, 1):
        inv[x - 1] = pos
    return tuple(inv)


def length(w: Perm) -> int:
    d = len(w)
    return sum(1 for a in range(d) for b in range(a + 1, d) if w[a] > w[b])


def s_left(r: int, w: Perm) -> Perm:
    """Return s_r w, which swaps the values r and r + 1 in the one-line form."""
    return tuple(r + 1 if x == r else r if x == r + 1 else x for x in w)


def s_right(w: Perm, r: int) -> Perm:
    """Return w s_r, which swaps the entries in positions r and r + 1."""
    lst = list(w)
    lst[r - 1], lst[r] = lst[r], lst[r - 1]
    return tuple(lst)


def is_left_descent(w: Perm, r: int) -> bool:
    """True when l(s_r w) < l(w), i.e. r + 1 appears before r in ``w``."""
    return w.index(r + 1) < w.index(r)


def is_right_descent(w: Perm, r: int) -> bool:
    return w[r - 1] > w[r]


def left_descents(w: Perm) -> list[int]:
    inv = inverse(w)
    return [r for r in range(1, len(w)) if inv[r] < inv[r - 1]]


@lru_cache(maxsize=None)
def preferred_word(w: Perm) -> Word:
    """The canonical reduced word: repeatedly strip the smallest left descent."""
    letters: list[int] = []
    while True:
        descents = left_descents(w)
        if not descents:
            return tuple(letters)
        r = descents[0]
        letters.append(r)
        w = s_left(r, w)


def word_to_perm(word: Sequence[int], d: int) -> Perm:
    w = identity(d)
    for r in reversed(word):
        w = s_left(r, w)
    return w


def is_reduced(word: Sequence[int], d: int) -> bool:
    w = identity(d)
    for r in reversed(word):
        if is_left_descent(w, r):
            return False
        w = s_left(r, w)
    return True


def act(w: Perm, seq: Sequence) -> tuple:
    """Place permutation action (w . i)_r = i_{w^{-1}(r)}."""
    out = [None] * len(seq)
    for pos, x in enumerate(w):
        out[x - 1] = seq[pos]
    return tuple(out)


@lru_cache(maxsize=1 << 20)
def bruhat_leq(u: Perm, w: Perm) -> bool:
    """Bruhat comparison u <= w via the lifting property along the preferred word of w.

    If s is a left descent of w then u <= w iff s u <= s w when s is also a
    left descent of u, and iff u <= s w otherwise.
    """
    if len(u) != len(w):
        raise ValueError("permutations of different rank")
    if u == w:
        return True
    lu, lw = length(u), length(w)
    if lu >= lw:
        return False
    if lu == 0:
        return True
    s = preferred_word(w)[0]
    sw = s_left(s, w)
    if is_left_descent(u, s):
        return bruhat_leq(s_left(s, u), sw)
    return bruhat_leq(u, sw)


def composition_blocks(composition: Sequence[int]) -> list[range]:
    blocks, start = [], 1
    for part in composition:
        if part < 0:
            raise ValueError(f"invalid composition {tuple(composition)}")
        blocks.append(range(start, start + part))
        start += part
    return blocks


def parabolic_generators(composition: Sequence[int]) -> list[int]:
    """Indices t with s_t in the Young subgroup of ``composition``."""
    return [t for block in composition_blocks(composition) for t in list(block)[:-1]]


def min_coset_reps(composition: Sequence[int]) -> list[Perm]:
    """Minimal length representatives of the left cosets w S_lambda.

    These are the permutations increasing on every block of positions. The
    list is sorted by length and then by one-line notation.
    """
    blocks = composition_blocks(composition)
    d = sum(composition)
    reps: list[Perm] = []

    def fill(b: int, remaining: tuple[int, ...], one_line: list[int]) -> None:
        if b == len(blocks):
            reps.append(tuple(one_line))
            return
        for chosen in combinations(remaining, len(blocks[b])):
            rest = tuple(x for x in remaining if x not in chosen)
            fill(b + 1, rest, one_line + list(chosen))

    fill(0, tuple(range(1, d + 1)), [])
    reps.sort(key=lambda w: (length(w), w))
    return reps


def coset_factor(u: Perm, composition: Sequence[int]) -> tuple[Perm, Perm]:
    """Factor u = rep . v with rep minimal in u S_lambda and v in S_lambda."""
    rep = list(u)
    v = list(range(1, len(u) + 1))
    for block in composition_blocks(composition):
        positions = list(block)
        values = [u[p - 1] for p in positions]
        ordered = sorted(values)
        for p, x in zip(positions, ordered):
            rep[p - 1] = x
        # v sends position p to the position in the block holding u(p) in rep
        for p, x in zip(positions, values):
            v[p - 1] = positions[ordered.index(x)]
    return tuple(rep), tuple(v)


def is_fully_commutative(w: Perm) -> bool:
    """321-avoidance test on the one-line notation."""
    d = len(w)
    smallest_after = [0] * (d + 1)
    smallest_after[d] = d + 1
    for p in range(d - 1, -1, -1):
        smallest_after[p] = min(w[p], smallest_after[p + 1])
    largest_before = 0
    for p in range(d):
        if largest_before > w[p] > smallest_after[p + 1]:
            return False
        largest_before = max(largest_before, w[p])
    return True


def braid_graph(w: Perm, cap: int = 10_000) -> tuple[list[Word], list[tuple[int, int, str]]]:
    """All reduced words of ``w`` with the commuting and braid moves between them.

    Returns the vertex list (starting at the preferred word) and edges
    ``(index_a, index_b, "commute" | "braid")`` with ``index_a < index_b``.
    """
    start = preferred_word(w)
    index = {start: 0}
    vertices = [start]
    edges: list[tuple[int, int, str]] = []
    queue = deque([start])
    while queue:
        word = queue.popleft()
        for nxt, kind in _moves(word):
            if nxt not in index:
                if len(vertices) >= cap:
                    raise BudgetExceeded(f"braid graph exceeds {cap} vertices")
                index[nxt] = len(vertices)
                vertices.append(nxt)
                queue.append(nxt)
            a, b = index[word], index[nxt]
            if a < b:
                edges.append((a, b, kind))
    return vertices, edges


def _moves(word: Word) -> Iterator[tuple[Word, str]]:
    for p in range(len(word) - 1):
        a, b = word[p], word[p + 1]
        if abs(a - b) > 1:
            yield word[:p] + (b, a) + word[p + 2 :], "commute"
        if p + 2 < len(word) and abs(a - b) == 1 and word[p + 2] == a:
            yield word[:p] + (b, a, b) + word[p + 3 :], "braid"

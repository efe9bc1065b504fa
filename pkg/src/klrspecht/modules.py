"""Cyclic modules presented by a residue sequence and a parabolic annihilator.

A permutation module M(s) is R_alpha modulo the left ideal generated by all
y's, the idempotents other than e(j) and the psi_t for t internal to a
segment. Its basis is psi_w m for w a minimal length left coset
representative of the Young subgroup of the segment composition.

``act`` multiplies psi_w m on the left by a generator inside the truncated
engine, then rewrites every psi_u m with u outside the coset representatives
by factoring u = rep * v: the product psi_rep psi_v m vanishes (the parabolic
part kills m), and its normal form is psi_u plus strictly shorter terms, so
psi_u m is minus those shorter terms.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from itertools import product
from typing import Iterable, Sequence

from .ground import canonical
from .klr import DEFAULT_BUDGET, KlrAlgebra, Poly, Token, _add_into, word_degree
from .perms import (
    Perm,
    act,
    coset_factor,
    identity,
    min_coset_reps,
    parabolic_generators,
    preferred_word,
)

Vector = dict[int, int]


def segment(i: int, n: int, e: int) -> tuple[int, ...]:
    """The residue run i, i+1, ... (n > 0) or i, i-1, ... (n < 0) of length |n|."""
    if n == 0:
        raise ValueError("a segment has nonzero length")
    step = 1 if n > 0 else -1
    return tuple(canonical(i + step * k, e) for k in range(abs(n)))


@dataclass(frozen=True)
class CyclicPresentation:
    e: int
    segments: tuple[tuple[int, ...], ...]
    shift: int = 0

    @property
    def generator_residues(self) -> tuple[int, ...]:
        return tuple(x for s in self.segments for x in s)

    @property
    def composition(self) -> tuple[int, ...]:
        return tuple(len(s) for s in self.segments)

    @property
    def rank(self) -> int:
        return sum(self.composition)

    @property
    def parabolic(self) -> tuple[int, ...]:
        return tuple(parabolic_generators(self.composition))


class GradedCharacter(Counter):
    """Multiset of (degree, residue sequence) pairs."""

    def graded_dimension(self) -> Counter:
        out: Counter = Counter()
        for (deg, _), mult in self.items():
            out[deg] += mult
        return _clean(out)

    def rank(self) -> int:
        return sum(self.values())

    def to_rows(self) -> list[tuple[int, tuple[int, ...], int]]:
        return sorted((deg, res, mult) for (deg, res), mult in self.items())


def _clean(poly: Counter) -> Counter:
    return Counter({k: v for k, v in poly.items() if v})


def laurent_to_json(poly: Counter) -> dict[str, int]:
    return {str(k): poly[k] for k in sorted(poly) if poly[k]}


def laurent_to_text(poly: Counter) -> str:
    if not poly:
        return "0"
    parts = []
    for k in sorted(poly):
        c = poly[k]
        mono = "1" if k == 0 else ("q" if k == 1 else f"q^{k}")
        parts.append(mono if c == 1 else f"{c}*{mono}")
    return " + ".join(parts)


@dataclass(frozen=True)
class ActionMatrix:
    """The matrix of one generator: column j is the image of basis vector j."""

    token: Token
    columns: tuple[Vector, ...]
    degrees: tuple[int, ...]
    """Degrees of the basis vectors, indexing both rows and columns."""

    @property
    def size(self) -> int:
        return len(self.columns)

    def to_dense(self) -> list[list[int]]:
        n = self.size
        rows = [[0] * n for _ in range(n)]
        for j, col in enumerate(self.columns):
            for i, c in col.items():
                rows[i][j] = c
        return rows

    def degree_shifts(self) -> set[int]:
        """Differences deg(row) - deg(column) over the nonzero entries."""
        return {self.degrees[i] - self.degrees[j] for j, col in enumerate(self.columns) for i in col}

    def to_json(self) -> dict:
        kind, arg = self.token
        return {
            "generator": f"{kind}{arg}" if kind != "e" else f"e({','.join(map(str, arg))})",
            "size": self.size,
            "entries": [[i, j, c] for j, col in enumerate(self.columns) for i, c in sorted(col.items())],
        }


class ActionMixin:
    """Generic helpers on top of ``act_basis(token, index) -> Vector``."""

    e: int
    d: int

    def act_basis(self, token: Token, idx: int) -> Vector:  # pragma: no cover - abstract
        raise NotImplementedError

    def act(self, token: Token, vec: Vector) -> Vector:
        out: Vector = {}
        for idx, c in vec.items():
            _add_into(out, self.act_basis(token, idx), c)
        return out

    def act_tokens(self, tokens: Sequence[Token], vec: Vector) -> Vector:
        """Apply a product of generators, rightmost token first."""
        for t in reversed(tokens):
            vec = self.act(t, vec)
            if not vec:
                break
        return vec

    def act_word(self, word: Sequence[int], vec: Vector) -> Vector:
        return self.act_tokens([("p", r) for r in word], vec)

    def act_poly(self, poly: Poly, vec: Vector) -> Vector:
        out: Vector = {}
        for mono, c in poly.items():
            cur = vec
            for s, k in enumerate(mono, 1):
                for _ in range(k):
                    cur = self.act(("y", s), cur)
            _add_into(out, cur, c)
        return out

    def action_columns(self, token: Token) -> list[Vector]:
        return [self.act_basis(token, idx) for idx in range(len(self.basis_residues))]

    def action_matrix(self, token: Token) -> "ActionMatrix":
        return ActionMatrix(token, tuple(self.action_columns(token)), tuple(self.basis_degrees))

    basis_residues: list[tuple[int, ...]]
    basis_degrees: list[int]

    def character(self) -> GradedCharacter:
        return GradedCharacter(zip(self.basis_degrees, self.basis_residues))

    def graded_dimension(self) -> Counter:
        return self.character().graded_dimension()


class PermutationModule(ActionMixin):
    """The module M(s) with basis psi_w m for minimal coset representatives w."""

    def __init__(self, presentation: CyclicPresentation, budget: int = DEFAULT_BUDGET):
        self.presentation = presentation
        self.e = presentation.e
        self.j = presentation.generator_residues
        self.d = len(self.j)
        self.composition = presentation.composition
        self.alg = KlrAlgebra(self.e, truncated=True, budget=budget)
        self.basis: list[Perm] = min_coset_reps(self.composition)
        self.index = {w: k for k, w in enumerate(self.basis)}
        self.basis_residues = [act(w, self.j) for w in self.basis]
        self.basis_degrees = [
            word_degree(preferred_word(w), self.j, self.e) + presentation.shift
            for w in self.basis
        ]
        self._zero = (0,) * self.d
        self._phi: dict[Perm, Vector] = {}
        self._cols: dict[tuple[Token, int], Vector] = {}

    @classmethod
    def from_segments(
        cls, e: int, segments: Iterable[Sequence[int]], shift: int = 0, budget: int = DEFAULT_BUDGET
    ) -> "PermutationModule":
        segs = tuple(tuple(canonical(x, e) for x in s) for s in segments)
        return cls(CyclicPresentation(e, segs, shift), budget)

    @property
    def rank(self) -> int:
        return len(self.basis)

    @cached_property
    def generator(self) -> Vector:
        return {self.index[identity(self.d)]: 1}

    def vector_of(self, w: Perm) -> Vector:
        """psi_w m expressed in the basis, for an arbitrary permutation w."""
        if w in self.index:
            return {self.index[w]: 1}
        return self._rewrite(w)

    def _rewrite(self, u: Perm) -> Vector:
        hit = self._phi.get(u)
        if hit is not None:
            return hit
        rep, v = coset_factor(u, self.composition)
        terms = self.alg.word_left(preferred_word(rep), {(v, self._zero): 1}, self.j)
        lead = terms.get((u, self._zero), 0)
        if lead != 1:
            raise AssertionError(f"leading coefficient {lead} for {u} in the coset factorization")
        out: Vector = {}
        for (w, _), c in terms.items():
            if w != u:
                _add_into(out, self.vector_of(w), -c)
        self._phi[u] = out
        return out

    def reduce(self, terms: dict) -> Vector:
        out: Vector = {}
        for (w, _), c in terms.items():
            _add_into(out, self.vector_of(w), c)
        return out

    def act_basis(self, token: Token, idx: int) -> Vector:
        key = (token, idx)
        hit = self._cols.get(key)
        if hit is not None:
            return hit
        w = self.basis[idx]
        kind = token[0]
        if kind == "e":
            target = tuple(canonical(x, self.e) for x in token[1])
            out = {idx: 1} if self.basis_residues[idx] == target else {}
        elif kind == "p":
            out = self.reduce(self.alg._psi(token[1], w, self.j))
        elif kind == "y":
            out = self.reduce(self.alg._y(token[1], w, self.j))
        else:
            raise ValueError(f"unknown generator token {token!r}")
        self._cols[key] = out
        return out

    def basis_json(self) -> list[dict]:
        return [
            {"rep": list(w), "degree": deg, "residues": list(res)}
            for w, deg, res in zip(self.basis, self.basis_degrees, self.basis_residues)
        ]


def induced_graded_dimension(characters: Sequence[GradedCharacter], e: int) -> Counter:
    """Graded dimension of the induction product of modules with the given characters.

    The induced module is free over the minimal coset representatives w of the
    block Young subgroup, and psi_w tensored with basis vectors of residues
    i_1, ..., i_n has degree deg psi_w e(i_1 ... i_n) plus the factor degrees.
    """
    out: Counter = Counter()
    factors = [list(ch.items()) for ch in characters]
    if any(not f for f in factors):
        return out
    sizes = [len(next(iter(ch))[1]) for ch in characters]
    reps = min_coset_reps(sizes)
    words = [preferred_word(w) for w in reps]
    for combo in product(*factors):
        residues = tuple(x for (deg_res, _) in combo for x in deg_res[1])
        base = sum(deg_res[0] for (deg_res, _) in combo)
        mult = 1
        for _, m in combo:
            mult *= m
        for word in words:
            out[base + word_degree(word, residues, e)] += mult
    return _clean(out)


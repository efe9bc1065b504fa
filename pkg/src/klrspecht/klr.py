"""Exact arithmetic in the affine KLR algebra R_alpha.

Every element is stored in the normal form sum c * psi_w y^m e(i), where
psi_w is the product along the preferred reduced word of w. Left
multiplication by a generator is computed by memoized recursion on the
length of w:

* ``_psi(a, u, i)`` is the normal form of psi_a psi_u e(i);
* ``_y(s, u, i)`` is the normal form of y_s psi_u e(i).

Because y's sit to the right of the psi's in the normal form, right
multiplication by a y-monomial only shifts exponents. The recursion peels the
first letter r of the preferred word of u, commutes the new generator past
psi_r with the defining relations, and recurses on strictly shorter
permutations; every correction term has fewer psi letters than the leading
term, which is what makes the recursion terminate.

A ``truncated`` algebra works modulo the left ideal generated by all y's
applied to a fixed idempotent, which is what the cyclic modules need: terms
with a nonzero y tail are dropped.
"""

from __future__ import annotations

import re
import sys
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from sympy.utilities.iterables import multiset_permutations

from .ground import arrow, canonical
from .perms import (
    BudgetExceeded,
    Perm,
    act,
    identity,
    is_left_descent,
    left_descents,
    length,
    preferred_word,
    s_left,
)

sys.setrecursionlimit(max(sys.getrecursionlimit(), 20_000))

DEFAULT_BUDGET = 10**7

Key = tuple[Perm, tuple[int, ...]]
NF = dict[Key, int]
Poly = dict[tuple[int, ...], int]


def _add_into(acc: dict, terms: Mapping, coef: int = 1) -> None:
    for key, c in terms.items():
        value = acc.get(key, 0) + coef * c
        if value:
            acc[key] = value
        else:
            acc.pop(key, None)


def _unit(d: int, k: int) -> tuple[int, ...]:
    m = [0] * d
    m[k - 1] = 1
    return tuple(m)


def quad_poly(x: Sequence[int], r: int, e: int) -> Poly:
    """Q with psi_r^2 e(x) = Q(y) e(x)."""
    d = len(x)
    kind = arrow(x[r - 1], x[r], e)
    zero = (0,) * d
    yr, yr1 = _unit(d, r), _unit(d, r + 1)
    if kind == "equal":
        return {}
    if kind == "none":
        return {zero: 1}
    if kind == "to":
        return {yr1: 1, yr: -1}
    if kind == "from":
        return {yr: 1, yr1: -1}
    both = tuple(a + b for a, b in zip(yr, yr1))
    return {
        tuple(2 * a for a in yr): -1,
        both: 2,
        tuple(2 * a for a in yr1): -1,
    }


def braid_poly(x: Sequence[int], r: int, e: int) -> Poly:
    """C with psi_r psi_{r+1} psi_r e(x) = (psi_{r+1} psi_r psi_{r+1} + C(y)) e(x)."""
    d = len(x)
    if canonical(x[r + 1] - x[r - 1], e) != 0:
        return {}
    kind = arrow(x[r - 1], x[r], e)
    if kind == "to":
        return {(0,) * d: 1}
    if kind == "from":
        return {(0,) * d: -1}
    if kind == "double":
        return {_unit(d, r): 1, _unit(d, r + 1): -2, _unit(d, r + 2): 1}
    return {}


def word_degree(word: Sequence[int], idem: Sequence[int], e: int) -> int:
    """Degree of psi_word e(idem), reading the word from the right."""
    x = tuple(idem)
    total = 0
    for r in reversed(word):
        total -= _cartan(x[r - 1], x[r], e)
        x = x[: r - 1] + (x[r], x[r - 1]) + x[r + 1 :]
    return total


def _cartan(i: int, j: int, e: int) -> int:
    kind = arrow(i, j, e)
    return {"equal": 2, "none": 0, "to": -1, "from": -1, "double": -2}[kind]


def degree_of(u: Perm, m: Sequence[int], idem: Sequence[int], e: int) -> int:
    """Degree of the basis monomial psi_u y^m e(idem)."""
    return word_degree(preferred_word(u), idem, e) + 2 * sum(m)


class KlrAlgebra:
    """Memoized normal-form engine for the KLR algebra with parameter ``e``."""

    def __init__(self, e: int, truncated: bool = False, budget: int = DEFAULT_BUDGET):
        if e < 0 or e == 1:
            raise ValueError(f"e must be 0 or at least 2, got {e}")
        self.e = e
        self.truncated = truncated
        self.budget = budget
        self.steps = 0
        self._psi_memo: dict[tuple[int, Perm, tuple], NF] = {}
        self._y_memo: dict[tuple[int, Perm, tuple], NF] = {}

    # -- bookkeeping -------------------------------------------------------

    def _tick(self) -> None:
        self.steps += 1
        if self.steps > self.budget:
            raise BudgetExceeded(f"rewrite budget of {self.budget} steps exhausted")

    def reset_budget(self) -> None:
        self.steps = 0

    def _shift(self, terms: NF, m: tuple[int, ...]) -> NF:
        if not any(m):
            return terms
        if self.truncated:
            return {}
        return {(u, tuple(a + b for a, b in zip(mm, m))): c for (u, mm), c in terms.items()}

    # -- left multiplication on normal forms ------------------------------

    def psi_left(self, a: int, terms: NF, i: tuple) -> NF:
        out: NF = {}
        for (u, m), c in terms.items():
            _add_into(out, self._shift(self._psi(a, u, i), m), c)
        return out

    def y_left(self, s: int, terms: NF, i: tuple) -> NF:
        out: NF = {}
        for (u, m), c in terms.items():
            _add_into(out, self._shift(self._y(s, u, i), m), c)
        return out

    def poly_left(self, poly: Poly, terms: NF, i: tuple) -> NF:
        out: NF = {}
        for mono, c in poly.items():
            cur = terms
            for s, power in enumerate(mono, 1):
                for _ in range(power):
                    cur = self.y_left(s, cur, i)
            _add_into(out, cur, c)
        return out

    def word_left(self, word: Sequence[int], terms: NF, i: tuple) -> NF:
        """psi_{word} applied on the left, letters taken right to left."""
        for r in reversed(word):
            terms = self.psi_left(r, terms, i)
        return terms

    # -- the two memoized recursions --------------------------------------

    def _psi(self, a: int, u: Perm, i: tuple) -> NF:
        key = (a, u, i)
        hit = self._psi_memo.get(key)
        if hit is not None:
            return hit
        self._tick()
        d = len(u)
        zero = (0,) * d
        v = s_left(a, u)
        out: NF = {}
        if not is_left_descent(u, a):
            b = left_descents(v)[0]
            if b == a:
                out = {(v, zero): 1}
            elif abs(a - b) > 1:
                u1 = s_left(b, u)
                rest = dict(self._psi(b, u1, i))
                _add_into(rest, {(u, zero): 1}, -1)
                _add_into(out, self.psi_left(b, self._psi(a, u1, i), i))
                _add_into(out, self.psi_left(a, rest, i), -1)
            else:
                v2 = s_left(a, s_left(b, s_left(a, v)))
                base = {(v2, zero): 1}
                lead = self.psi_left(b, self._psi(a, v2, i), i)
                _add_into(lead, {(u, zero): 1}, -1)
                main = self.psi_left(b, self.psi_left(a, self._psi(b, v2, i), i), i)
                r = min(a, b)
                corr = self.poly_left(braid_poly(act(v2, i), r, self.e), base, i)
                _add_into(out, main)
                _add_into(out, corr, 1 if a == r else -1)
                _add_into(out, self.psi_left(a, lead, i), -1)
        else:
            rest = dict(self._psi(a, v, i))
            _add_into(rest, {(u, zero): 1}, -1)
            quad = quad_poly(act(v, i), a, self.e)
            _add_into(out, self.poly_left(quad, {(v, zero): 1}, i))
            _add_into(out, self.psi_left(a, rest, i), -1)
        self._psi_memo[key] = out
        return out

    def _y(self, s: int, u: Perm, i: tuple) -> NF:
        key = (s, u, i)
        hit = self._y_memo.get(key)
        if hit is not None:
            return hit
        self._tick()
        d = len(u)
        zero = (0,) * d
        descents = left_descents(u)
        if not descents:
            out = {} if self.truncated else {(u, _unit(d, s)): 1}
        else:
            r = descents[0]
            u1 = s_left(r, u)
            x = act(u1, i)
            if s not in (r, r + 1):
                out = self.psi_left(r, self._y(s, u1, i), i)
            else:
                other = r + 1 if s == r else r
                out = dict(self.psi_left(r, self._y(other, u1, i), i))
                if x[r - 1] == x[r]:
                    _add_into(out, {(u1, zero): 1}, -1 if s == r else 1)
        self._y_memo[key] = out
        return out

    # -- whole-monomial products ------------------------------------------

    def monomial_times(
        self, u: Perm, m: tuple[int, ...], right: NF, i: tuple
    ) -> NF:
        """psi_u y^m times a normal form with right idempotent i."""
        terms = self.poly_left({m: 1}, right, i) if any(m) else right
        return self.word_left(preferred_word(u), terms, i)


# ---------------------------------------------------------------------------
# Elements


class KlrError(ValueError):
    """Malformed element syntax or an operation mixing different weights."""


ElemKey = tuple[Perm, tuple[int, ...], tuple[int, ...]]

_ENGINES: dict[int, KlrAlgebra] = {}


def engine(e: int) -> KlrAlgebra:
    """Shared untruncated engine for parameter ``e``."""
    if e not in _ENGINES:
        _ENGINES[e] = KlrAlgebra(e)
    return _ENGINES[e]


def idempotents(alpha: Iterable[int]) -> list[tuple[int, ...]]:
    """All residue sequences with the given content, sorted."""
    return [tuple(p) for p in multiset_permutations(sorted(alpha))]


@dataclass(frozen=True)
class KlrElement:
    """An element of R_alpha in normal form.

    ``terms`` maps ``(u, m, i)`` to a nonzero integer for the monomial
    psi_u y^m e(i); ``alpha`` is the sorted residue content.
    """

    e: int
    alpha: tuple[int, ...]
    terms: tuple[tuple[ElemKey, int], ...]

    @classmethod
    def build(cls, e: int, alpha: Iterable[int], terms: Mapping[ElemKey, int]) -> "KlrElement":
        alpha = tuple(sorted(canonical(a, e) for a in alpha))
        clean = {k: c for k, c in terms.items() if c}
        for (u, m, i), _ in clean.items():
            if tuple(sorted(i)) != alpha:
                raise KlrError(f"idempotent {i} does not have content {alpha}")
        return cls(e, alpha, tuple(sorted(clean.items())))

    @property
    def d(self) -> int:
        return len(self.alpha)

    def as_dict(self) -> dict[ElemKey, int]:
        return dict(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def _check(self, other: "KlrElement") -> None:
        if (self.e, self.alpha) != (other.e, other.alpha):
            raise KlrError("elements live in different algebras R_alpha")

    def __add__(self, other: "KlrElement") -> "KlrElement":
        self._check(other)
        acc = self.as_dict()
        _add_into(acc, other.as_dict())
        return KlrElement.build(self.e, self.alpha, acc)

    def __neg__(self) -> "KlrElement":
        return self.scale(-1)

    def __sub__(self, other: "KlrElement") -> "KlrElement":
        return self + (-other)

    def scale(self, c: int) -> "KlrElement":
        return KlrElement.build(self.e, self.alpha, {k: c * v for k, v in self.terms})

    def __mul__(self, other: "KlrElement") -> "KlrElement":
        return multiply(self, other)

    def degrees(self) -> set[int]:
        return {degree_of(u, m, i, self.e) for (u, m, i), _ in self.terms}

    def __str__(self) -> str:
        return format_element(self)


def zero_element(e: int, alpha: Iterable[int]) -> KlrElement:
    return KlrElement.build(e, alpha, {})


def idempotent_element(e: int, i: Sequence[int]) -> KlrElement:
    i = tuple(canonical(x, e) for x in i)
    return KlrElement.build(e, i, {(identity(len(i)), (0,) * len(i), i): 1})


def one(e: int, alpha: Iterable[int]) -> KlrElement:
    alpha = tuple(sorted(canonical(a, e) for a in alpha))
    d = len(alpha)
    return KlrElement.build(
        e, alpha, {(identity(d), (0,) * d, i): 1 for i in idempotents(alpha)}
    )


def multiply(a: KlrElement, b: KlrElement, alg: KlrAlgebra | None = None) -> KlrElement:
    a._check(b)
    alg = alg or engine(a.e)
    acc: dict[ElemKey, int] = {}
    for (u2, m2, i2), c2 in b.terms:
        left_idem = act(u2, i2)
        right = {(u2, m2): c2}
        for (u, m, i), c in a.terms:
            if i != left_idem:
                continue
            prod = alg.monomial_times(u, m, right, i2)
            for (w, mm), coef in prod.items():
                key = (w, mm, i2)
                value = acc.get(key, 0) + c * coef
                if value:
                    acc[key] = value
                else:
                    acc.pop(key, None)
    return KlrElement.build(a.e, a.alpha, acc)


# ---------------------------------------------------------------------------
# Tokens and the textual syntax

Token = tuple  # ("e", residues) | ("y", s) | ("p", r)


def normal_form(
    tokens: Sequence[Token],
    e: int,
    alpha: Iterable[int] | None = None,
    coefficient: int = 1,
    alg: KlrAlgebra | None = None,
) -> KlrElement:
    """Normalize a product of generator tokens.

    Without a trailing idempotent token the product is taken against the
    identity of R_alpha, i.e. summed over all residue sequences of content
    ``alpha``.
    """
    alg = alg or engine(e)
    idems = [tuple(canonical(x, e) for x in t[1]) for t in tokens if t[0] == "e"]
    if alpha is None:
        if not idems:
            raise KlrError("cannot infer the weight of a product without idempotents")
        alpha = idems[0]
    alpha = tuple(sorted(canonical(a, e) for a in alpha))
    d = len(alpha)
    for t in tokens:
        if t[0] == "e" and tuple(sorted(canonical(x, e) for x in t[1])) != alpha:
            raise KlrError(f"idempotent {t[1]} has the wrong content for {alpha}")
        if t[0] in ("y", "p") and not 1 <= t[1] <= d - (t[0] == "p"):
            raise KlrError(f"generator {t[0]}{t[1]} out of range for d = {d}")
    result: dict[ElemKey, int] = {}
    zero = (0,) * d
    if tokens and tokens[-1][0] == "e":
        candidates = [tuple(canonical(x, e) for x in tokens[-1][1])]
    else:
        candidates = idempotents(alpha)
    for i in candidates:
        terms: NF = {(identity(d), zero): coefficient}
        for t in reversed(tokens):
            kind = t[0]
            if kind == "p":
                terms = alg.psi_left(t[1], terms, i)
            elif kind == "y":
                terms = alg.y_left(t[1], terms, i)
            else:
                j = tuple(canonical(x, e) for x in t[1])
                terms = {k: c for k, c in terms.items() if act(k[0], i) == j}
            if not terms:
                break
        for (u, m), c in terms.items():
            result[(u, m, i)] = c
    return KlrElement.build(e, alpha, result)


_TOKEN = re.compile(r"\s*(?:(e)\(([-\d,\s]*)\)|([yp])(\d+)(?:\^(\d+))?)")
_COEF = re.compile(r"^(\d+)\s*\*?\s*")


def parse_tokens(text: str) -> list[Token]:
    out: list[Token] = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        match = _TOKEN.match(text, pos)
        if not match:
            raise KlrError(f"unexpected input at position {pos}: {text[pos:pos + 10]!r}")
        if match.group(1):
            body = match.group(2).strip()
            out.append(("e", tuple(int(x) for x in body.split(",")) if body else ()))
        else:
            power = int(match.group(5) or 1)
            out.extend([(match.group(3), int(match.group(4)))] * power)
        pos = match.end()
        while pos < len(text) and text[pos].isspace():
            pos += 1
    return out


def _split_terms(text: str) -> list[str]:
    """Split at signs outside parentheses, keeping the signs as pieces."""
    pieces, depth, cur = [], 0, []
    for ch in text:
        depth += (ch == "(") - (ch == ")")
        if ch in "+-" and depth == 0:
            pieces += ["".join(cur), ch]
            cur = []
        else:
            cur.append(ch)
    pieces.append("".join(cur))
    return pieces


def parse_element(text: str, e: int, alpha: Iterable[int] | None = None) -> KlrElement:
    """Parse a signed sum of products such as ``"2 p1 p2 e(0,1,1) - y3 e(0,1,1)"``."""
    pieces = _split_terms(text.strip())
    signed: list[tuple[int, str]] = []
    sign = 1
    for piece in pieces:
        if piece == "+":
            sign = 1
        elif piece == "-":
            sign = -1
        elif piece.strip():
            signed.append((sign, piece.strip()))
            sign = 1
    parsed = []
    for sign, body in signed:
        match = _COEF.match(body)
        coef = sign * int(match.group(1)) if match else sign
        parsed.append((coef, parse_tokens(body[match.end() :] if match else body)))
    if alpha is None:
        found = [t[1] for _, toks in parsed for t in toks if t[0] == "e"]
        if not found:
            raise KlrError("cannot infer the weight: give alpha or an idempotent")
        alpha = found[0]
    total = zero_element(e, alpha)
    for coef, toks in parsed:
        total = total + normal_form(toks, e, alpha, coef)
    return total


def format_monomial(u: Perm, m: Sequence[int], i: Sequence[int]) -> str:
    parts = [f"p{r}" for r in preferred_word(u)]
    parts += [f"y{s}" if k == 1 else f"y{s}^{k}" for s, k in enumerate(m, 1) if k]
    parts.append("e(" + ",".join(map(str, i)) + ")")
    return " ".join(parts)


def format_element(x: KlrElement) -> str:
    if x.is_zero():
        return "0"
    out = []
    for idx, ((u, m, i), c) in enumerate(x.terms):
        mono = format_monomial(u, m, i)
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        body = mono if mag == 1 else f"{mag} {mono}"
        if idx == 0:
            out.append(body if c > 0 else f"- {body}")
        else:
            out.append(f"{sign} {body}")
    return " ".join(out)


# ---------------------------------------------------------------------------
# Involutions


def sign_map(x: KlrElement) -> KlrElement:
    """The isomorphism R_alpha -> R_alpha' with e(i) -> e(-i), y -> -y, psi -> -psi."""
    e = x.e
    terms = {}
    for (u, m, i), c in x.terms:
        sign = -1 if (length(u) + sum(m)) % 2 else 1
        terms[(u, m, tuple(canonical(-a, e) for a in i))] = sign * c
    return KlrElement.build(e, [canonical(-a, e) for a in x.alpha], terms)


def star(x: KlrElement, alg: KlrAlgebra | None = None) -> KlrElement:
    """The anti-involution fixing every generator and reversing products."""
    alg = alg or engine(x.e)
    total = zero_element(x.e, x.alpha)
    for (u, m, i), c in x.terms:
        tokens: list[Token] = [("e", i)]
        for s, k in enumerate(m, 1):
            tokens += [("y", s)] * k
        tokens += [("p", r) for r in reversed(preferred_word(u))]
        tokens.append(("e", act(u, i)))
        total = total + normal_form(tokens, x.e, x.alpha, c, alg)
    return total


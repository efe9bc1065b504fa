"""Row and column Specht modules as quotients of permutation modules.

The row Specht module S^mu is M^mu modulo the submodule J generated by the
Garnir vectors g^A m^mu. Rather than computing J directly, every strict
tableau T is straightened: for non-standard T one finds a Garnir tableau G
with T = w G and lengths adding, subtracts psi_w applied to the Garnir
vector (which cancels m^T exactly) and recurses on the strictly shorter
terms that remain. This yields a projection pi from M^mu onto the span of
the standard tableaux whose kernel lies in J. ``verify_kernel`` checks that
the kernel is a submodule containing every Garnir vector, which makes it
equal to J and proves the rank statement.

The column module S_mu is handled by the same code with column-strict
tableaux, the initial column tableau and the signed brick intertwiners.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from math import factorial
from .garnir import COLUMN, ROW, GarnirData, garnir_data, garnir_nodes
from .ground import GroundData
from .klr import DEFAULT_BUDGET, KlrAlgebra, KlrElement, Token, _add_into, multiply, normal_form
from .modules import ActionMixin, PermutationModule, Vector, segment
from .perms import (
    BudgetExceeded,
    Perm,
    compose,
    inverse,
    is_fully_commutative,
    length,
    preferred_word,
)
from .tableaux import (
    Multipartition,
    Node,
    Tableau,
    codegree,
    degree,
    initial_tableaux,
    permutation_between,
    residue,
    transpose_partition,
)

DEFAULT_CAP = 200_000


class ResourceCap(RuntimeError):
    """The requested module exceeds the configured size cap."""


class SpechtError(RuntimeError):
    """An internal consistency check of the construction failed."""


@dataclass(frozen=True)
class SpechtConfig:
    cap: int = DEFAULT_CAP
    budget: int = DEFAULT_BUDGET


def row_segments(mu: Multipartition, g: GroundData) -> list[tuple[int, ...]]:
    return [
        segment(residue(Node(a, 1, m), g), part, g.e)
        for m, comp in enumerate(mu.components, 1)
        for a, part in enumerate(comp, 1)
    ]


def column_segments(mu: Multipartition, g: GroundData) -> list[tuple[int, ...]]:
    segs = []
    for m in range(mu.level, 0, -1):
        for b, height in enumerate(transpose_partition(mu.components[m - 1]), 1):
            segs.append(segment(residue(Node(1, b, m), g), -height, g.e))
    return segs


def row_permutation_module(
    mu: Multipartition, g: GroundData, budget: int = DEFAULT_BUDGET
) -> PermutationModule:
    """M^mu: row segments, shifted by deg T^mu; its basis is indexed by row-strict tableaux."""
    shift = degree(initial_tableaux(mu)[0], g) if mu.size else 0
    return PermutationModule.from_segments(g.e, row_segments(mu, g), shift, budget)


def column_permutation_module(
    mu: Multipartition, g: GroundData, budget: int = DEFAULT_BUDGET
) -> PermutationModule:
    """M_mu: column segments, components reversed, shifted by codeg T_mu."""
    shift = codegree(initial_tableaux(mu)[1], g) if mu.size else 0
    return PermutationModule.from_segments(g.e, column_segments(mu, g), shift, budget)


def strict_count(mu: Multipartition, orientation: str) -> int:
    parts = [p for comp in mu.components for p in comp]
    if orientation == COLUMN:
        parts = [h for comp in mu.components for h in transpose_partition(comp)]
    out = factorial(mu.size)
    for p in parts:
        out //= factorial(p)
    return out


def brick_sign(orientation: str, e: int) -> int:
    return -1 if orientation == COLUMN and e % 2 else 1


class SpechtModule(ActionMixin):
    """S^mu (orientation ``row``) or S_mu (orientation ``column``)."""

    def __init__(
        self,
        mu: Multipartition,
        g: GroundData,
        orientation: str = ROW,
        config: SpechtConfig = SpechtConfig(),
    ):
        if orientation not in (ROW, COLUMN):
            raise ValueError(f"orientation must be 'row' or 'column', got {orientation!r}")
        if mu.level != g.level:
            raise ValueError(f"shape has {mu.level} components but the charge has {g.level}")
        size = strict_count(mu, orientation)
        if size > config.cap:
            raise ResourceCap(f"{size} strict tableaux exceed the cap of {config.cap}")
        self.mu, self.g, self.orientation, self.config = mu, g, orientation, config
        self.e = g.e
        self.d = mu.size
        t_row, t_col = initial_tableaux(mu)
        if orientation == ROW:
            self.base = t_row
            self.M = row_permutation_module(mu, g, config.budget)
        else:
            self.base = t_col
            self.M = column_permutation_module(mu, g, config.budget)
        self.tableaux = [self.base.permute(w) for w in self.M.basis]
        self.tableau_index = {t: k for k, t in enumerate(self.tableaux)}
        self.standard = sorted(
            (k for k, t in enumerate(self.tableaux) if t.is_standard()),
            key=lambda k: self.tableaux[k].reading_word(),
        )
        self.standard_pos = {k: p for p, k in enumerate(self.standard)}
        self.basis_residues = [self.M.basis_residues[k] for k in self.standard]
        self.basis_degrees = [self.M.basis_degrees[k] for k in self.standard]
        self._table: dict[int, Vector] = {}
        self._cols: dict[tuple[Token, int], Vector] = {}
        self._build()

    # -- Garnir data ------------------------------------------------------

    @cached_property
    def garnir(self) -> list[GarnirData]:
        return [garnir_data(self.mu, A, self.orientation, self.g) for A in garnir_nodes(self.mu, self.orientation)]

    def perm_of(self, t: Tableau) -> Perm:
        return permutation_between(self.base, t)

    def brick_tau(self, data: GarnirData, r: int, vec: Vector) -> Vector:
        """tau_r applied to a vector in the e(i^A) weight space of the base module."""
        word = preferred_word(data.brick_generator(r))
        out = dict(vec)
        _add_into(out, self.M.act_word(word, vec), brick_sign(self.orientation, self.e))
        return out

    @cached_property
    def garnir_vectors(self) -> list[Vector]:
        """g^A m (or g_A m) in the base module, one per Garnir node."""
        out = []
        for data in self.garnir:
            top = self.tableau_index.get(data.top_tableau)
            if top is None:
                raise SpechtError(f"top tableau {data.top_tableau} is not strict")
            total: Vector = {}
            for u in data.coset_perms:
                if not is_fully_commutative(u):
                    raise SpechtError(f"coset element {u} is not fully commutative")
                vec: Vector = {top: 1}
                for r in reversed(preferred_word(u)):
                    vec = self.brick_tau(data, r, vec)
                _add_into(total, vec)
            out.append(total)
        return out

    # -- straightening ----------------------------------------------------

    def _find_garnir(self, idx: int) -> tuple[int, Perm]:
        w = self.M.basis[idx]
        for a, data in enumerate(self.garnir):
            wg = self.perm_of(data.garnir_tableau)
            x = compose(w, inverse(wg))
            if length(w) == length(x) + length(wg):
                return a, x
        raise SpechtError(f"no Garnir tableau below {self.tableaux[idx]} with lengths adding")

    def _build(self) -> None:
        order = sorted(range(self.M.rank), key=lambda k: (length(self.M.basis[k]), k))
        for idx in order:
            if idx in self.standard_pos:
                self._table[idx] = {self.standard_pos[idx]: 1}
                continue
            a, x = self._find_garnir(idx)
            rel = self.M.act_word(preferred_word(x), self.garnir_vectors[a])
            if rel.get(idx) != 1:
                raise SpechtError(f"Garnir relation does not hit {self.tableaux[idx]} with coefficient 1")
            residual = {idx: 1}
            _add_into(residual, rel, -1)
            lw = length(self.M.basis[idx])
            out: Vector = {}
            for k, c in residual.items():
                if length(self.M.basis[k]) >= lw:
                    raise SpechtError("straightening did not decrease the length")
                _add_into(out, self._table[k], c)
            self._table[idx] = out

    def project(self, vec: Vector) -> Vector:
        """The image in the Specht module of a vector of the base module."""
        out: Vector = {}
        for k, c in vec.items():
            _add_into(out, self._table[k], c)
        return out

    def straighten(self, t: Tableau) -> dict[Tableau, int]:
        idx = self.tableau_index.get(t)
        if idx is None:
            raise ValueError(f"{t} is not a strict tableau of shape {self.mu} for this module")
        return {self.tableaux[self.standard[p]]: c for p, c in self.project({idx: 1}).items()}

    # -- the action on the standard basis ---------------------------------

    @property
    def rank(self) -> int:
        return len(self.standard)

    @property
    def standard_tableaux(self) -> list[Tableau]:
        return [self.tableaux[k] for k in self.standard]

    def act_basis(self, token: Token, idx: int) -> Vector:
        key = (token, idx)
        hit = self._cols.get(key)
        if hit is None:
            hit = self.project(self.M.act_basis(token, self.standard[idx]))
            self._cols[key] = hit
        return hit

    @property
    def generator(self) -> Vector:
        return {self.standard_pos[self.tableau_index[self.base]]: 1}

    def tableau_vector(self, t: Tableau) -> Vector:
        return {self.standard_pos[self.tableau_index[t]]: 1}

    def tableau_degree(self, t: Tableau) -> int:
        return degree(t, self.g) if self.orientation == ROW else codegree(t, self.g)


def build_specht(
    mu: Multipartition, g: GroundData, orientation: str = ROW, config: SpechtConfig = SpechtConfig()
) -> SpechtModule:
    return SpechtModule(mu, g, orientation, config)


@dataclass(frozen=True)
class GarnirElement:
    data: GarnirData
    element: KlrElement
    degree: int
    summands: int = field(default=1)


def garnir_element(
    mu: Multipartition, node: Node, orientation: str, g: GroundData, budget: int = DEFAULT_BUDGET
) -> GarnirElement:
    """g^A = sum over D^A of tau_u psi^{T^A}, as a normal-form algebra element."""
    data = garnir_data(mu, node, orientation, g)
    t_row, t_col = initial_tableaux(mu)
    base = t_row if orientation == ROW else t_col
    j = base.residue_sequence(g)
    alg = KlrAlgebra(g.e, budget=budget)
    w_top = permutation_between(base, data.top_tableau)
    top = normal_form([("p", r) for r in preferred_word(w_top)] + [("e", j)], g.e, j, alg=alg)
    sign = brick_sign(orientation, g.e)
    i_a = data.residue_seq
    total = None
    for u in data.coset_perms:
        if not is_fully_commutative(u):
            raise SpechtError(f"coset element {u} is not fully commutative")
        elem = top
        for r in reversed(preferred_word(u)):
            word = preferred_word(data.brick_generator(r))
            tau = normal_form([("p", x) for x in word] + [("e", i_a)], g.e, j, sign, alg) + normal_form(
                [("e", i_a)], g.e, j, 1, alg
            )
            elem = multiply(tau, elem, alg)
        total = elem if total is None else total + elem
    degrees = total.degrees()
    if len(degrees) > 1:
        raise SpechtError(f"Garnir element is not homogeneous: degrees {sorted(degrees)}")
    deg = degrees.pop() if degrees else 0
    return GarnirElement(data, total, deg, len(data.coset_perms))


__all__ = [
    "BudgetExceeded",
    "DEFAULT_CAP",
    "GarnirElement",
    "ResourceCap",
    "SpechtConfig",
    "SpechtError",
    "SpechtModule",
    "build_specht",
    "column_permutation_module",
    "garnir_element",
    "row_permutation_module",
]

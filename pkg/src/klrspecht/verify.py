"""Mechanical verification of the structural properties on constructed modules.

Every check here is an exact identity between sparse integer vectors. The
checks fall into three groups:

* ``check_relations`` tests the defining relations of the KLR algebra (and
  optionally the cyclotomic relation) column by column on any module that
  exposes ``act_basis``.
* ``verify_specht`` and ``verify_kernel`` certify a single Specht module: the
  kernel of the straightening projection is a submodule containing every
  Garnir vector, so it equals the Garnir submodule and the standard tableaux
  give a basis of the quotient.
* ``verify_sign_twist``, ``verify_duality`` and ``verify_induction`` compare
  independently built modules. The first two also construct an explicit
  intertwiner and check that it is invertible over the integers.
"""

from __future__ import annotations

from collections import Counter
from math import factorial
from typing import Callable, Sequence

from .garnir import COLUMN, ROW, GarnirData
from .ground import GroundData, canonical, conjugate_ground, defect
from .klr import Token, _add_into, _cartan, braid_poly, quad_poly
from .linalg import determinant
from .modules import ActionMixin, Vector, induced_graded_dimension
from .perms import bruhat_leq, is_fully_commutative, preferred_word
from .report import Check, CheckCollector, Report
from .specht import SpechtConfig, SpechtModule, brick_sign, garnir_element
from .tableaux import (
    Multipartition,
    Tableau,
    arrow_relation,
    codegree,
    content,
    degree,
    enumerate_tableaux,
    initial_tableaux,
    permutation_between,
)

Action = Callable[[Token, Vector], Vector]


def _swap(x: tuple, r: int) -> tuple:
    return x[: r - 1] + (x[r], x[r - 1]) + x[r + 1 :]


def _combine(a: Vector, b: Vector, cb: int = 1) -> Vector:
    out = dict(a)
    _add_into(out, b, cb)
    return out


def _apply(act: Action, tokens: Sequence[Token], vec: Vector) -> Vector:
    for t in reversed(tokens):
        if not vec:
            break
        vec = act(t, vec)
    return vec


def _apply_word(act: Action, word: Sequence[int], vec: Vector) -> Vector:
    return _apply(act, [("p", r) for r in word], vec)


def _apply_poly(act: Action, poly: dict, vec: Vector) -> Vector:
    out: Vector = {}
    for mono, c in poly.items():
        cur = vec
        for s, k in enumerate(mono, 1):
            for _ in range(k):
                cur = act(("y", s), cur)
        _add_into(out, cur, c)
    return out


# ---------------------------------------------------------------------------
# Defining relations


def check_relations(
    module: ActionMixin,
    g: GroundData | None = None,
    indices: Sequence[int] | None = None,
) -> list[Check]:
    """Check every KLR relation on the basis vectors of ``module``.

    With ``g`` given, the cyclotomic relation for the weight of ``g`` is
    checked as well. ``indices`` restricts the check to part of the basis.
    """
    col = CheckCollector()
    e, d = module.e, module.d
    res, degs = module.basis_residues, module.basis_degrees
    act = module.act
    for k in range(len(res)) if indices is None else indices:
        x, b, deg = res[k], {k: 1}, degs[k]
        others = {_swap(x, r) for r in range(1, d)} - {x}
        col.record(
            "idempotents",
            act(("e", x), b) == b and all(not act(("e", z), b) for z in others),
            {"basis": k},
        )
        ys = {s: act(("y", s), b) for s in range(1, d + 1)}
        ps = {r: act(("p", r), b) for r in range(1, d)}
        for s, v in ys.items():
            col.record("weight", all(res[j] == x for j in v), {"basis": k, "gen": f"y{s}"})
            col.record("degree", all(degs[j] == deg + 2 for j in v), {"basis": k, "gen": f"y{s}"})
        for r, v in ps.items():
            sx, dr = _swap(x, r), deg - _cartan(x[r - 1], x[r], e)
            col.record("weight", all(res[j] == sx for j in v), {"basis": k, "gen": f"p{r}"})
            col.record("degree", all(degs[j] == dr for j in v), {"basis": k, "gen": f"p{r}"})
        for s in range(1, d + 1):
            for t in range(s + 1, d + 1):
                col.record(
                    "y-commute",
                    act(("y", s), ys[t]) == act(("y", t), ys[s]),
                    {"basis": k, "s": s, "t": t},
                )
        for r in range(1, d):
            for s in range(1, d + 1):
                if s in (r, r + 1):
                    continue
                col.record(
                    "psi-y-commute",
                    act(("p", r), ys[s]) == act(("y", s), ps[r]),
                    {"basis": k, "r": r, "s": s},
                )
            for s in range(r + 2, d):
                col.record(
                    "psi-commute",
                    act(("p", r), ps[s]) == act(("p", s), ps[r]),
                    {"basis": k, "r": r, "s": s},
                )
            delta = 1 if x[r - 1] == x[r] else 0
            lhs = act(("y", r), ps[r])
            rhs = _combine(act(("p", r), ys[r + 1]), b, -delta)
            col.record("y-psi", lhs == rhs, {"basis": k, "r": r})
            lhs = act(("y", r + 1), ps[r])
            rhs = _combine(act(("p", r), ys[r]), b, delta)
            col.record("psi-y", lhs == rhs, {"basis": k, "r": r})
            col.record(
                "quadratic",
                act(("p", r), ps[r]) == _apply_poly(act, quad_poly(x, r, e), b),
                {"basis": k, "r": r},
            )
            if r + 1 < d:
                left = act(("p", r), act(("p", r + 1), ps[r]))
                right = act(("p", r + 1), act(("p", r), ps[r + 1]))
                col.record(
                    "braid",
                    _combine(left, right, -1) == _apply_poly(act, braid_poly(x, r, e), b),
                    {"basis": k, "r": r},
                )
        if g is not None and d:
            n = sum(1 for c in g.charge if c == x[0])
            vec: Vector = b
            for _ in range(n):
                vec = act(("y", 1), vec)
            col.record("cyclotomic", not vec, {"basis": k, "power": n})
    return col.checks()


# ---------------------------------------------------------------------------
# Single Specht modules


def _generators(d: int) -> list[Token]:
    return [("p", r) for r in range(1, d)] + [("y", s) for s in range(1, d + 1)]


def _basis_perm(S: SpechtModule, p: int):
    return S.M.basis[S.standard[p]]


def verify_kernel(S: SpechtModule) -> list[Check]:
    """Show that the kernel of the straightening projection is the Garnir submodule.

    The kernel is spanned by m^T - pi(m^T) for the non-standard strict T and
    was built from Garnir relations, so it lies inside the Garnir submodule.
    It is a submodule iff pi(x m^T) equals x pi(m^T) for every generator x,
    and it contains the Garnir submodule iff every Garnir vector projects to 0.
    """
    col = CheckCollector()
    for a, vec in enumerate(S.garnir_vectors):
        col.record("garnir-in-kernel", not S.project(vec), {"node": str(S.garnir[a].node)})
    for idx in range(S.M.rank):
        if idx in S.standard_pos:
            continue
        image = S.project({idx: 1})
        for token in _generators(S.d):
            lhs = S.project(S.M.act_basis(token, idx))
            rhs = S.act(token, image)
            col.record(
                "kernel-closed",
                lhs == rhs,
                {"tableau": S.tableaux[idx].to_text(), "gen": f"{token[0]}{token[1]}"},
            )
    return col.checks()


def _generator_relations(
    act: Action, z: Vector, base: Tableau, g: GroundData, line: str, d: int, residues: tuple
) -> CheckCollector:
    """The relations on the cyclic generator other than the Garnir relations."""
    col = CheckCollector()
    col.record("generator-idempotent", act(("e", residues), z) == z)
    for r in range(1, d):
        other = _swap(residues, r)
        if other != residues:
            col.record("generator-idempotent", not act(("e", other), z), {"residues": list(other)})
    for s in range(1, d + 1):
        col.record("generator-y", not act(("y", s), z), {"s": s})
    for r in range(1, d):
        if arrow_relation(base, r) == line:
            col.record("generator-psi", not act(("p", r), z), {"r": r})
    return col


def apply_garnir(act: Action, data: GarnirData, base: Tableau, sign: int, vec: Vector) -> Vector:
    """Apply the Garnir element sum_u tau_u psi^{top} to ``vec`` through ``act``."""
    top = _apply_word(act, preferred_word(permutation_between(base, data.top_tableau)), vec)
    total: Vector = {}
    for u in data.coset_perms:
        cur = top
        for r in reversed(preferred_word(u)):
            cur = _combine(cur, _apply_word(act, preferred_word(data.brick_generator(r)), cur), sign)
        _add_into(total, cur)
    return total


def _act_element(S: ActionMixin, element, vec: Vector) -> Vector:
    """Apply a normal-form algebra element to a module vector."""
    out: Vector = {}
    for (u, m, i), c in element.terms:
        cur = S.act(("e", i), vec)
        for s, k in enumerate(m, 1):
            for _ in range(k):
                cur = S.act(("y", s), cur)
        cur = S.act_word(preferred_word(u), cur)
        _add_into(out, cur, c)
    return out


def verify_specht(
    S: SpechtModule, relations: bool = True, elements: bool = True, kernel: bool = True
) -> Report:
    """Certify one Specht module.

    Checks the rank and basis data against tableau enumeration, the generator
    relations, every Garnir element on the generator (both as the module-side
    vector and as an algebra element from the KLR engine), the kernel
    argument, all KLR and cyclotomic relations, triangularity of the
    straightening table and of psi on basis vectors, and the rank of the
    brick space images.
    """
    g, mu, orient = S.g, S.mu, S.orientation
    rep = Report(
        f"specht {orient} {mu.to_text()}",
        {"e": g.e, "charge": list(g.charge), "shape": mu.to_text(), "orientation": orient},
    )
    expected = enumerate_tableaux(mu, "standard")
    rep.add("rank", S.rank == len(expected), f"{S.rank} vs {len(expected)} standard tableaux")
    rep.add("standard-set", set(S.standard_tableaux) == set(expected))
    stat = degree if orient == ROW else codegree
    bad = [
        t.to_text()
        for p, t in enumerate(S.standard_tableaux)
        if S.basis_degrees[p] != stat(t, g) or S.basis_residues[p] != t.residue_sequence(g)
    ]
    rep.add("basis-degrees", not bad, "deg" if orient == ROW else "codeg", bad[:1] or None)

    if S.d:
        line = "right" if orient == ROW else "down"
        z = S.generator
        gen = _generator_relations(S.act, z, S.base, g, line, S.d, S.base.residue_sequence(g))
        rep.extend(gen.checks())
    sign = brick_sign(orient, g.e)
    for data in S.garnir:
        ok = all(is_fully_commutative(u) for u in data.coset_perms)
        rep.add("coset-fully-commutative", ok, witness=None if ok else str(data.node))
        vec = apply_garnir(S.act, data, S.base, sign, S.generator)
        rep.add("garnir-kills-generator", not vec, str(data.node), None if not vec else vec)
        if elements:
            elem = garnir_element(mu, data.node, orient, g, S.config.budget)
            out = _act_element(S, elem.element, S.generator)
            rep.add("garnir-element-kills-generator", not out, str(data.node))
    if kernel:
        rep.extend(verify_kernel(S))
    if relations:
        rep.extend(check_relations(S, g))
    rep.extend(_triangularity(S).checks())
    rep.extend(_brick_embedding(S).checks())
    return rep


def _triangularity(S: SpechtModule) -> CheckCollector:
    col = CheckCollector()
    M = S.M
    for idx in range(M.rank):
        if idx in S.standard_pos:
            continue
        w, x = M.basis[idx], M.basis_residues[idx]
        ok = all(
            bruhat_leq(_basis_perm(S, p), w) and S.basis_residues[p] == x
            for p in S.project({idx: 1})
        )
        col.record("straighten-triangular", ok, {"tableau": S.tableaux[idx].to_text()})
    for p, t in enumerate(S.standard_tableaux):
        w = _basis_perm(S, p)
        for r in range(1, S.d):
            if arrow_relation(t, r) == "other":
                continue
            target = _swap(S.basis_residues[p], r)
            ok = all(
                _basis_perm(S, q) != w and bruhat_leq(_basis_perm(S, q), w) and S.basis_residues[q] == target
                for q in S.act_basis(("p", r), p)
            )
            col.record("psi-triangular", ok, {"tableau": t.to_text(), "r": r})
    return col


def _brick_embedding(S: SpechtModule) -> CheckCollector:
    from .linalg import rank

    col = CheckCollector()
    for data in S.garnir:
        idxs = [S.tableau_index.get(t) for t in data.gar]
        if any(i is None for i in idxs):
            col.record("brick-embedding", False, {"node": str(data.node), "reason": "non-strict"})
            continue
        upstairs = rank([{i: 1} for i in idxs], S.M.rank)
        downstairs = rank([S.project({i: 1}) for i in idxs], max(S.rank, 1))
        ok = upstairs == len(idxs) and downstairs == len(idxs) - 1
        col.record(
            "brick-embedding",
            ok,
            {"node": str(data.node), "gar": len(idxs), "rank_M": upstairs, "rank_S": downstairs},
        )
    return col


def bruhat_adjacent_filter(mu: Multipartition) -> Report:
    """If r and r + 1 share a row or a column of T and S is strictly above s_r T
    in the Bruhat order on w_(.), then S is weakly above T."""
    from .tableaux import w_lower

    rep = Report(f"bruhat adjacency {mu.to_text()}", {"shape": mu.to_text()})
    col = CheckCollector()
    st = enumerate_tableaux(mu, "standard")
    lower = {t: w_lower(t) for t in st}
    for t in st:
        for r in range(1, mu.size):
            if arrow_relation(t, r) == "other":
                continue
            w = lower[t]
            ws = tuple(r + 1 if v == r else r if v == r + 1 else v for v in w)
            for s in st:
                if lower[s] != ws and bruhat_leq(ws, lower[s]):
                    col.record("adjacent-above", bruhat_leq(w, lower[s]), {"T": t.to_text(), "S": s.to_text(), "r": r})
    rep.extend(col.checks())
    return rep


# ---------------------------------------------------------------------------
# Comparisons between modules


def _intertwiner(
    source: SpechtModule,
    target_act: Action,
    image_of_generator: Vector,
    target_rank: int,
    name: str,
) -> list[Check]:
    """Check that v^T -> psi^T (image of z) is an isomorphism of modules.

    Columns are computed from the preferred words of the basis permutations;
    the map is a module homomorphism iff it intertwines every generator on
    every basis vector, and it is an isomorphism over Z iff its determinant
    is a unit.
    """
    cols = [
        _apply_word(target_act, preferred_word(_basis_perm(source, p)), image_of_generator)
        for p in range(source.rank)
    ]
    out = []
    det = determinant(cols, target_rank) if target_rank == source.rank else 0
    out.append(Check(f"{name}-unimodular", det in (1, -1), f"determinant {det}"))
    col = CheckCollector()

    def phi(vec: Vector) -> Vector:
        acc: Vector = {}
        for p, c in vec.items():
            _add_into(acc, cols[p], c)
        return acc

    tokens = _generators(source.d)
    for p in range(source.rank):
        x = source.basis_residues[p]
        for token in tokens + [("e", x)]:
            lhs = phi(source.act_basis(token, p))
            rhs = target_act(token, cols[p])
            col.record(f"{name}-intertwines", lhs == rhs, {"basis": p, "gen": str(token)})
    out.extend(col.checks())
    return out


def twisted_action(module: ActionMixin) -> Action:
    """The sign-twisted action: e(i) as e(-i), y as -y and psi as -psi."""
    e = module.e

    def act(token: Token, vec: Vector) -> Vector:
        if token[0] == "e":
            return module.act(("e", tuple(canonical(-a, e) for a in token[1])), vec)
        return {k: -c for k, c in module.act(token, vec).items()}

    return act


def dual_action(module: ActionMixin) -> Action:
    """The action on the dual basis: generators act by transposed matrices.

    Generators are fixed by the anti-involution star, so (x f)(v) = f(x v)
    for every generator x; products of generators then act by products of
    the transposes in the same order.
    """
    n = len(module.basis_residues)

    def act(token: Token, vec: Vector) -> Vector:
        out: Vector = {}
        for t in range(n):
            column = module.act_basis(token, t)
            c = sum(coef * column.get(s, 0) for s, coef in vec.items())
            if c:
                out[t] = c
        return out

    return act


def verify_sign_twist(
    mu: Multipartition, g: GroundData, config: SpechtConfig = SpechtConfig(), full: bool = True
) -> Report:
    """Compare S^mu over kappa with the sign twist of S_{mu'} over kappa'."""
    gp = conjugate_ground(g)
    mup = mu.conjugate()
    rep = Report(
        f"sign twist {mu.to_text()}",
        {"e": g.e, "charge": list(g.charge), "shape": mu.to_text(), "conjugate_charge": list(gp.charge)},
    )
    S = SpechtModule(mu, g, ROW, config)
    C = SpechtModule(mup, gp, COLUMN, config)
    rep.add("rank", S.rank == C.rank, f"{S.rank} vs {C.rank}")
    col = CheckCollector()
    for p, t in enumerate(S.standard_tableaux):
        tp = t.conjugate()
        q = C.standard_pos.get(C.tableau_index.get(tp, -1))
        if q is None:
            col.record("bijection", False, {"tableau": t.to_text()})
            continue
        col.record("bijection", True)
        col.record("degree-swap", S.basis_degrees[p] == C.basis_degrees[q], {"tableau": t.to_text()})
        col.record(
            "degree-swap-combinatorial", degree(t, g) == codegree(tp, gp), {"tableau": t.to_text()}
        )
        neg = tuple(canonical(-a, g.e) for a in S.basis_residues[p])
        col.record("residue-negation", neg == C.basis_residues[q], {"tableau": t.to_text()})
    rep.extend(col.checks())
    if not mu.size:
        return rep
    t_row, _ = initial_tableaux(mu)
    rep.add("generator-image", C.base == t_row.conjugate())
    act = twisted_action(C)
    z = C.generator
    rep.extend(_generator_relations(act, z, t_row, g, "right", S.d, t_row.residue_sequence(g)).checks())
    for data in S.garnir:
        vec = apply_garnir(act, data, t_row, 1, z)
        rep.add("garnir-twisted", not vec, str(data.node))
    if full:
        rep.extend(_intertwiner(S, act, z, C.rank, "theta"))
    return rep


def dual_degree_formula(mu: Multipartition, g: GroundData, config: SpechtConfig = SpechtConfig()) -> Report:
    """deg f_T = codeg T - def and deg f^T = deg T - def, two ways each.

    One side negates the module degrees of v^T and v_T, which come from the
    psi-word degrees of the permutation modules; the other side is the
    combinatorial codegree or degree shifted by the defect.
    """
    rep = Report(f"dual degrees {mu.to_text()}", {"e": g.e, "charge": list(g.charge), "shape": mu.to_text()})
    dfc = defect(content(mu, g), g)
    S = SpechtModule(mu, g, ROW, config)
    C = SpechtModule(mu, g, COLUMN, config)
    col = CheckCollector()
    for p, t in enumerate(S.standard_tableaux):
        col.record("deg f_T", -S.basis_degrees[p] == codegree(t, g) - dfc, {"tableau": t.to_text()})
    for q, t in enumerate(C.standard_tableaux):
        col.record("deg f^T", -C.basis_degrees[q] == degree(t, g) - dfc, {"tableau": t.to_text()})
    rep.extend(col.checks())
    return rep


def verify_duality(
    mu: Multipartition, g: GroundData, config: SpechtConfig = SpechtConfig(), full: bool = True
) -> Report:
    """Compare S^mu with the graded dual of S_mu shifted by the defect."""
    rep = Report(f"duality {mu.to_text()}", {"e": g.e, "charge": list(g.charge), "shape": mu.to_text()})
    dfc = defect(content(mu, g), g)
    S = SpechtModule(mu, g, ROW, config)
    C = SpechtModule(mu, g, COLUMN, config)
    rep.add("rank", S.rank == C.rank, f"{S.rank} vs {C.rank}")
    gdim_c = C.graded_dimension()
    mirrored = Counter({dfc - k: v for k, v in S.graded_dimension().items()})
    rep.add("gdim-identity", gdim_c == mirrored, f"defect {dfc}")
    dual_char = Counter(
        (dfc - deg, res) for deg, res in zip(C.basis_degrees, C.basis_residues)
    )
    rep.add("character", Counter(S.character()) == dual_char)
    if not mu.size:
        return rep
    t_row, _ = initial_tableaux(mu)
    f = C.tableau_vector(t_row)
    p0 = C.standard_pos[C.tableau_index[t_row]]
    rep.add("generator-degree", dfc - C.basis_degrees[p0] == degree(t_row, g))
    act = dual_action(C)
    rep.extend(_generator_relations(act, f, t_row, g, "right", S.d, t_row.residue_sequence(g)).checks())
    for data in S.garnir:
        vec = apply_garnir(act, data, t_row, 1, f)
        rep.add("garnir-dual", not vec, str(data.node))
    if full:
        rep.extend(_intertwiner(S, act, f, C.rank, "phi"))
    return rep


def verify_induction(mu: Multipartition, g: GroundData, config: SpechtConfig = SpechtConfig()) -> Report:
    """Compare gdim S^mu with the shifted graded dimension of the induction product."""
    rep = Report(f"induction {mu.to_text()}", {"e": g.e, "charge": list(g.charge), "shape": mu.to_text()})
    S = SpechtModule(mu, g, ROW, config)
    factors = []
    shift = degree(initial_tableaux(mu)[0], g) if mu.size else 0
    for comp, k in zip(mu.components, g.charge):
        sub = Multipartition((comp,))
        gk = GroundData(g.e, (k,))
        F = SpechtModule(sub, gk, ROW, config)
        factors.append(F)
        if sub.size:
            shift -= degree(initial_tableaux(sub)[0], gk)
    induced = induced_graded_dimension([F.character() for F in factors], g.e)
    shifted = Counter({k + shift: v for k, v in induced.items()})
    rep.add("gdim", S.graded_dimension() == shifted, f"shift {shift}")
    count = factorial(mu.size)
    for F in factors:
        count //= factorial(F.d)
        count *= F.rank
    rep.add("ungraded", S.rank == count == sum(shifted.values()), f"{S.rank} vs {count}")
    return rep


__all__ = [
    "apply_garnir",
    "check_relations",
    "dual_action",
    "dual_degree_formula",
    "bruhat_adjacent_filter",
    "twisted_action",
    "verify_duality",
    "verify_induction",
    "verify_kernel",
    "verify_sign_twist",
    "verify_specht",
]

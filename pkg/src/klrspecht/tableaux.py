"""Multipartitions and tableaux with their residue and degree statistics.

Nodes are triples ``(row, col, comp)`` with all coordinates starting at 1.
A node B is *below* A when ``(B.comp, B.row) > (A.comp, A.row)``; the degree
and codegree recursions count addable and removable nodes strictly below or
above in this sense.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import combinations, product
from typing import Iterable, Iterator, NamedTuple, Sequence

from sympy.utilities.iterables import partitions as _sympy_partitions

from .ground import GroundData, RootElement, canonical
from .perms import Perm, bruhat_leq


class ParseError(ValueError):
    """Malformed textual input; the message names the offending position."""


class Node(NamedTuple):
    row: int
    col: int
    comp: int

    def __str__(self) -> str:
        return f"({self.row},{self.col},{self.comp})"


Partition = tuple[int, ...]


def normalize_partition(parts: Iterable[int]) -> Partition:
    parts = tuple(int(p) for p in parts)
    if any(p < 0 for p in parts):
        raise ValueError(f"negative part in {parts}")
    trimmed = tuple(p for p in parts if p)
    if len(trimmed) != len(parts) and any(parts[len(trimmed) :]):
        raise ValueError(f"zero part before a positive part in {parts}")
    if any(trimmed[a] < trimmed[a + 1] for a in range(len(trimmed) - 1)):
        raise ValueError(f"partition {parts} is not weakly decreasing")
    return trimmed


def transpose_partition(p: Partition) -> Partition:
    return tuple(sum(1 for part in p if part > c) for c in range(p[0])) if p else ()


def partitions(n: int) -> list[Partition]:
    """All partitions of n, in reverse lexicographic order."""
    if n == 0:
        return [()]
    out = [
        tuple(sorted((k for k, m in p.items() for _ in range(m)), reverse=True))
        for p in _sympy_partitions(n)
    ]
    return sorted(out, reverse=True)


@dataclass(frozen=True)
class Multipartition:
    """An ordered tuple of partitions; trailing zero parts are dropped."""

    components: tuple[Partition, ...]

    def __post_init__(self) -> None:
        comps = tuple(normalize_partition(p) for p in self.components)
        if not comps:
            raise ValueError("a multipartition needs at least one component")
        object.__setattr__(self, "components", comps)

    @classmethod
    def of(cls, *components: Sequence[int]) -> "Multipartition":
        return cls(tuple(tuple(c) for c in components))

    @property
    def level(self) -> int:
        return len(self.components)

    @cached_property
    def size(self) -> int:
        return sum(sum(p) for p in self.components)

    def __len__(self) -> int:
        return self.size

    def __contains__(self, node: object) -> bool:
        if not isinstance(node, tuple) or len(node) != 3:
            return False
        a, b, m = node
        if not 1 <= m <= self.level:
            return False
        comp = self.components[m - 1]
        return 1 <= a <= len(comp) and 1 <= b <= comp[a - 1]

    def nodes(self) -> list[Node]:
        """Nodes in row-reading order: components, then rows, then columns."""
        return [
            Node(a, b, m)
            for m, comp in enumerate(self.components, 1)
            for a, part in enumerate(comp, 1)
            for b in range(1, part + 1)
        ]

    def column_reading_nodes(self) -> list[Node]:
        """Nodes in the order the initial column tableau fills them.

        Components are taken from the last to the first; within a component
        columns go left to right and each column is read top to bottom.
        """
        out = []
        for m in range(self.level, 0, -1):
            comp = self.components[m - 1]
            for b, height in enumerate(transpose_partition(comp), 1):
                out.extend(Node(a, b, m) for a in range(1, height + 1))
        return out

    def addable(self) -> list[Node]:
        out = []
        for m, comp in enumerate(self.components, 1):
            for a in range(1, len(comp) + 2):
                cur = comp[a - 1] if a <= len(comp) else 0
                if a == 1 or comp[a - 2] > cur:
                    out.append(Node(a, cur + 1, m))
        return out

    def removable(self) -> list[Node]:
        out = []
        for m, comp in enumerate(self.components, 1):
            for a, part in enumerate(comp, 1):
                below = comp[a] if a < len(comp) else 0
                if part > below:
                    out.append(Node(a, part, m))
        return out

    def add(self, node: Node) -> "Multipartition":
        comps = [list(c) for c in self.components]
        comp = comps[node.comp - 1]
        if node.row == len(comp) + 1:
            comp.append(1)
        else:
            comp[node.row - 1] += 1
        return Multipartition(tuple(tuple(c) for c in comps))

    def remove(self, node: Node) -> "Multipartition":
        comps = [list(c) for c in self.components]
        comps[node.comp - 1][node.row - 1] -= 1
        return Multipartition(tuple(tuple(c) for c in comps))

    def conjugate(self) -> "Multipartition":
        return Multipartition(
            tuple(transpose_partition(p) for p in reversed(self.components))
        )

    def to_text(self) -> str:
        return "|".join(",".join(map(str, p)) if p else "-" for p in self.components)

    def __str__(self) -> str:
        return self.to_text()


def parse_shape(text: str) -> Multipartition:
    """Parse ``"3,1|2,2"``; an empty component is written ``-`` or ``0``."""
    comps = []
    for idx, chunk in enumerate(text.strip().split("|")):
        chunk = chunk.strip()
        if chunk in ("-", "0", ""):
            comps.append(())
            continue
        try:
            comps.append(normalize_partition(int(p) for p in chunk.split(",")))
        except ValueError as exc:
            raise ParseError(f"shape component {idx + 1} {chunk!r}: {exc}") from None
    return Multipartition(tuple(comps))


_NODE = re.compile(r"^\s*\(?\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*\)?\s*$")


def parse_node(text: str) -> Node:
    match = _NODE.match(text)
    if not match:
        raise ParseError(f"node {text!r} is not of the form (row,col,comp)")
    return Node(*(int(x) for x in match.groups()))


def residue(node: Node, g: GroundData) -> int:
    """k_m + col - row, reduced mod e."""
    return canonical(g.charge[node.comp - 1] + node.col - node.row, g.e)


def content(mu: Multipartition, g: GroundData) -> RootElement:
    return RootElement.from_residues(residue(n, g) for n in mu.nodes())


def _below(b: Node, a: Node) -> bool:
    return (b.comp, b.row) > (a.comp, a.row)


def d_below(mu: Multipartition, node: Node, g: GroundData) -> int:
    """Addable minus removable i-nodes of ``mu`` strictly below ``node``, i = res(node)."""
    i = residue(node, g)
    add = sum(1 for b in mu.addable() if _below(b, node) and residue(b, g) == i)
    rem = sum(1 for b in mu.removable() if _below(b, node) and residue(b, g) == i)
    return add - rem


def d_above(mu: Multipartition, node: Node, g: GroundData) -> int:
    """Addable minus removable i-nodes of ``mu`` strictly above ``node``, i = res(node)."""
    i = residue(node, g)
    add = sum(1 for b in mu.addable() if _below(node, b) and residue(b, g) == i)
    rem = sum(1 for b in mu.removable() if _below(node, b) and residue(b, g) == i)
    return add - rem


@dataclass(frozen=True)
class Tableau:
    """A bijective filling of a multipartition by 1..d.

    ``rows`` is a tuple over components of tuples of row tuples.
    """

    rows: tuple[tuple[tuple[int, ...], ...], ...]

    def __post_init__(self) -> None:
        rows = tuple(tuple(tuple(int(x) for x in r) for r in comp) for comp in self.rows)
        object.__setattr__(self, "rows", rows)
        shape = self.shape
        entries = sorted(x for comp in rows for r in comp for x in r)
        if entries != list(range(1, shape.size + 1)):
            raise ValueError(f"filling {self.to_text()} is not a bijection onto 1..d")

    @classmethod
    def from_map(cls, shape: Multipartition, filling: dict[Node, int]) -> "Tableau":
        return cls(
            tuple(
                tuple(
                    tuple(filling[Node(a, b, m)] for b in range(1, part + 1))
                    for a, part in enumerate(comp, 1)
                )
                for m, comp in enumerate(shape.components, 1)
            )
        )

    @cached_property
    def shape(self) -> Multipartition:
        return Multipartition(tuple(tuple(len(r) for r in comp) for comp in self.rows))

    @property
    def size(self) -> int:
        return self.shape.size

    def __getitem__(self, node: Node) -> int:
        a, b, m = node
        return self.rows[m - 1][a - 1][b - 1]

    @cached_property
    def positions(self) -> tuple[Node, ...]:
        """``positions[r - 1]`` is the node holding entry r."""
        pos: list[Node | None] = [None] * self.size
        for node in self.shape.nodes():
            pos[self[node] - 1] = node
        return tuple(pos)  # type: ignore[arg-type]

    def node_of(self, r: int) -> Node:
        return self.positions[r - 1]

    def reading_word(self) -> tuple[int, ...]:
        return tuple(x for comp in self.rows for r in comp for x in r)

    def is_row_strict(self) -> bool:
        return all(
            r[c] < r[c + 1] for comp in self.rows for r in comp for c in range(len(r) - 1)
        )

    def is_column_strict(self) -> bool:
        return all(
            comp[a][c] < comp[a + 1][c]
            for comp in self.rows
            for a in range(len(comp) - 1)
            for c in range(len(comp[a + 1]))
        )

    def is_standard(self) -> bool:
        return self.is_row_strict() and self.is_column_strict()

    def permute(self, w: Perm) -> "Tableau":
        """The tableau w T obtained by replacing each entry x with w(x)."""
        return Tableau(
            tuple(tuple(tuple(w[x - 1] for x in r) for r in comp) for comp in self.rows)
        )

    def conjugate(self) -> "Tableau":
        comps = []
        for comp in reversed(self.rows):
            width = len(comp[0]) if comp else 0
            comps.append(
                tuple(
                    tuple(comp[a][c] for a in range(len(comp)) if len(comp[a]) > c)
                    for c in range(width)
                )
            )
        return Tableau(tuple(comps))

    def restrict(self, k: int) -> "Tableau":
        """The subtableau T_{<=k} holding the entries 1..k."""
        return Tableau(
            tuple(
                tuple(t for t in (tuple(x for x in r if x <= k) for r in comp) if t)
                for comp in self.rows
            )
        )

    def residue_sequence(self, g: GroundData) -> tuple[int, ...]:
        return tuple(residue(n, g) for n in self.positions)

    def to_text(self) -> str:
        return ";".join(
            "|".join(",".join(map(str, r)) for r in comp) if comp else "-"
            for comp in self.rows
        )

    def to_json(self) -> list:
        return [[list(r) for r in comp] for comp in self.rows]

    def __str__(self) -> str:
        return self.to_text()


def parse_tableau(text: str) -> Tableau:
    """Parse rows separated by ``|`` and components by ``;``."""
    comps = []
    for cidx, chunk in enumerate(text.strip().split(";")):
        chunk = chunk.strip()
        if chunk in ("-", ""):
            comps.append(())
            continue
        rows = []
        for ridx, row in enumerate(chunk.split("|")):
            try:
                rows.append(tuple(int(x) for x in row.split(",")))
            except ValueError:
                raise ParseError(
                    f"component {cidx + 1}, row {ridx + 1}: bad entries {row!r}"
                ) from None
        comps.append(tuple(rows))
    try:
        return Tableau(tuple(comps))
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def degree(t: Tableau, g: GroundData) -> int:
    """The degree statistic, unfolding the recursion from the largest entry down."""
    if not t.is_standard():
        raise ValueError(f"degree needs a standard tableau, got {t}")
    return _degree(t.shape, t.positions, g)


def codegree(t: Tableau, g: GroundData) -> int:
    if not t.is_standard():
        raise ValueError(f"codegree needs a standard tableau, got {t}")
    return _codegree(t.shape, t.positions, g)


def _degree(shape: Multipartition, positions: Sequence[Node], g: GroundData) -> int:
    total, mu = 0, shape
    for node in reversed(positions):
        total += d_below(mu, node, g)
        mu = mu.remove(node)
    return total


def _codegree(shape: Multipartition, positions: Sequence[Node], g: GroundData) -> int:
    total, mu = 0, shape
    for node in reversed(positions):
        mu = mu.remove(node)
        total += d_above(mu, node, g)
    return total


def initial_tableaux(mu: Multipartition) -> tuple[Tableau, Tableau]:
    """The row reading tableau T^mu and the column reading tableau T_mu."""
    row = Tableau.from_map(mu, {n: r for r, n in enumerate(mu.nodes(), 1)})
    col = Tableau.from_map(mu, {n: r for r, n in enumerate(mu.column_reading_nodes(), 1)})
    return row, col


def permutation_between(source: Tableau, target: Tableau) -> Perm:
    """The permutation w with w source = target."""
    w = [0] * source.size
    for node in source.shape.nodes():
        w[source[node] - 1] = target[node]
    return tuple(w)


def tableau_permutations(t: Tableau) -> tuple[Perm, Perm]:
    """(w^T, w_T) with w^T T^mu = T = w_T T_mu."""
    row, col = initial_tableaux(t.shape)
    return permutation_between(row, t), permutation_between(col, t)


def w_upper(t: Tableau) -> Perm:
    return tableau_permutations(t)[0]


def w_lower(t: Tableau) -> Perm:
    return tableau_permutations(t)[1]


def _sort_key(t: Tableau) -> tuple[int, ...]:
    return t.reading_word()


def enumerate_tableaux(mu: Multipartition, kind: str = "standard") -> list[Tableau]:
    """All standard, row-strict or column-strict tableaux of shape ``mu``.

    The list is ordered lexicographically by row-reading word.
    """
    if kind == "standard":
        out = [Tableau.from_map(mu, f) for f in _standard_fillings(mu)]
    elif kind == "row_strict":
        out = [Tableau.from_map(mu, f) for f in _strict_fillings(mu, mu.nodes(), "row")]
    elif kind == "column_strict":
        out = [
            Tableau.from_map(mu, f)
            for f in _strict_fillings(mu, mu.column_reading_nodes(), "col")
        ]
    else:
        raise ValueError(f"unknown tableau kind {kind!r}")
    out.sort(key=_sort_key)
    return out


def _standard_fillings(mu: Multipartition) -> Iterator[dict[Node, int]]:
    if mu.size == 0:
        yield {}
        return
    for node in mu.removable():
        for filling in _standard_fillings(mu.remove(node)):
            filling[node] = mu.size
            yield filling


def _strict_fillings(
    mu: Multipartition, order: list[Node], line: str
) -> Iterator[dict[Node, int]]:
    groups: dict[tuple[int, int], list[Node]] = {}
    for n in order:
        key = (n.comp, n.row if line == "row" else n.col)
        groups.setdefault(key, []).append(n)
    lines = list(groups.values())

    def fill(idx: int, remaining: tuple[int, ...]) -> Iterator[dict[Node, int]]:
        if idx == len(lines):
            yield {}
            return
        for chosen in combinations(remaining, len(lines[idx])):
            rest = tuple(x for x in remaining if x not in chosen)
            for filling in fill(idx + 1, rest):
                filling.update(zip(lines[idx], chosen))
                yield filling

    yield from fill(0, tuple(range(1, mu.size + 1)))


def dominance(mu: Multipartition, nu: Multipartition) -> str:
    """Compare two multipartitions in the dominance order."""
    if mu.size != nu.size or mu.level != nu.level:
        raise ValueError("dominance needs multipartitions of equal size and level")

    def sums(x: Multipartition) -> list[int]:
        out, before = [], 0
        for comp in x.components:
            run = before
            for j in range(max(len(c) for c in mu.components + nu.components) + 1):
                run += comp[j] if j < len(comp) else 0
                out.append(run)
            before += sum(comp)
        return out

    a, b = sums(mu), sums(nu)
    geq = all(x >= y for x, y in zip(a, b))
    leq = all(x <= y for x, y in zip(a, b))
    return _verdict(geq, leq)


def _verdict(geq: bool, leq: bool) -> str:
    if geq and leq:
        return "equal"
    if geq:
        return "greater"
    if leq:
        return "less"
    return "incomparable"


def bruhat(s: Tableau, t: Tableau) -> str:
    """Compare same-shape tableaux: S is below T iff w_S <= w_T in Bruhat order."""
    if s.shape != t.shape:
        raise ValueError("Bruhat comparison needs tableaux of the same shape")
    ws, wt = w_lower(s), w_lower(t)
    return _verdict(bruhat_leq(wt, ws), bruhat_leq(ws, wt))


def row_bruhat_geq(s: Tableau, t: Tableau) -> bool:
    """S dominates T in the order used for row-strict tableaux: w^S <= w^T."""
    return bruhat_leq(w_upper(s), w_upper(t))


def column_bruhat_leq(s: Tableau, t: Tableau) -> bool:
    """S lies below T in the order used for column-strict tableaux: w_S <= w_T."""
    return bruhat_leq(w_lower(s), w_lower(t))


def arrow_relation(t: Tableau, r: int) -> str:
    """How r + 1 sits relative to r in T: ``"right"`` (same row), ``"down"``
    (same column) or ``"other"``."""
    a, b = t.node_of(r), t.node_of(r + 1)
    if a.comp == b.comp and a.row == b.row:
        return "right"
    if a.comp == b.comp and a.col == b.col:
        return "down"
    return "other"


@lru_cache(maxsize=None)
def standard_tableaux(mu: Multipartition) -> tuple[Tableau, ...]:
    return tuple(enumerate_tableaux(mu, "standard"))



def multipartitions(n: int, level: int) -> list[Multipartition]:
    """All multipartitions of n with the given number of components."""
    out = []
    for sizes in product(range(n + 1), repeat=level):
        if sum(sizes) != n:
            continue
        for comps in product(*(partitions(k) for k in sizes)):
            out.append(Multipartition(tuple(comps)))
    return out

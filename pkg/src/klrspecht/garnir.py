"""Row and column Garnir belts with their bricks and brick permutations."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .ground import GroundData
from .perms import Perm, inverse, min_coset_reps, preferred_word
from .tableaux import Multipartition, Node, Tableau, initial_tableaux, residue

ROW, COLUMN = "row", "column"


class GarnirError(ValueError):
    """The requested node is not a Garnir node for the given orientation."""


@dataclass(frozen=True)
class GarnirData:
    node: Node
    orientation: str
    e: int
    belt: tuple[Node, ...]
    """Belt nodes in the order the Garnir tableau fills them."""
    bricks: tuple[tuple[Node, ...], ...]
    """Bricks in label order; each brick lists its nodes in filling order."""
    f: int
    u: int
    v: int
    garnir_tableau: Tableau
    top_tableau: Tableau
    """T^A (rows, maximal in Gar) or T_A (columns, minimal in Gar)."""
    coset_perms: tuple[Perm, ...]
    """The coset representatives D as permutations of the k bricks."""
    residue_seq: tuple[int, ...]

    @property
    def k(self) -> int:
        return len(self.bricks)

    @property
    def n(self) -> int | None:
        """Smallest entry of the Garnir tableau inside a brick (None when k = 0)."""
        return self.garnir_tableau[self.bricks[0][0]] if self.bricks else None

    @property
    def coset_words(self) -> tuple[tuple[int, ...], ...]:
        return tuple(preferred_word(w) for w in self.coset_perms)

    def block_perm(self, x: Perm) -> Perm:
        """Lift a permutation of bricks to S_d, moving the value blocks rigidly."""
        d = self.garnir_tableau.size
        w = list(range(1, d + 1))
        if not self.bricks:
            return tuple(w)
        n, e = self.n, self.e
        for t, target in enumerate(x, 1):
            for j in range(e):
                w[n + (t - 1) * e + j - 1] = n + (target - 1) * e + j
        return tuple(w)

    def brick_generator(self, r: int) -> Perm:
        """w_r^A: the product of the transpositions (a, a + e) swapping bricks r and r + 1."""
        if not 1 <= r < self.k:
            raise ValueError(f"brick generator index {r} out of range 1..{self.k - 1}")
        x = list(range(1, self.k + 1))
        x[r - 1], x[r] = x[r], x[r - 1]
        return self.block_perm(tuple(x))

    @cached_property
    def gar(self) -> tuple[Tableau, ...]:
        """Gar in coset order: w T for w in D, starting with the top tableau."""
        return tuple(self.top_tableau.permute(self.block_perm(w)) for w in self.coset_perms)

    def to_json(self) -> dict:
        return {
            "node": list(self.node),
            "orientation": self.orientation,
            "belt": [list(n) for n in self.belt],
            "bricks": [[list(n) for n in b] for b in self.bricks],
            "k": self.k,
            "f": self.f,
            "n": self.n,
            "u": self.u,
            "v": self.v,
            "garnir_tableau": self.garnir_tableau.to_json(),
            "top_tableau": self.top_tableau.to_json(),
            "gar": [t.to_json() for t in self.gar],
            "coset_words": [list(w) for w in self.coset_words],
            "residues": list(self.residue_seq),
        }


def is_garnir_node(mu: Multipartition, node: Node, orientation: str) -> bool:
    a, b, m = node
    if node not in mu:
        return False
    if orientation == ROW:
        return (a + 1, b, m) in mu
    return (a, b + 1, m) in mu


def garnir_nodes(mu: Multipartition, orientation: str) -> list[Node]:
    return [n for n in mu.nodes() if is_garnir_node(mu, n, orientation)]


def garnir_data(mu: Multipartition, node: Node, orientation: str, g: GroundData) -> GarnirData:
    if orientation not in (ROW, COLUMN):
        raise ValueError(f"orientation must be 'row' or 'column', got {orientation!r}")
    node = Node(*node)
    a, b, m = node
    if node not in mu:
        raise GarnirError(f"{node} is not a node of {mu}")
    if not is_garnir_node(mu, node, orientation):
        other = (a + 1, b, m) if orientation == ROW else (a, b + 1, m)
        raise GarnirError(
            f"{node} is not a {orientation} Garnir node: {Node(*other)} is not in {mu}"
        )
    e = g.e
    comp = mu.components[m - 1]
    t_row, t_col = initial_tableaux(mu)
    if orientation == ROW:
        base = t_row
        first = [Node(a + 1, c, m) for c in range(1, b + 1)]
        second = [Node(a, c, m) for c in range(b, comp[a - 1] + 1)]
        first_starts = list(range(b - e + 1, 0, -e))[::-1] if e else []
        second_starts = list(range(b, comp[a - 1] - e + 2, e)) if e else []
        first_bricks = [tuple(Node(a + 1, c + j, m) for j in range(e)) for c in first_starts]
        second_bricks = [tuple(Node(a, c + j, m) for j in range(e)) for c in second_starts]
        u, v = base[node], base[Node(a + 1, b, m)]
    else:
        base = t_col
        height = sum(1 for part in comp if part >= b)
        first = [Node(c, b + 1, m) for c in range(1, a + 1)]
        second = [Node(c, b, m) for c in range(a, height + 1)]
        first_starts = list(range(a - e + 1, 0, -e))[::-1] if e else []
        second_starts = list(range(a, height - e + 2, e)) if e else []
        first_bricks = [tuple(Node(c + j, b + 1, m) for j in range(e)) for c in first_starts]
        second_bricks = [tuple(Node(c + j, b, m) for j in range(e)) for c in second_starts]
        u, v = base[node], base[Node(a, b + 1, m)]

    belt = tuple(first + second)
    if v - u + 1 != len(belt):
        raise AssertionError("belt entries of the initial tableau are not consecutive")
    filling = {n: base[n] for n in mu.nodes()}
    filling.update({n: u + idx for idx, n in enumerate(belt)})
    garnir = Tableau.from_map(mu, filling)

    bricks = tuple(first_bricks + second_bricks)
    k, f = len(bricks), len(second_bricks)
    target = residue(node, g)
    for brick in bricks:
        if residue(brick[0], g) != target:
            raise AssertionError(f"brick {brick} does not start with residue {target}")

    # The top tableau places the value blocks 1..f in the second line of the
    # belt and f+1..k in the first line; x records where G moves each block.
    x = tuple(list(range(k - f + 1, k + 1)) + list(range(1, k - f + 1)))
    partial = GarnirData(
        node, orientation, e, belt, bricks, f, u, v, garnir, garnir, (), ()
    )
    top = garnir.permute(partial.block_perm(inverse(x)))
    reps = tuple(min_coset_reps((f, k - f)))
    return GarnirData(
        node,
        orientation,
        e,
        belt,
        bricks,
        f,
        u,
        v,
        garnir,
        top,
        reps,
        garnir.residue_sequence(g),
    )

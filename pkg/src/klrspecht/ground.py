"""Lie-theoretic ground data for quivers of type A_infinity and affine A_{e-1}.

Residues live in I = Z/eZ and are always stored by their least nonnegative
representative, except when e = 0 where they are plain integers.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping


class GroundError(ValueError):
    """Raised for invalid quiver parameters or ill-posed pairings."""


def canonical(i: int, e: int) -> int:
    """Return the canonical representative of the residue ``i`` in Z/eZ."""
    return i % e if e else i


@dataclass(frozen=True)
class GroundData:
    """Quiver parameter ``e`` together with a multicharge ``charge``.

    The multicharge determines the dominant weight
    Lambda = Lambda_{k_1} + ... + Lambda_{k_l}.
    """

    e: int
    charge: tuple[int, ...] = (0,)

    def __post_init__(self) -> None:
        if self.e < 0 or self.e == 1:
            raise GroundError(f"e must be 0 or at least 2, got {self.e}")
        object.__setattr__(
            self, "charge", tuple(canonical(int(k), self.e) for k in self.charge)
        )
        if not self.charge:
            raise GroundError("the multicharge must have at least one entry")

    @property
    def level(self) -> int:
        return len(self.charge)

    def res(self, i: int) -> int:
        return canonical(i, self.e)

    def weight(self) -> "WeightElement":
        return WeightElement.from_counts(Counter(self.charge))

    def with_charge(self, charge: Iterable[int]) -> "GroundData":
        return GroundData(self.e, tuple(charge))

    def to_json(self) -> dict:
        return {"e": self.e, "charge": list(self.charge)}


def _freeze(counts: Mapping[int, int]) -> tuple[tuple[int, int], ...]:
    return tuple(sorted((i, c) for i, c in counts.items() if c))


@dataclass(frozen=True)
class RootElement:
    """An element of the positive root lattice, stored as residue -> multiplicity."""

    items: tuple[tuple[int, int], ...] = field(default=())

    def __post_init__(self) -> None:
        if any(c < 0 for _, c in self.items):
            raise GroundError("root coefficients must be nonnegative")

    @classmethod
    def from_counts(cls, counts: Mapping[int, int]) -> "RootElement":
        return cls(_freeze(counts))

    @classmethod
    def from_residues(cls, residues: Iterable[int]) -> "RootElement":
        return cls.from_counts(Counter(residues))

    def coefficients(self) -> dict[int, int]:
        return dict(self.items)

    def __getitem__(self, i: int) -> int:
        return dict(self.items).get(i, 0)

    @property
    def height(self) -> int:
        return sum(c for _, c in self.items)

    def __add__(self, other: "RootElement") -> "RootElement":
        counts = Counter(dict(self.items))
        counts.update(dict(other.items))
        return RootElement.from_counts(counts)


@dataclass(frozen=True)
class WeightElement:
    """A dominant weight sum_i c_i Lambda_i with c_i >= 0."""

    items: tuple[tuple[int, int], ...] = field(default=())

    @classmethod
    def from_counts(cls, counts: Mapping[int, int]) -> "WeightElement":
        return cls(_freeze(counts))

    def coefficients(self) -> dict[int, int]:
        return dict(self.items)

    @property
    def level(self) -> int:
        return sum(c for _, c in self.items)


def cartan_pairing(i: int, j: int, g: GroundData) -> int:
    """Cartan matrix entry a_{ij}.

    The quiver has an arrow i -> j exactly when j = i - 1.
    """
    e = g.e
    i, j = canonical(i, e), canonical(j, e)
    if i == j:
        return 2
    down = canonical(i - 1, e) == j
    up = canonical(i + 1, e) == j
    if down and up:
        return -2
    if down or up:
        return -1
    return 0


def root_pairing(alpha: RootElement, beta: RootElement, g: GroundData) -> int:
    return sum(
        a * b * cartan_pairing(i, j, g) for i, a in alpha.items for j, b in beta.items
    )


def weight_root_pairing(lam: WeightElement, alpha: RootElement, g: GroundData) -> int:
    coeffs = lam.coefficients()
    return sum(coeffs.get(canonical(i, g.e), 0) * a for i, a in alpha.items)


def defect_fraction(alpha: RootElement, g: GroundData) -> Fraction:
    """The defect as an exact rational; used for diagnostics."""
    return weight_root_pairing(g.weight(), alpha, g) - Fraction(
        root_pairing(alpha, alpha, g), 2
    )


def defect(alpha: RootElement, g: GroundData) -> int:
    """def(alpha) = (Lambda, alpha) - (alpha, alpha) / 2, asserted integral."""
    value = defect_fraction(alpha, g)
    if value.denominator != 1:
        raise GroundError(f"non-integral defect {value} for {alpha}")
    return int(value)


def null_root(g: GroundData) -> RootElement:
    if g.e == 0:
        raise GroundError("there is no null root when e = 0")
    return RootElement.from_counts({i: 1 for i in range(g.e)})


def conjugate_multicharge(charge: Iterable[int], e: int) -> tuple[int, ...]:
    return tuple(canonical(-k, e) for k in reversed(tuple(charge)))


def conjugate_ground(g: GroundData) -> GroundData:
    return GroundData(g.e, conjugate_multicharge(g.charge, g.e))


def conjugate_root(alpha: RootElement, e: int) -> RootElement:
    return RootElement.from_counts({canonical(-i, e): c for i, c in alpha.items})


def arrow(i: int, j: int, e: int) -> str:
    """Classify the quiver edges between residues ``i`` and ``j``.

    Returns ``"equal"``, ``"none"``, ``"to"`` (i -> j), ``"from"`` (i <- j)
    or ``"double"`` (the e = 2 case where both arrows are present).
    """
    i, j = canonical(i, e), canonical(j, e)
    if i == j:
        return "equal"
    to = canonical(i - 1, e) == j
    frm = canonical(i + 1, e) == j
    if to and frm:
        return "double"
    if to:
        return "to"
    if frm:
        return "from"
    return "none"

"""Run configuration and the default verification grids."""

from __future__ import annotations

import os
from dataclasses import dataclass, field, fields, replace
from itertools import chain
from typing import Iterator

from .ground import GroundData
from .klr import DEFAULT_BUDGET
from .specht import DEFAULT_CAP, SpechtConfig
from .tableaux import Multipartition, multipartitions

ENV_PREFIX = "KLRSPECHT_"
FORMATS = ("json", "csv", "text")
SUITES = ("relations", "braid", "sign-twist", "duality", "induction", "all")


@dataclass(frozen=True)
class RunConfig:
    """Everything a CLI command needs; built from flags with environment overrides."""

    e: int = 2
    charge: tuple[int, ...] = (0,)
    shape: str | None = None
    node: str | None = None
    orientation: str = "row"
    suite: str = "all"
    tableau: str | None = None
    k: int | None = None
    lam: tuple[int, ...] | None = None
    out: str | None = None
    format: str = "json"
    cap: int = DEFAULT_CAP
    budget: int = DEFAULT_BUDGET
    seed: int = 0

    @property
    def ground(self) -> GroundData:
        return GroundData(self.e, self.charge)

    @property
    def specht(self) -> SpechtConfig:
        return SpechtConfig(cap=self.cap, budget=self.budget)


_INT_FIELDS = {"e", "k", "cap", "budget", "seed"}
_TUPLE_FIELDS = {"charge", "lam"}


def parse_int_list(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    return tuple(int(x) for x in text.replace(" ", "").split(","))


def apply_env(config: RunConfig, environ: dict | None = None) -> RunConfig:
    """Override fields from KLRSPECHT_<FIELD> environment variables."""
    environ = os.environ if environ is None else environ
    updates = {}
    for f in fields(config):
        raw = environ.get(ENV_PREFIX + f.name.upper())
        if raw is None:
            continue
        if f.name in _INT_FIELDS:
            updates[f.name] = int(raw)
        elif f.name in _TUPLE_FIELDS:
            updates[f.name] = parse_int_list(raw)
        else:
            updates[f.name] = raw
    return replace(config, **updates) if updates else config


@dataclass(frozen=True)
class ShapeGrid:
    """Shapes and charges swept by the module-level verification suites."""

    es: tuple[int, ...] = (0, 2, 3)
    level_one_max: int = 6
    level_one_charges: tuple[tuple[int, ...], ...] = ((0,),)
    level_two_max: int = 5
    level_two_charges: tuple[tuple[int, ...], ...] = ((0, 0), (0, 1))

    def cases(self) -> Iterator[tuple[Multipartition, GroundData]]:
        for e in self.es:
            one = (
                (mu, GroundData(e, ch))
                for ch in self.level_one_charges
                for n in range(self.level_one_max + 1)
                for mu in multipartitions(n, 1)
            )
            two = (
                (mu, GroundData(e, ch))
                for ch in self.level_two_charges
                for n in range(self.level_two_max + 1)
                for mu in multipartitions(n, 2)
            )
            yield from chain(one, two)


@dataclass(frozen=True)
class BrickGrid:
    """(e, k) pairs swept by the brick intertwiner suite; every composition of k is used."""

    es: tuple[int, ...] = (2, 3)
    ks: tuple[int, ...] = (2, 3)
    orientations: tuple[str, ...] = ("row", "column")
    residue: int = 0


@dataclass(frozen=True)
class DefectGrid:
    """Shapes and charges for the exhaustive deg + codeg = defect sweep."""

    es: tuple[int, ...] = (0, 2, 3)
    level_one_max: int = 8
    level_two_max: int = 6
    level_two_charges: tuple[tuple[int, ...], ...] = field(default=((0, 0), (0, 1)))

    def cases(self) -> Iterator[tuple[Multipartition, GroundData]]:
        for e in self.es:
            for n in range(self.level_one_max + 1):
                for mu in multipartitions(n, 1):
                    yield mu, GroundData(e, (0,))
            for ch in self.level_two_charges:
                for n in range(self.level_two_max + 1):
                    for mu in multipartitions(n, 2):
                        yield mu, GroundData(e, ch)

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .core import Algebra, ModCoord, is_valid


def _belongs(alg, x: ModCoord) -> bool:
    if x.is_zero:
        return False
    if isinstance(alg, Algebra):
        return is_valid(alg, x.i, x.j)
    return alg.contains(x)


@dataclass(frozen=True)
class ModSet:
    """A subcategory closed under sums and summands, stored as its indecomposables."""

    algebra: object  # Algebra or KupischAlgebra
    members: tuple[ModCoord, ...]

    def __post_init__(self):
        members = tuple(sorted(set(self.members)))
        for x in members:
            if not _belongs(self.algebra, x):
                raise ValueError(f"{x} is not an indecomposable module over {self.algebra}")
        object.__setattr__(self, "members", members)

    @classmethod
    def of(cls, alg, members: Iterable[ModCoord]) -> ModSet:
        return cls(alg, tuple(members))

    def __contains__(self, x: ModCoord) -> bool:
        return x in self.members

    def __iter__(self) -> Iterator[ModCoord]:
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def as_set(self) -> frozenset[ModCoord]:
        return frozenset(self.members)

    def pairs(self) -> list[list[int]]:
        return [x.as_pair() for x in self.members]

    def __str__(self) -> str:
        return "{" + ", ".join(str(x) for x in self.members) + "}"


def algebra_label(alg) -> dict:
    if isinstance(alg, Algebra):
        return {"m": alg.m, "l": alg.l}
    return {"kupisch": list(alg.c)}

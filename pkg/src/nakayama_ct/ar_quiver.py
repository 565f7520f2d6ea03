"""Auslander-Reiten quiver of ``Lambda(m, l)`` with DOT and JSON export.

JSON layout::

    {"algebra": {"m": 9, "l": 3},
     "vertices": [[i, j], ...],
     "arrows": [[[i, j], [i2, j2]], ...],
     "highlights": [[i, j], ...]}

DOT nodes are named ``M_i_j`` and carry ``row`` (= j), ``col`` (= i) and a
``pos`` hint reproducing the staircase drawing. Highlighted nodes get
``highlight=true`` and a circled shape.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from . import core
from .core import Algebra, ModCoord


@dataclass(frozen=True)
class QuiverGraph:
    algebra: Algebra
    vertices: tuple[ModCoord, ...]
    arrows: tuple[tuple[ModCoord, ModCoord], ...]
    highlights: frozenset[ModCoord] = frozenset()

    def with_highlights(self, members) -> QuiverGraph:
        members = frozenset(members)
        unknown = members - set(self.vertices)
        if unknown:
            raise ValueError(f"highlighted modules not in the quiver: {sorted(unknown)}")
        return QuiverGraph(self.algebra, self.vertices, self.arrows, members)


def irreducible_targets(alg: Algebra, x: ModCoord) -> list[ModCoord]:
    """Targets of the irreducible maps out of ``x``: ``M(i, j+1)`` and ``M(i+1, j-1)``."""
    out = [core.module(alg, x.i, x.j + 1), core.module(alg, x.i + 1, x.j - 1)]
    return [y for y in out if not y.is_zero]


def build(alg: Algebra) -> QuiverGraph:
    vertices = tuple(core.indecomposables(alg))
    arrows = tuple(
        sorted(
            ((x, y) for x in vertices for y in irreducible_targets(alg, x)),
            key=lambda a: (a[0].sort_key(), a[1].sort_key()),
        )
    )
    return QuiverGraph(alg, vertices, arrows)


def _name(x: ModCoord) -> str:
    return f"M_{x.i}_{x.j}"


def _half(twice: int) -> str:
    return f"{twice // 2}.5" if twice % 2 else str(twice // 2)


def export_dot(g: QuiverGraph) -> str:
    alg = g.algebra
    lines = [
        f'digraph "AR_{alg.m}_{alg.l}" {{',
        "  node [shape=plaintext];",
    ]
    for x in g.vertices:
        attrs = [
            f'label="({x.i},{x.j})"',
            f"row={x.j}",
            f"col={x.i}",
            f'pos="{_half(2 * x.i + x.j - 1)},{x.j}!"',
        ]
        if x in g.highlights:
            attrs += ["highlight=true", "shape=circle"]
        lines.append(f"  {_name(x)} [{', '.join(attrs)}];")
    for x, y in g.arrows:
        lines.append(f"  {_name(x)} -> {_name(y)};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_dict(g: QuiverGraph) -> dict:
    return {
        "algebra": {"m": g.algebra.m, "l": g.algebra.l},
        "vertices": [x.as_pair() for x in g.vertices],
        "arrows": [[x.as_pair(), y.as_pair()] for x, y in g.arrows],
        "highlights": [x.as_pair() for x in sorted(g.highlights)],
    }


def export_json(g: QuiverGraph) -> str:
    return json.dumps(to_dict(g)) + "\n"


def parse_json(text: str) -> QuiverGraph:
    data = json.loads(text)
    alg = core.make_algebra(data["algebra"]["m"], data["algebra"]["l"])
    vertices = tuple(ModCoord(i, j) for i, j in data["vertices"])
    arrows = tuple((ModCoord(*a), ModCoord(*b)) for a, b in data["arrows"])
    highlights = frozenset(ModCoord(i, j) for i, j in data.get("highlights", []))
    return QuiverGraph(alg, vertices, arrows, highlights)

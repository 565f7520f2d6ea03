"""Cluster tilting by definition, and exhaustive search over subcategories.

All Ext data is packed into integer bitmasks over the indecomposables of the
algebra, so perpendicular categories are a handful of ``&``/``|`` operations.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from ..core import ModCoord
from ..modset import ModSet
from .homology import Oracle, get_oracle
from .representation import AnyAlgebra, KupischAlgebra, as_kupisch

DEFAULT_BUDGET = 2**22


class BudgetExceeded(RuntimeError):
    """The search visited more candidate subsets than allowed."""

    def __init__(self, budget: int):
        super().__init__(f"search budget of {budget} candidate subsets exceeded")
        self.budget = budget


@dataclass(frozen=True)
class ExtMasks:
    """Bitmasks for ``Ext^i`` with ``0 < i < n``.

    ``left[a]`` has bit ``b`` set iff ``Ext^i(X_a, X_b) != 0`` for some such ``i``;
    ``right[b]`` is the transpose.
    """

    oracle: Oracle
    n: int
    left: tuple[int, ...]
    right: tuple[int, ...]

    def mask(self, xs) -> int:
        out = 0
        for x in xs:
            out |= 1 << self.oracle.index[x]
        return out

    def unmask(self, mask: int) -> list[ModCoord]:
        return [x for k, x in enumerate(self.oracle.modules) if mask >> k & 1]


def ext_masks(alg: AnyAlgebra, n: int) -> ExtMasks:
    return _ext_masks(as_kupisch(alg), n)


@lru_cache(maxsize=1024)
def _ext_masks(alg: KupischAlgebra, n: int) -> ExtMasks:
    oracle = get_oracle(alg)
    size = len(oracle.modules)
    left = [0] * size
    right = [0] * size
    for a, x in enumerate(oracle.modules):
        for b, y in enumerate(oracle.modules):
            if any(oracle.ext(x, y, i) for i in range(1, n)):
                left[a] |= 1 << b
                right[b] |= 1 << a
    return ExtMasks(oracle, n, tuple(left), tuple(right))


def left_support(alg: AnyAlgebra, x: ModCoord, n: int) -> list[ModCoord]:
    """Indecomposables ``Y`` with ``Ext^i(x, Y) != 0`` for some ``0 < i < n``."""
    masks = ext_masks(alg, n)
    return masks.unmask(masks.left[masks.oracle.index[x]])


def right_support(alg: AnyAlgebra, x: ModCoord, n: int) -> list[ModCoord]:
    masks = ext_masks(alg, n)
    return masks.unmask(masks.right[masks.oracle.index[x]])


def _perps(masks: ExtMasks, members: int) -> tuple[int, int]:
    size = len(masks.left)
    bad_right = 0  # Y with Ext(C, Y) != 0
    bad_left = 0  # Y with Ext(Y, C) != 0
    for a in range(size):
        if members >> a & 1:
            bad_right |= masks.left[a]
            bad_left |= masks.right[a]
    everything = (1 << size) - 1
    return everything & ~bad_right, everything & ~bad_left


def _is_nct_mask(masks: ExtMasks, members: int) -> bool:
    right_perp, left_perp = _perps(masks, members)
    return right_perp == members and left_perp == members


def is_nct(alg: AnyAlgebra, c, n: int) -> bool:
    """Whether ``add c`` is ``n``-cluster tilting: ``c = c^perp = ^perp c``.

    Functorial finiteness is automatic over a representation-finite algebra.
    """
    if n < 1:
        raise ValueError("n must be positive")
    masks = ext_masks(alg, n)
    return _is_nct_mask(masks, masks.mask(c))


def _bijection_holds(oracle: Oracle, members: list[ModCoord], n: int) -> bool:
    """Necessary condition: tau_n and its inverse are mutually inverse bijections
    between nonprojective and noninjective members."""
    member_set = set(members)
    nonproj = {x for x in members if not oracle.is_projective(x)}
    noninj = {x for x in members if not oracle.is_injective(x)}
    for x in nonproj:
        image = oracle.tau_n(x, n)
        if len(image) != 1 or image[0] not in noninj or oracle.tau_n_inv(image[0], n) != [x]:
            return False
    for x in noninj:
        image = oracle.tau_n_inv(x, n)
        if len(image) != 1 or image[0] not in nonproj or oracle.tau_n(image[0], n) != [x]:
            return False
    return nonproj <= member_set


def exhaustive_nct_search(alg: AnyAlgebra, n: int, budget: int = DEFAULT_BUDGET) -> list[ModSet]:
    """Every ``n``-cluster tilting subcategory of ``mod alg``.

    An ``n``-cluster tilting subcategory contains all projectives and injectives
    and is maximal among subcategories without self-extensions in degrees
    ``1..n-1``. The search therefore enumerates maximal cliques of the
    "no extensions either way" graph on the remaining modules (Bron-Kerbosch
    with pivoting), filters by the tau_n bijection condition, then checks the
    definition. ``budget`` bounds the number of visited search nodes.
    """
    if n < 2:
        raise ValueError("search is for n >= 2; mod is the only 1-cluster tilting subcategory")
    masks = ext_masks(alg, n)
    oracle = masks.oracle
    size = len(oracle.modules)
    mandatory = masks.mask(oracle.projectives()) | masks.mask(oracle.injectives())
    clash = [masks.left[a] | masks.right[a] for a in range(size)]

    forbidden = 0
    for a in range(size):
        if mandatory >> a & 1:
            forbidden |= clash[a]
    if mandatory & forbidden:
        return []
    free = 0
    for a in range(size):
        if not (mandatory >> a & 1) and not (forbidden >> a & 1) and not (clash[a] >> a & 1):
            free |= 1 << a
    compatible = [free & ~clash[a] & ~(1 << a) for a in range(size)]

    found: list[int] = []
    visited = 0

    def expand(chosen: int, cand: int, excluded: int) -> None:
        nonlocal visited
        visited += 1
        if visited > budget:
            raise BudgetExceeded(budget)
        if not cand and not excluded:
            found.append(chosen)
            return
        pivot_pool = cand | excluded
        pivot = max(_bits(pivot_pool), key=lambda p: (cand & compatible[p]).bit_count())
        for a in _bits(cand & ~compatible[pivot]):
            bit = 1 << a
            expand(chosen | bit, cand & compatible[a], excluded & compatible[a])
            cand &= ~bit
            excluded |= bit

    expand(0, free, 0)

    results = []
    for extra in found:
        members = mandatory | extra
        mods = masks.unmask(members)
        if _bijection_holds(oracle, mods, n) and _is_nct_mask(masks, members):
            results.append(ModSet.of(alg, mods))
    return sorted(results, key=lambda s: [x.sort_key() for x in s.members])


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out

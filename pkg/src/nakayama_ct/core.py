"""Closed-form homological calculus for homogeneous acyclic Nakayama algebras.

``Lambda(m, l)`` is the path algebra of the linear quiver ``m -> m-1 -> ... -> 1``
modulo the ``l``-th power of the arrow ideal. Its indecomposable modules are the
interval modules ``M(i, j)``: socle at vertex ``i``, top at vertex ``i + j - 1``,
``j`` composition factors. Every function here works purely on the coordinates
``(i, j)``; out-of-range results collapse to :data:`ZERO`.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import total_ordering


class InvalidAlgebraError(ValueError):
    """Parameters do not describe an admissible homogeneous acyclic Nakayama algebra."""


class ZeroModuleError(ValueError):
    """An operation that needs a nonzero indecomposable received the zero module."""


@dataclass(frozen=True)
class Algebra:
    """``Lambda(m, l)`` with ``2 <= l <= m - 1``."""

    m: int
    l: int

    def __post_init__(self):
        if not isinstance(self.m, int) or not isinstance(self.l, int):
            raise InvalidAlgebraError("m and l must be integers")
        if self.m < 2:
            raise InvalidAlgebraError(f"need at least two vertices, got m={self.m}")
        if self.l < 2:
            raise InvalidAlgebraError(f"l={self.l} < 2: the ideal is not admissible")
        if self.l > self.m - 1:
            raise InvalidAlgebraError(
                f"l={self.l} > m-1={self.m - 1}: no relations (hereditary case is not supported)"
            )

    def __str__(self) -> str:
        return f"Lambda({self.m},{self.l})"


def make_algebra(m: int, l: int) -> Algebra:
    return Algebra(m, l)


@total_ordering
@dataclass(frozen=True)
class ModCoord:
    """Coordinates of an interval module; ``ModCoord(0, 0)`` is the zero module.

    Ordering is by length first, then socle vertex, which is the row-by-row
    reading order of the Auslander-Reiten quiver.
    """

    i: int
    j: int

    @property
    def is_zero(self) -> bool:
        return self.j == 0

    @property
    def top(self) -> int:
        return self.i + self.j - 1

    @property
    def support(self) -> range:
        return range(self.i, self.i + self.j)

    def sort_key(self) -> tuple[int, int]:
        return (self.j, self.i)

    def __lt__(self, other: ModCoord) -> bool:
        return self.sort_key() < other.sort_key()

    def __str__(self) -> str:
        return "0" if self.is_zero else f"M({self.i},{self.j})"

    def as_pair(self) -> list[int]:
        return [self.i, self.j]


ZERO = ModCoord(0, 0)


def is_valid(alg: Algebra, i: int, j: int) -> bool:
    return 1 <= i <= alg.m and 1 <= j <= alg.l and 2 <= i + j <= alg.m + 1


def module(alg: Algebra, i: int, j: int) -> ModCoord:
    """``M(i, j)`` over ``alg``, or :data:`ZERO` if the coordinates are out of range."""
    return ModCoord(i, j) if is_valid(alg, i, j) else ZERO


def _check(alg: Algebra, x: ModCoord) -> None:
    if x.is_zero:
        raise ZeroModuleError("expected a nonzero indecomposable module")
    if not is_valid(alg, x.i, x.j):
        raise ValueError(f"{x} is not a module over {alg}")


def indecomposables(alg: Algebra) -> list[ModCoord]:
    """All indecomposables, ordered by ``(j, i)``."""
    return [
        ModCoord(i, j)
        for j in range(1, alg.l + 1)
        for i in range(1, alg.m + 2 - j)
    ]


def _check_vertex(alg: Algebra, k: int) -> None:
    if not 1 <= k <= alg.m:
        raise ValueError(f"vertex {k} out of range 1..{alg.m}")


def projective(alg: Algebra, k: int) -> ModCoord:
    """Projective cover ``P(k)`` of the simple module at vertex ``k``."""
    _check_vertex(alg, k)
    if k <= alg.l - 1:
        return ModCoord(1, k)
    return ModCoord(1 + k - alg.l, alg.l)


def injective(alg: Algebra, k: int) -> ModCoord:
    """Injective envelope ``I(k)`` of the simple module at vertex ``k``."""
    _check_vertex(alg, k)
    if k <= alg.m - alg.l + 1:
        return ModCoord(k, alg.l)
    return ModCoord(k, alg.m + 1 - k)


def projectives(alg: Algebra) -> list[ModCoord]:
    return sorted(projective(alg, k) for k in range(1, alg.m + 1))


def injectives(alg: Algebra) -> list[ModCoord]:
    return sorted(injective(alg, k) for k in range(1, alg.m + 1))


def is_projective(alg: Algebra, x: ModCoord) -> bool:
    _check(alg, x)
    return x.i == 1 or x.j == alg.l


def is_injective(alg: Algebra, x: ModCoord) -> bool:
    _check(alg, x)
    return x.i + x.j == alg.m + 1 or x.j == alg.l


@dataclass(frozen=True)
class ModuleClass:
    is_projective: bool
    is_injective: bool


def classify_module(alg: Algebra, x: ModCoord) -> ModuleClass:
    return ModuleClass(is_projective(alg, x), is_injective(alg, x))


def syzygy(alg: Algebra, x: ModCoord) -> ModCoord:
    """Kernel of the projective cover of ``x``."""
    if is_projective(alg, x):
        return ZERO
    i, j, l = x.i, x.j, alg.l
    if i + j <= l:
        return module(alg, 1, i - 1)
    return module(alg, i + j - l, l - j)


def cosyzygy(alg: Algebra, x: ModCoord) -> ModCoord:
    """Cokernel of the injective envelope of ``x``."""
    if is_injective(alg, x):
        return ZERO
    i, j, m, l = x.i, x.j, alg.m, alg.l
    if i <= m - l + 1:
        return module(alg, i + j, l - j)
    # I(i) = M(i, m+1-i) is shorter than l here
    return module(alg, i + j, m + 1 - i - j)


def syzygy_iter(alg: Algebra, x: ModCoord, k: int) -> ModCoord:
    """``Omega^k x`` for ``k >= 0``, ``Omega^{-|k|} x`` for ``k < 0``."""
    _check(alg, x)
    step = syzygy if k >= 0 else cosyzygy
    for _ in range(abs(k)):
        if x.is_zero:
            break
        x = step(alg, x)
    return x


def tau(alg: Algebra, x: ModCoord) -> ModCoord:
    if is_projective(alg, x):
        return ZERO
    return module(alg, x.i - 1, x.j)


def tau_inv(alg: Algebra, x: ModCoord) -> ModCoord:
    if is_injective(alg, x):
        return ZERO
    return module(alg, x.i + 1, x.j)


def _check_n(n: int) -> None:
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")


def tau_n(alg: Algebra, x: ModCoord, n: int) -> ModCoord:
    """The ``n``-Auslander-Reiten translation, by closed form."""
    _check_n(n)
    if is_projective(alg, x):
        return ZERO
    i, j, l = x.i, x.j, alg.l
    if n % 2 == 0:
        return module(alg, i + j - (n // 2) * l - 1, l - j)
    return module(alg, i - ((n - 1) // 2) * l - 1, j)


def tau_n_inv(alg: Algebra, x: ModCoord, n: int) -> ModCoord:
    """The inverse ``n``-Auslander-Reiten translation, by closed form."""
    _check_n(n)
    if is_injective(alg, x):
        return ZERO
    i, j, l = x.i, x.j, alg.l
    if n % 2 == 0:
        return module(alg, i + j + ((n - 2) // 2) * l + 1, l - j)
    return module(alg, i + ((n - 1) // 2) * l + 1, j)


def tau_n_by_iteration(alg: Algebra, x: ModCoord, n: int) -> ModCoord:
    """``tau(Omega^{n-1} x)`` computed step by step."""
    _check_n(n)
    y = syzygy_iter(alg, x, n - 1)
    return ZERO if y.is_zero else tau(alg, y)


def tau_n_inv_by_iteration(alg: Algebra, x: ModCoord, n: int) -> ModCoord:
    _check_n(n)
    y = syzygy_iter(alg, x, -(n - 1))
    return ZERO if y.is_zero else tau_inv(alg, y)


def dim_vector(alg: Algebra, x: ModCoord) -> tuple[int, ...]:
    """Dimension vector indexed by vertex ``1..m``."""
    return tuple(1 if (not x.is_zero and k in x.support) else 0 for k in range(1, alg.m + 1))


@dataclass(frozen=True)
class ArSequence:
    """``0 -> left -> middle -> right -> 0`` with at most two middle terms."""

    left: ModCoord
    middle: tuple[ModCoord, ...]
    right: ModCoord


def ar_sequence(alg: Algebra, right: ModCoord) -> ArSequence:
    """Almost split sequence ending in the nonprojective module ``right``."""
    if is_projective(alg, right):
        raise ValueError(f"{right} is projective; no almost split sequence ends in it")
    i, j = right.i - 1, right.j
    candidates = (module(alg, i, j + 1), module(alg, i + 1, j - 1))
    middle = tuple(sorted(c for c in candidates if not c.is_zero))
    return ArSequence(ModCoord(i, j), middle, right)


def proj_dim(alg: Algebra, x: ModCoord) -> int:
    _check(alg, x)
    if x.i == 1 or x.j == alg.l:
        return 0
    q, r = divmod(x.i - 2, alg.l)
    return 2 * q + 1 if x.j < alg.l - r else 2 * q + 2


def global_dim(alg: Algebra) -> int:
    q, r = divmod(alg.m - 1, alg.l)
    return 2 * q + (1 if r else 0)

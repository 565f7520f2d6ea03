"""Explicit representations of the linear quiver ``m -> m-1 -> ... -> 1``.

A :class:`KupischAlgebra` is an arbitrary acyclic Nakayama algebra, given by the
lengths ``c_k`` of its indecomposable projectives. Modules are stored as
matrices, one per arrow, and every homological quantity in this subpackage is
obtained by exact linear algebra on those matrices. Nothing here looks at the
closed forms in :mod:`nakayama_ct.core`.

Conventions: vertices are ``1..m``; the arrow ``a_k`` goes from ``k + 1`` to
``k`` and ``maps[k - 1]`` is its matrix, of shape ``dims[k-1] x dims[k]``.
A morphism is a list of per-vertex matrices, index ``u - 1`` for vertex ``u``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Sequence, Union

from ..core import Algebra, ModCoord
from ..linalg import Matrix, column_space, extend_to_basis, nullspace, rank, rref, solve


class KupischError(ValueError):
    """The sequence is not the Kupisch series of an acyclic Nakayama algebra."""


class RelationError(ValueError):
    """A representation does not satisfy the relations of the algebra."""


@dataclass(frozen=True)
class KupischAlgebra:
    """Acyclic Nakayama algebra with ``dim P(k) = c[k-1]``."""

    c: tuple[int, ...]

    def __post_init__(self):
        c = tuple(self.c)
        object.__setattr__(self, "c", c)
        if not c:
            raise KupischError("empty Kupisch series")
        if c[0] != 1:
            raise KupischError(f"c_1 must be 1, got {c[0]}")
        for k in range(1, len(c)):
            if not 2 <= c[k] <= c[k - 1] + 1:
                raise KupischError(
                    f"need 2 <= c_{k + 1} <= c_{k} + 1, got c_{k}={c[k - 1]}, c_{k + 1}={c[k]}"
                )

    @property
    def m(self) -> int:
        return len(self.c)

    def proj_length(self, k: int) -> int:
        return self.c[k - 1]

    @cached_property
    def homogeneous_l(self) -> int | None:
        """``l`` with ``c_k = min(k, l)`` for all ``k``, or ``None``.

        The hereditary algebra (``c_k = k``) counts as homogeneous with ``l = m``.
        """
        l = max(self.c)
        if all(ck == min(k, l) for k, ck in enumerate(self.c, start=1)):
            return l
        return None

    @property
    def is_homogeneous(self) -> bool:
        return self.homogeneous_l is not None

    def contains(self, x: ModCoord) -> bool:
        if x.is_zero or x.i < 1 or x.top > self.m:
            return False
        return x.j <= self.c[x.top - 1]

    def indecomposables(self) -> list[ModCoord]:
        out = [
            ModCoord(i, j)
            for j in range(1, max(self.c) + 1)
            for i in range(1, self.m + 2 - j)
        ]
        return [x for x in out if self.contains(x)]

    def projective_coord(self, k: int) -> ModCoord:
        return ModCoord(k - self.c[k - 1] + 1, self.c[k - 1])

    def injective_length(self, k: int) -> int:
        return sum(1 for u in range(k, self.m + 1) if u - self.c[u - 1] + 1 <= k)

    @cached_property
    def dual(self) -> KupischAlgebra:
        """The opposite algebra, with vertex ``k`` relabelled ``m + 1 - k``."""
        return KupischAlgebra(tuple(self.injective_length(self.m + 1 - k) for k in range(1, self.m + 1)))

    def dual_coord(self, x: ModCoord) -> ModCoord:
        """Coordinates of ``D x`` over :attr:`dual` (an involution on intervals)."""
        return ModCoord(self.m + 2 - x.i - x.j, x.j)

    def __str__(self) -> str:
        return "Kupisch(" + ",".join(map(str, self.c)) + ")"


def kupisch_algebra(c: Sequence[int]) -> KupischAlgebra:
    return KupischAlgebra(tuple(int(x) for x in c))


def homogeneous_kupisch(m: int, l: int) -> KupischAlgebra:
    return KupischAlgebra(tuple(min(k, l) for k in range(1, m + 1)))


AnyAlgebra = Union[Algebra, KupischAlgebra]


def as_kupisch(alg: AnyAlgebra) -> KupischAlgebra:
    if isinstance(alg, KupischAlgebra):
        return alg
    return homogeneous_kupisch(alg.m, alg.l)


@dataclass(frozen=True, eq=True)
class Representation:
    dims: tuple[int, ...]
    maps: tuple[Matrix, ...]

    def __post_init__(self):
        if len(self.maps) != max(len(self.dims) - 1, 0):
            raise ValueError("need one matrix per arrow")
        for k, a in enumerate(self.maps, start=1):
            if a.shape != (self.dims[k - 1], self.dims[k]):
                raise ValueError(
                    f"arrow {k + 1}->{k}: matrix shape {a.shape} does not match "
                    f"({self.dims[k - 1]}, {self.dims[k]})"
                )

    @property
    def m(self) -> int:
        return len(self.dims)

    def dim(self, u: int) -> int:
        return self.dims[u - 1]

    @property
    def total_dim(self) -> int:
        return sum(self.dims)

    def is_zero(self) -> bool:
        return self.total_dim == 0

    def path(self, b: int, a: int) -> Matrix:
        """The composite map from vertex ``b`` down to vertex ``a <= b``."""
        out = Matrix.identity(self.dim(a))
        for k in range(a, b):
            out = out @ self.maps[k - 1]
        return out

    def dual(self) -> Representation:
        """``D`` of this representation, on the relabelled opposite quiver."""
        return Representation(
            tuple(reversed(self.dims)), tuple(a.transpose() for a in reversed(self.maps))
        )

    def satisfies(self, alg: AnyAlgebra) -> bool:
        kup = as_kupisch(alg)
        if kup.m != self.m:
            return False
        for u in range(1, self.m + 1):
            a = u - kup.proj_length(u)
            if a >= 1 and not self.path(u, a).is_zero():
                return False
        return True


def zero_representation(m: int) -> Representation:
    return Representation((0,) * m, tuple(Matrix(0, 0) for _ in range(m - 1)))


def to_matrices(alg: AnyAlgebra, x: ModCoord) -> Representation:
    """The interval representation ``M(i, j)``: ``K`` on its support, identities inside."""
    kup = as_kupisch(alg)
    if x.is_zero:
        return zero_representation(kup.m)
    if x.i < 1 or x.top > kup.m:
        raise ValueError(f"{x} does not fit on {kup.m} vertices")
    if x.j > kup.proj_length(x.top):
        raise RelationError(
            f"{x} violates the relations: length {x.j} exceeds c_{x.top} = {kup.proj_length(x.top)}"
        )
    dims = tuple(1 if u in x.support else 0 for u in range(1, kup.m + 1))
    maps = tuple(
        Matrix(dims[k - 1], dims[k], [[1]] if dims[k - 1] and dims[k] else [[]] * dims[k - 1])
        for k in range(1, kup.m)
    )
    return Representation(dims, maps)


def direct_sum(reps: Sequence[Representation]) -> Representation:
    if not reps:
        raise ValueError("empty direct sum")
    m = reps[0].m
    dims = tuple(sum(r.dims[u] for r in reps) for u in range(m))
    maps = []
    for k in range(m - 1):
        rows = []
        col_off = 0
        total_cols = dims[k + 1]
        for r in reps:
            a = r.maps[k]
            for row in a.rows:
                rows.append([0] * col_off + list(row) + [0] * (total_cols - col_off - a.ncols))
            col_off += a.ncols
        maps.append(Matrix(dims[k], dims[k + 1], rows))
    return Representation(dims, tuple(maps))


Morphism = list  # list[Matrix], one per vertex


def is_morphism(f: Sequence[Matrix], v: Representation, w: Representation) -> bool:
    for u in range(1, v.m + 1):
        if f[u - 1].shape != (w.dim(u), v.dim(u)):
            return False
    return all(
        w.maps[k - 1] @ f[k] == f[k - 1] @ v.maps[k - 1] for k in range(1, v.m)
    )


def compose(g: Sequence[Matrix], f: Sequence[Matrix]) -> Morphism:
    """``g . f`` vertexwise."""
    return [gu @ fu for gu, fu in zip(g, f)]


def _hom_system(v: Representation, w: Representation) -> tuple[Matrix, list[int]]:
    # unknowns: entries of f_u (w_u x v_u), row-major, concatenated over u
    offsets = []
    n = 0
    for u in range(v.m):
        offsets.append(n)
        n += w.dims[u] * v.dims[u]
    eqs = []
    for k in range(1, v.m):
        wa, va = w.maps[k - 1], v.maps[k - 1]
        lo, hi = k - 1, k  # f_k at index k-1, f_{k+1} at index k
        for r in range(w.dims[lo]):
            for c in range(v.dims[hi]):
                row = [0] * n
                # (w_a f_{k+1})[r][c]
                for s in range(w.dims[hi]):
                    if wa.rows[r][s]:
                        row[offsets[hi] + s * v.dims[hi] + c] += wa.rows[r][s]
                # -(f_k v_a)[r][c]
                for t in range(v.dims[lo]):
                    if va.rows[t][c]:
                        row[offsets[lo] + r * v.dims[lo] + t] -= va.rows[t][c]
                if any(row):
                    eqs.append(row)
    return Matrix(len(eqs), n, eqs), offsets


def hom_dim(v: Representation, w: Representation) -> int:
    """``dim Hom(v, w)``, the nullity of the commuting-square system."""
    if v.m != w.m:
        raise ValueError("representations live on different quivers")
    system, _ = _hom_system(v, w)
    return system.ncols - rank(system)


def hom_basis(v: Representation, w: Representation) -> list[Morphism]:
    if v.m != w.m:
        raise ValueError("representations live on different quivers")
    system, offsets = _hom_system(v, w)
    out = []
    for vec in nullspace(system).columns():
        f = []
        for u in range(v.m):
            rows = [
                vec[offsets[u] + r * v.dims[u]: offsets[u] + (r + 1) * v.dims[u]]
                for r in range(w.dims[u])
            ]
            f.append(Matrix(w.dims[u], v.dims[u], rows))
        out.append(f)
    return out


def decompose(alg: AnyAlgebra, v: Representation) -> list[ModCoord]:
    """Interval summands of ``v`` with multiplicity, sorted.

    Uses inclusion-exclusion on the ranks ``r(a, b)`` of the composite maps
    from vertex ``b`` to vertex ``a``: ``r(a, b)`` counts the summands whose
    support contains ``[a, b]``.
    """
    if not v.satisfies(alg):
        raise RelationError("representation does not satisfy the relations")
    m = v.m
    ranks: dict[tuple[int, int], int] = {}

    def r(a: int, b: int) -> int:
        if a < 1 or b > m:
            return 0
        if (a, b) not in ranks:
            ranks[(a, b)] = rank(v.path(b, a)) if a < b else v.dim(a)
        return ranks[(a, b)]

    out = []
    for a in range(1, m + 1):
        for b in range(a, m + 1):
            mult = r(a, b) - r(a - 1, b) - r(a, b + 1) + r(a - 1, b + 1)
            if mult < 0:
                raise AssertionError("negative interval multiplicity")
            out.extend([ModCoord(a, b - a + 1)] * mult)
    return sorted(out)


@dataclass(frozen=True)
class ProjectiveModule:
    """``P(tops[0]) + P(tops[1]) + ...`` with an explicit path basis.

    At vertex ``u`` the basis is one vector per summand whose support contains
    ``u`` (the path from the summand's top down to ``u``), in summand order.
    """

    algebra: KupischAlgebra
    tops: tuple[int, ...]

    @cached_property
    def basis(self) -> dict[int, list[int]]:
        kup = self.algebra
        out: dict[int, list[int]] = {u: [] for u in range(1, kup.m + 1)}
        for s, v in enumerate(self.tops):
            for u in range(v - kup.proj_length(v) + 1, v + 1):
                out[u].append(s)
        return out

    @cached_property
    def rep(self) -> Representation:
        m = self.algebra.m
        dims = tuple(len(self.basis[u]) for u in range(1, m + 1))
        maps = []
        for k in range(1, m):
            lo, hi = self.basis[k], self.basis[k + 1]
            rows = [[1 if s == t else 0 for t in hi] for s in lo]
            maps.append(Matrix(len(lo), len(hi), rows))
        return Representation(dims, tuple(maps))

    def position(self, s: int, u: int) -> int:
        return self.basis[u].index(s)


def _radical_basis(v: Representation, u: int) -> Matrix:
    if u == v.m:
        return Matrix(v.dim(u), 0)
    return v.maps[u - 1]


def projective_cover(alg: AnyAlgebra, v: Representation) -> tuple[ProjectiveModule, Morphism]:
    """Minimal projective cover ``P -> v``.

    The top of ``v`` at ``u`` is ``v_u`` modulo the image of the arrow into
    ``u``; one copy of ``P(u)`` is taken per top basis vector.
    """
    kup = as_kupisch(alg)
    if v.is_zero():
        raise ValueError("the zero module has no nonzero cover")
    tops: list[int] = []
    gens: list[list[int]] = []
    for u in range(1, kup.m + 1):
        for e in extend_to_basis(_radical_basis(v, u)):
            tops.append(u)
            g = [0] * v.dim(u)
            g[e] = 1
            gens.append(g)
    proj = ProjectiveModule(kup, tuple(tops))
    cover = []
    for u in range(1, kup.m + 1):
        cols = []
        for s in proj.basis[u]:
            g = Matrix.from_columns(len(gens[s]), [gens[s]])
            cols.append((v.path(tops[s], u) @ g).column(0))
        cover.append(Matrix.from_columns(v.dim(u), cols))
    return proj, cover


def kernel(v: Representation, f: Sequence[Matrix]) -> tuple[Representation, Morphism]:
    """Kernel of ``f: v -> w`` as a representation, with its inclusion into ``v``."""
    incl = [nullspace(fu) for fu in f]
    maps = []
    for k in range(1, v.m):
        maps.append(solve(incl[k - 1], v.maps[k - 1] @ incl[k]))
    dims = tuple(a.ncols for a in incl)
    return Representation(dims, tuple(maps)), incl


def subquotient(v: Representation, upper: Sequence[Matrix], lower: Sequence[Matrix]) -> Representation:
    """``W / U`` for subrepresentations ``U <= W <= v`` spanned by the given columns."""
    comp = []
    full = []
    for u in range(v.m):
        lo = column_space(lower[u])
        both = lo.hstack(upper[u])
        _, piv = rref(both)
        extra = [p for p in piv if p >= lo.ncols]
        c = both.select_columns(extra)
        comp.append(c)
        full.append(lo.hstack(c))
    maps = []
    for k in range(1, v.m):
        image = v.maps[k - 1] @ comp[k]
        coords = solve(full[k - 1], image)
        nlo = full[k - 1].ncols - comp[k - 1].ncols
        maps.append(Matrix(comp[k - 1].ncols, comp[k].ncols, coords.rows[nlo:]))
    return Representation(tuple(c.ncols for c in comp), tuple(maps))


def radical_power(v: Representation, t: int) -> list[Matrix]:
    """Column bases of ``rad^t v`` at each vertex (images of length-``t`` paths)."""
    out = []
    for u in range(1, v.m + 1):
        if u + t > v.m:
            out.append(Matrix(v.dim(u), 0))
        else:
            out.append(column_space(v.path(u + t, u)))
    return out


def natural_map(alg: AnyAlgebra, x: ModCoord, y: ModCoord) -> Morphism:
    """Identity on the common support of two intervals, zero elsewhere.

    This is a morphism exactly when the overlap is a quotient of ``x`` and a
    submodule of ``y``; check with :func:`is_morphism`.
    """
    kup = as_kupisch(alg)
    out = []
    for u in range(1, kup.m + 1):
        dx = 1 if (not x.is_zero and u in x.support) else 0
        dy = 1 if (not y.is_zero and u in y.support) else 0
        out.append(Matrix(dy, dx, [[1]] if dx and dy else [[0] * dx for _ in range(dy)]))
    return out

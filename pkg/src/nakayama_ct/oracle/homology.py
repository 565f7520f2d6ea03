"""Resolutions, Ext groups and Auslander-Reiten translates from matrices."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from ..core import ModCoord
from ..linalg import Matrix, rank
from .representation import (
    AnyAlgebra,
    KupischAlgebra,
    Morphism,
    ProjectiveModule,
    Representation,
    as_kupisch,
    compose,
    decompose,
    direct_sum,
    is_morphism,
    kernel,
    natural_map,
    projective_cover,
    radical_power,
    subquotient,
    to_matrices,
)


@dataclass
class Resolution:
    """Minimal projective resolution ``... -> P_1 -> P_0 -> X -> 0``.

    ``differentials[k - 1]`` is ``d_k: P_k -> P_{k-1}``; ``syzygies[k - 1]`` is
    ``Omega^k X`` as a representation.
    """

    projectives: list[ProjectiveModule]
    augmentation: Morphism
    differentials: list[Morphism] = field(default_factory=list)
    syzygies: list[Representation] = field(default_factory=list)

    @property
    def length(self) -> int:
        return len(self.projectives) - 1

    @property
    def terms(self) -> list[tuple[int, ...]]:
        """Top vertices of each ``P_k``, i.e. the multiset of indecomposable projectives."""
        return [p.tops for p in self.projectives]


def min_resolution(alg: AnyAlgebra, x: Representation) -> Resolution:
    kup = as_kupisch(alg)
    proj, cover = projective_cover(kup, x)
    res = Resolution([proj], cover)
    syz, incl = kernel(proj.rep, cover)
    # acyclic Nakayama algebras have global dimension < m
    for _ in range(kup.m + 1):
        if syz.is_zero():
            return res
        res.syzygies.append(syz)
        nxt, nxt_cover = projective_cover(kup, syz)
        res.differentials.append(compose(incl, nxt_cover))
        res.projectives.append(nxt)
        syz, incl = kernel(nxt.rep, nxt_cover)
    raise RuntimeError("projective resolution did not terminate")


def _hom_into(p: ProjectiveModule, y: Representation) -> list[int]:
    return [y.dim(v) for v in p.tops]


def _coboundary(source: ProjectiveModule, target: ProjectiveModule, d: Morphism, y: Representation) -> Matrix:
    """``Hom(d, y): Hom(target, y) -> Hom(source, y)`` for ``d: source -> target``.

    A map out of ``P(w)`` is fixed by the image of its top generator in ``y_w``;
    so ``Hom(P_k, y)`` is the sum of ``y_{top}`` over the summands of ``P_k``.
    """
    row_dims = _hom_into(source, y)
    col_dims = _hom_into(target, y)
    row_off = [sum(row_dims[:s]) for s in range(len(row_dims))]
    col_off = [sum(col_dims[:t]) for t in range(len(col_dims))]
    rows = [[0] * sum(col_dims) for _ in range(sum(row_dims))]
    for s, v in enumerate(source.tops):
        if not row_dims[s]:
            continue
        image = d[v - 1].column(source.position(s, v))
        for t, coeff in zip(target.basis[v], image):
            if not coeff or not col_dims[t]:
                continue
            block = y.path(target.tops[t], v)
            for r in range(row_dims[s]):
                for c in range(col_dims[t]):
                    if block.rows[r][c]:
                        rows[row_off[s] + r][col_off[t] + c] += coeff * block.rows[r][c]
    return Matrix(sum(row_dims), sum(col_dims), rows)


def ext_dims(res: Resolution, y: Representation) -> list[int]:
    """``[dim Ext^0, ..., dim Ext^length]`` from the complex ``Hom(P_*, y)``."""
    cdims = [sum(_hom_into(p, y)) for p in res.projectives]
    ranks = [0]  # coboundary into degree 0
    for k, d in enumerate(res.differentials, start=1):
        ranks.append(rank(_coboundary(res.projectives[k], res.projectives[k - 1], d, y)))
    ranks.append(0)  # out of the last degree
    return [cdims[i] - ranks[i + 1] - ranks[i] for i in range(len(cdims))]


def injective_envelope(alg: AnyAlgebra, x: Representation) -> tuple[Representation, Morphism]:
    """``x -> I`` computed as the dual of the projective cover of ``D x``."""
    kup = as_kupisch(alg)
    proj, cover = projective_cover(kup.dual, x.dual())
    hull = proj.rep.dual()
    embed = [a.transpose() for a in reversed(cover)]
    return hull, embed


def cosyzygy_rep(alg: AnyAlgebra, x: Representation) -> Representation:
    """Cokernel of the injective envelope, as ``D`` of a syzygy over the dual algebra."""
    kup = as_kupisch(alg)
    proj, cover = projective_cover(kup.dual, x.dual())
    syz, _ = kernel(proj.rep, cover)
    return syz.dual()


def syzygy_rep(alg: AnyAlgebra, x: Representation) -> Representation:
    proj, cover = projective_cover(alg, x)
    return kernel(proj.rep, cover)[0]


def ar_translate_rep(alg: AnyAlgebra, x: Representation) -> Representation:
    """``tau`` of a nonprojective uniserial module.

    Over a Nakayama algebra ``tau(P / rad^t P) = rad P / rad^{t+1} P`` where
    ``P`` is the projective cover and ``t`` the length.
    """
    proj, _ = projective_cover(alg, x)
    p = proj.rep
    t = x.total_dim
    return subquotient(p, radical_power(p, 1), radical_power(p, t + 1))


class Oracle:
    """Brute-force homological data of one acyclic Nakayama algebra.

    Results are cached per instance; use :func:`get_oracle` to share instances.
    """

    def __init__(self, alg: AnyAlgebra):
        self.algebra = as_kupisch(alg)
        self.modules = self.algebra.indecomposables()
        self.index = {x: k for k, x in enumerate(self.modules)}
        self._reps: dict[ModCoord, Representation] = {}
        self._res: dict[ModCoord, Resolution] = {}
        self._ext: dict[tuple[ModCoord, ModCoord], list[int]] = {}
        self._hom: dict[tuple[ModCoord, ModCoord], int] = {}

    def rep(self, x: ModCoord) -> Representation:
        if x not in self._reps:
            self._reps[x] = to_matrices(self.algebra, x)
        return self._reps[x]

    def resolution(self, x: ModCoord) -> Resolution:
        if x not in self._res:
            self._res[x] = min_resolution(self.algebra, self.rep(x))
        return self._res[x]

    def is_projective(self, x: ModCoord) -> bool:
        return self.resolution(x).length == 0

    def is_injective(self, x: ModCoord) -> bool:
        return cosyzygy_rep(self.algebra, self.rep(x)).is_zero()

    def projectives(self) -> list[ModCoord]:
        return [x for x in self.modules if self.is_projective(x)]

    def injectives(self) -> list[ModCoord]:
        return [x for x in self.modules if self.is_injective(x)]

    def proj_dim(self, x: ModCoord) -> int:
        return self.resolution(x).length

    def global_dim(self) -> int:
        return max(self.proj_dim(x) for x in self.modules)

    def hom(self, x: ModCoord, y: ModCoord) -> int:
        key = (x, y)
        if key not in self._hom:
            from .representation import hom_dim

            self._hom[key] = hom_dim(self.rep(x), self.rep(y))
        return self._hom[key]

    def ext_all(self, x: ModCoord, y: ModCoord) -> list[int]:
        key = (x, y)
        if key not in self._ext:
            self._ext[key] = ext_dims(self.resolution(x), self.rep(y))
        return self._ext[key]

    def ext(self, x: ModCoord, y: ModCoord, i: int) -> int:
        dims = self.ext_all(x, y)
        return dims[i] if i < len(dims) else 0

    def syzygy(self, x: ModCoord) -> list[ModCoord]:
        res = self.resolution(x)
        if not res.syzygies:
            return []
        return decompose(self.algebra, res.syzygies[0])

    def cosyzygy(self, x: ModCoord) -> list[ModCoord]:
        return decompose(self.algebra, cosyzygy_rep(self.algebra, self.rep(x)))

    def tau(self, x: ModCoord) -> list[ModCoord]:
        if self.is_projective(x):
            return []
        return decompose(self.algebra, ar_translate_rep(self.algebra, self.rep(x)))

    def tau_inv(self, x: ModCoord) -> list[ModCoord]:
        if self.is_injective(x):
            return []
        dual = self.algebra.dual
        rep = ar_translate_rep(dual, self.rep(x).dual()).dual()
        return decompose(self.algebra, rep)

    def _iterate(self, step, xs: list[ModCoord], k: int) -> list[ModCoord]:
        for _ in range(k):
            xs = sorted(y for x in xs for y in step(x))
        return xs

    def tau_n(self, x: ModCoord, n: int) -> list[ModCoord]:
        """``tau(Omega^{n-1} x)`` as a multiset of intervals (empty for zero)."""
        return self._iterate(self.tau, self._iterate(self.syzygy, [x], n - 1), 1)

    def tau_n_inv(self, x: ModCoord, n: int) -> list[ModCoord]:
        return self._iterate(self.tau_inv, self._iterate(self.cosyzygy, [x], n - 1), 1)


@lru_cache(maxsize=256)
def _oracle_for(kup: KupischAlgebra) -> Oracle:
    return Oracle(kup)


def get_oracle(alg: AnyAlgebra) -> Oracle:
    return _oracle_for(as_kupisch(alg))


def ext_dim(alg: AnyAlgebra, x: ModCoord, y: ModCoord, i: int) -> int:
    """``dim Ext^i(x, y)`` via ``Hom`` applied to the minimal resolution of ``x``."""
    if x.is_zero or y.is_zero:
        raise ValueError("Ext is only computed between nonzero indecomposables")
    if i < 0:
        raise ValueError("negative degree")
    return get_oracle(alg).ext(x, y, i)


@dataclass(frozen=True)
class ExtTable:
    """``dim Ext^i(X, Y)`` for all indecomposables ``X, Y`` and ``0 <= i <= bound``."""

    algebra: KupischAlgebra
    bound: int
    modules: tuple[ModCoord, ...]
    entries: dict

    def __call__(self, x: ModCoord, y: ModCoord, i: int) -> int:
        if i > self.bound:
            raise KeyError(f"degree {i} exceeds table bound {self.bound}")
        return self.entries[(x, y, i)]


def ext_table(alg: AnyAlgebra, bound: int | None = None) -> ExtTable:
    oracle = get_oracle(alg)
    if bound is None:
        bound = oracle.global_dim()
    entries = {
        (x, y, i): oracle.ext(x, y, i)
        for x in oracle.modules
        for y in oracle.modules
        for i in range(bound + 1)
    }
    return ExtTable(oracle.algebra, bound, tuple(oracle.modules), entries)


@dataclass(frozen=True)
class ExactnessReport:
    injective: bool
    surjective: bool
    exact_middle: bool
    maps_are_morphisms: bool
    non_split: bool

    @property
    def ok(self) -> bool:
        return all(
            (self.injective, self.surjective, self.exact_middle, self.maps_are_morphisms, self.non_split)
        )


def check_ar_sequence(alg: AnyAlgebra, left: ModCoord, middle, right: ModCoord) -> ExactnessReport:
    """Verify ``0 -> left -> (+) middle -> right -> 0`` with the natural maps.

    The first map is the column of natural maps into each middle term, the
    second is the row ``[-t, q]`` (first middle term enters with a sign) so
    the composite vanishes. Non-splitness means the middle term is not
    isomorphic to ``left + right``.
    """
    kup = as_kupisch(alg)
    a, c = to_matrices(kup, left), to_matrices(kup, right)
    mids = [to_matrices(kup, y) for y in middle]
    b = direct_sum(mids)
    into = [natural_map(kup, left, y) for y in middle]
    outof = [natural_map(kup, y, right) for y in middle]
    morphisms = all(is_morphism(f, a, r) for f, r in zip(into, mids)) and all(
        is_morphism(g, r, c) for g, r in zip(outof, mids)
    )
    f, g = [], []
    for u in range(kup.m):
        col = into[0][u]
        for extra in into[1:]:
            col = col.vstack(extra[u])
        f.append(col)
        sign = -1 if len(middle) == 2 else 1
        row = outof[0][u] * sign
        for extra in outof[1:]:
            row = row.hstack(extra[u])
        g.append(row)
    inj = all(rank(fu) == a.dims[u] for u, fu in enumerate(f))
    surj = all(rank(gu) == c.dims[u] for u, gu in enumerate(g))
    middle_ok = all(
        (gu @ fu).is_zero() and rank(fu) == b.dims[u] - rank(gu) for u, (fu, gu) in enumerate(zip(f, g))
    )
    split = sorted(decompose(kup, b)) == sorted([left, right])
    return ExactnessReport(inj, surj, middle_ok, morphisms, not split)

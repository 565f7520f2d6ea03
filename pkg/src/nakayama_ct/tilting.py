"""Classification, construction and condition checks for n-cluster tilting subcategories."""

from __future__ import annotations

from dataclasses import dataclass, field

from . import core
from .core import Algebra, ModCoord
from .modset import ModSet
from .oracle import search


@dataclass(frozen=True)
class Parameterization:
    """Which branch of the classification matched, and with which ``k``."""

    branch: str  # "l=2" or "n even"
    k: int

    def __str__(self) -> str:
        return f"{self.branch}, k={self.k}"


def _validate(m: int, l: int, n: int | None = None) -> Algebra:
    alg = core.make_algebra(m, l)
    if n is not None and (not isinstance(n, int) or n < 2):
        raise ValueError(f"n must be an integer >= 2, got {n}")
    return alg


def nct_parameterization(m: int, l: int, n: int) -> Parameterization | None:
    """The matched form ``m = nk + 1`` (``l = 2``) or ``m = (n/2) l + 1 + k (nl - l + 2)``."""
    _validate(m, l, n)
    if l == 2 and (m - 1) % n == 0:
        return Parameterization("l=2", (m - 1) // n)
    if n % 2 == 0:
        base = (n // 2) * l + 1
        step = n * l - l + 2
        if m >= base and (m - base) % step == 0:
            return Parameterization("n even", (m - base) // step)
    return None


def admits_nct(m: int, l: int, n: int) -> bool:
    return nct_parameterization(m, l, n) is not None


def d_rep_finite(m: int, l: int) -> int | None:
    """``d = 2(m-1)/l`` if ``Lambda(m, l)`` is ``d``-representation-finite, else ``None``."""
    _validate(m, l)
    if l == 2 or (m - 1) % l == 0:
        return 2 * (m - 1) // l
    return None


def build_nct(alg: Algebra, n: int) -> ModSet:
    """All ``tau_n^{-r} P`` for projective ``P`` and ``r >= 0``.

    This is the only possible ``n``-cluster tilting subcategory; it is returned
    whether or not it actually is one.
    """
    members = set()
    for p in core.projectives(alg):
        x = p
        while not x.is_zero:
            members.add(x)
            x = core.tau_n_inv(alg, x, n)
    return ModSet.of(alg, members)


def orbit_of(alg: Algebra, x: ModCoord, n: int) -> tuple[ModCoord, int] | None:
    """``(P, r)`` with ``x = tau_n^{-r} P``, or ``None`` if ``x`` lies in no such orbit."""
    r = 0
    while not x.is_zero:
        if core.is_projective(alg, x):
            return x, r
        x = core.tau_n(alg, x, n)
        r += 1
    return None


@dataclass(frozen=True)
class Witness:
    module: ModCoord
    index: int | None = None
    detail: str = ""

    def __str__(self) -> str:
        where = str(self.module) if self.index is None else f"{self.module} (i={self.index})"
        return f"{where}: {self.detail}" if self.detail else where

    def to_dict(self) -> dict:
        return {"module": self.module.as_pair(), "index": self.index, "detail": self.detail}


@dataclass(frozen=True)
class Condition:
    name: str
    description: str
    witnesses: tuple[Witness, ...] = ()

    @property
    def passed(self) -> bool:
        return not self.witnesses

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "description": self.description,
            "passed": self.passed,
            "witnesses": [w.to_dict() for w in self.witnesses],
        }


@dataclass(frozen=True)
class ConditionReport:
    conditions: tuple[Condition, ...] = field(default_factory=tuple)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.conditions)

    def __getitem__(self, name: str) -> Condition:
        for c in self.conditions:
            if c.name == name:
                return c
        raise KeyError(name)

    def failures(self) -> list[Condition]:
        return [c for c in self.conditions if not c.passed]

    def to_dict(self) -> dict:
        return {"passed": self.passed, "conditions": [c.to_dict() for c in self.conditions]}

    def __add__(self, other: ConditionReport) -> ConditionReport:
        return ConditionReport(self.conditions + other.conditions)


def _split(alg: Algebra, c: ModSet) -> tuple[list[ModCoord], list[ModCoord]]:
    nonproj = [x for x in c if not core.is_projective(alg, x)]
    noninj = [x for x in c if not core.is_injective(alg, x)]
    return nonproj, noninj


def _missing_projectives(alg: Algebra, c: ModSet) -> tuple[Witness, ...]:
    return tuple(
        Witness(p, None, "projective not in subcategory") for p in core.projectives(alg) if p not in c
    )


def check_conditions_a(alg: Algebra, n: int, c: ModSet) -> ConditionReport:
    """Projectives, the tau_n bijection, and indecomposable intermediate (co)syzygies."""
    nonproj, noninj = _split(alg, c)
    nonproj_set, noninj_set = set(nonproj), set(noninj)

    bijection = []
    for x in nonproj:
        y = core.tau_n(alg, x, n)
        if y.is_zero:
            bijection.append(Witness(x, None, "tau_n is zero"))
        elif y not in noninj_set:
            bijection.append(Witness(x, None, f"tau_n = {y} is not a noninjective member"))
        elif core.tau_n_inv(alg, y, n) != x:
            bijection.append(Witness(x, None, f"tau_n^- tau_n = {core.tau_n_inv(alg, y, n)}"))
    for x in noninj:
        y = core.tau_n_inv(alg, x, n)
        if y.is_zero:
            bijection.append(Witness(x, None, "tau_n^- is zero"))
        elif y not in nonproj_set:
            bijection.append(Witness(x, None, f"tau_n^- = {y} is not a nonprojective member"))
        elif core.tau_n(alg, y, n) != x:
            bijection.append(Witness(x, None, f"tau_n tau_n^- = {core.tau_n(alg, y, n)}"))

    # over Lambda(m, l) a nonzero (co)syzygy of an interval is an interval
    syz = []
    for x in nonproj:
        for i in range(1, n):
            if core.syzygy_iter(alg, x, i).is_zero:
                syz.append(Witness(x, i, "syzygy vanishes"))
                break
    cosyz = []
    for x in noninj:
        for i in range(1, n):
            if core.syzygy_iter(alg, x, -i).is_zero:
                cosyz.append(Witness(x, i, "cosyzygy vanishes"))
                break

    return ConditionReport(
        (
            Condition("a1", "all indecomposable projectives belong to C", _missing_projectives(alg, c)),
            Condition("a2", "tau_n, tau_n^- are mutually inverse bijections C_P <-> C_I", tuple(bijection)),
            Condition("a3", "Omega^i M indecomposable for M in C_P, 0 < i < n", tuple(syz)),
            Condition("a4", "Omega^-i N indecomposable for N in C_I, 0 < i < n", tuple(cosyz)),
        )
    )


def left_support(alg, x: ModCoord, n: int) -> ModSet:
    """Indecomposables ``Y`` with ``Ext^i(x, Y) != 0`` for some ``0 < i < n``."""
    return ModSet.of(alg, search.left_support(alg, x, n))


def right_support(alg, x: ModCoord, n: int) -> ModSet:
    """Indecomposables ``Y`` with ``Ext^i(Y, x) != 0`` for some ``0 < i < n``."""
    return ModSet.of(alg, search.right_support(alg, x, n))


def _support(alg, x: ModCoord, n: int, side) -> frozenset:
    return frozenset() if x.is_zero else side(alg, x, n).as_set()


def check_conditions_b(alg: Algebra, n: int, c: ModSet) -> ConditionReport:
    """Projectives, plus matching Ext-supports across tau_n and tau_n^-."""
    nonproj, noninj = _split(alg, c)
    left = []
    for x in nonproj:
        y = core.tau_n(alg, x, n)
        if not y.is_zero and y not in c:
            left.append(Witness(x, None, f"tau_n = {y} not in C"))
        elif _support(alg, x, n, left_support) != _support(alg, y, n, right_support):
            left.append(Witness(x, None, f"LS_n({x}) != RS_n({y})"))
    right = []
    for x in noninj:
        y = core.tau_n_inv(alg, x, n)
        if not y.is_zero and y not in c:
            right.append(Witness(x, None, f"tau_n^- = {y} not in C"))
        elif _support(alg, x, n, right_support) != _support(alg, y, n, left_support):
            right.append(Witness(x, None, f"RS_n({x}) != LS_n({y})"))
    return ConditionReport(
        (
            Condition("b1", "all indecomposable projectives belong to C", _missing_projectives(alg, c)),
            Condition("b2", "tau_n M in C and LS_n(M) = RS_n(tau_n M) for M in C_P", tuple(left)),
            Condition("b3", "tau_n^- N in C and RS_n(N) = LS_n(tau_n^- N) for N in C_I", tuple(right)),
        )
    )


def is_nct(alg, c: ModSet, n: int) -> bool:
    return search.is_nct(alg, c.members, n)


__all__ = [
    "Condition",
    "ConditionReport",
    "Parameterization",
    "Witness",
    "admits_nct",
    "build_nct",
    "check_conditions_a",
    "check_conditions_b",
    "d_rep_finite",
    "is_nct",
    "left_support",
    "nct_parameterization",
    "orbit_of",
    "right_support",
]

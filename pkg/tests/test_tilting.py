import pytest

from nakayama_ct import core, tilting
from nakayama_ct.core import ModCoord
from nakayama_ct.modset import ModSet

A93 = core.make_algebra(9, 3)
A94 = core.make_algebra(9, 4)
A53 = core.make_algebra(5, 3)


def M(i, j):
    return ModCoord(i, j)


@pytest.mark.parametrize(
    "m,l,n,expected",
    [(9, 3, 2, True), (9, 4, 4, True), (5, 3, 2, False), (4, 3, 2, True), (7, 2, 3, True), (7, 2, 4, False)],
)
def test_admits(m, l, n, expected):
    assert tilting.admits_nct(m, l, n) is expected


def test_parameterization():
    assert str(tilting.nct_parameterization(9, 3, 2)) == "n even, k=1"
    assert str(tilting.nct_parameterization(7, 2, 3)) == "l=2, k=2"
    assert tilting.nct_parameterization(4, 3, 2).k == 0
    assert tilting.nct_parameterization(5, 3, 2) is None


def test_admits_rejects_bad_input():
    with pytest.raises(ValueError):
        tilting.admits_nct(9, 3, 1)
    with pytest.raises(ValueError):
        tilting.admits_nct(3, 3, 2)


def test_d_rep_finite():
    assert tilting.d_rep_finite(9, 4) == 4
    assert tilting.d_rep_finite(9, 3) is None
    assert tilting.d_rep_finite(4, 3) == 2
    assert tilting.d_rep_finite(6, 2) == 5


def test_build_nct():
    c = tilting.build_nct(A93, 2)
    assert c.pairs() == [
        [1, 1], [4, 1], [6, 1], [9, 1], [1, 2], [3, 2], [6, 2], [8, 2],
        [1, 3], [2, 3], [3, 3], [4, 3], [5, 3], [6, 3], [7, 3],
    ]  # fmt: skip
    c = tilting.build_nct(A94, 4)
    assert c.as_set() == set(core.projectives(A94)) | set(core.injectives(A94))
    assert len(c) == 12
    assert tilting.build_nct(core.make_algebra(4, 3), 2).as_set() == {
        M(1, 1), M(1, 2), M(1, 3), M(2, 3), M(3, 2), M(4, 1)
    }


def test_orbit_of():
    assert tilting.orbit_of(A93, M(8, 2), 2) == (M(1, 1), 3)
    assert tilting.orbit_of(A93, M(2, 3), 2) == (M(2, 3), 0)
    assert tilting.orbit_of(A93, M(2, 1), 2) is None


def test_conditions_pass_9_3():
    c = tilting.build_nct(A93, 2)
    assert tilting.check_conditions_a(A93, 2, c).passed
    assert tilting.check_conditions_b(A93, 2, c).passed
    assert tilting.is_nct(A93, c, 2)


def test_conditions_pass_9_4():
    c = tilting.build_nct(A94, 4)
    assert tilting.check_conditions_a(A94, 4, c).passed
    assert tilting.check_conditions_b(A94, 4, c).passed


def test_conditions_fail_5_3():
    c = tilting.build_nct(A53, 2)
    report = tilting.check_conditions_a(A53, 2, c)
    assert not report.passed
    assert [f.name for f in report.failures()] == ["a2"]
    assert M(3, 2) in {w.module for w in report["a2"].witnesses}
    assert not tilting.check_conditions_b(A53, 2, c).passed
    assert not tilting.is_nct(A53, c, 2)


def test_missing_projective_named():
    c = ModSet.of(A93, [x for x in tilting.build_nct(A93, 2) if x != M(1, 2)])
    for report in (tilting.check_conditions_a(A93, 2, c), tilting.check_conditions_b(A93, 2, c)):
        first = report.conditions[0]
        assert not first.passed
        assert [w.module for w in first.witnesses] == [M(1, 2)]


def test_report_dict_and_lookup():
    report = tilting.check_conditions_a(A53, 2, tilting.build_nct(A53, 2))
    d = report.to_dict()
    assert d["passed"] is False
    assert [c["name"] for c in d["conditions"]] == ["a1", "a2", "a3", "a4"]
    with pytest.raises(KeyError):
        report["zz"]


def test_supports():
    assert len(tilting.left_support(A93, M(1, 3), 2)) == 0
    assert len(tilting.right_support(A93, M(9, 1), 2)) == 0
    assert M(3, 1) in tilting.left_support(A93, M(4, 1), 2)
    assert M(4, 1) in tilting.right_support(A93, M(3, 1), 2)


def test_modset_validation():
    with pytest.raises(ValueError):
        ModSet.of(A93, [M(1, 4)])
    s = ModSet.of(A93, [M(2, 1), M(1, 1), M(2, 1)])
    assert s.members == (M(1, 1), M(2, 1))
    assert str(s) == "{M(1,1), M(2,1)}"


def test_classification_sweep_against_definition():
    for m in range(3, 13):
        for l in range(2, m):
            alg = core.make_algebra(m, l)
            for n in range(2, 9):
                c = tilting.build_nct(alg, n)
                admits = tilting.admits_nct(m, l, n)
                assert tilting.is_nct(alg, c, n) == admits, (m, l, n)
                if admits:
                    assert tilting.check_conditions_a(alg, n, c).passed, (m, l, n)
                    assert tilting.check_conditions_b(alg, n, c).passed, (m, l, n)

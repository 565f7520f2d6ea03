"""Property tests for the invariants tying closed forms, oracle and search together."""

from hypothesis import assume, given
from hypothesis import strategies as st

from nakayama_ct import core, tilting
from nakayama_ct.oracle import (
    exhaustive_nct_search,
    get_oracle,
    hom_dim,
    kupisch_algebra,
    left_support,
    right_support,
    to_matrices,
)
from nakayama_ct.oracle.representation import decompose


def algebras(max_m: int):
    return st.integers(3, max_m).flatmap(lambda m: st.tuples(st.just(m), st.integers(2, m - 1))).map(
        lambda ml: core.make_algebra(*ml)
    )


@st.composite
def algebra_and_module(draw, max_m=15):
    alg = draw(algebras(max_m))
    x = draw(st.sampled_from(core.indecomposables(alg)))
    return alg, x


@st.composite
def kupisch_series(draw, max_m=7):
    m = draw(st.integers(2, max_m))
    c = [1]
    for _ in range(m - 1):
        c.append(draw(st.integers(2, c[-1] + 1)))
    return kupisch_algebra(c)


ns = st.integers(1, 8)


@given(algebra_and_module())
def test_tau_round_trips(am):
    alg, x = am
    y = core.tau(alg, x)
    if not y.is_zero:
        assert core.tau_inv(alg, y) == x
    y = core.tau_inv(alg, x)
    if not y.is_zero:
        assert core.tau(alg, y) == x


@given(algebra_and_module(), ns)
def test_tau_n_round_trips(am, n):
    alg, x = am
    y = core.tau_n(alg, x, n)
    if not y.is_zero:
        assert core.tau_n_inv(alg, y, n) == x
    y = core.tau_n_inv(alg, x, n)
    if not y.is_zero:
        assert core.tau_n(alg, y, n) == x


@given(algebra_and_module(), ns)
def test_closed_form_matches_iteration(am, n):
    alg, x = am
    assert core.tau_n(alg, x, n) == core.tau_n_by_iteration(alg, x, n)
    assert core.tau_n_inv(alg, x, n) == core.tau_n_inv_by_iteration(alg, x, n)


@given(algebra_and_module())
def test_syzygy_zero_iff_projective(am):
    alg, x = am
    assert core.syzygy(alg, x).is_zero == core.is_projective(alg, x)
    assert core.cosyzygy(alg, x).is_zero == core.is_injective(alg, x)


@given(algebra_and_module())
def test_ar_sequence_dimension_additive(am):
    alg, x = am
    assume(not core.is_projective(alg, x))
    seq = core.ar_sequence(alg, x)
    total = [a + c for a, c in zip(core.dim_vector(alg, seq.left), core.dim_vector(alg, seq.right))]
    middle = [sum(v) for v in zip(*(core.dim_vector(alg, y) for y in seq.middle))]
    assert middle == total


@given(algebra_and_module(max_m=9))
def test_oracle_agrees_with_closed_forms(am):
    alg, x = am
    o = get_oracle(alg)
    as_list = lambda y: [] if y.is_zero else [y]  # noqa: E731
    assert o.syzygy(x) == as_list(core.syzygy(alg, x))
    assert o.cosyzygy(x) == as_list(core.cosyzygy(alg, x))
    assert o.tau(x) == as_list(core.tau(alg, x))
    assert o.tau_inv(x) == as_list(core.tau_inv(alg, x))
    assert o.proj_dim(x) == core.proj_dim(alg, x)


@given(algebra_and_module(max_m=9))
def test_ext1_against_tau(am):
    alg, x = am
    assume(not core.is_projective(alg, x))
    assert get_oracle(alg).ext(x, core.tau(alg, x), 1) >= 1


@given(algebras(8), st.data())
def test_hom_at_most_one(alg, data):
    mods = core.indecomposables(alg)
    x = data.draw(st.sampled_from(mods))
    y = data.draw(st.sampled_from(mods))
    assert hom_dim(to_matrices(alg, x), to_matrices(alg, y)) <= 1


@given(algebras(8), st.integers(2, 5), st.data())
def test_support_duality(alg, n, data):
    mods = core.indecomposables(alg)
    x = data.draw(st.sampled_from(mods))
    o = get_oracle(alg)
    ls = set(left_support(alg, x, n))
    assert ls == {y for y in mods if any(o.ext(x, y, i) for i in range(1, n))}
    for y in mods:
        assert (y in ls) == (x in right_support(alg, y, n))


@given(algebra_and_module(max_m=9), st.integers(2, 5))
def test_projectives_have_empty_left_support(am, n):
    alg, x = am
    assert (len(left_support(alg, x, n)) == 0) == core.is_projective(alg, x)
    assert (len(right_support(alg, x, n)) == 0) == core.is_injective(alg, x)


@given(algebras(15), st.integers(2, 8))
def test_orbit_partition(alg, n):
    c = tilting.build_nct(alg, n)
    seen = {}
    for p in core.projectives(alg):
        x, r = p, 0
        while not x.is_zero:
            assert x not in seen, "orbits overlap"
            seen[x] = (p, r)
            x, r = core.tau_n_inv(alg, x, n), r + 1
    assert set(seen) == c.as_set()
    for x in c:
        assert tilting.orbit_of(alg, x, n) == seen[x]


@given(algebras(10), st.integers(2, 6))
def test_classification_implies_conditions(alg, n):
    c = tilting.build_nct(alg, n)
    verdict = tilting.is_nct(alg, c, n)
    assert verdict == tilting.admits_nct(alg.m, alg.l, n)
    if verdict:
        assert tilting.check_conditions_a(alg, n, c).passed
        assert tilting.check_conditions_b(alg, n, c).passed


@given(algebras(12))
def test_d_rep_finite_is_projectives_and_injectives(alg):
    d = tilting.d_rep_finite(alg.m, alg.l)
    assume(d is not None)
    assert d == core.global_dim(alg)
    c = tilting.build_nct(alg, d)
    assert c.as_set() == set(core.projectives(alg)) | set(core.injectives(alg))


@given(kupisch_series())
def test_decomposable_syzygy_forces_ext_to_cover(alg):
    o = get_oracle(alg)
    for x in o.modules:
        if o.is_projective(x):
            continue
        res = o.resolution(x)
        if len(decompose(alg, res.syzygies[0])) >= 2:
            cover = decompose(alg, res.projectives[0].rep)
            assert any(o.ext(x, p, 1) for p in cover)


@given(kupisch_series(max_m=6), st.integers(2, 4))
def test_search_results_satisfy_bijection(alg, n):
    o = get_oracle(alg)
    for c in exhaustive_nct_search(alg, n):
        nonproj = [x for x in c if not o.is_projective(x)]
        noninj = [x for x in c if not o.is_injective(x)]
        assert sorted(y for x in nonproj for y in o.tau_n(x, n)) == sorted(noninj)
        assert sorted(y for x in noninj for y in o.tau_n_inv(x, n)) == sorted(nonproj)

import itertools

import pytest
from hypothesis import given, settings, strategies as st

from artinlab.algebra import Quiver, Relation, algebra_from_quiver
from artinlab.homology import INFINITE, nakayama
from artinlab.invariants import (
    EXACT,
    Caps,
    PhiEngine,
    compare_profiles,
    delooping_level,
    delooping_of_ids,
    dominant_dimensions,
    enumerate_indecomposables,
    findim_lower_bound,
    frobenius_part,
    nu_stably_projectives,
    phi_psi,
    phi_psi_dim,
    projective_injective_vertices,
    registry_pd,
    stable_profile,
)
from artinlab.modules import (
    Module,
    direct_sum,
    is_isomorphic,
    projective,
    radical_socle_top,
    standard_modules,
)

from conftest import ALL_FIXTURES, load
from oracles import (
    delooping_by_definition,
    interval_module_count,
    local_dual_numbers_classes,
    phi_by_definition,
)


@pytest.fixture(scope="module")
def registries():
    cache = {}

    def get(name):
        if name not in cache:
            cache[name] = enumerate_indecomposables(load(name))
        return cache[name]

    return get


def test_registry_counts_against_oracles(registries):
    assert len(registries("a1")) == local_dual_numbers_classes()
    assert len(registries("sect32_C")) == 2 * interval_module_count(3)
    assert len(registries("a2prime")) == interval_module_count(3)
    assert len(registries("tilting_A")) == interval_module_count(3)
    assert all(registries(n).closed for n in ("a1", "sect32_C", "a2prime"))


@pytest.mark.parametrize("name", ALL_FIXTURES)
def test_registry_is_irredundant_and_adjacency_valid(name, registries):
    reg = registries(name)
    n = len(reg)
    for x, y in itertools.combinations(reg.entries, 2):
        assert not is_isomorphic(x.module, y.module)[0]
    for e in reg.entries:
        for table in (e.omega, e.cosyzygy, e.ar_middle or []):
            assert all(j is not None and 0 <= j < n for j, _ in table)
        for j in (e.tau, e.tau_inv):
            assert j is None or 0 <= j < n
        assert e.projective == (e.omega == [] and e.tau is None)


@pytest.mark.parametrize("name", ["a2", "sect31_A", "sect31_B", "tilting_B", "a1prime"])
def test_del_matches_definition_oracle(name, registries):
    a = load(name)
    reg = registries(name)
    simples, _, _ = standard_modules(a)
    cands = [e.module for e in reg.entries]
    value, table = delooping_level(a, reg)
    per = [delooping_by_definition(s, cands) for s in simples]
    assert [table[s.name].value for s in simples] == per
    assert value.value == max(per)


@pytest.mark.parametrize("name", ["a2", "sect31_B", "sect32_A"])
def test_del_of_sum_is_max(name, registries):
    reg = registries(name)
    ids = [e.id for e in reg.entries]
    for x, y in itertools.combinations(ids, 2):
        dx = delooping_of_ids(reg, [x]).value
        dy = delooping_of_ids(reg, [y]).value
        assert delooping_of_ids(reg, [x, y]).value == max(dx, dy)


@pytest.mark.parametrize("name", ALL_FIXTURES)
def test_del_of_algebra_equals_del_of_top(name, registries):
    a = load(name)
    reg = registries(name)
    top = radical_socle_top(Module.regular(a)).top
    ids = [i for i, _ in reg.classify(top)]
    assert delooping_level(a, reg)[0].value == delooping_of_ids(reg, ids).value


@pytest.mark.parametrize("name", ALL_FIXTURES)
def test_findim_phi_psi_chain(name, registries):
    reg = registries(name)
    fd = findim_lower_bound(reg)
    phid, psid = phi_psi_dim(reg)
    if fd.status == phid.status == psid.status == EXACT:
        assert fd.value <= phid.value <= psid.value


@pytest.mark.parametrize("name", ["a2", "sect31_A", "sect31_B", "a1"])
def test_phi_dim_matches_definition_oracle(name, registries):
    reg = registries(name)
    assert phi_psi_dim(reg)[0].value == phi_by_definition([e.module for e in reg.entries])


@pytest.mark.parametrize("name", ALL_FIXTURES)
def test_phi_equals_pd_on_finite_pd_classes(name, registries):
    reg = registries(name)
    for e in reg.entries:
        pd = registry_pd(reg, e.id)
        if isinstance(pd, int):
            phi, psi = phi_psi(reg, [e.id])
            assert phi == psi.value == pd


@pytest.mark.parametrize("name", ALL_FIXTURES)
def test_rank_sequence_non_increasing_and_phi_monotone(name, registries):
    reg = registries(name)
    eng = PhiEngine(reg)
    ids = eng.np
    for c in ids:
        r = eng.ranks([c])
        assert all(x >= y for x, y in zip(r, r[1:]))
    for x, y in itertools.islice(itertools.combinations(ids, 2), 40):
        assert eng.phi([x]) <= eng.phi([x, y])


def test_a1_simple_phi_is_zero(registries):
    reg = registries("a1")
    s = next(e for e in reg.entries if e.simple)
    assert phi_psi(reg, [s.id])[0] == 0


def test_projective_phi_is_zero(registries):
    reg = registries("sect32_A")
    p = next(e for e in reg.entries if e.projective)
    phi, psi = phi_psi(reg, [p.id])
    assert phi == 0 and psi.value == 0


@pytest.mark.parametrize("name", ALL_FIXTURES)
def test_dominant_dimension_of_opposite(name):
    a = load(name)
    assert dominant_dimensions(a)[0].value == dominant_dimensions(a.opposite())[0].value


@pytest.mark.parametrize("name", ALL_FIXTURES)
def test_positive_nu_dd_forces_stp_equal_prinj(name):
    a = load(name)
    dd, nudd, _ = dominant_dimensions(a)
    if nudd.value == INFINITE or nudd.value >= 1:
        assert sorted(nu_stably_projectives(a)) == projective_injective_vertices(a)
        assert nudd.value == dd.value


@pytest.mark.parametrize("name", ALL_FIXTURES)
def test_stably_projective_sum_is_nakayama_stable(name):
    a = load(name)
    stp = nu_stably_projectives(a)
    if not stp:
        return
    u = direct_sum([projective(a, v) for v in stp])
    assert is_isomorphic(nakayama(u), u)[0]
    rst = radical_socle_top(u)
    assert is_isomorphic(rst.top, rst.soc)[0]
    reg = enumerate_indecomposables(a)
    ids = [i for i, _ in reg.classify(rst.top)]
    assert delooping_of_ids(reg, ids).value == 0


def test_sect32_dominant_dimensions():
    assert dominant_dimensions(load("sect32_A"))[1].value == 2
    assert dominant_dimensions(load("sect32_B"))[1].value == 2
    dd, nudd, _ = dominant_dimensions(load("sect32_C"))
    assert (dd.value, nudd.value) == (1, 0)
    assert frobenius_part(load("sect32_C")) is None


def test_semisimple_dominant_dimension_is_infinite():
    dd, nudd, _ = dominant_dimensions(load("centralizer_diag01"))
    assert dd.value == nudd.value == INFINITE


def test_frobenius_part_of_a2_is_a1():
    from artinlab.algebra import find_algebra_isomorphism

    assert find_algebra_isomorphism(frobenius_part(load("a2")), load("a1")) is not None


def test_compare_self_agrees():
    r = stable_profile(load("sect31_B"))
    rows = compare_profiles(r, r)
    assert all(row["agree"] for row in rows)


def test_compare_a1_pair_flags_node():
    rows = {r["invariant"]: r for r in compare_profiles(stable_profile(load("a1")), stable_profile(load("a1prime")))}
    assert rows["nonprojective_simples"]["left"] == rows["nonprojective_simples"]["right"] == 1
    assert rows["del"]["left"] == 0 and rows["del"]["right"] == 1
    assert rows["del"]["expected_equal"] is None and rows["del"]["verdict"] == "consistent"


def test_capped_registry_downgrades_status():
    # Kronecker algebra is representation-infinite
    q = Quiver(["1", "2"], [("x", "1", "2"), ("y", "1", "2")])
    a = algebra_from_quiver(q, [])
    report = stable_profile(a, Caps(registry=8, dim=6))
    assert report["registry"]["status"] == "capped"
    assert report["del"]["status"] == "lower-bound"


@st.composite
def radical_square_zero(draw):
    nv = draw(st.integers(1, 3))
    arrows = draw(st.lists(st.tuples(st.integers(0, nv - 1), st.integers(0, nv - 1)), max_size=3, unique=True))
    return nv, arrows


@settings(max_examples=15, deadline=None)
@given(radical_square_zero())
def test_random_radical_square_zero_properties(data):
    nv, arrows = data
    names = [f"a{k}" for k in range(len(arrows))]
    q = Quiver([str(v) for v in range(nv)], [(n, str(s), str(t)) for n, (s, t) in zip(names, arrows)])
    rels = [Relation([(1, (names[x], names[y]))]) for x in range(len(arrows)) for y in range(len(arrows))
            if arrows[x][1] == arrows[y][0]]
    a = algebra_from_quiver(q, rels)
    reg = enumerate_indecomposables(a, Caps(registry=40, dim=12))
    for x, y in itertools.combinations(reg.entries, 2):
        assert not is_isomorphic(x.module, y.module)[0]
    if not reg.closed:
        return
    fd = findim_lower_bound(reg)
    phid, psid = phi_psi_dim(reg)
    assert fd.value <= phid.value <= psid.value
    top = radical_socle_top(Module.regular(a)).top
    assert delooping_level(a, reg)[0].value == delooping_of_ids(reg, [i for i, _ in reg.classify(top)]).value
    assert dominant_dimensions(a)[0].value == dominant_dimensions(a.opposite())[0].value

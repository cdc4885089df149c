import pytest
from hypothesis import given, settings, strategies as st

from artinlab.homology import nakayama, syzygy
from artinlab.linalg import inverse, rank
from artinlab.modules import (
    Module,
    decompose,
    direct_sum,
    dual,
    endomorphism_algebra,
    hom_space,
    injective,
    is_hom,
    is_injective,
    is_isomorphic,
    is_projective,
    projective,
    projective_cover,
    radical_socle_top,
    simple,
    socle_multiplicities,
    standard_modules,
    top_multiplicities,
)

from conftest import ALL_FIXTURES, QUIVER_FIXTURES, load


def multiset(dec):
    return sorted((tuple(c.vertex_dims()), k) for c, k in dec.classes())


@pytest.mark.parametrize("name", ALL_FIXTURES)
def test_modules_are_valid(name):
    a = load(name)
    simples, projs, injs = standard_modules(a)
    for m in simples + projs + injs:
        assert m.check()
    assert all(is_projective(p) for p in projs)
    assert all(is_injective(i) for i in injs)


@pytest.mark.parametrize("name", ALL_FIXTURES)
def test_decompose_certificate_and_seed_independence(name):
    a = load(name)
    reg = Module.regular(a)
    d0 = decompose(Module(a, reg.verts, reg.acts), seed=0)
    d1 = decompose(Module(a, reg.verts, reg.acts), seed=17)
    cert = d0.certificate()
    assert rank(cert, reg.dim, a.field) == reg.dim
    inverse(cert, a.field)
    assert multiset(d0) == multiset(d1)
    assert sum(k for _, k in d0.classes()) == len(d0.summands)


@pytest.mark.parametrize("name", QUIVER_FIXTURES)
def test_regular_module_splits_into_projectives(name):
    a = load(name)
    d = decompose(Module.regular(a))
    assert len(d.summands) == a.nvert
    _, projs, _ = standard_modules(a)
    for s in d.summands:
        assert any(is_isomorphic(s, p)[0] for p in projs)


@pytest.mark.parametrize("name", ALL_FIXTURES)
def test_syzygy_is_additive(name):
    a = load(name)
    simples, _, injs = standard_modules(a)
    mods = simples + injs
    for x in mods[:3]:
        for y in mods[:3]:
            lhs = syzygy(direct_sum([x, y]))
            rhs = direct_sum([syzygy(x), syzygy(y)])
            assert lhs.vertex_dims() == rhs.vertex_dims()
            assert is_isomorphic(lhs, rhs)[0]


@pytest.mark.parametrize("name", ALL_FIXTURES)
def test_nakayama_sends_projectives_to_injectives_bijectively(name):
    a = load(name)
    _, projs, injs = standard_modules(a)
    images = [nakayama(p) for p in projs]
    for v, img in enumerate(images):
        assert is_isomorphic(img, injs[v])[0]
    for i in range(len(images)):
        for j in range(i + 1, len(images)):
            assert not is_isomorphic(images[i], images[j])[0]


@pytest.mark.parametrize("name", ["a2", "sect32_A", "sect31_B"])
def test_top_and_socle_of_projectives(name):
    a = load(name)
    for v in a.class_representatives():
        top = top_multiplicities(projective(a, v))
        assert top[v] == 1 and sum(top) == 1
        soc = socle_multiplicities(injective(a, v))
        assert soc[v] == 1 and sum(soc) == 1


def test_sect32_A_projective_shapes():
    a = load("sect32_A")
    p1 = projective(a, 0)
    assert p1.vertex_dims() == [1, 1, 1, 0]
    assert socle_multiplicities(p1)[2] == 1
    assert injective(a, 0).vertex_dims() == [1, 0, 1, 1]


def test_hom_dimensions_match_cartan_entries():
    a = load("a2")
    # dim Hom(P(i), P(j)) = dim e_i P(j)
    for i in range(2):
        for j in range(2):
            assert len(hom_space(projective(a, i), projective(a, j))) == projective(a, j).vertex_dims()[i]


def test_dual_is_involutive():
    a = load("sect31_A")
    for v in range(3):
        p = projective(a, v)
        assert is_isomorphic(dual(dual(p)), p)[0]


def test_radical_socle_top_dimensions():
    a = load("truncated_t3")
    rst = radical_socle_top(Module.regular(a))
    assert (rst.rad.dim, rst.soc.dim, rst.top.dim) == (2, 1, 1)


def test_projective_cover_is_surjective():
    a = load("sect31_B")
    for v in range(3):
        c = projective_cover(injective(a, v))
        assert rank(c.map, c.source.dim, a.field) == injective(a, v).dim
        assert is_hom(c.map, c.source, injective(a, v))


def test_endomorphism_algebra_of_projectives_recovers_algebra():
    a = load("sect32_A")
    e = endomorphism_algebra(direct_sum([projective(a, v) for v in range(4)]))
    assert e.dim == a.dim
    # End(A) is A^op
    from artinlab.algebra import find_algebra_isomorphism

    assert find_algebra_isomorphism(e, a.opposite()) is not None


@settings(max_examples=25, deadline=None)
@given(st.lists(st.integers(0, 3), min_size=1, max_size=4), st.integers(0, 2**16))
def test_decompose_random_sums_of_simples_and_projectives(picks, seed):
    a = load("sect32_A")
    pool = [simple(a, 0), projective(a, 1), injective(a, 2), projective(a, 3)]
    x = direct_sum([pool[k] for k in picks])
    d = decompose(x, seed=seed)
    assert len(d.summands) == len(picks)
    assert sorted(s.dim for s in d.summands) == sorted(pool[k].dim for k in picks)

import pytest
from hypothesis import given, settings, strategies as st

from artinlab.algebra import (
    Quiver,
    Relation,
    algebra_from_quiver,
    centralizer_algebra,
    find_algebra_isomorphism,
    is_semisimple,
    is_two_sided,
    left_annihilator,
    lower_triangular_matrix_algebra,
    quotient_algebra,
    semisimple_algebra,
    trace_ideal,
)
from artinlab.errors import NotNilpotent
from artinlab.modules import direct_sum, projective, simple
from artinlab.surgery import find_nodes

from conftest import ALL_FIXTURES, F101, NODE_FIXTURES, QUIVER_FIXTURES, load
from oracles import brute_centralizer_dimension, centralizer_dimension


@pytest.mark.parametrize("name", ALL_FIXTURES)
def test_structure_constants_associative(name):
    a = load(name)
    assert a.check_associative()
    assert a.check_idempotents()


@pytest.mark.parametrize("name", QUIVER_FIXTURES)
def test_associative_over_f101(name):
    a = load(name, F101)
    assert a.check_associative()
    assert a.dim == load(name).dim


def test_sect32_A_dimension_is_sum_of_projectives():
    a = load("sect32_A")
    dims = [projective(a, v).dim for v in range(4)]
    assert dims == [3, 2, 3, 2]
    assert a.dim == sum(dims) == 10


def test_gabriel_quiver_recovers_cycle():
    a = load("sect32_A")
    _, q, counts = a.gabriel_quiver()
    assert sorted(sum(counts, [])) == [0] * 12 + [1] * 4
    assert all(sum(row) == 1 for row in counts)


def test_opposite_is_involutive():
    a = load("sect31_A")
    op = a.opposite()
    assert op.dim == a.dim
    assert op.opposite() is a
    assert find_algebra_isomorphism(op.opposite(), a) is not None


def test_nonadmissible_relations_raise():
    q = Quiver(["1"], [("x", "1", "1")])
    with pytest.raises(NotNilpotent):
        algebra_from_quiver(q, [], n_max=8)


def test_bad_relation_path_raises():
    q = Quiver(["1", "2"], [("x", "1", "2")])
    with pytest.raises(ValueError):
        algebra_from_quiver(q, [Relation([(1, ("x", "x"))])])


@pytest.mark.parametrize(
    "matrix, blocks",
    [([[1, 0], [0, 1]], {1: [1, 1]}), ([[0, 1, 0], [0, 0, 1], [0, 0, 0]], {0: [3]}), ([[0, 0], [0, 1]], {0: [1], 1: [1]})],
)
def test_centralizer_dimension_formula(matrix, blocks):
    a = centralizer_algebra(matrix, len(matrix))
    assert a.dim == centralizer_dimension(blocks)
    assert a.check_associative()


@pytest.mark.parametrize("matrix", [[[1, 0], [0, 1]], [[0, 0], [0, 1]], [[0, 1], [0, 0]], [[1, 1], [0, 1]]])
def test_centralizer_dimension_brute_force(matrix):
    assert centralizer_algebra(matrix, 2).dim == brute_centralizer_dimension(matrix)


def test_centralizer_shapes():
    m2 = centralizer_algebra([[1, 0], [0, 1]], 2)
    assert m2.dim == 4 and not m2.is_basic() and is_semisimple(m2)
    j3 = centralizer_algebra([[0, 1, 0], [0, 0, 1], [0, 0, 0]], 3)
    assert j3.nvert == 1 and j3.loewy_length() == 3
    d = centralizer_algebra([[0, 0], [0, 1]], 2)
    assert find_algebra_isomorphism(d, semisimple_algebra(2)) is not None


def test_lower_triangular_is_linear_a3():
    t = lower_triangular_matrix_algebra(3)
    assert find_algebra_isomorphism(t, load("tilting_A")) is not None


@pytest.mark.parametrize("name", NODE_FIXTURES)
def test_trace_ideal_identities_on_node_fixtures(name):
    a = load(name)
    nodes = find_nodes(a)
    assert nodes
    i = trace_ideal(a, direct_sum([simple(a, v) for v in nodes], a))
    assert is_two_sided(a, i)
    for x in i.basis:
        for y in i.basis:
            assert not any(a.mul(x, y))
        for r in a.radical():
            assert not any(a.mul(r, x))
    j = left_annihilator(a, i)
    ech = j.echelon()
    assert all(ech.contains(r) for r in a.radical())
    assert is_semisimple(quotient_algebra(a, j))


def test_quotient_by_radical_is_semisimple():
    a = load("sect31_B")
    from artinlab.algebra import Ideal

    q = quotient_algebra(a, Ideal(a, a.radical()))
    assert q.dim == a.nvert and is_semisimple(q)


@st.composite
def monomial_algebras(draw):
    nv = draw(st.integers(1, 3))
    arrows = draw(st.lists(st.tuples(st.integers(0, nv - 1), st.integers(0, nv - 1)), min_size=0, max_size=4))
    names = [f"a{k}" for k in range(len(arrows))]
    length2 = [(x, y) for x in range(len(arrows)) for y in range(len(arrows)) if arrows[x][1] == arrows[y][0]]
    killed = draw(st.lists(st.sampled_from(length2), unique=True)) if length2 else []
    return nv, arrows, names, length2, killed


@settings(max_examples=40, deadline=None)
@given(monomial_algebras())
def test_monomial_algebra_dimension_counts_surviving_paths(data):
    nv, arrows, names, length2, killed = data
    verts = [str(v) for v in range(nv)]
    q = Quiver(verts, [(n, str(s), str(t)) for n, (s, t) in zip(names, arrows)])
    rels = [Relation([(1, (names[x], names[y]))]) for x, y in killed]
    # every path of length 3 is killed so the ideal is admissible
    for x, y in length2:
        for z in range(len(arrows)):
            if arrows[y][1] == arrows[z][0]:
                rels.append(Relation([(1, (names[x], names[y], names[z]))]))
    a = algebra_from_quiver(q, rels)
    assert a.dim == nv + len(arrows) + len(length2) - len(killed)
    assert a.check_associative()
    # radical is spanned by the arrows and surviving length-2 paths
    assert len(a.radical()) == a.dim - nv

"""The oracles themselves: registered values and sanity of the brute-force helpers."""

from artinlab.invariants import enumerate_indecomposables
from artinlab.modules import simple

from oracles import (
    REGISTERED_END_T3,
    brute_centralizer_dimension,
    centralizer_dimension,
    delooping_by_definition,
    end_of_regular_plus_simple_t3,
    interval_module_count,
    phi_by_definition,
)


def test_registered_end_t3_values_reproduce():
    e = end_of_regular_plus_simple_t3()
    assert e.dim == 6
    mods = [x.module for x in enumerate_indecomposables(e).entries]
    dels = [delooping_by_definition(simple(e, v), mods) for v in e.class_representatives()]
    assert max(dels) == REGISTERED_END_T3["del"]
    assert phi_by_definition(mods) == REGISTERED_END_T3["phi_dim"]


def test_counting_oracles():
    assert interval_module_count(3) == 6
    assert centralizer_dimension({0: [2, 1]}) == 5
    assert brute_centralizer_dimension([[2, 0], [0, 3]]) == 2

import itertools
import math

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from oracles import is_cluster_of_chains, naturally_labelled_posets, poset_expressions, small_posets
from poset_ramsey import expr as E
from poset_ramsey.errors import BudgetError, ConstructionError
from poset_ramsey.params import dim2, is_isomorphic, is_trivial, parameters
from poset_ramsey.poset import (
    Poset,
    antichain,
    boolean_cube,
    chain,
    chain_composition,
    glue,
    max_antichain,
    multipartite,
    named,
    parallel,
    subdivided_diamond,
)


def brute_width(p: Poset) -> int:
    best = 0
    for mask in range(1 << p.size):
        elems = [a for a in range(p.size) if mask >> a & 1]
        if all(not p.comparable(a, b) for a, b in itertools.combinations(elems, 2)):
            best = max(best, len(elems))
    return best


def brute_height(p: Poset) -> int:
    best = 1 if p.size else 0
    for perm_len in range(2, p.size + 1):
        for elems in itertools.combinations(range(p.size), perm_len):
            if all(p.comparable(a, b) for a, b in itertools.combinations(elems, 2)):
                best = perm_len
                break
    return best


def assert_poset_invariants(p: Poset) -> None:
    for a in range(p.size):
        assert not p.less(a, a)
        for b in range(p.size):
            if p.less(a, b):
                assert not p.less(b, a)
                assert p.down(b) >> a & 1
                for c in range(p.size):
                    if p.less(b, c):
                        assert p.less(a, c)


# -- constructions ------------------------------------------------------------


def test_chain_has_all_pairs():
    p = chain(3)
    assert p.size == 3
    assert len(p.pairs()) == 3


def test_sd_1_1_is_q2():
    assert is_isomorphic(subdivided_diamond(1, 1), boolean_cube(2))


def test_k12_is_v():
    assert is_isomorphic(multipartite(1, 2), named("V"))


def test_glue_of_chains_is_chain():
    assert is_isomorphic(glue(chain(2), chain(2)), chain(3))


def test_glue_v_below_chain_is_k112():
    g = glue(multipartite(1, 2), chain(2))
    assert g.size == 4
    assert is_isomorphic(g, multipartite(1, 1, 2))


def test_glue_requires_minimum_and_maximum():
    with pytest.raises(ConstructionError, match="left"):
        glue(antichain(2), chain(1))
    with pytest.raises(ConstructionError, match="right"):
        glue(chain(2), antichain(2))


def test_cycle_rejected():
    with pytest.raises(ConstructionError):
        Poset(2, [(0, 1), (1, 0)])


def test_named_lambda_is_dual_of_v():
    v, lam = named("V"), named("L")
    dual_v = Poset(3, [(b, a) for a, b in v.pairs()])
    assert is_isomorphic(dual_v, lam)


@given(poset_expressions)
def test_construct_is_total_and_valid(expr):
    try:
        p = E.construct(expr)
    except ConstructionError:
        assume(False)
    assert_poset_invariants(p)


# -- parameters ---------------------------------------------------------------


def test_cube_height_and_width_examples():
    assert parameters(boolean_cube(3)).height == 4
    assert parameters(boolean_cube(4)).width == 6


def test_two_chain_parameters():
    par = parameters(chain_composition(3, 2))
    assert (par.height, par.width, par.trivial) == (3, 2, True)


@pytest.mark.parametrize("n", range(6))
def test_sperner_width(n):
    assert boolean_cube(n).width == math.comb(n, math.ceil(n / 2))


@given(small_posets(8))
def test_height_width_match_brute_force(p):
    assert p.height == brute_height(p)
    assert p.width == brute_width(p)
    assert p.height * p.width >= p.size
    anti = max_antichain(p)
    assert len(anti) == p.width
    assert all(not p.comparable(a, b) for a, b in itertools.combinations(anti, 2))


@given(poset_expressions, poset_expressions)
def test_parallel_composition_height_and_width(e1, e2):
    try:
        p1, p2 = E.construct(e1), E.construct(e2)
    except ConstructionError:
        assume(False)
    assume(p1.size + p2.size <= 10)
    p = parallel(p1, p2)
    assert p.height == max(p1.height, p2.height)
    assert p.width == p1.width + p2.width


@pytest.mark.parametrize(
    "p, expected",
    [(chain_composition(2, 1), True), (named("V"), False), (named("N"), False), (named("J"), False),
     (antichain(4), True)],
)
def test_is_trivial_examples(p, expected):
    assert is_trivial(p) is expected


def test_is_trivial_matches_chain_partition_oracle_up_to_six_elements():
    mismatches = [p.pairs() for m in range(1, 7) for p in naturally_labelled_posets(m)
                  if is_trivial(p) != is_cluster_of_chains(p)]
    assert mismatches == []


@pytest.mark.parametrize(
    "p, expected", [(boolean_cube(3), 3), (chain(2), 1), (chain_composition(2, 2), 3), (chain(1), 0)]
)
def test_dim2_examples(p, expected):
    assert dim2(p) == expected


def test_dim2_budget():
    with pytest.raises(BudgetError):
        dim2(antichain(200))


@given(small_posets(6))
def test_dim2_lower_bounds(p):
    d = dim2(p)
    assert d >= math.ceil(math.log2(p.size))
    assert d >= p.height - 1


@pytest.mark.parametrize(
    "a, b, expected",
    [
        (subdivided_diamond(1, 1), boolean_cube(2), True),
        (chain(3), chain_composition(2, 1), False),
        (parallel(chain(2), chain(2)), chain_composition(2, 2), True),
    ],
)
def test_is_isomorphic_examples(a, b, expected):
    assert is_isomorphic(a, b) is expected


@given(small_posets(6), st.data())
def test_isomorphism_invariant_under_relabelling(p, data):
    perm = data.draw(st.permutations(list(range(p.size))))
    q = Poset(p.size, [(perm[a], perm[b]) for a, b in p.pairs()])
    assert is_isomorphic(p, q)

import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import is_cluster_of_chains, small_posets, unlabelled_posets
from poset_ramsey.bounds import (
    chain_parts,
    cor7_upper,
    glue_bound,
    ramsey_bounds,
    sperner_alpha,
    walzer_union_bound,
)
from poset_ramsey.errors import ParameterError
from poset_ramsey.poset import antichain, chain, chain_composition, named
from poset_ramsey.ramsey import exact_ramsey


def test_two_chains_exact():
    rep = ramsey_bounds(chain_composition(3, 1), 10)
    assert rep.exact == 14 and rep.provenance == ("THM4_TWO_CHAINS",)


def test_three_chains_outside_exact_families():
    rep = ramsey_bounds(chain_composition(3, 3, 1), 10)
    assert rep.exact is None and rep.provenance == ("COR7",)
    assert rep.lower == 14
    assert rep.upper_strict
    assert rep.upper == pytest.approx(10 + 3 + math.log2(3) + 0.5 * math.log2(math.log2(3)) + 1)
    assert rep.upper == pytest.approx(15.917, abs=1e-3)
    assert rep.best_integer_upper == 15


def test_nontrivial_upper_uses_height_and_dimension():
    rep = ramsey_bounds(named("V"), 10)
    assert rep.upper == 22 and not rep.upper_strict
    assert rep.lower == 11
    assert "THM1_NONTRIVIAL" in rep.provenance
    assert rep.asymptotic_lower == pytest.approx(10 + 10 / (15 * math.log2(10)))


@pytest.mark.parametrize(
    "p, n, expected, tag",
    [
        (chain(5), 3, 7, "THM4_CHAIN"),
        (chain_composition(4, 2), 2, 7, "THM4_TWO_CHAINS"),
        (chain_composition(3, 2, 2), 4, 9, "THM5"),
        (antichain(3), 6, 9, "TABLE1"),
        (antichain(4), 6, 9, "TABLE1"),
    ],
)
def test_exact_families(p, n, expected, tag):
    rep = ramsey_bounds(p, n)
    assert rep.exact == expected and rep.provenance == (tag,)
    assert rep.lower == rep.upper == expected


def test_n_must_be_positive():
    with pytest.raises(ParameterError):
        ramsey_bounds(chain(2), 0)


@pytest.mark.parametrize("n", [1, 2])
def test_bounds_contain_searched_values(n):
    for m in range(1, 5):
        for p in unlabelled_posets(m):
            value = exact_ramsey(p, n)
            rep = ramsey_bounds(p, n)
            assert rep.contains(value)
            if rep.exact is not None:
                assert rep.exact == value


@given(st.integers(1, 6), st.integers(1, 6), st.integers(1, 50))
def test_two_chain_value_meets_general_trivial_range(t1, t2, n):
    t1, t2 = max(t1, t2), min(t1, t2)
    rep = ramsey_bounds(chain_composition(t1, t2), n)
    assert rep.exact == n + t1 + 1
    assert rep.exact < cor7_upper(n, t1, 2)


@given(small_posets(6), st.integers(1, 30))
def test_report_invariants(p, n):
    rep = ramsey_bounds(p, n)
    assert rep.lower <= rep.upper
    assert rep.lower >= n + p.height - 1
    if rep.exact is not None:
        assert rep.contains(rep.exact)
    assert (chain_parts(p) is not None) == is_cluster_of_chains(p)


@pytest.mark.parametrize("l, expected", [(1, 0), (2, 2), (3, 3), (4, 4), (6, 4), (7, 5), (10, 5), (11, 6)])
def test_sperner_alpha_values(l, expected):
    assert sperner_alpha(l) == expected


def test_sperner_alpha_at_central_binomials():
    for big_n in range(2, 12):
        assert sperner_alpha(math.comb(big_n, big_n // 2)) == big_n
        assert sperner_alpha(math.comb(big_n, big_n // 2) + 1) == big_n + 1


def test_union_bound():
    assert walzer_union_bound([5, 5, 5], 3) == 8
    assert walzer_union_bound([3, 1]) == 5
    for bad in ([4], []):
        with pytest.raises(ParameterError):
            walzer_union_bound(bad)
    with pytest.raises(ParameterError):
        walzer_union_bound([4, 4], 3)


def test_glue_bound():
    assert glue_bound(1, 2.5) == 3.5
    for a, b in [(0, 1), (1, -2)]:
        with pytest.raises(ParameterError):
            glue_bound(a, b)

import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from dissim import (
    NotRealizable,
    PreconditionViolated,
    WrongN,
    check_graph_exact_n,
    check_n4_internal,
    check_tree_exact_n,
    construct_n4_internal,
    construct_repeated_max,
    construct_triangle,
    construct_unique_max,
    family,
    hat_vector,
    hat_vector_brute,
    implied_inequalities,
    realize_graph,
)
from dissim.generate import generate_families

from randomgraphs import equivalent_witnesses, rand_exact_graph, rand_graph_with_internal, rand_sigma, relabel_externals

seeds = st.integers(0, 2**32 - 1)
F = Fraction


def implied_brute(f, k):
    """Every (i, (k+1)-subset avoiding i) pair, enumerated."""
    labels = range(1, f.n + 1)
    for i in labels:
        others = [j for j in labels if j != i]
        for sub in itertools.combinations(others, k + 1):
            if k * f[i] > sum(f[j] for j in sub):
                return False
    return True


def weighted_condition(f):
    return all(5 * f[t] <= 3 * f[k] + 3 * f[j] + 2 * f[i] for t, k, j, i in itertools.permutations(range(1, 5)))


# -- checkers ------------------------------------------------------------


@pytest.mark.parametrize(
    "values, slacks, passed",
    [
        ((5, 5, 4, 3), [2, 2, 5, 8], True),
        ((6, 4, 5, 3), [0, 6, 3, 9], True),
        ((6, 6, 4, 2), [0, 0, 6, 12], False),
        ((5, 5, 6, "41/5"), [F(46, 5), F(46, 5), F(31, 5), F(-2, 5)], False),
    ],
)
def test_check_graph_exact_n(values, slacks, passed):
    v = check_graph_exact_n(family(*values))
    assert v.report.slacks == slacks
    assert v.passed is passed


def test_check_graph_exact_n_names_condition_ii():
    v = check_graph_exact_n(family(6, 6, 4, 2))
    assert v.violations == ["(ii) maximum attained 2 times but slack vanishes at labels [1, 2]"]


def test_implied_inequalities_examples():
    assert implied_inequalities(family(6, 4, 5, 3), 1)
    assert implied_inequalities(family(6, 4, 5, 3), 2)
    assert not implied_inequalities(family(5, 1, 1, 1), 1)
    with pytest.raises(ValueError):
        implied_inequalities(family(1, 1, 1, 1), 3)


def test_check_n4_internal_separation_family():
    f = family(5, 5, 6, "41/5")
    v = check_n4_internal(f)
    assert v.passed
    # binding weighted inequality: 5 * 41/5 = 41 against 3*5 + 3*5 + 2*6 = 42
    assert min(v.report.weighted_slacks.values()) == 1
    assert v.report.weighted_slacks[(4, 1, 2, 3)] == 1
    assert len(v.report.weighted_slacks) == 24
    assert 2 * f[4] > f[1] + f[2] + f[3]


def test_check_n4_internal_other_examples():
    assert check_n4_internal(family(1, 1, 1, 1)).passed
    v = check_n4_internal(family(4, 4, 4, 8))
    assert not v.passed
    assert any(x.startswith("(ii)") for x in v.violations)
    with pytest.raises(WrongN):
        check_n4_internal(family(1, 1, 1, 1, 1))


def test_nonstrict_triangle_witness():
    f = family(1, 1, 2, 2)
    assert weighted_condition(f)
    v = check_n4_internal(f)
    assert not v.passed
    assert all(x.startswith("(ii)") for x in v.violations)
    assert min(v.report.triangle_slacks.values()) == 0


# -- constructions -------------------------------------------------------


def test_triangle():
    r = construct_triangle(family(1, 1, 1))
    assert set(r.graph.edges.values()) == {1}
    r = construct_triangle(family(3, 4, 5))
    assert r.graph.edges == {(1, 2): 5, (1, 3): 4, (2, 3): 3}
    assert hat_vector_brute(r.graph) == family(3, 4, 5)
    with pytest.raises(PreconditionViolated):
        construct_triangle(family(5, 2, 2))


def test_repeated_max_n4():
    r = construct_repeated_max(family(5, 5, 4, 3))
    assert r.graph.edges == {(1, 2): 1, (1, 3): 2, (2, 3): 2, (1, 4): 3, (2, 4): 3}
    assert hat_vector_brute(r.graph) == family(5, 5, 4, 3)


def test_repeated_max_n5():
    r = construct_repeated_max(family(4, 4, 4, 3, 3))
    a, x = F(2, 3), F(5, 3)
    assert r.graph.edges == {(1, 2): a, (1, 3): a, (2, 3): a, (1, 4): x, (3, 4): x, (1, 5): x, (3, 5): x}
    assert hat_vector_brute(r.graph) == family(4, 4, 4, 3, 3)


@pytest.mark.parametrize("n", [4, 5, 6, 7, 8])
def test_repeated_max_all_equal(n):
    # every value maximal: complete graph with edges D / (n - 2)
    f = family([3] * n)
    r = construct_repeated_max(f)
    assert len(r.graph.edges) == n * (n - 1) // 2
    assert set(r.graph.edges.values()) == {F(3, n - 2)}
    assert hat_vector_brute(r.graph) == f


def test_repeated_max_preconditions():
    with pytest.raises(PreconditionViolated):
        construct_repeated_max(family(6, 4, 5, 3))
    with pytest.raises(PreconditionViolated):
        construct_repeated_max(family(6, 6, 4, 2))


def test_unique_max_n4():
    r = construct_unique_max(family(6, 4, 5, 3))
    assert r.graph.edges == {(2, 3): 2, (1, 3): 1, (1, 4): 3, (1, 2): 2}
    assert hat_vector_brute(r.graph) == family(6, 4, 5, 3)


def test_unique_max_n5():
    f = family(10, 7, 8, 9, 9)
    r = construct_unique_max(f)
    top, base = r.induction
    assert top.n == 5 and top.x == 1
    assert sorted(top.reduced) == [6, 7, 8, 9]
    assert top.reduced[0] == 9
    assert base.n == 4 and base.x is None
    pendant = top.order[-1]
    assert r.graph.weight(1, pendant) == 1
    assert all(len(r.graph.neighbors(v)) >= 1 for v in r.graph.vertices)
    assert hat_vector_brute(r.graph) == f


def test_unique_max_preconditions():
    with pytest.raises(PreconditionViolated):
        construct_unique_max(family(5, 5, 4, 3))
    with pytest.raises(PreconditionViolated):
        construct_unique_max(family(7, 2, 2, 2))


@pytest.mark.parametrize(
    "values, h, r",
    [
        ((5, 5, 6, "41/5"), F(9, 10), (F(51, 20), F(51, 20), F(31, 20))),
        ((3, 3, 4, 4), 1, (F(3, 2), F(3, 2), F(1, 2))),
        ((1, 1, 1, 1), F(1, 2), (F(1, 4), F(1, 4), F(1, 4))),
    ],
)
def test_n4_internal(values, h, r):
    f = family(*values)
    res = construct_n4_internal(f)
    g = res.graph
    assert g.vertices == (1, 2, 3, 4, 5, 6, 7)
    assert res.internal_vertices == [5, 6, 7]
    assert [g.weight(4, p) for p in (5, 6, 7)] == [h, h, h]
    hub = {1: 5, 2: 6, 3: 7}
    for i in (1, 2, 3):
        for j in (1, 2, 3):
            if j != i:
                assert g.weight(i, hub[j]) == r[i - 1]
    assert 2 * h >= r[2]
    assert hat_vector_brute(g) == f


def test_n4_internal_formulas():
    h, r1, r2, r3 = F(9, 10), F(51, 20), F(51, 20), F(31, 20)
    assert h + r2 + r3 == 5 and h + r1 + r3 == 5
    assert h + r1 + r2 == 6 and r1 + r2 + 2 * r3 == F(41, 5)


def test_n4_internal_sorts_labels():
    f = family("41/5", 6, 5, 5)
    r = construct_n4_internal(f)
    assert r.permutation == [3, 4, 2, 1]
    assert hat_vector(r.graph) == f


def test_realize_graph_dispatch():
    f = family(5, 5, 6, "41/5")
    with pytest.raises(NotRealizable):
        realize_graph(f, "exact_n")
    assert len(realize_graph(f, "n4_internal").graph.vertices) == 7
    assert realize_graph(family(6, 4, 5, 3)).construction == "unique-max"
    assert len(realize_graph(family(6, 4, 5, 3)).graph.vertices) == 4
    assert realize_graph(family(3, 4, 5)).construction == "triangle"
    assert realize_graph(family(5, 5, 4, 3)).construction == "repeated-max"
    with pytest.raises(WrongN):
        realize_graph(family(1, 1, 1), "n4_internal")


# -- properties ----------------------------------------------------------


@settings(max_examples=80, deadline=None)
@given(seeds)
def test_necessity_exact(seed):
    rng = random.Random(seed)
    g = rand_exact_graph(rng, rng.randint(3, 8))
    assert check_graph_exact_n(hat_vector(g)).passed


@settings(max_examples=80, deadline=None)
@given(seeds)
def test_necessity_n4_internal(seed):
    rng = random.Random(seed)
    g = rand_graph_with_internal(rng, 4, 4)
    assert check_n4_internal(hat_vector(g)).passed


@settings(max_examples=200, deadline=None)
@given(st.lists(st.fractions(min_value=F(1, 10), max_value=100, max_denominator=20), min_size=3, max_size=8))
def test_implied_inequalities_chain(values):
    f = family(values)
    for k in range(1, f.n - 1):
        assert implied_inequalities(f, k) == implied_brute(f, k)
    if all(s >= 0 for s in f.slacks()):
        assert all(implied_inequalities(f, k) for k in range(1, f.n - 1))


@settings(max_examples=200, deadline=None)
@given(st.lists(st.fractions(min_value=F(1, 10), max_value=100, max_denominator=20), min_size=4, max_size=4))
def test_weighted_condition_implies_triangles(values):
    f = family(values)
    if weighted_condition(f):
        for i, j, k in itertools.permutations(range(1, 5), 3):
            assert f[i] <= f[j] + f[k]


@settings(max_examples=60, deadline=None)
@given(seeds, st.integers(5, 8))
def test_recursion_invariant(seed, n):
    f = generate_families(n, "graph-exact", seed=seed % 10_000)[0]
    if f.max_multiplicity != 1:
        return
    r = construct_unique_max(f)
    assert len(r.induction) == n - 3
    for lv in r.induction[:-1]:
        assert lv.x > 0
        assert all(v > 0 for v in lv.reduced)
        assert all(lv.reduced[0] > v for v in lv.reduced[1:])


@settings(max_examples=80, deadline=None)
@given(seeds, st.integers(3, 8))
def test_tree_exact_implies_graph_exact(seed, n):
    f = generate_families(n, "tree-exact", seed=seed % 10_000)[0]
    assert check_tree_exact_n(f).passed
    assert check_graph_exact_n(f).passed


@settings(max_examples=60, deadline=None)
@given(seeds, st.sampled_from(["graph-exact", "graph-n4-internal"]), st.integers(3, 8), st.fractions(min_value=F(1, 20), max_value=20))
def test_permutation_and_scaling(seed, mode, n, lam):
    if mode == "graph-n4-internal":
        n = 4
    rng = random.Random(seed)
    f = generate_families(n, mode, seed=seed % 10_000)[0]
    sigma = rand_sigma(rng, n)
    g = f.permuted(sigma)
    assert check_graph_exact_n(f).passed == check_graph_exact_n(g).passed == check_graph_exact_n(f.scaled(lam)).passed
    if n == 4:
        assert check_n4_internal(f).passed == check_n4_internal(g).passed == check_n4_internal(f.scaled(lam)).passed
    base = realize_graph(f, mode).graph
    moved = realize_graph(g, mode).graph
    assert equivalent_witnesses(base, f, moved, g)
    if len(set(f)) == n:
        assert moved == relabel_externals(base, sigma)
    assert realize_graph(f.scaled(lam), mode).graph == base.scaled(lam)

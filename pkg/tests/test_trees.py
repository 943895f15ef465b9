import itertools
from pathlib import Path

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracle
from cfdense import families, solvers, trees
from cfdense.graph import GraphError, parse_graph
from cfdense.trees import CappedCompositionSpec
from strategies import nonpath_trees

DATA = Path(__file__).resolve().parents[1] / "data"


def twelve_vertex_tree():
    return parse_graph((DATA / "twelve_vertex_tree.txt").read_text())


def test_twelve_vertex_tree_decomposition():
    dec = trees.pendant_decomposition(twelve_vertex_tree())
    assert len(dec.pendant_paths) == 6
    assert dec.R3_2.to_list() == [0, 3]
    assert dec.R3_1.to_list() == [1, 2]
    assert dec.q == 2
    sizes = [sum(dec.path_lengths(g)) for g in dec.groups] + [sum(dec.path_lengths(dec.tail_group))]
    assert sizes == [2, 3, 3]
    assert dec.mandatory_size == 6
    assert dec.p_of[0] == 2 and dec.p_of[1] == 1 and dec.p_of[4] == 0


def test_spider_and_star_decomposition():
    dec = trees.pendant_decomposition(families.spider([2, 2, 2]))
    assert dec.R3_2.to_list() == [0] and dec.q == 1 and len(dec.pendant_paths) == 3
    dec = trees.pendant_decomposition(families.star(5))
    assert dec.R3_2.to_list() == [0]
    assert [p.vertices for p in dec.pendant_paths] == [(1,), (2,), (3,), (4,)]


def test_decomposition_errors():
    with pytest.raises(GraphError) as e:
        trees.pendant_decomposition(families.path(5))
    assert e.value.code == "decomposition_undefined"
    with pytest.raises(GraphError):
        trees.enumerate_m_sets(families.cycle(5))
    with pytest.raises(GraphError) as e:
        trees.tree_zc(families.path(4))
    assert e.value.code == "path_input"


@given(nonpath_trees(max_n=12))
def test_decomposition_invariants(T):
    dec = trees.pendant_decomposition(T)
    on_paths = [v for p in dec.pendant_paths for v in p.vertices]
    assert len(on_paths) == len(set(on_paths))
    assert all(T.degree(p.attachment) >= 3 for p in dec.pendant_paths)
    r1, r2, r3 = set(dec.R1), set(dec.R2), set(dec.R3)
    assert not (r1 & r2 or r1 & r3 or r2 & r3)
    assert r1 | r2 | r3 | set(on_paths) == set(range(T.n))
    assert dec.mandatory_size == len(r2) + len(r3) + sum(len(g) - 1 for g in dec.groups)
    assert dec.q >= 1


def test_m_set_examples():
    T = twelve_vertex_tree()
    expected = [(0, 1, 2, 3, 4, 9), (0, 1, 2, 3, 4, 10), (0, 1, 2, 3, 5, 9), (0, 1, 2, 3, 5, 10)]
    assert [tuple(s) for s in trees.enumerate_m_sets(T)] == expected
    assert [tuple(s) for s in trees.enumerate_m_sets(families.spider([1, 1, 1]))] == [
        (0, 1, 2), (0, 1, 3), (0, 2, 3),
    ]
    assert len(trees.enumerate_m_sets(families.star(4))) == 3


@pytest.mark.parametrize("T, zc", [(twelve_vertex_tree(), 6), (families.star(6), 5), (families.spider([2, 2, 2]), 3)])
def test_tree_zc_examples(T, zc):
    assert trees.tree_zc(T) == zc


@given(nonpath_trees(max_n=10))
@settings(max_examples=60)
def test_m_sets_are_the_minimum_sets(T):
    expected = oracle.minimum_sets(oracle.nx_graph(T), "Zc")
    assert [tuple(s) for s in trees.enumerate_m_sets(T)] == expected
    assert trees.tree_zc(T) == len(expected[0])


def _contains_m_set_everywhere(T):
    dec = trees.pendant_decomposition(T)
    for S in solvers.count_profile(T, closed_form=False).values:
        for s in solvers.connected_forcing_sets(T, S):
            if not trees.contains_m_set(T, s, dec):
                return False
    return True


def test_every_cf_set_contains_m_set_small_trees():
    for n in range(4, 8):
        for seq in itertools.product(range(n), repeat=n - 2):
            T = families.tree_from_pruefer(seq)
            if not T.is_path():
                assert _contains_m_set_everywhere(T), seq


@given(nonpath_trees(min_n=8, max_n=10))
@settings(max_examples=30)
def test_every_cf_set_contains_m_set_random(T):
    assert _contains_m_set_everywhere(T)


def test_cf_dense_tree_examples():
    assert trees.is_cf_dense_tree(families.path(1))
    assert trees.is_cf_dense_tree(families.path(2))
    # P3's center is adjacent to two leaves, yet P3 is not CF-dense
    assert not trees.is_cf_dense_tree(families.path(3))
    assert not oracle.dense(oracle.nx_graph(families.path(3)), "Zc")
    assert not trees.is_cf_dense_tree(families.spider([1, 1, 2]))
    assert trees.is_cf_dense_tree(families.star(5))
    with pytest.raises(GraphError):
        trees.is_cf_dense_tree(families.cycle(4))


@given(st.integers(2, 9).flatmap(lambda n: st.lists(st.integers(0, n - 1), min_size=n - 2, max_size=n - 2)))
@settings(max_examples=100)
def test_cf_dense_rule_matches_oracle(seq):
    T = families.tree_from_pruefer(seq)
    assert trees.is_cf_dense_tree(T) == oracle.dense(oracle.nx_graph(T), "Zc")


def test_composition_examples():
    assert trees.capped_compositions(CappedCompositionSpec(5, (2, 2, 6))) == [
        (1, 1, 3), (1, 2, 2), (2, 1, 2), (2, 2, 1),
    ]
    primed = trees.capped_compositions(CappedCompositionSpec(2, (1, 2, 3), allow_zero=True))
    assert set(primed) == {(1, 1, 0), (0, 2, 0), (1, 0, 1), (0, 1, 1), (0, 0, 2)}
    assert primed == sorted(primed)
    assert trees.capped_compositions(CappedCompositionSpec(0, ())) == [()]
    assert trees.capped_compositions(CappedCompositionSpec(1, ())) == []
    assert trees.s_count(5, (2, 2, 6)) == 4
    assert trees.s_count(2, (1, 1)) == 1


def test_all_but_one_examples():
    assert trees.all_but_one_count(1, (1, 1)) == 2
    assert trees.all_but_one_count(2, (1, 2)) == 2
    assert trees.all_but_one_count(3, (1, 2)) == 1


def test_primed_count_shift_identity_exhaustive():
    for k in range(0, 6):
        for caps in itertools.product(range(1, 7), repeat=k):
            for a in range(13):
                assert trees.s_prime_count(a, caps) == trees.s_count(a + k, [c + 1 for c in caps])


@given(st.integers(0, 10), st.lists(st.integers(1, 5), max_size=4), st.booleans())
def test_composition_count_matches_brute_force(a, caps, allow_zero):
    spec = CappedCompositionSpec(a, tuple(caps), allow_zero)
    listed = trees.capped_compositions(spec)
    assert listed == oracle.compositions_brute(a, caps, 0 if allow_zero else 1)
    assert trees.composition_count(spec) == len(listed)
    assert len(listed) == (oracle.s_prime_count(a, caps) if allow_zero else oracle.s_count(a, caps))


def test_path_count_examples():
    assert trees.path_count(5, 1) == 2
    assert trees.path_count(5, 5) == 1
    assert trees.path_count(6, 4) == 3
    assert trees.path_count(1, 1) == 1
    with pytest.raises(GraphError):
        trees.path_count(5, 6)


@pytest.mark.parametrize("n", range(1, 9))
def test_path_count_matches_oracle(n):
    g = oracle.nx_graph(families.path(n))
    assert [trees.path_count(n, i) for i in range(1, n + 1)] == [oracle.cf_count(g, i) for i in range(1, n + 1)]


def test_spider_count_examples():
    assert trees.spider_count((1, 1, 1), 3) == 3
    assert trees.spider_count((1, 1, 1), 4) == 1
    assert trees.spider_count((2, 2, 2), 3) == 3
    with pytest.raises(GraphError):
        trees.spider_count((1, 1), 2)


@given(st.lists(st.integers(1, 3), min_size=3, max_size=4))
@settings(max_examples=30)
def test_spider_count_matches_oracle(legs):
    g = oracle.nx_graph(families.spider(legs))
    n = 1 + sum(legs)
    assert [trees.spider_count(legs, j) for j in range(1, n + 1)] == [oracle.cf_count(g, j) for j in range(1, n + 1)]


def test_tree_count_worked_example():
    T = twelve_vertex_tree()
    assert trees.tree_count(T, 8) == 24
    assert trees.tree_count(T, 6) == len(trees.enumerate_m_sets(T)) == 4
    assert trees.tree_count(T, 12) == 1
    assert trees.tree_count(T, 5) == 0
    assert [trees.tree_count(T, d) for d in range(1, 13)] == [0, 0, 0, 0, 0, 4, 14, 24, 25, 16, 6, 1]


@given(nonpath_trees(max_n=10))
@settings(max_examples=60)
def test_tree_count_matches_oracle(T):
    g = oracle.nx_graph(T)
    counts = [trees.tree_count(T, d) for d in range(1, T.n + 1)]
    assert counts == [oracle.cf_count(g, d) for d in range(1, T.n + 1)]

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracle
from cfdense import families
from cfdense.forcing import (
    Chronology,
    ForcingError,
    classify_set,
    forcing_chains,
    forcing_closure,
    is_zero_forcing,
    reverse_chronology,
)
from cfdense.graph import GraphError, VertexSet
from strategies import graphs


def test_path_endpoint_forces_everything():
    G = families.path(5)
    blue, chrono = forcing_closure(G, [0])
    assert blue == VertexSet.full(5)
    assert [(f.t, f.forcer, f.forced) for f in chrono.steps] == [(1, 0, 1), (2, 1, 2), (3, 2, 3), (4, 3, 4)]
    assert forcing_chains(chrono) == [[0, 1, 2, 3, 4]]


def test_path_interior_vertex_is_not_forcing():
    assert not is_zero_forcing(families.path(5), [2])


def test_cycle_antipodal_pair_is_not_forcing():
    assert not is_zero_forcing(families.cycle(6), [0, 3])
    assert is_zero_forcing(families.cycle(6), [0, 1])


def test_lowest_index_forcer_wins():
    # in C4 from {0, 1}: 0 forces 3 and 1 forces 2
    _, chrono = forcing_closure(families.cycle(4), [0, 1])
    assert chrono.forcer_of() == {3: 0, 2: 1}
    # in K3 from {0, 1} both blue vertices could force 2
    G = families.complete(3)
    _, chrono = forcing_closure(G, [0, 1])
    assert chrono.forcer_of() == {2: 0}


def test_classify_set_on_star():
    S = families.star(5)
    c = classify_set(S, [0, 1, 2, 3])
    assert c.is_zero_forcing and c.is_connected_forcing and c.is_total_forcing
    c = classify_set(S, [1, 2, 3])
    assert c.is_zero_forcing and not c.induces_connected and not c.is_total_forcing
    assert c.closure == VertexSet.full(5)


def test_vertex_out_of_range():
    with pytest.raises(GraphError):
        is_zero_forcing(families.path(3), [3])


@given(graphs(max_n=8), st.data())
def test_closure_matches_oracle(G, data):
    S = data.draw(st.sets(st.integers(0, G.n - 1)))
    blue, chrono = forcing_closure(G, S)
    g = oracle.nx_graph(G)
    assert set(blue) == oracle.closure(g, S)
    assert oracle.chronology_is_valid(g, S, [(f.t, f.forcer, f.forced) for f in chrono.steps])
    assert chrono.replay(G) == blue
    c = classify_set(G, S)
    assert c.is_total_forcing == oracle.qualifies(g, S, "Zt")
    assert c.is_connected_forcing == oracle.qualifies(g, S, "Zc")


@given(graphs(max_n=8), st.data())
def test_closure_is_extensive_monotone_idempotent(G, data):
    S = data.draw(st.sets(st.integers(0, G.n - 1)))
    T = S | data.draw(st.sets(st.integers(0, G.n - 1)))
    cS, _ = forcing_closure(G, S)
    cT, _ = forcing_closure(G, T)
    assert G.vertex_set(S) <= cS
    assert cS <= cT
    assert forcing_closure(G, cS)[0] == cS


@given(graphs(min_n=1, max_n=8), st.data())
def test_chains_partition_the_closure(G, data):
    S = data.draw(st.sets(st.integers(0, G.n - 1)))
    blue, chrono = forcing_closure(G, S)
    chains = forcing_chains(chrono)
    flat = [v for c in chains for v in c]
    assert sorted(flat) == blue.to_list()
    assert len(chains) == len(S)


@given(graphs(max_n=7), st.data())
def test_jsonl_roundtrip(G, data):
    S = data.draw(st.sets(st.integers(0, G.n - 1)))
    _, chrono = forcing_closure(G, S)
    assert Chronology.from_jsonl(chrono.to_jsonl(), chrono.initial) == chrono


def test_replay_rejects_bad_force():
    G = families.path(4)
    bad = Chronology.from_jsonl('{"t": 1, "forcer": 1, "forced": 2}\n', VertexSet.of([1], 4))
    with pytest.raises(ForcingError):
        bad.replay(G)
    white = Chronology.from_jsonl('{"t": 1, "forcer": 3, "forced": 2}\n', VertexSet.of([0], 4))
    with pytest.raises(ForcingError):
        white.replay(G)


def test_reversal_examples():
    assert reverse_chronology(families.path(5), [0]).to_list() == [4]
    assert reverse_chronology(families.cycle(4), [0, 1]).to_list() == [2, 3]
    with pytest.raises(ForcingError):
        reverse_chronology(families.path(5), [2])


@given(graphs(min_n=1, max_n=8), st.data())
@settings(max_examples=60)
def test_reversal_is_zero_forcing_of_same_size(G, data):
    S = data.draw(st.sets(st.integers(0, G.n - 1), min_size=1))
    if not oracle.is_zf(oracle.nx_graph(G), S):
        return
    R = reverse_chronology(G, S)
    assert len(R) == len(S)
    assert oracle.is_zf(oracle.nx_graph(G), set(R))

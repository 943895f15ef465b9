"""Acceptance criteria 1-13.

Each test is tagged with its criterion number; conftest prints one
PASS/FAIL line per criterion in the terminal summary. A criterion whose
statement has a counterexample is reported as FAIL while the test itself
asserts the exact set of counterexamples, so an unexpected change in either
direction still breaks the run.
"""

import random
import time
from pathlib import Path

import networkx as nx
import pytest

import oracle
from cfdense import families as F
from cfdense import kernels, solvers, trees, verify
from cfdense.graph import Graph, parse_graph
from cfdense.operations import cartesian_product, corona, join
from cfdense.predictions import EXACT, NA, check_density_preservation

DATA = Path(__file__).resolve().parents[1] / "data"
SEED = 0


def warm_up():
    # load the compiled kernels so timings measure the work, not the cache load
    G = F.cycle(5)
    solvers.count_profile(G)
    for v in ("Z", "Zt", "Zc"):
        solvers.forcing_number(G, v)
    solvers.count_cf_sets(G, 2)
    trees.is_cf_dense_tree(F.star(4))
    kernels.sweep_prufer_trees(4)
    kernels.sweep_labeled_graphs(3)


def report(record_property, detail, status="PASS"):
    record_property("status", status)
    record_property("detail", detail)


def timed(fn, *args):
    start = time.perf_counter()
    out = fn(*args)
    return out, time.perf_counter() - start


# --- corpora shared with criterion 13 ------------------------------------------

def family_graphs():
    return [G for _, G, _, _ in verify.family_value_table()] + [G for _, G, _ in verify.family_density_table()]


def literal_multipartite_rows():
    """Every non-star complete multipartite graph on at most 9 vertices,
    including the all-singleton part lists."""
    return [(parts, F.complete_multipartite(parts)) for parts in verify._nonstar_multipartite(9)]


def all_tree_shapes(max_n=9):
    """One tree per isomorphism class; every labeled tree is a copy of one."""
    out = []
    for n in range(1, max_n + 1):
        for t in nx.nonisomorphic_trees(n) if n > 1 else [nx.empty_graph(1)]:
            out.append(Graph(n, tuple(tuple(sorted(e)) for e in t.edges)))
    return out


def random_connected_8():
    rng = random.Random(SEED)
    return [verify.random_connected(8, rng) for _ in range(200)]


def corona_products():
    gs, hs = verify.corona_pool(4)
    return gs, hs, [(G, H) for G in gs for H in hs]


def grid_pairs():
    return [(F.path(r), F.path(s)) for r in range(2, 6) for s in range(r, 6)]


# --- criteria -------------------------------------------------------------------

@pytest.mark.criterion(1)
def test_criterion_01_worked_example(record_property):
    warm_up()
    T = parse_graph((DATA / "twelve_vertex_tree.txt").read_text())

    def run():
        return trees.tree_count(T, 8), solvers.count_cf_sets(T, 8), solvers.connected_forcing_sets(T, 8)

    (closed, brute, sets), secs = timed(run)
    assert T.n == 12 and closed == 24 and brute == 24
    assert len({s.mask for s in sets}) == 24
    g = oracle.nx_graph(T)
    assert all(len(s) == 8 and oracle.qualifies(g, tuple(s), "Zc") for s in sets)
    assert oracle.cf_count(g, 8) == 24
    assert secs < 1.0
    report(record_property, f"tree_count = count_cf_sets = 24 distinct CF sets of size 8 ({secs * 1000:.0f} ms)")


@pytest.mark.criterion(2)
def test_criterion_02_path_formula(record_property):
    warm_up()
    res, secs = timed(verify.suite_paths, verify.VerifyConfig(max_n=12))
    assert res.passed, [r for r in res.instances if not r["pass"]]
    assert len(res.instances) == sum(range(2, 13))
    for n in range(2, 10):
        g = oracle.nx_graph(F.path(n))
        assert [trees.path_count(n, i) for i in range(1, n + 1)] == [oracle.cf_count(g, i) for i in range(1, n + 1)]
    assert secs < 5.0
    report(record_property, f"{len(res.instances)} (n, i) pairs, n <= 12 ({secs * 1000:.0f} ms)")


@pytest.mark.criterion(3)
def test_criterion_03_family_values(record_property):
    warm_up()
    rows = verify.family_value_table()
    necklace_secs = 0.0
    for label, G, variant, value in rows:
        res, secs = timed(solvers.forcing_number, G, variant)
        if label.startswith("N"):
            necklace_secs += secs
        assert res.value == value, (label, variant)
    assert necklace_secs < 120.0
    assert {label for label, *_ in rows} >= {"N4", "Q4", "W8", "K8"}
    # the statement read over every non-star complete multipartite graph
    mismatches = []
    for parts, G in literal_multipartite_rows():
        zc = solvers.forcing_number(G, "Zc").value
        if zc != G.n - 2:
            mismatches.append((parts, zc))
    singletons = [(parts, zc) for parts, zc in mismatches if max(parts) == 1]
    assert mismatches == singletons
    assert [p for p, _ in singletons] == [(1,) * n for n in range(3, 10)]
    assert all(zc == len(p) - 1 for p, zc in singletons)
    checked = len(literal_multipartite_rows())
    report(
        record_property,
        f"K_n, W_n, Q_k, N_k values and {checked - len(singletons)} multipartite graphs with a part of size >= 2 "
        f"match (necklaces {necklace_secs * 1000:.0f} ms); the {len(singletons)} all-singleton part lists "
        f"(1,...,1) for n = 3..9 are K_n with Zc = n-1, not n-2",
        status="FAIL (as stated)",
    )


@pytest.mark.criterion(4)
def test_criterion_04_density_table(record_property):
    warm_up()
    rows = verify.family_density_table()
    start = time.perf_counter()
    for label, G, expect in rows:
        for variant, dense in expect.items():
            assert solvers.density(G, variant).dense == dense, (label, variant)
    secs = time.perf_counter() - start
    assert secs < 60.0
    assert not solvers.density(F.star(3), "CF").dense
    n_checks = sum(len(e) for _, _, e in rows)
    report(record_property, f"{len(rows)} graphs, {n_checks} density decisions ({secs * 1000:.0f} ms)")


@pytest.mark.criterion(5)
def test_criterion_05_cf_dense_trees(record_property):
    warm_up()
    res, secs = timed(verify.suite_trees_cf_dense, verify.VerifyConfig(max_n=9))
    assert res.passed, res.aggregates
    total = sum(a["checked"] for a in res.aggregates)
    assert total == 1 + sum(n ** (n - 2) for n in range(2, 10))
    assert any("P3" in note for note in res.notes)
    # independent check of the rule on one tree per shape
    for T in all_tree_shapes(8):
        assert trees.is_cf_dense_tree(T) == oracle.dense(oracle.nx_graph(T), "Zc")
    assert secs < 600.0
    report(
        record_property,
        f"{total} labeled trees, n <= 9, rule = exhaustive density; paths P_n (n >= 3) follow the search "
        f"although the literal strong-support condition holds for P3 ({secs:.1f} s)",
    )


@pytest.mark.criterion(6)
def test_criterion_06_tree_counting(record_property):
    warm_up()
    res = verify.suite_tree_counts(verify.VerifyConfig(max_n=14, seed=SEED, samples=200))
    assert res.passed, [r for r in res.instances if not r["pass"]][:5]
    sizes = [T.n for T in verify.random_tree_corpus(SEED, 200, 14)]
    assert len(sizes) == 200 and min(sizes) >= 5 and max(sizes) <= 14
    report(record_property, f"200 random trees, 5 <= n <= 14, {len(res.instances)} checks")


def _sweep_totals(max_n, stat):
    connected = checked = failures = 0
    for n in range(1, max_n + 1):
        stats, _ = verify.labeled_sweep(n)
        connected += stats[kernels.STAT_CONNECTED]
        checked += stats[kernels.STAT_CHAIN_CHECKED]
        failures += stats[stat]
    return connected, checked, failures


@pytest.mark.criterion(7)
def test_criterion_07_uniqueness(record_property):
    warm_up()
    res = verify.suite_uniqueness(verify.VerifyConfig(max_n=7, seed=SEED, samples=200))
    assert res.passed
    connected, _, failures = _sweep_totals(7, kernels.STAT_UNIQUENESS)
    assert failures == 0
    # labeled connected graphs on 1..7 vertices (OEIS A001187)
    assert connected == 1 + 1 + 4 + 38 + 728 + 26704 + 1866256
    for G in random_connected_8()[:20]:
        sizes = solvers.uniqueness_scan(G)
        g = oracle.nx_graph(G)
        assert sizes == [i for i in range(1, 9) if oracle.cf_count(g, i) == 1]
    report(record_property, f"{connected} connected labeled graphs (n <= 7) and 200 random graphs (n = 8)")


@pytest.mark.criterion(8)
def test_criterion_08_extremal(record_property):
    warm_up()
    res = verify.suite_extremal(verify.VerifyConfig(max_n=7, seed=SEED, samples=200))
    assert res.passed
    connected, _, _ = _sweep_totals(7, kernels.STAT_EXTREMAL_1)
    for k in (kernels.STAT_EXTREMAL_1, kernels.STAT_EXTREMAL_NM2, kernels.STAT_EXTREMAL_NM1, kernels.STAT_EXTREMAL_N):
        assert _sweep_totals(7, k)[2] == 0
    for G in random_connected_8()[:20]:
        g = oracle.nx_graph(G)
        assert solvers.extremal_cf_counts(G).by_size() == {i: oracle.cf_count(g, i) for i in (1, 6, 7, 8)}
    report(record_property, f"sizes 1, n-2, n-1, n on {connected} + 200 graphs")


@pytest.mark.criterion(9)
def test_criterion_09_join(record_property):
    warm_up()
    pairs = verify.join_pairs(SEED, 100, 6)
    mismatches = []
    for j, (G, H) in enumerate(pairs):
        assert G.is_connected() or not G.has_isolated_vertex()
        assert H.is_connected() or not H.has_isolated_vertex()
        zg, zh = solvers.forcing_number(G, "Z").value, solvers.forcing_number(H, "Z").value
        formula = min(zg + H.n, zh + G.n)
        J = join(G, H)
        computed = {v: solvers.forcing_number(J, v).value for v in ("Z", "Zt", "Zc")}
        if J.n <= 9:
            g = oracle.nx_graph(J)
            assert computed == {v: oracle.forcing_number(g, v) for v in computed}
        bad = sorted(v for v, x in computed.items() if x != formula)
        if bad:
            mismatches.append((j, G.n, H.n, bad, computed))
        # the predictor itself never disagrees with the solver
        pred = check_density_preservation(G, H, "join", verify=True)
        assert pred.verified["consistent"]
    k1k1 = [m for m in mismatches if m[1] == m[2] == 1]
    assert mismatches == k1k1
    assert all(m[3] == ["Z", "Zc"] and m[4] == {"Z": 1, "Zt": 2, "Zc": 1} for m in k1k1)
    if not k1k1:
        report(record_property, "100 random pairs, all three values match the min-formula")
        return
    report(
        record_property,
        f"{100 - len(k1k1)}/100 pairs match for Z, Zt, Zc; the {len(k1k1)} draws with G = H = K1 give "
        f"K2 with Z = Zc = 1 while the min-formula gives 2 (Zt = 2 matches); "
        f"the predictor requires n(G) + n(H) >= 3 for Z and Zc",
        status="FAIL (as stated)",
    )


@pytest.mark.criterion(10)
def test_criterion_10_corona(record_property):
    warm_up()
    gs, hs, pairs = corona_products()
    split = {"equal": 0, "greater": 0}
    for H in hs:
        z, zt = solvers.forcing_number(H, "Z").value, solvers.forcing_number(H, "Zt").value
        split["equal" if zt == z else "greater"] += 1
    assert split["equal"] and split["greater"]
    for G, H in pairs:
        pred = check_density_preservation(G, H, "corona", verify=True)
        assert all(pred.predicted[v].kind == EXACT for v in ("Z", "Zt", "Zc"))
        assert all(e["consistent"] for e in pred.verified["values"].values()), pred.to_dict()
        assert pred.verified["consistent"]
    for G, H in pairs[:10]:
        g = oracle.nx_graph(corona(G, H))
        pred = check_density_preservation(G, H, "corona")
        assert {v: p.value for v, p in pred.predicted.items()} == {
            v: oracle.forcing_number(g, v) for v in ("Z", "Zt", "Zc")
        }
    report(
        record_property,
        f"{len(gs)} x {len(hs)} pool pairs (H with Zt = Z: {split['equal']}, Zt > Z: {split['greater']})",
    )


@pytest.mark.criterion(11)
def test_criterion_11_cartesian(record_property):
    warm_up()
    for G, H in grid_pairs():
        grid = cartesian_product(G, H)
        assert solvers.forcing_number(grid, "Zc").value == min(G.n, H.n)
    g = oracle.nx_graph(cartesian_product(F.path(3), F.path(3)))
    assert oracle.forcing_number(g, "Zc") == 3
    pairs = verify.cartesian_pairs(SEED, 50)
    applied = 0
    for G, H in pairs:
        pred = check_density_preservation(G, H, "cartesian", verify=True)
        assert pred.verified["consistent"], pred.to_dict()
        applied += sum(p.kind != NA for p in pred.predicted.values())
    report(record_property, f"Zc(P_r x P_s) = min(r, s) for 2 <= r <= s <= 5; {applied} bounds on 50 pairs hold")


@pytest.mark.criterion(12)
def test_criterion_12_reversal(record_property):
    warm_up()
    res = verify.suite_reversal(verify.VerifyConfig(max_n=7))
    assert res.passed
    total = 0
    for n in range(2, 8):
        stats, _ = verify.labeled_sweep(n)
        assert stats[kernels.STAT_REVERSAL] == 0 and stats[kernels.STAT_FEW_MIN_ZF] == 0
        total += stats[kernels.STAT_CONNECTED]
    report(record_property, f"{total} connected labeled graphs, 2 <= n <= 7")


@pytest.mark.criterion(13)
def test_criterion_13_min_degree_chain(record_property):
    warm_up()
    corpus = family_graphs()
    corpus += [G for _, G in literal_multipartite_rows()]
    corpus += all_tree_shapes(9)
    corpus += verify.random_tree_corpus(SEED, 200, 14)
    corpus += random_connected_8()
    for G, H in verify.join_pairs(SEED, 100, 6):
        corpus += [G, H, join(G, H)]
    gs, hs, pairs = corona_products()
    corpus += gs + hs + [corona(G, H) for G, H in pairs]
    for G, H in grid_pairs() + verify.cartesian_pairs(SEED, 50):
        corpus += [G, H, cartesian_product(G, H)]
    seen, checked = set(), 0
    for G in corpus:
        key = (G.n, G.edges)
        if key in seen or not G.is_connected() or G.is_path():
            continue
        seen.add(key)
        ok, values = verify.chain_holds(G)
        assert ok, (G.n, G.edges, values)
        checked += 1
    # criteria 7, 8 and 12 cover every connected labeled graph on <= 7 vertices
    _, sweep_checked, failures = _sweep_totals(7, kernels.STAT_CHAIN)
    assert failures == 0
    report(
        record_property,
        f"{checked} distinct graphs from criteria 3-11 plus {sweep_checked} non-path graphs from the n <= 7 sweep",
    )

import random

import pytest

from wordhom import (
    Clustering,
    WeightedGraph,
    markov_clusters,
    modularity,
    persistence_clusters,
    sweep,
    threshold_clusters,
)


def random_weighted_graph(rng, n_min=5, n_max=14, p_edge=0.5):
    n = rng.randint(n_min, n_max)
    edges = {}
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < p_edge:
                edges[(i, j)] = round(rng.uniform(0.05, 1.0), 3)
    if not edges:
        edges[(0, 1)] = 0.5
    return WeightedGraph(n, edges)


def two_cliques(bridge=0.05):
    edges = {}
    for base in (0, 5):
        for i in range(5):
            for j in range(i + 1, 5):
                edges[(base + i, base + j)] = 1.0
    edges[(4, 5)] = bridge
    return WeightedGraph(10, edges)


def test_threshold_extremes():
    g = random_weighted_graph(random.Random(0))
    all_below_one = all(w < 1.0 for _, _, w in g.edges())
    if all_below_one:
        assert threshold_clusters(g, 0.0).n_clusters == g.n
    # eps = 1 keeps every edge
    full = threshold_clusters(g, 1.0)
    from wordhom import UnionFind

    uf = UnionFind(g.n)
    for i, j, _ in g.edges():
        uf.union(i, j)
    assert full.n_clusters == uf.n_components


def test_threshold_cat_dog_scales():
    g = WeightedGraph(2, {(0, 1): 0.4})
    assert threshold_clusters(g, 0.7).n_clusters == 1
    assert threshold_clusters(g, 0.5).n_clusters == 2


def test_threshold_monotone_coarsening():
    rng = random.Random(1)
    for _ in range(10):
        g = random_weighted_graph(rng)
        grid = sorted(rng.uniform(0, 1) for _ in range(8))
        parts = [threshold_clusters(g, e) for e in grid]
        for small, large in zip(parts, parts[1:]):
            mapping = {}
            for v in range(g.n):
                key = small.labels[v]
                if key in mapping:
                    assert mapping[key] == large.labels[v]
                else:
                    mapping[key] = large.labels[v]


def test_persistence_path_with_tau_zero():
    # chain a-b-c-d whose later edges outlive both endpoints' births:
    # only the two birth-edge pairs merge
    g = WeightedGraph(4, {(0, 1): 0.8, (1, 2): 0.5, (2, 3): 0.7})
    c = persistence_clusters(g, 0.0)
    assert c.labels[0] == c.labels[1]
    assert c.labels[2] == c.labels[3]
    assert c.n_clusters == 2


def test_persistence_two_tight_pairs_with_bridge():
    g = WeightedGraph(4, {(0, 1): 0.9, (2, 3): 0.9, (1, 2): 0.1})
    c = persistence_clusters(g, 0.3)
    assert c.n_clusters == 2
    assert c.labels[0] == c.labels[1] and c.labels[2] == c.labels[3]


def test_persistence_large_tau_equals_full_threshold():
    rng = random.Random(2)
    for _ in range(10):
        g = random_weighted_graph(rng)
        assert persistence_clusters(g, 2.0) == threshold_clusters(g, 1.0)


def test_persistence_zero_birth_mode_degenerates_to_threshold():
    rng = random.Random(3)
    for _ in range(10):
        g = random_weighted_graph(rng)
        for tau in (0.1, 0.4, 0.8):
            assert persistence_clusters(g, tau, vertex_birth="zero") == threshold_clusters(g, tau)


def test_persistence_rejects_negative_tau():
    with pytest.raises(ValueError):
        persistence_clusters(two_cliques(), -0.1)


def test_mcl_two_cliques():
    g = two_cliques()
    for inflation in (1.5, 2.0, 2.5, 3.0):
        result = markov_clusters(g, inflation)
        assert result.converged
        assert result.clustering.n_clusters == 2
        assert result.clustering.labels[:5] == (0,) * 5
        assert result.clustering.labels[5:] == (1,) * 5


def test_mcl_single_edge():
    for inflation in (1.3, 2.0, 4.0, 6.0):
        result = markov_clusters(WeightedGraph(2, {(0, 1): 0.7}), inflation)
        assert result.clustering.n_clusters == 1


def test_mcl_scale_invariance():
    rng = random.Random(4)
    for _ in range(5):
        g = random_weighted_graph(rng)
        base = markov_clusters(g, 2.0).clustering
        for factor in (0.1, 0.5):
            assert markov_clusters(g.scaled(factor), 2.0).clustering == base


def test_mcl_non_convergence_flag():
    result = markov_clusters(two_cliques(), 2.0, max_iter=1)
    assert not result.converged
    assert result.n_iter == 1
    assert len(result.clustering) == 10


def test_mcl_parameter_validation():
    g = two_cliques()
    with pytest.raises(ValueError):
        markov_clusters(g, 1.0)
    with pytest.raises(ValueError):
        markov_clusters(g, 2.0, expansion=1)


def test_modularity_one_cluster_is_zero():
    rng = random.Random(5)
    for _ in range(10):
        g = random_weighted_graph(rng)
        q = modularity(g, Clustering([0] * g.n))
        assert abs(q) < 1e-12


def test_modularity_single_edge_one_cluster():
    g = WeightedGraph(2, {(0, 1): 1.0})
    assert abs(modularity(g, Clustering([0, 0]))) < 1e-12


def test_modularity_two_disjoint_edges():
    g = WeightedGraph(4, {(0, 1): 1.0, (2, 3): 1.0})
    q = modularity(g, Clustering([0, 0, 1, 1]))
    assert abs(q - 0.5) < 1e-12


def test_modularity_singletons_closed_form():
    rng = random.Random(6)
    for _ in range(10):
        g = random_weighted_graph(rng)
        q = modularity(g, Clustering(list(range(g.n))))
        m = 2.0 * g.total_weight()
        expected = -sum(float(k) ** 2 for k in g.degrees()) / m**2
        assert abs(q - expected) < 1e-12


def test_modularity_relabeling_invariance():
    rng = random.Random(7)
    g = random_weighted_graph(rng)
    labels = [rng.randint(0, 3) for _ in range(g.n)]
    permuted = [(5 - l) for l in labels]
    assert modularity(g, Clustering(labels)) == pytest.approx(
        modularity(g, Clustering(permuted)), abs=1e-15
    )


def test_modularity_bounds_randomized():
    rng = random.Random(8)
    g = random_weighted_graph(rng, n_min=10, n_max=10)
    for _ in range(2000):
        labels = [rng.randint(0, 4) for _ in range(g.n)]
        q = modularity(g, Clustering(labels))
        assert -1.0 - 1e-12 <= q <= 1.0 + 1e-12


def test_modularity_rejects_edgeless():
    g = WeightedGraph(3, {})
    with pytest.raises(ValueError, match="no edges"):
        modularity(g, Clustering([0, 1, 2]))


def test_modularity_rejects_short_labels():
    g = two_cliques()
    with pytest.raises(ValueError, match="covers"):
        modularity(g, Clustering([0, 1]))


def test_clustering_labels_densified():
    c = Clustering([7, 7, 3, 9, 3])
    assert c.labels == (0, 0, 1, 2, 1)
    assert c.n_clusters == 3
    assert c.members(1) == (2, 4)
    assert c.sizes() == (2, 2, 1)


def test_sweep_singleton_grid_matches_direct_call():
    g = two_cliques()
    result = sweep(g, "threshold", [0.5])
    assert len(result.rows) == 1
    direct = threshold_clusters(g, 0.5)
    assert result.rows[0].q == modularity(g, direct)
    assert result.rows[0].n_clusters == direct.n_clusters
    assert result.best == result.rows[0]


def test_sweep_argmax_prefers_earliest_tie():
    g = two_cliques()
    result = sweep(g, "threshold", [0.5, 0.5, 0.5])
    assert result.best is result.rows[0]


def test_sweep_methods_and_validation():
    g = two_cliques()
    with pytest.raises(ValueError, match="non-empty"):
        sweep(g, "threshold", [])
    with pytest.raises(ValueError, match="unknown method"):
        sweep(g, "louvain", [0.5])
    mcl_rows = sweep(g, "mcl", [1.5, 2.0]).rows
    assert [r.param for r in mcl_rows] == [1.5, 2.0]
    assert all(r.n_clusters == 2 for r in mcl_rows)


def test_sweep_parallel_matches_sequential():
    g = two_cliques()
    grid = [0.1, 0.5, 0.9, 0.95, 1.0]
    seq = sweep(g, "threshold", grid)
    par = sweep(g, "threshold", grid, jobs=2)
    assert seq.rows == par.rows

"""Graph clustering by similarity threshold, merge persistence, or
Markov flow, scored with weighted modularity."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

import numpy as np
from scipy import sparse


class WeightedGraph:
    """Symmetric positive edge weights in (0, 1] on unordered pairs."""

    __slots__ = ("n", "_edges")

    def __init__(self, n: int, edges: Mapping[tuple[int, int], float]):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        checked = {}
        for (i, j), w in edges.items():
            if not (0 <= i < j < n):
                raise ValueError(f"edge ({i}, {j}) is not an ordered pair within range({n})")
            w = float(w)
            if not 0.0 < w <= 1.0:
                raise ValueError(f"weight {w} of edge ({i}, {j}) outside (0, 1]")
            checked[(i, j)] = w
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "_edges", checked)

    def __setattr__(self, name, value):
        raise AttributeError("WeightedGraph is immutable")

    def __getstate__(self):
        return (self.n, self._edges)

    def __setstate__(self, state):
        object.__setattr__(self, "n", state[0])
        object.__setattr__(self, "_edges", state[1])

    @property
    def n_edges(self) -> int:
        return len(self._edges)

    def edges(self) -> list[tuple[int, int, float]]:
        """Edges as (i, j, w), sorted by vertex pair."""
        return [(i, j, w) for (i, j), w in sorted(self._edges.items())]

    def degrees(self) -> np.ndarray:
        k = np.zeros(self.n, dtype=np.float64)
        for (i, j), w in self._edges.items():
            k[i] += w
            k[j] += w
        return k

    def total_weight(self) -> float:
        return float(sum(self._edges.values()))

    def dissimilarity_events(self) -> tuple[float, ...]:
        """Sorted distinct values of 1 - weight."""
        return tuple(sorted({1.0 - w for w in self._edges.values()}))

    def scaled(self, factor: float) -> "WeightedGraph":
        return WeightedGraph(self.n, {e: w * factor for e, w in self._edges.items()})

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, WeightedGraph)
            and other.n == self.n
            and other._edges == self._edges
        )

    def __repr__(self) -> str:
        return f"WeightedGraph(n={self.n}, edges={self.n_edges})"


class UnionFind:
    """Disjoint sets with path compression and union by size."""

    def __init__(self, n: int):
        self.parent = list(range(n))
        self.size = [1] * n
        self.n_components = n

    def find(self, v: int) -> int:
        root = v
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[v] != root:
            self.parent[v], v = root, self.parent[v]
        return root

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if self.size[ra] < self.size[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.size[ra] += self.size[rb]
        self.n_components -= 1
        return True

    def labels(self) -> list[int]:
        """Dense component labels in order of first appearance."""
        out = []
        seen: dict[int, int] = {}
        for v in range(len(self.parent)):
            root = self.find(v)
            if root not in seen:
                seen[root] = len(seen)
            out.append(seen[root])
        return out


class Clustering:
    """A partition of vertex ids into disjoint labeled groups.

    Labels are densified to 0..n_clusters-1 in order of first
    appearance, so structurally equal partitions compare equal.
    """

    __slots__ = ("labels", "n_clusters")

    def __init__(self, labels: Sequence[int]):
        dense: dict[int, int] = {}
        out = []
        for raw in labels:
            if raw not in dense:
                dense[raw] = len(dense)
            out.append(dense[raw])
        object.__setattr__(self, "labels", tuple(out))
        object.__setattr__(self, "n_clusters", len(dense))

    def __setattr__(self, name, value):
        raise AttributeError("Clustering is immutable")

    def __getstate__(self):
        return self.labels

    def __setstate__(self, state):
        object.__setattr__(self, "labels", tuple(state))
        object.__setattr__(self, "n_clusters", len(set(state)))

    def members(self, cluster: int) -> tuple[int, ...]:
        return tuple(v for v, c in enumerate(self.labels) if c == cluster)

    def sizes(self) -> tuple[int, ...]:
        counts = [0] * self.n_clusters
        for c in self.labels:
            counts[c] += 1
        return tuple(counts)

    def __len__(self) -> int:
        return len(self.labels)

    def __eq__(self, other) -> bool:
        return isinstance(other, Clustering) and other.labels == self.labels

    def __repr__(self) -> str:
        return f"Clustering({len(self.labels)} vertices, {self.n_clusters} clusters)"


def threshold_clusters(graph: WeightedGraph, eps: float) -> Clustering:
    """Connected components of the subgraph whose edges have
    dissimilarity 1 - w at most eps."""
    if not 0.0 <= eps <= 1.0:
        raise ValueError("eps must lie in [0, 1]")
    uf = UnionFind(graph.n)
    for i, j, w in graph.edges():
        if 1.0 - w <= eps:
            uf.union(i, j)
    return Clustering(uf.labels())


def persistence_clusters(
    graph: WeightedGraph,
    tau: float,
    vertex_birth: str = "first-edge",
) -> Clustering:
    """Single-linkage merging that only accepts short-lived components.

    Edges are processed in increasing dissimilarity. Each vertex is
    born at its minimum incident dissimilarity (or at 0 under the
    ``zero`` mode, which makes the method collapse to plain
    thresholding at eps = tau). When an edge joins two components, the
    younger one (the larger birth) is merged in only if its lifetime so
    far, edge dissimilarity minus its birth, is at most tau. Rejected
    pairs stay separate: any later edge between them is at least as
    dissimilar while component births only decrease, so the lifetime
    test can never pass afterwards.
    """
    if tau < 0:
        raise ValueError("tau must be >= 0")
    if vertex_birth not in ("zero", "first-edge"):
        raise ValueError(f"unknown vertex birth mode {vertex_birth!r}")

    edges = sorted((1.0 - w, i, j) for i, j, w in graph.edges())
    births = [0.0] * graph.n
    if vertex_birth == "first-edge":
        first: dict[int, float] = {}
        for d, i, j in edges:
            first.setdefault(i, d)
            first.setdefault(j, d)
        for v, d in first.items():
            births[v] = d

    uf = UnionFind(graph.n)
    root_birth = dict(enumerate(births))
    for d, i, j in edges:
        ra, rb = uf.find(i), uf.find(j)
        if ra == rb:
            continue
        # younger component: larger birth, ties to the later root id
        if (root_birth[ra], ra) < (root_birth[rb], rb):
            elder, younger = ra, rb
        else:
            elder, younger = rb, ra
        if d - root_birth[younger] <= tau:
            uf.union(elder, younger)
            root_birth[uf.find(elder)] = root_birth[elder]
    return Clustering(uf.labels())


@dataclass(frozen=True)
class MarkovResult:
    clustering: Clustering
    converged: bool
    n_iter: int


def _normalize_columns(m: sparse.csc_matrix) -> sparse.csc_matrix:
    sums = np.asarray(m.sum(axis=0)).ravel()
    empty = np.nonzero(sums == 0)[0]
    if empty.size:
        fix = sparse.csc_matrix(
            (np.ones(empty.size), (empty, empty)), shape=m.shape, dtype=np.float64
        )
        m = (m + fix).tocsc()
        sums = np.asarray(m.sum(axis=0)).ravel()
    scale = sparse.diags(1.0 / sums)
    return (m @ scale).tocsc()


def markov_clusters(
    graph: WeightedGraph,
    inflation: float,
    expansion: int = 2,
    prune: float = 1e-5,
    max_iter: int = 200,
    tol: float = 1e-8,
    self_loop: float = 1.0,
) -> MarkovResult:
    """Markov flow clustering: alternate matrix powers (long walks)
    with entrywise powers (short walks) until the support decomposes.

    Weights are rescaled so the largest equals 1 before self-loops of
    weight ``self_loop`` are added; partitions are therefore invariant
    under uniform scaling of the input weights. Each round raises the
    column-stochastic matrix to the ``expansion`` power, takes
    entrywise ``inflation`` powers with column renormalization, then
    drops entries below ``prune`` and renormalizes again. Iteration
    stops when the largest entry change falls below ``tol``; hitting
    ``max_iter`` first is reported via ``converged=False``.
    """
    if inflation <= 1:
        raise ValueError("inflation must be > 1")
    if expansion < 2:
        raise ValueError("expansion must be >= 2")
    n = graph.n
    if n == 0:
        return MarkovResult(Clustering([]), True, 0)

    rows, cols, data = [], [], []
    edges = graph.edges()
    wmax = max((w for _, _, w in edges), default=1.0)
    for i, j, w in edges:
        rows.extend((i, j))
        cols.extend((j, i))
        data.extend((w / wmax, w / wmax))
    for v in range(n):
        rows.append(v)
        cols.append(v)
        data.append(float(self_loop))
    m = sparse.csc_matrix((data, (rows, cols)), shape=(n, n), dtype=np.float64)
    m = _normalize_columns(m)

    converged = False
    n_iter = 0
    for n_iter in range(1, max_iter + 1):
        prev = m
        powered = m
        for _ in range(expansion - 1):
            powered = (powered @ m).tocsc()
        powered.data = np.power(powered.data, inflation)
        powered = _normalize_columns(powered)
        powered.data[powered.data < prune] = 0.0
        powered.eliminate_zeros()
        powered = _normalize_columns(powered)
        m = powered
        delta = (m - prev).tocsc()
        change = float(np.abs(delta.data).max()) if delta.nnz else 0.0
        if change < tol:
            converged = True
            break

    labels = _markov_labels(m.tocsr(), n)
    return MarkovResult(Clustering(labels), converged, n_iter)


def _markov_labels(m: sparse.csr_matrix, n: int) -> list[int]:
    """Interpret a converged flow matrix: attractors (nonzero diagonal)
    are joined into systems along their mutual support, and every
    vertex follows the attractors feeding it; overlaps resolve to the
    lowest-labeled system."""
    diag = m.diagonal()
    attractors = [int(v) for v in np.nonzero(diag > 0)[0]]
    attractor_set = set(attractors)
    uf = UnionFind(n)
    for a in attractors:
        for b in m.indices[m.indptr[a] : m.indptr[a + 1]]:
            if int(b) in attractor_set:
                uf.union(a, int(b))
    system_label: dict[int, int] = {}
    for a in attractors:
        root = uf.find(a)
        system_label[root] = min(system_label.get(root, a), a)

    csc = m.tocsc()
    labels = []
    next_free = n  # singleton labels for unsupported vertices
    for v in range(n):
        rows = csc.indices[csc.indptr[v] : csc.indptr[v + 1]]
        owners = [system_label[uf.find(int(r))] for r in rows if int(r) in attractor_set]
        if owners:
            labels.append(min(owners))
        else:
            labels.append(next_free)
            next_free += 1
    return labels


def modularity(graph: WeightedGraph, clustering: Clustering) -> float:
    """Weighted modularity of a partition.

    Uses the ordered-pair normalization: M is twice the edge-weight
    sum, and the degree-product penalty includes the diagonal terms, so
    the single-cluster partition scores exactly 0 and the score stays
    within [-1, 1].
    """
    if len(clustering) != graph.n:
        raise ValueError(
            f"clustering covers {len(clustering)} vertices, graph has {graph.n}"
        )
    if graph.n_edges == 0:
        raise ValueError("modularity is undefined for a graph with no edges")
    m_total = 2.0 * graph.total_weight()
    labels = clustering.labels
    intra = [0.0] * clustering.n_clusters
    for i, j, w in graph.edges():
        if labels[i] == labels[j]:
            intra[labels[i]] += w
    degree_sum = [0.0] * clustering.n_clusters
    for v, k in enumerate(graph.degrees()):
        degree_sum[labels[v]] += float(k)
    q = 0.0
    for c in range(clustering.n_clusters):
        q += 2.0 * intra[c] - degree_sum[c] ** 2 / m_total
    return q / m_total


@dataclass(frozen=True)
class SweepRow:
    param: float
    q: float
    n_clusters: int


@dataclass(frozen=True)
class SweepResult:
    method: str
    rows: tuple[SweepRow, ...]

    @property
    def best(self) -> SweepRow:
        best = self.rows[0]
        for row in self.rows[1:]:
            if row.q > best.q:
                best = row
        return best


SWEEP_METHODS = ("threshold", "persistence", "mcl")


def cluster_by_method(graph: WeightedGraph, method: str, param: float, **params) -> Clustering:
    if method == "threshold":
        return threshold_clusters(graph, param)
    if method == "persistence":
        return persistence_clusters(graph, param, **params)
    if method == "mcl":
        return markov_clusters(graph, param, **params).clustering
    raise ValueError(f"unknown method {method!r}; expected one of {SWEEP_METHODS}")


def _sweep_point(args) -> SweepRow:
    graph, method, param, params = args
    clustering = cluster_by_method(graph, method, param, **params)
    return SweepRow(param, modularity(graph, clustering), clustering.n_clusters)


def sweep(
    graph: WeightedGraph,
    method: str,
    grid: Iterable[float],
    jobs: int = 1,
    **params,
) -> SweepResult:
    """Run one clustering method over a parameter grid and score each
    point; grid order is preserved and ties for the best row go to the
    earliest grid point."""
    grid = [float(g) for g in grid]
    if not grid:
        raise ValueError("sweep needs a non-empty parameter grid")
    if method not in SWEEP_METHODS:
        raise ValueError(f"unknown method {method!r}; expected one of {SWEEP_METHODS}")
    tasks = [(graph, method, param, params) for param in grid]
    if jobs > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(_sweep_point, tasks))
    else:
        rows = [_sweep_point(t) for t in tasks]
    return SweepResult(method, tuple(rows))

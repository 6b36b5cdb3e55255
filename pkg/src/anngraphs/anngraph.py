"""Group-annihilator graphs, threshold recognition and Laplacian spectra.

Two distinct elements ``a, b`` of a finite abelian p-group ``G`` are adjacent
when ``[a:G][b:G]G = 0``.  Writing ``[a:G] = p^e Z`` this is
``e_a + e_b >= exponent(G)``, so every such graph is a threshold graph with
vertex weights ``e``.  :class:`AnnGraph` keeps only those weights and never
materialises an ``n x n`` matrix unless asked to.
"""
from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .exact import rational_rank
from .groups import BudgetExceeded, GroupElement, PGroup, annihilator_exponent, valuation
from .partitions import Partition, conjugate

DEFAULT_MAX_VERTICES = 20_000
DENSE_LIMIT = 4096
EXACT_RANK_LIMIT = 1000


class NotThresholdError(ValueError):
    pass


class Graph:
    """Simple undirected graph on vertices ``0..n-1`` with a dense adjacency matrix."""

    def __init__(self, adjacency, labels: Sequence | None = None):
        adj = np.array(adjacency, dtype=bool)
        if adj.ndim != 2 or adj.shape[0] != adj.shape[1]:
            raise ValueError("adjacency must be square")
        if adj.diagonal().any():
            raise ValueError("self-loops are not allowed")
        if (adj != adj.T).any():
            raise ValueError("adjacency must be symmetric")
        self._adj = adj
        self.labels = list(labels) if labels is not None else list(range(len(adj)))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]], labels=None) -> "Graph":
        adj = np.zeros((n, n), dtype=bool)
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at {u}")
            adj[u, v] = adj[v, u] = True
        return cls(adj, labels)

    @classmethod
    def complete(cls, n: int) -> "Graph":
        return cls(~np.eye(n, dtype=bool))

    @classmethod
    def cycle(cls, n: int) -> "Graph":
        return cls.from_edges(n, [(i, (i + 1) % n) for i in range(n)])

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def adjacency(self) -> np.ndarray:
        return self._adj

    def adjacency_rows(self, rows) -> np.ndarray:
        return self.adjacency[np.asarray(rows)]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adjacency[u, v])

    def neighbors(self, u: int) -> np.ndarray:
        return np.flatnonzero(self.adjacency_rows([u])[0])

    def degrees(self) -> np.ndarray:
        return self.adjacency.sum(axis=1)

    def edge_count(self) -> int:
        return int(self.degrees().sum()) // 2

    def edges(self) -> list[tuple[int, int]]:
        iu, ju = np.nonzero(np.triu(self.adjacency, 1))
        return list(zip(iu.tolist(), ju.tolist()))


class AnnGraph(Graph):
    """Annihilator graph of a p-group, stored as vertex weights ``[a:G] = p^weight Z``."""

    def __init__(self, group: PGroup, elements: list[GroupElement], weights: np.ndarray):
        self.group = group
        self.elements = elements
        self.labels = [str(g) for g in elements]
        self.weights = np.asarray(weights, dtype=np.int64)
        self.threshold = group.exponent
        self._adj = None
        self._index = {g.coords: i for i, g in enumerate(elements)}

    def index(self, g) -> int:
        coords = g.coords if isinstance(g, GroupElement) else tuple(np.atleast_1d(g))
        return self._index[tuple(int(c) % m for c, m in zip(coords, self.group.moduli))]

    @property
    def zero_index(self) -> int:
        return self.index(self.group.zero())

    @property
    def adjacency(self) -> np.ndarray:
        if self._adj is None:
            if self.n > DENSE_LIMIT:
                raise BudgetExceeded(f"dense adjacency of {self.n} vertices exceeds {DENSE_LIMIT}")
            self._adj = self.adjacency_rows(np.arange(self.n))
        return self._adj

    def adjacency_rows(self, rows) -> np.ndarray:
        rows = np.asarray(rows)
        out = self.weights[rows, None] + self.weights[None, :] >= self.threshold
        out[np.arange(len(rows)), rows] = False
        return out

    def has_edge(self, u: int, v: int) -> bool:
        return u != v and self.weights[u] + self.weights[v] >= self.threshold

    def degrees(self) -> np.ndarray:
        srt = np.sort(self.weights)
        at_least = len(srt) - np.searchsorted(srt, self.threshold - self.weights, side="left")
        return at_least - (2 * self.weights >= self.threshold)


def _vertex_weights(G: PGroup, elements: list[GroupElement]) -> list[int]:
    if G.rank == 1:
        k = G.exponents[0]
        return [valuation(g.coords[0], G.p, k) for g in elements]
    return [annihilator_exponent(g) for g in elements]


def build_graph(G: PGroup, max_vertices: int = DEFAULT_MAX_VERTICES) -> AnnGraph:
    """Annihilator graph with vertices ordered by weight descending, then coordinates."""
    if G.order > max_vertices:
        raise BudgetExceeded(f"|G| = {G.order} exceeds vertex budget {max_vertices}")
    elements = list(G.elements())
    weights = _vertex_weights(G, elements)
    order = sorted(range(len(elements)), key=lambda i: (-weights[i], elements[i].coords))
    return AnnGraph(G, [elements[i] for i in order], np.array([weights[i] for i in order]))


def degree_partition(graph: Graph) -> Partition:
    return Partition.from_unsorted(graph.degrees().tolist())


# threshold graphs


@dataclass(frozen=True)
class CreationSequence:
    """``code[i]`` is 1 when the i-th added vertex dominates the earlier ones.

    ``order[i]`` is the source-graph vertex added at step ``i``.
    """

    code: tuple[int, ...]
    order: tuple[int, ...]

    def replay(self) -> Graph:
        n = len(self.code)
        code = np.array(self.code, dtype=bool)
        later = np.maximum.outer(np.arange(n), np.arange(n))
        adj = code[later]
        np.fill_diagonal(adj, False)
        return Graph(adj)

    def matches(self, graph: Graph, block: int = 512) -> bool:
        """Exact check that ``graph`` equals the replayed graph under ``order``."""
        n = graph.n
        if len(self.order) != n:
            return False
        pos = np.empty(n, dtype=np.int64)
        pos[np.asarray(self.order, dtype=np.int64)] = np.arange(n)
        code = np.asarray(self.code, dtype=bool)
        for start in range(0, n, block):
            rows = np.arange(start, min(n, start + block))
            later = np.maximum(pos[rows, None], pos[None, :])
            expected = code[later]
            expected[np.arange(len(rows)), rows] = False
            if not np.array_equal(expected, graph.adjacency_rows(rows)):
                return False
        return True


def _peel(graph: Graph):
    """Strip isolated/dominating vertices; returns (removed vertices, bits) or None.

    Works on degrees alone: removing an isolated vertex changes nothing,
    removing a dominating one lowers every remaining degree by one.
    """
    deg = graph.degrees()
    n = len(deg)
    if n == 0:
        return [], []
    order = np.lexsort((np.arange(n), deg))
    lo, hi, dom = 0, n - 1, 0
    removed, bits = [], []
    while hi > lo:
        m = hi - lo + 1
        if deg[order[lo]] - dom == 0:
            removed.append(int(order[lo]))
            bits.append(0)
            lo += 1
        elif deg[order[hi]] - dom == m - 1:
            removed.append(int(order[hi]))
            bits.append(1)
            hi -= 1
            dom += 1
        else:
            return None
    removed.append(int(order[lo]))
    bits.append(0)
    return removed, bits


def is_threshold(graph: Graph) -> bool:
    return _peel(graph) is not None


def creation_sequence(graph: Graph) -> CreationSequence:
    peeled = _peel(graph)
    if peeled is None:
        raise NotThresholdError("graph is not a threshold graph")
    removed, bits = peeled
    return CreationSequence(tuple(reversed(bits)), tuple(reversed(removed)))


# Laplacian spectra


@dataclass(frozen=True)
class Spectrum:
    """Laplacian eigenvalues with multiplicity, largest first."""

    values: tuple[int, ...]

    def support(self) -> set[int]:
        return set(self.values)

    def multiplicity(self, lam: int) -> int:
        return self.values.count(lam)

    def multiplicities(self) -> dict[int, int]:
        return dict(sorted(Counter(self.values).items(), reverse=True))

    def nonzero(self) -> Partition:
        return Partition(x for x in self.values if x)

    def __len__(self):
        return len(self.values)

    def __str__(self):
        return ",".join(map(str, self.values))


def laplacian_spectrum(graph: Graph) -> Spectrum:
    """Threshold graphs only: the spectrum is the conjugate degree partition padded with zeros."""
    if not is_threshold(graph):
        raise NotThresholdError("combinatorial spectrum needs a threshold graph; use laplacian_multiplicity_exact")
    conj = conjugate(degree_partition(graph))
    return Spectrum(tuple(conj) + (0,) * (graph.n - len(conj)))


def laplacian_rows(graph: Graph, shift: int = 0) -> list[dict[int, int]]:
    """Sparse rows of ``L - shift * I`` with ``L = D - A``."""
    deg = graph.degrees()
    rows = []
    for u in range(graph.n):
        row = {int(v): -1 for v in graph.neighbors(u)}
        diag = int(deg[u]) - shift
        if diag:
            row[u] = diag
        rows.append(row)
    return rows


def laplacian_multiplicity_exact(graph: Graph, lam: int, max_vertices: int = EXACT_RANK_LIMIT) -> int:
    """Multiplicity of ``lam`` as ``n - rank(L - lam I)`` over the rationals."""
    if graph.n > max_vertices:
        raise BudgetExceeded(f"exact rank on {graph.n} vertices exceeds {max_vertices}")
    return graph.n - rational_rank(laplacian_rows(graph, lam))


# export


def to_dot(graph: AnnGraph) -> str:
    lines = [f'graph "Gamma({graph.group})" {{']
    for i, (g, w) in enumerate(zip(graph.elements, graph.weights)):
        lines.append(f'  {i} [label="v={g}", group={int(w)}];')
    for u, v in graph.edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_json_dict(graph: AnnGraph) -> dict:
    return {
        "group": {"p": graph.group.p, "exponents": list(graph.group.exponents)},
        "n": graph.n,
        "vertices": [list(g.coords) for g in graph.elements],
        "edges": [list(e) for e in graph.edges()],
        "degree_partition": list(degree_partition(graph)),
        "spectrum": list(laplacian_spectrum(graph).values),
    }


def to_json(graph: AnnGraph) -> str:
    return json.dumps(to_json_dict(graph), separators=(",", ":"))


def from_json(text: str) -> Graph:
    data = json.loads(text)
    labels = [",".join(map(str, c)) for c in data["vertices"]] if "vertices" in data else None
    return Graph.from_edges(data["n"], (tuple(e) for e in data["edges"]), labels)

"""Backtracking search for graph homomorphisms and induced embeddings.

Also hosts the checks connecting group homomorphisms of cyclic p-groups to
graph homomorphisms of their annihilator graphs.
"""
from __future__ import annotations

from typing import Iterator, Mapping, Sequence

import numpy as np

from .anngraph import AnnGraph, Graph, build_graph
from .groups import BudgetExceeded, DEFAULT_HOM_BUDGET, GroupHom, PGroup, enumerate_homs, valuation

DEFAULT_SEARCH_BUDGET = 2_000_000


def _search_order(g: Graph, first: Sequence[int]) -> list[int]:
    # fixed vertices first, then greedily the vertex with most placed neighbours
    deg = g.degrees()
    placed = list(dict.fromkeys(first))
    seen = set(placed)
    links = np.zeros(g.n, dtype=np.int64)
    for v in placed:
        links += g.adjacency_rows([v])[0]
    while len(placed) < g.n:
        best = max((v for v in range(g.n) if v not in seen), key=lambda v: (links[v], deg[v], -v))
        placed.append(best)
        seen.add(best)
        links += g.adjacency_rows([best])[0]
    return placed


def iter_graph_homs(
    g1: Graph,
    g2: Graph,
    fixed: Mapping[int, int] | None = None,
    allowed: Mapping[int, np.ndarray] | None = None,
    injective: bool = False,
    induced: bool = False,
    budget: int = DEFAULT_SEARCH_BUDGET,
) -> Iterator[tuple[int, ...]]:
    """Yield vertex maps ``phi`` (as tuples) that send every edge of g1 to an edge of g2.

    ``allowed[v]`` is a boolean mask of permitted images for ``v``.  With
    ``induced`` the map must also send non-edges to non-edges (implies
    ``injective``).  Raises :class:`BudgetExceeded` after ``budget`` search nodes.
    """
    fixed = dict(fixed or {})
    injective = injective or induced
    n1, n2 = g1.n, g2.n
    if n1 == 0:
        yield ()
        return
    adj1 = g1.adjacency
    adj2 = g2.adjacency
    order = _search_order(g1, list(fixed))
    back_nbrs = [[u for u in order[:i] if adj1[v, u]] for i, v in enumerate(order)]
    back_non = [[u for u in order[:i] if not adj1[v, u]] for i, v in enumerate(order)] if induced else None
    base = []
    for v in order:
        mask = np.ones(n2, dtype=bool)
        if allowed is not None and v in allowed:
            mask &= np.asarray(allowed[v], dtype=bool)
        if v in fixed:
            only = np.zeros(n2, dtype=bool)
            only[fixed[v]] = True
            mask &= only
        base.append(mask)

    phi = [-1] * n1
    used = np.zeros(n2, dtype=bool)
    nodes = 0

    def candidates(i):
        v = order[i]
        mask = base[i].copy()
        for u in back_nbrs[i]:
            mask &= adj2[phi[u]]
        if injective:
            mask &= ~used
        if induced:
            for u in back_non[i]:
                mask &= ~adj2[phi[u]]
        return np.flatnonzero(mask)

    def rec(i):
        nonlocal nodes
        if i == n1:
            yield tuple(phi)
            return
        v = order[i]
        for w in candidates(i):
            nodes += 1
            if nodes > budget:
                raise BudgetExceeded(f"homomorphism search exceeded {budget} nodes")
            phi[v] = int(w)
            if injective:
                used[w] = True
            yield from rec(i + 1)
            if injective:
                used[w] = False
        phi[v] = -1

    yield from rec(0)


def find_graph_hom(g1: Graph, g2: Graph, **kwargs) -> tuple[int, ...] | None:
    return next(iter_graph_homs(g1, g2, **kwargs), None)


def is_graph_hom(g1: Graph, g2: Graph, mapping) -> bool:
    """Every edge ``(u, v)`` of g1 lands on an edge of g2 (so never on a single vertex)."""
    phi = _as_vertex_map(mapping, g1.n)
    return all(g2.has_edge(phi[u], phi[v]) for u, v in g1.edges())


def _as_vertex_map(mapping, n) -> list[int]:
    if isinstance(mapping, Mapping):
        return [int(mapping[v]) for v in range(n)]
    phi = [int(x) for x in mapping]
    if len(phi) != n:
        raise ValueError(f"vertex map has {len(phi)} entries for {n} vertices")
    return phi


def graph_degenerates(g1: Graph, g2: Graph, budget: int = DEFAULT_SEARCH_BUDGET) -> bool:
    """Whether a single graph homomorphism ``g1 -> g2`` exists."""
    return find_graph_hom(g1, g2, budget=budget) is not None


def _zero_preserving_masks(g1: AnnGraph, g2: AnnGraph) -> dict[int, np.ndarray]:
    z1, z2 = g1.zero_index, g2.zero_index
    nonzero = np.ones(g2.n, dtype=bool)
    nonzero[z2] = False
    return {v: (~nonzero if v == z1 else nonzero) for v in range(g1.n)}


def edge_degenerates(
    g1: Graph,
    e1: tuple[int, int],
    g2: Graph,
    e2: tuple[int, int],
    zero_preserving: bool = False,
    budget: int = DEFAULT_SEARCH_BUDGET,
) -> bool:
    """Whether some graph homomorphism sends edge ``e1`` onto edge ``e2`` (either orientation).

    ``zero_preserving`` restricts to maps under which the zero element is the
    only vertex sent to zero; both graphs must then be annihilator graphs.
    """
    a, b = e1
    u, v = e2
    if not g1.has_edge(a, b):
        raise ValueError(f"{e1} is not an edge of the source graph")
    if not g2.has_edge(u, v):
        raise ValueError(f"{e2} is not an edge of the target graph")
    allowed = _zero_preserving_masks(g1, g2) if zero_preserving else None
    for x, y in ((u, v), (v, u)):
        if find_graph_hom(g1, g2, fixed={a: x, b: y}, allowed=allowed, budget=budget) is not None:
            return True
    return False


def valuation_criterion(g1: AnnGraph, e1: tuple[int, int], g2: AnnGraph, e2: tuple[int, int]) -> bool:
    """Orbit-level test ``r <= r'`` and ``s <= s'`` for an edge of non-zero vertices.

    Valuations are compared after sorting each pair, which makes the test
    independent of edge orientation.
    """
    r, s = sorted(int(g1.weights[x]) for x in e1)
    r2, s2 = sorted(int(g2.weights[x]) for x in e2)
    return r <= r2 and s <= s2


# group homomorphisms as vertex maps


def vertex_map(f: GroupHom, g1: AnnGraph, g2: AnnGraph) -> tuple[int, ...]:
    return tuple(g2.index(f(x)) for x in g1.elements)


def verify_group_homs_are_graph_homs(p: int, k: int, l: int, budget: int = DEFAULT_HOM_BUDGET) -> dict:
    """Check every group homomorphism ``Z/p^k -> Z/p^l`` against :func:`is_graph_hom`.

    Failures are reported with the image of 1 and an edge that is not
    preserved.  ``collapse_tolerant`` counts maps that preserve every edge
    when an edge may also be contracted to a single vertex.
    """
    if k > l:
        raise ValueError("need k <= l")
    G, H = PGroup.cyclic(p, k), PGroup.cyclic(p, l)
    g1, g2 = build_graph(G), build_graph(H)
    homs = enumerate_homs(G, H, budget)
    passed, tolerant, failures = 0, 0, []
    for f in homs:
        phi = vertex_map(f, g1, g2)
        bad = next(((u, v) for u, v in g1.edges() if not g2.has_edge(phi[u], phi[v])), None)
        if bad is None:
            passed += 1
        else:
            failures.append({"image_of_1": f.images[0][0], "edge": [g1.labels[bad[0]], g1.labels[bad[1]]],
                             "kernel_trivial": _injective(phi)})
        if all(phi[u] == phi[v] or g2.has_edge(phi[u], phi[v]) for u, v in g1.edges()):
            tolerant += 1
    return {
        "p": p, "k": k, "l": l,
        "homs": len(homs),
        "graph_homs": passed,
        "collapse_tolerant": tolerant,
        "injective": sum(1 for f in homs if valuation(f.images[0][0], p, l) == l - k),
        "failures": failures,
    }


def _injective(phi) -> bool:
    return len(set(phi)) == len(phi)


def non_additive_graph_hom(p: int, k: int, l: int, budget: int = DEFAULT_SEARCH_BUDGET):
    """A graph homomorphism ``Gamma(Z/p^k) -> Gamma(Z/p^l)`` that is not a group homomorphism.

    Returns ``(vertex map, (x, y))`` where ``phi(x + y) != phi(x) + phi(y)``,
    or ``None`` when every graph homomorphism found is additive.
    """
    G, H = PGroup.cyclic(p, k), PGroup.cyclic(p, l)
    g1, g2 = build_graph(G), build_graph(H)
    additive = {vertex_map(f, g1, g2) for f in enumerate_homs(G, H)}
    for phi in iter_graph_homs(g1, g2, budget=budget):
        if phi in additive:
            continue
        for x in range(g1.n):
            for y in range(g1.n):
                s = g1.index(g1.elements[x] + g1.elements[y])
                lhs = g2.elements[phi[s]]
                rhs = g2.elements[phi[x]] + g2.elements[phi[y]]
                if lhs != rhs:
                    return phi, (x, y)
    return None


def has_induced_copy(small: Graph, big: Graph, budget: int = DEFAULT_SEARCH_BUDGET) -> bool:
    """Whether ``small`` is isomorphic to an induced subgraph of ``big`` (vertex deletion)."""
    if small.n > big.n:
        return False
    return find_graph_hom(small, big, induced=True, budget=budget) is not None

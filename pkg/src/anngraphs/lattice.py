"""The poset of threshold eigenvalue partitions of cyclic p-group graphs.

Nodes are partitions ordered by Young-diagram containment.  The realized
lattice holds only partitions of graphs ``Gamma(Z/p^k)`` with ``p^k`` up to a
bound; :func:`full_threshold_lattice` holds every threshold partition up to
an edge bound and is the one whose chain counts match the product formula.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Iterable, Sequence

from .anngraph import build_graph, laplacian_spectrum
from .groups import PGroup, is_prime
from .partitions import (
    MINUS_I,
    MINUS_I_PLUS_1,
    Partition,
    StrictPartition,
    distinct_part_count,
    fits_in,
    strict_from_threshold,
    strict_partitions_of,
    threshold_from_strict,
)

# settled by comparing against saturated-chain counts in the full lattice
DEFAULT_CONVENTION = MINUS_I
CONVENTIONS = {"minus-i": MINUS_I, "minus-i-plus-1": MINUS_I_PLUS_1}
SHIFTED_DFS_BOUND = 20


@dataclass(frozen=True)
class LatticeNode:
    partition: Partition
    witnesses: tuple[tuple[int, int], ...] = ()

    @property
    def q(self) -> int:
        """Edge count of the realizing graph (half the Laplacian trace)."""
        return sum(self.partition) // 2

    def label(self) -> str:
        if not self.partition:
            return "0"
        return "(" + ",".join(map(str, self.partition)) + ")"


def threshold_partition(p: int, k: int) -> Partition:
    """Non-zero Laplacian spectrum of ``Gamma(Z/p^k)``."""
    return laplacian_spectrum(build_graph(PGroup.cyclic(p, k))).nonzero()


@dataclass
class ThresholdLattice:
    nodes: list[LatticeNode]
    primes: tuple[int, ...] = ()
    max_order: int | None = None
    covers: list[tuple[int, int]] = field(default_factory=list)

    def __post_init__(self):
        self.nodes = sorted(self.nodes, key=lambda n: (sum(n.partition), tuple(n.partition)))
        self._index = {n.partition: i for i, n in enumerate(self.nodes)}
        if not self.covers:
            self.covers = _transitive_reduction([n.partition for n in self.nodes])
        self._down: dict[int, list[int]] = {i: [] for i in range(len(self.nodes))}
        for i, j in self.covers:
            self._down[j].append(i)

    @property
    def bottom(self) -> LatticeNode:
        return self.nodes[0]

    def __len__(self):
        return len(self.nodes)

    def __contains__(self, partition) -> bool:
        return Partition(partition) in self._index

    def index(self, node) -> int:
        key = node.partition if isinstance(node, LatticeNode) else Partition(node)
        return self._index[key]

    def node(self, partition) -> LatticeNode:
        return self.nodes[self.index(partition)]

    def witness(self, p: int, k: int) -> LatticeNode:
        for n in self.nodes:
            if (p, k) in n.witnesses:
                return n
        raise KeyError((p, k))

    def lower_covers(self, node) -> list[LatticeNode]:
        return [self.nodes[i] for i in self._down[self.index(node)]]

    def kappa(self, q: int) -> int:
        return sum(1 for n in self.nodes if sum(n.partition) == 2 * q)


def _transitive_reduction(parts: Sequence[Partition]) -> list[tuple[int, int]]:
    covers = []
    by_size = sorted(range(len(parts)), key=lambda i: -sum(parts[i]))
    for j, top in enumerate(parts):
        maximal: list[int] = []
        for i in by_size:
            if i == j or not fits_in(parts[i], top) or parts[i] == top:
                continue
            if any(fits_in(parts[i], parts[m]) for m in maximal):
                continue
            maximal.append(i)
        covers.extend((i, j) for i in maximal)
    return sorted(covers)


def build_lattice(primes: Iterable[int], max_order: int) -> ThresholdLattice:
    """Realized lattice: bottom plus one node per ``Gamma(Z/p^k)`` with ``p^k <= max_order``."""
    primes = tuple(sorted(primes))
    if not primes:
        raise ValueError("need at least one prime")
    if len(set(primes)) != len(primes):
        raise ValueError(f"primes must be distinct: {primes}")
    for p in primes:
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
    found: dict[Partition, list[tuple[int, int]]] = {Partition(): []}
    for p in primes:
        k = 1
        while p**k <= max_order:
            found.setdefault(threshold_partition(p, k), []).append((p, k))
            k += 1
    nodes = [LatticeNode(part, tuple(sorted(w))) for part, w in found.items()]
    return ThresholdLattice(nodes, primes, max_order)


def full_threshold_lattice(max_q: int) -> ThresholdLattice:
    """All threshold partitions with at most ``max_q`` edges (no witnesses)."""
    parts = [Partition()]
    for q in range(1, max_q + 1):
        parts.extend(threshold_from_strict(lam) for lam in strict_partitions_of(q))
    return ThresholdLattice([LatticeNode(p) for p in parts])


def le(a, b) -> bool:
    pa = a.partition if isinstance(a, LatticeNode) else a
    pb = b.partition if isinstance(b, LatticeNode) else b
    return fits_in(pa, pb)


def join(a, b) -> Partition:
    n = max(len(a), len(b))
    a, b = tuple(a) + (0,) * (n - len(a)), tuple(b) + (0,) * (n - len(b))
    return Partition(max(x, y) for x, y in zip(a, b))


def meet(a, b) -> Partition:
    return Partition(x for x in (min(x, y) for x, y in zip(a, b)) if x)


# saturated chains


def count_chains_dfs(L: ThresholdLattice, target) -> int:
    """Number of cover-to-cover paths from the bottom to ``target``."""
    memo: dict[int, int] = {}

    def count(j: int) -> int:
        if j in memo:
            return memo[j]
        down = L._down[j]
        memo[j] = 1 if not down else sum(count(i) for i in down)
        return memo[j]

    start = L.index(target)
    if start != 0 and not L._down[start]:
        return 0
    return count(start)


@lru_cache(maxsize=None)
def _shifted_chains(lam: tuple[int, ...]) -> int:
    if not lam:
        return 1
    total = 0
    for i, x in enumerate(lam):
        smaller = lam[:i] + ((x - 1,) if x > 1 else ()) + lam[i + 1:]
        if all(a > b for a, b in zip(smaller, smaller[1:])):
            total += _shifted_chains(smaller)
    return total


def count_chains_shifted_dfs(lam, bound: int = SHIFTED_DFS_BOUND) -> int:
    """Ways to grow the strict partition ``lam`` one box at a time from empty, staying strict."""
    lam = StrictPartition(lam)
    if sum(lam) > bound:
        raise ValueError(f"|lambda| = {sum(lam)} exceeds bound {bound}")
    return _shifted_chains(tuple(lam))


def schur_chain_count(lam) -> int:
    """t!/prod(l_i!) * prod_{r<s} (l_r - l_s)/(l_r + l_s), evaluated exactly."""
    lam = StrictPartition(lam)
    value = Fraction(factorial(sum(lam)))
    for x in lam:
        value /= factorial(x)
    for r in range(len(lam)):
        for s in range(r + 1, len(lam)):
            value *= Fraction(lam[r] - lam[s], lam[r] + lam[s])
    if value.denominator != 1:
        raise ArithmeticError(f"non-integral chain count {value} for {tuple(lam)}")
    return value.numerator


def chain_count_for_graph(node, convention: int | str = DEFAULT_CONVENTION) -> int:
    if isinstance(convention, str):
        convention = CONVENTIONS[convention]
    part = node.partition if isinstance(node, LatticeNode) else Partition(node)
    if not part:
        return 1
    return schur_chain_count(strict_from_threshold(part, convention))


def resolve_convention(max_q: int) -> dict:
    """Compare both strict-part conventions with chain counts in the full lattice."""
    L = full_threshold_lattice(max_q)
    agree = {name: 0 for name in CONVENTIONS}
    disagree: dict[str, list] = {name: [] for name in CONVENTIONS}
    for node in L.nodes[1:]:
        dfs = count_chains_dfs(L, node)
        for name, conv in CONVENTIONS.items():
            got = chain_count_for_graph(node, conv)
            if got == dfs:
                agree[name] += 1
            else:
                disagree[name].append((tuple(node.partition), dfs, got))
    winners = [name for name in CONVENTIONS if not disagree[name]]
    return {"nodes": len(L) - 1, "agree": agree, "disagree": disagree, "winners": winners}


# groups of higher rank as chains


def rank_function(exponents: Sequence[int], p: int | None = None) -> int:
    """Length of a saturated chain from the bottom: the largest exponent."""
    if not exponents:
        raise ValueError("empty exponent sequence")
    if any(a > b for a, b in zip(exponents, exponents[1:])):
        raise ValueError(f"exponents must be non-decreasing: {tuple(exponents)}")
    return exponents[-1]


@dataclass(frozen=True)
class GroupChain:
    nodes: tuple[LatticeNode, ...]
    exponents: tuple[int, ...]
    p: int

    @property
    def rank(self) -> int:
        return rank_function(self.exponents, self.p)

    @property
    def repeated(self) -> list[int]:
        """Positions whose node equals the previous one (equal exponents)."""
        return [i for i in range(1, len(self.nodes)) if self.nodes[i] == self.nodes[i - 1]]


def group_to_chain(G: PGroup) -> GroupChain:
    exps = tuple(sorted(G.exponents))
    nodes = tuple(LatticeNode(threshold_partition(G.p, k), ((G.p, k),)) for k in exps)
    return GroupChain(nodes, exps, G.p)


def rank_gf_check(L: ThresholdLattice, max_q: int) -> dict:
    rows = []
    for q in range(max_q + 1):
        got, want = L.kappa(q), distinct_part_count(q)
        rows.append({"q": q, "lattice": got, "expected": want, "match": got == want})
    saturated = -1
    for r in rows:
        if not r["match"]:
            break
        saturated = r["q"]
    return {"rows": rows, "saturated_up_to": saturated, "all_match": saturated == max_q}


# export


def export_hasse(L: ThresholdLattice) -> str:
    lines = ["digraph hasse {", "  rankdir=BT;"]
    for i, n in enumerate(L.nodes):
        wit = " ".join(f"Z/{p}^{k}" for p, k in n.witnesses)
        label = n.label() + (f"\\n{wit}" if wit else "")
        lines.append(f'  {i} [label="{label}"];')
    for i, j in L.covers:
        lines.append(f"  {i} -> {j};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_json_dict(L: ThresholdLattice) -> dict:
    return {
        "primes": list(L.primes),
        "max_order": L.max_order,
        "nodes": [
            {"partition": list(n.partition), "witnesses": [list(w) for w in n.witnesses], "q": n.q}
            for n in L.nodes
        ],
        "covers": [list(c) for c in L.covers],
    }


def to_json(L: ThresholdLattice) -> str:
    return json.dumps(to_json_dict(L), separators=(",", ":"))

"""Exit criteria 1-12.  Each test records a PASS/FAIL line shown in the terminal summary."""
import itertools
import json
import time
from pathlib import Path

import pytest

from anngraphs.anngraph import (
    build_graph,
    creation_sequence,
    degree_partition,
    is_threshold,
    laplacian_multiplicity_exact,
    laplacian_spectrum,
)
from anngraphs.groups import PGroup, degenerates_cyclic, degenerates_general, exists_hom_mapping
from anngraphs.homsearch import has_induced_copy, is_graph_hom, non_additive_graph_hom, verify_group_homs_are_graph_homs
from anngraphs.lattice import (
    CONVENTIONS,
    DEFAULT_CONVENTION,
    build_lattice,
    count_chains_dfs,
    count_chains_shifted_dfs,
    le,
    resolve_convention,
    schur_chain_count,
)
from anngraphs.partitions import (
    conjugate,
    distinct_part_count,
    fits_in,
    majorizes,
    partitions_of,
    strict_from_threshold,
    strict_partitions_of,
)

import conftest
import oracles

pytestmark = pytest.mark.acceptance

ARTIFACTS = Path(__file__).resolve().parents[1] / "artifacts"
ONES8 = (1,) * 8


def record(n, ok, elapsed, detail=""):
    line = f"criterion {n}: {'PASS' if ok else 'FAIL'} ({elapsed:.2f}s) {detail}".rstrip()
    conftest.ACCEPTANCE_LINES.append(line)
    print(line)
    return ok


def rank_one_range():
    for p in (2, 3, 5, 7):
        for k in range(1, 7):
            if p**k <= 20000:
                yield p, k


def test_criterion_01_worked_example():
    t0 = time.perf_counter()
    g = build_graph(PGroup.cyclic(2, 4))
    deg = degree_partition(g)
    conj = conjugate(deg)
    elapsed = time.perf_counter() - t0
    ok = (
        deg == (15, 7, 3, 3, 2, 2, 2, 2) + ONES8
        and conj == (16, 8, 4, 2, 2, 2, 2) + ONES8
        and elapsed < 1
    )
    assert record(1, ok, elapsed, f"degrees={deg} conjugate={conj}")


def test_criterion_02_spectrum_support():
    t0 = time.perf_counter()
    bad = []
    for p, k in rank_one_range():
        support = laplacian_spectrum(build_graph(PGroup.cyclic(p, k))).support()
        expected = {0} | {p**i for i in range(k + 1)}
        if support != expected:
            bad.append(((p, k), sorted(support), sorted(expected)))
    elapsed = time.perf_counter() - t0
    detail = f"{len(bad)} mismatches" + (f"; e.g. Z/{bad[0][0][0]}^{bad[0][0][1]} support {bad[0][1]} vs {bad[0][2]}" if bad else "")
    if bad:
        detail += "; all: " + ", ".join(f"{p}^{k}" for (p, k), _, _ in bad)
    assert record(2, not bad and elapsed < 30, elapsed, detail)


def test_criterion_03_exact_rank():
    t0 = time.perf_counter()
    cases = [(p, k) for p in (2, 3) for k in range(1, 6)] + [(5, k) for k in range(1, 5)]
    bad, checked = [], 0
    for p, k in cases:
        g = build_graph(PGroup.cyclic(p, k))
        for lam, m in laplacian_spectrum(g).multiplicities().items():
            checked += 1
            exact = laplacian_multiplicity_exact(g, lam)
            if exact != m:
                bad.append((p, k, lam, m, exact))
    elapsed = time.perf_counter() - t0
    assert record(3, not bad and elapsed < 300, elapsed, f"{checked} eigenvalues checked, {len(bad)} mismatches {bad[:3]}")


def test_criterion_04_threshold():
    t0 = time.perf_counter()
    bad = []
    for p, k in rank_one_range():
        g = build_graph(PGroup.cyclic(p, k))
        if not is_threshold(g) or not creation_sequence(g).matches(g):
            bad.append((p, k))
    elapsed = time.perf_counter() - t0
    assert record(4, not bad and elapsed < 30, elapsed, f"{len(list(rank_one_range()))} graphs, failures {bad}")


def test_criterion_05_lemma_vs_oracle():
    t0 = time.perf_counter()
    bad, n = [], 0
    for p in (2, 3):
        for k, l in itertools.product(range(1, 6), repeat=2):
            for r, s in itertools.product(range(k), range(l)):
                n += 1
                a = PGroup.cyclic(p, k).element(p**r)
                b = PGroup.cyclic(p, l).element(p**s)
                if degenerates_cyclic(r, k, s, l) != exists_hom_mapping(a, b):
                    bad.append((p, r, k, s, l))
    elapsed = time.perf_counter() - t0
    assert record(5, not bad and elapsed < 60, elapsed, f"{n} pairs, {len(bad)} discrepancies")


def test_criterion_06_theorem_vs_oracle():
    t0 = time.perf_counter()
    shapes = [(a,) for a in range(1, 4)] + [(a, b) for a in range(1, 4) for b in range(1, a + 1)]
    groups = [PGroup(2, s) for s in shapes]
    bad, n = [], 0
    for G, H in itertools.product(groups, repeat=2):
        for a in G.elements():
            for b in H.elements():
                n += 1
                if degenerates_general(a, b) != exists_hom_mapping(a, b):
                    bad.append((str(G), str(a), str(H), str(b)))
    elapsed = time.perf_counter() - t0
    assert record(6, not bad and elapsed < 600, elapsed, f"{n} element pairs, {len(bad)} discrepancies")


def test_criterion_07_group_homs_are_graph_homs():
    t0 = time.perf_counter()
    total, failures, first = 0, 0, None
    for p in (2, 3):
        for l in range(1, 5):
            for k in range(1, l + 1):
                rep = verify_group_homs_are_graph_homs(p, k, l)
                total += rep["homs"]
                failures += len(rep["failures"])
                if rep["failures"] and first is None:
                    first = (p, k, l, rep["failures"][0])
    witness = non_additive_graph_hom(2, 2, 3)
    witness_ok = witness is not None and is_graph_hom(
        build_graph(PGroup.cyclic(2, 2)), build_graph(PGroup.cyclic(2, 3)), witness[0]
    )
    elapsed = time.perf_counter() - t0
    detail = f"{total} homs, {failures} fail is_graph_hom"
    if first:
        p, k, l, f = first
        detail += f"; first Z/{p}^{k}->Z/{p}^{l} 1->{f['image_of_1']} edge {f['edge']}"
    detail += f"; non-additive witness {'found' if witness_ok else 'missing'}"
    assert record(7, failures == 0 and witness_ok and elapsed < 60, elapsed, detail)


def test_criterion_08_chain_formula_vs_dfs():
    t0 = time.perf_counter()
    bad, shapes14 = [], 0
    for t in range(1, 15):
        for lam in strict_partitions_of(t):
            shapes14 += t == 14
            if schur_chain_count(lam) != count_chains_shifted_dfs(lam):
                bad.append(tuple(lam))

    # the prescribed check: realized nodes with partition sum at most 14
    L = build_lattice([2, 3, 5, 7, 11, 13], 20000)
    small = [n for n in L.nodes[1:] if sum(n.partition) <= 14]
    realized = {}
    for name, conv in CONVENTIONS.items():
        realized[name] = all(
            count_chains_dfs(L, n) == count_chains_shifted_dfs(strict_from_threshold(n.partition, conv))
            for n in small
        )
    # both pass there, so decide on the full lattice of threshold partitions
    res = resolve_convention(12)
    selected = res["winners"][0] if len(res["winners"]) == 1 else None
    ARTIFACTS.mkdir(exist_ok=True)
    (ARTIFACTS / "convention.json").write_text(json.dumps({
        "selected": selected,
        "realized_nodes_checked": [list(n.partition) for n in small],
        "realized_agreement": realized,
        "full_lattice_nodes": res["nodes"],
        "full_lattice_agreement": res["agree"],
        "first_disagreements": {k: v[:5] for k, v in res["disagree"].items()},
    }, indent=2) + "\n")
    elapsed = time.perf_counter() - t0
    ok = (
        not bad
        and shapes14 == 22
        and selected is not None
        and CONVENTIONS[selected] == DEFAULT_CONVENTION
        and elapsed < 120
    )
    assert record(8, ok, elapsed, f"{shapes14} shapes at t=14, {len(bad)} mismatches; convention={selected}")


def test_criterion_09_generating_function():
    t0 = time.perf_counter()
    head = [distinct_part_count(q) for q in range(5)]
    bad = [q for q in range(31) if distinct_part_count(q) != oracles.distinct_partition_count(q)]
    elapsed = time.perf_counter() - t0
    ok = head == [1, 1, 1, 2, 2] and not bad and elapsed < 1
    assert record(9, ok, elapsed, f"q=0..4 -> {head}; mismatches up to 30: {bad}")


def test_criterion_10_majorization():
    t0 = time.perf_counter()
    pi1, pi2 = (8, 4, 2, 1, 1, 1, 1), (8, 2, 2, 1, 1, 1, 1, 1, 1)
    example = sum(pi1) == sum(pi2) == 18 and majorizes(pi1, pi2)
    mismatches, pairs = [], 0
    for n in range(1, 11):
        ps = list(partitions_of(n))
        for sigma in ps:
            reach = oracles.reachable_by_moves(sigma, last_row_only=True)
            for pi in ps:
                pairs += 1
                if (tuple(pi) in reach) != majorizes(pi, sigma):
                    mismatches.append((tuple(pi), tuple(sigma)))
    elapsed = time.perf_counter() - t0
    detail = f"example {'holds' if example else 'fails'}; BFS vs majorizes: {len(mismatches)} of {pairs} pairs disagree"
    if mismatches:
        detail += f", first {mismatches[0][0]} over {mismatches[0][1]}"
    assert record(10, example and not mismatches, elapsed, detail)


def test_criterion_11_t235():
    t0 = time.perf_counter()
    L = build_lattice([2, 3, 5], 32)
    expected = {(p, k) for p in (2, 3, 5) for k in range(1, 6) if p**k <= 32}
    got = {w for n in L.nodes for w in n.witnesses}
    nodes_ok = got == expected and len(L) == len(expected) + 1 and L.bottom.partition == ()
    z8, z9 = L.witness(2, 3), L.witness(3, 2)
    incomparable = not le(z8, z9) and not le(z9, z8)
    axioms = all(le(a, a) for a in L.nodes)
    axioms &= all(a == b for a, b in itertools.product(L.nodes, repeat=2) if le(a, b) and le(b, a))
    axioms &= all(le(a, c) for a, b, c in itertools.product(L.nodes, repeat=3) if le(a, b) and le(b, c))
    elapsed = time.perf_counter() - t0
    ok = nodes_ok and incomparable and axioms and elapsed < 10
    assert record(11, ok, elapsed, f"{len(L)} nodes, Z/8 vs Z/9 incomparable={incomparable}, axioms={axioms}")


def test_criterion_12_fits_in_vs_deletion():
    t0 = time.perf_counter()
    L = build_lattice([2, 3, 5, 7, 11, 13], 16)
    graphs = {n.witnesses[0]: build_graph(PGroup.cyclic(*n.witnesses[0])) for n in L.nodes[1:]}
    parts = {w: n.partition for n in L.nodes[1:] for w in n.witnesses}
    bad, pairs = [], 0
    for a, b in itertools.product(graphs, repeat=2):
        pairs += 1
        if fits_in(parts[a], parts[b]) != has_induced_copy(graphs[a], graphs[b]):
            bad.append((a, b))
    elapsed = time.perf_counter() - t0
    assert record(12, not bad, elapsed, f"{len(graphs)} graphs, {pairs} ordered pairs, {len(bad)} discrepancies")

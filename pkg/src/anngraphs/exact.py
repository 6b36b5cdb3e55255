"""Exact rank of sparse integer/rational matrices."""
from __future__ import annotations

from collections import defaultdict
from fractions import Fraction
from typing import Iterable, Mapping


def rational_rank(rows: Iterable[Mapping[int, int | Fraction]]) -> int:
    """Rank over Q of a matrix given as sparse rows ``{column: value}``.

    Gaussian elimination on Fractions with a Markowitz-style pivot choice
    (shortest row, then the column shared by the fewest rows) to keep fill-in
    low on the very sparse Laplacians of annihilator graphs.
    """
    work: list[dict[int, Fraction]] = []
    for r in rows:
        d = {c: Fraction(v) for c, v in r.items() if v}
        if d:
            work.append(d)
    col_rows: dict[int, set[int]] = defaultdict(set)
    for i, r in enumerate(work):
        for c in r:
            col_rows[c].add(i)

    active = set(range(len(work)))
    rank = 0
    while active:
        i = min(active, key=lambda k: (len(work[k]), k))
        row = work[i]
        active.discard(i)
        if not row:
            continue
        c = min(row, key=lambda cc: (len(col_rows[cc]), cc))
        rank += 1
        piv = row[c]
        for cc in row:
            col_rows[cc].discard(i)
        for k in list(col_rows[c]):
            target = work[k]
            f = target[c] / piv
            for cc, v in row.items():
                nv = target.get(cc, 0) - f * v
                if nv:
                    if cc not in target:
                        col_rows[cc].add(k)
                    target[cc] = nv
                elif cc in target:
                    del target[cc]
                    col_rows[cc].discard(k)
    return rank

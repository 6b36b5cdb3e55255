"""Integer partitions and the Young-diagram operations used throughout.

A partition is stored as a weakly decreasing tuple of positive integers;
the empty tuple is the partition of 0.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import accumulate, zip_longest
from typing import Iterable, Iterator


class Partition(tuple):
    """Weakly decreasing tuple of positive integers."""

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(x) for x in parts)
        for i, x in enumerate(parts):
            if x < 1:
                raise ValueError(f"partition parts must be positive, got {parts}")
            if i and parts[i - 1] < x:
                raise ValueError(f"partition parts must be weakly decreasing, got {parts}")
        return super().__new__(cls, parts)

    @classmethod
    def from_unsorted(cls, parts: Iterable[int]) -> "Partition":
        """Sort, drop zeros and wrap."""
        return cls(sorted((x for x in parts if x), reverse=True))

    @classmethod
    def parse(cls, text: str) -> "Partition":
        text = text.strip()
        if not text:
            return cls()
        return cls(int(x) for x in text.split(","))

    @property
    def size(self) -> int:
        return sum(self)

    def conjugate(self) -> "Partition":
        return conjugate(self)

    def trace(self) -> int:
        return trace(self)

    def __str__(self):
        return ",".join(map(str, self))

    def __repr__(self):
        return f"{type(self).__name__}({tuple(self)!r})"


class StrictPartition(Partition):
    """Partition with pairwise distinct parts."""

    def __new__(cls, parts: Iterable[int] = ()):
        self = super().__new__(cls, parts)
        for a, b in zip(self, self[1:]):
            if a == b:
                raise ValueError(f"strict partition has repeated part {a}: {tuple(self)}")
        return self


@dataclass(frozen=True)
class ShiftedDivision:
    """Split of a Young diagram along the diagonal of its trace square.

    ``above`` holds row lengths measured from the diagonal cell rightwards;
    ``below`` holds column lengths strictly under the diagonal.
    """

    above: Partition
    below: Partition

    def cells(self) -> set[tuple[int, int]]:
        out = set()
        for i, a in enumerate(self.above, start=1):
            out.update((i, j) for j in range(i, i + a))
        for j, b in enumerate(self.below, start=1):
            out.update((i, j) for i in range(j + 1, j + 1 + b))
        return out

    def reassemble(self) -> Partition:
        return partition_from_cells(self.cells())


def as_partition(obj) -> Partition:
    if isinstance(obj, Partition):
        return obj
    return Partition(obj)


def conjugate(pi) -> Partition:
    """Column lengths of the Young diagram: d*_j = #{i : d_i >= j}."""
    pi = as_partition(pi)
    if not pi:
        return Partition()
    out = []
    i = len(pi)
    for j in range(1, pi[0] + 1):
        while pi[i - 1] < j:
            i -= 1
        out.append(i)
    return Partition(out)


def trace(pi) -> int:
    """Length of the main diagonal, #{i : pi_i >= i}."""
    n = 0
    for i, x in enumerate(pi, start=1):
        if x < i:
            break
        n += 1
    return n


def fits_in(mu, eta) -> bool:
    """Containment of Young diagrams, Y(mu) inside Y(eta)."""
    if len(mu) > len(eta):
        return False
    return all(a <= b for a, b in zip(mu, eta))


def _prefix_sums(a, b):
    pa = list(accumulate(x for x, _ in zip_longest(a, b, fillvalue=0)))
    pb = list(accumulate(y for _, y in zip_longest(a, b, fillvalue=0)))
    return pa, pb


def weakly_majorizes(b, a) -> bool:
    """Zero-padded prefix-sum dominance of ``b`` over ``a``."""
    pb, pa = _prefix_sums(b, a)
    return all(x >= y for x, y in zip(pb, pa))


def majorizes(b, a) -> bool:
    return sum(b) == sum(a) and weakly_majorizes(b, a)


def is_threshold_eigen_partition(pi, pi_dot) -> bool:
    """Check ``pi`` against the degree partition ``pi_dot``.

    ``pi`` must be the conjugate of ``pi_dot`` and exceed it by exactly one
    in every row of the trace square.
    """
    pi, pi_dot = as_partition(pi), as_partition(pi_dot)
    if conjugate(pi_dot) != pi:
        return False
    t = trace(pi)
    if len(pi_dot) < t:
        return False
    return all(pi[i] == pi_dot[i] + 1 for i in range(t))


def is_threshold_partition(pi) -> bool:
    """True when ``pi`` is the threshold eigenvalues partition of its own conjugate."""
    pi = as_partition(pi)
    return is_threshold_eigen_partition(pi, conjugate(pi))


def shifted_division(pi) -> ShiftedDivision:
    pi = as_partition(pi)
    t = trace(pi)
    conj = conjugate(pi)
    above = Partition(pi[i - 1] - i + 1 for i in range(1, t + 1))
    below = Partition(x for x in (conj[j - 1] - j for j in range(1, t + 1)) if x > 0)
    return ShiftedDivision(above, below)


MINUS_I = 0
MINUS_I_PLUS_1 = 1


def strict_from_threshold(pi, offset: int = MINUS_I) -> StrictPartition:
    """Diagonal-row lengths ``pi_i - i + offset`` for ``i <= trace(pi)``.

    ``offset=0`` gives the Frobenius arm lengths, ``offset=1`` the rows of
    the shifted division.
    """
    if offset not in (MINUS_I, MINUS_I_PLUS_1):
        raise ValueError(f"offset must be 0 or 1, got {offset}")
    pi = as_partition(pi)
    if not pi:
        raise ValueError("empty partition has no strict part")
    parts = [pi[i - 1] - i + offset for i in range(1, trace(pi) + 1)]
    if any(x < 1 for x in parts):
        raise ValueError(f"convention offset={offset} gives non-positive parts {parts} for {tuple(pi)}")
    try:
        return StrictPartition(parts)
    except ValueError:
        raise ValueError(f"convention offset={offset} gives non-strict parts {parts} for {tuple(pi)}") from None


def threshold_from_strict(lam) -> Partition:
    """Inverse of ``strict_from_threshold(., MINUS_I)``.

    Builds the diagram with arms ``lam`` and legs ``lam - 1``.
    """
    lam = StrictPartition(lam)
    cells = set()
    for i, a in enumerate(lam, start=1):
        cells.update((i, j) for j in range(i, i + a + 1))
        cells.update((r, i) for r in range(i + 1, i + a))
    return partition_from_cells(cells)


def partition_from_cells(cells) -> Partition:
    rows: dict[int, int] = {}
    for i, _ in cells:
        rows[i] = rows.get(i, 0) + 1
    parts = [rows[i] for i in sorted(rows)]
    if sorted(rows) != list(range(1, len(rows) + 1)):
        raise ValueError("cells do not form a Young diagram")
    p = Partition(parts)
    if {(i, j) for i, r in enumerate(p, 1) for j in range(1, r + 1)} != set(cells):
        raise ValueError("cells do not form a Young diagram")
    return p


def distinct_part_count(q: int) -> int:
    """Coefficient of z^q in prod_{t>=1} (1 + z^t)."""
    if q < 0:
        raise ValueError("q must be non-negative")
    coeffs = [1] + [0] * q
    for t in range(1, q + 1):
        for d in range(q, t - 1, -1):
            coeffs[d] += coeffs[d - t]
    return coeffs[q]


def partitions_of(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of ``n`` in reverse lexicographic order."""
    if max_part is None:
        max_part = n

    def rec(rest, cap):
        if rest == 0:
            yield ()
            return
        for x in range(min(rest, cap), 0, -1):
            for tail in rec(rest - x, x):
                yield (x,) + tail

    for p in rec(n, max_part):
        yield Partition(p)


def strict_partitions_of(n: int) -> Iterator[StrictPartition]:
    def rec(rest, cap):
        if rest == 0:
            yield ()
            return
        for x in range(min(rest, cap), 0, -1):
            for tail in rec(rest - x, x - 1):
                yield (x,) + tail

    for p in rec(n, n):
        yield StrictPartition(p)

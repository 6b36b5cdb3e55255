"""Finite abelian p-groups ``Z/p^l1 + ... + Z/p^lr`` and degeneration of elements."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Iterator, Sequence

from .partitions import Partition

DEFAULT_HOM_BUDGET = 10**6
_MAX_RESIDUE = 2**63


class BudgetExceeded(RuntimeError):
    """An exhaustive enumeration would exceed its configured budget."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def valuation(x: int, p: int, cap: int) -> int:
    """p-adic valuation of ``x`` modulo ``p**cap``; zero has valuation ``cap``."""
    x %= p**cap
    if x == 0:
        return cap
    v = 0
    while x % p == 0:
        x //= p
        v += 1
    return v


@dataclass(frozen=True)
class PGroup:
    p: int
    exponents: Partition

    def __init__(self, p: int, exponents: Sequence[int] = ()):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        exponents = Partition.from_unsorted(exponents) if not isinstance(exponents, Partition) else exponents
        if exponents and p ** exponents[0] >= _MAX_RESIDUE:
            raise ValueError(f"cyclic factor {p}^{exponents[0]} does not fit in a machine word")
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "exponents", exponents)

    @classmethod
    def cyclic(cls, p: int, k: int) -> "PGroup":
        return cls(p, (k,))

    @classmethod
    def parse(cls, text: str) -> "PGroup":
        """Parse ``"p^a + p^b + ..."``; a bare ``p`` means ``p^1``."""
        ps, exps = set(), []
        for term in text.split("+"):
            term = term.strip()
            base, _, e = term.partition("^")
            ps.add(int(base))
            exps.append(int(e) if e else 1)
        if len(ps) != 1:
            raise ValueError(f"mixed primes in {text!r}")
        return cls(ps.pop(), exps)

    @property
    def rank(self) -> int:
        return len(self.exponents)

    @property
    def order(self) -> int:
        return self.p ** sum(self.exponents)

    @property
    def moduli(self) -> tuple[int, ...]:
        return tuple(self.p**e for e in self.exponents)

    @property
    def exponent(self) -> int:
        """Largest exponent, so ``p**exponent`` annihilates the group."""
        return self.exponents[0] if self.exponents else 0

    def element(self, *coords) -> "GroupElement":
        if len(coords) == 1 and not isinstance(coords[0], int):
            coords = tuple(coords[0])
        return GroupElement(self, coords)

    def zero(self) -> "GroupElement":
        return GroupElement(self, (0,) * self.rank)

    def elements(self) -> Iterator["GroupElement"]:
        for coords in product(*(range(m) for m in self.moduli)):
            yield GroupElement(self, coords)

    def torsion(self, e: int) -> Iterator[tuple[int, ...]]:
        """Coordinates of all h with ``p**e * h == 0``, lexicographic."""
        steps = [self.p ** max(0, m - e) for m in self.exponents]
        ranges = [range(0, self.p**m, s) for m, s in zip(self.exponents, steps)]
        return product(*ranges)

    def torsion_size(self, e: int) -> int:
        return self.p ** sum(min(m, e) for m in self.exponents)

    def __str__(self):
        if not self.exponents:
            return "0"
        return " + ".join(f"{self.p}^{e}" for e in self.exponents)


@dataclass(frozen=True)
class GroupElement:
    group: PGroup
    coords: tuple[int, ...]

    def __post_init__(self):
        coords = tuple(int(c) for c in self.coords)
        if len(coords) != self.group.rank:
            raise ValueError(f"expected {self.group.rank} coordinates, got {len(coords)}")
        object.__setattr__(self, "coords", tuple(c % m for c, m in zip(coords, self.group.moduli)))

    def __add__(self, other: "GroupElement") -> "GroupElement":
        if other.group != self.group:
            raise ValueError("elements of different groups")
        return GroupElement(self.group, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __rmul__(self, n: int) -> "GroupElement":
        return GroupElement(self.group, tuple(n * a for a in self.coords))

    def is_zero(self) -> bool:
        return not any(self.coords)

    def __str__(self):
        return ",".join(map(str, self.coords))


@dataclass(frozen=True, order=True)
class OrbitId:
    """Orbit of ``p**i * unit`` in ``Z/p**k``; ``i == k`` is the zero orbit."""

    i: int
    k: int

    def __post_init__(self):
        if not 0 <= self.i <= self.k:
            raise ValueError(f"orbit valuation {self.i} outside [0, {self.k}]")


def annihilator_exponent(g: GroupElement) -> int:
    """The ``e`` with ``[g : G] = p^e Z``, i.e. least ``e`` with ``p^e G`` inside ``Z g``.

    For generator ``x_j`` the multiples of ``g`` vanishing off coordinate ``j``
    are the multiples of ``p^m_j`` with ``m_j = max_{i != j} ord_i``; these hit
    ``p^e x_j`` exactly when ``e >= min(l_j, m_j + v(g_j))``.
    """
    G = g.group
    p = G.p
    vals = [valuation(c, p, lam) for c, lam in zip(g.coords, G.exponents)]
    orders = [lam - v for lam, v in zip(G.exponents, vals)]
    e = 0
    for j, lam in enumerate(G.exponents):
        m_j = max((o for i, o in enumerate(orders) if i != j), default=0)
        e = max(e, min(lam, m_j + vals[j]))
    return e


def orbit_of(g: GroupElement) -> OrbitId:
    G = g.group
    if G.rank != 1:
        raise ValueError("orbits are only defined here for cyclic groups")
    k = G.exponents[0]
    return OrbitId(valuation(g.coords[0], G.p, k), k)


def orbit_size(k: int, i: int, p: int) -> int:
    """|O_{k,p^i}| = phi(p^k) / p^i for i < k, and 1 for the zero orbit."""
    if not 0 <= i <= k:
        raise ValueError(f"need 0 <= i <= k, got i={i}, k={k}")
    if i == k:
        return 1
    return (p - 1) * p ** (k - 1 - i)


def all_orbits(G: PGroup) -> list[tuple[OrbitId, list[GroupElement]]]:
    if G.rank != 1:
        raise ValueError("orbits are only defined here for cyclic groups")
    k = G.exponents[0]
    buckets: dict[int, list[GroupElement]] = {i: [] for i in range(k + 1)}
    for g in G.elements():
        buckets[orbit_of(g).i].append(g)
    return [(OrbitId(i, k), buckets[i]) for i in range(k + 1)]


# fundamental poset


@dataclass(frozen=True)
class FundamentalPoint:
    """Non-zero orbit ``(r, k)``: elements ``p^r u`` of ``Z/p^k`` with ``u`` a unit."""

    r: int
    k: int

    def __post_init__(self):
        if not 0 <= self.r < self.k:
            raise ValueError(f"need 0 <= r < k, got ({self.r}, {self.k})")

    def __le__(self, other):
        # below = reachable by a homomorphism from ``other``
        return degenerates_cyclic(other.r, other.k, self.r, self.k)

    def __lt__(self, other):
        return self != other and self <= other

    def __ge__(self, other):
        return other <= self

    def __gt__(self, other):
        return other < self


def degenerates_cyclic(r: int, k: int, s: int, l: int) -> bool:
    """Whether ``p^r u`` in ``Z/p^k`` maps onto ``p^s v`` in ``Z/p^l`` under some homomorphism."""
    if not (0 <= r < k and 0 <= s < l):
        raise ValueError(f"need r < k and s < l, got ({r},{k}) -> ({s},{l})")
    return r <= s and k - r >= l - s


def points_up_to(bound: int) -> list[FundamentalPoint]:
    return [FundamentalPoint(r, k) for k in range(1, bound + 1) for r in range(k)]


@dataclass(frozen=True)
class OrderIdeal:
    generators: frozenset

    def __contains__(self, point: FundamentalPoint) -> bool:
        return any(point <= g for g in self.generators)

    def members(self, bound: int | None = None) -> frozenset:
        """Closure restricted to points ``(s, l)`` with ``l <= bound``."""
        if bound is None:
            bound = max((g.k for g in self.generators), default=0)
        return frozenset(x for x in points_up_to(bound) if x in self)

    def maximal(self) -> frozenset:
        return frozenset(g for g in self.generators if not any(g < h for h in self.generators))

    def is_downward_closed(self, bound: int) -> bool:
        mem = self.members(bound)
        return all(y in mem for x in mem for y in points_up_to(bound) if y <= x)


def ideal_of(g: GroupElement) -> OrderIdeal:
    G = g.group
    gens = frozenset(
        FundamentalPoint(valuation(c, G.p, lam), lam)
        for c, lam in zip(g.coords, G.exponents)
        if c
    )
    return OrderIdeal(gens)


def degenerates_general(a: GroupElement, b: GroupElement) -> bool:
    """Ideal test: ``a`` degenerates to ``b`` iff I(b) is contained in I(a)."""
    if a.group.p != b.group.p:
        raise ValueError("elements of groups over different primes")
    bound = max(a.group.exponent, b.group.exponent)
    return ideal_of(b).members(bound) <= ideal_of(a).members(bound)


# homomorphisms


@dataclass(frozen=True)
class GroupHom:
    """Homomorphism given by the images of the standard generators."""

    source: PGroup
    target: PGroup
    images: tuple[tuple[int, ...], ...]

    def __call__(self, g: GroupElement) -> GroupElement:
        coords = [0] * self.target.rank
        for a, img in zip(g.coords, self.images):
            for j, y in enumerate(img):
                coords[j] += a * y
        return GroupElement(self.target, coords)

    def is_additive(self) -> bool:
        """Check well-definedness on the relations ``p^l_i e_i = 0``."""
        return all(
            all((self.source.moduli[i] * y) % m == 0 for y, m in zip(img, self.target.moduli))
            for i, img in enumerate(self.images)
        )


def hom_count(G: PGroup, H: PGroup) -> int:
    n = 1
    for e in G.exponents:
        n *= H.torsion_size(e)
    return n


def iter_homs(G: PGroup, H: PGroup, budget: int = DEFAULT_HOM_BUDGET) -> Iterator[GroupHom]:
    if G.p != H.p:
        raise ValueError("homomorphisms are only enumerated between groups over one prime")
    n = hom_count(G, H)
    if n > budget:
        raise BudgetExceeded(f"Hom({G}, {H}) has {n} maps, budget is {budget}")
    per_gen = [list(H.torsion(e)) for e in G.exponents]
    for images in product(*per_gen):
        yield GroupHom(G, H, images)


@lru_cache(maxsize=256)
def _hom_list(G: PGroup, H: PGroup, budget: int) -> tuple[GroupHom, ...]:
    homs = tuple(iter_homs(G, H, budget))
    for f in homs:
        assert f.is_additive(), f
    return homs


def enumerate_homs(G: PGroup, H: PGroup, budget: int = DEFAULT_HOM_BUDGET) -> list[GroupHom]:
    """All homomorphisms ``G -> H``, sorted by generator-image tuple."""
    return list(_hom_list(G, H, budget))


def exists_hom_mapping(a: GroupElement, b: GroupElement, budget: int = DEFAULT_HOM_BUDGET) -> bool:
    """Brute force: is there a homomorphism sending ``a`` to ``b``?"""
    if a.group.p != b.group.p:
        raise ValueError("elements of groups over different primes")
    if b.is_zero():
        return True
    return any(f(a) == b for f in _hom_list(a.group, b.group, budget))

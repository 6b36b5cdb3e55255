# %% orbits of Z/16 under its unit group
from anngraphs.groups import (PGroup, all_orbits, annihilator_exponent, degenerates_cyclic,
                              degenerates_general, exists_hom_mapping, ideal_of)

G = PGroup.cyclic(2, 4)
for oid, els in all_orbits(G):
    print(f"valuation {oid.i}: {[g.coords[0] for g in els]}")

# %% annihilator exponents: [a:G] = 2^e Z
for x in (1, 2, 4, 6, 8, 0):
    print(x, annihilator_exponent(G.element(x)))

# %% cyclic degeneration: p^r in Z/p^k maps onto p^s in Z/p^l
print(degenerates_cyclic(1, 3, 2, 4))   # 2 in Z/8 -> 4 in Z/16
print(degenerates_cyclic(0, 2, 0, 3))   # a unit of Z/4 never reaches a unit of Z/8

# %% brute force agrees
a, b = PGroup.cyclic(2, 3).element(2), PGroup.cyclic(2, 4).element(4)
print(exists_hom_mapping(a, b))

# %% higher rank: compare order ideals
G = PGroup(2, (2, 1))
a, b = G.element(2, 1), G.element(2, 0)
print(sorted((x.r, x.k) for x in ideal_of(a).members()))
print(sorted((x.r, x.k) for x in ideal_of(b).members()))
print(degenerates_general(a, b), exists_hom_mapping(a, b))
print(degenerates_general(b, a), exists_hom_mapping(b, a))

# %% realized lattice for primes 2,3,5 up to order 32
from anngraphs.lattice import build_lattice, export_hasse, full_threshold_lattice, le, rank_gf_check
from anngraphs.partitions import majorizes

L = build_lattice([2, 3, 5], 32)
for n in L.nodes:
    print(n.q, n.label(), n.witnesses)

# %% Z/8 and Z/9 are incomparable under containment
z8, z9 = L.witness(2, 3), L.witness(3, 2)
print(le(z8, z9), le(z9, z8))

# %% but Z/8's degrees majorize Z/9's
print(majorizes((8, 4, 2, 1, 1, 1, 1), (8, 2, 2, 1, 1, 1, 1, 1, 1)))

# %% Hasse diagram, pipe into graphviz to draw
print(export_hasse(L))

# %% level sizes of the full lattice follow prod(1 + z^t)
rep = rank_gf_check(full_threshold_lattice(12), 12)
print([(r["q"], r["lattice"]) for r in rep["rows"]])

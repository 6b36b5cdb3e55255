# %% the annihilator graph of Z/16
import numpy as np

from anngraphs.anngraph import (build_graph, creation_sequence, degree_partition,
                                laplacian_multiplicity_exact, laplacian_spectrum)
from anngraphs.groups import PGroup
from anngraphs.partitions import conjugate, is_threshold_eigen_partition, shifted_division

g = build_graph(PGroup.cyclic(2, 4))
deg = degree_partition(g)
print("degrees  ", deg)
print("conjugate", conjugate(deg))

# %% it is a threshold graph; the code reads isolated=0, dominating=1
seq = creation_sequence(g)
print("".join(map(str, seq.code)), seq.matches(g))

# %% spectrum = conjugate degree partition plus a zero
spec = laplacian_spectrum(g)
print(spec)
lap = np.diag(g.degrees()) - g.adjacency.astype(float)
print(np.round(np.sort(np.linalg.eigvalsh(lap))[::-1], 6))

# %% exact multiplicities, rank of L - lam*I over Q
for lam, m in spec.multiplicities().items():
    print(lam, m, laplacian_multiplicity_exact(g, lam))

# %% the eigenvalue partition is a threshold partition
pi = spec.nonzero()
print(is_threshold_eigen_partition(pi, deg))
print(shifted_division(pi))

# %% supports across primes; note Z/2 and Z/4 lack 1 and 2
for p, k in [(2, 1), (2, 2), (2, 3), (3, 1), (3, 3), (5, 2)]:
    print(f"{p}^{k}", sorted(laplacian_spectrum(build_graph(PGroup.cyclic(p, k))).support()))

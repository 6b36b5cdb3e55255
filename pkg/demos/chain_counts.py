# %% saturated chains: product formula against a DFS
from anngraphs.lattice import (chain_count_for_graph, count_chains_dfs, count_chains_shifted_dfs,
                               full_threshold_lattice, resolve_convention, schur_chain_count,
                               threshold_partition)
from anngraphs.partitions import strict_partitions_of

for lam in strict_partitions_of(9):
    print(tuple(lam), schur_chain_count(lam), count_chains_shifted_dfs(lam))

# %% which strict parts to feed the formula: pi_i - i or pi_i - i + 1
res = resolve_convention(10)
print(res["winners"], res["agree"])
print(res["disagree"]["minus-i-plus-1"][:4])

# %% chain counts for the graphs of Z/2^k
L = full_threshold_lattice(20)
for k in range(1, 4):
    pi = threshold_partition(2, k)
    print(k, pi, chain_count_for_graph(pi), count_chains_dfs(L, pi))

# %% larger ones only through the formula
print(chain_count_for_graph(threshold_partition(2, 6)))

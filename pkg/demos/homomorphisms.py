# %% group homs Z/8 -> Z/16 as vertex maps of annihilator graphs
from anngraphs.anngraph import build_graph
from anngraphs.groups import PGroup, enumerate_homs
from anngraphs.homsearch import (graph_degenerates, is_graph_hom, non_additive_graph_hom,
                                 verify_group_homs_are_graph_homs, vertex_map)

G, H = PGroup.cyclic(2, 3), PGroup.cyclic(2, 4)
g1, g2 = build_graph(G), build_graph(H)
for f in enumerate_homs(G, H):
    print("1 ->", f.images[0][0], is_graph_hom(g1, g2, vertex_map(f, g1, g2)))

# %% only injective homs keep every edge; the rest contract the edge at 0
rep = verify_group_homs_are_graph_homs(2, 3, 4)
print({k: rep[k] for k in ("homs", "graph_homs", "injective", "collapse_tolerant")})

# %% a graph hom that is not additive
phi, (x, y) = non_additive_graph_hom(2, 2, 3)
a = build_graph(PGroup.cyclic(2, 2))
print([str(a.elements[i]) for i in range(a.n)], "->", phi, "fails at", str(a.elements[x]), str(a.elements[y]))

# %% degeneration of whole graphs
print(graph_degenerates(build_graph(PGroup.cyclic(2, 3)), build_graph(PGroup.cyclic(2, 5))))

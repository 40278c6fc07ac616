# %% [markdown]
# # Local similarity measures on small graphs
#
# Every measure scores existing edges. The baselines are symmetric; NDES is
# not, because each direction is normalized by its source node's largest
# neighborhood density.

# %%
from ndes import Graph, MeasureId, rho, score_all_edges
from ndes.similarity import rho_terms

triangle = Graph.from_edges([(0, 1), (1, 2), (0, 2)], labels="abc")
k4 = Graph.from_edges([(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)], labels="abcd")

# %% [markdown]
# The density of an edge adds up five counts: common neighbors, their overlap
# with each endpoint, links among the common neighbors, and the neighbors those
# linked pairs share.

# %%
for name, g in [("triangle", triangle), ("K4", k4)]:
    print(f"{name:8s} terms={rho_terms(g, 0, 1)} rho={rho(g, 0, 1)}")

# %%
for m in MeasureId:
    s = score_all_edges(k4, m)
    print(f"{m.value:24s} directed={s.directed!s:5s} a-b={s[0, 1]:.4f}")

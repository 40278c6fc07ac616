# %% [markdown]
# # Direction matters
#
# Node `a` hangs off a 4-clique through `b` and `c`. Seen from `a`, the edge
# a-b is its strongest tie. Seen from `b`, it is weak next to b's edges inside
# the clique.

# %%
from ndes import Graph, information, ndes, rho_scores

g = Graph.from_edges(
    [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4), (0, 1), (0, 2)],
    labels=["a", "b", "c", "d", "e"],
)
r = rho_scores(g)
info = information(g, r)

for x in range(g.node_count):
    print(f"I({g.label_of(x)}) = {info[x]}")

# %%
a, b = g.index_of("a"), g.index_of("b")
print("rho(a,b) =", r[a, b])
print("NDES(a->b) =", ndes(g, a, b, info, r))
print("NDES(b->a) =", ndes(g, b, a, info, r))

# %% [markdown]
# Scaling every density by the same constant leaves NDES unchanged.

# %%
from ndes.similarity import ndes_from_rho

print((ndes_from_rho(g, r).values == ndes_from_rho(g, r.scaled(1000)).values).all())

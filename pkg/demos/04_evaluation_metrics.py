# %% [markdown]
# # Accuracy and quality metrics
#
# Two triangles joined by one bridge edge make the metrics easy to check by hand.

# %%
from ndes import Partition, ari, conductance, cut_ratio, expansion, modularity, nf1, nmi
from ndes.graph import Graph

g = Graph.from_edges([(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (2, 3)])
natural = Partition.from_labels([0, 0, 0, 1, 1, 1])
lumped = Partition.from_labels([0] * 6)
crossed = Partition.from_labels([0, 1, 0, 1, 0, 1])

# %%
for name, p in [("natural", natural), ("lumped", lumped), ("crossed", crossed)]:
    print(
        f"{name:8s} Q={modularity(g, p):+.4f} cond={conductance(g, p):.4f} "
        f"cut_ratio={cut_ratio(g, p):.4f} expansion={expansion(g, p):.4f}"
    )

# %%
for name, p in [("lumped", lumped), ("crossed", crossed)]:
    print(f"{name:8s} vs natural: NMI={nmi(p, natural):.4f} ARI={ari(p, natural):+.4f} NF1={nf1(p, natural):.4f}")

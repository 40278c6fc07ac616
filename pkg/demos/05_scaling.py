# %% [markdown]
# # Scaling of edge scoring
#
# Random graphs with bounded maximum degree k: NDES work grows linearly in n
# for fixed k. The same timings are available from `ndes bench`.

# %%
from ndes.bench import time_scoring
from ndes.similarity import MeasureId

for row in time_scoring([1000, 4000, 16000], 50, [MeasureId.NDES, MeasureId.JACCARD], seed=0):
    print(f"n={row.n:6d} k={row.k} edges={row.edges:7d} {row.measure.value:8s} {row.seconds:.3f}s")

# %%
for k in (12, 25, 50):
    (row,) = time_scoring([8000], k, [MeasureId.NDES], seed=0)
    print(f"k={k:3d} {row.seconds:.3f}s")

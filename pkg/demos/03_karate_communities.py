# %% [markdown]
# # Community detection on Zachary's karate club
#
# The seed-expansion detector is the same for every measure; only the edge
# scores change. Detected partitions are compared with the 16/18 faction split.

# %%
from ndes import DetectorParams, MeasureId, detect, evaluate, score_all_edges
from ndes.datasets import load_karate
from ndes.metrics import render_markdown

g, truth = load_karate()
print(g, "factions:", truth.sizes.tolist())

# %%
measures = [MeasureId.NDES, MeasureId.JACCARD, MeasureId.SALTON, MeasureId.ADAMIC_ADAR]
for params in (DetectorParams("auto"), DetectorParams("auto", min_community_size=3)):
    reports = []
    for m in measures:
        p = detect(g, score_all_edges(g, m), params)
        reports.append(evaluate(g, p, truth, measure=m.value, dataset=f"karate, min size {params.min_community_size}"))
    print(render_markdown(reports))

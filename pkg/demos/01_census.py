# ---
# jupyter:
#   jupytext:
#     formats: py:percent
#   kernelspec:
#     display_name: Python 3
#     language: python
#     name: python3
# ---

# %% [markdown]
# # Building the census
#
# Each census member is glued from `g + k` tetrahedra. We walk through the
# pipeline on the smallest cases: first the face-pairing graphs, then the
# gluings that survive the search.

# %%
import time

from mgk.census import census_for_graph, enumerate_census
from mgk.graphs import enumerate_graphs, growth_bounds_check
from mgk.isosig import decode_signature
from mgk.triangulation import edge_classes, link_surfaces

# %% [markdown]
# ## Face-pairing graphs
#
# A triangulation's faces pair up along the edges of a connected 4-valent
# multigraph. There are only a handful of these for small `n`.

# %%
for n in range(1, 6):
    rep = growth_bounds_check(n)
    print(f"n={n}: {rep.count:3d} graphs   (upper bound {rep.upper})")

# %%
for G in enumerate_graphs(2):
    print(G)

# %% [markdown]
# ## Two tetrahedra
#
# Every orientable gluing over both graphs is explored. The eight survivors
# all have a single edge of incidence 12 and a genus-2 boundary.

# %%
table = enumerate_census(2)
for sig, g, k in table.records():
    T = decode_signature(sig)
    inc = [e.incidence for e in edge_classes(T)]
    genera = [s.genus for s in link_surfaces(T)]
    print(sig, (g, k), "incidences", inc, "link genera", genera)

# %% [markdown]
# Per graph, the count stays far below the crude `18^n` bound.

# %%
for G in enumerate_graphs(3):
    print(len(census_for_graph(G)), "members over", G)

# %% [markdown]
# ## Timing the first rows of the table

# %%
for n in (2, 3, 4):
    t0 = time.perf_counter()
    counts = enumerate_census(n).counts()
    print(n, counts, f"{time.perf_counter() - t0:.1f}s")

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
# # Turaev-Viro values across the census
#
# With only `k + 1` edge classes the state sum is tiny, so it runs over the
# whole census in seconds. Inside a cell the values coincide; across cells
# some of them collide too.

# %%
from mgk.census import enumerate_census
from mgk.isosig import decode_signature
from mgk.turaev_viro import TVParams, tv_value

tables = {n: enumerate_census(n) for n in (2, 3, 4)}

# %%
for r in (3, 4, 5, 6):
    row = {}
    for n, table in tables.items():
        for cell, sigs in table.cells.items():
            vals = {round(tv_value(decode_signature(s), TVParams(r)), 9) for s in sigs}
            row[cell] = vals
    print(f"r={r}", {c: sorted(v) for c, v in row.items()})

# %% [markdown]
# Changing the root of unity to its conjugate leaves the real values alone.

# %%
sig = tables[3].cells[(3, 0)][0]
T = decode_signature(sig)
print([round(tv_value(T, TVParams(7, j)), 12) for j in (1, 13, 3, 11)])

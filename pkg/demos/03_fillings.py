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
# # Dehn fillings of the cusps
#
# Slopes live in the basis where the theta graph on each cusp torus has
# slopes 0, 1 and infinity. Six slopes per cusp are exceptional.

# %%
from collections import Counter
from itertools import product

from mgk.filling import (S, Slope, classify_filling, delta_neg_table, exceptional_slopes,
                         farey_distance)

D, A = exceptional_slopes()
print("boundary-reducing:", sorted(map(str, D)))
print("annular:", sorted(map(str, A)))
print(delta_neg_table())

# %% [markdown]
# A sweep over small slopes for a one-cusped member of M_{3,1}.

# %%
verdicts = Counter()
for p, q in product(range(-12, 13), range(0, 13)):
    if (p, q) != (0, 0):
        verdicts[classify_filling(3, 1, [(1, Slope(p, q))]).kind] += 1
print(dict(verdicts))

# %% [markdown]
# Filling both cusps of the (2,2) member: any boundary-reducing slope wins.

# %%
for a, b in [("3", "-2"), ("3", "2"), ("1/2", "0"), ("5/3", "7")]:
    print(a, b, classify_filling(2, 2, [(1, S(a)), (2, S(b))]))

# %%
print(farey_distance(S("2/5"), S("3/7")), farey_distance(S("inf"), S("17")))

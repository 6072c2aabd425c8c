# # Counting Bier spheres up to isomorphism
#
# All complexes on 1..n are enumerated as pairs of down-sets (numpy uint64
# bitmasks).  Isomorphism classes of the spheres are counted after folding
# the complexes into orbits under relabelling of 1..n.

# %%
import time

from bierspheres import all_family_masks, count_bier_isoclasses
from bierspheres.enumeration import count_orbits, family_f_vectors

# %%
for n in range(1, 6):
    print(n, "complexes:", len(all_family_masks(n)))

# %%
# Distribution of vertex counts among the 166 complexes at n = 4.
import numpy as np

f = family_f_vectors(all_family_masks(4), 4)
print(np.bincount(f[:, 1]))

# %%
for n in range(1, 5):
    print(n, "isoclasses:", count_bier_isoclasses(n))

# %%
t0 = time.perf_counter()
print("n = 5:", count_bier_isoclasses(5), f"({time.perf_counter() - t0:.1f}s)")
print("n = 5 restricted:", count_bier_isoclasses(5, "restricted"), "orbits", count_orbits(5, "restricted"))

# # Which g-vectors occur
#
# Every g-vector of a Bier sphere is a K-sequence, and every K-sequence
# is reached.  Here we build a complex for a requested g and look at the
# reduced subcomplex that carries the g-vector as its face counts.

# %%
from bierspheres import delta_prime, g_bier, realize_ksequence
from bierspheres.simplicial import kk_is_ksequence
from bierspheres.sphere import mask_to_set

# %%
target = (1, 3, 2)
D = realize_ksequence(target, 6)
print("facets:", [mask_to_set(m) for m in D.facets])
print("realised g:", g_bier(D, 6))

# %%
# Delta' has f_i = f_i(Delta) - f_(n-i)(Delta) below the middle.
P = delta_prime([[1, 2, 3, 4], [5, 6]], 6)
print("f(Delta') =", P.f_vector())
print("g       =", g_bier([[1, 2, 3, 4], [5, 6]], 6))

# %%
# A K-sequence is the face count of some complex: three vertices carry at most
# three edges, so (1, 3, 3) passes and (1, 3, 4) does not.
for seq in [(1, 3, 3), (1, 3, 4)]:
    print(seq, kk_is_ksequence(seq))

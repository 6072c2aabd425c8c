# # Bier spheres from small complexes
#
# A complex on the ground set 1..n is passed as a list of generating faces.
# The Bier sphere lives on the 2n signed vertices 1-, 1+, ..., n-, n+.

# %%
from bierspheres import bier_complex, bier_facets, chi, g_bier, h_via_restriction, restriction
from bierspheres.sphere import format_facet, level_counts, mask_to_set

# %%
# Three isolated points on 1..4.  The sphere is 2-dimensional with 7 vertices.
S = bier_complex([[1], [2], [3]], 4)
print("f(Delta) =", level_counts(S.delta, 4))
print("f(sphere) =", S.complex.f_vector())
print("vertices used:", S.num_vertices)

# %%
# Facets in the shelling order, each with its restriction interval.
for F in sorted(bier_facets(S.delta, 4), key=chi):
    B, C = restriction(F)
    print(f"{format_facet(F):>12}   restriction [{mask_to_set(B)}, {mask_to_set(C)}]")

# %%
# Counting restriction sizes gives h; g is its first difference up to the middle.
print("h =", h_via_restriction(S.delta, 4))
print("g =", g_bier(S.delta, 4))

# %%
# A different complex with the same g gives a sphere with the same f-vector.
T = bier_complex([[1, 2, 3], [4]], 4)
print(T.complex.f_vector(), g_bier(T.delta, 4))

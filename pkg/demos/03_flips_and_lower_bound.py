# # Growing a complex one face at a time
#
# Adding a face to Delta changes its Bier sphere by a single bistellar flip.
# When g_k = 0 the flips on the way from the simplex boundary all have
# index at most k - 2.

# %%
from bierspheres import add_face_flip, lbc_status

# %%
r = add_face_flip([[1], [2], [3]], 3, [1, 2])
print("flipped face:", r.face, "partner:", r.partner, "index:", r.index)
print(r.report.to_text())

# %%
# n = 6, k = 2: a complex with no edges has g_2 = 0.
st = lbc_status([[1], [2], [3], [4]], 6, 2)
print("g_2 = 0:", st.g_k_zero, " face-count condition:", st.cond2)
for step in st.certificate:
    print(f"  {step.action:6} {step.face}  flip at {step.flip_face}  index {step.index}")

# %%
# An edge breaks it.
st = lbc_status([[1, 2]], 6, 2)
print(st.g_k_zero, st.cond2, st.certificate)

"""Clebsch-Gordan embeddings V_l -> V_l1 (x) V_l2 and their projections."""
# %% selection rule
from qcat import CoproductSide, LinMap, cg_embedding, cg_projections, generator_matrix, sel

l1, l2 = 2, 3
print(f"Sel({l1}, {l2}) =", sel(l1, l2))

# %% the singlet inside V_1 (x) V_1
emb = cg_embedding(0, 1, 1)
print("iota(e0) for V_0 -> V_1 (x) V_1:")
for k, c in enumerate(emb.column(0)):
    print(f"  component {k}: {c}")

# %% every embedding intertwines the generators
for ell in sel(l1, l2):
    e = cg_embedding(ell, l1, l2)
    ok = all(generator_matrix(g, (l1, l2)) @ e == e @ generator_matrix(g, (ell,))
             for g in ("K", "E", "F"))
    print(f"channel {ell}: module map = {ok}")

# %% projections give a resolution of the identity
projs = cg_projections(l1, l2)
total = LinMap.zero((l1, l2), (l1, l2))
for ell, p in projs.items():
    total = total + cg_embedding(ell, l1, l2) @ p
print("sum of iota o pi is identity:", total == LinMap.identity((l1, l2)))

# %% the opposite coproduct uses flipped embeddings
op = cg_embedding(1, 1, 2, CoproductSide.DELTA_OP)
print("op embedding shape:", op.shape)

"""R-matrix, braiding eigenvalues, twist and ribbon balancing."""
# %% the R-matrix on V_1 (x) V_1
from qcat import braid_data, hexagon_check, ribbon_check, rmatrix, twist

r = rmatrix(1, 1)
for row in r.to_strings():
    print("  ", row)

# %% braiding acts by a scalar on each channel
data = braid_data(1, 2)
for ell, lam in sorted(data.eigenvalues.items()):
    print(f"lambda[{ell}; 1, 2] = {lam}")

# %% quasi-triangularity and Yang-Baxter
print("hexagon/YBE on (1, 2, 1):", hexagon_check(1, 2, 1).passed)

# %% twist and balancing
for ell in range(4):
    print(f"theta_{ell} = {twist(ell)}")
print("ribbon on (2, 3):", ribbon_check(2, 3).passed)

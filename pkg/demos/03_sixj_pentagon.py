"""Recoupling (6j) matrices and the pentagon identity."""
# %% a 2x2 recoupling matrix
from qcat import pentagon_check, sixj
from qcat.linalg import det

table = sixj(1, 1, 1, 1)
print("rows m:", table.ms, " columns n:", table.ns)
for (m, n), val in sorted(table.entries.items()):
    print(f"  F[{m},{n}] = {val}")
print("det =", det(table.matrix()))

# %% tables are keyed by strings for export
print(sixj(1, 2, 2, 1).to_json())

# %% pentagon identity on all label tuples up to 2
report = pentagon_check(2)
print("pentagon holds for labels <= 2:", report.passed)

"""Matching quantum-group data with Virasoro first-row modules.

At q = exp(i pi t) the braiding eigenvalues become exp(i pi (h - h1 - h2))
and the twist becomes exp(2 pi i h).
"""
# %% central charge and conformal weights
from fractions import Fraction

from qcat import central_charge, h_weight, kac_first_row_check
from qcat.cli import equivalence_report

t = Fraction(5, 7)
print("c =", central_charge(t))
print("h_l:", [str(h_weight(ell, t)) for ell in range(4)])

# %% the Verma module is reducible at level l + 1
ok, rows = kac_first_row_check(2, t, detail=True)
for row in rows:
    print(row)

# %% numerical comparison of braiding and twist phases
rep = equivalence_report(0.41, 4)
print(f"braiding deviation {rep['braiding_max_dev']:.1e}, twist deviation {rep['twist_max_dev']:.1e}")
print("all checks pass:", rep["pass"])

"""Exact braided tensor category data for U_q(sl2) type-I modules.

Scalars live in Q(v) with v = q^(1/2) (:mod:`qcat.exactfield`).  The package
builds irreps and tensor products (:mod:`qcat.uqsl2_rep`), Clebsch-Gordan maps
(:mod:`qcat.fusion_cg`), 6j-symbols, R-matrix, braiding and twist
(:mod:`qcat.assoc_braid`) and the first-row Virasoro data they are compared
with at q = exp(i pi t) (:mod:`qcat.virasoro`).
"""
from .assoc_braid import (
    BraidData, CheckReport, SixJTable, braid_data, braiding, braiding_eigenvalue, hexagon_check,
    pentagon_check, ribbon_check, rmatrix, sixj, twist,
)
from .exactfield import ONE, Q, V, ZERO, ScalarQ, eval_at, parse_scalar, qfact, qint
from .fusion_cg import cg_embedding, cg_projection, cg_projections, chan, sel
from .linmap import LinMap
from .uqsl2_rep import (
    CoproductSide, Irrep, act_generator, act_tensor, generator_matrix, verify_relations,
)
from .virasoro import (
    b_const, braid_phase, central_charge, fusion_dim, h_weight, kac_first_row_check,
    shapovalov_gram, twist_phase,
)

__version__ = "0.1.0"

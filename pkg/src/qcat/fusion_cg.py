"""Selection rules, Clebsch-Gordan embeddings and the dual projections.

The embedding ``V_l -> V_l1 (x) V_l2`` is fixed on the highest weight vector
by the explicit coefficients in :func:`cg_coefficient` and extended to all of
``V_l`` by ``e_k = F^k e_0``.  For the opposite coproduct the embedding is the
flipped ``Delta`` embedding with the factors exchanged.
"""
from __future__ import annotations

from functools import lru_cache

from . import linalg
from .errors import ConsistencyError
from .exactfield import ONE, ZERO, q_minus_qinv, qfact, v_power
from .linmap import LinMap, word_weights
from .uqsl2_rep import GENERATORS, CoproductSide, generator_matrix, highest_weight_vectors

__all__ = [
    "sel", "chan", "cg_coefficient", "cg_embedding", "cg_projection",
    "cg_projections", "intertwiner_check", "fusion_multiplicity_check",
]


def sel(l1, l2):
    """Labels ``l`` with ``|l1-l2| <= l <= l1+l2`` and ``l+l1+l2`` even, ascending."""
    if l1 < 0 or l2 < 0:
        raise ValueError("labels must be nonnegative")
    return tuple(range(abs(l1 - l2), l1 + l2 + 1, 2))


def chan(l1, l2, l3, l4):
    """``Sel(l1, l2) & Sel(l3, l4)``, ascending."""
    other = set(sel(l3, l4))
    return tuple(l for l in sel(l1, l2) if l in other)


def _check_sel(ell, l1, l2):
    if ell not in sel(l1, l2):
        raise ValueError(f"{ell} is not in Sel({l1}, {l2}) = {sel(l1, l2)}")


def cg_coefficient(ell, l1, l2, j):
    """Coefficient of ``e_j (x) e_{s-j}`` in the image of the highest weight vector."""
    _check_sel(ell, l1, l2)
    s = (l1 + l2 - ell) // 2
    if not 0 <= j <= s:
        raise ValueError(f"j={j} outside 0..{s}")
    c = (qfact(l1 - j) * qfact(l2 - s + j)
         / (qfact(j) * qfact(s - j) * qfact(l1) * qfact(l2)))
    c = c * v_power(2 * j * (l1 - j + 1)) / q_minus_qinv() ** s
    return -c if j % 2 else c


def _intertwines(emb, side):
    for g in GENERATORS:
        left = generator_matrix(g, emb.codomain, side) @ emb
        right = emb @ generator_matrix(g, emb.domain, side)
        if left != right:
            return False
    return True


@lru_cache(maxsize=None)
def _embedding(ell, l1, l2, side):
    if side is CoproductSide.DELTA_OP:
        emb = LinMap.swap((l2,), (l1,)) @ _embedding(ell, l2, l1, CoproductSide.DELTA)
        emb = LinMap._trusted((ell,), (l1, l2), emb.rows)
    else:
        s = (l1 + l2 - ell) // 2
        n = (l1 + 1) * (l2 + 1)
        col = [ZERO] * n
        for j in range(s + 1):
            col[j * (l2 + 1) + (s - j)] = cg_coefficient(ell, l1, l2, j)
        F = generator_matrix("F", (l1, l2), side)
        columns = [col]
        for _ in range(ell):
            columns.append(F.apply(columns[-1]))
        emb = LinMap.from_columns((ell,), (l1, l2), columns)
    if not _intertwines(emb, side):
        raise ConsistencyError(f"CG embedding {ell} -> ({l1}, {l2}) [{side.value}] "
                               "is not a module map")
    return emb


def cg_embedding(ell, l1, l2, side=CoproductSide.DELTA):
    """The module map ``V_ell -> V_l1 (x) V_l2`` (checked to intertwine K, Kinv, E, F)."""
    _check_sel(ell, l1, l2)
    return _embedding(ell, l1, l2, CoproductSide(side))


@lru_cache(maxsize=None)
def _projections(l1, l2, side):
    channels = sel(l1, l2)
    embs = [_embedding(ell, l1, l2, side) for ell in channels]
    # assembled matrix: columns (ell, k); it is block diagonal in the weight
    cols = [(ell, k) for ell in channels for k in range(ell + 1)]
    col_weight = [ell - 2 * k for ell, k in cols]
    row_weight = word_weights((l1, l2))
    n = len(row_weight)
    inv_rows = [[ZERO] * n for _ in range(n)]
    for w in sorted(set(row_weight)):
        rs = [i for i in range(n) if row_weight[i] == w]
        cs = [c for c in range(n) if col_weight[c] == w]
        if len(rs) != len(cs):
            raise ConsistencyError(f"weight {w} block of ({l1}, {l2}) is not square")
        block = [[embs[channels.index(cols[c][0])].rows[i][cols[c][1]] for c in cs] for i in rs]
        try:
            binv = linalg.inverse(block)
        except ZeroDivisionError as exc:
            raise ConsistencyError(f"assembled CG matrix of ({l1}, {l2}) is singular") from exc
        for a, c in enumerate(cs):
            for b, i in enumerate(rs):
                inv_rows[c][i] = binv[a][b]
    out = {}
    start = 0
    for ell in channels:
        out[ell] = LinMap._trusted((l1, l2), (ell,), inv_rows[start:start + ell + 1])
        start += ell + 1
    return out


def cg_projection(ell, l1, l2, side=CoproductSide.DELTA):
    """Projection ``V_l1 (x) V_l2 -> V_ell`` dual to the embeddings.

    ``proj[ell] @ emb[ell'] = delta * id`` and ``sum emb[ell] @ proj[ell] = id``.
    """
    _check_sel(ell, l1, l2)
    return _projections(l1, l2, CoproductSide(side))[ell]


def cg_projections(l1, l2, side=CoproductSide.DELTA):
    return dict(_projections(l1, l2, CoproductSide(side)))


def intertwiner_check(l1, l2, side=CoproductSide.DELTA):
    """Return a list of failure descriptions (empty when everything holds)."""
    side = CoproductSide(side)
    failures = []
    channels = sel(l1, l2)
    embs = {}
    for ell in channels:
        try:
            embs[ell] = cg_embedding(ell, l1, l2, side)
        except ConsistencyError as exc:
            failures.append(str(exc))
            continue
        if linalg.rank(embs[ell].rows) != ell + 1:
            failures.append(f"embedding {ell} -> ({l1}, {l2}) is not injective")
    if failures:
        return failures
    projs = cg_projections(l1, l2, side)
    total = LinMap.zero((l1, l2), (l1, l2))
    for ell in channels:
        for ell2 in channels:
            got = projs[ell] @ embs[ell2]
            want = LinMap.identity((ell,)) if ell == ell2 else LinMap.zero((ell2,), (ell,))
            if got != want:
                failures.append(f"proj {ell} o emb {ell2} wrong on ({l1}, {l2}) [{side.value}]")
        total = total + embs[ell] @ projs[ell]
    if total != LinMap.identity((l1, l2)):
        failures.append(f"completeness fails on ({l1}, {l2}) [{side.value}]")
    return failures


def fusion_multiplicity_check(l1, l2, side=CoproductSide.DELTA):
    """Compare ``Sel(l1, l2)`` with highest weight vectors found by brute force.

    Returns ``(predicted, found)`` as sorted lists of labels with multiplicity.
    """
    found = []
    for w, vecs in highest_weight_vectors((l1, l2), side):
        found.extend([w] * len(vecs))
    return sorted(sel(l1, l2)), sorted(found)

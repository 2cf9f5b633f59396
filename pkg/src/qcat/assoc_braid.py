"""Associator (6j) data, R-matrix, braiding, twist and their coherence checks.

6j-symbols use the opposite-coproduct embeddings.  For fixed labels
``(l1, l2, l3, l4)`` they are the coefficients ``F[m, n]`` in::

    (id (x) i_op[n; l2, l3]) o i_op[l4; l1, n]
        = sum_m F[m, n] (i_op[m; l1, l2] (x) id) o i_op[l4; m, l3]

The associator is the identity on flat coordinates, so this is a change of
basis inside ``Hom(V_l4, V_l1 (x) V_l2 (x) V_l3)``.

The R-matrix acts on ``U (x) W`` (with the ``Delta`` coproduct) as::

    R = q^(H (x) H / 2) sum_n q^(n(n-1)/2) (q - q^-1)^n / [n]! F^n (x) E^n

and the braiding is ``c = P o R``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache

from . import linalg
from .errors import ConsistencyError
from .exactfield import ONE, ZERO, ScalarQ, q_minus_qinv, qfact, v_power
from .fusion_cg import _check_sel, cg_embedding, cg_projection, chan, sel
from .linmap import LinMap, as_word, word_dim, word_weights
from .uqsl2_rep import GENERATORS, CoproductSide, generator_matrix

__all__ = [
    "CheckReport", "SixJTable", "BraidData",
    "sixj", "pentagon_check", "pentagon_failures",
    "rmatrix", "rmatrix_words", "braiding", "braid_data",
    "braiding_eigenvalue", "braiding_eigenvalue_closed_form",
    "hexagon_check", "hexagon_sweep", "twist", "twist_closed_form",
    "twist_inverse_matrix", "ribbon_check", "ribbon_sweep",
]

DELTA = CoproductSide.DELTA
DELTA_OP = CoproductSide.DELTA_OP


@dataclass
class CheckReport:
    check: str
    params: list
    failures: list = field(default_factory=list)

    @property
    def passed(self):
        return not self.failures

    def to_dict(self):
        return {"check": self.check, "params": list(self.params), "pass": self.passed,
                "failures": list(self.failures)}


# -- 6j symbols ---------------------------------------------------------------

@dataclass(frozen=True)
class SixJTable:
    key: tuple
    ms: tuple
    ns: tuple
    entries: dict

    def __getitem__(self, mn):
        return self.entries[mn]

    def get(self, m, n):
        """Entry ``F[m, n]``; zero when either channel is absent."""
        return self.entries.get((m, n), ZERO)

    def matrix(self):
        return [[self.entries[(m, n)] for n in self.ns] for m in self.ms]

    def to_json(self):
        return {f"{m},{n}": str(self.entries[(m, n)]) for m in self.ms for n in self.ns}


def _compose_left(l1, l2, l3, m, l4, vec):
    """``(i_op[m; l1, l2] (x) id_l3)`` applied to a vector in ``V_m (x) V_l3``."""
    emb = cg_embedding(m, l1, l2, DELTA_OP)
    d3 = l3 + 1
    out = [ZERO] * ((l1 + 1) * (l2 + 1) * d3)
    for flat, x in enumerate(vec):
        if not x:
            continue
        k, i3 = divmod(flat, d3)
        for r, val in enumerate(emb.column(k)):
            if val:
                out[r * d3 + i3] = out[r * d3 + i3] + x * val
    return out


def _compose_right(l1, l2, l3, n, vec):
    """``(id_l1 (x) i_op[n; l2, l3])`` applied to a vector in ``V_l1 (x) V_n``."""
    emb = cg_embedding(n, l2, l3, DELTA_OP)
    dn = n + 1
    d23 = (l2 + 1) * (l3 + 1)
    out = [ZERO] * ((l1 + 1) * d23)
    for flat, x in enumerate(vec):
        if not x:
            continue
        i1, k = divmod(flat, dn)
        for r, val in enumerate(emb.column(k)):
            if val:
                out[i1 * d23 + r] = out[i1 * d23 + r] + x * val
    return out


def _left_basis_map(l1, l2, l3, l4, m):
    return (cg_embedding(m, l1, l2, DELTA_OP).kron(LinMap.identity((l3,)))
            @ cg_embedding(l4, m, l3, DELTA_OP))


def _right_basis_map(l1, l2, l3, l4, n):
    return (LinMap.identity((l1,)).kron(cg_embedding(n, l2, l3, DELTA_OP))
            @ cg_embedding(l4, l1, n, DELTA_OP))


@lru_cache(maxsize=None)
def _sixj(l1, l2, l3, l4, verify):
    ms = chan(l1, l2, l3, l4)
    ns = chan(l2, l3, l1, l4)
    key = (l1, l2, l3, l4)
    if not ms and not ns:
        return SixJTable(key, ms, ns, {})
    if len(ms) != len(ns):
        raise ConsistencyError(f"6j{key}: channel sets {ms} and {ns} differ in size")
    # both sides are module maps out of the cyclic V_l4: compare images of e_0
    lefts = [_compose_left(l1, l2, l3, m, l4, cg_embedding(l4, m, l3, DELTA_OP).column(0))
             for m in ms]
    rights = [_compose_right(l1, l2, l3, n, cg_embedding(l4, l1, n, DELTA_OP).column(0))
              for n in ns]
    support = [i for i in range(len(lefts[0]))
               if any(v[i] for v in lefts) or any(v[i] for v in rights)]
    A = [[v[i] for v in lefts] for i in support]
    B = [[v[i] for v in rights] for i in support]
    X = linalg.solve_consistent(A, B)
    entries = {(m, n): X[a][b] for a, m in enumerate(ms) for b, n in enumerate(ns)}
    if verify:
        for n in ns:
            combo = LinMap.zero((l4,), (l1, l2, l3))
            for m in ms:
                combo = combo + _left_basis_map(l1, l2, l3, l4, m).scale(entries[(m, n)])
            if combo != _right_basis_map(l1, l2, l3, l4, n):
                raise ConsistencyError(f"6j{key}: full-map postcheck failed for n={n}")
    return SixJTable(key, ms, ns, entries)


def sixj(l1, l2, l3, l4, verify=True):
    """6j table for ``(l1, l2, l3, l4)``; empty when no channel exists.

    With ``verify`` the solved coefficients are checked on the full maps, not
    just on the highest weight vector.
    """
    return _sixj(int(l1), int(l2), int(l3), int(l4), bool(verify))


def _pentagon_tuple(a, b, c, d, e, verify):
    """Biedenharn-Elliott identity for one external labelling.

    For every basis element of ``Hom(V_e, a(b(cd)))`` labelled by ``(x, y)`` and
    every element of ``((ab)c)d`` labelled by ``(u, w)``::

        F[a,b,x,e][u,y] F[u,c,d,e][w,x]
            = sum_z F[b,c,d,y][z,x] F[a,z,d,e][w,y] F[a,b,c,w][u,z]
    """
    F = lambda *k: sixj(*k, verify=verify)
    failures = []
    for x in sel(c, d):
        for y in sel(b, x):
            if e not in sel(a, y):
                continue
            for u in sel(a, b):
                for w in sel(u, c):
                    if e not in sel(w, d):
                        continue
                    lhs = F(a, b, x, e).get(u, y) * F(u, c, d, e).get(w, x)
                    rhs = ZERO
                    for z in sel(b, c):
                        if y not in sel(z, d) or w not in sel(a, z):
                            continue
                        rhs = rhs + (F(b, c, d, y).get(z, x) * F(a, z, d, e).get(w, y)
                                     * F(a, b, c, w).get(u, z))
                    if lhs != rhs:
                        failures.append({"labels": [a, b, c, d, e], "x": x, "y": y,
                                         "u": u, "w": w})
    return failures


def pentagon_failures(a, b, c, d, e, verify=True):
    return _pentagon_tuple(a, b, c, d, e, verify)


def pentagon_check(lmax, verify=True):
    """Exact pentagon sweep over all external labels ``a..e <= lmax``."""
    report = CheckReport("pentagon", [lmax])
    for labels in itertools.product(range(lmax + 1), repeat=5):
        report.failures.extend(_pentagon_tuple(*labels, verify))
    return report


# -- R-matrix and braiding -----------------------------------------------------

def _r_coefficient(n):
    return v_power(n * (n - 1)) * q_minus_qinv() ** n / qfact(n)


@lru_cache(maxsize=None)
def _rmatrix_words(left, right):
    F = generator_matrix("F", left, DELTA)
    E = generator_matrix("E", right, DELTA)
    total = LinMap.zero(left + right, left + right)
    Fn, En = LinMap.identity(left), LinMap.identity(right)
    n = 0
    while not (Fn.is_zero() or En.is_zero()):
        total = total + Fn.kron(En).scale(_r_coefficient(n))
        n += 1
        Fn, En = F @ Fn, E @ En
    wl, wr = word_weights(left), word_weights(right)
    cartan = [v_power(a * b) for a in wl for b in wr]
    return LinMap.diagonal(left + right, cartan) @ total


def rmatrix_words(left, right):
    """Action of the universal R-matrix on ``left (x) right`` (both tensor words)."""
    return _rmatrix_words(as_word(left), as_word(right))


def rmatrix(l1, l2):
    return rmatrix_words((l1,), (l2,))


def braiding(l1, l2):
    """``c = P o R : V_l1 (x) V_l2 -> V_l2 (x) V_l1``."""
    return LinMap.swap((l1,), (l2,)) @ rmatrix(l1, l2)


def braiding_eigenvalue_closed_form(ell, l1, l2):
    """``(-1)^s q^(l1 l2/2 - s(l1+l2) + s^2 - s)`` with ``s = (l1+l2-ell)/2``."""
    _check_sel(ell, l1, l2)
    s = (l1 + l2 - ell) // 2
    val = v_power(l1 * l2 - 2 * s * (l1 + l2) + 2 * s * s - 2 * s)
    return -val if s % 2 else val


def braiding_eigenvalue(ell, l1, l2):
    """Scalar by which ``proj[ell; l2, l1] o c o emb[ell; l1, l2]`` acts.

    Computed from the matrices and compared with the closed form; a mismatch
    raises :class:`ConsistencyError`.
    """
    _check_sel(ell, l1, l2)
    m = cg_projection(ell, l2, l1) @ braiding(l1, l2) @ cg_embedding(ell, l1, l2)
    lam = m.scalar_value()
    if lam is None:
        raise ConsistencyError(f"braiding on channel {ell} of ({l1}, {l2}) is not scalar")
    closed = braiding_eigenvalue_closed_form(ell, l1, l2)
    if lam != closed:
        raise ConsistencyError(f"braiding eigenvalue {lam} != closed form {closed} "
                               f"for ({ell}; {l1}, {l2})")
    return lam


@dataclass(frozen=True)
class BraidData:
    l1: int
    l2: int
    rmatrix: LinMap
    braiding: LinMap
    eigenvalues: dict


def braid_data(l1, l2):
    R = rmatrix(l1, l2)
    c = braiding(l1, l2)
    if c != LinMap.swap((l1,), (l2,)) @ R:
        raise ConsistencyError("braiding differs from P o R")
    return BraidData(l1, l2, R, c, {ell: braiding_eigenvalue(ell, l1, l2) for ell in sel(l1, l2)})


def _permute_23(l1, l2, l3):
    """``id (x) P : l1 l2 l3 -> l1 l3 l2``."""
    return LinMap.identity((l1,)).kron(LinMap.swap((l2,), (l3,)))


def hexagon_check(l1, l2, l3):
    """Quasi-triangularity and Yang-Baxter on ``V_l1 (x) V_l2 (x) V_l3``."""
    report = CheckReport("hexagon", [l1, l2, l3])
    R12 = rmatrix(l1, l2).kron(LinMap.identity((l3,)))
    R23 = LinMap.identity((l1,)).kron(rmatrix(l2, l3))
    R13 = (_permute_23(l1, l3, l2) @ rmatrix(l1, l3).kron(LinMap.identity((l2,)))
           @ _permute_23(l1, l2, l3))
    if rmatrix_words((l1, l2), (l3,)) != R13 @ R23:
        report.failures.append("(Delta x id)(R) != R13 R23")
    if rmatrix_words((l1,), (l2, l3)) != R13 @ R12:
        report.failures.append("(id x Delta)(R) != R13 R12")
    if R12 @ R13 @ R23 != R23 @ R13 @ R12:
        report.failures.append("R12 R13 R23 != R23 R13 R12")
    c = braiding(l1, l2)
    for g in GENERATORS:
        if c @ generator_matrix(g, (l1, l2)) != generator_matrix(g, (l2, l1)) @ c:
            report.failures.append(f"braiding does not commute with {g}")
    return report


def hexagon_sweep(lmax):
    report = CheckReport("hexagon", [lmax])
    for labels in itertools.product(range(lmax + 1), repeat=3):
        sub = hexagon_check(*labels)
        report.failures.extend(f"{list(labels)}: {f}" for f in sub.failures)
    return report


# -- twist ---------------------------------------------------------------------

@lru_cache(maxsize=None)
def _twist_inverse_matrix(word):
    E = generator_matrix("E", word, DELTA)
    F = generator_matrix("F", word, DELTA)
    Kinv = generator_matrix("Kinv", word, DELTA)
    weights = word_weights(word)
    # (-1)^H K, and q^(-H^2/2) = v^(-w^2) on weight w
    front = LinMap.diagonal(word, [(-1 if w % 2 else 1) * v_power(2 * w) for w in weights])
    gauss = LinMap.diagonal(word, [v_power(-w * w) for w in weights])
    step = (Kinv @ E).scale(-ONE)
    total = LinMap.zero(word, word)
    Fn = LinMap.identity(word)
    left = LinMap.identity(word)
    n = 0
    while not Fn.is_zero():
        total = total + (left @ gauss @ Fn).scale(_r_coefficient(n))
        n += 1
        Fn = F @ Fn
        left = step @ left
    return front @ total


def twist_inverse_matrix(word):
    """``theta^-1`` acting on a tensor word through the ``Delta`` coproduct."""
    return _twist_inverse_matrix(as_word(word))


def twist_closed_form(ell):
    val = v_power(ell * (ell + 2))
    return -val if ell % 2 else val


def twist(ell):
    """Scalar by which the twist acts on ``V_ell``; must equal ``(-1)^ell q^(ell(ell+2)/2)``."""
    inv = twist_inverse_matrix((ell,)).scalar_value()
    if inv is None or not inv:
        raise ConsistencyError(f"theta^-1 is not a nonzero scalar on V_{ell}")
    theta = inv.inverse()
    if theta != twist_closed_form(ell):
        raise ConsistencyError(f"twist on V_{ell} is {theta}, expected {twist_closed_form(ell)}")
    return theta


def ribbon_check(l1, l2):
    """Balancing ``theta_{l1 l2} = (theta_l1 (x) theta_l2) c_{l2,l1} c_{l1,l2}``.

    Checked as a matrix identity (without inverting ``theta^-1``) and channel
    by channel through the braiding eigenvalues.
    """
    report = CheckReport("ribbon", [l1, l2])
    t1, t2 = twist(l1), twist(l2)
    double = braiding(l2, l1) @ braiding(l1, l2)
    if twist_inverse_matrix((l1, l2)) @ double.scale(t1 * t2) != LinMap.identity((l1, l2)):
        report.failures.append("theta^-1 on the tensor word does not invert the balanced double braid")
    for ell in sel(l1, l2):
        lhs = twist(ell)
        rhs = t1 * t2 * braiding_eigenvalue(ell, l2, l1) * braiding_eigenvalue(ell, l1, l2)
        if lhs != rhs:
            report.failures.append(f"channel {ell}: {lhs} != {rhs}")
    return report


def ribbon_sweep(lmax):
    report = CheckReport("ribbon", [lmax])
    for l1, l2 in itertools.product(range(lmax + 1), repeat=2):
        sub = ribbon_check(l1, l2)
        report.failures.extend(f"[{l1}, {l2}]: {f}" for f in sub.failures)
    return report

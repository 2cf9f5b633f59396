"""First-row Virasoro data and a Shapovalov-form oracle for Verma modules.

With ``c(t) = 13 - 6(t + 1/t)`` the first-row weights are
``h_l(t) = l(l+2) t / 4 - l / 2``.  Exact rational ``t`` (``Fraction``) gives
exact ``c`` and ``h``; floats give floats.

The Gram matrix of the Shapovalov form at level ``N`` is built in the PBW
basis ``L_{-m1} ... L_{-mk} v`` (``m1 >= ... >= mk``, a partition of ``N``),
normal ordering with ``[L_m, L_n] = (m-n) L_{m+n} + (m^3-m)/12 delta_{m+n,0} C``.
"""
from __future__ import annotations

import cmath
import math
import os
from fractions import Fraction
from functools import lru_cache

from . import linalg
from .errors import GammaPoleError, LevelCapExceeded
from .fusion_cg import sel

__all__ = [
    "DEFAULT_LEVEL_CAP", "level_cap", "as_parameter",
    "central_charge", "h_weight", "fusion_dim", "b_const",
    "braid_phase", "twist_phase", "partitions", "shapovalov_gram",
    "kac_determinants", "kac_first_row_check",
]

DEFAULT_LEVEL_CAP = 8
_POLE_TOL = 1e-9


def level_cap():
    """Verma level cap; ``QCAT_LEVEL_CAP`` overrides the default of 8."""
    raw = os.environ.get("QCAT_LEVEL_CAP")
    return int(raw) if raw else DEFAULT_LEVEL_CAP


def as_parameter(t):
    """Accept ``Fraction``, ``int``, ``float`` or a string like ``'3/5'`` / ``'0.41'``."""
    if isinstance(t, str):
        return Fraction(t) if "/" in t else float(t)
    return t


def central_charge(t):
    t = as_parameter(t)
    if t == 0:
        raise ValueError("t must be nonzero")
    if isinstance(t, (int, Fraction)):
        t = Fraction(t)
        return 13 - 6 * (t + 1 / t)
    return 13.0 - 6.0 * (t + 1.0 / t)


def h_weight(ell, t):
    if ell < 0:
        raise ValueError("ell must be nonnegative")
    t = as_parameter(t)
    if isinstance(t, (int, Fraction)):
        return Fraction(ell * (ell + 2), 4) * t - Fraction(ell, 2)
    return ell * (ell + 2) / 4 * t - ell / 2


def fusion_dim(l1, l2, l3):
    """Dimension of the space of intertwining operators: 1 iff ``l3`` in ``Sel(l1, l2)``."""
    return 1 if l3 in sel(l1, l2) else 0


def _log_abs_gamma(x):
    nearest = round(x)
    if nearest <= 0 and abs(x - nearest) < _POLE_TOL:
        raise GammaPoleError(f"Gamma argument {x} is at a pole")
    sign = 1
    if x < 0 and math.ceil(-x) % 2:
        sign = -1
    return math.lgamma(x), sign


def b_const(l1, l2, l3, t):
    """Normalization constant of the intertwining operator of type (l1 l2 -> l3).

    ``1/s! prod_{j=1}^{s} G(1+tj) G(1-t(l1+1-j)) G(1-t(l2+1-j))
    / (G(1+t) G(2-t(2-j+l1+l2-s)))`` with ``s = (l1+l2-l3)/2``; the product
    index also appears in the last Gamma factor.  Evaluated with log-Gamma.
    """
    if l3 not in sel(l1, l2):
        raise ValueError(f"{l3} is not in Sel({l1}, {l2})")
    t = float(as_parameter(t))
    s = (l1 + l2 - l3) // 2
    log_total = -math.lgamma(s + 1)
    sign = 1
    for j in range(1, s + 1):
        for x, power in ((1 + t * j, 1), (1 - t * (l1 + 1 - j), 1), (1 - t * (l2 + 1 - j), 1),
                         (1 + t, -1), (2 - t * (2 - j + l1 + l2 - s), -1)):
            lg, sg = _log_abs_gamma(x)
            log_total += power * lg
            sign *= sg
    return sign * math.exp(log_total)


def braid_phase(ell, l1, l2, t):
    """``exp(i pi (h_ell - h_l1 - h_l2))``."""
    if ell not in sel(l1, l2):
        raise ValueError(f"{ell} is not in Sel({l1}, {l2})")
    t = float(as_parameter(t))
    return cmath.exp(1j * math.pi * (h_weight(ell, t) - h_weight(l1, t) - h_weight(l2, t)))


def twist_phase(ell, t):
    """``exp(2 pi i h_ell)``."""
    return cmath.exp(2j * math.pi * h_weight(ell, float(as_parameter(t))))


# -- Shapovalov form -------------------------------------------------------------

@lru_cache(maxsize=None)
def partitions(n):
    """Partitions of ``n`` as non-increasing tuples, in reverse lexicographic order."""
    if n == 0:
        return ((),)
    out = []

    def rec(rest, largest, prefix):
        if rest == 0:
            out.append(tuple(prefix))
            return
        for k in range(min(rest, largest), 0, -1):
            rec(rest - k, k, prefix + [k])

    rec(n, n, [])
    return tuple(out)


class _Verma:
    """Action of Virasoro modes on the PBW basis of a Verma module M(c, h)."""

    def __init__(self, c, h):
        self.c = Fraction(c)
        self.h = Fraction(h)
        self._cache = {}

    def apply(self, n, word):
        """``L_n`` applied to ``L_{-word[0]} L_{-word[1]} ... v``; returns ``{word: coeff}``."""
        key = (n, word)
        hit = self._cache.get(key)
        if hit is not None:
            return hit
        if not word:
            if n > 0:
                out = {}
            elif n == 0:
                out = {(): self.h} if self.h else {}
            else:
                out = {(-n,): Fraction(1)}
        elif n < 0 and -n >= word[0]:
            out = {(-n,) + word: Fraction(1)}
        else:
            m, rest = word[0], word[1:]
            out = {}
            # L_n L_{-m} R = L_{-m} L_n R + (n+m) L_{n-m} R + c/12 (n^3-n) delta_{n,m} R
            for w, a in self.apply(n, rest).items():
                for w2, b in self.apply(-m, w).items():
                    out[w2] = out.get(w2, 0) + a * b
            if n + m:
                for w, a in self.apply(n - m, rest).items():
                    out[w] = out.get(w, 0) + (n + m) * a
            if n == m:
                central = self.c * Fraction(n ** 3 - n, 12)
                if central:
                    out[rest] = out.get(rest, 0) + central
            out = {w: a for w, a in out.items() if a}
        self._cache[key] = out
        return out

    def pair(self, lam, mu):
        """``<L_{-lam} v, L_{-mu} v>`` with ``L_n^dagger = L_{-n}``."""
        state = {mu: Fraction(1)}
        for k in lam:
            new = {}
            for w, a in state.items():
                for w2, b in self.apply(k, w).items():
                    new[w2] = new.get(w2, 0) + a * b
            state = {w: a for w, a in new.items() if a}
        return state.get((), Fraction(0))


def shapovalov_gram(c, h, level):
    """Exact Gram matrix of the Shapovalov form on level ``level`` of M(c, h)."""
    cap = level_cap()
    if level > cap:
        raise LevelCapExceeded(f"level {level} exceeds the cap {cap} (set QCAT_LEVEL_CAP)")
    if level < 0:
        raise ValueError("level must be nonnegative")
    verma = _Verma(c, h)
    basis = partitions(level)
    return [[verma.pair(lam, mu) for mu in basis] for lam in basis]


def kac_determinants(ell, t):
    """Gram determinants of M(c(t), h_ell(t)) at levels ``0 .. ell+1``."""
    t = Fraction(as_parameter(t))
    if ell + 1 > level_cap():
        raise LevelCapExceeded(f"level {ell + 1} exceeds the cap {level_cap()}")
    c, h = central_charge(t), h_weight(ell, t)
    out = []
    for n in range(ell + 2):
        gram = shapovalov_gram(c, h, n)
        out.append(linalg.det(gram) if gram else Fraction(1))
    return out


def kac_first_row_check(ell, t, detail=False):
    """True iff the level ``ell+1`` Shapovalov determinant vanishes exactly.

    Lower levels are reported in the detailed result but do not decide the
    outcome: rational ``t`` can make them vanish by coincidence.
    """
    dets = kac_determinants(ell, t)
    ok = dets[ell + 1] == 0
    if not detail:
        return ok
    return ok, [{"ell": ell, "level": n, "det_zero": d == 0} for n, d in enumerate(dets)]

"""Type-I irreducible representations of U_q(sl2) and their tensor products.

On ``V_l`` with basis ``e_0 .. e_l``::

    K e_i = q^(l-2i) e_i,   E e_i = [i][l-i+1] e_{i-1},   F e_i = e_{i+1}

with out-of-range vectors read as zero.  Tensor words carry the iterated
coproduct, either ``Delta``::

    Delta(K) = K (x) K,  Delta(E) = E (x) 1 + K (x) E,  Delta(F) = F (x) K^-1 + 1 (x) F

or its flip ``Delta_op``.  Iteration runs left to right; by coassociativity the
bracketing does not matter.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

from . import linalg
from .exactfield import ONE, ZERO, q_minus_qinv, qint, v_power
from .linmap import LinMap, TensorWord, as_word, word_dim, word_weights

__all__ = [
    "CoproductSide", "GENERATORS", "Irrep", "TensorWord", "LinMap",
    "generator_matrix", "act_generator", "act_tensor", "verify_relations",
    "highest_weight_vectors",
]

GENERATORS = ("K", "Kinv", "E", "F")


class CoproductSide(Enum):
    DELTA = "delta"
    DELTA_OP = "delta_op"


@dataclass(frozen=True)
class Irrep:
    ell: int

    def __post_init__(self):
        if self.ell < 0:
            raise ValueError(f"irrep label must be nonnegative, got {self.ell}")

    @property
    def dim(self):
        return self.ell + 1

    def weight(self, i):
        return self.ell - 2 * i


def _irrep_matrix(gen, ell):
    n = ell + 1
    rows = [[ZERO] * n for _ in range(n)]
    for i in range(n):
        if gen == "K":
            rows[i][i] = v_power(2 * (ell - 2 * i))
        elif gen == "Kinv":
            rows[i][i] = v_power(-2 * (ell - 2 * i))
        elif gen == "E":
            if i > 0:
                rows[i - 1][i] = qint(i) * qint(ell - i + 1)
        elif gen == "F":
            if i < ell:
                rows[i + 1][i] = ONE
        else:
            raise ValueError(f"unknown generator {gen!r}")
    return LinMap._trusted((ell,), (ell,), rows)


def generator_matrix(gen, word, side=CoproductSide.DELTA):
    """Matrix of ``gen`` acting on a tensor word through the iterated coproduct."""
    if gen not in GENERATORS:
        raise ValueError(f"unknown generator {gen!r}")
    return _generator_matrix(gen, as_word(word), CoproductSide(side))


@lru_cache(maxsize=None)
def _generator_matrix(gen, word, side):
    if not word:
        # counit: epsilon(K) = 1, epsilon(E) = epsilon(F) = 0
        return LinMap.identity(()) if gen in ("K", "Kinv") else LinMap.zero((), ())
    if len(word) == 1:
        return _irrep_matrix(gen, word[0])
    head, last = word[:-1], word[-1:]
    mat = lambda g, w: _generator_matrix(g, w, side)
    if gen in ("K", "Kinv"):
        return mat(gen, head).kron(mat(gen, last))
    id_h, id_l = LinMap.identity(head), LinMap.identity(last)
    if side is CoproductSide.DELTA:
        if gen == "E":
            return mat("E", head).kron(id_l) + mat("K", head).kron(mat("E", last))
        return mat("F", head).kron(mat("Kinv", last)) + id_h.kron(mat("F", last))
    if gen == "E":
        return id_h.kron(mat("E", last)) + mat("E", head).kron(mat("K", last))
    return mat("Kinv", head).kron(mat("F", last)) + mat("F", head).kron(id_l)


def act_generator(gen, ell, i):
    """Image of the basis vector ``e_i`` of ``V_ell`` under ``gen``."""
    if not 0 <= i <= ell:
        raise IndexError(f"basis index {i} out of range for V_{ell}")
    return generator_matrix(gen, (ell,)).column(i)


def act_tensor(gen, word, side, x):
    word = as_word(word)
    if len(x) != word_dim(word):
        raise ValueError(f"vector of length {len(x)} does not match word {word}")
    return generator_matrix(gen, word, CoproductSide(side)).apply(list(x))


def verify_relations(word, side=CoproductSide.DELTA):
    """Check the defining relations of U_q(sl2) as exact matrix identities.

    Returns ``{relation: bool}``.
    """
    word = as_word(word)
    K, Ki, E, F = (generator_matrix(g, word, side) for g in GENERATORS)
    one = LinMap.identity(word)
    q2 = v_power(4)
    return {
        "K Kinv = 1": K @ Ki == one,
        "Kinv K = 1": Ki @ K == one,
        "K E = q^2 E K": K @ E == (E @ K).scale(q2),
        "K F = q^-2 F K": K @ F == (F @ K).scale(q2.inverse()),
        "EF - FE = (K - Kinv)/(q - q^-1)":
            E @ F - F @ E == (K - Ki).scale(q_minus_qinv().inverse()),
    }


def highest_weight_vectors(word, side=CoproductSide.DELTA):
    """Exact bases of ``ker E`` on each K-eigenspace of a tensor word.

    Returns a list of ``(weight, [vectors])`` over every occurring weight,
    highest first.  At generic q the number of vectors at weight ``w`` is the
    multiplicity of ``V_w`` in the word.
    """
    word = as_word(word)
    E = generator_matrix("E", word, side)
    weights = word_weights(word)
    out = []
    for w in sorted(set(weights), reverse=True):
        cols = [j for j, wj in enumerate(weights) if wj == w]
        rows = [i for i, wi in enumerate(weights) if wi == w + 2]
        if not rows:
            kernel = [[ONE if k == c else ZERO for k in range(len(cols))] for c in range(len(cols))]
        else:
            sub = [[E.rows[i][j] for j in cols] for i in rows]
            kernel = linalg.nullspace(sub, len(cols))
        vectors = []
        for kv in kernel:
            full = [ZERO] * len(weights)
            for j, x in zip(cols, kv):
                full[j] = x
            vectors.append(full)
        out.append((w, vectors))
    return out

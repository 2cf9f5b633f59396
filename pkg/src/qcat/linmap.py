"""Linear maps between tensor words of irreps, with exact entries.

A tensor word is a tuple of irrep labels ``(l1, ..., lk)``; the empty word is
the one-dimensional unit.  Basis vector ``(i1, ..., ik)`` sits at flat index
``sum_j i_j * prod_{j' > j} (l_j' + 1)``, leftmost factor most significant,
which is also the ordering produced by :meth:`LinMap.kron`.
"""
from __future__ import annotations

import itertools
import math

from .exactfield import ONE, ZERO, ScalarQ

__all__ = ["TensorWord", "word_dim", "word_weights", "flat_index", "multi_index", "LinMap"]

TensorWord = tuple


def as_word(word):
    if isinstance(word, int):
        word = (word,)
    word = tuple(int(x) for x in word)
    if any(x < 0 for x in word):
        raise ValueError(f"irrep labels must be nonnegative, got {word}")
    return word


def word_dim(word):
    return math.prod(l + 1 for l in word)


def flat_index(word, idx):
    out = 0
    for l, i in zip(word, idx):
        if not 0 <= i <= l:
            raise IndexError(f"basis index {idx} out of range for word {word}")
        out = out * (l + 1) + i
    return out


def multi_index(word, flat):
    idx = []
    for l in reversed(word):
        flat, i = divmod(flat, l + 1)
        idx.append(i)
    return tuple(reversed(idx))


def word_weights(word):
    """Total K-weight (exponent of q) of every flat basis vector."""
    return [sum(l - 2 * i for l, i in zip(word, idx))
            for idx in itertools.product(*(range(l + 1) for l in word))]


class LinMap:
    """Matrix over Q(v) from ``domain`` word to ``codomain`` word.

    ``rows`` has ``word_dim(codomain)`` rows of ``word_dim(domain)`` entries.
    """

    __slots__ = ("domain", "codomain", "rows", "_nz")

    def __init__(self, domain, codomain, rows):
        self.domain = as_word(domain)
        self.codomain = as_word(codomain)
        rows = [[ScalarQ.coerce(x) for x in row] for row in rows]
        nc, nd = word_dim(self.codomain), word_dim(self.domain)
        if len(rows) != nc or any(len(r) != nd for r in rows):
            raise ValueError(f"matrix shape does not match {self.codomain} <- {self.domain}")
        self.rows = rows
        self._nz = None

    @classmethod
    def _trusted(cls, domain, codomain, rows):
        obj = object.__new__(cls)
        obj.domain, obj.codomain, obj.rows, obj._nz = domain, codomain, rows, None
        return obj

    @classmethod
    def zero(cls, domain, codomain):
        domain, codomain = as_word(domain), as_word(codomain)
        nd = word_dim(domain)
        return cls._trusted(domain, codomain, [[ZERO] * nd for _ in range(word_dim(codomain))])

    @classmethod
    def identity(cls, word):
        word = as_word(word)
        n = word_dim(word)
        return cls._trusted(word, word, [[ONE if i == j else ZERO for j in range(n)]
                                         for i in range(n)])

    @classmethod
    def diagonal(cls, word, diag):
        word = as_word(word)
        n = word_dim(word)
        if len(diag) != n:
            raise ValueError("diagonal length mismatch")
        return cls._trusted(word, word, [[diag[i] if i == j else ZERO for j in range(n)]
                                         for i in range(n)])

    @classmethod
    def swap(cls, left, right):
        """The flip ``P: left (x) right -> right (x) left``, ``u (x) w -> w (x) u``."""
        left, right = as_word(left), as_word(right)
        dl, dr = word_dim(left), word_dim(right)
        n = dl * dr
        rows = [[ZERO] * n for _ in range(n)]
        for a in range(dl):
            for b in range(dr):
                rows[b * dl + a][a * dr + b] = ONE
        return cls._trusted(left + right, right + left, rows)

    @classmethod
    def from_columns(cls, domain, codomain, columns):
        domain, codomain = as_word(domain), as_word(codomain)
        nc = word_dim(codomain)
        if len(columns) != word_dim(domain) or any(len(c) != nc for c in columns):
            raise ValueError("column data does not match words")
        return cls(domain, codomain, [[col[i] for col in columns] for i in range(nc)])

    # -- structure ----------------------------------------------------------
    @property
    def shape(self):
        return len(self.rows), word_dim(self.domain)

    def nonzeros(self):
        """Per row, the list of ``(column, value)`` pairs with nonzero value."""
        if self._nz is None:
            self._nz = [[(j, x) for j, x in enumerate(row) if x] for row in self.rows]
        return self._nz

    def column(self, j):
        return [row[j] for row in self.rows]

    def columns(self):
        return [self.column(j) for j in range(self.shape[1])]

    def apply(self, x):
        if len(x) != self.shape[1]:
            raise ValueError(f"vector of length {len(x)} does not match domain {self.domain}")
        out = []
        for nz in self.nonzeros():
            acc = ZERO
            for j, a in nz:
                if x[j]:
                    acc = acc + a * x[j]
            out.append(acc)
        return out

    def is_zero(self):
        return all(not nz for nz in self.nonzeros())

    def scalar_value(self):
        """If this is ``c * id`` return ``c``; otherwise None."""
        n, m = self.shape
        if n != m:
            return None
        c = self.rows[0][0] if n else ZERO
        for i, nz in enumerate(self.nonzeros()):
            if self.rows[i][i] != c:
                return None
            if any(j != i for j, _ in nz):
                return None
        return c

    # -- algebra ------------------------------------------------------------
    def __matmul__(self, other):
        if not isinstance(other, LinMap):
            return NotImplemented
        if word_dim(self.domain) != word_dim(other.codomain):
            raise ValueError(f"cannot compose {self.codomain}<-{self.domain} with "
                             f"{other.codomain}<-{other.domain}")
        m = other.shape[1]
        bnz = other.nonzeros()
        rows = []
        for anz in self.nonzeros():
            acc = {}
            for k, a in anz:
                for j, b in bnz[k]:
                    t = a * b
                    prev = acc.get(j)
                    acc[j] = t if prev is None else prev + t
            row = [ZERO] * m
            for j, x in acc.items():
                row[j] = x
            rows.append(row)
        return LinMap._trusted(other.domain, self.codomain, rows)

    def __add__(self, other):
        self._check_same(other)
        return LinMap._trusted(self.domain, self.codomain,
                               [[a + b for a, b in zip(r, s)]
                                for r, s in zip(self.rows, other.rows)])

    def __sub__(self, other):
        self._check_same(other)
        return LinMap._trusted(self.domain, self.codomain,
                               [[a - b for a, b in zip(r, s)]
                                for r, s in zip(self.rows, other.rows)])

    def __neg__(self):
        return LinMap._trusted(self.domain, self.codomain, [[-a for a in r] for r in self.rows])

    def scale(self, c):
        c = ScalarQ.coerce(c)
        return LinMap._trusted(self.domain, self.codomain,
                               [[a * c if a else a for a in r] for r in self.rows])

    def __mul__(self, c):
        if isinstance(c, LinMap):
            return NotImplemented
        return self.scale(c)

    __rmul__ = __mul__

    def kron(self, other):
        """Tensor product of maps, ``self (x) other``."""
        n2, m2 = other.shape
        m1 = self.shape[1]
        rows = []
        bnz = other.nonzeros()
        for anz in self.nonzeros():
            for i2 in range(n2):
                row = [ZERO] * (m1 * m2)
                for j1, a in anz:
                    base = j1 * m2
                    for j2, b in bnz[i2]:
                        row[base + j2] = a * b
                rows.append(row)
        return LinMap._trusted(self.domain + other.domain, self.codomain + other.codomain, rows)

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative matrix power")
        out = LinMap.identity(self.domain)
        for _ in range(k):
            out = self @ out
        return out

    def _check_same(self, other):
        if self.shape != other.shape:
            raise ValueError("shape mismatch")

    def __eq__(self, other):
        if not isinstance(other, LinMap):
            return NotImplemented
        return self.shape == other.shape and self.rows == other.rows

    __hash__ = None

    def to_strings(self):
        return [[str(x) for x in row] for row in self.rows]

    def __repr__(self):
        return f"LinMap({self.codomain} <- {self.domain})"

"""Irreducible representations V_n of quantized sl2 and exact R-matrix data.

The (n+1)-dimensional module V_n has basis v~_0, ..., v~_n with
K v~_i = v^(n-2i) v~_i, and the divided powers act by

    e^m v~_i      = {n-i+m}_{q,m} v~_{i-m}
    F~^(m) v~_i   = q^(-mi) binom_q(i+m, m) v~_{i+m}

All matrices here are sparse maps {(row, col): LaurentU}; a missing key
is a zero entry.
"""

from __future__ import annotations

from functools import lru_cache

from .errors import ShapeMismatch
from .laurent import (LaurentU, ONE, falling_q, q_pow, qbinom_q, qnum,
                      u_pow, v_pow)


class IrrepAction:
    """Structure matrices for V_n."""

    def __init__(self, n):
        self.n = n
        self.K = {(i, i): v_pow(n - 2 * i) for i in range(n + 1)}
        self.Kinv = {(i, i): v_pow(2 * i - n) for i in range(n + 1)}

    def e_pow(self, m):
        """Matrix of e^m."""
        n = self.n
        return {(i - m, i): falling_q(n - i + m, m)
                for i in range(m, n + 1)}

    def f_pow(self, m):
        """Matrix of the divided power F~^(m)."""
        n = self.n
        return {(i + m, i): q_pow(-m * i) * qbinom_q(i + m, m)
                for i in range(n - m + 1)}


@lru_cache(maxsize=None)
def irrep(n):
    if n < 0:
        raise ValueError("highest weight must be >= 0")
    return IrrepAction(n)


class RMatrixBlock:
    """Braiding psi: V_m (x) V_n -> V_n (x) V_m as a sparse block.

    entries maps an input pair (i, j) to a tuple of output terms
    (j2, i2, coefficient), meaning the image contains
    coefficient * v~_{j2} (x) v~_{i2} with v~_{j2} in V_n, v~_{i2} in V_m.
    """

    __slots__ = ("m", "n", "sign", "entries")

    def __init__(self, m, n, sign, entries):
        self.m = m
        self.n = n
        self.sign = sign
        self.entries = entries


@lru_cache(maxsize=None)
def braiding(m, n, sign):
    """The braiding block (sign +1) or its inverse (sign -1).

    Both maps go V_m (x) V_n -> V_n (x) V_m.  The positive map comes
    from R composed with the flip, the negative one from the flip
    composed with R^(-1); they are mutually inverse as crossings of
    opposite sign stacked on the same pair of strands.
    """
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    entries = {}
    for i in range(m + 1):
        for j in range(n + 1):
            terms = []
            if sign == 1:
                for t in range(0, min(j, m - i) + 1):
                    c = (u_pow((m - 2 * i - 2 * t) * (n - 2 * j + 2 * t))
                         * q_pow(t * (t - 1) // 2)
                         * v_pow(-t * (m - 2 * i))
                         * q_pow(-t * i)
                         * qbinom_q(i + t, t)
                         * falling_q(n - j + t, t))
                    if not c.is_zero():
                        terms.append((j - t, i + t, c))
            else:
                for t in range(0, min(i, n - j) + 1):
                    c = (u_pow(-(n - 2 * j - 2 * t) * (m - 2 * i + 2 * t))
                         * v_pow(-t * (m - 2 * i + 2 * t))
                         * q_pow(-t * j)
                         * qbinom_q(j + t, t)
                         * falling_q(m - i + t, t))
                    if t % 2:
                        c = -c
                    if not c.is_zero():
                        terms.append((j + t, i - t, c))
            entries[(i, j)] = tuple(terms)
    return RMatrixBlock(m, n, sign, entries)


def qtrace(n, matrix):
    """Quantum trace of a matrix on V_n: sum_i v^(-(n-2i)) M_ii."""
    for (r, c) in matrix:
        if not (0 <= r <= n and 0 <= c <= n):
            raise ShapeMismatch(f"index ({r},{c}) outside V_{n}")
    acc = LaurentU.zero()
    for i in range(n + 1):
        entry = matrix.get((i, i))
        if entry is not None:
            acc = acc + v_pow(2 * i - n) * entry
    return acc


def twist_eigen(n, f):
    """Eigenvalue of the f-th power of the twist on V_n: q^(f n(n+2)/4)."""
    return u_pow(f * n * (n + 2))


def unknot_value(n):
    """J of the 0-framed unknot colored V_n: the balanced integer [n+1]."""
    return qnum(n + 1)

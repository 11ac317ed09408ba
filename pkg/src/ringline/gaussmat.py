"""Exact matrices over the Gaussian integers.

Real and imaginary parts live in separate int64 numpy arrays, so products,
Kronecker products and traces are exact; entries in this package never
leave {0, +-1, +-i} scaled by small powers of two.  Rank is computed over
Q(i) with Fraction arithmetic.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np


class GaussMat:
    def __init__(self, re, im=None):
        self.re = np.asarray(re, dtype=np.int64)
        self.im = (np.zeros_like(self.re) if im is None
                   else np.asarray(im, dtype=np.int64))
        if self.re.shape != self.im.shape:
            raise ValueError("mismatched real/imaginary shapes")

    @classmethod
    def identity(cls, n: int) -> "GaussMat":
        return cls(np.eye(n, dtype=np.int64))

    @classmethod
    def zeros(cls, n: int) -> "GaussMat":
        return cls(np.zeros((n, n), dtype=np.int64))

    @property
    def shape(self):
        return self.re.shape

    def __matmul__(self, other: "GaussMat") -> "GaussMat":
        return GaussMat(self.re @ other.re - self.im @ other.im,
                        self.re @ other.im + self.im @ other.re)

    def __add__(self, other: "GaussMat") -> "GaussMat":
        return GaussMat(self.re + other.re, self.im + other.im)

    def __sub__(self, other: "GaussMat") -> "GaussMat":
        return GaussMat(self.re - other.re, self.im - other.im)

    def __eq__(self, other) -> bool:
        return (isinstance(other, GaussMat)
                and np.array_equal(self.re, other.re)
                and np.array_equal(self.im, other.im))

    def __hash__(self):
        return hash((self.re.tobytes(), self.im.tobytes()))

    def kron(self, other: "GaussMat") -> "GaussMat":
        return GaussMat(np.kron(self.re, other.re) - np.kron(self.im, other.im),
                        np.kron(self.re, other.im) + np.kron(self.im, other.re))

    def times_i_power(self, k: int) -> "GaussMat":
        k %= 4
        if k == 0:
            return self
        if k == 1:
            return GaussMat(-self.im, self.re)
        if k == 2:
            return GaussMat(-self.re, -self.im)
        return GaussMat(self.im, -self.re)

    def scaled(self, c: int) -> "GaussMat":
        return GaussMat(c * self.re, c * self.im)

    def trace(self) -> tuple[int, int]:
        return (int(np.trace(self.re)), int(np.trace(self.im)))

    def conj_transpose(self) -> "GaussMat":
        return GaussMat(self.re.T.copy(), -self.im.T.copy())

    def is_zero(self) -> bool:
        return not self.re.any() and not self.im.any()

    def rank(self) -> int:
        """Exact rank over Q(i) by fraction Gaussian elimination."""
        n, m = self.shape
        rows = [[(Fraction(int(self.re[i, j])), Fraction(int(self.im[i, j])))
                 for j in range(m)] for i in range(n)]
        rank = 0
        col = 0
        while rank < n and col < m:
            pivot = None
            for i in range(rank, n):
                if rows[i][col] != (0, 0):
                    pivot = i
                    break
            if pivot is None:
                col += 1
                continue
            rows[rank], rows[pivot] = rows[pivot], rows[rank]
            pr, pi = rows[rank][col]
            norm = pr * pr + pi * pi
            for i in range(rank + 1, n):
                ar, ai = rows[i][col]
                if (ar, ai) == (0, 0):
                    continue
                # factor = a / p = a * conj(p) / |p|^2
                fr = (ar * pr + ai * pi) / norm
                fi = (ai * pr - ar * pi) / norm
                for j in range(col, m):
                    br, bi = rows[rank][j]
                    cr, ci = rows[i][j]
                    rows[i][j] = (cr - (fr * br - fi * bi),
                                  ci - (fr * bi + fi * br))
            rank += 1
            col += 1
        return rank

    def __repr__(self):
        return f"GaussMat(re={self.re.tolist()}, im={self.im.tolist()})"

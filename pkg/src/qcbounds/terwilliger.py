"""Terwilliger-algebra machinery for the quaternary Hamming scheme.

The non-commutative association scheme refining the Hamming scheme has a
basis of 0/1 matrices indexed by tuples (i, j, t, p): row weight, column
weight, support-intersection size, and agreeing non-identity coordinate
count.  A matrix invariant under the weight-preserving automorphisms is
determined by one coefficient x^{t,p}_{i,j} per tuple, and its positive
semidefiniteness is equivalent to that of a family of small blocks indexed
by pairs (a, k), assembled through the alpha(i,j,t,p,a,k) coefficients.

This module provides the index set, explicit basis matrices at small n
(the oracle route), the block assembly in float and exact Q(sqrt3)
arithmetic, and classification averaging of a dense matrix into an
XVector of coefficients.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from .combinatorics import alpha_coeff, gamma_coeff
from .quadext import QuadExt


class XVector(dict):
    """Map (i, j, t, p) -> coefficient, defined on the admissible index set
    and symmetric under swapping i and j."""

    def validate(self, n: int, q: int = 4, tol: float = 0.0) -> None:
        idx = set(index_set(n, q))
        if set(self.keys()) != idx:
            missing = idx - set(self.keys())
            extra = set(self.keys()) - idx
            raise ValueError(f"XVector keys mismatch: missing={sorted(missing)[:4]}, extra={sorted(extra)[:4]}")
        for (i, j, t, p) in idx:
            d = self[(i, j, t, p)] - self[(j, i, t, p)]
            if abs(float(d)) > tol:
                raise ValueError(f"XVector not symmetric at {(i, j, t, p)}")


def index_set(n: int, q: int = 4) -> list[tuple[int, int, int, int]]:
    """All admissible tuples (i, j, t, p): 0 <= p <= t <= i, j and
    i + j <= t + n, in lexicographic order."""
    if n < 1:
        raise ValueError("n must be positive")
    out = []
    for i in range(n + 1):
        for j in range(n + 1):
            for t in range(min(i, j) + 1):
                if i + j > t + n:
                    continue
                for p in range(t + 1):
                    out.append((i, j, t, p))
    out.sort()
    return out


def block_indices(n: int) -> list[tuple[int, int]]:
    """Pairs (a, k) with 0 <= a <= k <= n + a - k, lexicographic."""
    out = []
    for a in range(n + 1):
        for k in range(a, n + a + 1):
            if k <= n + a - k:
                out.append((a, k))
    return out


def block_side(n: int, a: int, k: int) -> int:
    """Side length of block (a, k); row/column indices run k .. n+a-k."""
    return n + a - 2 * k + 1


def profile_of_digits(xd: tuple[int, ...], yd: tuple[int, ...]) -> tuple[int, int, int, int]:
    """(i, j, t, p) for a pair of digit strings over {0,1,2,3}."""
    i = j = t = p = 0
    for dx, dy in zip(xd, yd):
        if dx:
            i += 1
        if dy:
            j += 1
        if dx and dy:
            t += 1
            if dx == dy:
                p += 1
    return (i, j, t, p)


def _digit_strings(n: int) -> list[tuple[int, ...]]:
    return [tuple((v >> (2 * (n - 1 - m))) & 3 for m in range(n)) for v in range(4**n)]


def basis_matrix(i: int, j: int, t: int, p: int, n: int) -> np.ndarray:
    """Explicit 0/1 basis matrix of size 4^n, rows/columns in lexicographic
    digit-string order.  Oracle route, capped at n <= 3."""
    if n > 3:
        raise ValueError("explicit basis matrices are capped at n <= 3")
    strs = _digit_strings(n)
    N = len(strs)
    M = np.zeros((N, N), dtype=np.int64)
    for xi, xd in enumerate(strs):
        for yi, yd in enumerate(strs):
            if profile_of_digits(xd, yd) == (i, j, t, p):
                M[xi, yi] = 1
    return M


def admissible_tp(i: int, j: int, n: int):
    """(t, p) pairs admissible for fixed (i, j)."""
    for t in range(max(0, i + j - n), min(i, j) + 1):
        for p in range(t + 1):
            yield t, p


def blocks_from_x(x: XVector, n: int, field: str = "float") -> dict[tuple[int, int], object]:
    """Assemble the PSD-equivalent block family from an XVector.

    Block (a, k) has side n+a-2k+1 and entry (i, j), for i,j = k..n+a-k,
    equal to sum over admissible (t, p) of alpha(i,j,t,p,a,k) x^{t,p}_{i,j}.

    field='float' gives numpy arrays (sqrt3 factors folded numerically);
    field='exact' gives nested lists of QuadExt.
    """
    return _assemble_blocks(lambda i, j, t, p: x[(i, j, t, p)], n, field)


def complement_blocks_from_x(x: XVector, n: int, K) -> dict[tuple[int, int], object]:
    """Block family of the complement matrix, built from the coefficients
    (2^n/K) * (x^{0,0}_{i+j-t-p,0} - x^{t,p}_{i,j})."""
    scale = Fraction(2**n, 1) / Fraction(K)

    def coeff(i, j, t, p):
        w = i + j - t - p
        return scale * (x[(w, 0, 0, 0)] - x[(i, j, t, p)])

    return _assemble_blocks(coeff, n, "float")


def _assemble_blocks(coeff, n: int, field: str):
    blocks: dict[tuple[int, int], object] = {}
    for a, k in block_indices(n):
        side = block_side(n, a, k)
        lo, hi = k, n + a - k
        if field == "float":
            B = np.zeros((side, side))
            for i in range(lo, hi + 1):
                for j in range(lo, i + 1):
                    v = 0.0
                    for t, p in admissible_tp(i, j, n):
                        al = alpha_coeff(i, j, t, p, a, k, n)
                        if not al.is_zero():
                            v += float(al) * float(coeff(i, j, t, p))
                    B[i - lo, j - lo] = v
                    B[j - lo, i - lo] = v
            blocks[(a, k)] = B
        elif field == "exact":
            B = [[QuadExt(0) for _ in range(side)] for _ in range(side)]
            for i in range(lo, hi + 1):
                for j in range(lo, i + 1):
                    v = QuadExt(0)
                    for t, p in admissible_tp(i, j, n):
                        al = alpha_coeff(i, j, t, p, a, k, n)
                        if not al.is_zero():
                            v = v + al * coeff(i, j, t, p)
                    B[i - lo][j - lo] = v
                    B[j - lo][i - lo] = v
            blocks[(a, k)] = B
        else:
            raise ValueError(f"unknown field {field!r}")
    return blocks


def average_gamma(Gamma, n: int) -> XVector:
    """Classification average of a dense 4^n x 4^n matrix: sums entries
    over each (i,j,t,p) class and divides by the class size weight.
    Dense oracle route, capped at n <= 3."""
    if n > 3:
        raise ValueError("dense averaging is capped at n <= 3")
    strs = _digit_strings(n)
    lam: dict[tuple[int, int, int, int], object] = {}
    for xi, xd in enumerate(strs):
        for yi, yd in enumerate(strs):
            key = profile_of_digits(xd, yd)
            v = Gamma[xi][yi] if not hasattr(Gamma, "shape") else Gamma[xi, yi]
            lam[key] = lam.get(key, 0) + v
    out = XVector()
    for key in index_set(n):
        i, j, t, p = key
        g = gamma_coeff(i, j, t, p, n)
        v = lam.get(key, 0)
        if isinstance(v, (int, Fraction)):
            out[key] = Fraction(v, 1) / g
        else:
            out[key] = v / g
    return out


def x_from_pauli_words(words: list[int], n: int, K) -> XVector:
    """XVector of the rank-one moment matrix attached to a set of Pauli
    words (indicator vector outer product), normalized so the empty-tuple
    coefficient is 1.

    For a stabilizer group the moment matrix has entry 1 exactly on pairs
    of member words, so the class sums count member pairs per profile.
    """
    digits = [tuple((w >> (2 * m)) & 3 for m in range(n)) for w in words]
    lam: dict[tuple[int, int, int, int], int] = {}
    for xd in digits:
        for yd in digits:
            key = profile_of_digits(xd, yd)
            lam[key] = lam.get(key, 0) + 1
    out = XVector()
    for key in index_set(n):
        i, j, t, p = key
        g = gamma_coeff(i, j, t, p, n)
        out[key] = Fraction(lam.get(key, 0), g)
    return out

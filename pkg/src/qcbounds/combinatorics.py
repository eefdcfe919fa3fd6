"""Exact combinatorial coefficients for the binary and quaternary Hamming schemes.

Provides Krawtchouk polynomials, multinomials, the inner-product weights
gamma^{t,p}_{i,j} of the four-index basis matrices, and the block
diagonalization coefficients alpha(i,j,t,p,a,k) / beta^{m,t}_{i,j,k}.

Everything is exact: integers, Fractions, or elements of Q(sqrt3).  The
alpha coefficients carry a single sqrt(3) factor exactly when i+j is odd
(the exponent (q-1)^{(i+j)/2-t} is half-integral there); all consumers
either stay inside Q(sqrt3) or convert to float at the solver boundary.

Binomial convention: C(n, k) = 0 unless 0 <= k <= n, so empty or
out-of-range sums vanish term by term.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .quadext import ONE, QuadExt, sqrt3_pow


def binom(n: int, k: int) -> int:
    """Binomial coefficient with the zero-outside-range convention."""
    if k < 0 or n < 0 or k > n:
        return 0
    return comb(n, k)


def multinomial(n: int, parts: tuple[int, ...]) -> int:
    """n! / (a_1! ... a_r! (n - sum a_l)!), zero when any part or the
    remainder is negative."""
    if n < 0:
        return 0
    rest = n
    out = 1
    for a in parts:
        if a < 0 or a > rest:
            return 0
        out *= comb(rest, a)
        rest -= a
    return out


@lru_cache(maxsize=None)
def krawtchouk(j: int, i: int, n: int, q: int = 4) -> int:
    """Krawtchouk polynomial K_j(i; n, q) for q in {2, 4}, exact integer.

    q=4: K_j(i) = sum_a (-1)^a 3^{j-a} C(i,a) C(n-i,j-a).
    q=2: same sum without the power of three.
    """
    if q not in (2, 4):
        raise ValueError(f"q must be 2 or 4, got {q}")
    if not (0 <= i <= n and 0 <= j <= n):
        raise ValueError(f"indices out of range: j={j}, i={i}, n={n}")
    total = 0
    for a in range(0, min(i, j) + 1):
        term = binom(i, a) * binom(n - i, j - a)
        if q == 4:
            term *= 3 ** (j - a)
        total += -term if a % 2 else term
    return total


@lru_cache(maxsize=None)
def gamma_coeff(i: int, j: int, t: int, p: int, n: int, q: int = 4) -> int:
    """Squared norm gamma^{t,p}_{i,j} of the four-index basis matrix:
    (q-1)^{i+j-t} (q-2)^{t-p} multinomial(n; p, t-p, i-t, j-t).

    Returns 0 outside the admissible index range (the multinomial kills
    exactly the tuples violating 0 <= p <= t <= i,j and i+j <= t+n).
    """
    m = multinomial(n, (p, t - p, i - t, j - t))
    if m == 0:
        return 0
    return (q - 1) ** (i + j - t) * (q - 2) ** (t - p) * m


@lru_cache(maxsize=None)
def beta_coeff(i: int, j: int, k: int, m: int, t: int) -> int:
    """beta^{m,t}_{i,j,k} = sum_{u=0}^{m} (-1)^{t-u} C(u,t) C(m-2k, m-k-u)
    C(m-k-u, i-u) C(m-k-u, j-u), exact integer."""
    total = 0
    for u in range(0, m + 1):
        term = (
            binom(u, t)
            * binom(m - 2 * k, m - k - u)
            * binom(m - k - u, i - u)
            * binom(m - k - u, j - u)
        )
        if term:
            total += -term if (t - u) % 2 else term
    return total


@lru_cache(maxsize=None)
def alpha_coeff(i: int, j: int, t: int, p: int, a: int, k: int, n: int, q: int = 4) -> QuadExt:
    """Block-diagonalization coefficient alpha(i,j,t,p,a,k) in Q(sqrt3):

    beta^{n-a,t-a}_{i-a,j-a,k-a} * (q-1)^{(i+j)/2-t}
        * sum_g (-1)^{a-g} C(a,g) C(t-a,p-g) (q-2)^{t-a-p+g}.

    For q=4 the middle factor is sqrt(3)^{i+j-2t}; odd i+j carries a single
    sqrt(3).  Zero whenever the beta factor or the g-sum vanishes.
    """
    b = beta_coeff(i - a, j - a, k - a, n - a, t - a)
    if b == 0:
        return QuadExt(0)
    gsum = 0
    for g in range(0, p + 1):
        c = binom(a, g) * binom(t - a, p - g)
        if c == 0:
            continue
        # nonzero binomials force t-a-p+g >= 0, so the power is integral
        c *= (q - 2) ** (t - a - p + g)
        gsum += -c if (a - g) % 2 else c
    if gsum == 0:
        return QuadExt(0)
    if q == 4:
        e2 = i + j - 2 * t  # exponent of sqrt(3)
        mid = sqrt3_pow(e2) if e2 >= 0 else ONE / sqrt3_pow(-e2)
        return mid * (b * gsum)
    if (i + j) % 2:
        raise ValueError("q=2 with odd i+j has no rational value")
    e = (i + j) // 2 - t
    mid = Fraction(q - 1) ** e
    return QuadExt(mid * b * gsum)


class CoeffTable:
    """Coefficient accessor bound to fixed (n, q).

    Thin view over the module-level cached functions; safe for concurrent
    reads since the underlying caches only grow.
    """

    def __init__(self, n: int, q: int = 4):
        if q not in (2, 4):
            raise ValueError(f"q must be 2 or 4, got {q}")
        self.n = n
        self.q = q

    def krawtchouk(self, j: int, i: int) -> int:
        return krawtchouk(j, i, self.n, self.q)

    def gamma(self, i: int, j: int, t: int, p: int) -> int:
        return gamma_coeff(i, j, t, p, self.n, self.q)

    def beta(self, i: int, j: int, k: int, m: int, t: int) -> int:
        return beta_coeff(i, j, k, m, t)

    def alpha(self, i: int, j: int, t: int, p: int, a: int, k: int) -> QuadExt:
        return alpha_coeff(i, j, t, p, a, k, self.n, self.q)


def factorial_exact(n: int) -> int:
    return factorial(n)

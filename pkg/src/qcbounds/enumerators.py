"""Weight enumerators of code projectors and the LP-level bound models.

A projector Pi on n qubits has two quadratic weight enumerators: the
j-th coefficients sum tr(E'Pi)tr(E Pi) respectively tr(Pi E' Pi E) over
Pauli strings E of weight j.  They are related by a Krawtchouk transform,
and a signed variant of that transform gives the shadow enumerator.
Error-correction conditions for distance delta are equivalent to
K*B_j = A_j for j < delta.

The LP builders return rational ConicProgram instances: the enumerator
linear program over A_0..A_n (with optional shadow, purity, and
even-weight-sum rows), the quantum Delsarte bound, and the classical
binary Delsarte bound.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import numpy as np

from .combinatorics import krawtchouk
from .conic_solver.program import ConicProgram, skey
from .pauli import StabilizerGroup, expand_group

Q2 = Fraction(1)


@dataclass
class EnumeratorVector:
    values: list
    n: int
    kind: str  # 'A' | 'B' | 'S'

    def __post_init__(self):
        if len(self.values) != self.n + 1:
            raise ValueError("enumerator length must be n+1")
        if self.kind not in ("A", "B", "S"):
            raise ValueError(f"unknown enumerator kind {self.kind!r}")

    def __getitem__(self, j):
        return self.values[j]

    def to_json(self) -> list[str]:
        return [str(Fraction(v)) for v in self.values]


def _pauli_action(word: int, n: int):
    """Diagonal phases and bit-flip mask of a Pauli word on the
    computational basis: E|x> = phase[x] |x ^ flip>."""
    dim = 1 << n
    flip = 0
    phases = np.ones(dim, dtype=np.complex128)
    idx = np.arange(dim)
    for m in range(n):
        d = (word >> (2 * m)) & 3
        # qubit m maps to bit position n-1-m so that digit strings read
        # left to right match tensor factors |b_0 b_1 ... >
        bitpos = n - 1 - m
        bit = (idx >> bitpos) & 1
        if d == 1:  # Z
            phases *= np.where(bit, -1.0, 1.0)
        elif d == 2:  # X
            flip |= 1 << bitpos
        elif d == 3:  # Y
            phases *= 1j * np.where(bit, -1.0, 1.0)
            flip |= 1 << bitpos
    return phases, flip


def enumerators_from_projector(Pi: np.ndarray, n: int, exact_shift: Optional[int] = None):
    """Brute-force enumerators of a hermitian matrix over all 4^n strings.

    A_j = sum_{wt=j} tr(E'Pi) tr(E Pi), B_j = sum_{wt=j} tr(Pi E' Pi E).

    With exact_shift=s, Pi is taken to be P/2^s for an integer-entry
    matrix P (the stabilizer-projector case); all traces are then exact
    Gaussian integers in float arithmetic and the result is returned in
    Fractions.  Otherwise float values are returned.
    """
    if n > 5:
        raise ValueError("projector enumeration is capped at n <= 5")
    dim = 1 << n
    if Pi.shape != (dim, dim):
        raise ValueError(f"projector must be {dim}x{dim}")
    Pi = np.asarray(Pi, dtype=np.complex128)
    idx = np.arange(dim)
    A = [0.0] * (n + 1)
    B = [0.0] * (n + 1)
    for word in range(4**n):
        phases, flip = _pauli_action(word, n)
        w = sum(1 for m in range(n) if (word >> (2 * m)) & 3)
        # tr(E Pi) = sum_x phase[x] Pi[x^flip, x]
        tr_epi = np.sum(phases * Pi[idx ^ flip, idx])
        # tr(Pi E' Pi E) = sum_{x,y} Pi[y,x] conj(phase[x]) phase[y] Pi[x^flip, y^flip]
        M = Pi[np.ix_(idx ^ flip, idx ^ flip)]
        tr_b = np.sum(Pi.T * np.outer(np.conj(phases), phases) * M)
        A[w] += (np.conj(tr_epi) * tr_epi).real
        B[w] += tr_b.real
    if exact_shift is not None:
        scale = Fraction(1, 4**exact_shift)
        Aq, Bq = [], []
        for v in A:
            r = round(v)
            if abs(v - r) > 1e-6:
                raise ValueError("trace not integral under exact_shift")
            Aq.append(r * scale)
        for v in B:
            r = round(v)
            if abs(v - r) > 1e-6:
                raise ValueError("trace not integral under exact_shift")
            Bq.append(r * scale)
        return EnumeratorVector(Aq, n, "A"), EnumeratorVector(Bq, n, "B")
    return EnumeratorVector(A, n, "A"), EnumeratorVector(B, n, "B")


def projector_from_stabilizer(S: StabilizerGroup):
    """Scaled projector P = 2^(n-k) Pi = sum of signed group elements as a
    dense Gaussian-integer matrix (complex128), plus the shift n-k."""
    n = S.n
    dim = 1 << n
    P = np.zeros((dim, dim), dtype=np.complex128)
    idx = np.arange(dim)
    for elem, sign in expand_group(S):
        phases, flip = _pauli_action(elem.word, n)
        P[idx ^ flip, idx] += sign * phases
    return P, n - S.k


def macwilliams(A: EnumeratorVector, n: int, K=None) -> EnumeratorVector:
    """B_j = 2^-n sum_i K_j(i; n, 4) A_i."""
    vals = []
    exact = all(isinstance(v, (int, Fraction)) for v in A.values)
    for j in range(n + 1):
        tot = sum(krawtchouk(j, i, n, 4) * A.values[i] for i in range(n + 1))
        vals.append(Fraction(tot, 2**n) if exact else tot / 2**n)
    return EnumeratorVector(vals, n, "B")


def shadow(A: EnumeratorVector, n: int) -> EnumeratorVector:
    """S_j = 2^-n sum_i (-1)^i K_j(i; n, 4) A_i."""
    vals = []
    exact = all(isinstance(v, (int, Fraction)) for v in A.values)
    for j in range(n + 1):
        tot = sum((-1) ** i * krawtchouk(j, i, n, 4) * A.values[i] for i in range(n + 1))
        vals.append(Fraction(tot, 2**n) if exact else tot / 2**n)
    return EnumeratorVector(vals, n, "S")


def _check_params(n: int, K, delta: int) -> None:
    if not (1 <= delta <= n):
        raise ValueError(f"need 1 <= delta <= n, got delta={delta}, n={n}")
    if K < 1:
        raise ValueError(f"need K >= 1, got {K}")


def build_lp_bound(
    n: int,
    K,
    delta: int,
    shadow_rows: bool = False,
    pure: bool = False,
    stab_type: Optional[str] = None,
    kl_eq_start: int = 0,
) -> ConicProgram:
    """Enumerator feasibility LP over A_0..A_n.

    Rows: A_0 = K^2; A_j >= 0; B_j >= 0 with B the Krawtchouk transform;
    K B_j >= A_j with equality for kl_eq_start <= j < delta.  Options:
    shadow_rows adds S_j >= 0 plus S_j = 0 at K=1 and n-j odd; pure pins
    A_j = 0 for 0 < j < delta; stab_type 'I'/'II' adds the even-weight
    sum row (K must be a power of two).

    One-dimensional codes are pure by definition, so the purity pins are
    always present when K = 1 (otherwise the row K B_j = A_j says nothing:
    any rank-one projector has B identically equal to A).
    """
    _check_params(n, K, delta)
    prog = ConicProgram("rational", "feasibility")
    A = [prog.add_scalar(f"A{j}") for j in range(n + 1)]
    Kq = Fraction(K)
    prog.add_eq({A[0]: Fraction(1)}, Kq * Kq, "A0")
    for j in range(1, n + 1):
        prog.add_ge({A[j]: Fraction(1)}, Fraction(0), f"A{j}>=0")
    two_n = Fraction(2**n)
    for j in range(n + 1):
        brow = {A[i]: Fraction(krawtchouk(j, i, n, 4), 2**n) for i in range(n + 1)}
        prog.add_ge(dict(brow), Fraction(0), f"B{j}>=0")
        klrow = {k: Kq * v for k, v in brow.items()}
        klrow[A[j]] = klrow.get(A[j], Fraction(0)) - 1
        if kl_eq_start <= j < delta:
            prog.add_eq(klrow, Fraction(0), f"KB{j}=A{j}")
        else:
            prog.add_ge(klrow, Fraction(0), f"KB{j}>=A{j}")
    if pure or K == 1:
        for j in range(1, delta):
            prog.add_eq({A[j]: Fraction(1)}, Fraction(0), f"pure A{j}=0")
    if shadow_rows:
        for j in range(n + 1):
            srow = {A[i]: Fraction((-1) ** i * krawtchouk(j, i, n, 4), 2**n) for i in range(n + 1)}
            if K == 1 and (n - j) % 2 == 1:
                prog.add_eq(srow, Fraction(0), f"S{j}=0")
            else:
                prog.add_ge(srow, Fraction(0), f"S{j}>=0")
    if stab_type is not None:
        if stab_type not in ("I", "II"):
            raise ValueError(f"stab_type must be 'I' or 'II', got {stab_type!r}")
        logK = int(K).bit_length() - 1
        if 2**logK != K:
            raise ValueError("even-weight sum rows require K a power of two")
        row = {A[j]: Fraction(1) for j in range(0, n + 1, 2)}
        rhs = Fraction(2 ** (n - logK - 1)) if stab_type == "I" else Fraction(2 ** (n - logK))
        prog.add_eq(row, rhs, f"type{stab_type} even sum")
    prog.meta.update(model="lp", n=n, K=K, delta=delta, two_n=two_n)
    return prog


def build_delsarte(
    n: int,
    delta: int,
    quantum: bool = True,
    wide_purity: bool = False,
    feasibility_sum=None,
) -> ConicProgram:
    """Delsarte-type LP.

    quantum=True: maximize sum A_j over A_0 = 1, A_j >= 0 (pinned to zero
    for 1 < j < delta, or 0 < j < delta when wide_purity), and all
    Krawtchouk sums nonnegative.  The optimum eta refutes ((n,1,delta))
    codes when eta < 2^n.  feasibility_sum pins sum A_j to the given
    value and switches to feasibility sense.

    quantum=False: the classical binary bound, maximize 2^n sum x_i with
    x_0 = 2^-n, x_i = 0 below delta, x_i >= 0, binary Krawtchouk sums
    nonnegative.
    """
    if not (1 <= delta <= n):
        raise ValueError(f"need 1 <= delta <= n, got delta={delta}, n={n}")
    prog = ConicProgram("rational")
    if quantum:
        A = [prog.add_scalar(f"A{j}") for j in range(n + 1)]
        prog.add_eq({A[0]: Fraction(1)}, Fraction(1), "A0=1")
        zero_lo = 0 if wide_purity else 1
        for j in range(1, n + 1):
            if zero_lo < j < delta:
                prog.add_eq({A[j]: Fraction(1)}, Fraction(0), f"A{j}=0")
            else:
                prog.add_ge({A[j]: Fraction(1)}, Fraction(0), f"A{j}>=0")
        for j in range(n + 1):
            row = {A[i]: Fraction(krawtchouk(j, i, n, 4)) for i in range(n + 1)}
            prog.add_ge(row, Fraction(0), f"Kraw{j}>=0")
        obj = {a: Fraction(1) for a in A}
        if feasibility_sum is not None:
            prog.add_eq(dict(obj), Fraction(feasibility_sum), "sum pinned")
            prog.sense = "feasibility"
        else:
            prog.set_objective(obj, "max")
        prog.meta.update(model="delsarte", n=n, delta=delta, threshold=Fraction(2**n))
    else:
        x = [prog.add_scalar(f"x{i}") for i in range(n + 1)]
        prog.add_eq({x[0]: Fraction(1)}, Fraction(1, 2**n), "x0")
        for i in range(1, delta):
            prog.add_eq({x[i]: Fraction(1)}, Fraction(0), f"x{i}=0")
        for i in range(delta, n + 1):
            prog.add_ge({x[i]: Fraction(1)}, Fraction(0), f"x{i}>=0")
        for j in range(n + 1):
            row = {x[i]: Fraction(krawtchouk(j, i, n, 2)) for i in range(n + 1)}
            prog.add_ge(row, Fraction(0), f"Kraw{j}>=0")
        prog.set_objective({xx: Fraction(2**n) for xx in x}, "max")
        prog.meta.update(model="delsarte_classical", n=n, delta=delta)
    return prog


def delsarte_verdict(eta, n: int) -> str:
    """Refutation verdict for the quantum Delsarte optimum at K=1."""
    return "infeasible" if eta < 2**n else "inconclusive"

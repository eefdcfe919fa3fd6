"""Pauli-string algebra over n qubits.

Strings are words over {I, Z, X, Y}, identified with digits {0, 1, 2, 3}
(the GF(4) identification: I~0, Z~1, X~omega, Y~omega^2).  Under this
digit encoding the unsigned product of two strings is the coordinatewise
XOR of their 2-bit digits, and the scalar prefactor of the product is a
power of the imaginary unit accumulated coordinatewise.

Stabilizer groups are expanded from signed generator lists with full
validation (pairwise commutation, independence, -identity exclusion).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

SYMBOLS = "IZXY"
_DIGIT = {c: d for d, c in enumerate(SYMBOLS)}

# i-exponent of the single-qubit product a*b = i^e * (a xor b):
# cyclic pairs (Z,X), (X,Y), (Y,Z) give +1, reversed give +3.
_PHASE_1Q = (
    (0, 0, 0, 0),
    (0, 0, 1, 3),
    (0, 3, 0, 1),
    (0, 1, 3, 0),
)


class PauliString:
    """Immutable n-qubit Pauli string without sign."""

    __slots__ = ("digits", "n", "word")

    def __init__(self, digits: Iterable[int]):
        digits = tuple(int(d) for d in digits)
        if not digits:
            raise ValueError("empty Pauli string")
        if any(d < 0 or d > 3 for d in digits):
            raise ValueError(f"digits must lie in 0..3: {digits}")
        object.__setattr__(self, "digits", digits)
        object.__setattr__(self, "n", len(digits))
        # packed 2-bit word, coordinate 0 in the least significant bits
        w = 0
        for m, d in enumerate(digits):
            w |= d << (2 * m)
        object.__setattr__(self, "word", w)

    def __setattr__(self, name, value):
        raise AttributeError("PauliString is immutable")

    @staticmethod
    def from_str(s: str) -> "PauliString":
        s = s.strip().upper()
        try:
            return PauliString(_DIGIT[c] for c in s)
        except KeyError as e:
            raise ValueError(f"invalid Pauli symbol in {s!r}") from e

    @staticmethod
    def from_word(word: int, n: int) -> "PauliString":
        return PauliString((word >> (2 * m)) & 3 for m in range(n))

    @staticmethod
    def identity(n: int) -> "PauliString":
        return PauliString((0,) * n)

    def weight(self) -> int:
        return sum(1 for d in self.digits if d)

    def support(self) -> frozenset[int]:
        return frozenset(m for m, d in enumerate(self.digits) if d)

    def __eq__(self, other):
        return isinstance(other, PauliString) and self.digits == other.digits

    def __hash__(self):
        return hash(self.digits)

    def __str__(self):
        return "".join(SYMBOLS[d] for d in self.digits)

    def __repr__(self):
        return f"PauliString({self})"


@dataclass(frozen=True)
class OverlapProfile:
    """Joint support statistics (i, j, t, p) of an ordered string pair:
    weights, support-intersection size, and count of coordinates whose
    non-identity symbols agree."""

    i: int
    j: int
    t: int
    p: int

    @property
    def commutes(self) -> bool:
        return (self.t - self.p) % 2 == 0

    @property
    def product_weight(self) -> int:
        return self.i + self.j - self.t - self.p


def multiply(a: PauliString, b: PauliString) -> tuple[PauliString, int]:
    """Unsigned product string and the i-exponent e with a*b = i^e * c."""
    if a.n != b.n:
        raise ValueError(f"length mismatch: {a.n} vs {b.n}")
    e = 0
    for da, db in zip(a.digits, b.digits):
        e += _PHASE_1Q[da][db]
    return PauliString(da ^ db for da, db in zip(a.digits, b.digits)), e % 4


def multiply_words(wa: int, wb: int, n: int) -> tuple[int, int]:
    """Word-level product: XOR word and i-exponent, coordinatewise."""
    e = 0
    for m in range(n):
        e += _PHASE_1Q[(wa >> (2 * m)) & 3][(wb >> (2 * m)) & 3]
    return wa ^ wb, e % 4


def overlap_profile(a: PauliString, b: PauliString) -> OverlapProfile:
    if a.n != b.n:
        raise ValueError(f"length mismatch: {a.n} vs {b.n}")
    i = j = t = p = 0
    for da, db in zip(a.digits, b.digits):
        if da:
            i += 1
        if db:
            j += 1
        if da and db:
            t += 1
            if da == db:
                p += 1
    return OverlapProfile(i, j, t, p)


def commutes(a: PauliString, b: PauliString) -> bool:
    prof = overlap_profile(a, b)
    return prof.commutes


def enumerate_basis(n: int, cap: int = 8) -> Iterator[PauliString]:
    """All 4^n strings in lexicographic digit order (all-identity first)."""
    if n < 1:
        raise ValueError("n must be positive")
    if n > cap:
        raise ValueError(f"n={n} exceeds enumeration cap {cap}")
    for v in range(4**n):
        yield PauliString((v >> (2 * (n - 1 - m))) & 3 for m in range(n))


@dataclass(frozen=True)
class StabilizerGroup:
    """Signed generating set of a stabilizer group on n qubits."""

    generators: tuple[tuple[PauliString, int], ...]
    n: int
    k: int

    @staticmethod
    def from_strings(lines: Iterable[str]) -> "StabilizerGroup":
        """Parse generator lines like '+XZZXI' or 'XZZXI' (default sign +)."""
        gens = []
        n = None
        for line in lines:
            line = line.strip()
            if not line:
                continue
            sign = 1
            if line[0] in "+-":
                sign = 1 if line[0] == "+" else -1
                line = line[1:]
            ps = PauliString.from_str(line)
            if n is None:
                n = ps.n
            elif ps.n != n:
                raise ValueError("generators of unequal length")
            gens.append((ps, sign))
        if n is None:
            raise ValueError("no generators given")
        k = n - len(gens)
        if k < 0:
            raise ValueError("more generators than qubits")
        return StabilizerGroup(tuple(gens), n, k)


def expand_group(S: StabilizerGroup) -> list[tuple[PauliString, int]]:
    """All 2^(n-k) signed elements of the generated group.

    Raises ValueError on anticommuting generators, dependent generators,
    or a generating set producing -identity.
    """
    gens = S.generators
    for idx, (g1, _) in enumerate(gens):
        for g2, _ in gens[idx + 1 :]:
            if not commutes(g1, g2):
                raise ValueError(f"generators anticommute: {g1} vs {g2}")
    n = S.n
    elems: dict[int, int] = {0: 1}
    for g, sg in gens:
        if g.word in elems:
            # g is (up to sign) a product of earlier generators
            w, e = multiply_words(elems_inverse_word(g.word), g.word, n)
            assert w == 0
            prior_sign = elems[g.word]
            phase_sign = 1 if e == 0 else -1 if e == 2 else None
            if phase_sign is None:
                raise ValueError("non-Hermitian phase in group expansion")
            if prior_sign * sg * phase_sign == -1:
                raise ValueError("-identity generated")
            raise ValueError(f"dependent generator: {g}")
        new = {}
        for w, s in elems.items():
            c, e = multiply_words(w, g.word, n)
            if e == 0:
                ph = 1
            elif e == 2:
                ph = -1
            else:
                raise ValueError("non-Hermitian phase in group expansion")
            new[c] = s * sg * ph
        elems.update(new)
    if len(elems) != 2 ** (n - S.k):
        raise ValueError("group order mismatch")
    return [(PauliString.from_word(w, n), s) for w, s in sorted(elems.items())]


def elems_inverse_word(word: int) -> int:
    # Pauli strings square to identity up to phase, so each word is its
    # own inverse word
    return word

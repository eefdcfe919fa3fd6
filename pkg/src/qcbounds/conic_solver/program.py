"""Conic program container shared by the exact LP and float SDP backends.

A program has free scalar variables, symmetric PSD block variables, linear
equality and inequality rows over entries of both, and a linear objective.
Term keys are ('s', name) for a scalar and ('b', block, i, j) with i <= j
for a block entry; a coefficient on (i, j) multiplies the single symmetric
unknown X_ij = X_ji once.

The scalar field tag declares the arithmetic the instance is meant for:
'rational' programs carry Fraction data and can be solved exactly by the
simplex backend (no blocks allowed there); 'float' programs go to the
interior-point backend.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Optional

ScalarKey = tuple  # ('s', name)
BlockKey = tuple  # ('b', name, i, j), i <= j


def skey(name: str) -> tuple:
    return ("s", name)


def bkey(block: str, i: int, j: int) -> tuple:
    if j < i:
        i, j = j, i
    return ("b", block, i, j)


@dataclass
class Row:
    terms: dict
    kind: str  # '=' or '<='
    rhs: Any
    label: str = ""

    def __post_init__(self):
        if self.kind not in ("=", "<="):
            raise ValueError(f"row kind must be '=' or '<=', got {self.kind!r}")


class ConicProgram:
    def __init__(self, field_tag: str = "float", sense: str = "feasibility"):
        if field_tag not in ("rational", "float"):
            raise ValueError(f"unknown field tag {field_tag!r}")
        if sense not in ("max", "min", "feasibility"):
            raise ValueError(f"unknown sense {sense!r}")
        self.field = field_tag
        self.sense = sense
        self.scalars: list[str] = []
        self._scalar_set: set[str] = set()
        self.blocks: dict[str, int] = {}
        self.objective: dict = {}
        self.rows: list[Row] = []
        self.meta: dict = {}

    # construction

    def add_scalar(self, name: str) -> tuple:
        if name in self._scalar_set:
            raise ValueError(f"duplicate scalar {name!r}")
        self._scalar_set.add(name)
        self.scalars.append(name)
        return skey(name)

    def add_block(self, name: str, side: int) -> str:
        if name in self.blocks:
            raise ValueError(f"duplicate block {name!r}")
        if side < 1:
            raise ValueError(f"block side must be >= 1, got {side}")
        self.blocks[name] = side
        return name

    def add_row(self, terms: dict, kind: str, rhs, label: str = "") -> None:
        self.rows.append(Row(dict(terms), kind, rhs, label))

    def add_eq(self, terms: dict, rhs, label: str = "") -> None:
        self.add_row(terms, "=", rhs, label)

    def add_le(self, terms: dict, rhs, label: str = "") -> None:
        self.add_row(terms, "<=", rhs, label)

    def add_ge(self, terms: dict, rhs, label: str = "") -> None:
        neg = {k: -v for k, v in terms.items()}
        self.add_row(neg, "<=", -rhs, label)

    def set_objective(self, terms: dict, sense: Optional[str] = None) -> None:
        if sense is None:
            sense = self.sense
        if sense not in ("max", "min"):
            raise ValueError(f"objective sense must be max or min, got {sense!r}")
        self.sense = sense
        self.objective = dict(terms)

    # validation and evaluation

    def _check_key(self, key) -> None:
        if key[0] == "s":
            if key[1] not in self._scalar_set:
                raise ValueError(f"undeclared scalar in row: {key}")
        elif key[0] == "b":
            _, name, i, j = key
            if name not in self.blocks:
                raise ValueError(f"undeclared block in row: {key}")
            side = self.blocks[name]
            if not (0 <= i <= j < side):
                raise ValueError(f"block index out of range: {key} (side {side})")
        else:
            raise ValueError(f"malformed term key: {key}")

    def validate(self) -> None:
        for row in self.rows:
            for key in row.terms:
                self._check_key(key)
        for key in self.objective:
            self._check_key(key)

    def eval_terms(self, terms: dict, point: dict):
        """Value of a linear form at a point mapping term keys to numbers."""
        total = 0
        for key, c in terms.items():
            total = total + c * point[key]
        return total

    def residuals(self, point: dict) -> list:
        """Signed row residuals lhs - rhs at a point (positive = violated
        for '<=' rows)."""
        out = []
        for row in self.rows:
            out.append(self.eval_terms(row.terms, point) - row.rhs)
        return out

    def num_scalars(self) -> int:
        return len(self.scalars)

    def svec_dim(self) -> int:
        return sum(s * (s + 1) // 2 for s in self.blocks.values())


@dataclass
class SolveReport:
    status: str  # optimal feasible infeasible_certified infeasible_numeric unbounded error
    objective: Optional[Any] = None
    point: Optional[dict] = None
    dual_point: Optional[dict] = None
    farkas: Optional[dict] = None  # row index -> multiplier (exact LP only)
    iterations: int = 0
    residual: float = 0.0
    gap: float = 0.0
    message: str = ""
    extra: dict = field(default_factory=dict)


def verify_farkas(prog: ConicProgram, ray: dict) -> bool:
    """Exact check that a Farkas ray certifies infeasibility:
    multipliers >= 0 on '<=' rows, the combined linear form is identically
    zero, and the combined right-hand side is negative."""
    combo: dict = {}
    rhs = Fraction(0)
    for idx, mult in ray.items():
        row = prog.rows[idx]
        if row.kind == "<=" and mult < 0:
            return False
        for key, c in row.terms.items():
            combo[key] = combo.get(key, Fraction(0)) + mult * c
        rhs += mult * row.rhs
    if any(v != 0 for v in combo.values()):
        return False
    return rhs < 0

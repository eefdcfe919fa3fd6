"""Self-contained optimization backends.

Exact rational simplex for linear programs (with Farkas infeasibility
certificates), a primal-dual interior-point method for block-diagonal
semidefinite programs, and an SDPA sparse-format exporter for external
cross-checks.
"""

from .ipm import solve_feasibility_sdp, solve_sdp
from .program import ConicProgram, Row, SolveReport, bkey, skey, verify_farkas
from .sdpa import export_sdpa
from .simplex import solve_lp_exact

__all__ = [
    "ConicProgram",
    "Row",
    "SolveReport",
    "bkey",
    "skey",
    "verify_farkas",
    "solve_lp_exact",
    "solve_sdp",
    "solve_feasibility_sdp",
    "export_sdpa",
]

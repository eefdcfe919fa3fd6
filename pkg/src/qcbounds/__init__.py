"""Feasibility bounds for qubit quantum codes.

Builds linear, Delsarte, Lovasz-type, moment, and symmetry-reduced
semidefinite relaxations for the existence of ((n, K, delta)) quantum
codes, solves them with self-contained exact and floating-point solvers,
and extracts and verifies dual infeasibility certificates in exact
arithmetic.
"""

__version__ = "0.1.0"

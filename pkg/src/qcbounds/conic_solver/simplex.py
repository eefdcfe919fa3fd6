"""Exact two-phase simplex over rationals with Farkas infeasibility rays.

Solves ConicProgram instances without PSD blocks in Fraction arithmetic.
Free variables are split into nonnegative pairs, inequality rows get
slacks, and every row receives an artificial column so that phase one
always starts from the artificial basis and the phase-one duals (the
Farkas ray on infeasible instances) can be read off uniformly.  Bland's
rule prevents cycling.  All pivots are exact, so 'optimal' and
'infeasible_certified' verdicts are theorems about the input data.
"""

from __future__ import annotations

from fractions import Fraction

from .program import ConicProgram, SolveReport, verify_farkas


def _pivot(T, prow, pcol):
    piv = T[prow][pcol]
    inv = Fraction(1) / piv
    row = T[prow]
    for j in range(len(row)):
        row[j] *= inv
    for i in range(len(T)):
        if i == prow:
            continue
        f = T[i][pcol]
        if f:
            ri = T[i]
            for j in range(len(row)):
                if row[j]:
                    ri[j] -= f * row[j]


def _run_simplex(T, basis, m, allowed_cols):
    """Minimize the last row of tableau T. Returns 'optimal' or 'unbounded'."""
    rhs = len(T[0]) - 1
    while True:
        enter = -1
        for j in allowed_cols:
            if T[m][j] < 0:
                enter = j
                break
        if enter < 0:
            return "optimal"
        leave = -1
        best = None
        for i in range(m):
            if T[i][enter] > 0:
                ratio = T[i][rhs] / T[i][enter]
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best = ratio
                    leave = i
        if leave < 0:
            return "unbounded"
        _pivot(T, leave, enter)
        basis[leave] = enter


def solve_lp_exact(prog: ConicProgram) -> SolveReport:
    if prog.blocks:
        raise ValueError("exact LP backend accepts scalar-only programs")
    if prog.field != "rational":
        raise ValueError("exact LP backend requires the rational field tag")
    prog.validate()

    names = list(prog.scalars)
    col_of = {("s", nm): 2 * v for v, nm in enumerate(names)}  # +column; -column is +1
    nv2 = 2 * len(names)
    n_le = sum(1 for r in prog.rows if r.kind == "<=")
    m = len(prog.rows)
    n_slack = n_le
    n_art = m
    ncols = nv2 + n_slack + n_art
    rhs_col = ncols

    # build standardized rows: sign*(terms, rhs) with slack, rhs >= 0
    T = []
    signs = []
    slack_idx = 0
    for row in prog.rows:
        line = [Fraction(0)] * (ncols + 1)
        for key, c in row.terms.items():
            c = Fraction(c)
            j = col_of[key]
            line[j] += c
            line[j + 1] -= c
        rhs = Fraction(row.rhs)
        if row.kind == "<=":
            line[nv2 + slack_idx] = Fraction(1)
            slack_idx += 1
        sign = 1
        if rhs < 0:
            sign = -1
            rhs = -rhs
            for j in range(nv2 + n_slack):
                line[j] = -line[j]
        line[rhs_col] = rhs
        signs.append(sign)
        T.append(line)

    # artificial columns, one per row, forming the initial basis
    basis = []
    for i in range(m):
        T[i][nv2 + n_slack + i] = Fraction(1)
        basis.append(nv2 + n_slack + i)

    # phase 1: minimize sum of artificials; reduced objective row
    obj = [Fraction(0)] * (ncols + 1)
    for j in range(nv2 + n_slack, ncols):
        obj[j] = Fraction(1)
    for i in range(m):
        for j in range(ncols + 1):
            obj[j] -= T[i][j]
    T.append(obj)

    allowed = list(range(ncols))
    status = _run_simplex(T, basis, m, allowed)
    assert status == "optimal"  # phase-1 objective is bounded below by 0
    phase1_value = -T[m][rhs_col]

    if phase1_value > 0:
        # infeasible; extract the Farkas ray from the artificial columns
        ray = {}
        for i in range(m):
            y_i = Fraction(1) - T[m][nv2 + n_slack + i]
            mult = -signs[i] * y_i
            if mult:
                ray[i] = mult
        assert verify_farkas(prog, ray), "internal error: invalid Farkas ray"
        return SolveReport(status="infeasible_certified", farkas=ray, message="phase-1 optimum positive")

    # pivot remaining artificials out of the basis (degenerate rows)
    drop_rows = []
    for i in range(m):
        if basis[i] >= nv2 + n_slack:
            done = False
            for j in range(nv2 + n_slack):
                if T[i][j] != 0:
                    _pivot(T, i, j)
                    basis[i] = j
                    done = True
                    break
            if not done:
                drop_rows.append(i)  # redundant zero row

    def extract_point():
        point = {}
        for v, nm in enumerate(names):
            val = Fraction(0)
            for i in range(m):
                if basis[i] == 2 * v:
                    val += T[i][rhs_col]
                elif basis[i] == 2 * v + 1:
                    val -= T[i][rhs_col]
            point[("s", nm)] = val
        return point

    if prog.sense == "feasibility" or not prog.objective:
        return SolveReport(status="feasible", point=extract_point(), objective=None)

    # phase 2 over the real objective (minimization form)
    sign_obj = -1 if prog.sense == "max" else 1
    cost = [Fraction(0)] * (ncols + 1)
    for key, c in prog.objective.items():
        c = sign_obj * Fraction(c)
        j = col_of[key]
        cost[j] += c
        cost[j + 1] -= c
    obj2 = list(cost)
    for i in range(m):
        cb = cost[basis[i]]
        if cb:
            for j in range(ncols + 1):
                obj2[j] -= cb * T[i][j]
    T[m] = obj2
    live = [i for i in range(m) if i not in drop_rows]
    # restrict pivoting to non-artificial columns; run on live rows only
    allowed2 = list(range(nv2 + n_slack))
    if drop_rows:
        T2 = [T[i] for i in live] + [T[m]]
        basis2 = [basis[i] for i in live]
        status = _run_simplex(T2, basis2, len(live), allowed2)
        Tfin, basfin, mfin = T2, basis2, len(live)
    else:
        status = _run_simplex(T, basis, m, allowed2)
        Tfin, basfin, mfin = T, basis, m

    if status == "unbounded":
        return SolveReport(status="unbounded", message="phase-2 column with no ratio limit")

    point = {}
    for v, nm in enumerate(names):
        val = Fraction(0)
        for i in range(mfin):
            if basfin[i] == 2 * v:
                val += Tfin[i][rhs_col]
            elif basfin[i] == 2 * v + 1:
                val -= Tfin[i][rhs_col]
        point[("s", nm)] = val
    objval = prog.eval_terms(prog.objective, point)
    return SolveReport(status="optimal", point=point, objective=objval)

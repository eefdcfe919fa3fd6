"""Primal-dual interior-point solver for block-diagonal SDPs.

Solves conic programs of the form

    min c.x   s.t.   A x = b,   G x + s = h,   s in K,

where K is a product of a nonnegative-orthant part (one coordinate per
'<=' row) and one PSD cone per declared block.  A ConicProgram is
compiled into (c, A, b, G, h): scalar variables and the upper-triangle
entries of every block become the free vector x, '=' rows become A,
'<=' rows become the orthant part of G, and an identity map per block
ties the PSD slack to the block entries.

The algorithm is the standard infeasible-start Mehrotra
predictor-corrector with Nesterov-Todd scaling: at each iterate the
scaling W maps s and z to a common point lambda, the Newton system is
reduced to a dense symmetric system in (dx, dy) through the Schur
matrix G' (W'W)^-1 G, and one factorization serves both the affine and
the combined direction.  Matrices stay dense; problem sizes here are a
few thousand variables at most.

Feasibility questions go through solve_feasibility_sdp, which appends a
single slack t relaxing every cone constraint (s + t e in K), minimizes
t, and reads the answer off the sign of the optimum.  That gives a
margin semantics that is robust to the solver limping near an
infeasible boundary.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .program import ConicProgram, SolveReport

SQRT2 = math.sqrt(2.0)


# ---------------------------------------------------------------------------
# svec helpers: symmetric matrices as vectors with sqrt(2)-scaled off-diagonal
# entries so that <X, Y> = svec(X) . svec(Y).

def svec_len(side: int) -> int:
    return side * (side + 1) // 2


def svec_index(i: int, j: int, side: int) -> int:
    """Position of entry (i, j), i <= j, in row-major upper-triangle order."""
    if not (0 <= i <= j < side):
        raise ValueError(f"bad svec index ({i},{j}) for side {side}")
    return i * side - i * (i - 1) // 2 + (j - i)


def svec(M: np.ndarray) -> np.ndarray:
    side = M.shape[0]
    out = np.empty(svec_len(side))
    k = 0
    for i in range(side):
        out[k] = M[i, i]
        k += 1
        for j in range(i + 1, side):
            out[k] = SQRT2 * M[i, j]
            k += 1
    return out


def smat(u: np.ndarray, side: int) -> np.ndarray:
    M = np.zeros((side, side))
    k = 0
    for i in range(side):
        M[i, i] = u[k]
        k += 1
        for j in range(i + 1, side):
            M[i, j] = M[j, i] = u[k] / SQRT2
            k += 1
    return M


def sym_kron(B: np.ndarray) -> np.ndarray:
    """Matrix of U -> B U B' on svec coordinates (B symmetric here).

    Built column by column; sides are small so the cubic cost is fine.
    """
    side = B.shape[0]
    q = svec_len(side)
    out = np.empty((q, q))
    k = 0
    for i in range(side):
        for j in range(i, side):
            U = np.zeros((side, side))
            if i == j:
                U[i, i] = 1.0
            else:
                U[i, j] = U[j, i] = 1.0 / SQRT2
            out[:, k] = svec(B @ U @ B.T)
            k += 1
    return out


# ---------------------------------------------------------------------------
# cone bookkeeping

@dataclass
class _Cone:
    l: int                      # orthant dimension
    sides: list                 # PSD block sides, in declaration order
    offsets: list = field(default_factory=list)  # start of each block in flat vectors

    def __post_init__(self):
        off = self.l
        self.offsets = []
        for s in self.sides:
            self.offsets.append(off)
            off += svec_len(s)
        self.dim = off
        self.rank = self.l + sum(self.sides)

    def identity(self) -> np.ndarray:
        e = np.zeros(self.dim)
        e[: self.l] = 1.0
        for s, off in zip(self.sides, self.offsets):
            e[off : off + svec_len(s)] = svec(np.eye(s))
        return e

    def mats(self, u: np.ndarray):
        for s, off in zip(self.sides, self.offsets):
            yield smat(u[off : off + svec_len(s)], s)

    def min_eig(self, u: np.ndarray) -> float:
        vals = [np.min(u[: self.l])] if self.l else []
        for M in self.mats(u):
            vals.append(float(np.linalg.eigvalsh(M)[0]))
        return min(vals) if vals else 0.0


def _chol_safe(M: np.ndarray) -> np.ndarray:
    """Cholesky with escalating jitter; iterates can graze the boundary."""
    M = 0.5 * (M + M.T)
    jitter = 0.0
    scale = max(float(np.trace(M)) / M.shape[0], 1.0)
    for _ in range(8):
        try:
            return np.linalg.cholesky(M + jitter * np.eye(M.shape[0]))
        except np.linalg.LinAlgError:
            jitter = max(2 * jitter, 1e-14 * scale) * 10
    raise np.linalg.LinAlgError("cone iterate lost positive definiteness")


class _Scaling:
    """Nesterov-Todd scaling for one iterate (s, z)."""

    def __init__(self, cone: _Cone, s: np.ndarray, z: np.ndarray):
        self.cone = cone
        l = cone.l
        self.w = np.sqrt(s[:l] / z[:l]) if l else np.empty(0)
        self.lmbda = np.empty(cone.dim)
        self.lmbda[:l] = np.sqrt(s[:l] * z[:l])
        self.r, self.rti, self.lam_diag = [], [], []
        for side, off in zip(cone.sides, cone.offsets):
            q = svec_len(side)
            S = smat(s[off : off + q], side)
            Z = smat(z[off : off + q], side)
            Ls = _chol_safe(S)
            Lz = _chol_safe(Z)
            U, sig, Vt = np.linalg.svd(Lz.T @ Ls)
            r = Ls @ Vt.T @ np.diag(sig ** -0.5)
            rti = Lz @ U @ np.diag(sig ** -0.5)
            self.r.append(r)
            self.rti.append(rti)
            self.lam_diag.append(sig)
            self.lmbda[off : off + q] = svec(np.diag(sig))

    # W z = scaled dual point, W^-T s = scaled primal point; both map the
    # current iterate to lambda.  On the PSD part W is the congruence
    # U -> r' U r, whose adjoint W' is U -> r U r' (not the same map).
    def apply_W(self, u: np.ndarray) -> np.ndarray:
        cone = self.cone
        out = np.empty_like(u)
        out[: cone.l] = self.w * u[: cone.l]
        for r, side, off in zip(self.r, cone.sides, cone.offsets):
            q = svec_len(side)
            M = smat(u[off : off + q], side)
            out[off : off + q] = svec(r.T @ M @ r)
        return out

    def apply_Wt(self, u: np.ndarray) -> np.ndarray:
        cone = self.cone
        out = np.empty_like(u)
        out[: cone.l] = self.w * u[: cone.l]
        for r, side, off in zip(self.r, cone.sides, cone.offsets):
            q = svec_len(side)
            M = smat(u[off : off + q], side)
            out[off : off + q] = svec(r @ M @ r.T)
        return out

    def apply_WinvT(self, u: np.ndarray) -> np.ndarray:
        cone = self.cone
        out = np.empty_like(u)
        out[: cone.l] = u[: cone.l] / self.w
        for rti, side, off in zip(self.rti, cone.sides, cone.offsets):
            q = svec_len(side)
            M = smat(u[off : off + q], side)
            out[off : off + q] = svec(rti.T @ M @ rti)
        return out

    def apply_WtW(self, u: np.ndarray) -> np.ndarray:
        cone = self.cone
        out = np.empty_like(u)
        out[: cone.l] = (self.w ** 2) * u[: cone.l]
        for r, side, off in zip(self.r, cone.sides, cone.offsets):
            q = svec_len(side)
            T = r @ r.T
            M = smat(u[off : off + q], side)
            out[off : off + q] = svec(T @ M @ T)
        return out

    def wtw_inv_matrix(self) -> np.ndarray:
        """Dense matrix of (W'W)^-1 on the flat cone space."""
        cone = self.cone
        D = np.zeros((cone.dim, cone.dim))
        if cone.l:
            np.fill_diagonal(D[: cone.l, : cone.l], self.w ** -2)
        for rti, side, off in zip(self.rti, cone.sides, cone.offsets):
            q = svec_len(side)
            Ti = rti @ rti.T
            D[off : off + q, off : off + q] = sym_kron(Ti)
        return D

    def circ(self, u: np.ndarray, v: np.ndarray) -> np.ndarray:
        """Jordan product in the scaled space."""
        cone = self.cone
        out = np.empty_like(u)
        out[: cone.l] = u[: cone.l] * v[: cone.l]
        for side, off in zip(cone.sides, cone.offsets):
            q = svec_len(side)
            U = smat(u[off : off + q], side)
            V = smat(v[off : off + q], side)
            out[off : off + q] = svec(0.5 * (U @ V + V @ U))
        return out

    def lmbda_solve(self, d: np.ndarray) -> np.ndarray:
        """Solve lambda o u = d for u (lambda is diagonal blockwise)."""
        cone = self.cone
        out = np.empty_like(d)
        out[: cone.l] = d[: cone.l] / self.lmbda[: cone.l]
        for lam, side, off in zip(self.lam_diag, cone.sides, cone.offsets):
            q = svec_len(side)
            D = smat(d[off : off + q], side)
            denom = 0.5 * (lam[:, None] + lam[None, :])
            out[off : off + q] = svec(D / denom)
        return out

    def max_step(self, u: np.ndarray) -> float:
        """Largest t with lambda + t*u on the cone boundary (0 if u ok)."""
        cone = self.cone
        vals = []
        if cone.l:
            vals.append(float(np.max(-u[: cone.l] / self.lmbda[: cone.l])))
        for lam, side, off in zip(self.lam_diag, cone.sides, cone.offsets):
            q = svec_len(side)
            M = smat(u[off : off + q], side)
            scale = 1.0 / np.sqrt(lam)
            M = scale[:, None] * M * scale[None, :]
            vals.append(float(-np.linalg.eigvalsh(M)[0]))
        return max(vals) if vals else 0.0


# ---------------------------------------------------------------------------
# compilation of a ConicProgram

@dataclass
class _Layout:
    scalar_cols: dict           # scalar key -> column
    block_cols: dict            # block name -> (col0, side)
    n_cols: int
    eq_rows: list               # indices into prog.rows
    ineq_rows: list
    cone: _Cone


def _term_cols(layout: _Layout, key):
    """Column and coefficient multiplier for one program term key."""
    if key[0] == "s":
        return layout.scalar_cols[key], 1.0
    _, name, i, j = key
    col0, side = layout.block_cols[name]
    col = col0 + svec_index(i, j, side)
    return col, (1.0 if i == j else 1.0 / SQRT2)


def compile_conelp(prog: ConicProgram):
    """ConicProgram -> (c, A, b, G, h, cone, layout)."""
    scalar_cols = {("s", name): k for k, name in enumerate(prog.scalars)}
    n = len(scalar_cols)
    block_cols = {}
    block_names = list(prog.blocks)
    for name in block_names:
        side = prog.blocks[name]
        block_cols[name] = (n, side)
        n += svec_len(side)

    eq_rows = [k for k, row in enumerate(prog.rows) if row.kind == "="]
    ineq_rows = [k for k, row in enumerate(prog.rows) if row.kind == "<="]
    sides = [prog.blocks[name] for name in block_names]
    cone = _Cone(len(ineq_rows), sides)
    layout = _Layout(scalar_cols, block_cols, n, eq_rows, ineq_rows, cone)

    A = np.zeros((len(eq_rows), n))
    b = np.zeros(len(eq_rows))
    G = np.zeros((cone.dim, n))
    h = np.zeros(cone.dim)
    for r, k in enumerate(eq_rows):
        row = prog.rows[k]
        for key, cval in row.terms.items():
            col, mult = _term_cols(layout, key)
            A[r, col] += float(cval) * mult
        b[r] = float(row.rhs)
    for r, k in enumerate(ineq_rows):
        row = prog.rows[k]
        for key, cval in row.terms.items():
            col, mult = _term_cols(layout, key)
            G[r, col] += float(cval) * mult
        h[r] = float(row.rhs)
    # PSD slack: s_block = X_block, i.e. G rows -I on the block columns.
    for name in block_names:
        col0, side = block_cols[name]
        off = cone.offsets[block_names.index(name)]
        for k in range(svec_len(side)):
            G[off + k, col0 + k] = -1.0

    c = np.zeros(n)
    sign = -1.0 if prog.sense == "max" else 1.0
    for key, cval in prog.objective.items():
        col, mult = _term_cols(layout, key)
        c[col] += sign * float(cval) * mult
    return c, A, b, G, h, cone, layout


def _extract_point(prog: ConicProgram, layout: _Layout, x: np.ndarray) -> dict:
    point = {}
    for key, col in layout.scalar_cols.items():
        point[key] = float(x[col])
    for name, (col0, side) in layout.block_cols.items():
        point[name] = smat(x[col0 : col0 + svec_len(side)], side)
    return point


# ---------------------------------------------------------------------------
# core conelp iteration

def solve_conelp(c, A, b, G, h, cone: _Cone, tol=1e-7, max_iter=100,
                 verbose=False):
    """Returns a dict with status, x, y, z, s, iterations, diagnostics.

    status: 'optimal', 'primal_infeasible', 'dual_infeasible', 'stalled'.
    A run that stops making progress returns the best iterate seen; if
    that iterate meets 100x the tolerances it still counts as optimal
    (the message records the achieved accuracy).
    """
    feastol = tol
    abstol = tol
    reltol = tol
    m_eq, n = A.shape

    # drop columns that touch nothing (would make the KKT singular)
    used = (np.abs(A).sum(axis=0) + np.abs(G).sum(axis=0) + np.abs(c)) > 0
    fixed_zero = ~used
    if fixed_zero.any():
        A = A[:, used]
        G = G[:, used]
        c = c[used]
        n = int(used.sum())

    e = cone.identity()
    nu = cone.rank

    resx0 = max(1.0, float(np.linalg.norm(c)))
    resy0 = max(1.0, float(np.linalg.norm(b)))
    resz0 = max(1.0, float(np.linalg.norm(h)))

    def kkt_factor(Dinv):
        """Factor [H A'; A -eps] with H = G' Dinv G (+ eps ridge)."""
        H = G.T @ Dinv @ G
        K = np.zeros((n + m_eq, n + m_eq))
        K[:n, :n] = H + 1e-12 * np.eye(n)
        K[:n, n:] = A.T
        K[n:, :n] = A
        K[n:, n:] = -1e-12 * np.eye(m_eq)
        try:
            import scipy.linalg as sla
            lu = sla.lu_factor(K)
            return ("scipy", lu)
        except ImportError:
            return ("numpy", K)

    def kkt_solve(fac, r1, r2):
        rhs = np.concatenate([r1, r2])
        kind, data = fac
        if kind == "scipy":
            import scipy.linalg as sla
            sol = sla.lu_solve(data, rhs)
        else:
            sol = np.linalg.solve(data, rhs)
        return sol[:n], sol[n:]

    # --- initial point (W = I) ---
    Dinv0 = np.eye(cone.dim)
    fac = kkt_factor(Dinv0)
    # primal: min ||s||  s.t. Ax=b, Gx+s=h  ->  dz = Gx - h, s = -dz
    dx, dy = kkt_solve(fac, G.T @ h, b)
    x = dx
    s = h - G @ x
    ts = -cone.min_eig(s)
    if ts >= -1e-8:
        s = s + (1.0 + ts) * e
    # dual: pick y from the same factorization, then the least-squares slack
    # z solving G'z = -c - A'y, pushed into the cone interior.
    _, y = kkt_solve(fac, -c, np.zeros(m_eq))
    z, *_ = np.linalg.lstsq(G.T, -c - A.T @ y, rcond=None)
    tz = -cone.min_eig(z)
    if tz >= -1e-8:
        z = z + (1.0 + tz) * e
    y = np.asarray(y, dtype=float)

    status = "stalled"
    step = 0.0
    relgap = np.inf
    pres = dres = np.inf
    pinfres = dinfres = np.inf
    best = None
    best_score = np.inf
    since_best = 0

    for it in range(1, max_iter + 1):
        rx = A.T @ y + G.T @ z + c          # dual residual
        ry = A @ x - b                       # primal equality residual
        rz = G @ x + s - h                   # primal cone residual
        gap = float(s @ z)
        pcost = float(c @ x)
        dcost = float(-h @ z - b @ y)
        if pcost < 0:
            relgap = gap / -pcost
        elif dcost > 0:
            relgap = gap / dcost
        else:
            relgap = np.inf
        pres = max(np.linalg.norm(ry) / resy0, np.linalg.norm(rz) / resz0)
        dres = float(np.linalg.norm(rx)) / resx0

        # infeasibility certificates (normalized)
        hz_by = float(h @ z + b @ y)
        if hz_by < 0:
            pinfres = float(np.linalg.norm(A.T @ y + G.T @ z)) / resx0 / (-hz_by)
        else:
            pinfres = np.inf
        if pcost < 0:
            dinfres = max(np.linalg.norm(A @ x) / resy0,
                          np.linalg.norm(G @ x + s) / resz0) / (-pcost)
        else:
            dinfres = np.inf

        if verbose:
            print(f"iter {it:3d}  pcost {pcost:+.6e}  dcost {dcost:+.6e} "
                  f" gap {gap:.2e}  pres {pres:.2e}  dres {dres:.2e}")

        if pres <= feastol and dres <= feastol and (gap <= abstol or relgap <= reltol):
            status = "optimal"
            break
        if pinfres <= feastol:
            status = "primal_infeasible"
            scal = -1.0 / hz_by
            y, z = y * scal, z * scal
            break
        if dinfres <= feastol:
            status = "dual_infeasible"
            scal = -1.0 / pcost
            x, s = x * scal, s * scal
            break

        # stall handling: keep the best iterate, give up when stuck
        score = max(pres, dres, min(gap, relgap * max(1.0, abs(pcost))))
        if score < 0.9 * best_score:
            best = (x.copy(), y.copy(), s.copy(), z.copy(),
                    gap, pcost, dcost, relgap, pres, dres)
            best_score = score
            since_best = 0
        else:
            since_best += 1
            if since_best >= 10:
                break

        W = _Scaling(cone, s, z)
        mu = gap / nu
        Dinv = W.wtw_inv_matrix()
        fac = kkt_factor(Dinv)

        def direction(d_s):
            # Solve the reduced Newton system for rhs residuals and d_s.
            # ds = W'(lambda \ d_s) - W'W dz ; G dx - W'W dz = -rz - W'(lambda\d_s)
            wld = W.apply_Wt(W.lmbda_solve(d_s))
            r1 = -rx - G.T @ (Dinv @ (rz + wld))
            r2 = -ry
            dx, dy = kkt_solve(fac, r1, r2)
            dz = Dinv @ (G @ dx + rz + wld)
            ds = -rz - G @ dx
            return dx, dy, dz, ds

        # affine (predictor) direction
        d_s = -W.circ(W.lmbda, W.lmbda)
        dxa, dya, dza, dsa = direction(d_s)
        u_a = W.apply_WinvT(dsa)
        v_a = W.apply_W(dza)
        t = max(W.max_step(u_a), W.max_step(v_a))
        alpha_aff = 1.0 if t <= 0 else min(1.0, 1.0 / t)
        mu_aff = float((s + alpha_aff * dsa) @ (z + alpha_aff * dza)) / nu
        sigma = min(1.0, max(0.0, (mu_aff / mu))) ** 3

        # combined (corrector) direction
        d_s = -W.circ(W.lmbda, W.lmbda) - W.circ(u_a, v_a) + sigma * mu * e
        dx, dy, dz, ds = direction(d_s)
        u = W.apply_WinvT(ds)
        v = W.apply_W(dz)
        t = max(W.max_step(u), W.max_step(v))
        step = 1.0 if t <= 0 else min(1.0, 0.99 / t)

        x = x + step * dx
        y = y + step * dy
        s = s + step * ds
        z = z + step * dz

    if status == "stalled" and best is not None:
        x, y, s, z, gap, pcost, dcost, relgap, pres, dres = best
        loose = 100.0
        if (pres <= loose * feastol and dres <= loose * feastol
                and (gap <= loose * abstol or relgap <= loose * reltol)):
            status = "optimal"

    # re-inflate dropped columns
    if fixed_zero.any():
        xf = np.zeros(fixed_zero.shape[0])
        xf[~fixed_zero] = x
        x = xf

    return {
        "status": status,
        "x": x, "y": y, "s": s, "z": z,
        "iterations": it if max_iter else 0,
        "gap": gap, "relgap": float(relgap),
        "pres": float(pres), "dres": float(dres),
        "pcost": pcost, "dcost": dcost,
        "pinfres": float(pinfres), "dinfres": float(dinfres),
    }


# ---------------------------------------------------------------------------
# public entry points

def _report_from_result(prog, layout, res, tol) -> SolveReport:
    sense_sign = -1.0 if prog.sense == "max" else 1.0
    status_map = {
        "optimal": "optimal",
        "primal_infeasible": "infeasible_numeric",
        "dual_infeasible": "unbounded",
        "stalled": "error",
    }
    status = status_map[res["status"]]
    objective = None
    point = None
    if res["status"] == "optimal":
        point = _extract_point(prog, layout, res["x"])
        objective = sense_sign * res["pcost"]
        if prog.sense == "feasibility":
            status = "feasible"
            objective = None
    dual = {"eq": {}, "ineq": {}, "blocks": {}}
    for r, k in enumerate(layout.eq_rows):
        dual["eq"][k] = float(res["y"][r]) if len(res["y"]) else 0.0
    for r, k in enumerate(layout.ineq_rows):
        dual["ineq"][k] = float(res["z"][r])
    names = list(prog.blocks)
    for name, off, side in zip(names, layout.cone.offsets, layout.cone.sides):
        dual["blocks"][name] = smat(res["z"][off : off + svec_len(side)], side)
    return SolveReport(
        status=status,
        objective=objective,
        point=point,
        dual_point=dual,
        iterations=res["iterations"],
        residual=max(res["pres"], res["dres"]),
        gap=res["gap"],
        message=f"conelp status {res['status']}",
        extra={k: res[k] for k in ("pcost", "dcost", "relgap", "pinfres", "dinfres")},
    )


def solve_sdp(prog: ConicProgram, tol: float = 1e-8, max_iter: int = 200,
              verbose: bool = False) -> SolveReport:
    """Solve an optimization ConicProgram with the interior-point method."""
    prog.validate()
    if prog.sense == "feasibility":
        return solve_feasibility_sdp(prog, tol=tol, max_iter=max_iter,
                                     verbose=verbose)
    c, A, b, G, h, cone, layout = compile_conelp(prog)
    res = solve_conelp(c, A, b, G, h, cone, tol=tol, max_iter=max_iter,
                       verbose=verbose)
    return _report_from_result(prog, layout, res, tol)


def solve_feasibility_sdp(prog: ConicProgram, tol: float = 1e-8,
                          max_iter: int = 200, verbose: bool = False,
                          margin_factor: float = 100.0,
                          _retry: bool = True) -> SolveReport:
    """Phase-1 feasibility: minimize t with every cone row relaxed by t.

    Appends one scalar t, solves min t s.t. A x = b, G x - t e + s = h,
    t >= -1.  Verdict: t* <= tol -> 'feasible'; t* >= margin_factor*tol
    -> 'infeasible_numeric'.  A t* in between is indeterminate and
    triggers one re-solve at tighter tolerance before classifying.
    """
    prog.validate()
    c0, A, b, G, h, cone, layout = compile_conelp(prog)
    n = G.shape[1]
    e = cone.identity()
    # new column for t in both A (zeros) and G (-e); extra orthant row t >= -1
    A2 = np.hstack([A, np.zeros((A.shape[0], 1))])
    G2 = np.hstack([G, -e[:, None]])
    # -t <= 1 goes on top of the orthant part
    extra = np.zeros((1, n + 1))
    extra[0, n] = -1.0
    G2 = np.vstack([extra, G2])
    h2 = np.concatenate([[1.0], h])
    cone2 = _Cone(cone.l + 1, list(cone.sides))
    c2 = np.zeros(n + 1)
    c2[n] = 1.0
    res = solve_conelp(c2, A2, b, G2, h2, cone2, tol=tol, max_iter=max_iter,
                       verbose=verbose)
    if res["status"] not in ("optimal", "dual_infeasible"):
        return SolveReport(status="error", message=f"phase-1 {res['status']}",
                           iterations=res["iterations"],
                           residual=max(res["pres"], res["dres"]))
    tstar = float(res["x"][n]) if res["status"] == "optimal" else -1.0
    if tol < tstar < margin_factor * tol and _retry:
        return solve_feasibility_sdp(prog, tol=tol / 100.0,
                                     max_iter=max_iter, verbose=verbose,
                                     margin_factor=margin_factor,
                                     _retry=False)
    point = _extract_point(prog, layout, res["x"][:n])
    if tstar <= tol:
        return SolveReport(status="feasible", objective=None, point=point,
                           iterations=res["iterations"],
                           residual=max(res["pres"], res["dres"]),
                           gap=res["gap"],
                           message=f"phase-1 slack t* = {tstar:.3e}",
                           extra={"t": tstar})
    marginal = tstar < margin_factor * tol
    note = " (marginal)" if marginal else ""
    return SolveReport(status="infeasible_numeric", objective=None,
                       iterations=res["iterations"],
                       residual=max(res["pres"], res["dres"]),
                       gap=res["gap"],
                       message=f"phase-1 slack t* = {tstar:.3e}{note}",
                       extra={"t": tstar, "marginal": marginal})

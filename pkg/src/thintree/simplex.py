"""Dense two-phase simplex for small LPs.

Solves  min c.x  subject to  A x = b, x >= 0  with b >= 0.  Arithmetic is
either exact (Fraction) or float with a 1e-9 pivot tolerance; both paths run
the same tableau code.  Pivoting is Dantzig's rule with smallest-index tie
breaks, switching to Bland's rule after a burn-in so degenerate instances
cannot cycle.  Everything is deterministic.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import InfeasibleError


class LPResult:
    def __init__(self, objective, values):
        self.objective = objective
        self.values = values


def solve_lp(costs, rows, rhs, exact=True):
    """Minimize costs.x over A x = b, x >= 0.

    Parameters:
        costs: per-variable objective coefficients.
        rows: list of constraint coefficient lists (dense, len == #vars).
        rhs: right-hand sides, all >= 0.
        exact: Fraction arithmetic when True, float when False.

    Raises InfeasibleError when the feasible region is empty.  Unboundedness
    raises AssertionError (our LPs are bounded by construction).
    """
    num_vars = len(costs)
    m = len(rows)
    if exact:
        conv = Fraction
        tol = Fraction(0)
    else:
        conv = float
        tol = 1e-9

    # tableau columns: real vars, artificials, rhs
    width = num_vars + m + 1
    tableau = []
    for i, row in enumerate(rows):
        if len(row) != num_vars:
            raise ValueError("ragged constraint row")
        if rhs[i] < 0:
            raise ValueError("rhs must be non-negative")
        t_row = [conv(v) for v in row] + [conv(0)] * m + [conv(rhs[i])]
        t_row[num_vars + i] = conv(1)
        tableau.append(t_row)
    basis = [num_vars + i for i in range(m)]

    def pivot(row_i, col_j):
        piv = tableau[row_i][col_j]
        inv = 1 / piv if not exact else Fraction(1) / piv
        row = tableau[row_i]
        for j in range(width):
            row[j] *= inv
        for i in range(m + 1):
            if i == row_i:
                continue
            factor = tableau[i][col_j]
            if factor == 0:
                continue
            target = tableau[i]
            for j in range(width):
                target[j] -= factor * row[j]
        basis[row_i] = col_j

    def run_phase(allowed_cols):
        iterations = 0
        bland_after = 20 * (m + num_vars) + 200
        while True:
            iterations += 1
            obj_row = tableau[m]
            enter = -1
            if iterations <= bland_after:
                best = -tol
                for j in allowed_cols:
                    if obj_row[j] < best:
                        best = obj_row[j]
                        enter = j
            else:  # Bland: first improving column
                for j in allowed_cols:
                    if obj_row[j] < -tol:
                        enter = j
                        break
            if enter < 0:
                return
            leave = -1
            best_ratio = None
            for i in range(m):
                a = tableau[i][enter]
                if a > tol:
                    ratio = tableau[i][width - 1] / a
                    key = (ratio, basis[i])
                    if best_ratio is None or key < best_ratio:
                        best_ratio = key
                        leave = i
            assert leave >= 0, "LP unbounded: invalid model"
            pivot(leave, enter)
            assert iterations < 200000, "simplex failed to terminate"

    # phase 1: minimize sum of artificials
    tableau.append([conv(0)] * width)
    obj = tableau[m]
    for j in range(num_vars, num_vars + m):
        obj[j] = conv(1)
    for i in range(m):  # price out the artificial basis
        for j in range(width):
            obj[j] -= tableau[i][j]
    run_phase(range(num_vars))
    infeas = -tableau[m][width - 1]
    if (exact and infeas != 0) or (not exact and abs(infeas) > 1e-7):
        raise InfeasibleError(f"phase-1 objective {infeas}")

    # drive leftover artificials out of the basis, dropping redundant rows
    drop = []
    for i in range(m):
        if basis[i] < num_vars:
            continue
        enter = next((j for j in range(num_vars)
                      if (tableau[i][j] > tol or tableau[i][j] < -tol)), -1)
        if enter == -1:
            drop.append(i)
        else:
            pivot(i, enter)
    if drop:
        for i in reversed(drop):
            del tableau[i]
            del basis[i]
        m = len(basis)

    # phase 2: original objective over real variables only
    tableau[m] = [conv(c) for c in costs] + [conv(0)] * (width - num_vars)
    obj = tableau[m]
    for i in range(m):
        factor = obj[basis[i]]
        if factor != 0:
            row = tableau[i]
            for j in range(width):
                obj[j] -= factor * row[j]
    run_phase(range(num_vars))

    values = [conv(0)] * num_vars
    for i in range(m):
        if basis[i] < num_vars:
            values[basis[i]] = tableau[i][width - 1]
    objective = -tableau[m][width - 1]
    return LPResult(objective, values)

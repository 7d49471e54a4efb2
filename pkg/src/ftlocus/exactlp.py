"""Tiny exact-rational linear programming.

Two-phase revised simplex with Bland's rule over standard-form problems

    minimize c.x   subject to   A x = b,  x >= 0.

Columns are sparse (list of (row, value) pairs); every problem in this
package has around a dozen rows, so the explicit basis inverse with O(m^2)
updates per pivot is the right tool.  All arithmetic is exact, so OPTIMAL
really means optimal and INFEASIBLE really means empty.

The row multipliers returned with an optimal solution are the exact dual
prices of the equality rows, in the caller's original row order and sign
convention.  Callers use them to read a primal optimum off a dual program.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import CancelToken
from .rational import R0, R1, Rat

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"


@dataclass
class LpResult:
    status: str
    x: list | None = None  # structural variable values
    value: object = None
    y: list | None = None  # row multipliers


def solve_standard(num_rows: int, b, columns, costs, cancel: CancelToken | None = None) -> LpResult:
    """Solve min costs.x s.t. (columns) x = b, x >= 0.

    columns: list of sparse columns, each a list of (row_index, Rat).
    Returns LpResult; x has one entry per structural column.
    """
    m = num_rows
    n = len(columns)
    # Flip rows to make b nonnegative; remember signs for the multipliers.
    sign = [1] * m
    bb = [Rat(v) for v in b]
    for i in range(m):
        if bb[i] < 0:
            bb[i] = -bb[i]
            sign[i] = -1
    cols = []
    for col in columns:
        cols.append([(r, v if sign[r] > 0 else -v) for r, v in col if v != 0])

    # Basis starts as the artificial identity; artificials never re-enter.
    basis = [n + i for i in range(m)]
    binv = [[R1 if i == j else R0 for j in range(m)] for i in range(m)]
    xb = bb[:]

    art_cost = [R0] * n + [R1] * m
    real_cost = [Rat(v) for v in costs] + [R0] * m

    def column(j):
        if j < n:
            return cols[j]
        return [(j - n, R1)]

    def price(cost):
        y = [R0] * m
        for i in range(m):
            cb = cost[basis[i]]
            if cb != 0:
                row = binv[i]
                for k in range(m):
                    if row[k] != 0:
                        y[k] += cb * row[k]
        return y

    def run(cost):
        while True:
            if cancel is not None:
                cancel.check()
            y = price(cost)
            in_basis = set(basis)
            enter = -1
            for j in range(n):
                if j in in_basis:
                    continue
                cbar = cost[j]
                for r, v in column(j):
                    cbar -= y[r] * v
                if cbar < 0:
                    enter = j
                    break  # Bland: first eligible index
            if enter < 0:
                return OPTIMAL
            d = [R0] * m
            for r, v in column(enter):
                for i in range(m):
                    if binv[i][r] != 0:
                        d[i] += binv[i][r] * v
            # A zero-valued basic artificial with a nonzero coefficient must
            # leave at theta = 0, else a negative coefficient would push it
            # positive and break feasibility of the original rows.
            leave = -1
            for i in range(m):
                if basis[i] >= n and xb[i] == 0 and d[i] != 0:
                    if leave < 0 or basis[i] < basis[leave]:
                        leave = i
            if leave < 0:
                theta = None
                for i in range(m):
                    if d[i] > 0:
                        ratio = xb[i] / d[i]
                        if theta is None or ratio < theta or (ratio == theta and basis[i] < basis[leave]):
                            theta = ratio
                            leave = i
                if leave < 0:
                    return UNBOUNDED
                if theta != 0:
                    for i in range(m):
                        if i != leave and d[i] != 0:
                            xb[i] -= theta * d[i]
                xb[leave] = theta
            # else: theta = 0 pivot, basic values unchanged, entering var at 0
            piv = d[leave]
            row = binv[leave]
            inv = R1 / piv
            for k in range(m):
                if row[k] != 0:
                    row[k] *= inv
            for i in range(m):
                if i != leave and d[i] != 0:
                    f = d[i]
                    ri = binv[i]
                    for k in range(m):
                        if row[k] != 0:
                            ri[k] -= f * row[k]
            basis[leave] = enter

    status = run(art_cost)
    assert status == OPTIMAL  # phase-1 objective is bounded below by zero
    infeas = R0
    for i in range(m):
        if basis[i] >= n:
            infeas += xb[i]
    if infeas > 0:
        return LpResult(status=INFEASIBLE)

    status = run(real_cost)
    if status == UNBOUNDED:
        return LpResult(status=UNBOUNDED)

    x = [R0] * n
    for i in range(m):
        if basis[i] < n:
            x[basis[i]] = xb[i]
    value = R0
    for j in range(n):
        if x[j] != 0:
            value += real_cost[j] * x[j]
    y = price(real_cost)
    y = [y[i] if sign[i] > 0 else -y[i] for i in range(m)]
    return LpResult(status=OPTIMAL, x=x, value=value, y=y)


def feasible(num_rows: int, b, columns, cancel: CancelToken | None = None):
    """Phase-1 only: return a feasible x for A x = b, x >= 0, or None."""
    res = solve_standard(num_rows, b, columns, [R0] * len(columns), cancel)
    return res.x if res.status == OPTIMAL else None

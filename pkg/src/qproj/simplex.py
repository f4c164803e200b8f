"""Small dense tableau simplex method.

Only what the max-min nullspace program needs: ``max c.x`` subject to
``A x <= b``, ``x >= 0`` with ``b >= 0`` so the slack basis is feasible from
the start.  Bland's rule makes pivoting deterministic and cycle-free.
"""

from __future__ import annotations

import numpy as np

from .errors import InfeasibleProgram, UnboundedProgram

__all__ = ["simplex_max"]

PIVOT_EPS = 1e-12
MAX_PIVOTS = 10_000


def simplex_max(c, a_ub, b_ub) -> tuple[np.ndarray, float]:
    """Maximize ``c @ x`` over ``{x >= 0 : a_ub @ x <= b_ub}``.

    Returns the optimal vertex and objective value.

    Raises
    ------
    InfeasibleProgram
        If some ``b_ub`` entry is negative (the slack basis is not feasible).
    UnboundedProgram
        If the objective grows without bound.
    """
    c = np.asarray(c, dtype=float)
    a = np.asarray(a_ub, dtype=float)
    b = np.asarray(b_ub, dtype=float)
    m, n = a.shape
    if np.any(b < -PIVOT_EPS):
        raise InfeasibleProgram("right-hand side must be nonnegative")

    # rows 0..m-1 constraints, row m the reduced costs; last column the rhs
    tab = np.zeros((m + 1, n + m + 1))
    tab[:m, :n] = a
    tab[:m, n : n + m] = np.eye(m)
    tab[:m, -1] = np.maximum(b, 0.0)
    tab[m, :n] = c
    basis = list(range(n, n + m))

    for _ in range(MAX_PIVOTS):
        costs = tab[m, :-1]
        entering = next((j for j in range(n + m) if costs[j] > PIVOT_EPS), None)
        if entering is None:
            break
        col = tab[:m, entering]
        rows = [i for i in range(m) if col[i] > PIVOT_EPS]
        if not rows:
            raise UnboundedProgram(f"objective unbounded along variable {entering}")
        ratios = [tab[i, -1] / col[i] for i in rows]
        best = min(ratios)
        ties = [i for i, r in zip(rows, ratios) if r <= best + PIVOT_EPS * max(1.0, abs(best))]
        leaving = min(ties, key=lambda i: basis[i])

        tab[leaving] /= tab[leaving, entering]
        for i in range(m + 1):
            if i != leaving and tab[i, entering] != 0.0:
                tab[i] -= tab[i, entering] * tab[leaving]
        basis[leaving] = entering
    else:
        raise RuntimeError("simplex pivot limit reached")

    x = np.zeros(n + m)
    for i, j in enumerate(basis):
        x[j] = tab[i, -1]
    return x[:n], float(c @ x[:n])

"""Brute-force reference procedures, deliberately sharing no code with fmcert."""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations


def _eliminate(rows):
    """Row-reduce a list of Fraction rows in place; returns pivot columns."""
    pivots = []
    r = 0
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        p = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        piv = rows[r][c]
        rows[r] = [v / piv for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    return pivots


def solve_square(M, b):
    n = len(M)
    aug = [[Fraction(v) for v in row] + [Fraction(bi)] for row, bi in zip(M, b)]
    pivots = _eliminate(aug)
    if pivots[:n] != list(range(n)) or len(pivots) < n:
        return None
    return [aug[i][n] for i in range(n)]


def null_space(M, n):
    rows = [[Fraction(v) for v in row] for row in M]
    pivots = _eliminate(rows) if rows else []
    basis = []
    for f in (c for c in range(n) if c not in pivots):
        x = [Fraction(0)] * n
        x[f] = Fraction(1)
        for row, p in zip(rows, pivots):
            x[p] = -row[f]
        basis.append(x)
    return basis


def _dot(a, b):
    return sum(x * y for x, y in zip(a, b))


def lp_by_enumeration(c, E, g):
    """max c.x s.t. E x <= g, x free.  Returns ('optimal', value) or a status.

    Any lineality space L of the feasible set is split off by imposing
    x orthogonal to L; the rest is pointed, so it is feasible iff it has a
    vertex and bounded iff no extreme ray improves the objective.
    """
    n = len(c)
    L = null_space(E, n)
    k = n - len(L)
    vertices = []
    for S in combinations(range(len(E)), k):
        M = [E[i] for i in S] + L
        v = solve_square(M, [g[i] for i in S] + [0] * len(L))
        if v is not None and all(_dot(row, v) <= gi for row, gi in zip(E, g)):
            vertices.append(v)
    if not vertices:
        return ("infeasible", None)
    if any(_dot(c, l) != 0 for l in L):
        return ("unbounded", None)
    if k >= 1:
        for S in combinations(range(len(E)), k - 1):
            M = [E[i] for i in S] + L
            rays = null_space(M, n)
            if len(rays) != 1:
                continue
            for d in (rays[0], [-x for x in rays[0]]):
                if all(_dot(row, d) <= 0 for row in E) and _dot(c, d) > 0:
                    return ("unbounded", None)
    return ("optimal", max(_dot(c, v) for v in vertices))


def extension_interval(ineqs, var, point):
    """Bounds on ``var`` over ``expr <= 0`` rows after fixing the other symbols.

    ``ineqs`` are (coeff_of_var, rest_value_at_point) pairs.  Returns
    (lo, hi, ok) with ``ok`` False when a row without ``var`` is violated.
    """
    lo, hi = None, None
    for a, rest in ineqs:
        if a == 0:
            if rest > 0:
                return lo, hi, False
        elif a > 0:
            b = -rest / a
            hi = b if hi is None else min(hi, b)
        else:
            b = -rest / a
            lo = b if lo is None else max(lo, b)
    return lo, hi, True


def interval_nonempty(ineqs, var, point):
    lo, hi, ok = extension_interval(ineqs, var, point)
    return ok and (lo is None or hi is None or lo <= hi)


def dantzig_cycles(c, A, b, max_pivots=50):
    """Textbook tableau for max c.x, A x <= b, x >= 0 with b >= 0.

    Largest-coefficient entering rule, lowest-row tie-break on the ratio
    test.  Returns True if a basis repeats before optimality.
    """
    m, n = len(A), len(c)
    T = [[Fraction(v) for v in row] + [Fraction(int(i == j)) for j in range(m)] + [Fraction(bi)]
         for i, (row, bi) in enumerate(zip(A, b))]
    z = [Fraction(-v) for v in c] + [Fraction(0)] * (m + 1)
    basis = list(range(n, n + m))
    seen = {tuple(basis)}
    for _ in range(max_pivots):
        e = min(range(n + m), key=lambda j: (z[j], j))
        if z[e] >= 0:
            return False
        rows = [i for i in range(m) if T[i][e] > 0]
        if not rows:
            return False
        r = min(rows, key=lambda i: (T[i][-1] / T[i][e], i))
        piv = T[r][e]
        T[r] = [v / piv for v in T[r]]
        for i in range(m):
            if i != r and T[i][e] != 0:
                f = T[i][e]
                T[i] = [a - f * bb for a, bb in zip(T[i], T[r])]
        f = z[e]
        z = [a - f * bb for a, bb in zip(z, T[r])]
        basis[r] = e
        key = tuple(basis)
        if key in seen:
            return True
        seen.add(key)
    return False

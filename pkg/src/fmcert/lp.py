"""Exact rational simplex over free unknowns.

``lp_max`` maximises a linear expression subject to ``expr_i <= 0``
constraints in which every symbol (rate variable or symbolic constant) is a
free real unknown.  The solver works on a dictionary

    x_B = beta + sum_j a_Bj * x_j

whose initial basic variables are the slacks ``s_i = -expr_i >= 0``.  Free
unknowns are pivoted into the basis first and never leave it; the remaining
problem is a standard one over nonnegative variables, solved with Chvatal's
single-auxiliary phase 1 and Bland's smallest-index rule (no cycling).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .lincore import Inequality, LinearExpression

OPTIMAL = "optimal"
UNBOUNDED = "unbounded"
INFEASIBLE = "infeasible"


@dataclass(frozen=True)
class LpOutcome:
    status: str
    optimum: Fraction | None = None
    # optimal: a maximising point; unbounded: an improving recession ray
    witness: dict | None = None
    # optimal only: multiplier per constraint (same order as the input)
    duals: tuple | None = None
    pivots: int = 0


@dataclass
class _Row:
    const: Fraction
    coeffs: dict = field(default_factory=dict)


class _Dictionary:
    def __init__(self, n):
        self.n = n
        self.rows: dict[int, _Row] = {}
        self.pivots = 0

    def restricted(self):
        return [b for b in self.rows if b >= self.n]

    def pivot(self, leaving, entering, objectives=()):
        row = self.rows.pop(leaving)
        a = row.coeffs.pop(entering)
        inv = 1 / a
        new = _Row(-row.const * inv, {j: -v * inv for j, v in row.coeffs.items()})
        new.coeffs[leaving] = inv
        self.rows[entering] = new
        for other in list(self.rows.values()) + list(objectives):
            if other is new:
                continue
            c = other.coeffs.pop(entering, None)
            if c is None:
                continue
            other.const += c * new.const
            coeffs = other.coeffs
            for j, v in new.coeffs.items():
                q = coeffs.get(j, 0) + c * v
                if q:
                    coeffs[j] = q
                else:
                    coeffs.pop(j, None)
        self.pivots += 1

    def simplex(self, obj: _Row, extra=()):
        """Bland's rule; returns None at optimum or the unbounded entering var."""
        while True:
            candidates = [j for j, v in obj.coeffs.items() if v > 0 and j >= self.n]
            if not candidates:
                return None
            e = min(candidates)
            best = None
            for b in self.restricted():
                a = self.rows[b].coeffs.get(e)
                if a is None or a >= 0:
                    continue
                ratio = self.rows[b].const / -a
                if best is None or ratio < best[0] or (ratio == best[0] and b < best[1]):
                    best = (ratio, b)
            if best is None:
                return e
            self.pivot(best[1], e, (obj,) + tuple(extra))


def lp_max(objective: LinearExpression, constraints: Sequence[Inequality],
           symbols: Sequence[str] | None = None) -> LpOutcome:
    """Maximise ``objective`` (scalar included) over ``constraints``."""
    constraints = list(constraints)
    if symbols is None:
        order: dict[str, None] = {}
        for ineq in constraints:
            for name in list(ineq.expr.var_coeffs) + list(ineq.expr.const_coeffs):
                order.setdefault(name)
        for name in list(objective.var_coeffs) + list(objective.const_coeffs):
            order.setdefault(name)
        symbols = list(order)
    else:
        symbols = list(symbols)
        used = objective.names().union(*(c.expr.names() for c in constraints))
        symbols += sorted(used - set(symbols))
    index = {s: j for j, s in enumerate(symbols)}
    n, m = len(symbols), len(constraints)

    d = _Dictionary(n)
    for i, ineq in enumerate(constraints):
        e = ineq.expr
        coeffs = {index[k]: -v for k, v in e.var_coeffs.items()}
        coeffs.update({index[k]: -v for k, v in e.const_coeffs.items()})
        d.rows[n + i] = _Row(-e.scalar, coeffs)

    # phase 0: free unknowns enter the basis for good
    for j in range(n):
        for b in sorted(d.restricted()):
            if d.rows[b].coeffs.get(j):
                d.pivot(b, j)
                break

    # phase 1
    aux = n + m
    negative = [b for b in d.restricted() if d.rows[b].const < 0]
    if negative:
        for b in d.restricted():
            d.rows[b].coeffs[aux] = Fraction(1)
        w = _Row(Fraction(0), {aux: Fraction(-1)})
        leave = min(negative, key=lambda b: (d.rows[b].const, b))
        d.pivot(leave, aux, (w,))
        d.simplex(w)
        if w.const < 0:
            return LpOutcome(INFEASIBLE, pivots=d.pivots)
        if aux in d.rows:
            row = d.rows[aux]
            if row.coeffs:
                d.pivot(aux, min(row.coeffs))
            else:
                del d.rows[aux]
        for row in d.rows.values():
            row.coeffs.pop(aux, None)

    # phase 2
    obj = _Row(objective.scalar)
    for name, c in list(objective.var_coeffs.items()) + list(objective.const_coeffs.items()):
        j = index[name]
        if j in d.rows:
            row = d.rows[j]
            obj.const += c * row.const
            for k, v in row.coeffs.items():
                q = obj.coeffs.get(k, 0) + c * v
                if q:
                    obj.coeffs[k] = q
                else:
                    obj.coeffs.pop(k, None)
        else:
            q = obj.coeffs.get(j, 0) + c
            if q:
                obj.coeffs[j] = q
            else:
                obj.coeffs.pop(j, None)

    # an unknown that never entered appears in no constraint
    for j in sorted(k for k in obj.coeffs if k < n):
        sign = 1 if obj.coeffs[j] > 0 else -1
        ray = {symbols[j]: Fraction(sign)}
        for b, row in d.rows.items():
            if b < n and row.coeffs.get(j):
                ray[symbols[b]] = sign * row.coeffs[j]
        return LpOutcome(UNBOUNDED, witness=_full(ray, symbols), pivots=d.pivots)

    entering = d.simplex(obj)
    if entering is not None:
        ray = {symbols[b]: row.coeffs[entering]
               for b, row in d.rows.items() if b < n and row.coeffs.get(entering)}
        return LpOutcome(UNBOUNDED, witness=_full(ray, symbols), pivots=d.pivots)

    point = {s: (d.rows[j].const if j in d.rows else Fraction(0)) for j, s in enumerate(symbols)}
    duals = tuple(-obj.coeffs.get(n + i, Fraction(0)) for i in range(m))
    return LpOutcome(OPTIMAL, obj.const, point, duals, d.pivots)


def _full(partial, symbols):
    return {s: partial.get(s, Fraction(0)) for s in symbols}


def is_feasible(constraints: Sequence[Inequality]) -> bool:
    return lp_max(LinearExpression(), constraints).status != INFEASIBLE

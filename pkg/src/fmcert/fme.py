"""Fourier-Motzkin elimination with a replayable log."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm

from .lincore import (
    FactSet,
    Inequality,
    InequalitySystem,
    UndeclaredSymbolError,
    canonicalize,
    drop_trivial,
    format_inequality,
)

PRUNE_POLICIES = ("never", "after-each", "end")


@dataclass(frozen=True)
class Combination:
    lower: Inequality
    upper: Inequality
    lower_mult: Fraction
    upper_mult: Fraction
    result: Inequality

    def rederive(self) -> Inequality:
        expr = self.lower.expr * self.lower_mult + self.upper.expr * self.upper_mult
        return canonicalize(Inequality(expr, self.result.label))


@dataclass(frozen=True)
class EliminationLog:
    eliminated_var: str
    upper_bounds: tuple
    lower_bounds: tuple
    free: tuple
    combinations: tuple

    def counts(self):
        return len(self.upper_bounds), len(self.lower_bounds), len(self.free)

    def format(self, table=None) -> str:
        def labels(ineqs):
            return ", ".join(i.label for i in ineqs) or "-"

        up, lo, fr = self.counts()
        lines = [f"eliminate {self.eliminated_var}",
                 f"  upper ({up}): {labels(self.upper_bounds)}",
                 f"  lower ({lo}): {labels(self.lower_bounds)}",
                 f"  free  ({fr}): {labels(self.free)}"]
        for c in self.combinations:
            lines.append(f"  {_fmt_mult(c.lower_mult)}*[{c.lower.label}] + "
                         f"{_fmt_mult(c.upper_mult)}*[{c.upper.label}] => "
                         f"{format_inequality(c.result, table)}")
        return "\n".join(lines)


def _fmt_mult(q):
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _lcm_fraction(a: Fraction, b: Fraction) -> Fraction:
    return Fraction(lcm(a.numerator, b.numerator), gcd(a.denominator, b.denominator))


def eliminate(system: InequalitySystem, var: str) -> tuple[InequalitySystem, EliminationLog]:
    """Project ``var`` out of ``system``.

    Each (lower, upper) pair is scaled so the coefficients of ``var`` become
    -L and +L with L the lcm of their magnitudes, then added.  Tautologies
    are dropped and a contradiction raises ``InfeasibleSystemError``.
    """
    if var not in system.table.variables:
        raise UndeclaredSymbolError(f"{var!r} is not a declared variable")
    upper, lower, free = [], [], []
    for ineq in system:
        c = ineq.expr.var_coeffs.get(var, 0)
        (upper if c > 0 else lower if c < 0 else free).append(ineq)

    combos = []
    for lo in lower:
        a = -lo.expr.var_coeffs[var]
        for up in upper:
            b = up.expr.var_coeffs[var]
            common = _lcm_fraction(a, b)
            lm, um = common / a, common / b
            expr = lo.expr * lm + up.expr * um
            assert var not in expr.var_coeffs
            result = canonicalize(Inequality(expr, f"{lo.label} ⊕ {up.label}"))
            combos.append(Combination(lo, up, lm, um, result))

    kept = drop_trivial(free + [c.result for c in combos], f"eliminating {var}")
    out = InequalitySystem(system.table.without_variable(var), kept)
    log = EliminationLog(var, tuple(upper), tuple(lower), tuple(free), tuple(combos))
    return out, log


def project(system: InequalitySystem, variables, facts: FactSet | None = None,
            prune: str = "never"):
    """Eliminate ``variables`` in the given order.

    ``prune`` is one of ``never``, ``after-each`` (prune after every
    elimination) or ``end`` (prune once at the end).  Returns the projected
    system, the elimination logs and the certificates of every pruned
    inequality.
    """
    from .implication import prune as prune_system

    if prune not in PRUNE_POLICIES:
        raise ValueError(f"prune policy must be one of {PRUNE_POLICIES}")
    variables = list(variables)
    if len(set(variables)) != len(variables):
        raise ValueError("variables to eliminate must be distinct")
    for v in variables:
        if v not in system.table.variables:
            raise UndeclaredSymbolError(f"{v!r} is not a declared variable")
    facts = facts if facts is not None else FactSet()
    logs, certs = [], []
    for v in variables:
        system, log = eliminate(system, v)
        logs.append(log)
        if prune == "after-each":
            system, removed = prune_system(system, facts)
            certs.extend(removed)
    if prune == "end" and variables:
        system, removed = prune_system(system, facts)
        certs.extend(removed)
    return system, logs, certs

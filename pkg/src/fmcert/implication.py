"""Implication tests with Farkas certificates, pruning and equivalence.

All symbols are free reals; only the fact set constrains the constants.
A certificate for ``target <= 0`` is a nonnegative combination of context
and fact inequalities whose symbol coefficients equal the target's exactly
and whose scalar is at least the target's::

    sum(lam_i * expr_i) - target.expr == c  with  c >= 0 a number

so that ``target.expr = sum(lam_i * expr_i) - c <= 0``.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, NamedTuple, Sequence

from .lincore import (
    FactSet,
    Inequality,
    InequalitySystem,
    InfeasibleSystemError,
    LinearExpression,
    as_fraction,
)
from .lp import INFEASIBLE, OPTIMAL, LpOutcome, lp_max

__all__ = [
    "FactSet", "FarkasCertificate", "Implication", "LpOutcome", "UnknownLabelError",
    "format_certificates", "is_implied", "lp_max", "parse_certificates", "prune",
    "systems_equivalent", "verify_certificate",
]

log = logging.getLogger(__name__)


class UnknownLabelError(KeyError):
    pass


@dataclass(frozen=True)
class FarkasCertificate:
    target: str
    multipliers: Mapping[str, Fraction]

    def format(self) -> str:
        lines = [f"target {self.target}"]
        for label, q in self.multipliers.items():
            lines.append(f"{label} * {_fmt(q)}")
        return "\n".join(lines)


def _fmt(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def format_certificates(certs: Sequence[FarkasCertificate]) -> str:
    return "".join(c.format() + "\n\n" for c in certs)


def parse_certificates(text: str) -> list[FarkasCertificate]:
    """Read blocks of ``target <label>`` followed by ``<label> * <rational>``."""
    certs = []
    target, mults = None, {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("target "):
            if target is not None:
                certs.append(FarkasCertificate(target, mults))
            target, mults = line[len("target "):].strip(), {}
            continue
        label, sep, value = line.rpartition(" * ")
        if not sep or target is None:
            raise ValueError(f"line {lineno}: expected '<label> * <rational>' after a target")
        try:
            mults[label.strip()] = Fraction(value.strip())
        except (ValueError, ZeroDivisionError):
            raise ValueError(f"line {lineno}: bad multiplier {value.strip()!r}") from None
    if target is not None:
        certs.append(FarkasCertificate(target, mults))
    return certs


class Implication(NamedTuple):
    implied: bool
    certificate: FarkasCertificate | None
    # context plus facts is infeasible: implied only vacuously
    vacuous: bool = False


def is_implied(target: Inequality, context: Sequence[Inequality],
               facts: FactSet | Sequence[Inequality] = ()) -> Implication:
    """Decide whether ``target`` follows from ``context`` and ``facts``."""
    context = list(context)
    if target.label and any(c.label == target.label for c in context):
        raise ValueError(f"target {target.label!r} is part of its own context")
    constraints = context + list(facts)
    outcome = lp_max(target.expr, constraints)
    if outcome.status == INFEASIBLE:
        return Implication(True, None, vacuous=True)
    if outcome.status != OPTIMAL or outcome.optimum > 0:
        return Implication(False, None)
    mults: dict[str, Fraction] = {}
    for ineq, lam in zip(constraints, outcome.duals):
        if lam:
            mults[ineq.label] = mults.get(ineq.label, 0) + lam
    cert = FarkasCertificate(target.label, mults)
    return Implication(True, cert)


def combine(cert: FarkasCertificate, context, facts=()) -> LinearExpression:
    """``sum(lam_i * expr_i)`` over the certificate's labels."""
    pool: dict[str, Inequality] = {}
    for ineq in list(context) + list(facts):
        if ineq.label in pool and pool[ineq.label].expr != ineq.expr:
            raise ValueError(f"label {ineq.label!r} is ambiguous")
        pool[ineq.label] = ineq
    total = LinearExpression()
    for label, lam in cert.multipliers.items():
        if label not in pool:
            raise UnknownLabelError(label)
        total = total + pool[label].expr * as_fraction(lam)
    return total


def verify_certificate(cert: FarkasCertificate, target: Inequality, context,
                       facts=()) -> bool:
    """Exact check of a certificate, independent of the LP that produced it."""
    if cert.target != target.label:
        return False
    if any(as_fraction(lam) < 0 for lam in cert.multipliers.values()):
        return False
    gap = combine(cert, context, facts) - target.expr
    return not gap.has_symbols() and gap.scalar >= 0


def prune(system: InequalitySystem, facts: FactSet | Sequence[Inequality] = ()
          ) -> tuple[InequalitySystem, list[FarkasCertificate]]:
    """Drop every inequality implied by the rest of the system and ``facts``.

    Candidates are visited in canonical order and each removal restarts the
    scan.  Members already found irredundant stay irredundant as the context
    shrinks, so the restart resumes at the current position without
    re-testing them.
    """
    facts = list(facts)
    if lp_max(LinearExpression(), list(system) + facts).status == INFEASIBLE:
        raise InfeasibleSystemError("system and facts are jointly infeasible; "
                                    "pruning is undefined")
    kept = list(system.sorted())
    certs = []
    i = 0
    while i < len(kept):
        cand = kept[i]
        verdict = is_implied(cand, kept[:i] + kept[i + 1:], facts)
        if verdict.implied:
            assert not verdict.vacuous
            log.info("pruned %s", cand.label)
            certs.append(verdict.certificate)
            del kept[i]
        else:
            i += 1
    survivors = {k.expr for k in kept}
    return system.with_inequalities([q for q in system if q.expr in survivors]), certs


def systems_equivalent(a: InequalitySystem, b: InequalitySystem,
                       facts: FactSet | Sequence[Inequality] = ()) -> bool:
    """Mutual implication of ``a`` and ``b`` under ``facts``."""
    if (a.table.variables, a.table.constants) != (b.table.variables, b.table.constants):
        raise ValueError("systems are declared over different symbol tables")
    facts = list(facts)
    for left, right in ((a, b), (b, a)):
        context = list(right)
        for ineq in left:
            if ineq.expr in right.canonical_set():
                continue
            if not is_implied(ineq.relabel(""), context, facts).implied:
                return False
    return True

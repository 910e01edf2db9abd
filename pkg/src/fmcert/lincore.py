"""Exact linear expressions, inequalities and the text DSL.

Every coefficient is a :class:`fractions.Fraction`.  An :class:`Inequality`
always means ``expr <= 0``; rate variables and symbolic constants live in
separate coefficient maps so that constants can later be instantiated with
numbers without touching the variable part.
"""

from __future__ import annotations

import logging
import math
import re
from dataclasses import dataclass
from fractions import Fraction
from types import MappingProxyType
from typing import Iterable, Iterator, Mapping

log = logging.getLogger(__name__)

CONST_KINDS = ("dimension", "link-rank", "composite-rank")
DEFAULT_KIND = "composite-rank"

_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


class DslError(ValueError):
    """Malformed DSL input.  ``line``/``column`` are 1-based when known."""

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}" + (f", column {column}" if column else "") + ": "
        super().__init__(where + message)


class UndeclaredSymbolError(DslError):
    pass


class DuplicateDeclarationError(DslError):
    pass


class InfeasibleSystemError(ValueError):
    """Raised when a pipeline step derives ``0 < c`` style contradictions."""

    def __init__(self, message, inequality=None):
        super().__init__(message)
        self.inequality = inequality


def as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        raise TypeError("floats are not accepted; use int, str or Fraction")
    return Fraction(value)


# ---------------------------------------------------------------------------
# symbols


@dataclass(frozen=True)
class SymbolTable:
    """Declared rate variables and symbolic constants, in canonical order."""

    variables: tuple = ()
    constants: tuple = ()
    kinds: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "variables", tuple(self.variables))
        object.__setattr__(self, "constants", tuple(self.constants))
        kinds = tuple(self.kinds) or (DEFAULT_KIND,) * len(self.constants)
        object.__setattr__(self, "kinds", kinds)
        if len(self.kinds) != len(self.constants):
            raise ValueError("one kind per constant is required")
        seen = set()
        for name in self.variables + self.constants:
            if not _NAME_RE.match(name):
                raise DslError(f"invalid symbol name {name!r}")
            if name in seen:
                raise DuplicateDeclarationError(f"symbol {name!r} declared twice")
            seen.add(name)
        for kind in self.kinds:
            if kind not in CONST_KINDS:
                raise ValueError(f"unknown constant kind {kind!r}")

    @property
    def symbols(self) -> tuple:
        return self.variables + self.constants

    def kind_of(self, name):
        return self.kinds[self.constants.index(name)]

    def is_variable(self, name):
        return name in self.variables

    def is_constant(self, name):
        return name in self.constants

    def __contains__(self, name):
        return name in self.variables or name in self.constants

    def without_variable(self, name) -> "SymbolTable":
        return SymbolTable(tuple(v for v in self.variables if v != name),
                           self.constants, self.kinds)

    def with_variables(self, names) -> "SymbolTable":
        extra = tuple(n for n in names if n not in self.variables)
        return SymbolTable(self.variables + extra, self.constants, self.kinds)

    def without_constants(self, names) -> "SymbolTable":
        drop = set(names)
        keep = [(c, k) for c, k in zip(self.constants, self.kinds) if c not in drop]
        return SymbolTable(self.variables, tuple(c for c, _ in keep),
                           tuple(k for _, k in keep))


# ---------------------------------------------------------------------------
# expressions


class LinearExpression:
    """``sum(var_coeffs) + sum(const_coeffs) + scalar`` with exact coefficients.

    Immutable; zero coefficients are never stored.
    """

    __slots__ = ("_vars", "_consts", "_scalar", "_hash")

    def __init__(self, var_coeffs: Mapping | None = None,
                 const_coeffs: Mapping | None = None, scalar=0):
        self._vars = _clean(var_coeffs)
        self._consts = _clean(const_coeffs)
        overlap = self._vars.keys() & self._consts.keys()
        if overlap:
            raise ValueError(f"names used as variable and constant: {sorted(overlap)}")
        self._scalar = as_fraction(scalar)
        self._hash = None

    @property
    def var_coeffs(self) -> Mapping[str, Fraction]:
        return MappingProxyType(self._vars)

    @property
    def const_coeffs(self) -> Mapping[str, Fraction]:
        return MappingProxyType(self._consts)

    @property
    def scalar(self) -> Fraction:
        return self._scalar

    def coeff(self, name) -> Fraction:
        return self._vars.get(name) or self._consts.get(name) or Fraction(0)

    def names(self):
        return set(self._vars) | set(self._consts)

    def is_zero(self):
        return not self._vars and not self._consts and self._scalar == 0

    def has_symbols(self):
        return bool(self._vars or self._consts)

    def __add__(self, other):
        if not isinstance(other, LinearExpression):
            return LinearExpression(self._vars, self._consts, self._scalar + as_fraction(other))
        return LinearExpression(_merge(self._vars, other._vars, 1),
                                _merge(self._consts, other._consts, 1),
                                self._scalar + other._scalar)

    __radd__ = __add__

    def __neg__(self):
        return self * -1

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, factor):
        q = as_fraction(factor)
        return LinearExpression({k: q * v for k, v in self._vars.items()},
                                {k: q * v for k, v in self._consts.items()},
                                q * self._scalar)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, LinearExpression):
            return NotImplemented
        return (self._scalar == other._scalar and self._vars == other._vars
                and self._consts == other._consts)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((frozenset(self._vars.items()),
                               frozenset(self._consts.items()), self._scalar))
        return self._hash

    def __repr__(self):
        return f"LinearExpression({format_expression(self)!r})"

    def substitute(self, name, replacement: "LinearExpression") -> "LinearExpression":
        c = self._vars.get(name)
        if c is None:
            return self
        rest = LinearExpression({k: v for k, v in self._vars.items() if k != name},
                                self._consts, self._scalar)
        return rest + replacement * c

    def instantiate(self, assignment: Mapping) -> "LinearExpression":
        """Replace every constant found in ``assignment`` by its value."""
        scalar = self._scalar
        consts = {}
        for k, v in self._consts.items():
            if k in assignment:
                scalar += v * as_fraction(assignment[k])
            else:
                consts[k] = v
        return LinearExpression(self._vars, consts, scalar)

    def evaluate(self, point: Mapping) -> Fraction:
        total = self._scalar
        for k, v in self._vars.items():
            total += v * as_fraction(point[k])
        for k, v in self._consts.items():
            total += v * as_fraction(point[k])
        return total

    def vector(self, table: SymbolTable) -> tuple:
        """Coefficients over the table's symbols, then the scalar."""
        return tuple(self.coeff(s) for s in table.symbols) + (self._scalar,)


def _clean(coeffs):
    out = {}
    for k, v in (coeffs or {}).items():
        q = as_fraction(v)
        if q:
            out[k] = q
    return out


def _merge(a, b, sign):
    out = dict(a)
    for k, v in b.items():
        q = out.get(k, 0) + sign * v
        if q:
            out[k] = q
        else:
            out.pop(k, None)
    return out


def var(name) -> LinearExpression:
    return LinearExpression({name: 1})


def const(name) -> LinearExpression:
    return LinearExpression(const_coeffs={name: 1})


# ---------------------------------------------------------------------------
# inequalities


@dataclass(frozen=True)
class Inequality:
    """``expr <= 0`` with a provenance label."""

    expr: LinearExpression
    label: str = ""

    @classmethod
    def le(cls, lhs, rhs, label="") -> "Inequality":
        """Canonical inequality for ``lhs <= rhs``."""
        return canonicalize(cls(_as_expr(lhs) - _as_expr(rhs), label))

    @classmethod
    def ge(cls, lhs, rhs, label="") -> "Inequality":
        return cls.le(rhs, lhs, label)

    @property
    def is_tautology(self):
        return not self.expr.has_symbols() and self.expr.scalar <= 0

    @property
    def is_contradiction(self):
        return not self.expr.has_symbols() and self.expr.scalar > 0

    def relabel(self, label) -> "Inequality":
        return Inequality(self.expr, label)

    def involves(self, name):
        return name in self.expr.var_coeffs or name in self.expr.const_coeffs

    def holds_at(self, point: Mapping) -> bool:
        return self.expr.evaluate(point) <= 0

    def __str__(self):
        return f"{self.label}: {format_inequality(self)}" if self.label else format_inequality(self)


def _as_expr(value):
    if isinstance(value, LinearExpression):
        return value
    return LinearExpression(scalar=value)


def canonicalize(ineq: Inequality) -> Inequality:
    """Scale ``ineq`` by a positive rational to coprime integer coefficients.

    The scalar takes part in the gcd.  Idempotent and invariant under
    positive rescaling; tautologies become ``0 <= 0`` or ``-1 <= 0``, and
    contradictions ``1 <= 0``.
    """
    e = ineq.expr
    coeffs = list(e.var_coeffs.values()) + list(e.const_coeffs.values())
    if not coeffs:
        s = e.scalar
        return Inequality(LinearExpression(scalar=(s > 0) - (s < 0)), ineq.label)
    values = coeffs + [e.scalar]
    denom = 1
    for v in values:
        denom = denom * v.denominator // math.gcd(denom, v.denominator)
    g = 0
    for v in values:
        g = math.gcd(g, v.numerator * (denom // v.denominator))
    factor = Fraction(denom, g)
    if factor == 1:
        return ineq
    return Inequality(e * factor, ineq.label)


# ---------------------------------------------------------------------------
# systems


def merge_label(a, b):
    return a if not b or a == b else (b if not a else f"{a} | {b}")


class InequalitySystem:
    """An ordered, duplicate-free collection of canonical inequalities."""

    def __init__(self, table: SymbolTable, inequalities: Iterable[Inequality] = ()):
        self.table = table
        merged: dict[LinearExpression, str] = {}
        for ineq in inequalities:
            ineq = canonicalize(ineq)
            unknown = ineq.expr.names() - set(table.symbols)
            if unknown:
                raise UndeclaredSymbolError(
                    f"undeclared symbol(s) {sorted(unknown)} in {ineq.label!r}")
            if ineq.expr in merged:
                merged[ineq.expr] = merge_label(merged[ineq.expr], ineq.label)
            else:
                merged[ineq.expr] = ineq.label
        self._ineqs = tuple(Inequality(e, lbl) for e, lbl in merged.items())

    @property
    def inequalities(self) -> tuple:
        return self._ineqs

    def __len__(self):
        return len(self._ineqs)

    def __iter__(self) -> Iterator[Inequality]:
        return iter(self._ineqs)

    def __eq__(self, other):
        if not isinstance(other, InequalitySystem):
            return NotImplemented
        return self.table == other.table and self._ineqs == other._ineqs

    def __repr__(self):
        return f"InequalitySystem({len(self)} inequalities over {self.table.variables})"

    @property
    def labels(self):
        return [i.label for i in self._ineqs]

    def by_label(self, label) -> Inequality:
        for ineq in self._ineqs:
            if ineq.label == label:
                return ineq
        raise KeyError(label)

    def sort_key(self, ineq: Inequality):
        return tuple(ineq.expr.vector(self.table))

    def sorted(self) -> "InequalitySystem":
        return InequalitySystem(self.table, sorted(self._ineqs, key=self.sort_key))

    def canonical_set(self) -> frozenset:
        return frozenset(i.expr for i in self._ineqs)

    def same_set(self, other: "InequalitySystem") -> bool:
        """Equality as sets of canonical inequalities, ignoring labels and order."""
        return self.canonical_set() == other.canonical_set()

    def with_inequalities(self, inequalities) -> "InequalitySystem":
        return InequalitySystem(self.table, inequalities)

    def add(self, *inequalities) -> "InequalitySystem":
        return InequalitySystem(self.table, self._ineqs + tuple(inequalities))

    def without(self, labels) -> "InequalitySystem":
        drop = set(labels)
        missing = drop - set(self.labels)
        if missing:
            raise KeyError(f"no inequalities labelled {sorted(missing)}")
        return InequalitySystem(self.table, [i for i in self._ineqs if i.label not in drop])

    def involving(self, name):
        return [i for i in self._ineqs if i.involves(name)]

    def instantiate(self, assignment: Mapping) -> "InequalitySystem":
        """Substitute numbers for constants; the result keeps only variables
        and any constants missing from ``assignment``."""
        table = self.table.without_constants(c for c in self.table.constants if c in assignment)
        return InequalitySystem(table, [Inequality(i.expr.instantiate(assignment), i.label)
                                        for i in self._ineqs])

    def adopt_labels(self, reference: "InequalitySystem") -> "InequalitySystem":
        """Relabel members that also occur in ``reference`` with its labels."""
        names = {i.expr: i.label for i in reference}
        return InequalitySystem(self.table, [i.relabel(names.get(i.expr, i.label))
                                             for i in self._ineqs])


def drop_trivial(inequalities, context=""):
    """Remove tautologies; raise on a contradiction."""
    out = []
    for ineq in inequalities:
        if ineq.is_contradiction:
            raise InfeasibleSystemError(
                f"contradiction {ineq.label or '<unlabelled>'}: "
                f"{format_inequality(ineq)}{' (' + context + ')' if context else ''}",
                ineq)
        if ineq.is_tautology:
            log.info("dropping tautology %s", ineq.label)
            continue
        out.append(ineq)
    return out


def substitute_variable(system: InequalitySystem, name: str,
                        replacement: LinearExpression) -> InequalitySystem:
    """Replace ``name`` by ``replacement`` everywhere and undeclare it."""
    if name not in system.table.variables:
        raise UndeclaredSymbolError(f"{name!r} is not a declared variable")
    if name in replacement.var_coeffs:
        raise ValueError(f"replacement for {name!r} refers to {name!r}")
    unknown = replacement.names() - set(system.table.symbols)
    if unknown:
        raise UndeclaredSymbolError(f"replacement uses undeclared {sorted(unknown)}")
    table = system.table.without_variable(name)
    ineqs = [canonicalize(Inequality(i.expr.substitute(name, replacement), i.label))
             for i in system]
    return InequalitySystem(table, drop_trivial(ineqs, f"substituting {name}"))


# ---------------------------------------------------------------------------
# facts


class FactSet:
    """Inequalities over symbolic constants only, assumed throughout."""

    def __init__(self, facts: Iterable[Inequality] = ()):
        facts = tuple(canonicalize(f) for f in facts)
        for f in facts:
            if f.expr.var_coeffs:
                raise ValueError(f"fact {f.label!r} mentions variables "
                                 f"{sorted(f.expr.var_coeffs)}")
        self.facts = facts

    def __iter__(self):
        return iter(self.facts)

    def __len__(self):
        return len(self.facts)

    def __eq__(self, other):
        return isinstance(other, FactSet) and self.facts == other.facts

    def __repr__(self):
        return f"FactSet({len(self)} facts)"

    @property
    def labels(self):
        return [f.label for f in self.facts]

    def by_label(self, label):
        for f in self.facts:
            if f.label == label:
                return f
        raise KeyError(label)


# ---------------------------------------------------------------------------
# formatting


def _format_number(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def format_terms(terms, scalar=Fraction(0)) -> str:
    parts = []
    for name, c in terms:
        mag = abs(c)
        body = name if mag == 1 else f"{_format_number(mag)}*{name}"
        parts.append(("-" if c < 0 else "+", body))
    if scalar:
        parts.append(("-" if scalar < 0 else "+", _format_number(abs(scalar))))
    if not parts:
        return "0"
    sign, body = parts[0]
    out = ("-" if sign == "-" else "") + body
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


def _ordered(coeffs, order):
    if order is None:
        return sorted(coeffs.items())
    rank = {n: i for i, n in enumerate(order)}
    return sorted(coeffs.items(), key=lambda kv: (rank.get(kv[0], len(rank)), kv[0]))


def format_expression(expr: LinearExpression, table: SymbolTable | None = None) -> str:
    order = table.symbols if table else None
    terms = _ordered(expr.var_coeffs, order) + _ordered(expr.const_coeffs, order)
    return format_terms(terms, expr.scalar)


def format_inequality(ineq: Inequality, table: SymbolTable | None = None) -> str:
    """Render ``expr <= 0`` as ``lhs <= rhs`` with variables on the left."""
    e = ineq.expr
    order = table.symbols if table else None
    consts = _ordered(e.const_coeffs, order)
    if e.var_coeffs:
        lhs = _ordered(e.var_coeffs, order)
        rhs = [(n, -c) for n, c in consts]
        rhs_scalar = -e.scalar
    else:
        lhs = [(n, c) for n, c in consts if c > 0]
        rhs = [(n, -c) for n, c in consts if c < 0]
        rhs_scalar = -e.scalar
    return f"{format_terms(lhs)} <= {format_terms(rhs, rhs_scalar)}"


# ---------------------------------------------------------------------------
# DSL

_TOKEN_RE = re.compile(r"\s*(?:(?P<num>\d+(?:/\d+)?)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*]))")
_REL_RE = re.compile(r"<=|>=|==")
# label ends at the first colon followed by whitespace (labels may contain ':')
_LABEL_RE = re.compile(r"\s*(?:ineq|fact)\s+(?P<label>.*?):(?=\s|$)")


def _parse_linear(text, table: SymbolTable, line, col0) -> LinearExpression:
    pos = 0
    var_c: dict[str, Fraction] = {}
    const_c: dict[str, Fraction] = {}
    scalar = Fraction(0)
    expect_term = True
    sign = 1
    n_terms = 0
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos >= len(text):
            break
        m = _TOKEN_RE.match(text, pos)
        if not m:
            raise DslError(f"unexpected character {text[pos]!r}", line, col0 + pos)
        col = col0 + m.start(m.lastgroup)
        pos = m.end()
        if m.group("op") in ("+", "-"):
            if not expect_term and n_terms:
                sign = 1 if m.group("op") == "+" else -1
                expect_term = True
                continue
            if expect_term and n_terms == 0 and sign == 1:
                sign = 1 if m.group("op") == "+" else -1
                continue
            raise DslError(f"unexpected {m.group('op')!r}", line, col)
        if m.group("op") == "*":
            raise DslError("unexpected '*'", line, col)
        if not expect_term:
            raise DslError("missing '+' or '-' between terms", line, col)
        if m.group("num"):
            try:
                coeff = Fraction(m.group("num"))
            except ZeroDivisionError:
                raise DslError("zero denominator", line, col) from None
            star = re.compile(r"\s*\*\s*([A-Za-z_][A-Za-z0-9_]*)").match(text, pos)
            if star:
                name, name_col = star.group(1), col0 + star.start(1)
                pos = star.end()
            elif re.compile(r"\s*\*").match(text, pos):
                raise DslError("expected a symbol after '*'", line, col0 + pos)
            else:
                scalar += sign * coeff
                name = None
        else:
            coeff, name, name_col = Fraction(1), m.group("name"), col
        if name is not None:
            if table.is_variable(name):
                var_c[name] = var_c.get(name, 0) + sign * coeff
            elif table.is_constant(name):
                const_c[name] = const_c.get(name, 0) + sign * coeff
            else:
                raise UndeclaredSymbolError(f"undeclared symbol {name!r}", line, name_col)
        n_terms += 1
        expect_term = False
        sign = 1
    if expect_term:
        raise DslError("empty or incomplete expression", line, col0 + pos)
    return LinearExpression(var_c, const_c, scalar)


def parse_system(text: str) -> tuple[InequalitySystem, FactSet]:
    """Parse a DSL document into a system and a fact set.

    Declarations must precede their use.  ``==`` facts become two opposing
    inequalities labelled ``<label>[le]`` and ``<label>[ge]``.
    """
    variables: list[str] = []
    constants: list[str] = []
    kinds: list[str] = []
    seen: set[str] = set()
    labels: set[str] = set()
    ineqs: list[Inequality] = []
    facts: list[Inequality] = []
    table = SymbolTable()

    def declare(name, lineno, col):
        if not _NAME_RE.match(name) or name in CONST_KINDS:
            raise DslError(f"invalid symbol name {name!r}", lineno, col)
        if name in seen:
            raise DuplicateDeclarationError(f"symbol {name!r} already declared", lineno, col)
        seen.add(name)

    def use_label(label, lineno):
        if not label:
            raise DslError("missing label", lineno, 1)
        if label in labels:
            raise DuplicateDeclarationError(f"label {label!r} already used", lineno, 1)
        labels.add(label)

    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0]
        stripped = body.strip()
        if not stripped:
            continue
        indent = len(body) - len(body.lstrip())
        keyword, _, rest = stripped.partition(" ")
        rest_col = indent + len(keyword) + 2
        if keyword in ("var", "sym"):
            if ineqs or facts:
                raise DslError("declarations must precede inequalities and facts", lineno, 1)
            tokens = [(m.group(), m.start() + rest_col) for m in re.finditer(r"\S+", rest)]
            if not tokens:
                raise DslError(f"'{keyword}' needs at least one name", lineno, indent + 1)
            for tok, col in tokens:
                if keyword == "sym" and tok in CONST_KINDS:
                    if not constants or kinds[-1] is not None:
                        raise DslError(f"kind {tok!r} must follow a symbol name", lineno, col)
                    kinds[-1] = tok
                    continue
                if keyword == "sym" and constants and kinds[-1] is None:
                    kinds[-1] = DEFAULT_KIND
                declare(tok, lineno, col)
                if keyword == "var":
                    variables.append(tok)
                else:
                    constants.append(tok)
                    kinds.append(None)
            if keyword == "sym" and kinds[-1] is None:
                kinds[-1] = DEFAULT_KIND
            table = SymbolTable(tuple(variables), tuple(constants), tuple(kinds))
            continue
        if keyword not in ("ineq", "fact"):
            raise DslError(f"unknown keyword {keyword!r}", lineno, indent + 1)
        m = _LABEL_RE.match(body)
        if not m:
            raise DslError("expected '<label>:' before the expression", lineno, indent + 1)
        label = m.group("label").strip()
        expr_col = m.end()
        expr_text = body[expr_col:]
        rel_match = list(_REL_RE.finditer(expr_text))
        if len(rel_match) != 1:
            raise DslError("expected exactly one of '<=', '>=', '=='", lineno, expr_col + 1)
        rel = rel_match[0]
        lhs_col = expr_col + 1
        lhs = _parse_linear(expr_text[:rel.start()], table, lineno, lhs_col)
        rhs = _parse_linear(expr_text[rel.end():], table, lineno, expr_col + rel.end() + 1)
        op = rel.group()
        if keyword == "ineq":
            if op == "==":
                raise DslError("equalities are only allowed as facts", lineno, expr_col + rel.start() + 1)
            use_label(label, lineno)
            ineqs.append(Inequality.le(lhs, rhs, label) if op == "<="
                         else Inequality.ge(lhs, rhs, label))
        else:
            if lhs.var_coeffs or rhs.var_coeffs:
                raise DslError(f"fact {label!r} mentions a variable", lineno, lhs_col)
            if op == "==":
                use_label(label, lineno)
                facts.append(Inequality.le(lhs, rhs, f"{label}[le]"))
                facts.append(Inequality.ge(lhs, rhs, f"{label}[ge]"))
            else:
                use_label(label, lineno)
                facts.append(Inequality.le(lhs, rhs, label) if op == "<="
                             else Inequality.ge(lhs, rhs, label))
    return InequalitySystem(table, ineqs), FactSet(facts)


HEADER = "# fmcert inequality system"


def serialize_system(system: InequalitySystem, facts: FactSet | None = None) -> str:
    """Deterministic DSL text; inequalities in canonical sort order.

    Facts, when given, follow in their stored order.
    """
    table = system.table
    lines = [HEADER]
    if table.variables:
        lines.append("var " + " ".join(table.variables))
    for name, kind in zip(table.constants, table.kinds):
        lines.append(f"sym {name} {kind}")
    for ineq in system.sorted():
        lines.append(f"ineq {ineq.label}: {format_inequality(ineq, table)}")
    if facts is not None:
        for f in facts:
            lines.append(f"fact {f.label}: {format_inequality(f, table)}")
    return "\n".join(lines) + "\n"

"""Random inputs shared by the property tests."""

import random
from fractions import Fraction

from fmcert.lincore import Inequality, InequalitySystem, LinearExpression, SymbolTable

VAR_NAMES = ("x0", "x1", "x2", "x3")


def random_system(rng: random.Random, max_vars=4, max_ineqs=10, bound=5, min_vars=1):
    nvars = rng.randint(min_vars, max_vars)
    names = VAR_NAMES[:nvars]
    table = SymbolTable(names)
    ineqs = []
    for i in range(rng.randint(1, max_ineqs)):
        coeffs = {v: rng.randint(-bound, bound) for v in names}
        ineqs.append(Inequality(LinearExpression(coeffs, scalar=rng.randint(-bound, bound)),
                                f"c{i}"))
    return InequalitySystem(table, ineqs)


def random_point(rng: random.Random, names, bound=5, max_den=4):
    return {n: Fraction(rng.randint(-bound * max_den, bound * max_den), rng.randint(1, max_den))
            for n in names}

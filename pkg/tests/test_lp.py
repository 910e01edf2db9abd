import random
from fractions import Fraction
from pathlib import Path

import pytest

from fmcert.lincore import Inequality, LinearExpression, parse_system, var
from fmcert.lp import INFEASIBLE, OPTIMAL, UNBOUNDED, is_feasible, lp_max
from oracles import dantzig_cycles, lp_by_enumeration


def le(expr, rhs=0):
    return Inequality.le(expr, rhs)


def test_single_upper_bound():
    out = lp_max(var("x"), [le(var("x"), 3)])
    assert out.status == OPTIMAL and out.optimum == 3
    assert out.witness == {"x": 3}
    assert out.duals == (1,)


def test_no_constraints_is_unbounded():
    out = lp_max(var("x"), [])
    assert out.status == UNBOUNDED
    assert out.witness["x"] > 0


def test_contradictory_bounds_infeasible():
    out = lp_max(var("x"), [le(var("x"), 1), Inequality.ge(var("x"), 2)])
    assert out.status == INFEASIBLE
    assert not is_feasible([le(var("x"), 1), Inequality.ge(var("x"), 2)])


def test_constant_objective_and_symbols_argument():
    out = lp_max(LinearExpression(scalar=4), [le(var("x"), 0)], symbols=["y"])
    assert out.status == OPTIMAL and out.optimum == 4
    assert set(out.witness) == {"y", "x"}


def _random_lp(rng):
    n = rng.randint(1, 6)
    names = [f"y{j}" for j in range(n)]
    rows = []
    for _ in range(rng.randint(0, 12)):
        rows.append(([rng.randint(-5, 5) for _ in range(n)], rng.randint(-5, 5)))
    if rng.random() < 0.5:
        # box the region so that a good share of instances are bounded
        for j in range(n):
            rows.append(([int(k == j) for k in range(n)], 5))
            rows.append(([-int(k == j) for k in range(n)], 5))
        rows = rows[:12]
    c = [rng.randint(-5, 5) for _ in range(n)]
    return names, c, rows


def _as_constraints(names, rows):
    return [Inequality(LinearExpression(dict(zip(names, a)), scalar=-g)) for a, g in rows]


def test_random_lps_agree_with_vertex_enumeration():
    rng = random.Random(20)
    seen = set()
    for _ in range(200):
        names, c, rows = _random_lp(rng)
        cons = _as_constraints(names, rows)
        objective = LinearExpression(dict(zip(names, c)))
        out = lp_max(objective, cons, symbols=names)
        status, value = lp_by_enumeration(c, [a for a, _ in rows], [g for _, g in rows])
        assert out.status == status
        seen.add(status)
        if status == OPTIMAL:
            assert out.optimum == value
            x = out.witness
            assert all(ineq.expr.evaluate(x) <= 0 for ineq in cons)
            assert objective.evaluate(x) == value
            # strong duality: E^T lam = c, lam >= 0, g.lam = optimum
            lam = out.duals
            assert all(v >= 0 for v in lam)
            for j, name in enumerate(names):
                assert sum(l * a[j] for l, (a, _) in zip(lam, rows)) == c[j]
            assert sum(l * g for l, (_, g) in zip(lam, rows)) == value
        elif status == UNBOUNDED:
            d = out.witness
            assert all(sum(ineq.expr.var_coeffs.get(s, 0) * d[s] for s in names) <= 0
                       for ineq in cons)
            assert sum(cj * d[s] for cj, s in zip(c, names)) > 0
    assert seen == {OPTIMAL, UNBOUNDED, INFEASIBLE}


BEALE_C = [Fraction(3, 4), -20, Fraction(1, 2), -6]
BEALE_A = [[Fraction(1, 4), -8, -1, 9], [Fraction(1, 2), -12, Fraction(-1, 2), 3], [0, 0, 1, 0]]
BEALE_B = [0, 0, 1]


def test_beale_instance_really_cycles_under_dantzig():
    assert dantzig_cycles(BEALE_C, BEALE_A, BEALE_B)


def test_beale_instance_terminates():
    names = ["x1", "x2", "x3", "x4"]
    cons = _as_constraints(names, list(zip(BEALE_A, BEALE_B)))
    cons += [Inequality.ge(var(s), 0) for s in names]
    out = lp_max(LinearExpression(dict(zip(names, BEALE_C))), cons, symbols=names)
    assert out.status == OPTIMAL
    assert out.optimum == Fraction(5, 4)
    assert out.pivots < 50


@pytest.mark.parametrize("n", [1, 3, 5])
def test_free_variable_ray_is_reported(n):
    # x0 appears in the objective only
    cons = [le(var(f"z{j}"), j) for j in range(n)]
    out = lp_max(var("x0") + var("z0"), cons)
    assert out.status == UNBOUNDED and out.witness["x0"] == 1


def test_shipped_cycling_instance_solves():
    system, _ = parse_system((Path(__file__).parent / "data" / "beale.dsl").read_text())
    names = system.table.variables
    out = lp_max(LinearExpression(dict(zip(names, BEALE_C))), list(system), symbols=names)
    assert out.status == OPTIMAL and out.optimum == Fraction(5, 4)
    assert out.witness == {"x1": 1, "x2": 0, "x3": 1, "x4": 0}

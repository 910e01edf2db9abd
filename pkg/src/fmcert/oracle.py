"""Random integer channel instances and numeric cross-checks.

Matrices are numpy object arrays holding Python ints or Fractions, so every
rank below is computed exactly over the rationals.  numpy is only used for
shape bookkeeping and products (empty matrices keep their shapes).
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm
from pathlib import Path

import numpy as np

from .fme import eliminate
from .implication import prune, systems_equivalent
from .lincore import (
    FactSet,
    Inequality,
    InequalitySystem,
    InfeasibleSystemError,
    LinearExpression,
    format_inequality,
    serialize_system,
    substitute_variable,
)
from .rankfacts import ELIMINATION_ORDER, SPLIT_SUBSTITUTIONS, PaperFixture

ENTRY_RANGE = (-3, 3)


class ResampleBudgetExceeded(RuntimeError):
    pass


# ---------------------------------------------------------------------------
# exact linear algebra


def as_matrix(rows, shape=None) -> np.ndarray:
    m = np.empty(shape if shape is not None else (len(rows), len(rows[0]) if rows else 0),
                 dtype=object)
    for i, row in enumerate(rows):
        for j, v in enumerate(row):
            m[i, j] = v
    return m


def rref(M):
    """Reduced row echelon form over the rationals; returns (rows, pivot columns)."""
    M = np.asarray(M, dtype=object)
    nrows, ncols = M.shape
    A = [[Fraction(M[i, j]) for j in range(ncols)] for i in range(nrows)]
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, nrows) if A[i][c] != 0), None)
        if p is None:
            continue
        A[r], A[p] = A[p], A[r]
        inv = 1 / A[r][c]
        A[r] = [v * inv for v in A[r]]
        for i in range(nrows):
            if i != r and A[i][c] != 0:
                f = A[i][c]
                A[i] = [a - f * b for a, b in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return A[:r], pivots


def rank_exact(M) -> int:
    M = np.asarray(M, dtype=object)
    if M.ndim != 2 or 0 in M.shape:
        return 0
    return len(rref(M)[1])


def _integral(vec):
    scale = lcm(*(Fraction(v).denominator for v in vec)) if vec else 1
    return [int(Fraction(v) * scale) for v in vec]


def null_space(M) -> np.ndarray:
    """Columns spanning ``{x : M x = 0}``, scaled to integers."""
    M = np.asarray(M, dtype=object)
    ncols = M.shape[1]
    rows, pivots = rref(M) if 0 not in M.shape else ([], [])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        x = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        for row, p in zip(rows, pivots):
            x[p] = -row[f]
        basis.append(_integral(x))
    return as_matrix([list(col) for col in zip(*basis)] if basis else [],
                     shape=(ncols, len(basis)))


def row_space(M) -> np.ndarray:
    """Columns spanning the row space of ``M`` (one per pivot of its RREF)."""
    M = np.asarray(M, dtype=object)
    ncols = M.shape[1]
    rows = rref(M)[0] if 0 not in M.shape else []
    cols = [_integral(r) for r in rows]
    return as_matrix([list(c) for c in zip(*cols)] if cols else [],
                     shape=(ncols, len(cols)))


def matmul(*factors) -> np.ndarray:
    out = np.asarray(factors[0], dtype=object)
    for f in factors[1:]:
        f = np.asarray(f, dtype=object)
        if 0 in out.shape or 0 in f.shape:
            out = np.empty((out.shape[0], f.shape[1]), dtype=object)
            out[...] = 0
        else:
            out = out.dot(f)
    return out


# ---------------------------------------------------------------------------
# channel instances


@dataclass(frozen=True)
class ChannelDims:
    n1: int
    n2: int
    m1: int
    m2: int
    r11: int
    r12: int
    r21: int
    r22: int

    def violations(self) -> list[str]:
        out = []
        for name in ("n1", "n2", "m1", "m2"):
            if getattr(self, name) < 1:
                out.append(f"{name} >= 1")
        links = {"r11": (self.n1, self.m1), "r12": (self.n1, self.m2),
                 "r21": (self.n2, self.m1), "r22": (self.n2, self.m2)}
        for name, (n, m) in links.items():
            r = getattr(self, name)
            if not 0 <= r <= min(n, m):
                out.append(f"0 <= {name} <= min(n, m)")
        if self.r11 + self.r12 < self.n1:
            out.append("r11 + r12 >= n1")
        if self.r22 + self.r21 < self.n2:
            out.append("r22 + r21 >= n2")
        if self.r11 + self.r21 < self.m1:
            out.append("r11 + r21 >= m1")
        if self.r22 + self.r12 < self.m2:
            out.append("r22 + r12 >= m2")
        return out

    @property
    def valid(self) -> bool:
        return not self.violations()

    def astuple(self):
        return (self.n1, self.n2, self.m1, self.m2, self.r11, self.r12, self.r21, self.r22)

    def __str__(self):
        return ("n1={} n2={} m1={} m2={} r11={} r12={} r21={} r22={}"
                .format(*self.astuple()))


def sample_dims(seed: int, max_dim: int, min_rank: int = 0) -> ChannelDims:
    """Rejection-sample dimensions in [1, max_dim] and ranks in [min_rank, max_dim]."""
    if max_dim < 1:
        raise ValueError("max_dim must be at least 1")
    if not 0 <= min_rank <= max_dim:
        raise ValueError("min_rank must lie in [0, max_dim]")
    rng = random.Random(seed)
    while True:
        dims = [rng.randint(1, max_dim) for _ in range(4)]
        ranks = [rng.randint(min_rank, max_dim) for _ in range(4)]
        d = ChannelDims(*dims, *ranks)
        if d.valid:
            return d


@dataclass
class ChannelInstance:
    dims: ChannelDims
    seed: int
    H11: np.ndarray
    H12: np.ndarray
    H21: np.ndarray
    H22: np.ndarray
    V20: np.ndarray
    V21: np.ndarray
    V10: np.ndarray
    V11: np.ndarray
    U10: np.ndarray
    U20: np.ndarray
    assignment: dict = field(default_factory=dict)


def _low_rank(rng, n, m, r):
    lo, hi = ENTRY_RANGE
    A = as_matrix([[rng.randint(lo, hi) for _ in range(r)] for _ in range(n)], (n, r))
    B = as_matrix([[rng.randint(lo, hi) for _ in range(m)] for _ in range(r)], (r, m))
    return matmul(A, B)


def _channel_ok(d: ChannelDims, H11, H12, H21, H22):
    return (rank_exact(H11) == d.r11 and rank_exact(H12) == d.r12
            and rank_exact(H21) == d.r21 and rank_exact(H22) == d.r22
            and rank_exact(np.hstack([H11, H12])) == d.n1
            and rank_exact(np.hstack([H21, H22])) == d.n2
            and rank_exact(np.vstack([H11, H21])) == d.m1
            and rank_exact(np.vstack([H12, H22])) == d.m2)


def composite_ranks(inst: ChannelInstance) -> dict:
    H11, H22 = inst.H11, inst.H22
    U10t, U20t = inst.U10.T, inst.U20.T
    return {
        # U1 and U2 are identities on the receive spaces
        "k_U1_H11_V21": rank_exact(matmul(H11, inst.V21)),
        "k_U10_H11_V21": rank_exact(matmul(U10t, H11, inst.V21)),
        "k_U10_H11_V20": rank_exact(matmul(U10t, H11, inst.V20)),
        "k_U2_H22_V11": rank_exact(matmul(H22, inst.V11)),
        "k_U20_H22_V11": rank_exact(matmul(U20t, H22, inst.V11)),
        "k_U20_H22_V10": rank_exact(matmul(U20t, H22, inst.V10)),
        "k_H11_V21": rank_exact(matmul(H11, inst.V21)),
        "k_H22_V11": rank_exact(matmul(H22, inst.V11)),
        "k_U10_H11": rank_exact(matmul(U10t, H11)),
        "k_U20_H22": rank_exact(matmul(U20t, H22)),
        "k_H11_V20": rank_exact(matmul(H11, inst.V20)),
        "k_H22_V10": rank_exact(matmul(H22, inst.V10)),
    }


def sample_instance(dims: ChannelDims, seed: int, max_attempts: int = 500) -> ChannelInstance:
    if not dims.valid:
        raise ValueError(f"invalid dims ({'; '.join(dims.violations())})")
    rng = random.Random(f"{seed}:{dims.astuple()}")
    d = dims
    for _ in range(max_attempts):
        H11 = _low_rank(rng, d.n1, d.m1, d.r11)
        H12 = _low_rank(rng, d.n1, d.m2, d.r12)
        H21 = _low_rank(rng, d.n2, d.m1, d.r21)
        H22 = _low_rank(rng, d.n2, d.m2, d.r22)
        if _channel_ok(d, H11, H12, H21, H22):
            break
    else:
        raise ResampleBudgetExceeded(f"no channel with ranks {d} after {max_attempts} draws")
    inst = ChannelInstance(
        dims=d, seed=seed, H11=H11, H12=H12, H21=H21, H22=H22,
        V20=null_space(H21), V21=row_space(H21),
        V10=null_space(H12), V11=row_space(H12),
        U10=null_space(H12.T), U20=null_space(H21.T),
    )
    inst.assignment = {
        "n1": d.n1, "n2": d.n2, "m1": d.m1, "m2": d.m2,
        "r11": d.r11, "r12": d.r12, "r21": d.r21, "r22": d.r22,
        **composite_ranks(inst),
    }
    return inst


def basis_violations(inst: ChannelInstance) -> list[str]:
    """Structural checks on the zero-forcing bases (empty list when sound)."""
    d = inst.dims
    out = []

    def zero(M):
        return all(v == 0 for v in np.asarray(M).flat)

    if not zero(matmul(inst.U10.T, inst.H12)):
        out.append("U10^T H12 != 0")
    if not zero(matmul(inst.U20.T, inst.H21)):
        out.append("U20^T H21 != 0")
    if not zero(matmul(inst.H21, inst.V20)):
        out.append("H21 V20 != 0")
    if not zero(matmul(inst.H12, inst.V10)):
        out.append("H12 V10 != 0")
    if rank_exact(np.hstack([inst.V21, inst.V20])) != d.m1:
        out.append("rank [V21 V20] != m1")
    if rank_exact(np.hstack([inst.V11, inst.V10])) != d.m2:
        out.append("rank [V11 V10] != m2")
    if inst.U10.shape != (d.n1, d.n1 - d.r12) or rank_exact(inst.U10) != d.n1 - d.r12:
        out.append("U10 is not an (n1 - r12)-column basis")
    if inst.U20.shape != (d.n2, d.n2 - d.r21) or rank_exact(inst.U20) != d.n2 - d.r21:
        out.append("U20 is not an (n2 - r21)-column basis")
    if not _channel_ok(d, inst.H11, inst.H12, inst.H21, inst.H22):
        out.append("channel ranks differ from dims")
    return out


# ---------------------------------------------------------------------------
# reports


@dataclass(frozen=True)
class FactCheck:
    label: str
    slack: Fraction
    passed: bool


@dataclass(frozen=True)
class FactReport:
    checks: tuple

    @property
    def ok(self):
        return all(c.passed for c in self.checks)

    @property
    def failures(self):
        return [c for c in self.checks if not c.passed]

    def slack(self, label) -> Fraction:
        for c in self.checks:
            if c.label == label:
                return c.slack
        raise KeyError(label)


def verify_facts(instance: ChannelInstance, facts: FactSet) -> FactReport:
    """Evaluate every fact at the instance's rank assignment.

    The slack of ``expr <= 0`` is ``-expr``; equalities contribute two
    checks whose slacks are both zero when the equality holds.
    """
    checks = []
    for fact in facts:
        missing = fact.expr.names() - instance.assignment.keys()
        if missing:
            raise KeyError(f"assignment lacks {sorted(missing)} needed by {fact.label}")
        slack = -fact.expr.evaluate(instance.assignment)
        checks.append(FactCheck(fact.label, slack, slack >= 0))
    return FactReport(tuple(checks))


@dataclass(frozen=True)
class PipelineReport:
    facts: FactReport
    numeric: InequalitySystem | None
    symbolic: InequalitySystem
    equivalent: bool
    error: str | None = None

    @property
    def ok(self):
        return self.facts.ok and self.equivalent

    def describe(self) -> str:
        lines = []
        for f in self.facts.failures:
            lines.append(f"violated fact {f.label} (slack {f.slack})")
        if self.error:
            lines.append(f"error: {self.error}")
        if not self.equivalent:
            lines.append("numeric projection:")
            for q in (self.numeric or ()):
                lines.append(f"  {format_inequality(q)}")
            lines.append("instantiated final system:")
            for q in self.symbolic:
                lines.append(f"  {format_inequality(q)}")
        return "\n".join(lines)


def _nonneg(names):
    return [Inequality.ge(LinearExpression({n: 1}), 0, f"nonneg:{n}") for n in names]


def numeric_projection(instance: ChannelInstance, fixture: PaperFixture,
                       nonnegative: bool = False) -> InequalitySystem:
    """Instantiate the split-rate system and project it onto (R1, R2) with no facts."""
    system = fixture.start_full.instantiate(instance.assignment)
    if nonnegative:
        system = system.add(*_nonneg(("R1c", "R1p", "R2c", "R2p")))
    for name, replacement in SPLIT_SUBSTITUTIONS:
        system = substitute_variable(system, name, replacement)
    for v in ELIMINATION_ORDER:
        system, _ = eliminate(system, v)
    return prune(system, ())[0]


def verify_pipeline(instance: ChannelInstance, fixture: PaperFixture,
                    nonnegative: bool = False) -> PipelineReport:
    facts = verify_facts(instance, fixture.facts)
    symbolic = fixture.final.instantiate(instance.assignment)
    if nonnegative:
        symbolic = symbolic.add(*_nonneg(("R1", "R2")))
    try:
        numeric = numeric_projection(instance, fixture, nonnegative)
    except InfeasibleSystemError as exc:
        return PipelineReport(facts, None, symbolic, False, str(exc))
    return PipelineReport(facts, numeric, symbolic, systems_equivalent(numeric, symbolic))


@dataclass(frozen=True)
class TrialResult:
    seed: int
    dims: ChannelDims
    basis_ok: bool
    facts_ok: bool
    pipeline_ok: bool
    detail: str = ""

    @property
    def ok(self):
        return self.basis_ok and self.facts_ok and self.pipeline_ok

    def line(self) -> str:
        def verdict(flag):
            return "PASS" if flag else "FAIL"

        return (f"{verdict(self.ok)} seed={self.seed} {self.dims} "
                f"basis={verdict(self.basis_ok)} facts={verdict(self.facts_ok)} "
                f"pipeline={verdict(self.pipeline_ok)}")


def run_trial(seed: int, max_dim: int, fixture: PaperFixture, nonnegative=False,
              dump: Path | None = None) -> TrialResult:
    dims = sample_dims(seed, max_dim)
    inst = sample_instance(dims, seed)
    basis = basis_violations(inst)
    report = verify_pipeline(inst, fixture, nonnegative)
    if dump is not None:
        dump = Path(dump)
        dump.mkdir(parents=True, exist_ok=True)
        if report.numeric is not None:
            (dump / f"trial_{seed}_numeric.dsl").write_text(serialize_system(report.numeric))
        (dump / f"trial_{seed}_final.dsl").write_text(serialize_system(report.symbolic))
    detail = "\n".join(filter(None, ["; ".join(basis), report.describe()]))
    return TrialResult(seed, dims, not basis, report.facts.ok, report.equivalent, detail)


def run_trials(seed: int, trials: int, max_dim: int, fixture: PaperFixture,
               nonnegative=False, dump=None) -> list[TrialResult]:
    """Trial ``i`` uses seed ``seed + i`` for both dimensions and channels."""
    return [run_trial(seed + i, max_dim, fixture, nonnegative, dump) for i in range(trials)]

"""The interference-channel derivation shipped as DSL fixtures.

Files live in ``fmcert/fixtures``; ``SHA256SUMS`` there guards them against
accidental edits.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

from .lincore import FactSet, InequalitySystem, LinearExpression, SymbolTable, parse_system

FIXTURE_FILES = ("start_full", "start_reduced", "stage1", "stage2", "final", "facts")

# (stage, labels the derivation removes at that stage)
_EXPECTED = {
    0: frozenset({"cp13", "cp23"}),
    1: frozenset({"v26", "v210", "v211"}),
    2: frozenset({"v36", "v37", "v39", "v310", "v312", "v313", "v314", "v315", "v316"}),
}

SPLIT_SUBSTITUTIONS = (
    ("R1p", LinearExpression({"R1": 1, "R1c": -1})),
    ("R2p", LinearExpression({"R2": 1, "R2c": -1})),
)
ELIMINATION_ORDER = ("R1c", "R2c")


class FixtureCorruptedError(RuntimeError):
    pass


@dataclass(frozen=True)
class PaperFixture:
    table: SymbolTable
    start_full: InequalitySystem
    start_reduced: InequalitySystem
    stage1: InequalitySystem
    stage2: InequalitySystem
    final: InequalitySystem
    facts: FactSet
    expected_redundancies: dict


def fixture_dir():
    return resources.files(__package__) / "fixtures"


def fixture_text(name: str) -> str:
    """Raw DSL text of one fixture, after checking its digest."""
    if name not in FIXTURE_FILES:
        raise KeyError(f"unknown fixture {name!r}")
    base = fixture_dir()
    sums = {}
    for line in (base / "SHA256SUMS").read_text(encoding="utf-8").splitlines():
        digest, _, fname = line.partition("  ")
        sums[fname.strip()] = digest
    data = (base / f"{name}.dsl").read_bytes()
    if hashlib.sha256(data).hexdigest() != sums.get(f"{name}.dsl"):
        raise FixtureCorruptedError(f"fixture {name}.dsl does not match SHA256SUMS")
    return data.decode("utf-8")


@lru_cache(maxsize=None)
def load_paper_fixture() -> PaperFixture:
    systems = {name: parse_system(fixture_text(name)) for name in FIXTURE_FILES}
    start_full = systems["start_full"][0]
    return PaperFixture(
        table=start_full.table,
        start_full=start_full,
        start_reduced=systems["start_reduced"][0],
        stage1=systems["stage1"][0],
        stage2=systems["stage2"][0],
        final=systems["final"][0],
        facts=systems["facts"][1],
        expected_redundancies=dict(_EXPECTED),
    )


def expected_redundancy_labels(stage: int) -> frozenset:
    try:
        return _EXPECTED[stage]
    except KeyError:
        raise ValueError(f"unknown stage {stage!r}; expected 0, 1 or 2") from None

"""Command-line front end: ``fmcert <subcommand> ...``.

Exit status is 0 when every check passes, 1 when a check fails or a system
is infeasible, and 2 on usage, I/O or DSL errors.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass, field
from pathlib import Path

from .fme import PRUNE_POLICIES, eliminate, project
from .implication import (
    format_certificates,
    parse_certificates,
    prune,
    systems_equivalent,
    verify_certificate,
)
from .lincore import (
    DslError,
    FactSet,
    InfeasibleSystemError,
    parse_system,
    serialize_system,
    substitute_variable,
)
from .oracle import run_trials
from .rankfacts import (
    ELIMINATION_ORDER,
    SPLIT_SUBSTITUTIONS,
    expected_redundancy_labels,
    load_paper_fixture,
)

SUBCOMMANDS = ("project", "prune", "certify", "equiv", "replay-paper", "oracle")


class UsageError(Exception):
    pass


@dataclass
class CliConfig:
    subcommand: str
    inputs: list = field(default_factory=list)
    facts: list = field(default_factory=list)
    variables: list = field(default_factory=list)
    prune: str = "never"
    trace: bool = False
    certs: str | None = None
    output: str | None = None
    seed: int | None = None
    trials: int | None = None
    max_dim: int = 5
    nonnegative: bool = False
    dump: str | None = None

    def __post_init__(self):
        if self.subcommand not in SUBCOMMANDS:
            raise UsageError(f"unknown subcommand {self.subcommand!r}")
        if self.subcommand != "oracle" and (self.seed is not None or self.trials is not None):
            raise UsageError("--seed and --trials are only valid with 'oracle'")


def _read(path):
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror or exc}") from None


def _load(path, extra_facts=()):
    system, facts = parse_system(_read(path))
    merged = list(facts)
    for fpath in extra_facts:
        merged.extend(parse_system(_read(fpath))[1])
    return system, FactSet(merged)


def _emit(text, output, out):
    if output:
        Path(output).write_text(text, encoding="utf-8")
    else:
        out.write(text)


def _cmd_project(cfg, out):
    system, facts = _load(cfg.inputs[0], cfg.facts)
    result, logs, certs = project(system, cfg.variables, facts, cfg.prune)
    if cfg.trace:
        for log in logs:
            out.write(log.format(system.table) + "\n")
    _emit(serialize_system(result), cfg.output, out)
    if cfg.certs:
        Path(cfg.certs).write_text(format_certificates(certs), encoding="utf-8")
    return 0


def _cmd_prune(cfg, out):
    system, facts = _load(cfg.inputs[0], cfg.facts)
    result, certs = prune(system, facts)
    for c in certs:
        out.write(f"# removed {c.target}\n")
    _emit(serialize_system(result), cfg.output, out)
    if cfg.certs:
        Path(cfg.certs).write_text(format_certificates(certs), encoding="utf-8")
    return 0


def _cmd_certify(cfg, out):
    system, facts = _load(cfg.inputs[0], cfg.facts)
    certs = parse_certificates(_read(cfg.inputs[1]))
    status = 0
    for cert in certs:
        try:
            target = system.by_label(cert.target)
            context = [q for q in system if q.label != cert.target]
            ok = verify_certificate(cert, target, context, facts)
            reason = ""
        except KeyError as exc:
            ok, reason = False, f" (unknown label {exc.args[0]})"
        out.write(f"{'PASS' if ok else 'FAIL'} {cert.target}{reason}\n")
        status |= not ok
    if not certs:
        out.write("FAIL no certificates found\n")
        status = 1
    return status


def _cmd_equiv(cfg, out):
    a, fa = _load(cfg.inputs[0], cfg.facts)
    b, fb = _load(cfg.inputs[1])
    try:
        same = systems_equivalent(a, b, list(fa) + list(fb))
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    out.write(("PASS" if same else "FAIL") + " equivalent\n")
    return 0 if same else 1


def _set(labels):
    return ", ".join(sorted(labels, key=lambda s: (len(s), s))) or "-"


def replay_paper(out, trace=False) -> bool:
    """Re-run the whole derivation and print a stage-by-stage scoreboard."""
    fx = load_paper_fixture()
    facts = fx.facts
    rows = []

    def check(stage, what, ok, note=""):
        rows.append(ok)
        out.write(f"{'PASS' if ok else 'FAIL'}  {stage:<8} {what}{'  ' + note if note else ''}\n")

    all_certs = []  # (certificate, system it was pruned from)

    # stage 0: prune the split-rate system, then substitute the split rates
    pruned0, certs0 = prune(fx.start_full, facts)
    all_certs += [(c, fx.start_full) for c in certs0]
    removed0 = {c.target for c in certs0}
    check("stage 0", f"prune {len(fx.start_full)} -> {len(pruned0)}",
          removed0 == expected_redundancy_labels(0), f"removed {_set(removed0)}")
    system = pruned0
    for name, repl in SPLIT_SUBSTITUTIONS:
        system = substitute_variable(system, name, repl)
    check("stage 0", f"substitute R1p, R2p -> {len(system)} inequalities",
          system.same_set(fx.start_reduced))
    system = system.adopt_labels(fx.start_reduced)

    # stage 1
    system, log1 = eliminate(system, ELIMINATION_ORDER[0])
    if trace:
        out.write(log1.format(system.table) + "\n")
    up, lo, fr = log1.counts()
    check("stage 1", f"eliminate {log1.eliminated_var}: {up} upper, {lo} lower, {fr} free "
          f"-> {len(system)}", system.same_set(fx.stage1) and (up, lo, fr) == (5, 2, 5))
    system = system.adopt_labels(fx.stage1)
    pruned1, certs1 = prune(system, facts)
    all_certs += [(c, system) for c in certs1]
    removed1 = {c.target for c in certs1}
    expected1 = expected_redundancy_labels(1)
    extra = removed1 - expected1
    check("stage 1", f"prune {len(system)} -> {len(pruned1)}", expected1 <= removed1,
          f"removed {_set(removed1)}" + (f"; beyond the derivation: {_set(extra)}" if extra else ""))

    # stage 2 continues from the derivation's own removal set
    system = system.without(expected1)
    system, log2 = eliminate(system, ELIMINATION_ORDER[1])
    if trace:
        out.write(log2.format(system.table) + "\n")
    up, lo, fr = log2.counts()
    check("stage 2", f"eliminate {log2.eliminated_var}: {up} upper, {lo} lower, {fr} free "
          f"-> {len(system)}", system.same_set(fx.stage2) and (up, lo, fr) == (6, 2, 4))
    system = system.adopt_labels(fx.stage2)
    final, certs2 = prune(system, facts)
    all_certs += [(c, system) for c in certs2]
    removed2 = {c.target for c in certs2}
    check("stage 2", f"prune {len(system)} -> {len(final)}",
          removed2 == expected_redundancy_labels(2) and final.same_set(fx.final),
          f"removed {_set(removed2)}")

    verified = sum(
        verify_certificate(c, src.by_label(c.target),
                           [q for q in src if q.label != c.target], facts)
        for c, src in all_certs)
    check("certs", f"{verified}/{len(all_certs)} Farkas certificates verified",
          verified == len(all_certs))

    direct, _, _ = project(fx.start_reduced, ELIMINATION_ORDER, facts, "after-each")
    check("project", f"[{', '.join(ELIMINATION_ORDER)}] with pruning after each step "
          f"-> {len(direct)}", direct.same_set(fx.final))
    return all(rows)


def _cmd_replay(cfg, out):
    return 0 if replay_paper(out, cfg.trace) else 1


def _cmd_oracle(cfg, out):
    fx = load_paper_fixture()
    seed = cfg.seed if cfg.seed is not None else 0
    trials = cfg.trials if cfg.trials is not None else 50
    results = run_trials(seed, trials, cfg.max_dim, fx, cfg.nonnegative, cfg.dump)
    for r in results:
        out.write(r.line() + "\n")
        if not r.ok and r.detail:
            out.write("".join(f"    {line}\n" for line in r.detail.splitlines()))
    passed = sum(r.ok for r in results)
    out.write(f"{passed}/{len(results)} trials passed\n")
    if cfg.nonnegative:
        # exploratory comparison: reported, never a failure
        return 0
    return 0 if passed == len(results) else 1


_COMMANDS = {
    "project": _cmd_project,
    "prune": _cmd_prune,
    "certify": _cmd_certify,
    "equiv": _cmd_equiv,
    "replay-paper": _cmd_replay,
    "oracle": _cmd_oracle,
}


def run(config: CliConfig, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        return _COMMANDS[config.subcommand](config, out)
    except (UsageError, DslError) as exc:
        err.write(f"error: {exc}\n")
        return 2
    except InfeasibleSystemError as exc:
        err.write(f"infeasible: {exc}\n")
        return 1
    except ValueError as exc:
        err.write(f"error: {exc}\n")
        return 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="fmcert", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def with_facts(p):
        p.add_argument("--facts", action="append", default=[], metavar="FILE",
                       help="extra DSL file whose facts are added (repeatable)")

    p = sub.add_parser("project", help="eliminate variables from a system")
    p.add_argument("system")
    p.add_argument("-e", "--eliminate", required=True, metavar="VARS",
                   help="comma-separated variables, eliminated in this order")
    p.add_argument("--prune", choices=PRUNE_POLICIES, default="never")
    p.add_argument("--trace", action="store_true", help="print the elimination logs")
    p.add_argument("--certs", metavar="FILE", help="write certificates of pruned inequalities")
    p.add_argument("-o", "--output", metavar="FILE")
    with_facts(p)

    p = sub.add_parser("prune", help="remove inequalities implied by the rest and the facts")
    p.add_argument("system")
    p.add_argument("--certs", metavar="FILE")
    p.add_argument("-o", "--output", metavar="FILE")
    with_facts(p)

    p = sub.add_parser("certify", help="check a certificate file against a system")
    p.add_argument("system")
    p.add_argument("certificates")
    with_facts(p)

    p = sub.add_parser("equiv", help="mutual implication of two systems")
    p.add_argument("a")
    p.add_argument("b")
    with_facts(p)

    p = sub.add_parser("replay-paper", help="replay the shipped rate-region derivation")
    p.add_argument("--trace", action="store_true")

    p = sub.add_parser("oracle", help="numeric cross-check on random channel instances")
    p.add_argument("--trials", type=int, default=None)
    p.add_argument("--max-dim", type=int, default=5)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--nonnegative", action="store_true",
                   help="add rate nonnegativity to both sides (exploratory, not asserted)")
    p.add_argument("--dump", metavar="DIR", help="write instantiated systems here")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    cmd = args.subcommand
    try:
        cfg = CliConfig(
            subcommand=cmd,
            inputs=[getattr(args, k) for k in ("system", "certificates", "a", "b")
                    if getattr(args, k, None)],
            facts=getattr(args, "facts", []),
            variables=[v.strip() for v in args.eliminate.split(",") if v.strip()]
            if cmd == "project" else [],
            prune=getattr(args, "prune", "never"),
            trace=getattr(args, "trace", False),
            certs=getattr(args, "certs", None),
            output=getattr(args, "output", None),
            seed=getattr(args, "seed", None),
            trials=getattr(args, "trials", None),
            max_dim=getattr(args, "max_dim", 5),
            nonnegative=getattr(args, "nonnegative", False),
            dump=getattr(args, "dump", None),
        )
    except UsageError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    return run(cfg)


if __name__ == "__main__":
    sys.exit(main())

"""Controllability decisions by exhaustive search.

Configurations are tried by increasing cardinality (ties broken
lexicographically), so a positive possible-mode verdict carries a
minimum-size configuration among those found first.  The empty
configuration is always tried.  Possible mode stops at the first accepting
(configuration, completion) pair; necessary mode drops a configuration at
its first failing completion.

The search refuses instances whose configuration count times completion
count exceeds a budget, making runaway inputs an explicit error instead of
a hang.  The configuration loop can optionally fan out over processes;
witness determinism is only guaranteed single-worker.
"""

from __future__ import annotations

import itertools
from concurrent.futures import FIRST_COMPLETED, ProcessPoolExecutor, wait
from dataclasses import dataclass, field

from . import semantics as sem
from .completion import count_completions, enumerate_completions
from .errors import BudgetExceededError, DomainError
from .model import (
    Acceptance,
    ArgumentationFramework,
    Configuration,
    ControlAF,
    IncompleteAF,
    Mode,
    Query,
    Semantics,
    Witness,
    configure,
    reduce_iaf,
    validate_target,
)

DEFAULT_BUDGET = 1 << 24


@dataclass
class SearchStats:
    configurations_tried: int = 0
    completions_examined: int = 0


@dataclass
class Verdict:
    answer: bool
    witness: Witness | None = None
    stats: SearchStats = field(default_factory=SearchStats)


def _configurations(caf: ControlAF):
    names = sorted(caf.control_args)
    for size in range(len(names) + 1):
        for combo in itertools.combinations(names, size):
            yield Configuration(frozenset(combo))


def _check_budget(caf: ControlAF, budget: int) -> None:
    n_configs = 1 << len(caf.control_args)
    if n_configs > budget:
        raise BudgetExceededError(
            f"{n_configs} configurations exceed the budget of {budget}"
        )
    # completion count is configuration-independent: the uncertain relations
    # never touch control arguments
    per_config = count_completions(caf, limit=budget)
    if n_configs * per_config > budget:
        raise BudgetExceededError(
            f"{n_configs} configurations x {per_config} completions "
            f"exceed the budget of {budget}"
        )


def _witness_extension(
    af: ArgumentationFramework, query: Query
) -> frozenset[str] | None:
    if query.acceptance is Acceptance.CREDULOUS:
        return sem.find_extension_containing(af, query.semantics, query.target)
    return None


def decide(
    caf: ControlAF,
    query: Query,
    *,
    budget: int = DEFAULT_BUDGET,
    jobs: int = 1,
) -> Verdict:
    """Decide a controllability query by searching configurations and
    completions exhaustively.

    possible mode: some configuration has some completion accepting the
    target; necessary mode: some configuration has every completion
    accepting it.  Acceptance of a target with no extensions at all is
    vacuously true in skeptical queries, in both modes.
    """
    target = validate_target(caf, query.target)
    query = Query.of(query.semantics, query.mode, query.acceptance, target)
    _check_budget(caf, budget)
    if jobs > 1:
        return _decide_parallel(caf, query, jobs)

    stats = SearchStats()
    for conf in _configurations(caf):
        stats.configurations_tried += 1
        configured = configure(caf, conf)
        if query.mode is Mode.POSSIBLE:
            for af in enumerate_completions(configured):
                stats.completions_examined += 1
                if sem.accepted(af, query.semantics, query.acceptance, target):
                    witness = Witness(conf, af, _witness_extension(af, query))
                    return Verdict(True, witness, stats)
        else:
            all_ok = True
            first: ArgumentationFramework | None = None
            for af in enumerate_completions(configured):
                stats.completions_examined += 1
                if first is None:
                    first = af
                if not sem.accepted(af, query.semantics, query.acceptance, target):
                    all_ok = False
                    break
            if all_ok:
                assert first is not None  # at least one completion always exists
                witness = Witness(conf, first, _witness_extension(first, query))
                return Verdict(True, witness, stats)
    return Verdict(False, None, stats)


def _config_answer(caf: ControlAF, query: Query, chosen: tuple[str, ...]) -> tuple[tuple[str, ...], bool, int]:
    """Worker: does this configuration succeed for the query?"""
    configured = configure(caf, Configuration(frozenset(chosen)))
    examined = 0
    if query.mode is Mode.POSSIBLE:
        ok = False
        for af in enumerate_completions(configured):
            examined += 1
            if sem.accepted(af, query.semantics, query.acceptance, query.target):
                ok = True
                break
    else:
        ok = True
        for af in enumerate_completions(configured):
            examined += 1
            if not sem.accepted(af, query.semantics, query.acceptance, query.target):
                ok = False
                break
    return chosen, ok, examined


def _decide_parallel(caf: ControlAF, query: Query, jobs: int) -> Verdict:
    stats = SearchStats()
    order = [tuple(sorted(c.chosen)) for c in _configurations(caf)]
    winner: tuple[str, ...] | None = None
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        pending = {pool.submit(_config_answer, caf, query, chosen) for chosen in order}
        while pending:
            done, pending = wait(pending, return_when=FIRST_COMPLETED)
            for fut in done:
                chosen, ok, examined = fut.result()
                stats.configurations_tried += 1
                stats.completions_examined += examined
                if ok and winner is None:
                    winner = chosen
            if winner is not None:
                for fut in pending:
                    fut.cancel()
                break
    if winner is None:
        return Verdict(False, None, stats)
    # rebuild the witness deterministically for the winning configuration
    conf = Configuration(frozenset(winner))
    configured = configure(caf, conf)
    for af in enumerate_completions(configured):
        if query.mode is Mode.NECESSARY or sem.accepted(
            af, query.semantics, query.acceptance, query.target
        ):
            return Verdict(True, Witness(conf, af, _witness_extension(af, query)), stats)
    raise AssertionError("winning configuration lost its witness")


def decide_possible_acceptance_iaf(
    iaf: IncompleteAF,
    argument: str,
    semantics: Semantics,
    acceptance: Acceptance,
    *,
    budget: int = DEFAULT_BUDGET,
) -> bool:
    """Possible credulous/skeptical acceptance of an argument in an
    incomplete framework, via the embedding into a control framework with
    an empty control part."""
    if argument not in iaf.certain_args:
        raise DomainError(
            f"{argument} is not a certain argument of the incomplete framework"
        )
    query = Query.of(semantics, Mode.POSSIBLE, acceptance, {argument})
    return decide(reduce_iaf(iaf), query, budget=budget).answer

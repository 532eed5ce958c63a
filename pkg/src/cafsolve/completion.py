"""Enumeration and counting of the completions of a control framework.

A completion choice fixes, in order: which uncertain arguments are present,
one of three realisations for every symmetric conflict whose endpoints are
both present (forward, backward, or both directions), and presence for
every uncertain attack whose endpoints are both present.  Choices touching
absent arguments do not exist, so distinct choices yield distinct
frameworks and the stream is duplicate-free.

Enumeration order is deterministic: uncertain-argument subsets in binary
counter order (first uncertain name = lowest bit), then conflict and
uncertain-attack choices lexicographically.  The stream is lazy so that
controllability searches can stop at the first useful completion.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from typing import Iterator

from .errors import BudgetExceededError
from .model import ArgumentationFramework, Attack, ControlAF


class Orientation(Enum):
    FORWARD = "forward"
    BACKWARD = "backward"
    BOTH = "both"


@dataclass(frozen=True)
class CompletionChoice:
    present_uncertain: frozenset[str]
    sym_orientation: tuple[tuple[Attack, Orientation], ...]
    uncertain_attack_on: tuple[tuple[Attack, bool], ...]


def _uncertain_subsets(caf: ControlAF) -> Iterator[frozenset[str]]:
    names = sorted(caf.uncertain_args)
    for counter in range(1 << len(names)):
        yield frozenset(names[i] for i in range(len(names)) if counter >> i & 1)


def _active_pairs(pairs, always_present, present):
    return [
        p for p in sorted(pairs) if {*p} <= always_present | present
    ]


def iter_completion_choices(caf: ControlAF) -> Iterator[CompletionChoice]:
    fixed = caf.fixed_args
    for present in _uncertain_subsets(caf):
        sym_active = _active_pairs(caf.symmetric_conflicts, fixed, present)
        datt_active = _active_pairs(caf.uncertain_attacks, fixed, present)
        # a degenerate self-conflict has only one realisation
        options = [
            (Orientation.FORWARD,) if a == b else (Orientation.FORWARD, Orientation.BACKWARD, Orientation.BOTH)
            for a, b in sym_active
        ]
        for orient in itertools.product(*options):
            for chosen in itertools.product((False, True), repeat=len(datt_active)):
                yield CompletionChoice(
                    present,
                    tuple(zip(sym_active, orient)),
                    tuple(zip(datt_active, chosen)),
                )


def materialize(caf: ControlAF, choice: CompletionChoice) -> ArgumentationFramework:
    """Build the plain framework a choice denotes."""
    args = caf.fixed_args | caf.control_args | choice.present_uncertain
    attacks: set[Attack] = set()
    for src, dst in caf.fixed_attacks | caf.control_attacks:
        if src in args and dst in args:
            attacks.add((src, dst))
    for (a, b), orientation in choice.sym_orientation:
        if orientation in (Orientation.FORWARD, Orientation.BOTH):
            attacks.add((a, b))
        if orientation in (Orientation.BACKWARD, Orientation.BOTH):
            attacks.add((b, a))
    for pair, on in choice.uncertain_attack_on:
        if on:
            attacks.add(pair)
    return ArgumentationFramework(frozenset(args), frozenset(attacks))


def enumerate_completions(caf: ControlAF) -> Iterator[ArgumentationFramework]:
    """Lazily yield every completion exactly once, in deterministic order."""
    for choice in iter_completion_choices(caf):
        yield materialize(caf, choice)


def count_completions(caf: ControlAF, limit: int | None = None) -> int:
    """Number of completions without enumerating the frameworks themselves.

    Computed per uncertain-argument subset: each active symmetric conflict
    contributes a factor 3 (1 when degenerate), each active uncertain
    attack a factor 2.  With ``limit`` set, raises
    :class:`BudgetExceededError` as soon as the running total exceeds it,
    after at most ``limit + 1`` subset visits.
    """
    fixed = caf.fixed_args
    total = 0
    for present in _uncertain_subsets(caf):
        combos = 1
        for a, b in _active_pairs(caf.symmetric_conflicts, fixed, present):
            combos *= 1 if a == b else 3
        combos <<= len(_active_pairs(caf.uncertain_attacks, fixed, present))
        total += combos
        if limit is not None and total > limit:
            raise BudgetExceededError(
                f"completion count exceeds the budget of {limit}"
            )
    return total

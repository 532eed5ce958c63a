"""Data model for argumentation under control and uncertainty.

A plain argumentation framework is a directed attack graph over named
arguments.  The control variant partitions its arguments into

* a fixed part: arguments and attacks that are certainly there,
* an uncertain part: arguments whose presence is unknown, undirected
  conflicts whose direction is unknown, and attacks whose presence is
  unknown,
* a control part: arguments the reasoning agent may switch on or off,
  together with the attacks they carry.

A *configuration* selects the control arguments to keep; a *completion*
resolves every remaining uncertainty into a plain framework.  Queries ask
whether some configuration makes a target set of fixed arguments accepted
in some (possible) or every (necessary) completion.

All types are immutable after construction and validate their structural
invariants eagerly.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from typing import Iterable

from .errors import DomainError, InvariantViolation

_NAME_RE = re.compile(r"[A-Za-z0-9_]+\Z")

Attack = tuple[str, str]


def _check_name(name: object) -> str:
    if not isinstance(name, str) or not _NAME_RE.match(name):
        raise InvariantViolation(f"invalid argument name: {name!r}")
    return name


def _freeze_attacks(attacks: Iterable[Iterable[str]]) -> frozenset[Attack]:
    out = set()
    for pair in attacks:
        src, dst = pair
        out.add((src, dst))
    return frozenset(out)


def canonical_pair(a: str, b: str) -> Attack:
    """Canonical representative of an unordered pair (sorted endpoints)."""
    return (a, b) if a <= b else (b, a)


class Semantics(Enum):
    GROUNDED = "grounded"
    COMPLETE = "complete"
    STABLE = "stable"
    PREFERRED = "preferred"


class Mode(Enum):
    POSSIBLE = "possible"
    NECESSARY = "necessary"


class Acceptance(Enum):
    SKEPTICAL = "skeptical"
    CREDULOUS = "credulous"


@dataclass(frozen=True)
class ArgumentationFramework:
    """A plain directed attack graph: a set of arguments and attacks between them."""

    arguments: frozenset[str]
    attacks: frozenset[Attack]

    def __post_init__(self):
        for a in self.arguments:
            _check_name(a)
        for src, dst in self.attacks:
            if src not in self.arguments or dst not in self.arguments:
                raise InvariantViolation(
                    f"attack ({src},{dst}) has an endpoint outside the argument set"
                )

    @classmethod
    def of(
        cls,
        arguments: Iterable[str] = (),
        attacks: Iterable[Iterable[str]] = (),
    ) -> "ArgumentationFramework":
        return cls(frozenset(arguments), _freeze_attacks(attacks))

    def attackers_of(self, arg: str) -> frozenset[str]:
        return frozenset(src for src, dst in self.attacks if dst == arg)


@dataclass(frozen=True)
class ControlAF:
    """An argumentation framework with fixed, uncertain and control parts.

    ``symmetric_conflicts`` holds unordered pairs in canonical (sorted)
    form: a conflict between a and b is certain, its direction is not.
    Overlap checks against the directed relations therefore apply to both
    orientations of each conflict pair.
    """

    fixed_args: frozenset[str]
    uncertain_args: frozenset[str]
    control_args: frozenset[str]
    fixed_attacks: frozenset[Attack]
    symmetric_conflicts: frozenset[Attack]
    uncertain_attacks: frozenset[Attack]
    control_attacks: frozenset[Attack]

    def __post_init__(self):
        for group in (self.fixed_args, self.uncertain_args, self.control_args):
            for a in group:
                _check_name(a)
        if self.fixed_args & self.uncertain_args:
            raise InvariantViolation("fixed and uncertain argument sets overlap")
        if self.fixed_args & self.control_args:
            raise InvariantViolation("fixed and control argument sets overlap")
        if self.uncertain_args & self.control_args:
            raise InvariantViolation("uncertain and control argument sets overlap")

        certain = self.fixed_args | self.uncertain_args
        for src, dst in self.fixed_attacks:
            if src not in certain or dst not in certain:
                raise InvariantViolation(
                    f"fixed attack ({src},{dst}) must connect fixed/uncertain arguments"
                )
        for a, b in self.symmetric_conflicts:
            if (a, b) != canonical_pair(a, b):
                raise InvariantViolation(
                    f"symmetric conflict ({a},{b}) is not in canonical order"
                )
            if a not in certain or b not in certain:
                raise InvariantViolation(
                    f"symmetric conflict ({a},{b}) must connect fixed/uncertain arguments"
                )
            if (a, b) in self.fixed_attacks or (b, a) in self.fixed_attacks:
                raise InvariantViolation(
                    f"symmetric conflict ({a},{b}) overlaps a fixed attack"
                )
            if (a, b) in self.uncertain_attacks or (b, a) in self.uncertain_attacks:
                raise InvariantViolation(
                    f"symmetric conflict ({a},{b}) overlaps an uncertain attack"
                )
        for src, dst in self.uncertain_attacks:
            if src not in certain or dst not in certain:
                raise InvariantViolation(
                    f"uncertain attack ({src},{dst}) must connect fixed/uncertain arguments"
                )
            if (src, dst) in self.fixed_attacks:
                raise InvariantViolation(
                    f"uncertain attack ({src},{dst}) duplicates a fixed attack"
                )
        universe = certain | self.control_args
        for src, dst in self.control_attacks:
            if src not in self.control_args:
                raise InvariantViolation(
                    f"control attack ({src},{dst}) has a non-control source"
                )
            if dst not in universe:
                raise InvariantViolation(
                    f"control attack ({src},{dst}) targets an unknown argument"
                )

    @classmethod
    def of(
        cls,
        fixed_args: Iterable[str] = (),
        uncertain_args: Iterable[str] = (),
        control_args: Iterable[str] = (),
        fixed_attacks: Iterable[Iterable[str]] = (),
        symmetric_conflicts: Iterable[Iterable[str]] = (),
        uncertain_attacks: Iterable[Iterable[str]] = (),
        control_attacks: Iterable[Iterable[str]] = (),
    ) -> "ControlAF":
        sym = frozenset(canonical_pair(a, b) for a, b in symmetric_conflicts)
        return cls(
            frozenset(fixed_args),
            frozenset(uncertain_args),
            frozenset(control_args),
            _freeze_attacks(fixed_attacks),
            sym,
            _freeze_attacks(uncertain_attacks),
            _freeze_attacks(control_attacks),
        )

    @property
    def universe(self) -> frozenset[str]:
        """All arguments that may occur in some completion."""
        return self.fixed_args | self.uncertain_args | self.control_args


@dataclass(frozen=True)
class Configuration:
    """A choice of control arguments to switch on."""

    chosen: frozenset[str]

    @classmethod
    def of(cls, chosen: Iterable[str]) -> "Configuration":
        return cls(frozenset(chosen))


@dataclass(frozen=True)
class IncompleteAF:
    """A framework with uncertain arguments/attacks but no control part."""

    certain_args: frozenset[str]
    uncertain_args: frozenset[str]
    certain_attacks: frozenset[Attack]
    uncertain_attacks: frozenset[Attack]

    def __post_init__(self):
        for group in (self.certain_args, self.uncertain_args):
            for a in group:
                _check_name(a)
        if self.certain_args & self.uncertain_args:
            raise InvariantViolation("certain and uncertain argument sets overlap")
        if self.certain_attacks & self.uncertain_attacks:
            raise InvariantViolation("certain and uncertain attack sets overlap")
        known = self.certain_args | self.uncertain_args
        for src, dst in self.certain_attacks | self.uncertain_attacks:
            if src not in known or dst not in known:
                raise InvariantViolation(
                    f"attack ({src},{dst}) has an endpoint outside the argument sets"
                )

    @classmethod
    def of(
        cls,
        certain_args: Iterable[str] = (),
        uncertain_args: Iterable[str] = (),
        certain_attacks: Iterable[Iterable[str]] = (),
        uncertain_attacks: Iterable[Iterable[str]] = (),
    ) -> "IncompleteAF":
        return cls(
            frozenset(certain_args),
            frozenset(uncertain_args),
            _freeze_attacks(certain_attacks),
            _freeze_attacks(uncertain_attacks),
        )


@dataclass(frozen=True)
class Query:
    """semantics x mode x acceptance x target set."""

    semantics: Semantics
    mode: Mode
    acceptance: Acceptance
    target: frozenset[str]

    @classmethod
    def of(
        cls,
        semantics: Semantics | str,
        mode: Mode | str,
        acceptance: Acceptance | str,
        target: Iterable[str],
    ) -> "Query":
        return cls(
            Semantics(semantics) if isinstance(semantics, str) else semantics,
            Mode(mode) if isinstance(mode, str) else mode,
            Acceptance(acceptance) if isinstance(acceptance, str) else acceptance,
            frozenset(target),
        )


@dataclass(frozen=True)
class Witness:
    """Evidence for a positive verdict: the configuration that works, one
    completion, and (for credulous queries) an extension containing the
    target."""

    configuration: Configuration
    completion: ArgumentationFramework
    extension: frozenset[str] | None = None


def validate_target(caf: ControlAF, target: Iterable[str]) -> frozenset[str]:
    """Check that a target set only names fixed arguments."""
    tset = frozenset(target)
    stray = tset - caf.fixed_args
    if stray:
        raise DomainError(
            "target arguments must be fixed arguments; offending: "
            + ", ".join(sorted(stray))
        )
    return tset


def configure(caf: ControlAF, conf: Configuration) -> ControlAF:
    """Restrict the control part to the chosen arguments.

    Control attacks survive only when both endpoints remain present, i.e.
    when the source is chosen and the target is a fixed, uncertain or
    chosen argument.  The fixed and uncertain parts are untouched, so
    configuring twice with the same choice is a no-op.
    """
    stray = conf.chosen - caf.control_args
    if stray:
        raise DomainError(
            "configuration names non-control arguments: " + ", ".join(sorted(stray))
        )
    surviving = caf.fixed_args | caf.uncertain_args | conf.chosen
    return ControlAF(
        caf.fixed_args,
        caf.uncertain_args,
        frozenset(conf.chosen),
        caf.fixed_attacks,
        caf.symmetric_conflicts,
        caf.uncertain_attacks,
        frozenset(
            (src, dst)
            for src, dst in caf.control_attacks
            if src in surviving and dst in surviving
        ),
    )


def is_completion_of(af: ArgumentationFramework, caf: ControlAF) -> bool:
    """Total predicate: does ``af`` resolve every uncertainty of ``caf``?

    Holds when all of the following are true:

    * the arguments are the fixed and control arguments plus some subset
      of the uncertain ones;
    * every attack is drawn from the declared relations (either
      orientation for a symmetric conflict);
    * every fixed attack whose endpoints are both present is included
      (an attack vanishes with an absent uncertain endpoint);
    * every symmetric conflict with both endpoints present is realised in
      at least one direction;
    * every control attack with both endpoints present is included.

    Conflict pairs with an absent endpoint constrain nothing.
    """
    required = caf.fixed_args | caf.control_args
    if not required <= af.arguments:
        return False
    if not af.arguments <= caf.universe:
        return False

    allowed = set(caf.fixed_attacks) | set(caf.uncertain_attacks) | set(caf.control_attacks)
    for a, b in caf.symmetric_conflicts:
        allowed.add((a, b))
        allowed.add((b, a))
    if not af.attacks <= allowed:
        return False

    present = af.arguments
    for src, dst in caf.fixed_attacks:
        if src in present and dst in present and (src, dst) not in af.attacks:
            return False
    for a, b in caf.symmetric_conflicts:
        if a in present and b in present:
            if (a, b) not in af.attacks and (b, a) not in af.attacks:
                return False
    for src, dst in caf.control_attacks:
        if src in present and dst in present and (src, dst) not in af.attacks:
            return False
    return True


def reduce_iaf(iaf: IncompleteAF) -> ControlAF:
    """Embed an incomplete framework as a control framework with an empty
    control part: certain arguments become fixed, uncertain arguments and
    attacks keep their roles, and no conflicts or control attacks exist.

    Possible controllability of the result w.r.t. a singleton target then
    coincides with possible acceptance of that argument in the original
    incomplete framework.
    """
    return ControlAF(
        iaf.certain_args,
        iaf.uncertain_args,
        frozenset(),
        iaf.certain_attacks,
        frozenset(),
        iaf.uncertain_attacks,
        frozenset(),
    )

"""Extension semantics for plain argumentation frameworks.

Supports the grounded, complete, stable and preferred semantics.  The
grounded extension is the least fixed point of the defense function and is
computed iteratively; the other semantics enumerate candidate subsets with
a bitmask sweep, which keeps this a tool for desk-scale frameworks (the
sweep refuses frameworks with more than ``MAX_ENUM_ARGUMENTS`` arguments).

All functions are pure over immutable frameworks and safe to call from
parallel workers.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable

import numpy as np

from .errors import BudgetExceededError, DomainError
from .model import Acceptance, ArgumentationFramework, Semantics

# Beyond this many arguments the 2^n subset sweep is refused outright
# (grounded reasoning still works at any size).
MAX_ENUM_ARGUMENTS = 20


class _Index:
    """Dense per-framework indexing so argument sets become bitmasks."""

    def __init__(self, af: ArgumentationFramework):
        self.names = sorted(af.arguments)
        pos = {a: i for i, a in enumerate(self.names)}
        n = len(self.names)
        self.n = n
        self.attackers = [0] * n  # attackers[i]: mask of attackers of i
        self.targets = [0] * n  # targets[i]: mask of arguments attacked by i
        for src, dst in af.attacks:
            s, d = pos[src], pos[dst]
            self.attackers[d] |= 1 << s
            self.targets[s] |= 1 << d

    def to_set(self, mask: int) -> frozenset[str]:
        return frozenset(self.names[i] for i in range(self.n) if mask >> i & 1)


def _grounded_mask(idx: _Index) -> int:
    """Least fixed point of 'every attacker is counter-attacked'."""
    current = 0
    while True:
        attacked = 0
        for i in range(idx.n):
            if current >> i & 1:
                attacked |= idx.targets[i]
        new = 0
        for i in range(idx.n):
            if idx.attackers[i] & ~attacked == 0:
                new |= 1 << i
        if new == current:
            return current
        current = new


def _attacked_table(idx: _Index) -> np.ndarray:
    """attacked[m] = mask of arguments attacked by member set m."""
    size = 1 << idx.n
    attacked = np.zeros(size, dtype=np.int64)
    for i in range(idx.n):
        step = 1 << i
        view = attacked.reshape(-1, 2 * step)
        view[:, step:] = view[:, :step] | np.int64(idx.targets[i])
    return attacked


def _extension_masks(idx: _Index, semantics: Semantics) -> list[int]:
    if semantics is Semantics.GROUNDED:
        return [_grounded_mask(idx)]
    if idx.n > MAX_ENUM_ARGUMENTS:
        raise BudgetExceededError(
            f"refusing subset enumeration over {idx.n} arguments "
            f"(limit {MAX_ENUM_ARGUMENTS})"
        )
    size = 1 << idx.n
    masks = np.arange(size, dtype=np.int64)
    attacked = _attacked_table(idx)
    conflict_free = (attacked & masks) == 0

    if semantics is Semantics.STABLE:
        full = np.int64(size - 1)
        ok = conflict_free & ((attacked | masks) == full)
        return [int(m) for m in masks[ok]]

    # complete: conflict-free and exactly the arguments the set defends
    defended = np.zeros(size, dtype=np.int64)
    for i in range(idx.n):
        covered = (np.int64(idx.attackers[i]) & ~attacked) == 0
        defended |= covered.astype(np.int64) << np.int64(i)
    complete = conflict_free & (defended == masks)
    complete_masks = [int(m) for m in masks[complete]]
    if semantics is Semantics.COMPLETE:
        return complete_masks

    # preferred: inclusion-maximal complete sets
    maximal = []
    for m in complete_masks:
        if not any(other != m and m | other == other for other in complete_masks):
            maximal.append(m)
    return maximal


@lru_cache(maxsize=16384)
def _extensions_cached(
    af: ArgumentationFramework, semantics: Semantics
) -> frozenset[frozenset[str]]:
    idx = _Index(af)
    return frozenset(idx.to_set(m) for m in _extension_masks(idx, semantics))


def extensions(
    af: ArgumentationFramework, semantics: Semantics
) -> frozenset[frozenset[str]]:
    """All extensions under the given semantics.

    Grounded yields exactly one extension, complete and preferred are never
    empty, stable may be empty.
    """
    return _extensions_cached(af, Semantics(semantics))


def grounded_extension(af: ArgumentationFramework) -> frozenset[str]:
    """The unique grounded extension (least fixed point of defense)."""
    idx = _Index(af)
    return idx.to_set(_grounded_mask(idx))


def _member_mask(idx: _Index, s: frozenset[str]) -> int:
    pos = {a: i for i, a in enumerate(idx.names)}
    mask = 0
    for a in s:
        mask |= 1 << pos[a]
    return mask


def _check_subset(af: ArgumentationFramework, s: Iterable[str]) -> frozenset[str]:
    sset = frozenset(s)
    stray = sset - af.arguments
    if stray:
        raise DomainError("set names unknown arguments: " + ", ".join(sorted(stray)))
    return sset


def is_conflict_free(af: ArgumentationFramework, s: Iterable[str]) -> bool:
    """No member attacks a member (self-attacks included)."""
    sset = _check_subset(af, s)
    return not any(src in sset and dst in sset for src, dst in af.attacks)


def is_admissible(af: ArgumentationFramework, s: Iterable[str]) -> bool:
    """Conflict-free and every attacker of a member is attacked by the set."""
    sset = _check_subset(af, s)
    if not is_conflict_free(af, sset):
        return False
    idx = _Index(af)
    mask = _member_mask(idx, sset)
    attacked = 0
    for i in range(idx.n):
        if mask >> i & 1:
            attacked |= idx.targets[i]
    for i in range(idx.n):
        if mask >> i & 1 and idx.attackers[i] & ~attacked:
            return False
    return True


def accepted(
    af: ArgumentationFramework,
    semantics: Semantics,
    acceptance: Acceptance,
    target: Iterable[str],
) -> bool:
    """Is the target set contained in every (skeptical) or some (credulous)
    extension?  Skeptical acceptance over an empty extension set is
    vacuously true."""
    tset = _check_subset(af, target)
    exts = extensions(af, semantics)
    if Acceptance(acceptance) is Acceptance.SKEPTICAL:
        return all(tset <= e for e in exts)
    return any(tset <= e for e in exts)


def find_extension_containing(
    af: ArgumentationFramework, semantics: Semantics, target: Iterable[str]
) -> frozenset[str] | None:
    """Some extension containing the target, or None; deterministic pick."""
    tset = _check_subset(af, target)
    hits = [e for e in extensions(af, semantics) if tset <= e]
    if not hits:
        return None
    return min(hits, key=lambda e: tuple(sorted(e)))

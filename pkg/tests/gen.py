"""Seeded random instance generators shared by the property and acceptance
tests.  All randomness flows through an explicit ``random.Random`` so every
suite is reproducible."""

from cafsolve import ArgumentationFramework, ControlAF, IncompleteAF
from cafsolve.model import canonical_pair


def random_af(rng, max_args=8, min_args=0):
    n = rng.randint(min_args, max_args)
    args = [f"a{i}" for i in range(1, n + 1)]
    p = rng.choice([0.1, 0.2, 0.35, 0.5])
    attacks = [(s, d) for s in args for d in args if rng.random() < p]
    return ArgumentationFramework.of(args, attacks)


def random_caf(
    rng,
    max_fixed=5,
    max_uncertain=2,
    max_control=3,
    max_sym=2,
    max_uncertain_attacks=2,
):
    """A control framework within the given size caps plus a nonempty target
    drawn from its fixed arguments."""
    fixed = [f"f{i}" for i in range(1, rng.randint(1, max_fixed) + 1)]
    uncertain = [f"u{i}" for i in range(1, rng.randint(0, max_uncertain) + 1)]
    control = [f"c{i}" for i in range(1, rng.randint(0, max_control) + 1)]
    certain = fixed + uncertain

    p = rng.choice([0.1, 0.2, 0.35])
    fixed_attacks = {(s, d) for s in certain for d in certain if rng.random() < p}

    sym_candidates = [
        (a, b)
        for i, a in enumerate(certain)
        for b in certain[i + 1 :]
        if (a, b) not in fixed_attacks and (b, a) not in fixed_attacks
    ]
    rng.shuffle(sym_candidates)
    sym = sym_candidates[: rng.randint(0, max_sym)]
    sym_blocked = {canonical_pair(a, b) for a, b in sym}

    uatt_candidates = [
        (s, d)
        for s in certain
        for d in certain
        if (s, d) not in fixed_attacks and canonical_pair(s, d) not in sym_blocked
    ]
    rng.shuffle(uatt_candidates)
    uncertain_attacks = uatt_candidates[: rng.randint(0, max_uncertain_attacks)]

    everything = certain + control
    control_attacks = {
        (c, x) for c in control for x in everything if rng.random() < 0.3
    }

    caf = ControlAF.of(
        fixed_args=fixed,
        uncertain_args=uncertain,
        control_args=control,
        fixed_attacks=fixed_attacks,
        symmetric_conflicts=sym,
        uncertain_attacks=uncertain_attacks,
        control_attacks=control_attacks,
    )
    target = frozenset(rng.sample(fixed, rng.randint(1, min(2, len(fixed)))))
    return caf, target


def random_simplified_caf(rng, max_fixed=5, max_control=3):
    """No uncertain part at all: one completion per configuration."""
    caf, target = random_caf(
        rng,
        max_fixed=max_fixed,
        max_uncertain=0,
        max_control=max_control,
        max_sym=0,
        max_uncertain_attacks=0,
    )
    return caf, target


def random_iaf(rng, max_certain=6, max_uncertain_args=2, max_uncertain_attacks=2):
    certain = [f"a{i}" for i in range(1, rng.randint(1, max_certain) + 1)]
    uncertain = [f"x{i}" for i in range(1, rng.randint(0, max_uncertain_args) + 1)]
    everything = certain + uncertain
    p = rng.choice([0.1, 0.2, 0.35])
    certain_attacks = {
        (s, d) for s in everything for d in everything if rng.random() < p
    }
    candidates = [
        (s, d)
        for s in everything
        for d in everything
        if (s, d) not in certain_attacks
    ]
    rng.shuffle(candidates)
    uncertain_attacks = candidates[: rng.randint(0, max_uncertain_attacks)]
    return IncompleteAF.of(certain, uncertain, certain_attacks, uncertain_attacks)

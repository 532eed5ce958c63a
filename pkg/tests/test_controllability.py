import random

import pytest

from cafsolve import (
    Acceptance,
    BudgetExceededError,
    Configuration,
    ControlAF,
    DomainError,
    IncompleteAF,
    Mode,
    Query,
    Semantics,
    accepted,
    configure,
    decide,
    decide_possible_acceptance_iaf,
    enumerate_completions,
    is_completion_of,
)
from gen import random_caf, random_simplified_caf


def test_demo_not_necessarily_skeptically_controllable(demo9):
    verdict = decide(demo9, Query.of("stable", "necessary", "skeptical", {"a1"}))
    assert verdict.answer is False
    assert verdict.witness is None
    assert verdict.stats.configurations_tried == 8


def test_demo_possibly_skeptically_controllable(demo9):
    verdict = decide(demo9, Query.of("stable", "possible", "skeptical", {"a1"}))
    assert verdict.answer is True
    witness = verdict.witness
    assert witness is not None
    configured = configure(demo9, witness.configuration)
    assert is_completion_of(witness.completion, configured)
    assert accepted(witness.completion, Semantics.STABLE, Acceptance.SKEPTICAL, {"a1"})


def test_unattacked_target_trivially_controllable():
    caf = ControlAF.of(fixed_args=["a"])
    for semantics in Semantics:
        for mode in Mode:
            for acceptance in Acceptance:
                verdict = decide(caf, Query.of(semantics, mode, acceptance, {"a"}))
                assert verdict.answer is True
                assert verdict.witness.configuration.chosen == frozenset()


def test_decide_rejects_non_fixed_target(demo9):
    with pytest.raises(DomainError):
        decide(demo9, Query.of("stable", "possible", "skeptical", {"a6"}))
    with pytest.raises(DomainError):
        decide(demo9, Query.of("stable", "possible", "skeptical", {"a7"}))


def test_decide_budget_guard():
    caf = ControlAF.of(fixed_args=["a"], uncertain_args=["u1", "u2", "u3"])
    with pytest.raises(BudgetExceededError):
        decide(caf, Query.of("stable", "possible", "credulous", {"a"}), budget=4)


def test_witness_deterministic_across_runs(demo9):
    query = Query.of("stable", "possible", "credulous", {"a1"})
    first = decide(demo9, query)
    second = decide(demo9, query)
    assert first.witness == second.witness
    assert first.witness.extension is not None
    assert "a1" in first.witness.extension


def test_parallel_agrees_with_single_worker(demo9):
    for mode in ("possible", "necessary"):
        query = Query.of("stable", mode, "skeptical", {"a1"})
        assert decide(demo9, query, jobs=2).answer == decide(demo9, query).answer


def test_necessary_witness_carries_a_completion():
    caf = ControlAF.of(
        fixed_args=["a", "b"],
        control_args=["c"],
        fixed_attacks=[("b", "a")],
        control_attacks=[("c", "b")],
    )
    verdict = decide(caf, Query.of("grounded", "necessary", "credulous", {"a"}))
    assert verdict.answer is True
    assert verdict.witness.configuration.chosen == {"c"}
    assert is_completion_of(
        verdict.witness.completion, configure(caf, verdict.witness.configuration)
    )
    assert verdict.witness.extension == {"a", "c"}


def test_iaf_acceptance_trivial_cases():
    free = IncompleteAF.of(["a"])
    for semantics in Semantics:
        for acceptance in Acceptance:
            assert decide_possible_acceptance_iaf(free, "a", semantics, acceptance)

    attacked = IncompleteAF.of(["a", "b"], [], [("b", "a")])
    assert not decide_possible_acceptance_iaf(
        attacked, "a", Semantics.GROUNDED, Acceptance.CREDULOUS
    )

    maybe = IncompleteAF.of(["a", "b"], [], [], [("b", "a")])
    # the completion without the attack accepts a
    assert decide_possible_acceptance_iaf(
        maybe, "a", Semantics.GROUNDED, Acceptance.CREDULOUS
    )


def test_iaf_acceptance_rejects_unknown_or_uncertain_argument():
    iaf = IncompleteAF.of(["a"], ["u"])
    with pytest.raises(DomainError):
        decide_possible_acceptance_iaf(iaf, "u", Semantics.STABLE, Acceptance.CREDULOUS)
    with pytest.raises(DomainError):
        decide_possible_acceptance_iaf(iaf, "zz", Semantics.STABLE, Acceptance.CREDULOUS)


def test_necessary_implies_possible_on_random_instances():
    rng = random.Random(8128)
    for _ in range(25):
        caf, target = random_caf(rng, max_fixed=4, max_control=2)
        for semantics in Semantics:
            for acceptance in Acceptance:
                necessary = decide(
                    caf, Query.of(semantics, Mode.NECESSARY, acceptance, target)
                ).answer
                if necessary:
                    assert decide(
                        caf, Query.of(semantics, Mode.POSSIBLE, acceptance, target)
                    ).answer


def test_simplified_cafs_collapse_modes():
    rng = random.Random(496)
    for _ in range(25):
        caf, target = random_simplified_caf(rng)
        for semantics in Semantics:
            for acceptance in Acceptance:
                possible = decide(
                    caf, Query.of(semantics, Mode.POSSIBLE, acceptance, target)
                ).answer
                necessary = decide(
                    caf, Query.of(semantics, Mode.NECESSARY, acceptance, target)
                ).answer
                assert possible == necessary


def test_possible_witnesses_self_verify():
    rng = random.Random(1729)
    for _ in range(25):
        caf, target = random_caf(rng, max_fixed=4)
        for semantics in (Semantics.STABLE, Semantics.GROUNDED):
            for acceptance in Acceptance:
                verdict = decide(
                    caf, Query.of(semantics, Mode.POSSIBLE, acceptance, target)
                )
                if not verdict.answer:
                    continue
                witness = verdict.witness
                configured = configure(caf, witness.configuration)
                assert is_completion_of(witness.completion, configured)
                assert accepted(witness.completion, semantics, acceptance, target)
                if acceptance is Acceptance.CREDULOUS:
                    assert witness.extension is not None
                    assert target <= witness.extension


def test_demo_under_remaining_semantics(demo9):
    # informational: the demo instance behaves the same under the grounded
    # and complete readings of the skeptical query
    for semantics in (Semantics.GROUNDED, Semantics.COMPLETE):
        possible = decide(demo9, Query.of(semantics, "possible", "skeptical", {"a1"}))
        print(f"demo9 possible-skeptical under {semantics.value}: {possible.answer}")
        assert possible.answer in (True, False)


def test_empty_configuration_is_searched():
    # a control argument that would break the target: the winning
    # configuration must be the empty one
    caf = ControlAF.of(
        fixed_args=["t"],
        control_args=["k"],
        control_attacks=[("k", "t")],
    )
    verdict = decide(caf, Query.of("stable", "necessary", "skeptical", {"t"}))
    assert verdict.answer is True
    assert verdict.witness.configuration.chosen == frozenset()

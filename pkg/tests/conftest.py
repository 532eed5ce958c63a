import pytest

from cafsolve import ArgumentationFramework, ControlAF

# The 9-argument demo instance used across the suite: a1 is the target,
# attacked by a2/a3 (countered by a4) and possibly by a5; a6's conflict with
# a4 has unknown direction; a7/a8/a9 are the control arguments.
DEMO9_TEXT = """\
arg(a1).
arg(a2).
arg(a3).
arg(a4).
arg(a5).
att(a2,a1).
att(a3,a1).
att(a4,a2).
att(a4,a3).
u_arg(a6).
sym(a6,a4).
u_att(a5,a1).
c_arg(a7).
c_arg(a8).
c_arg(a9).
c_att(a7,a5).
c_att(a7,a9).
c_att(a8,a6).
c_att(a8,a7).
c_att(a9,a6).
target(a1).
"""


def make_demo9() -> ControlAF:
    return ControlAF.of(
        fixed_args=["a1", "a2", "a3", "a4", "a5"],
        uncertain_args=["a6"],
        control_args=["a7", "a8", "a9"],
        fixed_attacks=[("a2", "a1"), ("a3", "a1"), ("a4", "a2"), ("a4", "a3")],
        symmetric_conflicts=[("a6", "a4")],
        uncertain_attacks=[("a5", "a1")],
        control_attacks=[
            ("a7", "a5"),
            ("a7", "a9"),
            ("a8", "a6"),
            ("a8", "a7"),
            ("a9", "a6"),
        ],
    )


@pytest.fixture(scope="session")
def demo9() -> ControlAF:
    return make_demo9()


@pytest.fixture(scope="session")
def completion_keep_u() -> ArgumentationFramework:
    """Completion of demo9 configured by {a7,a9}: a6 kept with its attack on
    a4, the uncertain attack (a5,a1) left out."""
    return ArgumentationFramework.of(
        ["a1", "a2", "a3", "a4", "a5", "a6", "a7", "a9"],
        [
            ("a2", "a1"),
            ("a3", "a1"),
            ("a4", "a2"),
            ("a4", "a3"),
            ("a6", "a4"),
            ("a7", "a5"),
            ("a9", "a6"),
            ("a7", "a9"),
        ],
    )


@pytest.fixture(scope="session")
def completion_drop_u() -> ArgumentationFramework:
    """Completion of demo9 configured by {a7,a9}: a6 dropped (and with it all
    its attacks), the uncertain attack (a5,a1) kept."""
    return ArgumentationFramework.of(
        ["a1", "a2", "a3", "a4", "a5", "a7", "a9"],
        [
            ("a2", "a1"),
            ("a3", "a1"),
            ("a4", "a2"),
            ("a4", "a3"),
            ("a5", "a1"),
            ("a7", "a5"),
            ("a7", "a9"),
        ],
    )


@pytest.fixture(scope="session")
def successful_completion() -> ArgumentationFramework:
    """Completion of demo9 configured by {a7} in which a1 sits in every
    stable extension: a6 present but attacked by a4, (a5,a1) present but a5
    is countered by a7."""
    return ArgumentationFramework.of(
        ["a1", "a2", "a3", "a4", "a5", "a6", "a7"],
        [
            ("a2", "a1"),
            ("a3", "a1"),
            ("a4", "a2"),
            ("a4", "a3"),
            ("a4", "a6"),
            ("a5", "a1"),
            ("a7", "a5"),
        ],
    )

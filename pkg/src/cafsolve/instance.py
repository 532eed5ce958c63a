"""Line-oriented instance file format.

One statement per line, ``%`` starts a comment, whitespace is free inside a
statement.  Statements:

    arg(x).        fixed argument
    u_arg(x).      uncertain argument
    c_arg(x).      control argument
    att(x,y).      fixed attack
    sym(x,y).      symmetric conflict (unordered)
    u_att(x,y).    uncertain attack
    c_att(x,y).    control attack (source must be a control argument)
    target(x).     target declaration (repeatable)

Argument names are tokens over letters, digits and underscore.  Duplicate
declarations are idempotent.  Plain frameworks (completions) use only
``arg``/``att`` statements.
"""

from __future__ import annotations

import re
from typing import Iterable, NamedTuple

from .errors import ParseError
from .model import ArgumentationFramework, ControlAF, canonical_pair

_STMT_RE = re.compile(
    r"(?P<pred>[a-z_]+)\s*\(\s*(?P<a>[A-Za-z0-9_]+)\s*(?:,\s*(?P<b>[A-Za-z0-9_]+)\s*)?\)\s*\.\Z"
)

_UNARY = {"arg", "u_arg", "c_arg", "target"}
_BINARY = {"att", "sym", "u_att", "c_att"}


class Instance(NamedTuple):
    caf: ControlAF
    targets: frozenset[str]


class _Stmt(NamedTuple):
    line: int
    pred: str
    args: tuple[str, ...]
    text: str


def _scan(text: str) -> list[_Stmt]:
    statements = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("%", 1)[0]
        stripped = body.strip()
        if not stripped:
            continue
        m = _STMT_RE.match(stripped)
        if not m:
            col = len(body) - len(body.lstrip()) + 1
            raise ParseError(f"cannot parse statement {stripped!r}", lineno, col)
        pred = m.group("pred")
        args = (m.group("a"),) if m.group("b") is None else (m.group("a"), m.group("b"))
        if pred in _UNARY:
            if len(args) != 1:
                raise ParseError(f"{pred} takes one argument", lineno)
        elif pred in _BINARY:
            if len(args) != 2:
                raise ParseError(f"{pred} takes two arguments", lineno)
        else:
            raise ParseError(f"unknown statement kind {pred!r}", lineno)
        statements.append(_Stmt(lineno, pred, args, stripped))
    return statements


def parse_instance(text: str) -> Instance:
    """Parse instance text into a validated framework plus declared targets.

    Raises :class:`ParseError` with the offending line for syntax errors and
    for statements that violate a structural invariant (unknown endpoints,
    wrong argument class, overlapping relations).
    """
    statements = _scan(text)

    kind_of: dict[str, str] = {}
    _KIND_NAME = {"arg": "fixed", "u_arg": "uncertain", "c_arg": "control"}
    for st in statements:
        if st.pred in _KIND_NAME:
            name = st.args[0]
            prev = kind_of.get(name)
            if prev is not None and prev != st.pred:
                raise ParseError(
                    f"{name} already declared as a {_KIND_NAME[prev]} argument",
                    st.line,
                )
            kind_of[name] = st.pred

    def require(name: str, st: _Stmt, kinds: Iterable[str], role: str) -> None:
        k = kind_of.get(name)
        if k is None:
            raise ParseError(f"{st.text}: {name} is not a declared argument", st.line)
        if k not in kinds:
            raise ParseError(
                f"{st.text}: {name} must be a {role} argument, "
                f"but it is declared as {_KIND_NAME[k]}",
                st.line,
            )

    fixed_attacks: set[tuple[str, str]] = set()
    sym_pairs: set[tuple[str, str]] = set()
    uncertain_attacks: set[tuple[str, str]] = set()
    control_attacks: set[tuple[str, str]] = set()
    targets: set[str] = set()

    for st in statements:
        if st.pred == "att":
            src, dst = st.args
            require(src, st, ("arg", "u_arg"), "fixed or uncertain")
            require(dst, st, ("arg", "u_arg"), "fixed or uncertain")
            fixed_attacks.add((src, dst))
        elif st.pred == "sym":
            a, b = st.args
            require(a, st, ("arg", "u_arg"), "fixed or uncertain")
            require(b, st, ("arg", "u_arg"), "fixed or uncertain")
            sym_pairs.add(canonical_pair(a, b))
        elif st.pred == "u_att":
            src, dst = st.args
            require(src, st, ("arg", "u_arg"), "fixed or uncertain")
            require(dst, st, ("arg", "u_arg"), "fixed or uncertain")
            uncertain_attacks.add((src, dst))
        elif st.pred == "c_att":
            src, dst = st.args
            require(src, st, ("c_arg",), "control")
            if dst not in kind_of:
                raise ParseError(f"{st.text}: {dst} is not a declared argument", st.line)
            control_attacks.add((src, dst))
        elif st.pred == "target":
            require(st.args[0], st, ("arg",), "fixed")
            targets.add(st.args[0])

    # Overlaps between the three fixed/uncertain relations are rejected at
    # the statement that completes the overlap.
    for st in statements:
        if st.pred not in _BINARY or st.pred == "c_att":
            continue
        x, y = st.args
        pair = (x, y)
        cpair = canonical_pair(x, y)
        if st.pred == "att":
            if pair in uncertain_attacks:
                raise ParseError(f"{st.text}: also declared as an uncertain attack", st.line)
            if cpair in sym_pairs:
                raise ParseError(f"{st.text}: also declared as a symmetric conflict", st.line)
        elif st.pred == "u_att":
            if pair in fixed_attacks:
                raise ParseError(f"{st.text}: also declared as a fixed attack", st.line)
            if cpair in sym_pairs:
                raise ParseError(f"{st.text}: also declared as a symmetric conflict", st.line)
        elif st.pred == "sym":
            for d in (cpair, (cpair[1], cpair[0])):
                if d in fixed_attacks:
                    raise ParseError(f"{st.text}: conflicts with fixed attack att({d[0]},{d[1]})", st.line)
                if d in uncertain_attacks:
                    raise ParseError(f"{st.text}: conflicts with uncertain attack u_att({d[0]},{d[1]})", st.line)

    caf = ControlAF(
        frozenset(n for n, k in kind_of.items() if k == "arg"),
        frozenset(n for n, k in kind_of.items() if k == "u_arg"),
        frozenset(n for n, k in kind_of.items() if k == "c_arg"),
        frozenset(fixed_attacks),
        frozenset(sym_pairs),
        frozenset(uncertain_attacks),
        frozenset(control_attacks),
    )
    return Instance(caf, frozenset(targets))


def parse_af(text: str) -> ArgumentationFramework:
    """Parse a plain framework; anything beyond arg/att/target is rejected."""
    instance = parse_instance(text)
    caf = instance.caf
    if (
        caf.uncertain_args
        or caf.control_args
        or caf.symmetric_conflicts
        or caf.uncertain_attacks
        or caf.control_attacks
    ):
        raise ParseError("not a plain AF: file declares control or uncertainty statements")
    return ArgumentationFramework(caf.fixed_args, caf.fixed_attacks)


def serialize_caf(caf: ControlAF, targets: Iterable[str] = ()) -> str:
    """Deterministic textual form; parsing it back gives an equal framework."""
    lines = []
    for a in sorted(caf.fixed_args):
        lines.append(f"arg({a}).")
    for a in sorted(caf.uncertain_args):
        lines.append(f"u_arg({a}).")
    for a in sorted(caf.control_args):
        lines.append(f"c_arg({a}).")
    for s, d in sorted(caf.fixed_attacks):
        lines.append(f"att({s},{d}).")
    for a, b in sorted(caf.symmetric_conflicts):
        lines.append(f"sym({a},{b}).")
    for s, d in sorted(caf.uncertain_attacks):
        lines.append(f"u_att({s},{d}).")
    for s, d in sorted(caf.control_attacks):
        lines.append(f"c_att({s},{d}).")
    for t in sorted(set(targets)):
        lines.append(f"target({t}).")
    return "\n".join(lines) + ("\n" if lines else "")


def serialize_af(af: ArgumentationFramework) -> str:
    """Plain frameworks serialize with arg/att statements only."""
    lines = [f"arg({a})." for a in sorted(af.arguments)]
    lines += [f"att({s},{d})." for s, d in sorted(af.attacks)]
    return "\n".join(lines) + ("\n" if lines else "")

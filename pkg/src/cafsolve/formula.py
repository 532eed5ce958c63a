"""Propositional formulas over named solver variables.

Variables carry their meaning: ``acc(x)`` is the acceptance status of an
argument, ``att(x,y)`` the presence of an attack, ``on(x)`` the presence of
a control or uncertain argument, and ``aux(n)`` a clausification helper.
Formulas are immutable trees; clausification uses the standard
definition-introducing transformation, so the clause set is equisatisfiable
and its models restricted to the original variables are exactly the models
of the source formula.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .errors import InvariantViolation


@dataclass(frozen=True)
class VarId:
    kind: str  # "acc" | "att" | "on" | "aux"
    key: tuple[str, ...]

    def __str__(self) -> str:
        return f"{self.kind}({','.join(self.key)})"

    def sort_key(self) -> tuple:
        return (self.kind, self.key)


def acc(x: str) -> VarId:
    return VarId("acc", (x,))


def att(x: str, y: str) -> VarId:
    return VarId("att", (x, y))


def on(x: str) -> VarId:
    return VarId("on", (x,))


def aux(n: int) -> VarId:
    return VarId("aux", (str(n),))


# -- formula nodes -----------------------------------------------------------


@dataclass(frozen=True)
class Formula:
    pass


@dataclass(frozen=True)
class Const(Formula):
    value: bool


@dataclass(frozen=True)
class Atom(Formula):
    var: VarId


@dataclass(frozen=True)
class Not(Formula):
    child: Formula


@dataclass(frozen=True)
class And(Formula):
    children: tuple[Formula, ...]


@dataclass(frozen=True)
class Or(Formula):
    children: tuple[Formula, ...]


@dataclass(frozen=True)
class Implies(Formula):
    lhs: Formula
    rhs: Formula


@dataclass(frozen=True)
class Iff(Formula):
    lhs: Formula
    rhs: Formula


TRUE = Const(True)
FALSE = Const(False)


def conj(parts: Iterable[Formula]) -> Formula:
    """n-ary conjunction; empty is true, singletons collapse."""
    items = tuple(parts)
    if not items:
        return TRUE
    if len(items) == 1:
        return items[0]
    return And(items)


def disj(parts: Iterable[Formula]) -> Formula:
    """n-ary disjunction; empty is false, singletons collapse."""
    items = tuple(parts)
    if not items:
        return FALSE
    if len(items) == 1:
        return items[0]
    return Or(items)


def variables_of(f: Formula) -> set[VarId]:
    out: set[VarId] = set()
    stack = [f]
    while stack:
        node = stack.pop()
        if isinstance(node, Atom):
            out.add(node.var)
        elif isinstance(node, Not):
            stack.append(node.child)
        elif isinstance(node, (And, Or)):
            stack.extend(node.children)
        elif isinstance(node, (Implies, Iff)):
            stack.append(node.lhs)
            stack.append(node.rhs)
    return out


def evaluate(f: Formula, assignment: Mapping[VarId, bool]) -> bool:
    """Truth value under a total assignment of the formula's variables."""
    if isinstance(f, Const):
        return f.value
    if isinstance(f, Atom):
        return assignment[f.var]
    if isinstance(f, Not):
        return not evaluate(f.child, assignment)
    if isinstance(f, And):
        return all(evaluate(c, assignment) for c in f.children)
    if isinstance(f, Or):
        return any(evaluate(c, assignment) for c in f.children)
    if isinstance(f, Implies):
        return not evaluate(f.lhs, assignment) or evaluate(f.rhs, assignment)
    if isinstance(f, Iff):
        return evaluate(f.lhs, assignment) == evaluate(f.rhs, assignment)
    raise TypeError(f"not a formula node: {f!r}")


# -- quantified formulas -------------------------------------------------------

EXISTS = "e"
FORALL = "a"


@dataclass(frozen=True)
class QuantifiedFormula:
    """A quantifier prefix over disjoint variable blocks plus a matrix.

    Matrix variables missing from the prefix are implicitly existential at
    the innermost level; emission places them in the trailing block next to
    the clausification helpers.
    """

    prefix: tuple[tuple[str, tuple[VarId, ...]], ...]
    matrix: Formula

    def __post_init__(self):
        seen: set[VarId] = set()
        for quantifier, block in self.prefix:
            if quantifier not in (EXISTS, FORALL):
                raise InvariantViolation(f"unknown quantifier {quantifier!r}")
            for v in block:
                if v in seen:
                    raise InvariantViolation(f"variable {v} quantified twice")
                seen.add(v)

    def prefix_vars(self) -> list[VarId]:
        return [v for _, block in self.prefix for v in block]


# -- clausification ------------------------------------------------------------


@dataclass(frozen=True)
class CnfFormula:
    """Clauses over integer literals plus the meaning of each variable.

    Variable i (1-based) means ``var_ids[i-1]``; clausification helpers are
    always ``aux`` variables appended after the declared ones.
    """

    var_ids: tuple[VarId, ...]
    clauses: tuple[tuple[int, ...], ...]

    @property
    def num_vars(self) -> int:
        return len(self.var_ids)

    def index(self) -> dict[VarId, int]:
        return {vid: i + 1 for i, vid in enumerate(self.var_ids)}

    def lit(self, var: VarId, positive: bool = True) -> int:
        i = self.index()[var]
        return i if positive else -i


_CONST_TRUE = ("const", True)
_CONST_FALSE = ("const", False)


def to_cnf(f: Formula, ordered_vars: Sequence[VarId] | None = None) -> CnfFormula:
    """Clausify a formula, introducing ``aux`` definitions for inner nodes.

    ``ordered_vars`` fixes the integers of the named variables (useful for
    stable file emission); it must cover every variable of the formula.
    Constants fold away: a constant-true formula has no clauses, a
    constant-false one has the empty clause.  Top-level conjunctions split
    into asserted parts and top-level disjunctions become plain clauses, so
    helpers appear only for properly nested structure.
    """
    fvars = variables_of(f)
    if ordered_vars is None:
        ordered = sorted(fvars, key=VarId.sort_key)
    else:
        ordered = list(ordered_vars)
        missing = fvars - set(ordered)
        if missing:
            raise InvariantViolation(
                "ordered_vars misses formula variables: "
                + ", ".join(str(v) for v in sorted(missing, key=VarId.sort_key))
            )
    index: dict[VarId, int] = {}
    var_ids: list[VarId] = []
    for vid in ordered:
        if vid in index:
            raise InvariantViolation(f"duplicate variable {vid}")
        var_ids.append(vid)
        index[vid] = len(var_ids)

    clauses: list[tuple[int, ...]] = []
    aux_counter = itertools.count(1)
    memo: dict[Formula, tuple] = {}

    def fresh_aux() -> int:
        vid = aux(next(aux_counter))
        var_ids.append(vid)
        index[vid] = len(var_ids)
        return len(var_ids)

    def encode(node: Formula):
        """Return ('const', bool) or ('lit', int) standing for the node."""
        hit = memo.get(node)
        if hit is not None:
            return hit
        result = _encode(node)
        memo[node] = result
        return result

    def _encode(node: Formula):
        if isinstance(node, Const):
            return _CONST_TRUE if node.value else _CONST_FALSE
        if isinstance(node, Atom):
            return ("lit", index[node.var])
        if isinstance(node, Not):
            kind, val = encode(node.child)
            if kind == "const":
                return ("const", not val)
            return ("lit", -val)
        if isinstance(node, Implies):
            return encode(Or((Not(node.lhs), node.rhs)))
        if isinstance(node, (And, Or)):
            conjunctive = isinstance(node, And)
            lits: list[int] = []
            for child in node.children:
                kind, val = encode(child)
                if kind == "const":
                    if val != conjunctive:
                        return ("const", not conjunctive)
                    continue  # neutral element
                lits.append(val)
            if not lits:
                return ("const", conjunctive)
            if len(lits) == 1:
                return ("lit", lits[0])
            a = fresh_aux()
            if conjunctive:
                for lit in lits:
                    clauses.append((-a, lit))
                clauses.append(tuple([a] + [-lit for lit in lits]))
            else:
                for lit in lits:
                    clauses.append((a, -lit))
                clauses.append(tuple([-a] + lits))
            return ("lit", a)
        if isinstance(node, Iff):
            lkind, lval = encode(node.lhs)
            rkind, rval = encode(node.rhs)
            if lkind == "const" and rkind == "const":
                return ("const", lval == rval)
            if lkind == "const":
                return ("lit", rval if lval else -rval)
            if rkind == "const":
                return ("lit", lval if rval else -lval)
            a = fresh_aux()
            clauses.append((-a, -lval, rval))
            clauses.append((-a, lval, -rval))
            clauses.append((a, lval, rval))
            clauses.append((a, -lval, -rval))
            return ("lit", a)
        raise TypeError(f"not a formula node: {node!r}")

    def assert_top(node: Formula) -> None:
        """Assert a node directly: conjunctions split into their parts and
        disjunctions of encoded children become plain clauses, so the top
        level introduces no helper variables."""
        if isinstance(node, Const):
            if not node.value:
                clauses.append(())
            return
        if isinstance(node, And):
            for child in node.children:
                assert_top(child)
            return
        if isinstance(node, Implies):
            assert_top(Or((Not(node.lhs), node.rhs)))
            return
        if isinstance(node, Or):
            lits: list[int] = []
            for child in node.children:
                kind, val = encode(child)
                if kind == "const":
                    if val:
                        return  # already satisfied
                    continue
                lits.append(val)
            clauses.append(tuple(lits))
            return
        if isinstance(node, Iff):
            lkind, lval = encode(node.lhs)
            rkind, rval = encode(node.rhs)
            if lkind == "const" and rkind == "const":
                if lval != rval:
                    clauses.append(())
            elif lkind == "const":
                clauses.append((rval if lval else -rval,))
            elif rkind == "const":
                clauses.append((lval if rval else -lval,))
            else:
                clauses.append((-lval, rval))
                clauses.append((lval, -rval))
            return
        kind, val = encode(node)
        if kind == "const":
            if not val:
                clauses.append(())
            return
        clauses.append((val,))

    assert_top(f)
    return CnfFormula(tuple(var_ids), tuple(clauses))

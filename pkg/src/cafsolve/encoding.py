"""Logical route for possible controllability under stable semantics.

Variable conventions
--------------------
``acc(x)``   acceptance of argument x.
``att(x,y)`` presence of the attack x->y.  In the control-framework
             formula, attack variables exist only for declared relation
             pairs (both orientations of a symmetric conflict); attacks
             outside the declared relations are compiled as constant false
             instead of carrying variables plus negative units.
``on(x)``    presence of a control or uncertain argument; acceptance of
             such arguments is guarded by their on-variable, which also
             neutralises attacks from absent sources.

Query shape
-----------
The skeptical query is exists(on, uncertain att) forall(acc) over a matrix
"stable constraints imply target accepted"; the credulous query is fully
existential with "stable constraints and target accepted".  The emitted
matrix additionally carries, per symmetric conflict, the escape disjunct
(not att(a,b) and not att(b,a)).  The internal solvers instead assert the
side constraint att(a,b) or att(b,a) on every candidate and drop the
disjunct, which is what makes the search semantics coherent: an assignment
realising no direction of a known conflict describes no completion at all.

The skeptical solver runs a counterexample-guided loop: propose a coherent
assignment of the existential block, ask the clause engine for an
acceptance assignment that satisfies the stable constraints but misses the
target, and either return the candidate (no counterexample: every stable
extension of the induced completion contains the target, vacuously so when
there is none) or block it and retry.  Blocking generalises over attack
variables of pairs with an absent endpoint, which never influence the
induced completion.
"""

from __future__ import annotations

from typing import Callable, Iterator, Mapping, Sequence

from . import semantics as sem
from .controllability import SearchStats, Verdict
from .errors import BudgetExceededError, CafError, ParseError
from .formula import (
    EXISTS,
    FORALL,
    And,
    Atom,
    CnfFormula,
    Formula,
    Iff,
    Implies,
    Not,
    Or,
    QuantifiedFormula,
    VarId,
    acc,
    att,
    conj,
    disj,
    on,
    to_cnf,
    variables_of,
)
from .model import (
    Acceptance,
    ArgumentationFramework,
    Configuration,
    ControlAF,
    Witness,
    configure,
    is_completion_of,
    validate_target,
)
from .sat import SatSolver

DEFAULT_CONFLICT_BUDGET = 1_000_000
DEFAULT_CANDIDATE_BUDGET = 100_000


# -- formulas ------------------------------------------------------------------


def stable_acceptance_formula(af: ArgumentationFramework) -> Formula:
    """Generic relation between attack structure and stable acceptance.

    Quantifies nothing and pins nothing: over the full attack-variable grid
    of the framework's arguments, an argument is accepted iff each present
    attack on it comes from a rejected source.  Fixing the attack variables
    to a concrete graph makes the acceptance models exactly that graph's
    stable extensions.
    """
    names = sorted(af.arguments)
    return conj(
        Iff(
            Atom(acc(x)),
            conj(Implies(Atom(att(j, x)), Not(Atom(acc(j)))) for j in names),
        )
        for x in names
    )


def stable_extensions_formula(af: ArgumentationFramework) -> Formula:
    """Stable acceptance constraints with every attack variable pinned to
    the framework's attack relation; models correspond to stable extensions."""
    names = sorted(af.arguments)
    pins = []
    for s in names:
        for d in names:
            a = Atom(att(s, d))
            pins.append(a if (s, d) in af.attacks else Not(a))
    return conj([stable_acceptance_formula(af), *pins])


def _relation_pairs(caf: ControlAF) -> list[tuple[str, str]]:
    """All declared attack pairs, both orientations for symmetric conflicts."""
    pairs = set(caf.fixed_attacks) | set(caf.control_attacks) | set(caf.uncertain_attacks)
    for a, b in caf.symmetric_conflicts:
        pairs.add((a, b))
        pairs.add((b, a))
    return sorted(pairs)


def _uncertain_att_vars(caf: ControlAF) -> list[VarId]:
    """Attack variables of the existential block: uncertain attacks first,
    then both orientations per symmetric conflict."""
    out = [att(s, d) for s, d in sorted(caf.uncertain_attacks)]
    for a, b in sorted(caf.symmetric_conflicts):
        out.append(att(a, b))
        if a != b:
            out.append(att(b, a))
    return out


def caf_stable_formula(caf: ControlAF) -> Formula:
    """Stable acceptance constraints of a control framework.

    Fixed arguments obey the plain acceptance equivalence; control and
    uncertain arguments additionally require their on-variable.  Fixed and
    control attacks are pinned true, symmetric conflicts must be realised
    in at least one direction, and pairs outside the declared relations
    carry no variable at all.
    """
    attackers: dict[str, list[str]] = {x: [] for x in caf.universe}
    for s, d in _relation_pairs(caf):
        attackers[d].append(s)

    def acceptance(x: str) -> Formula:
        inner = [Implies(Atom(att(j, x)), Not(Atom(acc(j)))) for j in sorted(attackers[x])]
        if x in caf.fixed_args:
            return Iff(Atom(acc(x)), conj(inner))
        return Iff(Atom(acc(x)), conj([Atom(on(x)), *inner]))

    parts: list[Formula] = [acceptance(x) for x in sorted(caf.fixed_args)]
    parts += [acceptance(x) for x in sorted(caf.control_args | caf.uncertain_args)]
    parts += [
        Atom(att(s, d)) for s, d in sorted(caf.fixed_attacks | caf.control_attacks)
    ]
    for a, b in sorted(caf.symmetric_conflicts):
        if a == b:
            parts.append(Atom(att(a, b)))
        else:
            parts.append(Or((Atom(att(a, b)), Atom(att(b, a)))))
    return conj(parts)


def _escape_disjunct(caf: ControlAF) -> Formula | None:
    if not caf.symmetric_conflicts:
        return None
    branches = []
    for a, b in sorted(caf.symmetric_conflicts):
        if a == b:
            branches.append(Not(Atom(att(a, b))))
        else:
            branches.append(And((Not(Atom(att(a, b))), Not(Atom(att(b, a))))))
    return disj(branches)


def controllability_formula(
    caf: ControlAF, target: Sequence[str] | frozenset[str], acceptance: Acceptance
) -> QuantifiedFormula:
    """The quantified query for possible controllability (stable semantics).

    Skeptical: exists on(control) exists on(uncertain) exists att(uncertain
    pairs) forall acc(everything); matrix "constraints imply target" plus
    the per-conflict escape disjunct.  Credulous: same existential blocks
    with an existential acceptance block and matrix "constraints and
    target".  Attack variables of pinned relations stay out of the prefix
    and are picked up by the innermost block at emission time.
    """
    tset = validate_target(caf, target)
    acceptance = Acceptance(acceptance)
    phi = caf_stable_formula(caf)
    goal = conj(Atom(acc(t)) for t in sorted(tset))
    core: Formula
    if acceptance is Acceptance.SKEPTICAL:
        core = Implies(phi, goal)
    else:
        core = And((phi, goal))
    escape = _escape_disjunct(caf)
    matrix = core if escape is None else Or((core, escape))

    prefix: list[tuple[str, tuple[VarId, ...]]] = []
    if caf.control_args:
        prefix.append((EXISTS, tuple(on(x) for x in sorted(caf.control_args))))
    if caf.uncertain_args:
        prefix.append((EXISTS, tuple(on(x) for x in sorted(caf.uncertain_args))))
    att_block = _uncertain_att_vars(caf)
    if att_block:
        prefix.append((EXISTS, tuple(att_block)))
    acc_quant = FORALL if acceptance is Acceptance.SKEPTICAL else EXISTS
    if caf.universe:
        prefix.append((acc_quant, tuple(acc(x) for x in sorted(caf.universe))))
    return QuantifiedFormula(tuple(prefix), matrix)


# -- model decoding ------------------------------------------------------------


def _decode_witness(
    caf: ControlAF, value_of: Mapping[VarId, bool], with_extension: bool
) -> Witness:
    chosen = frozenset(x for x in caf.control_args if value_of[on(x)])
    present_u = frozenset(u for u in caf.uncertain_args if value_of[on(u)])
    args = caf.fixed_args | chosen | present_u
    attacks: set[tuple[str, str]] = set()
    for s, d in caf.fixed_attacks | caf.control_attacks:
        if s in args and d in args:
            attacks.add((s, d))
    for s, d in caf.uncertain_attacks:
        if s in args and d in args and value_of[att(s, d)]:
            attacks.add((s, d))
    for a, b in caf.symmetric_conflicts:
        if a in args and b in args:
            if value_of[att(a, b)]:
                attacks.add((a, b))
            if a != b and value_of[att(b, a)]:
                attacks.add((b, a))
    af = ArgumentationFramework(frozenset(args), frozenset(attacks))
    extension = None
    if with_extension:
        extension = frozenset(x for x in args if value_of[acc(x)])
    return Witness(Configuration(chosen), af, extension)


def _load(cnf: CnfFormula) -> SatSolver:
    solver = SatSolver()
    solver.ensure_var(cnf.num_vars)
    for clause in cnf.clauses:
        solver.add_clause(clause)
    return solver


# -- solvers -------------------------------------------------------------------


def solve_credulous(
    caf: ControlAF,
    target: Sequence[str] | frozenset[str],
    *,
    conflict_budget: int = DEFAULT_CONFLICT_BUDGET,
) -> Verdict:
    """Possible credulous controllability (stable) as one satisfiability call.

    The formula is the coherent variant of the credulous query: the
    conflict side constraints are part of the constraints, no escape
    disjunct.  A model decodes into a self-verified witness (configuration,
    completion, stable extension containing the target).
    """
    tset = validate_target(caf, target)
    phi = caf_stable_formula(caf)
    core = conj([phi, *(Atom(acc(t)) for t in sorted(tset))])
    cnf = to_cnf(core)
    solver = _load(cnf)
    result = solver.solve(max_conflicts=conflict_budget)
    if result is None:
        raise BudgetExceededError("satisfiability search exceeded its conflict budget")
    stats = SearchStats(configurations_tried=1)
    if not result:
        return Verdict(False, None, stats)
    value_of = {vid: solver.model_value(i + 1) for i, vid in enumerate(cnf.var_ids)}
    witness = _decode_witness(caf, value_of, with_extension=True)
    _verify_witness(caf, witness, tset, Acceptance.CREDULOUS)
    return Verdict(True, witness, stats)


def solve_skeptical(
    caf: ControlAF,
    target: Sequence[str] | frozenset[str],
    *,
    max_candidates: int = DEFAULT_CANDIDATE_BUDGET,
    conflict_budget: int = DEFAULT_CONFLICT_BUDGET,
    on_candidate: Callable[[dict[VarId, bool]], None] | None = None,
) -> Verdict:
    """Possible skeptical controllability (stable) by a counterexample-guided
    loop over the existential block.

    ``on_candidate`` is a test hook observing every proposed assignment.
    Raises :class:`BudgetExceededError` after ``max_candidates`` proposals
    or when a clause-engine call exceeds ``conflict_budget`` conflicts.
    """
    tset = validate_target(caf, target)
    existential = [on(x) for x in sorted(caf.control_args)]
    existential += [on(x) for x in sorted(caf.uncertain_args)]
    existential += _uncertain_att_vars(caf)
    xpos = {v: i + 1 for i, v in enumerate(existential)}

    abstraction = SatSolver()
    abstraction.ensure_var(len(existential))
    for a, b in sorted(caf.symmetric_conflicts):
        if a == b:
            abstraction.add_clause([xpos[att(a, b)]])
        else:
            abstraction.add_clause([xpos[att(a, b)], xpos[att(b, a)]])

    phi = caf_stable_formula(caf)
    violation = disj(Not(Atom(acc(t))) for t in sorted(tset))
    ce_cnf = to_cnf(And((phi, violation)))
    ce_index = ce_cnf.index()
    ce_solver = _load(ce_cnf)

    stats = SearchStats()
    while True:
        if stats.configurations_tried >= max_candidates:
            raise BudgetExceededError(
                f"candidate loop exceeded its budget of {max_candidates}"
            )
        res = abstraction.solve(max_conflicts=conflict_budget)
        if res is None:
            raise BudgetExceededError("candidate search exceeded its conflict budget")
        if not res:
            return Verdict(False, None, stats)
        stats.configurations_tried += 1
        candidate = {
            v: abstraction.model_value(xpos[v]) for v in existential
        }
        if on_candidate is not None:
            on_candidate(dict(candidate))
        assumptions = [
            ce_index[v] if candidate[v] else -ce_index[v] for v in existential
        ]
        res = ce_solver.solve(assumptions, max_conflicts=conflict_budget)
        if res is None:
            raise BudgetExceededError(
                "counterexample search exceeded its conflict budget"
            )
        if not res:
            witness = _decode_witness(caf, candidate, with_extension=False)
            _verify_witness(caf, witness, tset, Acceptance.SKEPTICAL)
            return Verdict(True, witness, stats)
        # counterexample: block every candidate inducing the same completion
        present = caf.fixed_args | {
            u for u in caf.uncertain_args if candidate[on(u)]
        }
        relevant = [v for v in existential if v.kind == "on"]
        relevant += [
            v
            for v in existential
            if v.kind == "att" and v.key[0] in present and v.key[1] in present
        ]
        abstraction.add_clause(
            [-xpos[v] if candidate[v] else xpos[v] for v in relevant]
        )


def _verify_witness(
    caf: ControlAF, witness: Witness, target: frozenset[str], acceptance: Acceptance
) -> None:
    configured = configure(caf, witness.configuration)
    ok = is_completion_of(witness.completion, configured)
    if ok and acceptance is Acceptance.CREDULOUS:
        ok = (
            witness.extension is not None
            and target <= witness.extension
            and witness.extension in sem.extensions(witness.completion, sem.Semantics.STABLE)
        )
    elif ok:
        ok = sem.accepted(
            witness.completion, sem.Semantics.STABLE, Acceptance.SKEPTICAL, target
        )
    if not ok:
        raise CafError("internal error: decoded witness failed verification")


def stable_extensions_by_sat(af: ArgumentationFramework) -> frozenset[frozenset[str]]:
    """Stable extensions recovered from the acceptance projections of the
    pinned formula's models; an independent route to ``semantics``."""
    cnf = to_cnf(stable_extensions_formula(af))
    projection = [acc(x) for x in sorted(af.arguments)]
    out = set()
    for model in enumerate_models(cnf, projection):
        out.add(frozenset(x for x in sorted(af.arguments) if model[acc(x)]))
    return frozenset(out)


def enumerate_models(
    cnf: CnfFormula,
    projection: Sequence[VarId],
    *,
    conflict_budget: int = DEFAULT_CONFLICT_BUDGET,
) -> Iterator[dict[VarId, bool]]:
    """All models of a clause set projected onto the given variables."""
    index = cnf.index()
    ints = [index[v] for v in projection]
    solver = _load(cnf)
    while True:
        res = solver.solve(max_conflicts=conflict_budget)
        if res is None:
            raise BudgetExceededError("model enumeration exceeded its conflict budget")
        if not res:
            return
        model = {v: solver.model_value(i) for v, i in zip(projection, ints)}
        yield model
        if not ints:
            return  # empty projection: a single projected model
        solver.add_clause([-i if solver.model_value(i) else i for i in ints])


# -- DIMACS / QDIMACS emission ---------------------------------------------------


def _varmap_lines(var_ids: Sequence[VarId]) -> list[str]:
    return [f"c varmap {i + 1} {vid}" for i, vid in enumerate(var_ids)]


def emit_dimacs(cnf: CnfFormula) -> str:
    """Standard clause-set text with a varmap comment block."""
    lines = _varmap_lines(cnf.var_ids)
    lines.append(f"p cnf {cnf.num_vars} {len(cnf.clauses)}")
    for clause in cnf.clauses:
        lines.append(" ".join([str(l) for l in clause] + ["0"]))
    return "\n".join(lines) + "\n"


def _merged_prefix(qf: QuantifiedFormula) -> list[tuple[str, list[VarId]]]:
    merged: list[tuple[str, list[VarId]]] = []
    for quantifier, block in qf.prefix:
        kinds = {v.kind for v in block}
        if (
            merged
            and merged[-1][0] == quantifier
            and {v.kind for v in merged[-1][1]} == kinds
        ):
            merged[-1][1].extend(block)
        else:
            merged.append((quantifier, list(block)))
    return merged


def clausify_query(qf: QuantifiedFormula) -> CnfFormula:
    """Clausify a query matrix with the same variable numbering the
    prenex emitter would use (prefix order, then free variables, then
    clausification helpers)."""
    merged = _merged_prefix(qf)
    flat = [v for _, block in merged for v in block]
    free = sorted(variables_of(qf.matrix) - set(flat), key=VarId.sort_key)
    return to_cnf(qf.matrix, ordered_vars=flat + free)


def emit_qdimacs(qf: QuantifiedFormula) -> str:
    """Prenex clause-set text: quantifier lines after the header, outermost
    first.  Adjacent blocks of equal quantifier and variable kind merge into
    one line; free matrix variables and clausification helpers form the
    innermost existential line."""
    merged = _merged_prefix(qf)
    flat = [v for _, block in merged for v in block]
    free = sorted(variables_of(qf.matrix) - set(flat), key=VarId.sort_key)
    cnf = to_cnf(qf.matrix, ordered_vars=flat + free)
    index = cnf.index()

    lines = _varmap_lines(cnf.var_ids)
    lines.append(f"p cnf {cnf.num_vars} {len(cnf.clauses)}")
    for quantifier, block in merged:
        ints = [str(index[v]) for v in block]
        lines.append(" ".join([quantifier] + ints + ["0"]))
    trailing = [index[v] for v in free]
    trailing += list(range(len(flat) + len(free) + 1, cnf.num_vars + 1))
    if trailing:
        lines.append(" ".join(["e"] + [str(i) for i in trailing] + ["0"]))
    for clause in cnf.clauses:
        lines.append(" ".join([str(l) for l in clause] + ["0"]))
    return "\n".join(lines) + "\n"


# -- parsing the emitted formats -------------------------------------------------


def _parse_clause_line(line: str, lineno: int) -> tuple[int, ...]:
    try:
        nums = [int(tok) for tok in line.split()]
    except ValueError:
        raise ParseError(f"bad clause line {line!r}", lineno)
    if not nums or nums[-1] != 0 or any(n == 0 for n in nums[:-1]):
        raise ParseError("clause lines must be literals terminated by 0", lineno)
    return tuple(nums[:-1])


def _parse_cnf_text(text: str, allow_quantifiers: bool):
    num_vars = num_clauses = None
    prefix: list[tuple[str, tuple[int, ...]]] = []
    clauses: list[tuple[int, ...]] = []
    varmap: dict[int, str] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("c"):
            parts = line.split()
            if len(parts) == 4 and parts[1] == "varmap":
                varmap[int(parts[2])] = parts[3]
            continue
        if line.startswith("p"):
            parts = line.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise ParseError("malformed problem line", lineno)
            num_vars, num_clauses = int(parts[2]), int(parts[3])
            continue
        if line[0] in "ea":
            if not allow_quantifiers:
                raise ParseError("quantifier line in a plain clause file", lineno)
            if clauses:
                raise ParseError("quantifier line after clauses", lineno)
            body = _parse_clause_line(line[1:], lineno)
            if any(l < 0 for l in body):
                raise ParseError("quantifier lines hold variables, not literals", lineno)
            prefix.append((line[0], body))
            continue
        clauses.append(_parse_clause_line(line, lineno))
    if num_vars is None or num_clauses is None:
        raise ParseError("missing problem line")
    if len(clauses) != num_clauses:
        raise ParseError(
            f"problem line promises {num_clauses} clauses, found {len(clauses)}"
        )
    return num_vars, prefix, clauses, varmap


def parse_dimacs(text: str) -> tuple[int, list[tuple[int, ...]], dict[int, str]]:
    num_vars, _, clauses, varmap = _parse_cnf_text(text, allow_quantifiers=False)
    return num_vars, clauses, varmap


def parse_qdimacs(
    text: str,
) -> tuple[int, list[tuple[str, tuple[int, ...]]], list[tuple[int, ...]], dict[int, str]]:
    num_vars, prefix, clauses, varmap = _parse_cnf_text(text, allow_quantifiers=True)
    return num_vars, prefix, clauses, varmap

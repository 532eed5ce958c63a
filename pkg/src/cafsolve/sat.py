"""A small conflict-driven clause-learning satisfiability solver.

Literals follow the DIMACS convention: variables are positive integers,
a negative literal is the variable's negation.  The solver is incremental
(clauses may be added between calls) and supports solving under
assumptions, which the counterexample loop of the quantified solver relies
on.  It is deterministic: identical clause databases and assumptions give
identical models.

``solve`` returns True/False, or None when the conflict budget is spent.
"""

from __future__ import annotations

from typing import Iterable, Sequence


def _luby(i: int) -> int:
    # Luby restart sequence 1,1,2,1,1,2,4,...
    k = 1
    while (1 << k) - 1 < i:
        k += 1
    while (1 << k) - 1 != i:
        k -= 1
        i -= (1 << k) - 1
    return 1 << (k - 1) if k > 0 else 1


class SatSolver:
    def __init__(self):
        self.num_vars = 0
        self.clauses: list[list[int]] = []
        self.watches: dict[int, list[int]] = {}
        self.value: list[int] = [0]  # 1-indexed: 0 unassigned, 1 true, -1 false
        self.level: list[int] = [0]
        self.reason: list[int] = [-1]
        self.activity: list[float] = [0.0]
        self.phase: list[bool] = [False]
        self.trail: list[int] = []
        self.trail_lim: list[int] = []
        self.qhead = 0
        self.units: list[int] = []
        self.unsat = False
        self.var_inc = 1.0
        self.conflicts_total = 0

    # -- variable and clause management ------------------------------------

    def ensure_var(self, v: int) -> None:
        while self.num_vars < v:
            self.num_vars += 1
            self.value.append(0)
            self.level.append(0)
            self.reason.append(-1)
            self.activity.append(0.0)
            self.phase.append(False)

    def add_clause(self, lits: Iterable[int]) -> None:
        seen: dict[int, None] = {}
        for lit in lits:
            if lit == 0:
                raise ValueError("literal 0 is not allowed")
            if -lit in seen:
                return  # tautology, always satisfied
            seen[lit] = None
        clause = list(seen)
        for lit in clause:
            self.ensure_var(abs(lit))
        if not clause:
            self.unsat = True
        elif len(clause) == 1:
            self.units.append(clause[0])
        else:
            cid = len(self.clauses)
            self.clauses.append(clause)
            self.watches.setdefault(clause[0], []).append(cid)
            self.watches.setdefault(clause[1], []).append(cid)

    # -- assignment bookkeeping --------------------------------------------

    def _val(self, lit: int) -> int:
        v = self.value[abs(lit)]
        return v if lit > 0 else -v

    def _dl(self) -> int:
        return len(self.trail_lim)

    def _assign(self, lit: int, reason: int) -> None:
        v = abs(lit)
        self.value[v] = 1 if lit > 0 else -1
        self.level[v] = self._dl()
        self.reason[v] = reason
        self.trail.append(lit)

    def _backtrack(self, target_level: int) -> None:
        if self._dl() <= target_level:
            return
        lim = self.trail_lim[target_level]
        for i in range(len(self.trail) - 1, lim - 1, -1):
            lit = self.trail[i]
            v = abs(lit)
            self.phase[v] = lit > 0
            self.value[v] = 0
            self.reason[v] = -1
        del self.trail[lim:]
        del self.trail_lim[target_level:]
        self.qhead = lim

    def _bump(self, v: int) -> None:
        self.activity[v] += self.var_inc
        if self.activity[v] > 1e100:
            for i in range(1, self.num_vars + 1):
                self.activity[i] *= 1e-100
            self.var_inc *= 1e-100

    # -- core engine ---------------------------------------------------------

    def _propagate(self) -> int | None:
        while self.qhead < len(self.trail):
            p = self.trail[self.qhead]
            self.qhead += 1
            neg = -p
            ws = self.watches.get(neg)
            if not ws:
                continue
            kept: list[int] = []
            conflict: int | None = None
            for pos, cid in enumerate(ws):
                clause = self.clauses[cid]
                if clause[0] == neg:
                    clause[0], clause[1] = clause[1], clause[0]
                other = clause[0]
                if self._val(other) == 1:
                    kept.append(cid)
                    continue
                moved = False
                for k in range(2, len(clause)):
                    if self._val(clause[k]) != -1:
                        clause[1], clause[k] = clause[k], clause[1]
                        self.watches.setdefault(clause[1], []).append(cid)
                        moved = True
                        break
                if moved:
                    continue
                kept.append(cid)
                if self._val(other) == -1:
                    kept.extend(ws[pos + 1 :])
                    conflict = cid
                    break
                self._assign(other, cid)
            self.watches[neg] = kept
            if conflict is not None:
                return conflict
        return None

    def _analyze(self, confl: int) -> tuple[list[int], int]:
        # First-UIP learning.
        learnt: list[int] = []
        seen = [False] * (self.num_vars + 1)
        counter = 0
        p = 0
        idx = len(self.trail) - 1
        cur = self._dl()
        clause = self.clauses[confl]
        while True:
            for q in clause:
                if p != 0 and q == p:
                    continue
                v = abs(q)
                if not seen[v] and self.level[v] > 0:
                    seen[v] = True
                    self._bump(v)
                    if self.level[v] == cur:
                        counter += 1
                    else:
                        learnt.append(q)
            while not seen[abs(self.trail[idx])]:
                idx -= 1
            p = self.trail[idx]
            idx -= 1
            seen[abs(p)] = False
            counter -= 1
            if counter == 0:
                break
            clause = self.clauses[self.reason[abs(p)]]
        learnt.insert(0, -p)
        if len(learnt) == 1:
            return learnt, 0
        # second literal must sit at the backjump level to stay watched
        best = max(range(1, len(learnt)), key=lambda i: self.level[abs(learnt[i])])
        learnt[1], learnt[best] = learnt[best], learnt[1]
        return learnt, self.level[abs(learnt[1])]

    def _pick_branch_var(self) -> int:
        best, best_act = 0, -1.0
        for v in range(1, self.num_vars + 1):
            if self.value[v] == 0 and self.activity[v] > best_act:
                best, best_act = v, self.activity[v]
        return best

    def solve(
        self,
        assumptions: Sequence[int] = (),
        max_conflicts: int | None = None,
    ) -> bool | None:
        if self.unsat:
            return False
        for lit in assumptions:
            self.ensure_var(abs(lit))
        self._backtrack(0)
        # re-propagate the level-0 trail so clauses added since the last call
        # take effect even when both their watched literals are already false
        self.qhead = 0
        for u in self.units:
            v = self._val(u)
            if v == -1:
                self.unsat = True
                return False
            if v == 0:
                self._assign(u, -1)

        conflicts = 0
        restart_ix = 1
        restart_limit = 64 * _luby(restart_ix)
        while True:
            confl = self._propagate()
            if confl is not None:
                if self._dl() == 0:
                    self.unsat = True
                    return False
                conflicts += 1
                self.conflicts_total += 1
                if max_conflicts is not None and conflicts >= max_conflicts:
                    self._backtrack(0)
                    return None
                learnt, back_level = self._analyze(confl)
                self._backtrack(back_level)
                if len(learnt) == 1:
                    self.units.append(learnt[0])
                    if self._val(learnt[0]) == 0:
                        self._assign(learnt[0], -1)
                    elif self._val(learnt[0]) == -1:
                        self.unsat = True
                        return False
                else:
                    cid = len(self.clauses)
                    self.clauses.append(learnt)
                    self.watches.setdefault(learnt[0], []).append(cid)
                    self.watches.setdefault(learnt[1], []).append(cid)
                    self._assign(learnt[0], cid)
                self.var_inc *= 1.052
                if conflicts >= restart_limit:
                    restart_ix += 1
                    restart_limit = conflicts + 64 * _luby(restart_ix)
                    self._backtrack(0)
                continue

            if len(self.trail) == self.num_vars:
                # assumptions beyond the current decision level were never
                # enqueued; a falsified one here was forced, so reject
                for a in assumptions:
                    if self._val(a) == -1:
                        self._backtrack(0)
                        return False
                return True
            dl = self._dl()
            if dl < len(assumptions):
                a = assumptions[dl]
                v = self._val(a)
                if v == -1:
                    self._backtrack(0)
                    return False
                self.trail_lim.append(len(self.trail))
                if v == 0:
                    self._assign(a, -1)
            else:
                var = self._pick_branch_var()
                self.trail_lim.append(len(self.trail))
                self._assign(var if self.phase[var] else -var, -1)

    # -- model access ---------------------------------------------------------

    def model_value(self, var: int) -> bool:
        """Truth value of a variable in the model found by the last solve."""
        return self.value[var] == 1

    def model(self) -> list[int]:
        """The model as a list of literals, one per variable."""
        return [v if self.value[v] == 1 else -v for v in range(1, self.num_vars + 1)]

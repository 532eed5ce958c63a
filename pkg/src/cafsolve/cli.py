"""Command-line interface.

Subcommands: ``check`` decides a controllability query, ``extensions``
lists extensions of a plain framework, ``encode`` writes the query as a
solver file, ``completions`` counts (and optionally dumps) completions.

``check`` exits 10 when controllable, 20 when not, 1 on usage or parse
errors, 2 when a budget is exceeded and 3 if the two decision methods
disagree.  The report on standard output is byte-stable across runs in
single-worker mode; the elapsed-time line goes to standard error for that
reason.  The environment variable ``CAF_BUDGET`` overrides the brute-force
leaf-check budget.
"""

from __future__ import annotations

import argparse
import os
import sys
import time
from dataclasses import dataclass
from typing import Iterable, Sequence

from . import encoding
from . import semantics as sem
from .controllability import DEFAULT_BUDGET, Verdict, decide
from .errors import (
    BudgetExceededError,
    CafError,
    DomainError,
    InvariantViolation,
    ParseError,
)
from .instance import Instance, parse_af, parse_instance, serialize_af
from .model import Acceptance, Mode, Query, Semantics, configure, Configuration
from .completion import count_completions, enumerate_completions

EXIT_CONTROLLABLE = 10
EXIT_NOT_CONTROLLABLE = 20
EXIT_USAGE = 1
EXIT_BUDGET = 2
EXIT_DISAGREEMENT = 3


class UsageError(CafError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # exit 1 instead of argparse's default 2
        raise UsageError(message)


@dataclass
class RunReport:
    """Everything a ``check`` run produced; renders as the stdout document.

    The elapsed time is intentionally not part of the rendered document so
    that standard output stays byte-stable across runs."""

    instance: str
    query: Query
    method: str
    verdict: Verdict
    elapsed_ms: int
    methods_agree: bool | None = None  # only set when method=both

    def to_lines(self) -> list[str]:
        lines = [
            f"instance: {self.instance}",
            f"semantics: {self.query.semantics.value}",
            f"mode: {self.query.mode.value}",
            f"acceptance: {self.query.acceptance.value}",
            f"target: {_fmt_set(self.query.target)}",
            f"method: {self.method}",
            f"answer: {'controllable' if self.verdict.answer else 'not-controllable'}",
        ]
        witness = self.verdict.witness
        if witness is not None:
            lines += [
                f"witness-configuration: {_fmt_set(witness.configuration.chosen)}",
                f"witness-completion-args: {_fmt_set(witness.completion.arguments)}",
                f"witness-completion-attacks: {_fmt_attacks(witness.completion.attacks)}",
                "witness-extension: "
                + (_fmt_set(witness.extension) if witness.extension is not None else "-"),
            ]
        else:
            lines += [
                "witness-configuration: -",
                "witness-completion-args: -",
                "witness-completion-attacks: -",
                "witness-extension: -",
            ]
        lines += [
            f"configurations-tried: {self.verdict.stats.configurations_tried}",
            f"completions-examined: {self.verdict.stats.completions_examined}",
        ]
        if self.methods_agree is not None:
            lines.append(f"methods-agree: {'yes' if self.methods_agree else 'no'}")
        return lines


def _fmt_set(names: Iterable[str]) -> str:
    return "{" + ",".join(sorted(names)) + "}"


def _fmt_attacks(attacks: Iterable[tuple[str, str]]) -> str:
    return "{" + ",".join(f"({s},{d})" for s, d in sorted(attacks)) + "}"


def _read_file(path: str) -> str:
    with open(path, "r", encoding="utf-8") as handle:
        return handle.read()


def _budget() -> int:
    raw = os.environ.get("CAF_BUDGET")
    if raw is None:
        return DEFAULT_BUDGET
    try:
        value = int(raw)
        if value <= 0:
            raise ValueError
    except ValueError:
        raise UsageError(f"CAF_BUDGET must be a positive integer, got {raw!r}")
    return value


def _split_names(raw: str, flag: str) -> frozenset[str]:
    names = frozenset(part.strip() for part in raw.split(",") if part.strip())
    if not names:
        raise UsageError(f"{flag} needs a comma-separated list of argument names")
    return names


def _resolve_target(args, instance: Instance) -> frozenset[str]:
    if args.target is not None:
        flag_target = _split_names(args.target, "--target")
        if instance.targets and instance.targets != flag_target:
            print(
                "warning: --target overrides the target(...) facts in the file",
                file=sys.stderr,
            )
        return flag_target
    if instance.targets:
        return instance.targets
    raise UsageError("no target: pass --target or declare target(...) facts")


def cmd_check(args) -> int:
    instance = parse_instance(_read_file(args.file))
    target = _resolve_target(args, instance)
    query = Query.of(args.semantics, args.mode, args.acceptance, target)
    if args.method == "logic" or args.method == "both":
        if query.semantics is not Semantics.STABLE or query.mode is not Mode.POSSIBLE:
            raise UsageError(
                "method=logic supports only --semantics stable --mode possible"
            )
    budget = _budget()

    started = time.perf_counter()
    brute: Verdict | None = None
    logic: Verdict | None = None
    if args.method in ("brute", "both"):
        brute = decide(instance.caf, query, budget=budget, jobs=args.jobs)
    if args.method in ("logic", "both"):
        if query.acceptance is Acceptance.SKEPTICAL:
            logic = encoding.solve_skeptical(instance.caf, target)
        else:
            logic = encoding.solve_credulous(instance.caf, target)
    elapsed_ms = int((time.perf_counter() - started) * 1000)

    if brute is not None and logic is not None and brute.answer != logic.answer:
        print(
            f"method disagreement: brute={brute.answer} logic={logic.answer}",
            file=sys.stderr,
        )
        return EXIT_DISAGREEMENT

    verdict = brute if brute is not None else logic
    assert verdict is not None
    report = RunReport(
        instance=args.file,
        query=query,
        method=args.method,
        verdict=verdict,
        elapsed_ms=elapsed_ms,
        methods_agree=True if args.method == "both" else None,
    )
    print("\n".join(report.to_lines()))
    print(f"elapsed-ms: {report.elapsed_ms}", file=sys.stderr)
    return EXIT_CONTROLLABLE if verdict.answer else EXIT_NOT_CONTROLLABLE


def cmd_extensions(args) -> int:
    af = parse_af(_read_file(args.file))
    exts = sorted(
        sem.extensions(af, Semantics(args.semantics)),
        key=lambda e: tuple(sorted(e)),
    )
    for ext in exts:
        print(_fmt_set(ext))
    return 0


def cmd_encode(args) -> int:
    instance = parse_instance(_read_file(args.file))
    target = _resolve_target(args, instance)
    acceptance = Acceptance(args.acceptance)
    qf = encoding.controllability_formula(instance.caf, target, acceptance)
    if acceptance is Acceptance.SKEPTICAL:
        text = encoding.emit_qdimacs(qf)
    else:
        text = encoding.emit_dimacs(encoding.clausify_query(qf))
    try:
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(text)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return 0


def cmd_completions(args) -> int:
    instance = parse_instance(_read_file(args.file))
    caf = instance.caf
    if args.conf is not None:
        chosen = frozenset(p.strip() for p in args.conf.split(",") if p.strip())
        stray = chosen - caf.control_args
        if stray:
            raise UsageError(
                "--conf names non-control arguments: " + ", ".join(sorted(stray))
            )
        caf = configure(caf, Configuration(chosen))
    count = count_completions(caf, limit=_budget())
    print(count)
    if args.dump is not None:
        os.makedirs(args.dump, exist_ok=True)
        for i, af in enumerate(enumerate_completions(caf)):
            path = os.path.join(args.dump, f"completion_{i:04d}.af")
            with open(path, "w", encoding="utf-8") as handle:
                handle.write(serialize_af(af))
    return 0


def _build_parser() -> _Parser:
    parser = _Parser(prog="cafsolve", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    check = sub.add_parser("check", help="decide a controllability query")
    check.add_argument("--file", required=True)
    check.add_argument(
        "--semantics",
        required=True,
        choices=[s.value for s in Semantics],
    )
    check.add_argument("--mode", required=True, choices=[m.value for m in Mode])
    check.add_argument(
        "--acceptance", required=True, choices=[a.value for a in Acceptance]
    )
    check.add_argument("--target", help="comma-separated target arguments")
    check.add_argument(
        "--method", default="brute", choices=["brute", "logic", "both"]
    )
    check.add_argument("--jobs", type=int, default=1)
    check.set_defaults(func=cmd_check)

    exts = sub.add_parser("extensions", help="list extensions of a plain AF")
    exts.add_argument("--file", required=True)
    exts.add_argument(
        "--semantics", required=True, choices=[s.value for s in Semantics]
    )
    exts.set_defaults(func=cmd_extensions)

    enc = sub.add_parser("encode", help="emit the query as a solver file")
    enc.add_argument("--file", required=True)
    enc.add_argument("--target", help="comma-separated target arguments")
    enc.add_argument(
        "--acceptance", required=True, choices=[a.value for a in Acceptance]
    )
    enc.add_argument("--out", required=True)
    enc.set_defaults(func=cmd_encode)

    comp = sub.add_parser("completions", help="count or dump completions")
    comp.add_argument("--file", required=True)
    comp.add_argument("--conf", help="comma-separated control arguments to keep")
    comp.add_argument("--dump", help="directory for one file per completion")
    comp.set_defaults(func=cmd_completions)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except BudgetExceededError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (UsageError, ParseError, DomainError, InvariantViolation) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def console_main() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console_main()

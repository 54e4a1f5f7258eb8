"""
The ``newton-centers`` command line.

Every sub-command maps onto one operation of the package. Exit codes are 0
when a decision was reached, 1 for input errors and 2 when an internal
invariant is violated (including disagreements found by the sweeps).
"""
import argparse
import json
import sys
from dataclasses import replace
from typing import List, Optional

from newton_centers.center.global_center import decide_global_center
from newton_centers.center.kukles import (
    kukles_classification,
    kukles_global_center,
    kukles_system,
)
from newton_centers.center.local_center import decide_local_center
from newton_centers.center.local_monodromy import local_monodromy_origin
from newton_centers.cli import messages
from newton_centers.cli.certificate import (
    build_certificate,
    oracle_dict,
    validate_certificate,
    write_certificate,
)
from newton_centers.cli.parser import (
    format_system,
    parse_amplitudes,
    parse_system,
)
from newton_centers.cli.sweeps import (
    blowup_sweep,
    cherkas_equivalence_sweep,
    kukles_grid,
    lienard_grid,
)
from newton_centers.monodromy.decide import decide_monodromy
from newton_centers.monodromy.lienard import (
    lienard_isochrony_obstruction,
    lienard_monodromy,
)
from newton_centers.numerics.config import METHODS, IntegratorConfig
from newton_centers.numerics.integrate import integrate_orbit
from newton_centers.numerics.oracle import check_concordance, monodromy_oracle
from newton_centers.numerics.period import (
    period_function,
    write_period_csv,
    write_trajectory_csv,
)
from newton_centers.utils.exceptions import (
    InputError,
    InvariantViolation,
    PreconditionError,
    SystemSyntaxError,
)
from newton_centers.utils.rational import to_rational

#: Exit codes.
DECIDED, INPUT_ERROR, INVARIANT_VIOLATION = 0, 1, 2


class ArgumentParser(argparse.ArgumentParser):
    """
    Reports usage errors with exit code 1, keeping 2 for invariant
    violations.
    """

    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(INPUT_ERROR, f"{self.prog}: error: {message}\n")


def _progress(args, step: str):
    if getattr(args, "verbose", False):
        print(messages.PROGRESS.format(step=step), file=sys.stderr)


def _config(args) -> IntegratorConfig:
    config = IntegratorConfig()
    if getattr(args, "tol", None) is not None:
        config = replace(config, rel_tol=args.tol, abs_tol=args.tol / 100)
    if getattr(args, "max_time", None) is not None:
        config = replace(config, max_time=args.max_time)
    if getattr(args, "method", None) is not None:
        config = replace(config, method=args.method)
    return config


def _emit(args, document: dict, summary: List[str]):
    validate_certificate(document)
    if args.json:
        write_certificate(document, args.json)
        print("\n".join(summary))
    else:
        print(json.dumps(document, indent=2, ensure_ascii=False))


def _local_center(system):
    """
    The center-focus verdict when the origin is a monodromic equilibrium
    of a system of degree at most two in y, None otherwise.
    """
    try:
        if not local_monodromy_origin(system).is_monodromic:
            return None
        return decide_local_center(system)
    except InputError:
        return None


def cmd_analyze(args) -> int:
    system = parse_system(args.system)
    _progress(args, "monodromy at infinity")
    monodromy = decide_monodromy(system)
    _progress(args, "center-focus at the origin")
    local = _local_center(system)
    _progress(args, "global center")
    verdict = decide_global_center(system)
    numeric = None
    if not args.no_numeric and system.P(0)(0) == 0:
        _progress(args, "numerical oracle")
        report = monodromy_oracle(system, _config(args))
        agrees = check_concordance(report, monodromy.monodromic, system)
        numeric = {
            "oracle": oracle_dict(report, agrees),
            "period_table": None,
        }
    document = build_certificate(system, monodromy, local, verdict, numeric)
    summary = [
        format_system(system),
        f"monodromic at infinity: {monodromy.monodromic} "
        f"({monodromy.condition.value})",
        f"center: {None if local is None else local.center}",
        f"global center: {verdict.global_center} "
        f"({verdict.condition.value})",
    ]
    _emit(args, document, summary)
    return DECIDED


def cmd_monodromy(args) -> int:
    system = parse_system(args.system)
    verdict = decide_monodromy(system, specialized=not args.general)
    case = verdict.failure_case.value if verdict.failure_case else "-"
    summary = [
        format_system(system),
        f"monodromic: {verdict.monodromic}",
        f"condition: {verdict.condition.value}",
        f"failure case: {case}",
    ]
    _emit(args, build_certificate(system, monodromy=verdict), summary)
    return DECIDED


def cmd_center(args) -> int:
    system = parse_system(args.system)
    verdict = decide_local_center(system)
    conditions = ", ".join(c.value for c in verdict.conditions) or "-"
    summary = [
        format_system(system),
        f"origin: {verdict.origin.case.value}",
        f"center: {verdict.center}",
        f"conditions: {conditions}",
    ]
    if verdict.darboux_constant is not None:
        summary.append(f"darboux constant: {verdict.darboux_constant}")
    _emit(args, build_certificate(system, local_center=verdict), summary)
    return DECIDED


def cmd_global(args) -> int:
    system = parse_system(args.system)
    verdict = decide_global_center(system)
    rejection = verdict.rejection.value if verdict.rejection else "-"
    summary = [
        format_system(system),
        f"global center: {verdict.global_center}",
        f"condition: {verdict.condition.value}",
        f"rejection: {rejection}",
    ]
    document = build_certificate(
        system, local_center=verdict.local, global_center=verdict
    )
    _emit(args, document, summary)
    return DECIDED


def _write_rows(args, header: List[str], rows: List[list]):
    lines = [",".join(header)]
    lines += [",".join(str(value) for value in row) for row in rows]
    text = "\n".join(lines) + "\n"
    if args.csv:
        with open(args.csv, "w") as csv_file:
            csv_file.write(text)
    else:
        sys.stdout.write(text)


def _kukles_parameters(assignments: List[str]):
    n, delta, coefficients = None, 0, {}
    for assignment in assignments:
        name, equals, value = assignment.partition("=")
        if not equals:
            message = messages.BAD_ASSIGNMENT.format(text=assignment)
            raise InputError(message)
        name = name.strip()
        if name == "n":
            n = int(to_rational(value))
        elif name == "delta":
            delta = to_rational(value)
        elif name.startswith("a") and name[1:].isdigit():
            coefficients[int(name[1:])] = to_rational(value)
        else:
            raise InputError(messages.BAD_KUKLES_NAME.format(name=name))
    return n, delta, coefficients


def cmd_kukles(args) -> int:
    n, delta, coefficients = _kukles_parameters(args.assignments)
    if args.grid:
        degrees = [n] if n is not None else [3, 5]
        rows = [row for degree in degrees for row in kukles_grid(degree)]
        _write_rows(
            args,
            ["n", "delta", "a0", "a1", "a2", "a3", "reason", "expected"]
            + ["decided"],
            [
                [row.n, row.delta, *row.coefficients, row.reason.value]
                + [row.expected, row.decided]
                for row in rows
            ],
        )
        mismatches = sum(not row.agrees for row in rows)
        if mismatches:
            message = messages.KUKLES_MISMATCH.format(count=mismatches)
            raise InvariantViolation(message)
        return DECIDED
    n = 3 if n is None else n
    system = kukles_system(delta, coefficients, n)
    reason = kukles_classification(delta, coefficients, n)
    verdict = decide_global_center(system)
    print(format_system(system))
    print(f"closed form: {kukles_global_center(delta, coefficients, n)}")
    print(f"reason: {reason.value}")
    print(f"decision: {verdict.global_center} ({verdict.condition.value})")
    if verdict.global_center != kukles_global_center(delta, coefficients, n):
        message = messages.KUKLES_MISMATCH.format(count=1)
        raise InvariantViolation(message)
    return DECIDED


def cmd_lienard(args) -> int:
    if args.grid:
        rows = list(lienard_grid())
        _write_rows(
            args,
            ["ell0", "ell1", "a", "b", "expected", "specialized", "general"],
            [
                [row.ell0, row.ell1, row.a, row.b]
                + [row.expected, row.specialized, row.general]
                for row in rows
            ],
        )
        mismatches = sum(not row.agrees for row in rows)
        if mismatches:
            message = messages.LIENARD_MISMATCH.format(count=mismatches)
            raise InvariantViolation(message)
        return DECIDED
    if args.system is None:
        raise InputError(messages.EMPTY_INPUT)
    system = parse_system(args.system)
    verdict = lienard_monodromy(system.P(0), system.P(1))
    obstruction = lienard_isochrony_obstruction(system.P(0), system.P(1))
    case = verdict.failure_case.value if verdict.failure_case else "-"
    summary = [
        format_system(system),
        f"monodromic: {verdict.monodromic}",
        f"condition: {verdict.condition.value}",
        f"failure case: {case}",
        f"isochrony obstructed: {obstruction.obstructed}",
    ]
    _emit(args, build_certificate(system, monodromy=verdict), summary)
    return DECIDED


def cmd_simulate(args) -> int:
    system = parse_system(args.system)
    try:
        initial = [float(value) for value in args.initial.split(",")]
    except ValueError:
        initial = []
    if len(initial) != 2:
        raise InputError(messages.BAD_INITIAL.format(text=args.initial))
    trajectory = integrate_orbit(
        system, initial, _config(args), stop_at_section=not args.full
    )
    if args.csv:
        write_trajectory_csv(trajectory, args.csv)
        print(f"termination: {trajectory.termination.value}")
    else:
        write_trajectory_csv(trajectory, sys.stdout)
    return DECIDED


def cmd_period(args) -> int:
    system = parse_system(args.system)
    amplitudes = parse_amplitudes(args.amplitudes)
    if not args.force:
        verdict = decide_global_center(system)
        if not verdict.global_center:
            reason = verdict.rejection.value
            message = messages.NOT_GLOBAL_CENTER.format(
                system=system, reason=reason
            )
            raise PreconditionError(message)
    samples = period_function(system, amplitudes, _config(args))
    write_period_csv(samples, args.csv or sys.stdout)
    return DECIDED


def cmd_check(args) -> int:
    _progress(args, "descent / curve search equivalence")
    results = cherkas_equivalence_sweep(args.seed, args.count)
    monodromic = sum(decision.monodromic for _, decision in results)
    print(f"cherkas systems: {len(results)} ({monodromic} monodromic)")
    _progress(args, "blow-up identities")
    failures = blowup_sweep(args.seed, args.blowups)
    print(f"blow-ups: {args.blowups} ({failures} failures)")
    if failures:
        message = messages.BLOWUP_FAILURES.format(count=failures)
        raise InvariantViolation(message)
    return DECIDED


def build_parser() -> ArgumentParser:
    parser = ArgumentParser(
        prog="newton-centers",
        description="Exact center and monodromy decisions for Newton "
        "systems x' = y, y' = P0(x) + P1(x)y + P2(x)y^2 + ...",
    )
    parser.add_argument("-v", "--verbose", action="store_true")
    subparsers = parser.add_subparsers(dest="command", required=True)

    exact = ArgumentParser(add_help=False)
    exact.add_argument("--json", metavar="PATH", help="write the certificate")
    numeric = ArgumentParser(add_help=False)
    numeric.add_argument("--tol", type=float, help="relative tolerance")
    numeric.add_argument("--max-time", type=float, dest="max_time")
    numeric.add_argument("--method", choices=sorted(METHODS))
    output = ArgumentParser(add_help=False)
    output.add_argument("--csv", metavar="PATH", help="write CSV output")

    def command(name: str, handler, parents=(), help_text: str = ""):
        sub = subparsers.add_parser(
            name, parents=list(parents), help=help_text
        )
        sub.set_defaults(handler=handler)
        return sub

    analyze = command(
        "analyze", cmd_analyze, (exact, numeric), "full pipeline"
    )
    analyze.add_argument("system")
    analyze.add_argument("--no-numeric", action="store_true")
    monodromy = command(
        "monodromy", cmd_monodromy, (exact,), "monodromy at infinity"
    )
    monodromy.add_argument("system")
    monodromy.add_argument(
        "--general",
        action="store_true",
        help="send Liénard systems through the chart descent",
    )
    command("center", cmd_center, (exact,), "center-focus").add_argument(
        "system"
    )
    command("global", cmd_global, (exact,), "global center").add_argument(
        "system"
    )
    kukles = command("kukles", cmd_kukles, (output,), "Kukles family")
    kukles.add_argument(
        "assignments",
        nargs="*",
        metavar="NAME=VALUE",
        help="n, delta and a<i> for a_(n-i,i)",
    )
    kukles.add_argument("--grid", action="store_true")
    lienard = command(
        "lienard", cmd_lienard, (exact, output), "Liénard systems"
    )
    lienard.add_argument("system", nargs="?")
    lienard.add_argument("--grid", action="store_true")
    simulate = command(
        "simulate", cmd_simulate, (numeric, output), "integrate"
    )
    simulate.add_argument("system")
    simulate.add_argument("--initial", default="1,0", metavar="X,Y")
    simulate.add_argument(
        "--full",
        action="store_true",
        help="integrate to max time instead of the first section return",
    )
    period = command(
        "period", cmd_period, (numeric, output), "period function"
    )
    period.add_argument("system")
    period.add_argument("--amplitudes", default="1,2,4,8")
    period.add_argument("--force", action="store_true")
    check = command("check", cmd_check, (), "randomized property sweeps")
    check.add_argument("--seed", type=int, default=0)
    check.add_argument("--count", type=int, default=100)
    check.add_argument("--blowups", type=int, default=500)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except SystemSyntaxError as error:
        print(error.render(), file=sys.stderr)
        return INPUT_ERROR
    except InputError as error:
        print(messages.INPUT_ERROR.format(error=error), file=sys.stderr)
        return INPUT_ERROR
    except InvariantViolation as error:
        print(messages.INVARIANT_ERROR.format(error=error), file=sys.stderr)
        return INVARIANT_VIOLATION


if __name__ == "__main__":
    sys.exit(main())

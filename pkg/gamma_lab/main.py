"""
Command-line front end.

Exit codes: 0 success, 1 input / parse / validation error, 2 capacity error,
3 some theorem report does not hold (an implementation defect).
"""

import sys
from typing import List, Optional, Tuple

from gamma_lab.algebra import PREDICATES
from gamma_lab.algebra.filters import principal_filter
from gamma_lab.algebra.ideals import enumerate_ideals
from gamma_lab.algebra.structure import FiniteOrderedGammaSemigroup, validate
from gamma_lab.enumeration import ScanStats, enumerate_structures
from gamma_lab.errors import CapacityError, InputError
from gamma_lab.evaluation.argparse import get_args
from gamma_lab.evaluation.sweep_evaluator import census, search_witness, sweep_theorems
from gamma_lab.evaluation.theorem_suite import check_all
from gamma_lab.utils import report
from gamma_lab.utils.io import load_candidate

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_CAPACITY = 2
EXIT_THEOREM = 3


def _load(path: str, lines: List[str]) -> Optional[FiniteOrderedGammaSemigroup]:
    candidate = load_candidate(path)
    checked = validate(candidate)
    if not checked.valid:
        lines.extend(report.render_validation(checked))
        return None
    return FiniteOrderedGammaSemigroup.from_candidate(candidate)


def _cmd_validate(args, lines: List[str]) -> int:
    checked = validate(load_candidate(args.file))
    lines.extend(report.render_validation(checked))
    return EXIT_OK if checked.valid else EXIT_INPUT


def _cmd_props(args, lines: List[str]) -> int:
    S = _load(args.file, lines)
    if S is None:
        return EXIT_INPUT
    lines.extend(report.render_predicates({name: fn(S) for name, fn in PREDICATES.items()}))
    return EXIT_OK


def _cmd_filter(args, lines: List[str]) -> int:
    S = _load(args.file, lines)
    if S is None:
        return EXIT_INPUT
    elements = range(S.n) if args.element is None else [args.element]
    lines.extend(report.render_filters({x: principal_filter(S, x) for x in elements}))
    return EXIT_OK


def _cmd_ideals(args, lines: List[str]) -> int:
    S = _load(args.file, lines)
    if S is None:
        return EXIT_INPUT
    lines.extend(report.render_ideals(args.kind, enumerate_ideals(S, args.kind)))
    return EXIT_OK


def _cmd_theorems(args, lines: List[str]) -> int:
    S = _load(args.file, lines)
    if S is None:
        return EXIT_INPUT
    results = check_all(S, args.oracle_max_n)
    lines.extend(report.render_theorems(results))
    return EXIT_OK if all(r.holds for r in results) else EXIT_THEOREM


def _cmd_enumerate(args, lines: List[str]) -> int:
    stats = ScanStats()
    count = 0
    for S in enumerate_structures(args.spec, workers=args.workers, stats=stats):
        if not args.count_only:
            lines.append(f"structure = {count}")
            lines.extend(report.render_structure(S))
        count += 1
    lines.extend(report.render_stats(stats))
    lines.append(f"structures = {count}")
    return EXIT_OK


def _cmd_search(args, lines: List[str]) -> int:
    lines.extend(report.render_witness(search_witness(args.spec, args.workers, args.verbose)))
    return EXIT_OK


def _cmd_sweep(args, lines: List[str]) -> int:
    summary = sweep_theorems(args.spec, args.workers, args.oracle_max_n, args.verbose)
    lines.extend(report.render_sweep(summary))
    return EXIT_OK if summary.clean else EXIT_THEOREM


def _cmd_census(args, lines: List[str]) -> int:
    lines.extend(report.render_census(census(args.spec, args.workers, args.verbose)))
    return EXIT_OK


COMMANDS = {
    "validate": _cmd_validate,
    "props": _cmd_props,
    "filter": _cmd_filter,
    "ideals": _cmd_ideals,
    "theorems": _cmd_theorems,
    "enumerate": _cmd_enumerate,
    "search": _cmd_search,
    "sweep": _cmd_sweep,
    "census": _cmd_census,
}


def run_command(argv: List[str]) -> Tuple[int, str]:
    """Run one command; returns the exit code and the report text."""
    lines: List[str] = []
    try:
        args = get_args(argv)
        code = COMMANDS[args.command](args, lines)
    except CapacityError as e:
        lines.append(f"error = {e}")
        code = EXIT_CAPACITY
    except (InputError, OSError, MemoryError) as e:
        lines.append(f"error = {e}")
        code = EXIT_INPUT
    return code, "".join(line + "\n" for line in lines)


def main(argv: Optional[List[str]] = None) -> int:
    code, text = run_command(sys.argv[1:] if argv is None else argv)
    sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())

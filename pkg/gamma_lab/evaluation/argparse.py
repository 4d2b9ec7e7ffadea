import argparse
from typing import List, Optional

from gamma_lab.enumeration import DEFAULT_CAPACITY, ORDER_MODES, EnumerationSpec
from gamma_lab.errors import InputError
from gamma_lab.evaluation.theorem_suite import DEFAULT_ORACLE_MAX_N
from gamma_lab.utils.expr import parse_expr

ENUMERATION_COMMANDS = ("enumerate", "search", "sweep", "census")


class ArgumentParser(argparse.ArgumentParser):
    """Usage errors raise InputError instead of exiting."""

    def error(self, message):
        raise InputError(f"{self.prog}: {message}")


def _add_enumeration_args(parser: argparse.ArgumentParser, where_required: bool = False) -> None:
    parser.add_argument("--max-m", type=int, required=True, help="Largest |M| to enumerate")
    parser.add_argument("--max-gamma", type=int, required=True, help="Largest |Gamma| to enumerate")
    parser.add_argument(
        "--order",
        type=str,
        default="all",
        choices=list(ORDER_MODES),
        help="Only the discrete order, or every labeled partial order",
    )
    parser.add_argument(
        "--where",
        type=str,
        default=None,
        required=where_required,
        help="Predicate expression over intraRegular, leftRegular, leftDuo, ... with &, |, ! and parentheses",
    )
    parser.add_argument("--dedup", action="store_true", help="One representative per relabeling orbit")
    parser.add_argument("--workers", type=int, default=1)
    parser.add_argument("--capacity", type=int, default=DEFAULT_CAPACITY, help="Raw candidate ceiling")
    parser.add_argument("--oracle-max-n", type=int, default=DEFAULT_ORACLE_MAX_N)
    parser.add_argument("--verbose", action="store_true", help="Progress lines on stderr")


def get_args(argv: Optional[List[str]] = None) -> argparse.Namespace:
    # parse command-line arguments
    parser = ArgumentParser(prog="gamma_lab")
    commands = parser.add_subparsers(dest="command", required=True, parser_class=ArgumentParser)

    validate = commands.add_parser("validate", help="Check every axiom of a structure file")
    validate.add_argument("file", type=str)

    props = commands.add_parser("props", help="All predicate verdicts in fixed order")
    props.add_argument("file", type=str)

    filters = commands.add_parser("filter", help="Principal filters N(x)")
    filters.add_argument("file", type=str)
    filters.add_argument("--element", type=int, default=None, help="Only N(K); None = every element")

    ideals = commands.add_parser("ideals", help="Enumerate the ideals of one kind")
    ideals.add_argument("file", type=str)
    ideals.add_argument("--kind", type=str, default="two-sided", choices=["left", "right", "two-sided"])

    theorems = commands.add_parser("theorems", help="Every theorem as a biconditional check")
    theorems.add_argument("file", type=str)
    theorems.add_argument("--oracle-max-n", type=int, default=DEFAULT_ORACLE_MAX_N)

    enumerate_ = commands.add_parser("enumerate", help="Every valid structure within bounds")
    _add_enumeration_args(enumerate_)
    enumerate_.add_argument("--count-only", action="store_true")

    search = commands.add_parser("search", help="First structure satisfying --where")
    _add_enumeration_args(search, where_required=True)

    sweep = commands.add_parser("sweep", help="Theorem checks over every enumerated structure")
    _add_enumeration_args(sweep)

    census = commands.add_parser("census", help="Predicate counts and open-pattern witnesses")
    _add_enumeration_args(census)

    args = parser.parse_args(argv)

    # derived: predicate expression and the enumeration spec
    if args.command in ENUMERATION_COMMANDS:
        if args.workers < 1:
            raise InputError(f"--workers must be at least 1, got {args.workers}")
        args.predicate = parse_expr(args.where) if args.where is not None else None
        args.spec = EnumerationSpec(
            max_m=args.max_m,
            max_gamma=args.max_gamma,
            order_mode=args.order,
            predicate=args.predicate,
            dedup=args.dedup,
            capacity=args.capacity,
        )
    return args

"""
Stable text rendering of reports: `key = value` lines, subsets as sorted brace lists, no timestamps.
"""

from typing import Dict, Iterable, List

from gamma_lab.algebra.structure import FiniteOrderedGammaSemigroup, ValidationReport
from gamma_lab.algebra.subsets import Subset
from gamma_lab.enumeration import ScanStats
from gamma_lab.evaluation.sweep_evaluator import CensusReport, SweepSummary, WitnessReport
from gamma_lab.evaluation.theorem_suite import TheoremReport
from gamma_lab.utils.io import serialize


def fmt_bool(value: bool) -> str:
    return "true" if value else "false"


def render_validation(report: ValidationReport) -> List[str]:
    lines = [f"valid = {fmt_bool(report.valid)}"]
    for tag, witness in report.failures:
        lines.append(f"failure = {tag} {witness}")
    return lines


def render_predicates(values: Dict[str, bool]) -> List[str]:
    return [f"{name} = {fmt_bool(value)}" for name, value in values.items()]


def render_filters(filters: Dict[int, Subset]) -> List[str]:
    return [f"N({x}) = {F}" for x, F in filters.items()]


def render_ideals(kind: str, found: Iterable[Subset]) -> List[str]:
    found = list(found)
    return [f"kind = {kind}", f"count = {len(found)}"] + [f"ideal = {A}" for A in found]


def render_theorems(reports: Iterable[TheoremReport]) -> List[str]:
    lines = []
    reports = list(reports)
    for r in reports:
        verdict = "holds" if r.holds else "FAILS"
        lines.append(f"{r.tag} {verdict} lhs={fmt_bool(r.lhs)} rhs={fmt_bool(r.rhs)}")
        lines.extend(f"  witness = {w}" for w in r.witnesses)
    lines.append(f"all_hold = {fmt_bool(all(r.holds for r in reports))}")
    return lines


def render_stats(stats: ScanStats) -> List[str]:
    return [f"candidates = {stats.candidates}", f"valid = {stats.valid}", f"hits = {stats.hits}"]


def render_structure(S: FiniteOrderedGammaSemigroup) -> List[str]:
    return serialize(S).splitlines()


def render_witness(report: WitnessReport) -> List[str]:
    lines = [f"outcome = {report.outcome}"] + render_stats(report.stats)
    if report.structure is not None:
        lines += render_structure(report.structure)
    return lines


def render_sweep(summary: SweepSummary) -> List[str]:
    lines = render_stats(summary.stats) + [
        f"structures = {summary.structures}",
        f"reports = {summary.reports}",
        f"failing_reports = {summary.failing_reports}",
        f"filter_mismatches = {summary.filter_mismatches}",
    ]
    lines += [f"lhs_true.{tag} = {count}" for tag, count in summary.lhs_true.items()]
    if summary.first_failure is not None:
        encoding, bad = summary.first_failure
        lines += render_structure(FiniteOrderedGammaSemigroup.decode(encoding))
        lines += render_theorems(bad)
    return lines


def render_census(report: CensusReport) -> List[str]:
    lines = render_stats(report.stats)
    lines += [f"count.{name} = {count}" for name, count in report.predicate_counts.items()]
    for pattern, count in sorted(report.pattern_counts.items(), reverse=True):
        bits = "".join("1" if v else "0" for v in pattern)
        lines.append(f"pattern.{bits} = {count}")
    for name, encoding in report.firsts.items():
        if encoding is None:
            lines.append(f"open[{name}] = none-in-bounds")
        else:
            lines.append(f"open[{name}] = witness-found")
            lines += render_structure(FiniteOrderedGammaSemigroup.decode(encoding))
    return lines

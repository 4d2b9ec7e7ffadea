"""
Run searches, theorem sweeps and predicate censuses over an enumerated model space.
"""

import sys
from collections import Counter
from dataclasses import dataclass, field
from functools import partial
from typing import Dict, List, Optional, Tuple

from gamma_lab.algebra import PREDICATES
from gamma_lab.algebra.structure import Encoding, FiniteOrderedGammaSemigroup
from gamma_lab.enumeration import EnumerationSpec, ScanStats, Task, map_tasks, raw_candidate_count, scan_task, tasks
from gamma_lab.evaluation.theorem_suite import (
    DEFAULT_ORACLE_MAX_N,
    THEOREM_TAGS,
    TheoremReport,
    check_all,
    filter_oracle_mismatch,
)

WITNESS_FOUND = "witness-found"
NONE_IN_BOUNDS = "none-in-bounds"

# predicate patterns with no known separating example; the census records the first structure showing each
OPEN_PATTERNS = {
    "intraRegular & !leftRegular & !rightRegular": lambda p: p["intraRegular"]
    and not p["leftRegular"]
    and not p["rightRegular"],
    "intraRegular != intraRegularWeak": lambda p: p["intraRegular"] != p["intraRegularWeak"],
    "leftRegular != leftRegularWeak": lambda p: p["leftRegular"] != p["leftRegularWeak"],
    "rightRegular != rightRegularWeak": lambda p: p["rightRegular"] != p["rightRegularWeak"],
}

# shell-safe file stems for pattern witnesses
PATTERN_SLUGS = {
    "intraRegular & !leftRegular & !rightRegular": "intra_not_left_not_right",
    "intraRegular != intraRegularWeak": "intra_strict_vs_weak",
    "leftRegular != leftRegularWeak": "left_strict_vs_weak",
    "rightRegular != rightRegularWeak": "right_strict_vs_weak",
}


@dataclass
class WitnessReport:
    outcome: str
    structure: Optional[FiniteOrderedGammaSemigroup]
    stats: ScanStats


@dataclass
class SweepSummary:
    stats: ScanStats = field(default_factory=ScanStats)
    structures: int = 0
    reports: int = 0
    failing_reports: int = 0
    filter_mismatches: int = 0
    lhs_true: Dict[str, int] = field(default_factory=lambda: {tag: 0 for tag in THEOREM_TAGS})
    first_failure: Optional[Tuple[Encoding, List[TheoremReport]]] = None

    @property
    def clean(self) -> bool:
        return self.failing_reports == 0 and self.filter_mismatches == 0


@dataclass
class CensusReport:
    stats: ScanStats = field(default_factory=ScanStats)
    predicate_counts: Dict[str, int] = field(default_factory=lambda: {name: 0 for name in PREDICATES})
    pattern_counts: Counter = field(default_factory=Counter)
    firsts: Dict[str, Optional[Encoding]] = field(default_factory=lambda: {name: None for name in OPEN_PATTERNS})


def _progress(verbose: bool, task: Task, stats: ScanStats) -> None:
    if verbose:
        n, g, prefix = task
        print(f"task n={n} g={g} prefix={prefix}: {stats.valid} valid, {stats.hits} hits", file=sys.stderr)


def _search_task(spec: EnumerationSpec, task: Task) -> Tuple[ScanStats, Optional[Encoding]]:
    stats = ScanStats()
    for S in scan_task(spec, task, stats):
        return stats, S.encode()
    return stats, None


def search_witness(spec: EnumerationSpec, workers: int = 1, verbose: bool = False) -> WitnessReport:
    """First structure in encoding order satisfying spec.predicate, or none-in-bounds with full statistics."""
    raw_candidate_count(spec)
    total = ScanStats()
    task_list = tasks(spec)
    for task, (stats, encoding) in zip(task_list, map_tasks(partial(_search_task, spec), task_list, workers)):
        total += stats
        _progress(verbose, task, stats)
        if encoding is not None:
            return WitnessReport(WITNESS_FOUND, FiniteOrderedGammaSemigroup.decode(encoding), total)
    return WitnessReport(NONE_IN_BOUNDS, None, total)


def _sweep_task(spec: EnumerationSpec, oracle_max_n: int, task: Task) -> SweepSummary:
    summary = SweepSummary()
    for S in scan_task(spec, task, summary.stats):
        summary.structures += 1
        results = check_all(S, oracle_max_n)
        summary.reports += len(results)
        for r in results:
            summary.lhs_true[r.tag] += r.lhs
        bad = [r for r in results if not r.holds]
        summary.failing_reports += len(bad)
        if S.n <= oracle_max_n and filter_oracle_mismatch(S) is not None:
            summary.filter_mismatches += 1
            bad = bad or results
        if bad and summary.first_failure is None:
            summary.first_failure = (S.encode(), bad)
    return summary


def sweep_theorems(
    spec: EnumerationSpec, workers: int = 1, oracle_max_n: int = DEFAULT_ORACLE_MAX_N, verbose: bool = False
) -> SweepSummary:
    """check_all on every enumerated structure; a correct implementation ends with zero failing reports."""
    raw_candidate_count(spec)
    total = SweepSummary()
    task_list = tasks(spec)
    for task, part in zip(task_list, map_tasks(partial(_sweep_task, spec, oracle_max_n), task_list, workers)):
        total.stats += part.stats
        total.structures += part.structures
        total.reports += part.reports
        total.failing_reports += part.failing_reports
        total.filter_mismatches += part.filter_mismatches
        for tag, count in part.lhs_true.items():
            total.lhs_true[tag] += count
        if total.first_failure is None:
            total.first_failure = part.first_failure
        _progress(verbose, task, part.stats)
    return total


def predicate_vector(S: FiniteOrderedGammaSemigroup) -> Dict[str, bool]:
    return {name: fn(S) for name, fn in PREDICATES.items()}


def _census_task(spec: EnumerationSpec, task: Task) -> CensusReport:
    report = CensusReport()
    for S in scan_task(spec, task, report.stats):
        vector = predicate_vector(S)
        for name, value in vector.items():
            report.predicate_counts[name] += value
        report.pattern_counts[tuple(vector.values())] += 1
        for name, matches in OPEN_PATTERNS.items():
            if report.firsts[name] is None and matches(vector):
                report.firsts[name] = S.encode()
    return report


def census(spec: EnumerationSpec, workers: int = 1, verbose: bool = False) -> CensusReport:
    """Predicate counts over the model space plus the first structure for each open pattern."""
    raw_candidate_count(spec)
    total = CensusReport()
    task_list = tasks(spec)
    for task, part in zip(task_list, map_tasks(partial(_census_task, spec), task_list, workers)):
        total.stats += part.stats
        for name, count in part.predicate_counts.items():
            total.predicate_counts[name] += count
        total.pattern_counts.update(part.pattern_counts)
        for name, encoding in part.firsts.items():
            if total.firsts[name] is None:
                total.firsts[name] = encoding
        _progress(verbose, task, part.stats)
    return total

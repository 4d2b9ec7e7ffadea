"""
Finite ordered Gamma-semigroups: Gamma-indexed multiplication tables over M = {0, ..., n-1}
together with a partial order compatible with every multiplication.
"""

from dataclasses import dataclass, field
from functools import cached_property
from typing import List, Optional, Sequence, Tuple

import numpy as np

from gamma_lab.errors import InputError

ElementId = int
GammaId = int
Encoding = Tuple[int, int, int, int]  # (n, g, table_code, order_mask)

AXIOMS = ("totality", "associativity", "reflexivity", "antisymmetry", "transitivity", "compatibility")


@dataclass
class Candidate:
    """Raw tables plus order relation, as handed over by a parser or a caller; may be invalid."""

    n: int
    g: int
    # tables[gamma][a][b] holds a*gamma*b; a missing table or row is None / short
    tables: List[Optional[List[List[int]]]]
    leq: np.ndarray

    @classmethod
    def from_pairs(
        cls, n: int, g: int, tables: Sequence[Optional[Sequence[Sequence[int]]]], pairs: Sequence[Tuple[int, int]]
    ) -> "Candidate":
        """Reflexive pairs are implicit; every other pair i <= j must be listed."""
        if n < 1 or g < 1:
            raise InputError(f"Need n >= 1 and g >= 1, got n={n}, g={g}")
        leq = np.eye(n, dtype=bool)
        for i, j in pairs:
            if not (0 <= i < n and 0 <= j < n):
                raise InputError(f"Order pair ({i}, {j}) out of range for n={n}")
            leq[i, j] = True
        tables = [None if t is None else [list(row) for row in t] for t in tables]
        tables = tables + [None] * (g - len(tables))
        return cls(n=n, g=g, tables=tables, leq=leq)


@dataclass(frozen=True)
class ValidationReport:
    failures: Tuple[Tuple[str, Tuple[int, ...]], ...] = ()

    @property
    def valid(self) -> bool:
        return len(self.failures) == 0

    def failed_axioms(self) -> List[str]:
        return [tag for tag, _ in self.failures]


def _first(mask: np.ndarray) -> Optional[Tuple[int, ...]]:
    # np.argwhere walks in C order, i.e. lexicographically over the axes
    hits = np.argwhere(mask)
    if len(hits) == 0:
        return None
    return tuple(int(v) for v in hits[0])


def _totality_gap(candidate: Candidate) -> Optional[Tuple[int, int, int]]:
    n, g = candidate.n, candidate.g
    for a in range(n):
        for gamma in range(g):
            rows = candidate.tables[gamma] if gamma < len(candidate.tables) else None
            for b in range(n):
                if rows is None or a >= len(rows) or rows[a] is None or b >= len(rows[a]):
                    return (a, gamma, b)
    return None


def _check_ranges(candidate: Candidate) -> None:
    n, g = candidate.n, candidate.g
    if n < 1 or g < 1:
        raise InputError(f"Need n >= 1 and g >= 1, got n={n}, g={g}")
    if np.shape(candidate.leq) != (n, n):
        raise InputError(f"Order relation has shape {np.shape(candidate.leq)}, expected {(n, n)}")
    if len(candidate.tables) > g:
        raise InputError(f"{len(candidate.tables)} tables given for g={g}")
    for gamma, rows in enumerate(candidate.tables):
        if rows is None:
            continue
        if len(rows) > n:
            raise InputError(f"table {gamma} has {len(rows)} rows, expected {n}")
        for a, row in enumerate(rows):
            if row is None:
                continue
            if len(row) > n:
                raise InputError(f"table {gamma} row {a} has {len(row)} entries, expected {n}")
            for b, v in enumerate(row):
                if not (0 <= int(v) < n):
                    raise InputError(f"entry ({a}, {gamma}, {b}) = {v} out of range for n={n}")


def associativity_violations(table: np.ndarray) -> np.ndarray:
    """Boolean array over axes (a, gamma, b, mu, c), true where (a gamma b) mu c != a gamma (b mu c)."""
    g, n, _ = table.shape
    a = np.arange(n)[:, None, None, None, None]
    gamma = np.arange(g)[None, :, None, None, None]
    b = np.arange(n)[None, None, :, None, None]
    mu = np.arange(g)[None, None, None, :, None]
    c = np.arange(n)[None, None, None, None, :]
    lhs = table[mu, table[gamma, a, b], c]
    rhs = table[gamma, a, table[mu, b, c]]
    return lhs != rhs


def compatibility_violations(table: np.ndarray, leq: np.ndarray) -> np.ndarray:
    """Boolean array over axes (a, b, gamma, c), true where a <= b but a gamma c, b gamma c or c gamma a, c gamma b
    are not ordered accordingly."""
    g, n, _ = table.shape
    a = np.arange(n)[:, None, None, None]
    b = np.arange(n)[None, :, None, None]
    gamma = np.arange(g)[None, None, :, None]
    c = np.arange(n)[None, None, None, :]
    right_ok = leq[table[gamma, a, c], table[gamma, b, c]]
    left_ok = leq[table[gamma, c, a], table[gamma, c, b]]
    return leq[a, b] & ~(right_ok & left_ok)


def validate(candidate: Candidate) -> ValidationReport:
    """Check every axiom and report each failed one with its lexicographically first witness.

    Out-of-range entries are input errors, not axiom failures.
    """
    _check_ranges(candidate)
    n = candidate.n
    failures = []

    gap = _totality_gap(candidate)
    table = None
    if gap is not None:
        failures.append(("totality", gap))
    else:
        table = np.array(candidate.tables, dtype=np.int64).reshape(candidate.g, n, n)
        witness = _first(associativity_violations(table))
        if witness is not None:
            failures.append(("associativity", witness))

    leq = np.asarray(candidate.leq, dtype=bool)
    witness = _first(~np.diag(leq))
    if witness is not None:
        failures.append(("reflexivity", witness))
    witness = _first(np.triu(leq & leq.T, k=1))
    if witness is not None:
        failures.append(("antisymmetry", witness))
    witness = _first(leq[:, :, None] & leq[None, :, :] & ~leq[:, None, :])
    if witness is not None:
        failures.append(("transitivity", witness))

    if table is not None:
        witness = _first(compatibility_violations(table, leq))
        if witness is not None:
            failures.append(("compatibility", witness))
    return ValidationReport(failures=tuple(failures))


def encode_arrays(table: np.ndarray, leq: np.ndarray) -> Encoding:
    g, n, _ = table.shape
    code = 0
    for v in table.reshape(-1).tolist():
        code = code * n + v
    order_mask = 0
    for i, j in np.argwhere(leq).tolist():
        if i != j:
            order_mask |= 1 << (i * n + j)
    return (n, g, code, order_mask)


def decode_arrays(encoding: Encoding) -> Tuple[np.ndarray, np.ndarray]:
    n, g, code, order_mask = encoding
    cells = []
    for _ in range(g * n * n):
        code, v = divmod(code, n)
        cells.append(v)
    table = np.array(cells[::-1], dtype=np.int64).reshape(g, n, n)
    leq = np.eye(n, dtype=bool)
    for i in range(n):
        for j in range(n):
            if order_mask >> (i * n + j) & 1:
                leq[i, j] = True
    return table, leq


@dataclass(frozen=True, eq=False)
class FiniteOrderedGammaSemigroup:
    """Immutable, always valid. Build through `from_candidate`, `from_tables` or `decode`."""

    table: np.ndarray  # (g, n, n), table[gamma, a, b] = a gamma b
    leq: np.ndarray  # (n, n), leq[a, b] iff a <= b
    _report: ValidationReport = field(default=None, repr=False)

    def __post_init__(self):
        table = np.array(self.table, dtype=np.int64)
        leq = np.array(self.leq, dtype=bool)
        if table.ndim != 3 or table.shape[1] != table.shape[2]:
            raise InputError(f"Expected a (g, n, n) table, got shape {table.shape}")
        candidate = Candidate(n=table.shape[1], g=table.shape[0], tables=table.tolist(), leq=leq)
        report = validate(candidate)
        if not report.valid:
            raise InputError(f"Not an ordered Gamma-semigroup: {list(report.failures)}")
        table.flags.writeable = False
        leq.flags.writeable = False
        object.__setattr__(self, "table", table)
        object.__setattr__(self, "leq", leq)
        object.__setattr__(self, "_report", report)

    @classmethod
    def from_candidate(cls, candidate: Candidate) -> "FiniteOrderedGammaSemigroup":
        report = validate(candidate)
        if not report.valid:
            raise InputError(f"Not an ordered Gamma-semigroup: {list(report.failures)}")
        return cls(table=np.array(candidate.tables, dtype=np.int64), leq=candidate.leq)

    @classmethod
    def from_tables(
        cls, tables: Sequence[Sequence[Sequence[int]]], pairs: Sequence[Tuple[int, int]] = ()
    ) -> "FiniteOrderedGammaSemigroup":
        if len(tables) < 1:
            raise InputError(f"Need at least one Gamma table, got {len(tables)}")
        n = len(tables[0])
        return cls.from_candidate(Candidate.from_pairs(n, len(tables), tables, pairs))

    @classmethod
    def decode(cls, encoding: Encoding) -> "FiniteOrderedGammaSemigroup":
        table, leq = decode_arrays(encoding)
        return cls(table=table, leq=leq)

    @property
    def n(self) -> int:
        return self.table.shape[1]

    @property
    def g(self) -> int:
        return self.table.shape[0]

    @property
    def report(self) -> ValidationReport:
        return self._report

    def entry(self, a: ElementId, gamma: GammaId, b: ElementId) -> ElementId:
        if not (0 <= a < self.n and 0 <= b < self.n):
            raise InputError(f"Element out of range: ({a}, {b}) for n={self.n}")
        if not 0 <= gamma < self.g:
            raise InputError(f"gamma {gamma} out of range for g={self.g}")
        return self.cells[gamma][a][b]

    def encode(self) -> Encoding:
        return encode_arrays(self.table, self.leq)

    def order_pairs(self) -> List[Tuple[int, int]]:
        """Non-reflexive pairs i <= j, sorted."""
        return [(i, j) for i, j in np.argwhere(self.leq).tolist() if i != j]

    def opposite(self) -> "FiniteOrderedGammaSemigroup":
        """Same order, products with their arguments swapped."""
        return FiniteOrderedGammaSemigroup(table=self.table.transpose(0, 2, 1), leq=self.leq)

    def relabel(self, sigma: Sequence[int], tau: Sequence[int]) -> "FiniteOrderedGammaSemigroup":
        """Rename element a to sigma[a] and gamma to tau[gamma]."""
        table, leq = relabel_arrays(self.table, self.leq, sigma, tau)
        return FiniteOrderedGammaSemigroup(table=table, leq=leq)

    # lookup caches; all masks are Python ints with bit i standing for element i
    @cached_property
    def cells(self) -> List[List[List[int]]]:
        return self.table.tolist()

    @cached_property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    @cached_property
    def down_masks(self) -> List[int]:
        return [sum(1 << t for t in range(self.n) if self.leq[t, a]) for a in range(self.n)]

    @cached_property
    def up_masks(self) -> List[int]:
        return [sum(1 << t for t in range(self.n) if self.leq[a, t]) for a in range(self.n)]

    @cached_property
    def divisor_masks(self) -> List[int]:
        """divisor_masks[c]: every a and b with a gamma b = c for some gamma."""
        masks = [0] * self.n
        for rows in self.cells:
            for a, row in enumerate(rows):
                for b, c in enumerate(row):
                    masks[c] |= (1 << a) | (1 << b)
        return masks

    def __eq__(self, other) -> bool:
        if not isinstance(other, FiniteOrderedGammaSemigroup):
            return NotImplemented
        return np.array_equal(self.table, other.table) and np.array_equal(self.leq, other.leq)

    def __hash__(self) -> int:
        return hash(self.encode())

    def __repr__(self) -> str:
        n, g, code, order_mask = self.encode()
        return f"{self.__class__.__name__}(n={n}, g={g}, table_code={code}, order_mask={order_mask})"


def relabel_arrays(
    table: np.ndarray, leq: np.ndarray, sigma: Sequence[int], tau: Sequence[int]
) -> Tuple[np.ndarray, np.ndarray]:
    sigma = np.asarray(sigma, dtype=np.int64)
    tau = np.asarray(tau, dtype=np.int64)
    new_table = np.empty_like(table)
    new_table[np.ix_(tau, sigma, sigma)] = sigma[table]
    new_leq = np.empty_like(leq)
    new_leq[np.ix_(sigma, sigma)] = leq
    return new_table, new_leq

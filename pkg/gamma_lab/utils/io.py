"""
Canonical line-oriented text format for structures.

    gsemigroup v1
    M 2
    G 1
    table 0        # n rows of n entries; row a, column b holds a gamma_0 b
    0 1
    0 1
    order          # pairs "i j" meaning i <= j; reflexive pairs are implicit, transitive ones must be listed
    end
"""

from pathlib import Path
from typing import List, Optional, Tuple, Union

from gamma_lab.algebra.structure import Candidate, FiniteOrderedGammaSemigroup
from gamma_lab.errors import ParseError

HEADER = ("gsemigroup", "v1")
MAX_CELLS = 10**6  # g * n * n table cells accepted by the parser


def is_path(path) -> bool:
    return isinstance(path, (str, Path))


def _significant_lines(text: str) -> List[Tuple[int, List[str]]]:
    lines = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        tokens = raw.split("#", 1)[0].split()
        if tokens:
            lines.append((lineno, tokens))
    return lines


def _ints(tokens: List[str], lineno: int) -> List[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise ParseError(f"expected integers, got {' '.join(tokens)!r}", lineno) from None


def _size(tokens: List[str], lineno: int, name: str) -> int:
    if len(tokens) != 2:
        raise ParseError(f"expected '{name} <count>'", lineno)
    (value,) = _ints(tokens[1:], lineno)
    if value < 1:
        raise ParseError(f"{name} must be at least 1, got {value}", lineno, "range")
    return value


def parse(text: str) -> Candidate:
    """Parse a document into a candidate for `validate`. Errors carry the offending line number."""
    lines = _significant_lines(text)
    if not lines:
        raise ParseError("empty document", 1)
    lineno, tokens = lines[0]
    if tuple(tokens) != HEADER:
        raise ParseError(f"expected header '{' '.join(HEADER)}', got {' '.join(tokens)!r}", lineno)

    n: Optional[int] = None
    g: Optional[int] = None
    tables = {}
    pairs: Optional[List[Tuple[int, int]]] = None
    ended = False
    i = 1
    while i < len(lines):
        lineno, tokens = lines[i]
        i += 1
        if ended:
            raise ParseError("content after 'end'", lineno)
        keyword = tokens[0]
        if keyword in ("M", "G"):
            if (n if keyword == "M" else g) is not None:
                raise ParseError(f"duplicate '{keyword}' section", lineno, "duplicate")
            if keyword == "M":
                n = _size(tokens, lineno, keyword)
            else:
                g = _size(tokens, lineno, keyword)
            if (g or 1) * (n or 1) ** 2 > MAX_CELLS:
                raise ParseError(f"M {n or 1} and G {g or 1} exceed {MAX_CELLS} table cells", lineno, "range")
        elif keyword == "table":
            if n is None or g is None:
                raise ParseError("'table' before 'M' and 'G'", lineno)
            if len(tokens) != 2:
                raise ParseError("expected 'table <gamma>'", lineno)
            (gamma,) = _ints(tokens[1:], lineno)
            if not 0 <= gamma < g:
                raise ParseError(f"table index {gamma} out of range for G {g}", lineno, "range")
            if gamma in tables:
                raise ParseError(f"duplicate 'table {gamma}' section", lineno, "duplicate")
            rows = []
            for _ in range(n):
                if i >= len(lines):
                    raise ParseError(f"table {gamma} needs {n} rows", lineno)
                lineno, tokens = lines[i]
                i += 1
                row = _ints(tokens, lineno)
                if len(row) != n:
                    raise ParseError(f"expected {n} entries, got {len(row)}", lineno)
                for v in row:
                    if not 0 <= v < n:
                        raise ParseError(f"entry {v} out of range for M {n}", lineno, "range")
                rows.append(row)
            tables[gamma] = rows
        elif keyword == "order":
            if n is None:
                raise ParseError("'order' before 'M'", lineno)
            if pairs is not None:
                raise ParseError("duplicate 'order' section", lineno, "duplicate")
            if len(tokens) != 1:
                raise ParseError("expected 'order' on its own line", lineno)
            pairs = []
            while i < len(lines) and lines[i][1][0] not in ("M", "G", "table", "order", "end"):
                lineno, tokens = lines[i]
                i += 1
                pair = _ints(tokens, lineno)
                if len(pair) != 2:
                    raise ParseError("expected an order pair 'i j'", lineno)
                if not all(0 <= v < n for v in pair):
                    raise ParseError(f"order pair {pair[0]} {pair[1]} out of range for M {n}", lineno, "range")
                pairs.append((pair[0], pair[1]))
        elif keyword == "end":
            if len(tokens) != 1:
                raise ParseError("expected 'end' on its own line", lineno)
            ended = True
        else:
            raise ParseError(f"unknown section {keyword!r}", lineno)

    last = lines[-1][0]
    if not ended:
        raise ParseError("missing 'end'", last)
    if n is None or g is None:
        raise ParseError("document needs both 'M' and 'G'", last)
    return Candidate.from_pairs(n, g, [tables.get(gamma) for gamma in range(g)], pairs or [])


def serialize(S: FiniteOrderedGammaSemigroup) -> str:
    """Canonical form: fixed section order, every table, non-reflexive order pairs sorted."""
    lines = [" ".join(HEADER), f"M {S.n}", f"G {S.g}"]
    for gamma, rows in enumerate(S.cells):
        lines.append(f"table {gamma}")
        lines.extend(" ".join(str(v) for v in row) for row in rows)
    lines.append("order")
    lines.extend(f"{i} {j}" for i, j in S.order_pairs())
    lines.append("end")
    return "\n".join(lines) + "\n"


def load_candidate(path: Union[str, Path]) -> Candidate:
    assert is_path(path), f"Wrong format of path: {type(path)}"
    return parse(Path(path).read_text())


def save_structure(path: Union[str, Path], S: FiniteOrderedGammaSemigroup) -> None:
    root_dir = Path(path).parent
    root_dir.mkdir(parents=True, exist_ok=True)
    Path(path).write_text(serialize(S))

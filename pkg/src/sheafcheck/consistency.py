"""Consistency structures: one boolean predicate per cell of dimension >= 1.

A structure is called with the cell, the variables its vertices share and
the vertices' sections restricted to those variables (in vertex order).
Custom structures must be pure functions of these arguments; verdicts are
computed once per cell and cached by the analysis pipeline.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Mapping, Sequence

from .complex import DEFAULT_CELL_BUDGET, Cell, Complex, cell_variables, enumerate_cells
from .errors import ConsistencyTypeError, DomainError
from .sheaf import Assignment, Section, is_numeric, restrict, sections_equal, values_equal

Predicate = Callable[[Cell, frozenset, Sequence[Section]], bool]

STANDARD = "standard"
AGREE_ANY = "agree_any"
TOLERANCE = "tolerance"


@dataclass(frozen=True, eq=False)
class ConsistencyStructure:
    name: str
    predicate: Predicate
    kind: str = "custom"

    @property
    def is_standard(self) -> bool:
        return self.kind == STANDARD

    def __call__(self, cell: Cell, shared: frozenset, restricted: Sequence[Section]) -> bool:
        return bool(self.predicate(cell, shared, restricted))


@dataclass(frozen=True)
class CellVerdict:
    cell: Cell
    consistent: bool


def _standard(cell, shared, restricted):
    first = restricted[0]
    return all(sections_equal(first, s) for s in restricted[1:])


def standard_structure() -> ConsistencyStructure:
    """Consistent iff every vertex restricts to the same section."""
    return ConsistencyStructure(STANDARD, _standard, STANDARD)


def _agree_any(cell, shared, restricted):
    first = restricted[0]
    return any(all(values_equal(first[x], s[x]) for s in restricted[1:]) for x in sorted(shared))


def agree_any_structure() -> ConsistencyStructure:
    """Consistent iff the vertices agree exactly on at least one shared variable."""
    return ConsistencyStructure(AGREE_ANY, _agree_any, AGREE_ANY)


def tolerance_structure(tolerances: Mapping[str, float]) -> ConsistencyStructure:
    """Consistent iff, variable by variable, the spread of values is within tolerance.

    Variables without a tolerance entry are compared exactly (and need not be
    numeric).  Variables with an entry must carry numeric values.
    """
    tolerances = dict(tolerances)
    for x, eps in tolerances.items():
        if isinstance(eps, bool) or not isinstance(eps, (int, float)) or not math.isfinite(eps) or eps < 0:
            raise ValueError(f"tolerance for {x!r} must be a finite nonnegative number, got {eps!r}")

    def predicate(cell, shared, restricted):
        for x in sorted(shared):
            values = [s[x] for s in restricted]
            if x not in tolerances:
                if not all(values_equal(values[0], v) for v in values[1:]):
                    return False
                continue
            bad = [v for v in values if not is_numeric(v)]
            if bad:
                raise ConsistencyTypeError(
                    f"variable {x!r} has non-numeric value {bad[0]!r} on cell {list(cell.vertices)}"
                )
            if max(values) - min(values) > tolerances[x]:
                return False
        return True

    return ConsistencyStructure(TOLERANCE, predicate, TOLERANCE)


def restricted_sections(complex: Complex, assignment: Assignment, cell: Cell):
    shared = cell_variables(complex, cell)
    return shared, [restrict(assignment[v], shared) for v in cell]


def eval_cell(structure: ConsistencyStructure, complex: Complex, assignment: Assignment, cell) -> bool:
    if not isinstance(cell, Cell):
        cell = Cell.of(cell)
    if cell.dimension < 1:
        raise DomainError(f"0-cell {cell!r} is consistent by definition and is never evaluated")
    shared, restricted = restricted_sections(complex, assignment, cell)
    return structure(cell, shared, restricted)


def verdicts(
    structure: ConsistencyStructure,
    complex: Complex,
    assignment: Assignment,
    budget: int = DEFAULT_CELL_BUDGET,
) -> tuple[CellVerdict, ...]:
    """Verdict for every cell of dimension >= 1, in cell order."""
    return tuple(
        CellVerdict(c, eval_cell(structure, complex, assignment, c))
        for c in enumerate_cells(complex, budget)
        if c.dimension >= 1
    )


def bad_cells(
    structure: ConsistencyStructure,
    complex: Complex,
    assignment: Assignment,
    budget: int = DEFAULT_CELL_BUDGET,
) -> tuple[Cell, ...]:
    return tuple(v.cell for v in verdicts(structure, complex, assignment, budget) if not v.consistent)


def minimal_bad_cells(bad) -> tuple[Cell, ...]:
    """Inclusion-minimal members of ``bad``.

    A vertex set avoids every bad cell iff it avoids these.
    """
    cells = sorted(set(bad))
    kept: list[Cell] = []
    for c in cells:  # by size, so any proper face is already in ``kept``
        s = c.as_set()
        if not any(k.as_set() < s for k in kept):
            kept.append(c)
    return tuple(kept)

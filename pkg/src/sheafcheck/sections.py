"""Maximal consistent vertex sets and their glued local sections.

A vertex set induces a consistent subcomplex exactly when it contains no
bad cell, so the maximal consistent sections are the maximal independent
sets of the bad-cell hypergraph.  :func:`maximal_consistent_vertex_sets`
computes them by repeatedly splitting a candidate on a bad cell it contains
(one child per deleted vertex) and discarding candidates covered by a larger
one.  :func:`oracle_maximal_sets` is a brute-force cross-check.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Optional

from .complex import DEFAULT_CELL_BUDGET, Cell, Complex, SensorNetwork, build_complex, cell_counts
from .consistency import ConsistencyStructure, bad_cells as find_bad_cells, minimal_bad_cells
from .errors import DomainError, OracleLimitError
from .sheaf import Assignment, Section, glue as glue_pieces

try:
    from ._fastengine import maximal_consistent_masks
    BACKEND = "cython"
except ImportError:  # pragma: no cover - depends on the build
    from ._pyengine import maximal_consistent_masks
    BACKEND = "python"

ORACLE_LIMIT = 20


@dataclass(frozen=True)
class MaximalSection:
    vertex_set: frozenset
    glued: Optional[Section] = None

    @property
    def vertices(self) -> tuple:
        return tuple(sorted(self.vertex_set))


@dataclass(frozen=True)
class AnalysisResult:
    sections: tuple[MaximalSection, ...]
    bad_cells: tuple[Cell, ...]
    minimal_bad_cells: tuple[Cell, ...]
    structure_name: str
    glue_applied: bool
    cell_counts: dict

    @property
    def vertex_sets(self) -> tuple[frozenset, ...]:
        return tuple(s.vertex_set for s in self.sections)


def _sorted_sets(sets: Iterable[frozenset]) -> tuple[frozenset, ...]:
    return tuple(sorted((frozenset(s) for s in sets), key=lambda s: tuple(sorted(s))))


def _bad_vertex_sets(all_vertices: frozenset, bad) -> list[frozenset]:
    out = []
    for c in bad:
        s = c.as_set() if isinstance(c, Cell) else frozenset(c)
        outside = s - all_vertices
        if outside:
            raise DomainError(f"bad cell {sorted(s)} has vertices outside the vertex set: {sorted(outside)}")
        if len(s) < 2:
            raise DomainError(f"bad cell {sorted(s)} has fewer than two vertices")
        out.append(s)
    return out


def maximal_consistent_vertex_sets(all_vertices, bad, engine=None) -> tuple[frozenset, ...]:
    """The unique antichain of maximal vertex sets containing no bad cell.

    ``engine`` overrides the mask kernel (used by the benchmark and tests).
    """
    all_vertices = frozenset(all_vertices)
    bad_sets = _bad_vertex_sets(all_vertices, bad)
    if not all_vertices:
        return ()
    engine = engine or maximal_consistent_masks
    labels = sorted(all_vertices)
    bit = {v: 1 << i for i, v in enumerate(labels)}
    masks = set()
    for s in bad_sets:
        m = 0
        for v in s:
            m |= bit[v]
        masks.add(m)
    # keep only inclusion-minimal masks; a set avoids all of them iff it avoids these
    ordered = sorted(masks, key=lambda m: (m.bit_count(), m))
    minimal = []
    for m in ordered:
        if not any(k & m == k for k in minimal):
            minimal.append(m)
    found = engine((1 << len(labels)) - 1, minimal)
    return _sorted_sets(frozenset(labels[i] for i in range(len(labels)) if m >> i & 1) for m in found)


def oracle_maximal_sets(all_vertices, bad) -> tuple[frozenset, ...]:
    """Exhaustive search over all vertex subsets, largest first."""
    all_vertices = frozenset(all_vertices)
    bad_sets = _bad_vertex_sets(all_vertices, bad)
    if len(all_vertices) > ORACLE_LIMIT:
        raise OracleLimitError(f"oracle handles at most {ORACLE_LIMIT} vertices, got {len(all_vertices)}")
    if not all_vertices:
        return ()
    labels = sorted(all_vertices)
    result: list[frozenset] = []
    for size in range(len(labels), -1, -1):
        for combo in itertools.combinations(labels, size):
            s = frozenset(combo)
            if any(b <= s for b in bad_sets):
                continue
            if any(s <= r for r in result):
                continue
            result.append(s)
    return _sorted_sets(result)


def glue_maximal_sections(complex: Complex, assignment: Assignment, sets) -> tuple[MaximalSection, ...]:
    """Glue the vertex sections over each set (sets must be standard-consistent)."""
    out = []
    for s in sets:
        s = frozenset(s)
        out.append(MaximalSection(s, glue_pieces(assignment[v] for v in sorted(s))))
    return tuple(out)


def analyze(
    network: SensorNetwork,
    assignment: Assignment,
    structure: ConsistencyStructure,
    cell_budget: int = DEFAULT_CELL_BUDGET,
    glue: bool = True,
    oracle: bool = False,
) -> AnalysisResult:
    """Full pipeline from a network and an assignment to its maximal sections.

    Glued sections are attached only for the standard structure.  With
    ``oracle=True`` the vertex sets come from the exhaustive oracle instead.
    """
    cx = build_complex(network)
    counts = cell_counts(cx, cell_budget)
    bad = find_bad_cells(structure, cx, assignment, cell_budget)
    minimal = minimal_bad_cells(bad)
    finder = oracle_maximal_sets if oracle else maximal_consistent_vertex_sets
    sets = finder(network.vertices, minimal)
    do_glue = glue and structure.is_standard
    if do_glue:
        sections = glue_maximal_sections(cx, assignment, sets)
    else:
        sections = tuple(MaximalSection(s) for s in sets)
    return AnalysisResult(sections, bad, minimal, structure.name, do_glue, counts)

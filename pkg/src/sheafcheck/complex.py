"""The abstract simplicial complex generated by a sensor network.

A set of sensors spans a cell whenever the sensors share at least one
observed variable, so the complex is the nerve of the cover of the
variables by the sensors observing them.  Cells are never stored
explicitly: a :class:`Complex` keeps, for every variable, the set of
sensors observing it (its *support*) and the inclusion-maximal supports.
Everything else is derived on demand.
"""
from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .errors import BudgetExceededError, DomainError, MalformedInputError

DEFAULT_CELL_BUDGET = 1_000_000

VertexId = str
VariableId = str


def _check_label(label, what):
    if not isinstance(label, str) or not label:
        raise MalformedInputError(f"{what} labels must be nonempty strings, got {label!r}")


@functools.total_ordering
@dataclass(frozen=True)
class Cell:
    """A cell, i.e. a nonempty sorted duplicate-free tuple of vertex labels.

    Cells order by dimension first and then lexicographically, which is the
    order used in every report.
    """

    vertices: tuple[VertexId, ...]

    def __post_init__(self):
        vs = self.vertices
        if not vs:
            raise DomainError("a cell needs at least one vertex")
        if any(a >= b for a, b in zip(vs, vs[1:])):
            raise DomainError(f"cell vertices must be sorted and distinct: {vs!r}")

    @classmethod
    def of(cls, vertices: Iterable[VertexId]) -> "Cell":
        return cls(tuple(sorted(set(vertices))))

    @property
    def dimension(self) -> int:
        return len(self.vertices) - 1

    def key(self):
        return (len(self.vertices), self.vertices)

    def __lt__(self, other):
        if not isinstance(other, Cell):
            return NotImplemented
        return self.key() < other.key()

    def __iter__(self):
        return iter(self.vertices)

    def __len__(self):
        return len(self.vertices)

    def __contains__(self, v):
        return v in self.vertices

    def as_set(self) -> frozenset:
        return frozenset(self.vertices)

    def __repr__(self):
        return "Cell({%s})" % ", ".join(self.vertices)


@dataclass(frozen=True)
class SensorNetwork:
    """Sensors and the variables each one observes.

    ``vertices`` may be given in any order and is stored sorted; a repeated
    label is rejected.  ``observed`` must have exactly the vertices as keys.
    """

    vertices: tuple[VertexId, ...]
    observed: Mapping[VertexId, frozenset]

    def __post_init__(self):
        vertices = tuple(self.vertices)
        for v in vertices:
            _check_label(v, "vertex")
        if len(set(vertices)) != len(vertices):
            dups = sorted({v for v in vertices if vertices.count(v) > 1})
            raise MalformedInputError(f"duplicate vertex labels: {dups}")
        if set(self.observed) != set(vertices):
            raise MalformedInputError("observed variables must be given for exactly the network's vertices")
        observed = {}
        for v in sorted(vertices):
            variables = frozenset(self.observed[v])
            for x in variables:
                _check_label(x, "variable")
            observed[v] = variables
        object.__setattr__(self, "vertices", tuple(sorted(vertices)))
        object.__setattr__(self, "observed", observed)

    @classmethod
    def from_mapping(cls, observed: Mapping[VertexId, Iterable[VariableId]]) -> "SensorNetwork":
        return cls(tuple(observed), {v: frozenset(xs) for v, xs in observed.items()})

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[VertexId, Iterable[VariableId]]]) -> "SensorNetwork":
        """Build from ``(label, variables)`` pairs; repeated labels are an error."""
        pairs = [(v, frozenset(xs)) for v, xs in pairs]
        return cls(tuple(v for v, _ in pairs), dict(pairs))

    @property
    def variables(self) -> tuple[VariableId, ...]:
        return tuple(sorted(set().union(*self.observed.values())))

    def __hash__(self):
        return hash((self.vertices, tuple(self.observed[v] for v in self.vertices)))


@dataclass(frozen=True, eq=False)
class Complex:
    network: SensorNetwork
    variable_support: Mapping[VariableId, frozenset] = field(repr=False)
    maximal_cells: tuple[Cell, ...]

    @property
    def vertices(self) -> tuple[VertexId, ...]:
        return self.network.vertices

    def __eq__(self, other):
        if not isinstance(other, Complex):
            return NotImplemented
        return self.network == other.network

    def __hash__(self):
        return hash(self.network)


def build_complex(network: SensorNetwork) -> Complex:
    support: dict[VariableId, set] = {}
    for v in network.vertices:
        for x in network.observed[v]:
            support.setdefault(x, set()).add(v)
    support = {x: frozenset(support[x]) for x in sorted(support)}

    candidates = set(support.values())
    candidates.update(frozenset([v]) for v in network.vertices if not network.observed[v])
    # maximal elements: scan largest first so every kept set is maximal
    maximal: list[frozenset] = []
    for s in sorted(candidates, key=len, reverse=True):
        if not any(s < m for m in maximal):
            maximal.append(s)
    cells = tuple(sorted(Cell.of(m) for m in maximal))
    return Complex(network, support, cells)


def _vertex_set(complex: Complex, vertex_set) -> frozenset:
    vs = frozenset(vertex_set)
    unknown = vs.difference(complex.network.observed)
    if unknown:
        raise DomainError(f"unknown vertices: {sorted(unknown)}")
    return vs


def is_cell(complex: Complex, vertex_set) -> bool:
    vs = _vertex_set(complex, vertex_set)
    if not vs:
        raise DomainError("a cell needs at least one vertex")
    if len(vs) == 1:
        return True
    return any(vs <= m.as_set() for m in complex.maximal_cells)


def _require_cell(complex: Complex, cell) -> Cell:
    if not isinstance(cell, Cell):
        cell = Cell.of(cell)
    if not is_cell(complex, cell.vertices):
        raise DomainError(f"{cell!r} is not a cell of the complex")
    return cell


def cell_variables(complex: Complex, cell) -> frozenset:
    """Variables observed by every vertex of ``cell``."""
    if not isinstance(cell, Cell):
        cell = Cell.of(cell)
    _vertex_set(complex, cell.vertices)
    observed = complex.network.observed
    shared = frozenset.intersection(*(observed[v] for v in cell))
    if not shared and len(cell) > 1:
        raise DomainError(f"{cell!r} is not a cell of the complex")
    return shared


def _check_budget(complex: Complex, budget: int):
    if budget < 1:
        raise ValueError("budget must be positive")
    for m in complex.maximal_cells:
        if 2 ** len(m) - 1 > budget:
            shared = cell_variables(complex, m)
            variable = min(shared) if shared else None
            raise BudgetExceededError(
                f"variable {variable!r} is shared by {len(m)} sensors, which generates "
                f"{2 ** len(m) - 1} cells; budget is {budget}"
            )


def _faces(vertices: tuple, required: frozenset = frozenset()):
    free = [v for v in vertices if v not in required]
    for k in range(len(free) + 1):
        for extra in itertools.combinations(free, k):
            if required or extra:
                yield Cell.of(required.union(extra))


def enumerate_cells(complex: Complex, budget: int = DEFAULT_CELL_BUDGET) -> tuple[Cell, ...]:
    """Every cell exactly once, ordered by dimension then lexicographically."""
    _check_budget(complex, budget)
    seen: set[Cell] = set()
    for m in complex.maximal_cells:
        seen.update(_faces(m.vertices))
        if len(seen) > budget:
            raise BudgetExceededError(f"complex has more than {budget} cells")
    return tuple(sorted(seen))


def star(complex: Complex, cell, budget: int = DEFAULT_CELL_BUDGET) -> tuple[Cell, ...]:
    """All cells containing ``cell``, itself included; the smallest open set around it."""
    cell = _require_cell(complex, cell)
    base = cell.as_set()
    found: set[Cell] = set()
    for m in complex.maximal_cells:
        if base <= m.as_set():
            if 2 ** (len(m) - len(base)) > budget:
                raise BudgetExceededError(f"star of {cell!r} has more than {budget} cells")
            found.update(_faces(m.vertices, base))
    return tuple(sorted(found))


def induced_subcomplex(complex: Complex, vertex_set) -> Complex:
    vs = _vertex_set(complex, vertex_set)
    observed = complex.network.observed
    return build_complex(SensorNetwork(tuple(vs), {v: observed[v] for v in vs}))


def cell_counts(complex: Complex, budget: int = DEFAULT_CELL_BUDGET) -> dict[int, int]:
    """Number of cells per dimension."""
    counts: dict[int, int] = {}
    for c in enumerate_cells(complex, budget):
        counts[c.dimension] = counts.get(c.dimension, 0) + 1
    return counts

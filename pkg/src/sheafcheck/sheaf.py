"""Sections of the sheaf of data assignments.

A section over a set of variables assigns one scalar value to each of them.
Restriction is projection onto fewer variables, and two sections glue when
they agree wherever both are defined.

Values are ``int``, ``float`` (finite), ``str`` or ``bool``.  Equality is
tag-aware: ``1``, ``1.0`` and ``True`` are three different values.
"""
from __future__ import annotations

import math
from collections.abc import Mapping
from typing import Iterable

from .complex import Cell, Complex, SensorNetwork, cell_variables
from .errors import DomainError, GluingConflictError, MalformedInputError, RestrictionDomainError

VALUE_TYPES = (bool, int, float, str)


def check_value(value, path=None):
    if type(value) not in VALUE_TYPES:
        raise MalformedInputError(f"unsupported value {value!r} of type {type(value).__name__}", path)
    if type(value) is float and not math.isfinite(value):
        raise MalformedInputError(f"non-finite value {value!r}", path)
    return value


def values_equal(a, b) -> bool:
    """Exact equality that also requires identical scalar tags."""
    return type(a) is type(b) and a == b


def is_numeric(value) -> bool:
    return type(value) in (int, float)


class Section(Mapping):
    """An immutable total assignment of values to a set of variables."""

    __slots__ = ("_values", "_hash")

    def __init__(self, values: Mapping | Iterable = ()):
        values = dict(values)
        for x, val in values.items():
            if not isinstance(x, str) or not x:
                raise MalformedInputError(f"variable labels must be nonempty strings, got {x!r}")
            check_value(val, x)
        self._values = {x: values[x] for x in sorted(values)}
        self._hash = None

    @property
    def domain(self) -> frozenset:
        return frozenset(self._values)

    def __getitem__(self, x):
        return self._values[x]

    def __iter__(self):
        return iter(self._values)

    def __len__(self):
        return len(self._values)

    def __eq__(self, other):
        if isinstance(other, Section):
            return sections_equal(self, other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset((x, type(v).__name__, v) for x, v in self._values.items()))
        return self._hash

    def __repr__(self):
        return "Section(%s)" % ", ".join(f"{x}={v!r}" for x, v in self._values.items())


def sections_equal(a: Section, b: Section) -> bool:
    if a.domain != b.domain:
        return False
    return all(values_equal(a[x], b[x]) for x in a)


def restrict(section: Section, subdomain) -> Section:
    subdomain = frozenset(subdomain)
    missing = subdomain - section.domain
    if missing:
        raise RestrictionDomainError(
            f"cannot restrict to {sorted(missing)}: not in section domain {sorted(section.domain)}"
        )
    return Section({x: section[x] for x in subdomain})


def glue(pieces: Iterable[Section]) -> Section:
    """The unique section restricting to every piece, or a conflict error."""
    merged: dict = {}
    for piece in pieces:
        for x, value in piece.items():
            if x in merged:
                if not values_equal(merged[x], value):
                    a, b = sorted([merged[x], value], key=lambda v: (type(v).__name__, repr(v)))
                    raise GluingConflictError(x, (a, b))
            else:
                merged[x] = value
    return Section(merged)


class Assignment(Mapping):
    """Per-vertex sections, each one total on the variables its sensor observes."""

    __slots__ = ("network", "_per_vertex")

    def __init__(self, network: SensorNetwork, per_vertex: Mapping):
        extra = set(per_vertex) - set(network.vertices)
        if extra:
            raise MalformedInputError(f"assignment for unknown sensors {sorted(extra)}")
        sections = {}
        for v in network.vertices:
            if v not in per_vertex:
                raise MalformedInputError("no values assigned", v)
            s = per_vertex[v]
            if not isinstance(s, Section):
                s = Section(s)
            expected = network.observed[v]
            if s.domain != expected:
                missing = sorted(expected - s.domain)
                overfull = sorted(s.domain - expected)
                parts = []
                if missing:
                    parts.append(f"missing variables {missing}")
                if overfull:
                    parts.append(f"unexpected variables {overfull}")
                raise MalformedInputError("; ".join(parts), v)
            sections[v] = s
        self.network = network
        self._per_vertex = sections

    def __getitem__(self, v):
        return self._per_vertex[v]

    def __iter__(self):
        return iter(self._per_vertex)

    def __len__(self):
        return len(self._per_vertex)

    def __repr__(self):
        return f"Assignment({self._per_vertex!r})"


def restrict_assignment_to_cell(complex: Complex, assignment: Assignment, v, cell) -> Section:
    if not isinstance(cell, Cell):
        cell = Cell.of(cell)
    if v not in cell:
        raise DomainError(f"vertex {v!r} is not in {cell!r}")
    return restrict(assignment[v], cell_variables(complex, cell))

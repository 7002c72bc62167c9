"""JSON problem and report documents.

A problem document bundles the network, the assignment and the choice of
consistency structure::

    {
      "sensors": {"v0": ["x", "y"], "v1": ["x"]},
      "assignment": {"v0": {"x": 1, "y": 0}, "v1": {"x": 1}},
      "consistency": {"kind": "standard"},
      "options": {"cell_budget": 1000000, "glue": true}
    }

``consistency.kind`` is one of ``standard``, ``agree_any`` or ``tolerance``
(the last takes ``tolerances``: variable -> nonnegative number).
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import Optional

from .complex import SensorNetwork
from .consistency import (
    AGREE_ANY,
    STANDARD,
    TOLERANCE,
    CellVerdict,
    ConsistencyStructure,
    agree_any_structure,
    standard_structure,
    tolerance_structure,
)
from .errors import InputError
from .sections import AnalysisResult
from .sheaf import Assignment, Section

KINDS = (STANDARD, AGREE_ANY, TOLERANCE)


@dataclass(frozen=True)
class ConsistencySpec:
    kind: str = STANDARD
    tolerances: Optional[dict] = None

    def build(self) -> ConsistencyStructure:
        if self.kind == STANDARD:
            return standard_structure()
        if self.kind == AGREE_ANY:
            return agree_any_structure()
        return tolerance_structure(self.tolerances or {})


@dataclass(frozen=True)
class Options:
    cell_budget: Optional[int] = None
    glue: Optional[bool] = None


@dataclass(frozen=True)
class ProblemDocument:
    sensors: dict
    assignment: dict
    consistency: ConsistencySpec = field(default_factory=ConsistencySpec)
    options: Options = field(default_factory=Options)

    def network(self) -> SensorNetwork:
        return SensorNetwork.from_mapping(self.sensors)

    def build_assignment(self, network: Optional[SensorNetwork] = None) -> Assignment:
        network = network or self.network()
        return Assignment(network, {v: Section(vals) for v, vals in self.assignment.items()})

    def to_dict(self) -> dict:
        out = {
            "sensors": {v: list(xs) for v, xs in self.sensors.items()},
            "assignment": {v: dict(vals) for v, vals in self.assignment.items()},
            "consistency": {"kind": self.consistency.kind},
        }
        if self.consistency.tolerances is not None:
            out["consistency"]["tolerances"] = dict(self.consistency.tolerances)
        opts = {}
        if self.options.cell_budget is not None:
            opts["cell_budget"] = self.options.cell_budget
        if self.options.glue is not None:
            opts["glue"] = self.options.glue
        if opts:
            out["options"] = opts
        return out


def _reject_constant(name):
    raise InputError(f"non-finite number {name} is not allowed")


def _load_json(data):
    if isinstance(data, bytes):
        try:
            data = data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise InputError(f"input is not valid UTF-8: {exc}") from None
    try:
        return json.loads(data, parse_constant=_reject_constant)
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON: {exc}") from None


def _label(value, path):
    if not isinstance(value, str) or not value:
        raise InputError(f"expected a nonempty string, got {value!r}", path)
    return value


def _object(value, path):
    if not isinstance(value, dict):
        raise InputError(f"expected an object, got {type(value).__name__}", path)
    return value


def _scalar(value, path):
    if isinstance(value, (bool, int, str)):
        return value
    if isinstance(value, float):
        if not math.isfinite(value):
            raise InputError(f"non-finite number {value!r}", path)
        return value
    raise InputError(f"expected a scalar (number, string or boolean), got {type(value).__name__}", path)


def _normalize_tags(assignment: dict) -> dict:
    """Promote a variable's ints to floats when some other occurrence is a float."""
    kinds: dict = {}
    for vals in assignment.values():
        for x, val in vals.items():
            kinds.setdefault(x, set()).add(type(val))
    promote = {x for x, ts in kinds.items() if ts == {int, float}}
    if not promote:
        return assignment
    return {
        v: {x: float(val) if x in promote else val for x, val in vals.items()}
        for v, vals in assignment.items()
    }


def problem_from_dict(doc) -> ProblemDocument:
    doc = _object(doc, "$")
    unknown = set(doc) - {"sensors", "assignment", "consistency", "options"}
    if unknown:
        raise InputError(f"unknown keys {sorted(unknown)}", "$")
    if "sensors" not in doc:
        raise InputError("missing required key", "sensors")

    sensors = {}
    for v, xs in sorted(_object(doc["sensors"], "sensors").items()):
        path = f"sensors.{v}"
        _label(v, path)
        if not isinstance(xs, list):
            raise InputError("expected a list of variable labels", path)
        labels = [_label(x, f"{path}[{i}]") for i, x in enumerate(xs)]
        if len(set(labels)) != len(labels):
            raise InputError("repeated variable label", path)
        sensors[v] = tuple(sorted(labels))

    raw = _object(doc.get("assignment", {}), "assignment")
    extra = set(raw) - set(sensors)
    if extra:
        raise InputError(f"values for undeclared sensors {sorted(extra)}", "assignment")
    assignment = {}
    for v, declared in sensors.items():
        path = f"assignment.{v}"
        if v not in raw:
            raise InputError(f"no values for sensor declared at sensors.{v}", path)
        vals = _object(raw[v], path)
        missing = sorted(set(declared) - set(vals))
        if missing:
            raise InputError(f"missing variables {missing} declared at sensors.{v}", path)
        overfull = sorted(set(vals) - set(declared))
        if overfull:
            raise InputError(f"variables {overfull} not declared at sensors.{v}", path)
        assignment[v] = {x: _scalar(vals[x], f"{path}.{x}") for x in declared}
    assignment = _normalize_tags(assignment)

    cons = _object(doc.get("consistency", {"kind": STANDARD}), "consistency")
    unknown = set(cons) - {"kind", "tolerances"}
    if unknown:
        raise InputError(f"unknown keys {sorted(unknown)}", "consistency")
    kind = cons.get("kind", STANDARD)
    if kind not in KINDS:
        raise InputError(f"unknown structure kind {kind!r}; expected one of {list(KINDS)}", "consistency.kind")
    tolerances = None
    if "tolerances" in cons:
        if kind != TOLERANCE:
            raise InputError("tolerances only apply to kind 'tolerance'", "consistency.tolerances")
        tolerances = {}
        for x, eps in sorted(_object(cons["tolerances"], "consistency.tolerances").items()):
            path = f"consistency.tolerances.{x}"
            if isinstance(eps, bool) or not isinstance(eps, (int, float)) or not math.isfinite(eps) or eps < 0:
                raise InputError(f"tolerance must be a finite nonnegative number, got {eps!r}", path)
            tolerances[x] = eps

    opts = _object(doc.get("options", {}), "options")
    unknown = set(opts) - {"cell_budget", "glue"}
    if unknown:
        raise InputError(f"unknown keys {sorted(unknown)}", "options")
    budget = opts.get("cell_budget")
    if budget is not None and (isinstance(budget, bool) or not isinstance(budget, int) or budget < 1):
        raise InputError(f"cell_budget must be a positive integer, got {budget!r}", "options.cell_budget")
    glue = opts.get("glue")
    if glue is not None and not isinstance(glue, bool):
        raise InputError(f"glue must be a boolean, got {glue!r}", "options.glue")

    return ProblemDocument(sensors, assignment, ConsistencySpec(kind, tolerances), Options(budget, glue))


def parse_problem(data) -> ProblemDocument:
    """Parse and validate a UTF-8 JSON problem document (bytes or str)."""
    return problem_from_dict(_load_json(data))


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False, allow_nan=False) + "\n"


def serialize_problem(problem: ProblemDocument) -> bytes:
    return dumps(problem.to_dict()).encode("utf-8")


@dataclass(frozen=True)
class ReportDocument:
    """Analysis report; ``sections`` entries are ``{"vertices": [...], "glued": {...} or None}``."""

    sections: list
    bad_cells: list
    minimal_bad_cells: list
    complex_summary: dict
    structure: str

    @classmethod
    def from_result(cls, result: AnalysisResult) -> "ReportDocument":
        sections = [
            {"vertices": list(s.vertices), "glued": dict(s.glued) if s.glued is not None else None}
            for s in result.sections
        ]
        return cls(
            sections=sections,
            bad_cells=[list(c.vertices) for c in result.bad_cells],
            minimal_bad_cells=[list(c.vertices) for c in result.minimal_bad_cells],
            complex_summary=_summary(result.cell_counts),
            structure=result.structure_name,
        )

    def to_dict(self) -> dict:
        return {
            "sections": self.sections,
            "bad_cells": self.bad_cells,
            "minimal_bad_cells": self.minimal_bad_cells,
            "complex_summary": self.complex_summary,
            "structure": self.structure,
        }

    def to_json(self) -> str:
        return dumps(self.to_dict())

    @classmethod
    def from_json(cls, data) -> "ReportDocument":
        doc = _object(_load_json(data), "$")
        try:
            return cls(**{k: doc[k] for k in ("sections", "bad_cells", "minimal_bad_cells", "complex_summary", "structure")})
        except KeyError as exc:
            raise InputError("missing report key", str(exc.args[0])) from None


@dataclass(frozen=True)
class CheckReport:
    verdicts: list
    bad_cells: list
    complex_summary: dict
    structure: str

    @classmethod
    def from_verdicts(cls, verdicts: tuple[CellVerdict, ...], counts: dict, structure: str) -> "CheckReport":
        return cls(
            verdicts=[{"cell": list(v.cell.vertices), "consistent": v.consistent} for v in verdicts],
            bad_cells=[list(v.cell.vertices) for v in verdicts if not v.consistent],
            complex_summary=_summary(counts),
            structure=structure,
        )

    def to_dict(self) -> dict:
        return {
            "verdicts": self.verdicts,
            "bad_cells": self.bad_cells,
            "complex_summary": self.complex_summary,
            "structure": self.structure,
        }

    def to_json(self) -> str:
        return dumps(self.to_dict())


def _summary(counts: dict) -> dict:
    return {"cell_count_by_dimension": {str(d): counts[d] for d in sorted(counts)}}

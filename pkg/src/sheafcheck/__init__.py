"""Consistency analysis of sensor data over an abstract simplicial complex.

Sensors sharing variables span cells; a consistency structure judges each
cell; the package computes the unique maximal vertex sets on which an
assignment of readings is consistent and, for exact agreement, the glued
local section over each.
"""
from .complex import (
    DEFAULT_CELL_BUDGET,
    Cell,
    Complex,
    SensorNetwork,
    build_complex,
    cell_counts,
    cell_variables,
    enumerate_cells,
    induced_subcomplex,
    is_cell,
    star,
)
from .consistency import (
    CellVerdict,
    ConsistencyStructure,
    agree_any_structure,
    bad_cells,
    eval_cell,
    minimal_bad_cells,
    standard_structure,
    tolerance_structure,
    verdicts,
)
from .errors import (
    AnalysisError,
    BudgetExceededError,
    ConsistencyTypeError,
    DomainError,
    GluingConflictError,
    InputError,
    MalformedInputError,
    OracleLimitError,
    RestrictionDomainError,
    SheafcheckError,
)
from .sections import (
    BACKEND,
    AnalysisResult,
    MaximalSection,
    analyze,
    glue_maximal_sections,
    maximal_consistent_vertex_sets,
    oracle_maximal_sets,
)
from .sheaf import Assignment, Section, glue, restrict, restrict_assignment_to_cell, sections_equal

__version__ = "0.1.0"

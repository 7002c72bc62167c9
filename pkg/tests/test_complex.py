import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sheafcheck import (
    BudgetExceededError,
    Cell,
    DomainError,
    MalformedInputError,
    SensorNetwork,
    build_complex,
    cell_variables,
    enumerate_cells,
    induced_subcomplex,
    is_cell,
    star,
)

from support import EXAMPLE1_SENSORS, brute_force_cells, random_network


@pytest.fixture
def ex1():
    return build_complex(SensorNetwork.from_mapping(EXAMPLE1_SENSORS))


def C(*vs):
    return Cell.of(vs)


networks = st.dictionaries(
    st.sampled_from([f"v{i}" for i in range(7)]),
    st.frozensets(st.sampled_from("abcde"), max_size=4),
    max_size=7,
)


def test_example1_cells(ex1):
    cells = enumerate_cells(ex1)
    assert [c.vertices for c in cells] == [
        ("v0",), ("v1",), ("v2",), ("v3",),
        ("v0", "v1"), ("v0", "v2"), ("v1", "v2"), ("v2", "v3"),
        ("v0", "v1", "v2"),
    ]
    assert sum(c.dimension == 1 for c in cells) == 4
    assert sum(c.dimension == 2 for c in cells) == 1


def test_example1_maximal_cells(ex1):
    assert ex1.maximal_cells == (C("v2", "v3"), C("v0", "v1", "v2"))


def test_single_and_disjoint_sensors():
    one = build_complex(SensorNetwork.from_mapping({"a": {"x", "y"}}))
    assert enumerate_cells(one) == (C("a"),)
    two = build_complex(SensorNetwork.from_mapping({"a": {"x"}, "b": {"y"}}))
    assert enumerate_cells(two) == (C("a"), C("b"))


def test_empty_variable_set_is_isolated_vertex():
    cx = build_complex(SensorNetwork.from_mapping({"a": set(), "b": {"x"}, "c": {"x"}}))
    assert C("a") in cx.maximal_cells
    assert enumerate_cells(cx) == (C("a"), C("b"), C("c"), C("b", "c"))


def test_duplicate_labels_rejected():
    with pytest.raises(MalformedInputError):
        SensorNetwork.from_pairs([("a", {"x"}), ("a", {"y"})])
    with pytest.raises(MalformedInputError):
        SensorNetwork(("a", "a"), {"a": frozenset()})


def test_is_cell(ex1):
    assert not is_cell(ex1, {"v0", "v3"})
    assert is_cell(ex1, {"v0", "v1", "v2"})
    for v in ex1.vertices:
        assert is_cell(ex1, {v})
    with pytest.raises(DomainError):
        is_cell(ex1, {"v9"})


def test_cell_variables(ex1):
    assert cell_variables(ex1, C("v0", "v1", "v2")) == {"y"}
    assert cell_variables(ex1, C("v2")) == {"y", "z"}
    assert cell_variables(ex1, C("v2", "v3")) == {"z"}
    with pytest.raises(DomainError):
        cell_variables(ex1, C("v0", "v3"))


def test_star(ex1):
    assert star(ex1, C("v3")) == (C("v3"), C("v2", "v3"))
    assert star(ex1, C("v0", "v1")) == (C("v0", "v1"), C("v0", "v1", "v2"))
    for m in ex1.maximal_cells:
        assert star(ex1, m) == (m,)
    with pytest.raises(DomainError):
        star(ex1, C("v0", "v3"))


def test_enumerate_budget():
    sensors = {f"s{i:02d}": {"shared"} for i in range(30)}
    cx = build_complex(SensorNetwork.from_mapping(sensors))
    with pytest.raises(BudgetExceededError, match="30 sensors"):
        enumerate_cells(cx, budget=10**6)


def test_induced_subcomplex(ex1):
    sub = induced_subcomplex(ex1, {"v1", "v2", "v3"})
    assert enumerate_cells(sub) == (C("v1"), C("v2"), C("v3"), C("v1", "v2"), C("v2", "v3"))
    assert induced_subcomplex(ex1, ex1.vertices) == ex1
    assert enumerate_cells(induced_subcomplex(ex1, set())) == ()
    with pytest.raises(DomainError):
        induced_subcomplex(ex1, {"zz"})


def test_cell_ordering_and_validation():
    assert sorted([C("b", "c"), C("a", "b", "c"), C("z"), C("a", "c")]) == [
        C("z"), C("a", "c"), C("b", "c"), C("a", "b", "c"),
    ]
    with pytest.raises(DomainError):
        Cell(("b", "a"))
    with pytest.raises(DomainError):
        Cell(())


@pytest.mark.parametrize("seed", range(25))
def test_nerve_characterization_brute_force(seed):
    rng = random.Random(seed)
    sensors = random_network(rng, rng.randint(1, 8), rng.randint(1, 6))
    cx = build_complex(SensorNetwork.from_mapping(sensors))
    expected = brute_force_cells(sensors)
    assert [c.vertices for c in enumerate_cells(cx)] == sorted(expected, key=lambda c: (len(c), c))
    labels = sorted(sensors)
    cellset = set(expected)
    for k in range(1, len(labels) + 1):
        for combo in itertools.combinations(labels, k):
            assert is_cell(cx, combo) == (combo in cellset)


@settings(max_examples=60, deadline=None)
@given(networks)
def test_downward_closed_and_star_properties(observed):
    cx = build_complex(SensorNetwork.from_mapping(observed))
    cells = enumerate_cells(cx)
    cellset = set(cells)
    for c in cells:
        for k in range(1, len(c)):
            for face in itertools.combinations(c.vertices, k):
                assert Cell(face) in cellset
        st_c = star(cx, c)
        assert set(st_c) == {t for t in cells if c.as_set() <= t.as_set()}
        # union of variables over the star is the cell's own variable set
        assert frozenset().union(*(cell_variables(cx, t) for t in st_c)) == cell_variables(cx, c)
        for k in range(1, len(c)):
            for face in itertools.combinations(c.vertices, k):
                assert set(st_c) <= set(star(cx, Cell(face)))
    covered = set().union(*(m.as_set() for m in cx.maximal_cells)) if cx.maximal_cells else set()
    assert covered == set(cx.vertices)


@settings(max_examples=40, deadline=None)
@given(networks, st.data())
def test_induced_subcomplex_properties(observed, data):
    cx = build_complex(SensorNetwork.from_mapping(observed))
    labels = list(cx.vertices)
    a = frozenset(data.draw(st.lists(st.sampled_from(labels), unique=True)) if labels else [])
    b = a | frozenset(data.draw(st.lists(st.sampled_from(labels), unique=True)) if labels else [])
    sub_a = induced_subcomplex(cx, a)
    assert set(enumerate_cells(sub_a)) == {c for c in enumerate_cells(cx) if c.as_set() <= a}
    assert induced_subcomplex(sub_a, a) == sub_a
    assert set(enumerate_cells(sub_a)) <= set(enumerate_cells(induced_subcomplex(cx, b)))

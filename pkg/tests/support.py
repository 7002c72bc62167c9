"""Shared test helpers: worked-example fixtures, brute-force oracles, random instances."""
import itertools
import json
import random
from pathlib import Path

from sheafcheck import Assignment, Section, SensorNetwork

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"

EXAMPLE1_SENSORS = {"v0": {"x", "y"}, "v1": {"x", "y"}, "v2": {"y", "z"}, "v3": {"z"}}
EXAMPLE1_VALUES = {
    "v0": {"x": 1, "y": 0},
    "v1": {"x": 1, "y": 1},
    "v2": {"y": 1, "z": 2},
    "v3": {"z": 2},
}


def fixture_bytes(name):
    return (FIXTURES / f"{name}.json").read_bytes()


def fixture_doc(name):
    return json.loads(fixture_bytes(name))


def network_and_assignment(sensors, values):
    net = SensorNetwork.from_mapping(sensors)
    return net, Assignment(net, {v: Section(vals) for v, vals in values.items()})


def example1():
    return network_and_assignment(EXAMPLE1_SENSORS, EXAMPLE1_VALUES)


def brute_force_cells(observed):
    """All vertex sets that are cells, straight from the definition."""
    labels = sorted(observed)
    cells = []
    for k in range(1, len(labels) + 1):
        for combo in itertools.combinations(labels, k):
            if k == 1 or set.intersection(*(set(observed[v]) for v in combo)):
                cells.append(combo)
    return cells


def random_network(rng, n_sensors, n_variables, p=0.35):
    variables = [f"x{i}" for i in range(n_variables)]
    return {
        f"s{i:02d}": {x for x in variables if rng.random() < p}
        for i in range(n_sensors)
    }


def random_values(rng, sensors, alphabet=(0, 1, 2), numeric_float=False):
    out = {}
    for v, xs in sensors.items():
        vals = {}
        for x in sorted(xs):
            val = rng.choice(alphabet)
            vals[x] = float(val) if numeric_float else val
        out[v] = vals
    return out


def random_instance(seed, max_sensors=10, max_variables=8):
    rng = random.Random(seed)
    sensors = random_network(rng, rng.randint(1, max_sensors), rng.randint(1, max_variables), rng.uniform(0.15, 0.6))
    values = random_values(rng, sensors, alphabet=tuple(range(rng.randint(1, 3))))
    return network_and_assignment(sensors, values)


def random_bad_hypergraph(rng, n, m, max_size=4):
    labels = [f"v{i:02d}" for i in range(n)]
    bad = set()
    for _ in range(m):
        k = rng.randint(2, min(max_size, n)) if n >= 2 else 0
        if k:
            bad.add(frozenset(rng.sample(labels, k)))
    return labels, [tuple(sorted(b)) for b in bad]


def worklist_reference(labels, bad, rng):
    """The constructive procedure with random choices of candidate and cell."""
    bad = [frozenset(b) for b in bad]
    pending = [frozenset(labels)]
    done = set()
    while pending:
        w = pending.pop(rng.randrange(len(pending)))
        inside = [b for b in bad if b <= w]
        if not inside:
            done.add(w)
            continue
        sigma = rng.choice(inside)
        pending.extend(w - {v} for v in sigma)
        pending = list(set(pending))
    return sorted((s for s in done if not any(s < t for t in done)), key=lambda s: tuple(sorted(s)))

"""Compare the compiled and pure-Python engines.

    python benchmarks/bench_engine.py [--repeat 5]

Workloads are bad-cell hypergraphs from a 100-sensor network with faulty
sensors, plus random hypergraphs.  Reported times are the best of
``--repeat`` runs, in milliseconds.
"""
import argparse
import functools
import operator
import random
import time

from sheafcheck import SensorNetwork, Assignment, bad_cells, build_complex, minimal_bad_cells, standard_structure
from sheafcheck import _pyengine

try:
    from sheafcheck import _fastengine
except ImportError:
    _fastengine = None


def desk_masks(faulty, seed=1):
    rng = random.Random(seed)
    sensors = [f"s{i:03d}" for i in range(100)]
    observed = {s: set() for s in sensors}
    truth = {}
    for j in range(300):
        x = f"x{j:03d}"
        for s in rng.sample(sensors, rng.randint(1, 4)):
            observed[s].add(x)
        truth[x] = rng.randint(0, 1000)
    broken = set(rng.sample(sensors, faulty))
    values = {s: {x: truth[x] + (1 if s in broken else 0) for x in sorted(xs)} for s, xs in observed.items()}
    net = SensorNetwork.from_mapping(observed)
    cx = build_complex(net)
    bad = minimal_bad_cells(bad_cells(standard_structure(), cx, Assignment(net, values)))
    bit = {v: 1 << i for i, v in enumerate(net.vertices)}
    masks = [functools.reduce(operator.or_, (bit[v] for v in c)) for c in bad]
    return (1 << len(net.vertices)) - 1, masks


def random_masks(n, m, seed=3):
    rng = random.Random(seed)
    masks = [functools.reduce(operator.or_, (1 << rng.randrange(n) for _ in range(rng.randint(2, 3)))) for _ in range(m)]
    return (1 << n) - 1, masks


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t)
    return min(times) * 1000, len(out)


def main():
    parser = argparse.ArgumentParser(description=__doc__.split("\n\n")[0])
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()
    workloads = [(f"desk, {k} faulty", desk_masks(k)) for k in (4, 8, 12)]
    workloads += [("random n=40 m=20", random_masks(40, 20)), ("random n=120 m=10", random_masks(120, 10))]
    print(f"{'workload':<22}{'sets':>8}{'python ms':>12}{'cython ms':>12}{'speedup':>9}")
    for name, (universe, masks) in workloads:
        py_ms, count = best_of(lambda: _pyengine.maximal_consistent_masks(universe, masks), args.repeat)
        if _fastengine is None:
            print(f"{name:<22}{count:>8}{py_ms:>12.2f}{'n/a':>12}{'':>9}")
            continue
        c_ms, c_count = best_of(lambda: _fastengine.maximal_consistent_masks(universe, masks), args.repeat)
        assert c_count == count
        print(f"{name:<22}{count:>8}{py_ms:>12.2f}{c_ms:>12.2f}{py_ms / c_ms:>8.1f}x")


if __name__ == "__main__":
    main()

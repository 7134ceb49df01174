"""Time the compiled kernels against the numpy fallback on identical inputs.

    python3 benchmarks/bench_kernels.py [--repeat 5]
"""
import argparse
import time

import numpy as np

from pfnn._kernels import backends
from pfnn.geometry import koch_snowflake
from pfnn.network import init_network


def _time(fn, repeat):
    best = np.inf
    for _ in range(repeat):
        t = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t)
    return best, out


def _max_diff(a, b):
    if isinstance(a, tuple):
        return max(_max_diff(x, y) for x, y in zip(a, b) if x is not None)
    if isinstance(a, list):
        return max(_max_diff(x, y) for x, y in zip(a, b))
    return float(np.max(np.abs(np.asarray(a, float) - np.asarray(b, float))))


def workloads(rng):
    net = init_network(2, 10, 4, seed=0)
    x = rng.uniform(-1, 1, (1024, 2))
    poly = koch_snowflake(4)
    pts = rng.uniform(-1.2, 1.2, (4096, 2))
    nodes = rng.uniform(-1, 1, (4096, 2))
    coeffs = rng.standard_normal(4096)
    xr = rng.uniform(-1, 1, (2048, 2))
    tri = rng.uniform(-1, 1, (3, 2000, 3))
    orig = rng.uniform(-1, 1, (512, 3))
    direction = np.array([0.48, 0.6, 0.64])

    def fwd_bwd(k):
        cache = k.resnet_forward(net.params, x, 10, 4, True)
        return k.resnet_backward(net.params, x, 10, 4, cache[2], np.ones(len(x)), np.ones_like(x))

    return {
        "resnet forward+backward (N=1024, 4x10)": fwd_bwd,
        "points_in_polygon (4096 pts, Koch L4)": lambda k: k.points_in_polygon(pts, poly),
        "imq_combine (2048 x 4096 nodes)": lambda k: k.imq_combine(xr, nodes, 0.3, coeffs, True),
        "ray_triangle_crossings (512 rays, 2000 tris)": lambda k: k.ray_triangle_crossings(
            orig, direction, tri[0], tri[1], tri[2]),
    }


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    ks = backends()
    if "compiled" not in ks:
        print("compiled extension not built; run `python3 setup.py build_ext --inplace`")
    print(f"{'kernel':46s} {'numpy [s]':>10s} {'compiled [s]':>12s} {'speedup':>8s} {'max |diff|':>10s}")
    for name, fn in workloads(np.random.default_rng(0)).items():
        tp, op = _time(lambda: fn(ks["python"]), args.repeat)
        if "compiled" in ks:
            tc, oc = _time(lambda: fn(ks["compiled"]), args.repeat)
            print(f"{name:46s} {tp:10.4f} {tc:12.4f} {tp / tc:8.1f} {_max_diff(op, oc):10.2e}")
        else:
            print(f"{name:46s} {tp:10.4f} {'-':>12s}")


if __name__ == "__main__":
    main()

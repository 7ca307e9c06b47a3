"""Compare the compiled and pure-Python Cayley-graph kernels.

    python benchmarks/bench_kernels.py [--repeat 3]
"""

import argparse
import time

from chiralmap import _kernels_py
from chiralmap.constructions import build, dispatch, table1_lookup
from chiralmap.perm import inverse

try:
    from chiralmap import _kernels as _kernels_c
except ImportError:
    _kernels_c = None


def cases():
    # A6, A9 and two degree-10 groups that overrun the bound (result -1)
    for g in [
        table1_lookup((4, 5)),
        table1_lookup((4, 7)),
        build(dispatch((6, 8))),
        build(dispatch((4, 8))),
    ]:
        yield f"{g.type} k={g.degree}", g


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t0)
    return min(times), out


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if _kernels_c is None:
        print("compiled kernels not built; only the Python backend is available")
    backends = [("python", _kernels_py)] + ([("cython", _kernels_c)] if _kernels_c else [])
    bound = 10**6
    print(f"{'case':<14} {'kernel':<11} {'backend':<8} {'seconds':>9} {'result':>10}")
    for name, g in cases():
        gens = [g.s.images, g.t.images]
        imgs = [inverse(g.s).images, g.t.images]
        k = g.degree
        timings = {}
        for bname, mod in backends:
            sec, out = best_of(lambda: mod.cayley_enumerate(gens, k, bound), args.repeat)
            timings[("cayley", bname)] = sec
            print(f"{name:<14} {'cayley':<11} {bname:<8} {sec:9.4f} {out:>10}")
            sec, out = best_of(lambda: mod.extend_homomorphism(gens, imgs, k, bound), args.repeat)
            timings[("extend", bname)] = sec
            print(f"{name:<14} {'extend_hom':<11} {bname:<8} {sec:9.4f} {str(out):>10}")
        if _kernels_c:
            for kern in ("cayley", "extend"):
                ratio = timings[(kern, "python")] / max(timings[(kern, "cython")], 1e-9)
                print(f"{name:<14} {kern:<11} speedup  {ratio:9.1f}x")


if __name__ == "__main__":
    main()

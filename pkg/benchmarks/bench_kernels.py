"""Compare the compiled polynomial kernels against the pure-Python fallback.

Run:  python benchmarks/bench_kernels.py
"""

from __future__ import annotations

import random
import time

from ffheights import _kernels_py
from ffheights import kernels


def _backends():
    out = [("python", _kernels_py)]
    try:
        from ffheights import _kernels

        out.append(("compiled", _kernels))
    except ImportError:
        pass
    return out


def bench(label, fn, *args, repeat=5):
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - start)
    print(f"  {label:>10}: {best * 1e3:9.3f} ms")
    return best


def main():
    p = 5
    rng = random.Random(0)
    print(f"active backend: {kernels.BACKEND}")
    for degree in (200, 1000, 3000):
        a = [rng.randrange(p) for _ in range(degree + 1)]
        b = [rng.randrange(p) for _ in range(degree + 1)]
        a[-1] = b[-1] = 1
        print(f"degree {degree}:")
        results = {}
        for name, impl in _backends():
            t_mul = bench(f"{name} mul", impl.poly_mul, a, b, p)
            prod = impl.poly_mul(a, b, p)
            t_div = bench(f"{name} div", impl.poly_divmod, prod, b, p)
            results[name] = (t_mul, t_div)
        if len(results) == 2:
            pm, pd = results["python"]
            cm, cd = results["compiled"]
            print(f"  speedup: mul x{pm / cm:.1f}, divmod x{pd / cd:.1f}")


if __name__ == "__main__":
    main()

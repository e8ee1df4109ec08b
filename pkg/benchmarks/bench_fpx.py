"""Compare the compiled and pure-Python F_p[T] kernels.

    python3 benchmarks/bench_fpx.py [--repeat 5] [--json]

Workloads are the inner loops of irreducibility testing and factoring:
T^(p^d) mod f by repeated squaring, products, and Euclidean gcds.
"""

from __future__ import annotations

import argparse
import json
import random
import timeit

from zpspec import _fpx_py

try:
    from zpspec import _fpx as _fpx_c
except ImportError:
    _fpx_c = None


def _poly(rng: random.Random, p: int, d: int) -> list[int]:
    return [rng.randrange(p) for _ in range(d)] + [1]


def workloads(seed: int = 0):
    rng = random.Random(seed)
    p = 101
    f = _poly(rng, p, 24)
    a, b = _poly(rng, p, 60), _poly(rng, p, 60)
    g, h = _poly(rng, p, 40), _poly(rng, p, 35)
    return {
        "powmod T^(p^24) mod f, p=101": lambda k: k.powmod([0, 1], p**24, f, p),
        "mul deg 60 x 60, p=101": lambda k: k.mul(a, b, p),
        "gcd deg 40 / 35, p=101": lambda k: k.gcd(g, h, p),
        "powmod T^(2^60) mod f, p=2": lambda k: k.powmod([0, 1], 2**60, [1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1], 2),
    }


def run(repeat: int) -> list[dict]:
    rows = []
    for name, fn in workloads().items():
        py = min(timeit.repeat(lambda: fn(_fpx_py), number=20, repeat=repeat)) / 20
        row = {"workload": name, "python_us": round(py * 1e6, 1)}
        if _fpx_c is not None:
            assert fn(_fpx_c) == fn(_fpx_py), name
            c = min(timeit.repeat(lambda: fn(_fpx_c), number=20, repeat=repeat)) / 20
            row.update(cython_us=round(c * 1e6, 1), speedup=round(py / c, 1))
        rows.append(row)
    return rows


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args()
    rows = run(args.repeat)
    if args.json:
        print(json.dumps(rows, indent=2))
        return
    if _fpx_c is None:
        print("compiled kernel not built; timing the Python fallback only")
    for r in rows:
        extra = f"  cython {r['cython_us']:>9.1f} us  x{r['speedup']}" if "cython_us" in r else ""
        print(f"{r['workload']:<32} python {r['python_us']:>9.1f} us{extra}")


if __name__ == "__main__":
    main()

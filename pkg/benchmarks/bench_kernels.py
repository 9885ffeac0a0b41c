"""Compare the pure-Python and compiled kernel backends.

Run as  python3 benchmarks/bench_kernels.py  from the repository root after
an editable install.  Reports wall-clock times for the three kernels on
catalog graphs; falls back to a pure-only report when the extension is not
built.
"""

from __future__ import annotations

import time

from resonantk import _kernels_py as pure
from resonantk.catalog import catalog_graph

try:
    from resonantk import _speedups as fast
except ImportError:
    fast = None


def _adj(f):
    return [sorted(f.graph.rotation[v]) for v in range(f.n)]


def _time(fn, *args, repeat: int = 3) -> tuple[float, object]:
    best = float("inf")
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best, result


def main() -> None:
    rows = []
    for name in ("F24", "F40", "C60", "C70"):
        f = catalog_graph(name).graph
        adj = _adj(f)
        edges = sorted(
            (min(u, v), max(u, v))
            for u in range(f.n)
            for v in f.graph.rotation[u]
            if u < v
        )
        for label, args_fn in (
            ("mate_array", lambda impl: impl.mate_array(f.n, adj)),
            ("perfect_matchings", lambda impl: impl.perfect_matchings(f.n, adj, 10**6)),
            ("cyclic_cut<=3", lambda impl: impl.has_small_cyclic_cut(f.n, edges, 3)),
        ):
            t_pure, r_pure = _time(args_fn, pure)
            if fast is not None:
                t_fast, r_fast = _time(args_fn, fast)
                assert r_pure == r_fast, f"backend mismatch on {name}/{label}"
                rows.append((name, label, t_pure, t_fast))
            else:
                rows.append((name, label, t_pure, None))

    header = f"{'graph':6} {'kernel':20} {'pure':>10} {'compiled':>10} {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for name, label, t_pure, t_fast in rows:
        if t_fast is None:
            print(f"{name:6} {label:20} {t_pure * 1e3:9.2f}ms {'--':>10} {'--':>8}")
        else:
            print(
                f"{name:6} {label:20} {t_pure * 1e3:9.2f}ms {t_fast * 1e3:9.2f}ms "
                f"{t_pure / t_fast:7.1f}x"
            )


if __name__ == "__main__":
    main()

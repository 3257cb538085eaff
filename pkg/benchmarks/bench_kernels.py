"""Benchmark the compiled kernel against the pure-Python fallback.

Micro-benchmarks call both backends directly on identical inputs; the
end-to-end row reruns a saturation-vs-closure workload in a subprocess
with WORDCONES_KERNEL forced, so the whole library path is measured.

Run:  python benchmarks/bench_kernels.py
"""

from __future__ import annotations

import os
import random
import subprocess
import sys
import time
from array import array

from wordcones.kernels import _pycore

try:
    from wordcones.kernels import _core
except ImportError:
    _core = None


def _timeit(fn, repeat: int = 3) -> float:
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def _rand_poset(rng: random.Random, k: int) -> bytes:
    rel = [[i == j for j in range(k)] for i in range(k)]
    for i in range(k):
        for j in range(i + 1, k):
            if rng.random() < 0.4:
                rel[i][j] = True
    for m in range(k):
        for i in range(k):
            for j in range(k):
                rel[i][j] = rel[i][j] or (rel[i][m] and rel[m][j])
    return bytes(1 if rel[i][j] else 0 for i in range(k) for j in range(k))


def micro_rows():
    rng = random.Random(99)
    k = 4
    leq = _rand_poset(rng, k)

    pairs = [
        (
            bytes(rng.randrange(k) for _ in range(rng.randint(0, 8))),
            bytes(rng.randrange(k) for _ in range(rng.randint(0, 12))),
        )
        for _ in range(40_000)
    ]

    def higman(mod):
        f = mod.higman_leq
        for w, x in pairs:
            f(w, x, leq, k)

    words = [bytes(rng.randrange(k) for _ in range(rng.randint(1, 7))) for _ in range(600)]

    def extremal(mod):
        mod.minimal_elements(words, leq, k)
        mod.maximal_elements(words, leq, k)

    clb_args = [
        (
            bytes(rng.randrange(k) for _ in range(6)),
            bytes(rng.randrange(k) for _ in range(6)),
        )
        for _ in range(300)
    ]

    def clb(mod):
        for a, b in clb_args:
            mod.common_lower_bounds(a, b, bytes(range(k)), 6, leq, k)

    # all states accepting: no violation exists, so the scan must explore
    # the whole reachable triple space (the expensive confirming pass)
    n = 40
    delta = array("i", [rng.randrange(n) for _ in range(n * k)])
    accept = bytes(1 for _ in range(n))
    q1 = array("i", [rng.randrange(n) for _ in range(n)])
    q2 = array("i", [rng.randrange(n) for _ in range(n)])
    q3 = array("i", [rng.randrange(n) for _ in range(n)])

    def scan(mod):
        for _ in range(20):
            mod.rule_scan_depth(n, k, delta, accept, 0, q1, q2, q3)

    def forced(mod):
        for _ in range(20):
            mod.forced_missing_words(n, k, delta, accept, 0, b"\x01", b"\x00", b"\x02", 7, 0)

    return [
        ("higman_leq x40k", higman),
        ("min/max antichain (600 words)", extremal),
        ("common_lower_bounds x300", clb),
        ("rule_scan_depth x20 (full explore)", scan),
        ("forced_missing_words x20", forced),
    ]


END_TO_END = r"""
import random, time
from wordcones import closure_up, enumerate_words, stable_closure, validate_alphabet
alphabet = validate_alphabet(["o","a","b","i"], [("o","a"),("o","b"),("a","i"),("b","i")])
pool = list(enumerate_words(alphabet, 4))
rng = random.Random(4242)
batches = [rng.sample(pool, 3) for _ in range(120)]
t0 = time.perf_counter()
for ys in batches:
    assert stable_closure(ys).result == closure_up(ys)
print(time.perf_counter() - t0)
"""


def end_to_end(backend: str) -> float:
    env = dict(os.environ, WORDCONES_KERNEL=backend)
    out = subprocess.run(
        [sys.executable, "-c", END_TO_END], env=env, capture_output=True, text=True, check=True
    )
    return float(out.stdout.strip())


def main() -> int:
    if _core is None:
        print("compiled kernel not available; showing pure-Python timings only")
    rows = []
    for name, fn in micro_rows():
        py = _timeit(lambda: fn(_pycore))
        if _core is not None:
            c = _timeit(lambda: fn(_core))
            rows.append((name, py, c))
        else:
            rows.append((name, py, None))
    rows.append(("saturation vs closure, 120 sets", end_to_end("py"),
                 end_to_end("c") if _core is not None else None))

    width = max(len(r[0]) for r in rows)
    header = f"{'benchmark':<{width}}  {'pure (s)':>10}  {'compiled (s)':>13}  {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for name, py, c in rows:
        if c is None:
            print(f"{name:<{width}}  {py:>10.4f}  {'-':>13}  {'-':>8}")
        else:
            print(f"{name:<{width}}  {py:>10.4f}  {c:>13.4f}  {py / c:>7.1f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())

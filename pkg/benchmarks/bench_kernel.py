#!/usr/bin/env python3
"""Benchmark: pure-Python reduction machine vs the compiled extension.

Three workloads with different profiles:

  primrec      long closed evaluation (multiplication via the recursor)
  equality     checker-style traffic: many applications of large realizers
  normalize    medium closed normalizations of random combinator terms

Usage: python benchmarks/bench_kernel.py [--repeat N]
"""

from __future__ import annotations

import argparse
import random
import statistics
import time

from extreal import machine as pure
from extreal.compiler import compile_term, lam, primrec
from extreal.kernel import compiled_backend
from extreal.realizers import i_r_value
from extreal.suites import random_closed_term
from extreal.terms import (
    App,
    Defined,
    FuelConfig,
    MachineError,
    SUCC,
    Var,
    app,
    num,
)

BIG = FuelConfig(max_steps=5_000_000)


def bench_primrec(backend) -> None:
    r = primrec()
    add = compile_term(
        lam("m", "n", app(r, Var("m"), lam("u", "v", App(SUCC, Var("u"))), Var("n")))
    )
    mul = compile_term(
        lam("m", "n", app(r, num(0), lam("u", "v", app(add, Var("m"), Var("u"))), Var("n")))
    )
    out = backend.eval_term(app(mul, num(12), num(13)), None, BIG)
    assert isinstance(out, Defined) and out.value.numeral == 156


def bench_equality(backend) -> None:
    # Checker-shaped traffic: apply the reflexivity realizer to numeral keys
    # and chase both projections, recursing the way the equality clause does.
    from extreal.terms import P0, P1, num_value

    ir = i_r_value()
    p0 = backend.eval_term(P0).value
    p1 = backend.eval_term(P1).value

    def visit(n: int) -> None:
        for m in range(n):
            out = backend.apply_value(ir, num_value(m))
            mem = backend.apply_value(p0, out.value).value
            key = backend.apply_value(p0, mem).value
            pay = backend.apply_value(p1, mem).value
            assert key.numeral == m and pay == ir
            visit(m)

    visit(9)


def bench_normalize(backend) -> None:
    rng = random.Random(0)
    cfg = FuelConfig(max_steps=20_000)
    for _ in range(400):
        t = random_closed_term(rng, 12)
        try:
            backend.eval_term(t, None, cfg)
        except MachineError:
            pass


WORKLOADS = {
    "primrec": bench_primrec,
    "equality": bench_equality,
    "normalize": bench_normalize,
}


def time_workload(fn, backend, repeat: int) -> float:
    runs = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(backend)
        runs.append(time.perf_counter() - t0)
    return statistics.median(runs)


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    compiled = compiled_backend()
    backends = [("pure", pure)] + ([("compiled", compiled)] if compiled else [])
    if compiled is None:
        print("note: compiled machine not built; run `python setup.py build_ext --inplace`")

    print(f"{'workload':12s}" + "".join(f"{name:>12s}" for name, _ in backends) +
          ("     speedup" if compiled else ""))
    for wname, fn in WORKLOADS.items():
        # The checker memoizes per call and the realizer library caches terms;
        # warm both once so the timing isolates the machines.
        for _, backend in backends:
            fn(backend)
        times = [time_workload(fn, backend, args.repeat) for _, backend in backends]
        row = f"{wname:12s}" + "".join(f"{t * 1000:10.1f}ms" for t in times)
        if compiled is not None:
            row += f"{times[0] / times[1]:11.1f}x"
        print(row)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())

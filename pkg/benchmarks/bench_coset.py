"""Compare the compiled and pure-Python coset enumeration kernels.

    python3 benchmarks/bench_coset.py [--repeat N] [--json]

Every workload is run on each available backend; the statistics of the two
runs must agree exactly, so the benchmark doubles as a parity check.
"""

from __future__ import annotations

import argparse
import json
import statistics
import time

from knotpairs.coset import available_backends, enumerate_cosets
from knotpairs.parsing import parse_presentation
from knotpairs.presentation import Presentation, quotient_by_normal_closure
from knotpairs.words import Word

WORKLOADS: list[tuple[str, Presentation, int]] = [
    ("cyclic 3000", Presentation(("a",), (Word.from_powers([("a", 3000)]),)), 12_000),
    ("A5 (order 60)", parse_presentation("<a,b | a^2, b^3, (a b)^5>"), 100_000),
    ("PSL(2,7) (order 168)", parse_presentation("<a,b | a^2, b^3, (a b)^7, [a,b]^4>"), 100_000),
    ("Z7 x Z7 x Z7", parse_presentation("<x,y,z | x^7, y^7, z^7, [x,y], [y,z], [x,z]>"), 100_000),
    ("M(2,3,7;9) budget run", parse_presentation("<a,b | a^2, b^3, (a b)^7, [a,b]^9>"), 50_000),
    ("trefoil / <<a>>", quotient_by_normal_closure(parse_presentation("<a,b|aba=bab>"), [Word.generator("a")]), 1000),
]


def time_backend(p: Presentation, budget: int, backend: str, repeat: int):
    times, out = [], None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = enumerate_cosets(p, (), budget, backend)
        times.append(time.perf_counter() - t0)
    return statistics.median(times), out


def main(argv: list[str] | None = None) -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args(argv)
    backends = available_backends()
    rows = []
    for name, p, budget in WORKLOADS:
        row = {"workload": name}
        stats = {}
        for b in backends:
            secs, out = time_backend(p, budget, b, args.repeat)
            row[b] = secs
            stats[b] = out.statistics()
        if len({json.dumps(s, sort_keys=True) for s in stats.values()}) != 1:
            raise SystemExit(f"backend statistics differ on {name}: {stats}")
        row["verdict"] = stats[backends[0]]["verdict"]
        row["index"] = stats[backends[0]]["index"]
        row["cosets_defined"] = stats[backends[0]]["cosets_defined"]
        if "compiled" in row and row["compiled"] > 0:
            row["speedup"] = row["python"] / row["compiled"]
        rows.append(row)
    if args.json:
        print(json.dumps(rows, indent=2))
        return
    header = f"{'workload':24s} {'result':>14s} {'cosets':>8s}" + "".join(f" {b + ' s':>11s}" for b in backends)
    if "compiled" in backends:
        header += f" {'speedup':>8s}"
    print(header)
    for r in rows:
        result = f"index {r['index']}" if r["verdict"] == "completed" else "exhausted"
        line = f"{r['workload']:24s} {result:>14s} {r['cosets_defined']:>8d}" + "".join(f" {r[b]:11.4f}" for b in backends)
        if "speedup" in r:
            line += f" {r['speedup']:7.1f}x"
        print(line)


if __name__ == "__main__":
    main()

#!/usr/bin/env python3
"""Benchmark the pure-Python kernel against the compiled one.

Each workload runs in a fresh subprocess with PATHCONN_BACKEND forced, so
the two backends are measured under identical conditions.  Besides wall
time the script compares the returned (value, status, units) triples,
which the backends guarantee to be identical.

Usage: python3 benchmarks/compare_backends.py [--repeat N]
"""

from __future__ import annotations

import argparse
import json
import os
import subprocess
import sys

WORKLOADS = [
    ("triple paths, K7 global", """
from pathconn.graphs import complete
from pathconn.steiner import global_connectivity
r = global_connectivity(complete(7), 3, 'pi')
out = (r.value, r.status, r.units)
"""),
    ("quad paths, K7 global", """
from pathconn.graphs import complete
from pathconn.steiner import global_connectivity
r = global_connectivity(complete(7), 4, 'pi')
out = (r.value, r.status, r.units)
"""),
    ("triple paths, K44 global", """
from pathconn.graphs import complete_bipartite
from pathconn.steiner import global_connectivity
r = global_connectivity(complete_bipartite(4, 4), 3, 'pi')
out = (r.value, r.status, r.units)
"""),
    ("triple trees, K6 local", """
from pathconn.graphs import complete
from pathconn.steiner import local_connectivity
c = local_connectivity(complete(6), (0, 1, 2), 'kappa')
out = (c.value, c.status)
"""),
    ("edge trees, K33 global", """
from pathconn.graphs import complete_bipartite
from pathconn.steiner import global_connectivity
r = global_connectivity(complete_bipartite(3, 3), 3, 'lambda')
out = (r.value, r.status, r.units)
"""),
    ("budgeted product refutation", """
from pathconn.steiner import pack_at_least
from pathconn.witness import _cached_product
d = pack_at_least(_cached_product(2, 3), (0, 1, 2), 4, 'pi', budget_ms=2000)
out = (d.answer, d.units)
"""),
]

RUNNER = """
import json, time
t0 = time.perf_counter()
ns = {{}}
exec({code!r}, ns)
print(json.dumps({{"wall": time.perf_counter() - t0, "out": repr(ns["out"])}}))
"""


def run_one(code: str, backend: str) -> dict:
    env = dict(os.environ, PATHCONN_BACKEND=backend)
    proc = subprocess.run(
        [sys.executable, "-c", RUNNER.format(code=code)],
        capture_output=True, text=True, env=env, check=True)
    return json.loads(proc.stdout)


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3,
                    help="take the best of N runs (default 3)")
    args = ap.parse_args()

    width = max(len(name) for name, _ in WORKLOADS)
    print(f"{'workload':<{width}}  {'pure':>8}  {'compiled':>8}  "
          f"{'speedup':>7}  agree")
    mismatches = 0
    for name, code in WORKLOADS:
        best = {}
        outs = {}
        for backend in ("pure", "compiled"):
            runs = [run_one(code, backend) for _ in range(args.repeat)]
            best[backend] = min(r["wall"] for r in runs)
            outs[backend] = {r["out"] for r in runs}
        agree = outs["pure"] == outs["compiled"] and len(outs["pure"]) == 1
        mismatches += 0 if agree else 1
        ratio = best["pure"] / best["compiled"] if best["compiled"] > 0 else 0.0
        print(f"{name:<{width}}  {best['pure']:>7.3f}s  "
              f"{best['compiled']:>7.3f}s  {ratio:>6.1f}x  "
              f"{'yes' if agree else 'NO: ' + str(outs)}")
    if mismatches:
        print(f"\n{mismatches} workload(s) disagreed between backends")
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())

"""Run every identity battery on every backend and print one line per lemma.

    python scripts/run_batteries.py --seed 42 --trials 100 --field fp:7
"""

import argparse
import time

from tambara.batteries import run_batteries
from tambara.catalog import BACKENDS, backend
from tambara.exactla import parse_field


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--seed", type=int, default=42)
    ap.add_argument("--trials", type=int, default=100)
    ap.add_argument("--field", default="fp:7")
    ap.add_argument("--backend", action="append", choices=BACKENDS)
    args = ap.parse_args()
    F = parse_field(args.field)
    failed = 0
    for name in args.backend or BACKENDS:
        t = time.perf_counter()
        res = run_batteries(backend(name, F), args.seed, args.trials)
        print(f"[{name}] {time.perf_counter() - t:.1f}s")
        for r in res:
            print("  " + r.line())
            failed += r.failures
    return 1 if failed else 0


if __name__ == "__main__":
    raise SystemExit(main())

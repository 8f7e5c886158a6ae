#!/usr/bin/env python3
"""Run the bundled verification corpus with per-entry wall times.

Usage: python scripts/run_corpus.py [--corpus-file PATH] [--slowest N]
"""

import argparse
import sys
import time

from orbefun.corpus import CHECKS, default_corpus, parse_corpus, run_entry


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--corpus-file", default=None)
    ap.add_argument("--slowest", type=int, default=5, help="how many timings to list")
    args = ap.parse_args()

    if args.corpus_file:
        with open(args.corpus_file, encoding="utf-8") as fh:
            entries = parse_corpus(fh.read())
    else:
        entries = default_corpus()

    width = max(len(e.name) for e in entries)
    print("entry".ljust(width), " ".join(c.ljust(8) for c in CHECKS), "seconds")
    timings = []
    ok = True
    for entry in entries:
        t0 = time.perf_counter()
        result = run_entry(entry)
        dt = time.perf_counter() - t0
        timings.append((dt, entry.name))
        ok = ok and result.ok
        row = " ".join(result.statuses[c].ljust(8) for c in CHECKS)
        print(entry.name.ljust(width), row, f"{dt:8.3f}")

    total = sum(dt for dt, _ in timings)
    print(f"\n{len(entries)} entries in {total:.2f}s, "
          f"{'all PASS' if ok else 'FAILURES PRESENT'}")
    for dt, name in sorted(timings, reverse=True)[: args.slowest]:
        print(f"  slow: {name} {dt:.3f}s")
    return 0 if ok else 4


if __name__ == "__main__":
    sys.exit(main())

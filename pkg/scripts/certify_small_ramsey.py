#!/usr/bin/env python3
"""Certify the small two-color cycle Ramsey numbers by exhaustive search.

For each target length the script proves the number from both sides:
every 2-coloring of the complete graph on R vertices contains a
monochromatic C_n (ALL_CONTAIN), while some coloring on R-1 vertices
does not (COUNTEREXAMPLE, re-verified independently).

    R_2(C_3) = 6    R_2(C_4) = 6    R_2(C_6) = 8    R_2(C_5) = 9

The C_5 instance is the slow one; with default settings the whole run
takes well under a minute on one core.
"""

from __future__ import annotations

import argparse
import time

from cycle_ramsey import SearchVerdict, ramsey_check, verify_mono_cycle_free

CASES = ((3, 6), (4, 6), (6, 8), (5, 9))


def certify(n: int, value: int, threads: int) -> bool:
    t0 = time.perf_counter()
    upper = ramsey_check(2, n, value, threads=threads)
    below = ramsey_check(2, n, value - 1, threads=threads)
    elapsed = time.perf_counter() - t0
    ok = (
        upper.verdict is SearchVerdict.ALL_CONTAIN
        and below.verdict is SearchVerdict.COUNTEREXAMPLE
        and verify_mono_cycle_free(below.counterexample, n) is True
    )
    status = "certified" if ok else "FAILED"
    print(
        f"R_2(C_{n}) = {value}: {status}  "
        f"[all-contain at {value}: {upper.stats.nodes} nodes; "
        f"counterexample at {value - 1}: {below.stats.nodes} nodes; "
        f"{elapsed:.1f}s]"
    )
    return ok


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--threads", type=int, default=1)
    args = ap.parse_args()
    all_ok = True
    for n, value in CASES:
        all_ok = certify(n, value, args.threads) and all_ok
    return 0 if all_ok else 1


if __name__ == "__main__":
    raise SystemExit(main())

"""Compare branch and bound against the networkx reference solver.

    python scripts/crosscheck_oracle.py --limit 4096 [--timeout 600]

No time limit by default; the largest cases take many minutes each.
"""
import argparse
import signal
import time

from nocode.oracle import exhaustive_max_code
from nocode.search import max_fixed, max_variable

from table import instances


class Timeout(Exception):
    pass


def _alarm(*_):
    raise Timeout


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--limit", type=int, default=4096)
    parser.add_argument("--timeout", type=int, default=0, help="seconds per oracle run, 0 = none")
    args = parser.parse_args()
    signal.signal(signal.SIGALRM, _alarm)
    mismatches = 0
    for n, q in instances(args.limit):
        for variable in (False, True):
            bb = (max_variable if variable else max_fixed)(n, q).cardinality
            start = time.perf_counter()
            signal.alarm(args.timeout)
            try:
                oracle = len(exhaustive_max_code(n, q, variable)[0])
            except Timeout:
                oracle = None
            finally:
                signal.alarm(0)
            took = time.perf_counter() - start
            status = "timeout" if oracle is None else ("ok" if oracle == bb else "MISMATCH")
            mismatches += status == "MISMATCH"
            kind = "variable" if variable else "fixed"
            print(f"n={n:2d} q={q:2d} {kind:8s} bb={bb:5d} oracle={oracle} {took:8.2f}s {status}",
                  flush=True)
    raise SystemExit(1 if mismatches else 0)


if __name__ == "__main__":
    main()

"""For each n, the smallest q with ceil(log_q((q-1)^(n-2))) == n - 2.

    python scripts/bracket_trend.py --n-max 12
"""
import argparse

from nocode.bounds import bracket_threshold, ceil_log


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--n-max", type=int, default=10)
    args = parser.parse_args()
    print("n  threshold_q  ceil_log at q = 2..8")
    for n in range(3, args.n_max + 1):
        logs = [ceil_log((q - 1) ** (n - 2), q) for q in range(2, 9)]
        print(f"{n:2d}  {bracket_threshold(n):11d}  {logs}  (n-2 = {n - 2})")


if __name__ == "__main__":
    main()

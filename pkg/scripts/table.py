"""Print C(n, q), the variable-length maximum and the closed-form bounds.

    python scripts/table.py --limit 4096 [--json]

Covers every (n, q) whose variable-length candidate count (sum of q^i for
i = 2..n) is at most --limit.
"""
import argparse
import json

from nocode.bounds import levenshtein_upper, trivial_sum_upper
from nocode.search import candidate_count, max_fixed, max_variable


def instances(limit):
    q = 2
    while candidate_count(2, q, True) <= limit:
        n = 2
        while candidate_count(n, q, True) <= limit:
            yield n, q
            n += 1
        q += 1


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--limit", type=int, default=4096)
    parser.add_argument("--json", action="store_true")
    args = parser.parse_args()

    exact = {}
    rows = []
    for n, q in instances(args.limit):
        fixed = max_fixed(n, q)
        var = max_variable(n, q)
        exact[n, q] = fixed.cardinality
        real, floor = levenshtein_upper(n, q)
        rows.append({
            "n": n, "q": q,
            "C": fixed.cardinality,
            "C_variable": var.cardinality,
            "classic_lower": (q - 1) ** (n - 1),
            "levenshtein_floor": floor,
            "levenshtein_real": str(real),
            "trivial_sum": trivial_sum_upper(2, n, q, {i: exact[i, q] for i in range(2, n + 1)}),
            "nodes": fixed.nodes_expanded + var.nodes_expanded,
        })
    if args.json:
        print(json.dumps(rows, indent=1))
        return
    cols = ["n", "q", "classic_lower", "C", "C_variable", "levenshtein_floor", "trivial_sum"]
    print("| " + " | ".join(cols) + " |")
    print("|" + "---|" * len(cols))
    for row in rows:
        print("| " + " | ".join(str(row[c]) for c in cols) + " |")


if __name__ == "__main__":
    main()

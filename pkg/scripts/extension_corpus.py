"""Run the padding construction over greedy corpora and tally the checks.

    python scripts/extension_corpus.py --q 2 3 4 --n 3 4 5 6 --count 200
"""
import argparse
import itertools
import time

from nocode.codes import is_non_overlapping, is_prefix_code
from nocode.corpus import corpus
from nocode.extension import extend, extension_size, per_word_extension


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--q", type=int, nargs="+", default=[2, 3, 4])
    parser.add_argument("--n", type=int, nargs="+", default=[3, 4, 5, 6])
    parser.add_argument("--count", type=int, default=200)
    parser.add_argument("--seed", type=int, default=1)
    args = parser.parse_args()
    print("q n codes distinct ext_ok size_ok grows disjoint prefix max|S| max|ext| secs")
    for q, n in itertools.product(args.q, args.n):
        start = time.perf_counter()
        codes = list(corpus(n, q, args.count, args.seed))
        tally = dict.fromkeys(["ext_ok", "size_ok", "grows", "disjoint", "prefix"], 0)
        biggest = 0
        for c in codes:
            ext = extend(c)
            parts = [per_word_extension(s, c) for s in c.words]
            tally["ext_ok"] += is_non_overlapping(ext)
            tally["size_ok"] += extension_size(c) == len(ext)
            tally["grows"] += len(ext) >= len(c)
            tally["disjoint"] += len(set().union(*parts)) == sum(map(len, parts))
            tally["prefix"] += is_prefix_code(c)
            biggest = max(biggest, len(ext))
        secs = time.perf_counter() - start
        print(q, n, len(codes), len(set(codes)), *tally.values(),
              max(map(len, codes)), biggest, f"{secs:.2f}")


if __name__ == "__main__":
    main()

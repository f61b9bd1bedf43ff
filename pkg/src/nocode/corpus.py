"""Deterministic corpora of non-overlapping codes for property checks."""
from __future__ import annotations

import random
from typing import Iterator

from .codes import Code
from .search import greedy_maximal


def random_subcode(code: Code, rng: random.Random) -> Code:
    """A non-empty random subset; non-overlap is inherited by subsets."""
    size = rng.randint(1, len(code))
    return Code(code.q, tuple(rng.sample(code.words, size)))


def corpus(n: int, q: int, count: int = 200, seed: int = 1) -> Iterator[Code]:
    """``count`` codes: greedy maximal codes for distinct seeds, each followed
    by a random subset of itself."""
    rng = random.Random(seed)
    made = 0
    greedy_seed = seed
    while made < count:
        code = greedy_maximal(n, q, greedy_seed)
        greedy_seed += 1
        yield code
        made += 1
        if made < count:
            yield random_subcode(code, rng)
            made += 1

"""Independent reference solvers used to cross-check the branch and bound.

Nothing here shares code with :mod:`nocode.search`: compatibility comes from
the pairwise predicate in :mod:`nocode.codes` and the clique search is
networkx's.  Two facts are assumed, both cheap to confirm by brute force on
small cases (see the tests): the first-symbol and last-symbol sets of a
non-overlapping code are disjoint, and relabelling symbols preserves
non-overlap.  So every code is a relabelling of one whose first symbols lie
below some ``a`` and whose last symbols lie at or above it.
"""
from __future__ import annotations

import itertools

import networkx as nx

from .codes import Code, all_words, is_non_overlapping, pair_violation
from .words import Word, is_self_non_overlapping


def compatible(u: Word, v: Word) -> bool:
    return u != v and pair_violation(u, v) is None and pair_violation(v, u) is None


def _lengths(n: int, variable: bool) -> range:
    return range(2, n + 1) if variable else range(n, n + 1)


def exhaustive_max_code(n: int, q: int, variable: bool) -> tuple[Code, int]:
    """Maximum code by exact clique search on each split ``first < a <= last``.

    Returns the code and the number of candidate words scanned.
    """
    best: list[Word] = []
    scanned = 0
    for a in range(1, q):
        cands = []
        for w in all_words(q, _lengths(n, variable)):
            scanned += 1
            if w[0] < a <= w[-1] and is_self_non_overlapping(w):
                cands.append(w)
        graph = nx.Graph()
        graph.add_nodes_from(range(len(cands)))
        graph.add_edges_from(
            (i, j)
            for i, j in itertools.combinations(range(len(cands)), 2)
            if compatible(cands[i], cands[j])
        )
        clique, size = nx.max_weight_clique(graph, weight=None)
        if size > len(best):
            best = [cands[i] for i in clique]
    return Code(q, tuple(best)), scanned


def brute_force_max_code(n: int, q: int, variable: bool, limit: int = 40) -> Code:
    """Largest non-overlapping subset of all words, by subset enumeration.

    Subsets are tried in increasing size; since non-overlap is inherited by
    subsets, the first size with no valid subset ends the search.  Refuses
    candidate spaces with more than ``limit`` words.
    """
    cands = list(all_words(q, _lengths(n, variable)))
    if len(cands) > limit:
        raise ValueError(f"{len(cands)} candidates is too many for subset enumeration")
    best = Code(q)
    for size in range(1, len(cands) + 1):
        for subset in itertools.combinations(cands, size):
            code = Code(q, subset)
            if is_non_overlapping(code):
                best = code
                break
        else:
            break
    return best

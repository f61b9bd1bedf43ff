"""Exact maximum non-overlapping code search.

The search is a maximum-clique branch and bound over bifix-free candidate
words, with adjacency rows packed into Python ints.  Two exact reductions
keep it tractable:

* In any non-overlapping code the first symbols and the last symbols form
  disjoint sets.  Up to relabelling symbols every code therefore lives in a
  block ``first < a <= last`` for some ``1 <= a < q``, and reversing words
  (then mapping ``s -> q-1-s``) sends block ``a`` to block ``q - a``, so only
  ``a <= q // 2`` is searched.
* Inside a block, permuting the symbols below ``a`` among themselves (and
  those at or above ``a``) is an automorphism.  After a branch on ``v`` the
  whole orbit of ``v`` under the permutations fixing every symbol used so far
  is dropped from the candidate set.

Bounds come from greedy colouring of the candidate set.
"""
from __future__ import annotations

import itertools
import os
import random
import sys
import time
from dataclasses import dataclass, field
from typing import Literal

from .codes import Code, Extender, all_words
from .words import Word, border_length, sort_key

DEFAULT_CAP = 2 ** 24

Strategy = Literal["branch_and_bound", "exhaustive"]


class SearchCapError(ValueError):
    """The candidate space is larger than the configured cap."""


class SearchIncomplete(RuntimeError):
    """Node budget ran out; ``best`` is the largest code found so far."""

    def __init__(self, best: Code, nodes: int):
        self.best = best
        self.nodes = nodes
        super().__init__(
            f"node budget exhausted after {nodes} nodes; best lower bound {len(best)}"
        )


def default_cap() -> int:
    env = os.environ.get("NOCODE_CAP")
    return int(env) if env else DEFAULT_CAP


@dataclass(frozen=True)
class SearchConfig:
    node_budget: int | None = None
    strategy: Strategy = "branch_and_bound"
    cap: int | None = None
    # stop as soon as a code meets floor(Levenshtein); fixed length only
    levenshtein_cutoff: bool = False

    def __post_init__(self):
        if self.node_budget is not None and self.node_budget < 1:
            raise ValueError("node_budget must be >= 1")
        if self.strategy not in ("branch_and_bound", "exhaustive"):
            raise ValueError(f"unknown strategy {self.strategy!r}")

    @property
    def candidate_cap(self) -> int:
        return self.cap if self.cap is not None else default_cap()


@dataclass(frozen=True)
class SearchResult:
    n: int
    q: int
    variable: bool
    cardinality: int
    code: Code
    nodes_expanded: int
    elapsed: float = field(compare=False)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "q": self.q,
            "variable": self.variable,
            "cardinality": self.cardinality,
            "code": self.code.render(),
            "nodes_expanded": self.nodes_expanded,
            "elapsed_ms": int(self.elapsed * 1000),
        }


def _check_params(n: int, q: int) -> None:
    if n < 2 or q < 2:
        raise ValueError(f"need n >= 2 and q >= 2, got n={n}, q={q}")


def candidate_count(n: int, q: int, variable: bool) -> int:
    return sum(q ** i for i in range(2, n + 1)) if variable else q ** n


def _guard(n: int, q: int, variable: bool, cap: int) -> None:
    count = candidate_count(n, q, variable)
    if count > cap:
        raise SearchCapError(f"{count} candidate words exceed the cap of {cap}")


# candidate graph ------------------------------------------------------------

def block_words(lengths: list[int], q: int, a: int) -> list[Word]:
    """Bifix-free words with first symbol < a and last symbol >= a."""
    out = []
    for n in lengths:
        for head in range(a):
            for mid in itertools.product(range(q), repeat=n - 2):
                for tail in range(a, q):
                    w = (head, *mid, tail)
                    if border_length(w) == 0:
                        out.append(w)
    return out


def compatibility_rows(words: list[Word], variable: bool) -> list[int]:
    """Bit j of row i is set iff {words[i], words[j]} is non-overlapping, i != j."""
    index = {w: i for i, w in enumerate(words)}
    by_prefix: dict[Word, int] = {}
    by_suffix: dict[Word, int] = {}
    by_factor: dict[Word, int] = {}
    for i, w in enumerate(words):
        bit = 1 << i
        n = len(w)
        for k in range(1, n):
            by_prefix[w[:k]] = by_prefix.get(w[:k], 0) | bit
            by_suffix[w[n - k:]] = by_suffix.get(w[n - k:], 0) | bit
        if variable:
            for f in {w[j:j + k] for k in range(2, n) for j in range(n - k + 1)}:
                by_factor[f] = by_factor.get(f, 0) | bit
    full = (1 << len(words)) - 1
    rows = []
    for i, w in enumerate(words):
        n = len(w)
        conflict = 1 << i
        for k in range(1, n):
            conflict |= by_suffix.get(w[:k], 0) | by_prefix.get(w[n - k:], 0)
        if variable:
            # words containing w, and words contained in w
            conflict |= by_factor.get(w, 0)
            for k in range(2, n):
                for j in range(n - k + 1):
                    hit = index.get(w[j:j + k])
                    if hit is not None:
                        conflict |= 1 << hit
        rows.append(full & ~conflict)
    return rows


# branch and bound -----------------------------------------------------------

class _Stop(Exception):
    pass


class _BlockSearch:
    def __init__(self, words: list[Word], variable: bool, a: int, q: int,
                 incumbent: int, node_budget: int | None, target: int | None, nodes: int):
        degree = {w: r.bit_count() for w, r in zip(words, compatibility_rows(words, variable))}
        self.words = sorted(words, key=lambda w: (-len(w), -degree[w], sort_key(w)))
        self.adj = compatibility_rows(self.words, variable)
        self.a = a
        self.q = q
        self.best: list[int] | None = None
        self.best_size = incumbent
        self.node_budget = node_budget
        self.target = target
        self.nodes = nodes

    def run(self) -> None:
        limit = sys.getrecursionlimit()
        sys.setrecursionlimit(max(limit, 4 * len(self.words) + 1000))
        try:
            self._expand([], (1 << len(self.words)) - 1, frozenset())
        finally:
            sys.setrecursionlimit(limit)

    def _orbit_key(self, w: Word, used: frozenset[int]) -> tuple:
        a = self.a
        rename: dict[int, tuple[bool, int]] = {}
        counts = [0, 0]
        out = []
        for s in w:
            if s in used:
                out.append(s)
                continue
            tag = rename.get(s)
            if tag is None:
                side = s < a
                tag = rename[s] = (side, counts[side])
                counts[side] += 1
            out.append(tag)
        return tuple(out)

    def _has_symmetry(self, used: frozenset[int]) -> bool:
        low = sum(1 for s in used if s < self.a)
        return self.a - low >= 2 or (self.q - self.a) - (len(used) - low) >= 2

    def _record(self, clique: list[int]) -> None:
        self.best = list(clique)
        self.best_size = len(clique)
        if self.target is not None and self.best_size >= self.target:
            raise _Stop

    def _expand(self, clique: list[int], cand: int, used: frozenset[int]) -> None:
        self.nodes += 1
        if self.node_budget is not None and self.nodes > self.node_budget:
            if len(clique) > self.best_size:
                # the current path is itself a valid code
                self.best = list(clique)
            raise _Stop
        adj = self.adj
        # greedy colouring; colours[i] bounds any clique inside the first i+1 vertices
        verts: list[int] = []
        colours: list[int] = []
        uncoloured, colour = cand, 0
        while uncoloured:
            colour += 1
            avail = uncoloured
            while avail:
                low = avail & -avail
                v = low.bit_length() - 1
                avail &= ~adj[v]
                avail ^= low
                uncoloured ^= low
                verts.append(v)
                colours.append(colour)
        if colour == len(verts):
            # candidate set is itself a clique
            if len(clique) + colour > self.best_size:
                self._record(clique + verts)
            return
        symmetric = self._has_symmetry(used)
        for i in range(len(verts) - 1, -1, -1):
            v = verts[i]
            if not cand >> v & 1:
                continue
            if len(clique) + colours[i] <= self.best_size:
                return
            clique.append(v)
            sub = cand & adj[v]
            if sub:
                self._expand(clique, sub, used.union(self.words[v]))
            elif len(clique) > self.best_size:
                self._record(clique)
            clique.pop()
            cand &= ~(1 << v)
            if symmetric:
                key = self._orbit_key(self.words[v], used)
                size = len(self.words[v])
                rest = cand
                while rest:
                    low = rest & -rest
                    rest ^= low
                    u = low.bit_length() - 1
                    w = self.words[u]
                    if len(w) == size and self._orbit_key(w, used) == key:
                        cand ^= low


def _branch_and_bound(n: int, q: int, variable: bool, cfg: SearchConfig) -> tuple[Code, int]:
    from .bounds import levenshtein_upper

    lengths = list(range(2, n + 1)) if variable else [n]
    target = None
    if cfg.levenshtein_cutoff and not variable:
        target = levenshtein_upper(n, q)[1]
    best: list[Word] = []
    nodes = 0
    for a in range(1, q // 2 + 1):
        words = block_words(lengths, q, a)
        if not words:
            continue
        search = _BlockSearch(words, variable, a, q,
                              len(best), cfg.node_budget, target, nodes)
        try:
            search.run()
        except _Stop:
            if search.best is not None:
                best = [search.words[i] for i in search.best]
            if target is not None and len(best) >= target:
                return Code(q, tuple(best)), search.nodes
            raise SearchIncomplete(Code(q, tuple(best)), search.nodes) from None
        nodes = search.nodes
        if search.best is not None:
            best = [search.words[i] for i in search.best]
    return Code(q, tuple(best)), nodes


def _search(n: int, q: int, variable: bool, cfg: SearchConfig | None) -> SearchResult:
    cfg = cfg or SearchConfig()
    _check_params(n, q)
    _guard(n, q, variable, cfg.candidate_cap)
    start = time.perf_counter()
    if cfg.strategy == "exhaustive":
        from .oracle import exhaustive_max_code

        code, nodes = exhaustive_max_code(n, q, variable)
    else:
        code, nodes = _branch_and_bound(n, q, variable, cfg)
    return SearchResult(n, q, variable, len(code), code, nodes, time.perf_counter() - start)


def max_fixed(n: int, q: int, cfg: SearchConfig | None = None) -> SearchResult:
    """C(n, q): the largest non-overlapping code with every word of length n."""
    return _search(n, q, False, cfg)


def max_variable(n: int, q: int, cfg: SearchConfig | None = None) -> SearchResult:
    """Largest non-overlapping code with word lengths anywhere in 2..n."""
    return _search(n, q, True, cfg)


def greedy_maximal(n: int, q: int, seed: int = 0, cap: int | None = None) -> Code:
    """Maximal code from a single greedy pass over all words of length 2..n.

    ``seed == 0`` scans in canonical order; any other seed shuffles the scan
    order with ``random.Random(seed)``.
    """
    _check_params(n, q)
    _guard(n, q, True, cap if cap is not None else default_cap())
    candidates = list(all_words(q, range(2, n + 1)))
    if seed:
        random.Random(seed).shuffle(candidates)
    ext = Extender()
    for x in candidates:
        if ext.admits(x):
            ext.add(x)
    return Code(q, tuple(ext.words))


def classic_construction(n: int, q: int) -> Code:
    """All length-n words that start with 0 and contain no other 0."""
    _check_params(n, q)
    return Code(q, tuple((0, *rest) for rest in itertools.product(range(1, q), repeat=n - 1)))


def classic_size(n: int, q: int) -> int:
    return (q - 1) ** (n - 1)


__all__ = [
    "SearchCapError",
    "SearchConfig",
    "SearchIncomplete",
    "SearchResult",
    "block_words",
    "candidate_count",
    "classic_construction",
    "classic_size",
    "compatibility_rows",
    "greedy_maximal",
    "max_fixed",
    "max_variable",
]

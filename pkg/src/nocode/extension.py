"""Padding a variable-length non-overlapping code out to a fixed length.

Every codeword ``s`` shorter than the longest length ``n`` is replaced by all
words ``s + t`` where ``t`` ranges over the length-``(n - |s|)`` suffixes of
codewords long enough to have one.  Words already of length ``n`` are kept.
"""
from __future__ import annotations

from dataclasses import dataclass

from .codes import Code, check_non_overlapping
from .words import Word, canonical


@dataclass(frozen=True)
class SuffixSet:
    k: int
    suffixes: frozenset[Word]

    def __len__(self) -> int:
        return len(self.suffixes)


def _require_nonempty(code: Code) -> None:
    if not code.words:
        raise ValueError("extension is undefined for the empty code")


def suffix_set(code: Code, k: int) -> SuffixSet:
    """Distinct length-k suffixes of the codewords longer than k."""
    _require_nonempty(code)
    if not 1 <= k < code.max_len:
        raise IndexError(f"suffix length {k} outside 1..{code.max_len - 1}")
    return SuffixSet(k, frozenset(w[len(w) - k:] for w in code.words if len(w) > k))


def _tails(code: Code) -> dict[int, list[Word]]:
    n = code.max_len
    lengths = {n - len(s) for s in code.words if len(s) < n}
    return {k: sorted(suffix_set(code, k).suffixes) for k in lengths}


def _check(code: Code, force: bool) -> None:
    _require_nonempty(code)
    if not force:
        check_non_overlapping(code)


def per_word_extension(s: Word, code: Code, force: bool = False) -> frozenset[Word]:
    s = tuple(s)
    _check(code, force)
    if s not in code:
        raise ValueError(f"{s} is not a codeword")
    n = code.max_len
    if len(s) == n:
        return frozenset({s})
    return frozenset(s + t for t in suffix_set(code, n - len(s)).suffixes)


def extend(code: Code, force: bool = False) -> Code:
    """Fixed-length code of length ``code.max_len`` built from ``code``.

    The input must be non-overlapping (the output is then non-overlapping as
    well).  ``force=True`` skips that check so the construction can be run on
    arbitrary codes; nothing is promised about the result in that case.
    """
    _check(code, force)
    n = code.max_len
    tails = _tails(code)
    out: list[Word] = []
    for s in code.words:
        if len(s) == n:
            out.append(s)
        else:
            out.extend(s + t for t in tails[n - len(s)])
    return Code(code.q, tuple(canonical(out)))


def extension_size(code: Code, force: bool = False) -> int:
    """Size of ``extend(code)`` from the slice sizes and suffix-set sizes alone."""
    _check(code, force)
    n = code.max_len
    total = len(code.slice(n))
    for i in range(code.min_len, n):
        slice_size = len(code.slice(i))
        if slice_size:
            total += len(suffix_set(code, n - i)) * slice_size
    return total

"""Primitive operations on q-ary words.

A word is a plain tuple of small non-negative ints.  Words do not carry
their alphabet size; symbol ranges are validated when a code is built.
"""
from __future__ import annotations

from typing import Iterable, Iterator

Word = tuple[int, ...]

EMPTY: Word = ()


def word(symbols: Iterable[int] | str) -> Word:
    """Build a word from an iterable of ints or from its text form."""
    if isinstance(symbols, str):
        return parse_word(symbols)
    return tuple(int(s) for s in symbols)


def sort_key(w: Word) -> tuple[int, Word]:
    """Canonical order: shorter words first, then lexicographic."""
    return (len(w), w)


def canonical(words: Iterable[Word]) -> list[Word]:
    return sorted(set(words), key=sort_key)


def prefix(w: Word, k: int) -> Word:
    if not 0 <= k <= len(w):
        raise IndexError(f"prefix length {k} out of range for word of length {len(w)}")
    return w[:k]


def suffix(w: Word, k: int) -> Word:
    if not 0 <= k <= len(w):
        raise IndexError(f"suffix length {k} out of range for word of length {len(w)}")
    return w[len(w) - k:]


def proper_prefixes(w: Word) -> set[Word]:
    return {w[:k] for k in range(1, len(w))}


def proper_suffixes(w: Word) -> set[Word]:
    return {w[len(w) - k:] for k in range(1, len(w))}


def subword_offset(u: Word, v: Word) -> int | None:
    """Smallest j with u == v[j:j+len(u)], or None if u does not occur in v."""
    m = len(u)
    for j in range(len(v) - m + 1):
        if v[j:j + m] == u:
            return j
    return None


def is_subword(u: Word, v: Word) -> bool:
    return subword_offset(u, v) is not None


def subwords(w: Word, min_len: int = 1) -> Iterator[Word]:
    """All factors of w with length at least min_len (with repeats)."""
    n = len(w)
    for k in range(min_len, n + 1):
        for j in range(n - k + 1):
            yield w[j:j + k]


def border_length(w: Word) -> int:
    """Length of the shortest nonempty border of w, 0 if w is bifix-free."""
    n = len(w)
    for k in range(1, n):
        if w[:k] == w[n - k:]:
            return k
    return 0


def is_self_non_overlapping(w: Word) -> bool:
    if len(w) < 2:
        raise ValueError("self-overlap is only defined for words of length >= 2")
    return border_length(w) == 0


def reverse(w: Word) -> Word:
    return w[::-1]


def render_word(w: Word, q: int | None = None) -> str:
    """Digits concatenated when every symbol fits (q <= 10), commas otherwise."""
    if (q is not None and q > 10) or any(s > 9 for s in w):
        return ",".join(str(s) for s in w)
    return "".join(str(s) for s in w)


def parse_word(text: str) -> Word:
    text = text.strip()
    if not text:
        return EMPTY
    try:
        if "," in text:
            return tuple(int(part) for part in text.split(","))
        return tuple(int(ch) for ch in text)
    except ValueError:
        raise ValueError(f"malformed word {text!r}") from None

"""Code-level predicates: non-overlap with witnesses, prefix codes, maximality."""
from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Iterator, TextIO

from .words import (
    Word,
    canonical,
    parse_word,
    proper_prefixes,
    proper_suffixes,
    render_word,
    sort_key,
    subword_offset,
    subwords,
)


class CodeFormatError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(message if line is None else f"line {line}: {message}")


class OverlapError(ValueError):
    """An operation required a non-overlapping code and got something else."""

    def __init__(self, witness: Witness, message: str = "code is overlapping"):
        self.witness = witness
        super().__init__(f"{message}: {witness.describe()}")


@dataclass(frozen=True)
class Code:
    q: int
    words: tuple[Word, ...] = ()

    def __post_init__(self):
        if self.q < 2:
            raise ValueError(f"alphabet size must be >= 2, got {self.q}")
        ws = canonical(tuple(w) for w in self.words)
        for w in ws:
            if len(w) < 2:
                raise ValueError(f"codewords need length >= 2, got {render_word(w, self.q)!r}")
            bad = [s for s in w if not 0 <= s < self.q]
            if bad:
                raise ValueError(f"symbol {bad[0]} outside alphabet of size {self.q}")
        object.__setattr__(self, "words", tuple(ws))

    @classmethod
    def from_strings(cls, q: int, texts: Iterable[str]) -> Code:
        return cls(q, tuple(parse_word(t) for t in texts))

    def __len__(self) -> int:
        return len(self.words)

    def __iter__(self) -> Iterator[Word]:
        return iter(self.words)

    def __contains__(self, w) -> bool:
        return tuple(w) in self._members

    @property
    def _members(self) -> frozenset[Word]:
        try:
            return self.__dict__["_members_cache"]
        except KeyError:
            members = frozenset(self.words)
            object.__setattr__(self, "_members_cache", members)
            return members

    @property
    def min_len(self) -> int:
        if not self.words:
            raise ValueError("empty code has no length range")
        return len(self.words[0])

    @property
    def max_len(self) -> int:
        if not self.words:
            raise ValueError("empty code has no length range")
        return len(self.words[-1])

    def slice(self, length: int) -> tuple[Word, ...]:
        """Codewords of exactly the given length."""
        return tuple(w for w in self.words if len(w) == length)

    def is_fixed_length(self) -> bool:
        return len({len(w) for w in self.words}) <= 1

    def with_word(self, w: Word) -> Code:
        return Code(self.q, self.words + (tuple(w),))

    def render(self) -> list[str]:
        return [render_word(w, self.q) for w in self.words]

    def __str__(self) -> str:
        return "{" + ", ".join(self.render()) + "}"


class WitnessKind(enum.Enum):
    PREFIX_SUFFIX_OVERLAP = "prefix-suffix-overlap"
    SUBWORD_CONTAINMENT = "subword-containment"
    PREFIX_OF_ANOTHER = "prefix-of-another"


@dataclass(frozen=True)
class Witness:
    """Certificate for a violation.

    PREFIX_SUFFIX_OVERLAP: ``evidence`` is a proper prefix of ``u`` and a proper
    suffix of ``v``.  SUBWORD_CONTAINMENT and PREFIX_OF_ANOTHER: ``u`` occurs in
    ``v`` at ``offset`` (always 0 for the prefix case) and ``evidence == u``.
    """

    kind: WitnessKind
    u: Word
    v: Word
    evidence: Word
    offset: int | None = None
    q: int | None = field(default=None, compare=False)

    def recheck(self) -> bool:
        """Independently confirm the violation this witness claims."""
        if self.kind is WitnessKind.PREFIX_SUFFIX_OVERLAP:
            return self.evidence in proper_prefixes(self.u) & proper_suffixes(self.v)
        if self.evidence != self.u or self.offset is None:
            return False
        window = self.v[self.offset:self.offset + len(self.u)]
        if self.kind is WitnessKind.PREFIX_OF_ANOTHER:
            return self.offset == 0 and len(self.u) < len(self.v) and window == self.u
        return self.u != self.v and window == self.u

    def describe(self) -> str:
        r = lambda w: render_word(w, self.q)  # noqa: E731
        if self.kind is WitnessKind.PREFIX_SUFFIX_OVERLAP:
            if self.u == self.v:
                return f"{r(self.evidence)} is both a prefix and a suffix of {r(self.u)}"
            return f"{r(self.evidence)} is a prefix of {r(self.u)} and a suffix of {r(self.v)}"
        if self.kind is WitnessKind.PREFIX_OF_ANOTHER:
            return f"{r(self.u)} is a prefix of {r(self.v)}"
        return f"{r(self.u)} subword of {r(self.v)} at offset {self.offset}"

    def to_json(self) -> dict:
        r = lambda w: render_word(w, self.q)  # noqa: E731
        out = {"kind": self.kind.value, "u": r(self.u), "v": r(self.v), "evidence": r(self.evidence)}
        if self.offset is not None:
            out["offset"] = self.offset
        return out


def pair_violation(u: Word, v: Word, q: int | None = None) -> Witness | None:
    """First violation for the ordered pair (u, v), or None.

    Checks the prefix/suffix condition (shortest overlap first), then, for
    distinct words with |u| <= |v|, whether u occurs inside v.
    """
    for k in range(1, min(len(u), len(v))):
        if u[:k] == v[len(v) - k:]:
            return Witness(WitnessKind.PREFIX_SUFFIX_OVERLAP, u, v, u[:k], q=q)
    if u != v and len(u) <= len(v):
        j = subword_offset(u, v)
        if j is not None:
            return Witness(WitnessKind.SUBWORD_CONTAINMENT, u, v, u, j, q=q)
    return None


def _has_violation(words: tuple[Word, ...]) -> bool:
    prefixes: set[Word] = set()
    for w in words:
        prefixes.update(w[:k] for k in range(1, len(w)))
    for w in words:
        n = len(w)
        if any(w[n - k:] in prefixes for k in range(1, n)):
            return True
    if len({len(w) for w in words}) > 1:
        members = set(words)
        for w in words:
            for f in set(subwords(w, 2)):
                if f != w and f in members:
                    return True
    return False


def find_violation(code: Code) -> Witness | None:
    """The first violation over ordered pairs in canonical order, or None."""
    if not _has_violation(code.words):
        return None
    for u, v in itertools.product(code.words, repeat=2):
        wit = pair_violation(u, v, code.q)
        if wit is not None:
            return wit
    raise AssertionError("fast check and pairwise scan disagree")  # pragma: no cover


def is_non_overlapping(code: Code) -> bool:
    return not _has_violation(code.words)


def check_non_overlapping(code: Code) -> None:
    wit = find_violation(code)
    if wit is not None:
        raise OverlapError(wit)


def find_prefix_violation(code: Code) -> Witness | None:
    for u, v in itertools.product(code.words, repeat=2):
        if len(u) < len(v) and v[:len(u)] == u:
            return Witness(WitnessKind.PREFIX_OF_ANOTHER, u, v, u, 0, q=code.q)
    return None


def is_prefix_code(code: Code) -> bool:
    members = set(code.words)
    return not any(w[:k] in members for w in code.words for k in range(1, len(w)))


class Extender:
    """Incremental admissibility test for growing a non-overlapping code.

    Keeps the prefix, suffix and factor sets of the current words so that a
    candidate can be checked in O(|x|^2) set lookups.
    """

    def __init__(self, words: Iterable[Word] = ()):
        self.words: list[Word] = []
        self._members: set[Word] = set()
        self._prefixes: set[Word] = set()
        self._suffixes: set[Word] = set()
        self._factors: set[Word] = set()
        for w in words:
            self.add(w)

    def admits(self, x: Word) -> bool:
        n = len(x)
        if n < 2 or x in self._members:
            return False
        for k in range(1, n):
            head, tail = x[:k], x[n - k:]
            if head == tail or head in self._suffixes or tail in self._prefixes:
                return False
        if x in self._factors:
            return False
        return not any(f in self._members for f in subwords(x[:-1], 2)) and not any(
            x[j:] in self._members for j in range(1, n - 1)
        )

    def add(self, x: Word) -> None:
        n = len(x)
        self.words.append(x)
        self._members.add(x)
        self._prefixes.update(x[:k] for k in range(1, n))
        self._suffixes.update(x[n - k:] for k in range(1, n))
        self._factors.update(subwords(x, 2))


def all_words(q: int, lengths: Iterable[int]) -> Iterator[Word]:
    """Every word over the alphabet with the given lengths, in canonical order."""
    for n in sorted(lengths):
        yield from itertools.product(range(q), repeat=n)


def find_extension(code: Code, n: int) -> Word | None:
    """First word of length 2..n (canonical order) that can join the code, or None."""
    check_non_overlapping(code)
    if code.words and n < code.max_len:
        raise ValueError(f"n = {n} is below the longest codeword length {code.max_len}")
    ext = Extender(code.words)
    for x in all_words(code.q, range(2, n + 1)):
        if ext.admits(x):
            return x
    return None


def is_maximal(code: Code, n: int) -> bool:
    return find_extension(code, n) is None


# file format ---------------------------------------------------------------

def render_code(code: Code) -> str:
    return "".join(f"{line}\n" for line in [f"# q={code.q}", *code.render()])


def parse_code(text: str) -> Code:
    q = None
    words: list[Word] = []
    seen: dict[Word, int] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            body = line[1:].strip().replace(" ", "")
            if body.startswith("q="):
                if q is not None:
                    raise CodeFormatError("duplicate q header", lineno)
                try:
                    q = int(body[2:])
                except ValueError:
                    raise CodeFormatError(f"bad q header {line!r}", lineno) from None
                if q < 2:
                    raise CodeFormatError(f"alphabet size must be >= 2, got {q}", lineno)
            continue
        if q is None:
            raise CodeFormatError("missing '# q=<int>' header before first word", lineno)
        if q > 10 and "," not in line:
            raise CodeFormatError("alphabets with q > 10 need comma-separated symbols", lineno)
        try:
            w = parse_word(line)
        except ValueError as exc:
            raise CodeFormatError(str(exc), lineno) from None
        if len(w) < 2:
            raise CodeFormatError("codewords need length >= 2", lineno)
        bad = [s for s in w if not 0 <= s < q]
        if bad:
            raise CodeFormatError(f"symbol {bad[0]} outside alphabet of size {q}", lineno)
        if w in seen:
            raise CodeFormatError(f"duplicate word (first seen on line {seen[w]})", lineno)
        seen[w] = lineno
        words.append(w)
    if q is None:
        raise CodeFormatError("missing '# q=<int>' header")
    return Code(q, tuple(words))


def read_code(source: str | Path | TextIO) -> Code:
    if hasattr(source, "read"):
        return parse_code(source.read())
    return parse_code(Path(source).read_text(encoding="utf-8"))


def write_code(code: Code, dest: str | Path | TextIO) -> None:
    if hasattr(dest, "write"):
        dest.write(render_code(code))
    else:
        Path(dest).write_text(render_code(code), encoding="utf-8")

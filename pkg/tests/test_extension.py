import itertools
from functools import lru_cache

import pytest
from hypothesis import given, settings

from nocode.codes import Code, Extender, OverlapError, all_words, is_non_overlapping
from nocode.corpus import corpus
from nocode.extension import extend, extension_size, per_word_extension, suffix_set
from nocode.words import border_length

from conftest import code, nonoverlapping_codes, w


def test_suffix_set_examples():
    assert suffix_set(code(3, "12", "102"), 1).suffixes == {w("2")}
    assert suffix_set(code(3, "12", "102"), 2).suffixes == {w("02")}
    assert suffix_set(code(2, "11000", "11010"), 2).suffixes == {w("00"), w("10")}


@pytest.mark.parametrize("k", [0, 3])
def test_suffix_set_range(k):
    with pytest.raises(IndexError):
        suffix_set(code(3, "12", "102"), k)


@pytest.mark.parametrize("q,words,expected,size", [
    (3, ["12", "102"], ["122", "102"], 2),
    (3, ["012", "0112"], ["0122", "0112"], 2),
    (2, ["11000", "11010"], ["11000", "11010"], 2),
])
def test_extend_examples(q, words, expected, size):
    c = code(q, *words)
    ext = extend(c)
    assert ext == code(q, *expected)
    assert is_non_overlapping(ext)
    assert extension_size(c) == size == len(ext)


def test_per_word_extension_examples():
    c = code(3, "12", "102")
    assert per_word_extension(w("12"), c) == {w("122")}
    assert per_word_extension(w("102"), c) == {w("102")}
    assert per_word_extension(w("012"), code(3, "012", "0112")) == {w("0122")}
    with pytest.raises(ValueError):
        per_word_extension(w("11"), c)


def test_domain_errors():
    with pytest.raises(ValueError):
        extend(Code(2))
    with pytest.raises(OverlapError):
        extend(code(2, "1100", "10"))


def test_forced_extension_of_overlapping_input_can_overlap():
    # 10 sits inside 1100; padding 10 with the tail 00 gives 1000, which
    # overlaps 1100 through 100
    ext = extend(code(2, "1100", "10"), force=True)
    assert ext == code(2, "1000", "1100")
    assert not is_non_overlapping(ext)


@lru_cache(maxsize=None)
def all_codes(q, n):
    """Every non-overlapping code with word lengths 2..n."""
    cands = [x for x in all_words(q, range(2, n + 1)) if border_length(x) == 0]
    out = []

    def grow(start, current):
        out.append(Code(q, tuple(current)))
        ext = Extender(current)
        for j in range(start, len(cands)):
            if ext.admits(cands[j]):
                grow(j + 1, current + [cands[j]])

    grow(0, [])
    return [c for c in out if c.words]


def small_corpus():
    for q, n in [(2, 4), (2, 5), (2, 6), (3, 3)]:
        yield from all_codes(q, n)
    for q, n in [(3, 4), (3, 5), (4, 5)]:
        yield from corpus(n, q, 60)


def _case(k, room, other_len):
    # room: padding length of the longer word; other_len: length of the other
    return {(True, True): "i", (False, False): "ii", (False, True): "iii",
            (True, False): "iv"}[(k <= room, k <= other_len)]


def test_overlap_cases_are_all_ruled_out():
    """Every prefix/suffix comparison between padded words, bucketed by how
    the shared piece straddles the original words and the padding."""
    seen = set()
    for c in small_corpus():
        n = c.max_len
        ext = {s: per_word_extension(s, c) for s in c.words}
        for u, v in itertools.product(c.words, repeat=2):
            if len(u) < len(v) or len(u) == n:
                continue
            for u2, v2 in itertools.product(ext[u], ext[v]):
                for k in range(1, n):
                    seen.add(("pre(v')&suf(u')", _case(k, n - len(u), len(v))))
                    assert v2[:k] != u2[n - k:], (c, u2, v2, k)
                    seen.add(("pre(u')&suf(v')", _case(k, n - len(v), len(u))))
                    assert u2[:k] != v2[n - k:], (c, u2, v2, k)
    expected = {(d, case) for d in ("pre(v')&suf(u')", "pre(u')&suf(v')")
                for case in ("i", "ii", "iii", "iv")}
    assert seen == expected


def test_exhaustive_small_codes_extend_cleanly():
    for q, n in [(2, 4), (2, 5), (2, 6), (3, 3)]:
        for c in all_codes(q, n):
            ext = extend(c)
            assert is_non_overlapping(ext)
            assert len(ext) == extension_size(c) >= len(c)


@settings(max_examples=150, deadline=None)
@given(nonoverlapping_codes())
def test_extension_properties(c):
    if not c.words:
        return
    n = c.max_len
    ext = extend(c)
    assert is_non_overlapping(ext)
    assert len(ext) == extension_size(c) >= len(c)
    assert all(len(x) == n for x in ext)
    assert all(any(x[:len(s)] == s for s in c.words) for x in ext)
    parts = [per_word_extension(s, c) for s in c.words]
    assert all(parts)
    for p1, p2 in itertools.combinations(parts, 2):
        assert not p1 & p2
    assert sum(map(len, parts)) == len(ext)
    for k in range(1, n - 1):
        shorter = suffix_set(c, k).suffixes
        longer = suffix_set(c, k + 1).suffixes
        assert shorter
        # tails of words longer than k + 1 all come from truncating longer tails
        assert {x[len(x) - k:] for x in c.words if len(x) > k + 1} <= {t[1:] for t in longer}


def test_suffix_set_sizes_need_not_grow():
    # a word of length k + 1 adds a length-k tail but no length-(k + 1) tail
    c = code(3, "12", "100")
    assert is_non_overlapping(c)
    assert len(suffix_set(c, 1)) == 2 > len(suffix_set(c, 2)) == 1
    assert len(extend(c)) == extension_size(c) == 3 >= len(c)

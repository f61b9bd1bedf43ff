"""Construct, verify, search and bound q-ary non-overlapping codes."""
from .bounds import (
    BoundReport,
    LengthReport,
    average_length,
    bound_report,
    ceil_log,
    entropy_avg_lower,
    length_report,
    levenshtein_upper,
    trivial_sum_upper,
)
from .codes import (
    Code,
    CodeFormatError,
    OverlapError,
    Witness,
    WitnessKind,
    find_extension,
    find_violation,
    is_maximal,
    is_non_overlapping,
    is_prefix_code,
    parse_code,
    render_code,
)
from .extension import SuffixSet, extend, extension_size, per_word_extension, suffix_set
from .search import (
    SearchCapError,
    SearchConfig,
    SearchIncomplete,
    SearchResult,
    classic_construction,
    greedy_maximal,
    max_fixed,
    max_variable,
)
from .words import (
    Word,
    is_self_non_overlapping,
    is_subword,
    parse_word,
    prefix,
    proper_prefixes,
    proper_suffixes,
    render_word,
    subword_offset,
    suffix,
    word,
)

__version__ = "0.1.0"

"""Closed-form bounds and average-length analysis, in exact arithmetic.

No floats anywhere: logarithms and ceilings are integer power comparisons
and real-valued bounds are :class:`fractions.Fraction`.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Literal, Mapping

from .codes import Code, check_non_overlapping


class InvariantViolation(RuntimeError):
    """A proven inequality failed on concrete data; indicates a bug."""


def _check_nq(n: int, q: int) -> None:
    if n < 2 or q < 2:
        raise ValueError(f"need n >= 2 and q >= 2, got n={n}, q={q}")


def levenshtein_upper(n: int, q: int) -> tuple[Fraction, int]:
    """((n-1)/n)^(n-1) * q^n / n, exactly, together with its floor."""
    _check_nq(n, q)
    num = (n - 1) ** (n - 1) * q ** n
    den = n ** n
    return Fraction(num, den), num // den


def ceil_log(x: int, q: int) -> int:
    """Smallest t >= 0 with q**t >= x."""
    if x < 1 or q < 2:
        raise ValueError(f"need x >= 1 and q >= 2, got x={x}, q={q}")
    t, power = 0, 1
    while power < x:
        power *= q
        t += 1
    return t


def entropy_avg_lower(code_size: int, q: int) -> int:
    """Lower bound ceil(log_q |S|) on the average codeword length."""
    return ceil_log(code_size, q)


def trivial_sum_upper(m: int, n: int, q: int, c_values: Mapping[int, int]) -> int:
    """Sum of per-length maxima C(i, q) for i in m..n."""
    _check_nq(n, q)
    if not 2 <= m <= n:
        raise ValueError(f"need 2 <= m <= n, got m={m}, n={n}")
    missing = [i for i in range(m, n + 1) if i not in c_values]
    if missing:
        raise ValueError(f"no C({missing[0]}, {q}) value supplied")
    return sum(c_values[i] for i in range(m, n + 1))


def average_length(code: Code) -> Fraction:
    if not code.words:
        raise ValueError("average length of the empty code is undefined")
    return Fraction(sum(len(w) for w in code.words), len(code.words))


def classic_reaches_bracket(n: int, q: int) -> bool:
    """Whether ceil(log_q((q-1)^(n-2))) == n-2, via (q-1)^(n-2) > q^(n-3)."""
    if n < 3:
        raise ValueError("need n >= 3")
    return (q - 1) ** (n - 2) > q ** (n - 3)


def bracket_threshold(n: int, q_max: int = 1 << 16) -> int | None:
    """Smallest q >= 2 from which classic_reaches_bracket(n, q) holds for good.

    The ratio (q-1)^(n-2) / q^(n-3) is increasing in q, so the first q that
    works keeps working.
    """
    for q in range(2, q_max + 1):
        if classic_reaches_bracket(n, q):
            return q
    return None


def _ratio(x: Fraction) -> str:
    return str(x)


@dataclass(frozen=True)
class BoundReport:
    n: int
    q: int
    levenshtein_real: Fraction
    levenshtein_floor: int
    classic_lower: int
    trivial_sum_upper: int | None = None
    trivial_sum_source: Literal["exact", "levenshtein"] | None = None
    exact_c: int | None = None

    def __post_init__(self):
        if self.exact_c is not None and not (
            self.classic_lower <= self.exact_c <= self.levenshtein_floor
        ):
            raise InvariantViolation(
                f"C({self.n},{self.q}) = {self.exact_c} outside "
                f"[{self.classic_lower}, {self.levenshtein_floor}]"
            )

    def to_json(self) -> dict:
        out = {
            "n": self.n,
            "q": self.q,
            "levenshtein_real": _ratio(self.levenshtein_real),
            "levenshtein_floor": self.levenshtein_floor,
            "classic_lower": self.classic_lower,
        }
        if self.trivial_sum_upper is not None:
            out["trivial_sum_upper"] = self.trivial_sum_upper
            out["trivial_sum_source"] = self.trivial_sum_source
        if self.exact_c is not None:
            out["exact_C"] = self.exact_c
        return out


def bound_report(n: int, q: int, exact: bool = False, cfg=None) -> BoundReport:
    """Bounds for C(n, q); with ``exact`` the value itself is searched for."""
    real, floor = levenshtein_upper(n, q)
    exact_c = None
    per_length = {i: levenshtein_upper(i, q)[1] for i in range(2, n + 1)}
    source = "levenshtein"
    if exact:
        from .search import max_fixed

        per_length = {i: max_fixed(i, q, cfg).cardinality for i in range(2, n + 1)}
        exact_c = per_length[n]
        source = "exact"
    return BoundReport(
        n=n,
        q=q,
        levenshtein_real=real,
        levenshtein_floor=floor,
        classic_lower=(q - 1) ** (n - 1),
        trivial_sum_upper=trivial_sum_upper(2, n, q, per_length),
        trivial_sum_source=source,
        exact_c=exact_c,
    )


@dataclass(frozen=True)
class LengthReport:
    code_size: int
    q: int
    avg_length: Fraction
    entropy_floor: int
    n: int
    bracket_low: int

    @property
    def floor_reaches_bracket(self) -> bool:
        """Finite-q datum: does ceil(log_q |S|) already reach n - 2?"""
        return self.entropy_floor >= self.bracket_low

    def to_json(self) -> dict:
        return {
            "code_size": self.code_size,
            "q": self.q,
            "avg_length": _ratio(self.avg_length),
            "entropy_floor": self.entropy_floor,
            "n": self.n,
            "bracket_low": self.bracket_low,
            "floor_reaches_bracket": self.floor_reaches_bracket,
        }


def length_report(code: Code) -> LengthReport:
    """Average length of a non-overlapping code against its lower and upper bounds."""
    check_non_overlapping(code)
    avg = average_length(code)
    floor = entropy_avg_lower(len(code), code.q)
    n = code.max_len
    if not floor <= avg <= n:
        raise InvariantViolation(f"expected {floor} <= L = {avg} <= {n}")
    return LengthReport(len(code), code.q, avg, floor, n, n - 2)

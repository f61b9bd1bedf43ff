from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from nocode.bounds import (
    InvariantViolation,
    BoundReport,
    average_length,
    bound_report,
    bracket_threshold,
    ceil_log,
    classic_reaches_bracket,
    entropy_avg_lower,
    length_report,
    levenshtein_upper,
    trivial_sum_upper,
)
from nocode.codes import Code, OverlapError
from nocode.search import classic_construction

from conftest import code, nonoverlapping_codes


@pytest.mark.parametrize("n,q,real,floor", [
    (3, 2, Fraction(32, 27), 1),
    (2, 2, Fraction(1), 1),
    (2, 4, Fraction(4), 4),
])
def test_levenshtein(n, q, real, floor):
    assert levenshtein_upper(n, q) == (real, floor)


@given(st.integers(2, 12), st.integers(2, 40))
def test_levenshtein_exact(n, q):
    real, floor = levenshtein_upper(n, q)
    num = (n - 1) ** (n - 1) * q ** n
    assert real == Fraction(num, n ** n)
    assert floor == num // n ** n and floor <= real < floor + 1
    assert real == Fraction(n - 1, n) ** (n - 1) * q ** n / n


@pytest.mark.parametrize("q", [2, 4, 6, 8])
def test_levenshtein_is_integral_for_n_dividing_q(q):
    assert levenshtein_upper(2, q)[0].denominator == 1


def test_trivial_sum():
    assert trivial_sum_upper(2, 3, 2, {2: 1, 3: 1}) == 2
    assert trivial_sum_upper(3, 3, 2, {3: 7}) == 7
    floors = {i: levenshtein_upper(i, 3)[1] for i in (2, 3)}
    assert trivial_sum_upper(2, 3, 3, floors) == 2 + 4
    with pytest.raises(ValueError):
        trivial_sum_upper(2, 4, 2, {2: 1, 3: 1})


@pytest.mark.parametrize("x,q,expected", [(4, 2, 2), (5, 2, 3), (1, 7, 0), (16, 5, 2), (2, 3, 1)])
def test_ceil_log(x, q, expected):
    assert entropy_avg_lower(x, q) == expected


@given(st.integers(1, 10 ** 12), st.integers(2, 50))
def test_ceil_log_defining_property(x, q):
    t = ceil_log(x, q)
    assert q ** t >= x
    assert t == 0 or q ** (t - 1) < x


@given(st.integers(2, 30), st.integers(1, 12))
def test_ceil_log_at_exact_powers(q, t):
    assert ceil_log(q ** t, q) == t
    assert ceil_log(q ** t + 1, q) == t + 1


def test_average_length():
    assert average_length(code(3, "12", "102")) == Fraction(5, 2)
    assert average_length(code(2, "11000", "11010")) == 5
    assert average_length(classic_construction(4, 3)) == 4
    with pytest.raises(ValueError):
        average_length(Code(2))


def test_length_report_examples():
    rep = length_report(code(3, "12", "102"))
    assert (rep.avg_length, rep.entropy_floor, rep.n, rep.bracket_low) == (Fraction(5, 2), 1, 3, 1)
    rep = length_report(classic_construction(3, 5))
    assert (rep.code_size, rep.avg_length, rep.entropy_floor, rep.n) == (16, 3, 2, 3)
    rep = length_report(code(4, "0123"))
    assert rep.entropy_floor == 0 and rep.avg_length == 4
    assert rep.to_json()["avg_length"] == "4"
    with pytest.raises(OverlapError):
        length_report(code(2, "1001"))


@given(nonoverlapping_codes())
def test_entropy_floor_below_average(c):
    if c.words:
        rep = length_report(c)
        assert rep.entropy_floor <= rep.avg_length <= c.max_len


def test_bound_report():
    rep = bound_report(3, 2)
    assert rep.to_json() == {"n": 3, "q": 2, "levenshtein_real": "32/27",
                             "levenshtein_floor": 1, "classic_lower": 1,
                             "trivial_sum_upper": 2, "trivial_sum_source": "levenshtein"}
    rep = bound_report(2, 4, exact=True)
    assert rep.exact_c == 4 == rep.levenshtein_floor
    assert bound_report(2, 2).levenshtein_floor == 1


def test_bound_report_rejects_impossible_sandwich():
    with pytest.raises(InvariantViolation):
        BoundReport(3, 2, Fraction(32, 27), 1, 1, exact_c=2)


def test_classic_bracket_inequality():
    assert classic_reaches_bracket(4, 3)
    assert not classic_reaches_bracket(5, 3)  # 2^3 = 8 < 3^2 = 9
    assert not classic_reaches_bracket(7, 4)  # 3^5 = 243 < 4^4 = 256
    assert classic_reaches_bracket(10, 8)


@pytest.mark.parametrize("n", range(3, 11))
def test_bracket_threshold(n):
    t = bracket_threshold(n)
    assert classic_reaches_bracket(n, t)
    assert t == 2 or not classic_reaches_bracket(n, t - 1)
    assert all(classic_reaches_bracket(n, q) for q in range(t, t + 50))
    # matches ceil((n-2) log_q(q-1)) == n-2 computed with integer logs
    assert all(ceil_log((q - 1) ** (n - 2), q) == n - 2 for q in range(t, t + 20))

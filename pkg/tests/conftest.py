from hypothesis import strategies as st

from nocode.codes import Code, Extender
from nocode.words import word


def w(text):
    return word(text)


def code(q, *texts):
    return Code.from_strings(q, texts)


@st.composite
def words_over(draw, q=None, min_len=1, max_len=8):
    q = q if q is not None else draw(st.integers(2, 4))
    return tuple(draw(st.lists(st.integers(0, q - 1), min_size=min_len, max_size=max_len)))


@st.composite
def nonoverlapping_codes(draw, max_q=4, max_n=6, max_tries=40):
    """Non-overlapping codes grown greedily from a random candidate stream."""
    q = draw(st.integers(2, max_q))
    n = draw(st.integers(2, max_n))
    ext = Extender()
    for cand in draw(st.lists(words_over(q, 2, n), min_size=1, max_size=max_tries)):
        if ext.admits(cand):
            ext.add(cand)
    return Code(q, tuple(ext.words))


@st.composite
def arbitrary_codes(draw, max_q=3, max_n=5):
    q = draw(st.integers(2, max_q))
    ws = draw(st.lists(words_over(q, 2, max_n), min_size=0, max_size=6, unique=True))
    return Code(q, tuple(ws))


# acceptance reporting ---------------------------------------------------------

_criteria: dict[str, tuple[int, str]] = {}
_outcomes: dict[int, list[str]] = {}


def pytest_collection_modifyitems(items):
    for item in items:
        mark = item.get_closest_marker("criterion")
        if mark is not None:
            _criteria[item.nodeid] = mark.args


def pytest_runtest_logreport(report):
    if report.nodeid not in _criteria:
        return
    if report.when == "call" or report.failed:
        number, _ = _criteria[report.nodeid]
        _outcomes.setdefault(number, []).append(report.outcome)


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    terminalreporter.section("acceptance criteria")
    titles = {}
    for number, title in _criteria.values():
        titles.setdefault(number, title)
    for number in sorted(titles):
        outcomes = _outcomes.get(number, [])
        if not outcomes:
            verdict = "NOT RUN"
        elif all(o == "passed" for o in outcomes):
            verdict = "PASS"
        else:
            verdict = "FAIL"
        terminalreporter.write_line(f"criterion {number:2d}: {verdict:7s} {titles[number]}")

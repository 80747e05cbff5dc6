"""Shared strategies and helpers."""

import random

import pytest

import sympy
from hypothesis import strategies as st

from qaffine.pbw import Element, word_element
from qaffine.scalar import LaurentPoly, ScalarQ

QS = sympy.Symbol("q")


def to_sympy(a):
    """LaurentPoly or ScalarQ as a sympy expression in q (independent oracle)."""
    if isinstance(a, ScalarQ):
        return to_sympy(a.num) / to_sympy(a.den)
    return sum((c * QS**e for e, c in a.terms.items()), sympy.Integer(0))


def sympy_equal(a, expr) -> bool:
    return sympy.simplify(to_sympy(a) - expr) == 0


laurent = st.dictionaries(st.integers(-6, 6), st.integers(-5, 5), max_size=5).map(LaurentPoly)
nonzero_laurent = laurent.filter(bool)
scalars = st.builds(ScalarQ, laurent, nonzero_laurent)
nonzero_scalars = scalars.filter(bool)


def _letter(kind: str, idx: int):
    if kind == "h" and idx == 0:
        idx = 1
    if kind == "K":
        idx = 1 if idx >= 0 else -1
    return (kind, idx)


letters = st.builds(_letter, st.sampled_from("xyhKc"), st.integers(-3, 3))
words = st.lists(letters, min_size=0, max_size=3)
elements = st.lists(st.tuples(words, st.integers(-3, 3).filter(bool)), min_size=0, max_size=3).map(
    lambda ts: sum((word_element(w, c) for w, c in ts), Element.zero())
)


def seeded(seed: int) -> random.Random:
    return random.Random(seed)


# -- acceptance reporting ----------------------------------------------------------

_CRITERIA: dict = {}


def pytest_runtest_makereport(item, call):
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    num, title = mark.args
    failed = call.excinfo is not None and not call.excinfo.errisinstance(pytest.skip.Exception)
    prev = _CRITERIA.get(num, (title, True, 0.0))
    _CRITERIA[num] = (title, prev[1] and not failed, prev[2] + call.duration)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_CRITERIA):
        title, ok, secs = _CRITERIA[num]
        terminalreporter.write_line(f"criterion {num:2d}: {'PASS' if ok else 'FAIL'} ({secs:.1f} s) {title}")

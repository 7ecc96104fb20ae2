import random

import pytest
from hypothesis import strategies as st

from braidrep.braids import BraidWord
from braidrep.ring import Q, LaurentPoly, RingMatrix, VarSet

TWO = VarSet(("q", "λ"))


def lp(vars, terms):
    """Shorthand: ``lp(Q, {2: 1, 0: -1})`` or tuple keys for several variables."""
    return LaurentPoly(vars, {(k,) if isinstance(k, int) else k: c for k, c in terms.items()})


def T(*coeffs_by_tpower, low=0):
    """Polynomial in ``t = q^2`` from coefficients starting at ``t^low``."""
    return LaurentPoly(Q, {(2 * (low + i),): c for i, c in enumerate(coeffs_by_tpower)})


@st.composite
def polys(draw, vars=Q, max_terms=3, exp_range=4, coeff_range=5):
    width = len(vars)
    n = draw(st.integers(0, max_terms))
    terms = {}
    for _ in range(n):
        e = tuple(draw(st.integers(-exp_range, exp_range)) for _ in range(width))
        terms[e] = draw(st.integers(-coeff_range, coeff_range))
    return LaurentPoly(vars, terms)


@st.composite
def matrices(draw, size, vars=Q):
    return RingMatrix([[draw(polys(vars)) for _ in range(size)] for _ in range(size)], vars)


@st.composite
def braid_words(draw, min_n=2, max_n=4, max_len=10):
    n = draw(st.integers(min_n, max_n))
    if n == 1:
        return BraidWord(1)
    letters = draw(
        st.lists(
            st.integers(1, n - 1).flatmap(lambda i: st.sampled_from((i, -i))),
            max_size=max_len,
        )
    )
    return BraidWord(n, tuple(letters))


@pytest.fixture
def rng():
    return random.Random(20240611)


ACCEPTANCE_KEY = pytest.StashKey[list]()


def pytest_configure(config):
    config.stash[ACCEPTANCE_KEY] = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = config.stash.get(ACCEPTANCE_KEY, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines, key=lambda s: int(s.split()[0][1:])):
            terminalreporter.write_line(line)

from __future__ import annotations

import itertools
from fractions import Fraction

from hypothesis import strategies as st

from graphpoly.graph import Graph, graph_from_edges
from graphpoly.poly import ExactPolynomial


@st.composite
def graphs(draw, min_n: int = 0, max_n: int = 7) -> Graph:
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    mask = draw(st.integers(0, (1 << len(pairs)) - 1)) if pairs else 0
    return graph_from_edges(n, [e for k, e in enumerate(pairs) if (mask >> k) & 1])


@st.composite
def permutations_of(draw, n: int) -> list[int]:
    return draw(st.permutations(list(range(n))))


rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)
small_ints = st.integers(-9, 9)


@st.composite
def polys(draw, max_degree: int = 8, coeffs=rationals) -> ExactPolynomial:
    return ExactPolynomial(draw(st.lists(coeffs, max_size=max_degree + 1)))


@st.composite
def nonzero_polys(draw, max_degree: int = 8, coeffs=rationals) -> ExactPolynomial:
    f = draw(polys(max_degree, coeffs))
    if f.is_zero():
        f = ExactPolynomial([Fraction(1)])
    return f


def P(*coeffs) -> ExactPolynomial:
    """Shorthand: ``P(1, 2, 1)`` is ``1 + 2x + x^2``."""
    return ExactPolynomial(list(coeffs))


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[num])

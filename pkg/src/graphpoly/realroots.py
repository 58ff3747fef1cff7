"""Real-rootedness via Sturm sequences over the rationals."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .counting import coeffs_hereditary, structure
from .graph import Graph
from .poly import (
    ExactPolynomial,
    binomial_expansion,
    divide_with_remainder,
    reverse,
    squarefree_part,
)
from .properties import PropertySpec


@dataclass(frozen=True)
class SturmSequence:
    polys: tuple[ExactPolynomial, ...]

    @property
    def degrees(self) -> list[int]:
        return [p.degree for p in self.polys]

    @property
    def leading_signs(self) -> list[int]:
        return [1 if p.leading > 0 else -1 for p in self.polys]

    def __len__(self) -> int:
        return len(self.polys)


def sturm_sequence(f: ExactPolynomial) -> SturmSequence:
    """``F_0 = f, F_1 = f', F_i = -rem(F_{i-2}, F_{i-1})`` until the remainder vanishes."""
    if f.degree < 1:
        raise ValueError("Sturm sequence needs a polynomial of degree >= 1")
    seq = [f, f.derivative()]
    while True:
        _, r = divide_with_remainder(seq[-2], seq[-1])
        if r.is_zero():
            break
        seq.append(-r)
    return SturmSequence(tuple(seq))


def _variations(signs: list[int]) -> int:
    nz = [s for s in signs if s != 0]
    return sum(1 for a, b in zip(nz, nz[1:]) if a != b)


def sign_variations_at_infinity(seq: SturmSequence, direction: int) -> int:
    """Sign changes at ``+inf`` (direction > 0) or ``-inf`` (direction < 0)."""
    signs = []
    for p, s in zip(seq.polys, seq.leading_signs):
        signs.append(s if direction > 0 or p.degree % 2 == 0 else -s)
    return _variations(signs)


def count_distinct_real_roots(f: ExactPolynomial) -> int:
    if f.is_zero():
        raise ValueError("the zero polynomial has every real number as a root")
    sq = squarefree_part(f)
    if sq.degree < 1:
        return 0
    seq = sturm_sequence(sq)
    return sign_variations_at_infinity(seq, -1) - sign_variations_at_infinity(seq, +1)


def is_real_rooted(f: ExactPolynomial) -> bool:
    """All complex roots real (multiplicities allowed); constants qualify vacuously."""
    if f.is_zero():
        raise ValueError("real-rootedness of the zero polynomial is undefined")
    sq = squarefree_part(f)
    return count_distinct_real_roots(sq) == sq.degree


@dataclass(frozen=True)
class BrownDiagnostics:
    degrees: tuple[int, ...]
    leading_signs: tuple[int, ...]
    all_leading_positive: bool
    unit_degree_steps: bool


def brown_criterion(f: ExactPolynomial) -> tuple[bool, BrownDiagnostics]:
    """Leading coefficients all positive and consecutive degrees drop by one.

    Defined for squarefree f with positive leading coefficient; on that domain
    it is equivalent to real-rootedness.
    """
    if f.degree < 1 or f.leading <= 0:
        raise ValueError("Brown criterion needs degree >= 1 and a positive leading coefficient")
    seq = sturm_sequence(f)
    if seq.polys[-1].degree != 0:
        raise ValueError("input is not squarefree; apply squarefree_part first")
    degs = seq.degrees
    signs = seq.leading_signs
    pos = all(s > 0 for s in signs)
    unit = all(a - b == 1 for a, b in zip(degs, degs[1:]))
    return pos and unit, BrownDiagnostics(tuple(degs), tuple(signs), pos, unit)


# ---------------------------------------------------------------------------
# third Sturm term of the reversed generating polynomial
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RemainderDiagnostic:
    n: int
    g: int
    alpha: int
    nabla: int
    degrees: tuple[int, ...]
    leading_signs: tuple[int, ...]
    d1: int
    d2: int
    remainder_leading: Fraction
    expected_leading: Fraction
    degree_ok: bool
    leading_ok: bool
    gap_ok: bool
    closed_form_ok: bool

    @property
    def passed(self) -> bool:
        return self.degree_ok and self.leading_ok and self.gap_ok and self.closed_form_ok


def remainder_closed_form(coeffs: list[int]) -> ExactPolynomial:
    """Remainder of ``F_0`` by ``F_1`` when the quotient is ``(x + 1)/n``.

    With ``F_0 = sum_j a_j x^(n-j)`` the coefficient of ``x^(n-j)`` is
    ``(j a_j - (n - j + 1) a_(j-1)) / n`` for ``1 <= j <= n``.
    """
    n = len(coeffs) - 1
    a = list(coeffs) + [0]
    out = [Fraction(0)] * (n + 1)
    for j in range(1, n + 1):
        out[n - j] = Fraction(j * a[j] - (n - j + 1) * a[j - 1], n)
    return ExactPolynomial(out)


def remainder_diagnostic(g: Graph, spec: PropertySpec) -> RemainderDiagnostic:
    """Check the degree gap between F_1 and F_2 for ``x^n P_A(G; 1/x)``.

    For G outside a hereditary A: ``deg F_2 = n - g``, the remainder leads
    with ``-alpha g / n`` and ``d_1 - d_2 = g - 1``.
    """
    seq = coeffs_hereditary(g, spec)
    st = structure(g, spec, seq)
    n = g.n
    if st.g < 3:
        raise ValueError(f"degenerate case g={st.g}: the degree gap needs g >= 3")
    f0 = reverse(seq.polynomial(), n)
    f1 = f0.derivative()
    q, r = divide_with_remainder(f0, f1)
    full = sturm_sequence(f0)
    f2 = -r
    expected = Fraction(-st.alpha * st.g, n)
    d1, d2 = f1.degree, f2.degree
    return RemainderDiagnostic(
        n=n,
        g=st.g,
        alpha=st.alpha,
        nabla=st.nabla,
        degrees=tuple(full.degrees),
        leading_signs=tuple(full.leading_signs),
        d1=d1,
        d2=d2,
        remainder_leading=r.leading,
        expected_leading=expected,
        degree_ok=d2 == n - st.g,
        leading_ok=r.leading == expected,
        gap_ok=d1 - d2 == st.g - 1 and st.g - 1 >= 2,
        closed_form_ok=r == remainder_closed_form(list(seq.values))
        and q == ExactPolynomial([Fraction(1, n), Fraction(1, n)]),
    )


def member_polynomial_check(g: Graph, spec: PropertySpec) -> bool:
    """For G in A the generating polynomial is exactly ``(1 + x)^n``."""
    return coeffs_hereditary(g, spec).polynomial() == binomial_expansion(g.n)

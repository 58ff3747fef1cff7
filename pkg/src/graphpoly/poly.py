"""Dense univariate polynomials with exact rational coefficients."""

from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Iterable

from .errors import PolynomialParseError


def _frac(c) -> Fraction:
    return c if isinstance(c, Fraction) else Fraction(c)


class ExactPolynomial:
    """Immutable polynomial ``a_0 + a_1 x + ... + a_d x^d`` over the rationals.

    Trailing zero coefficients are stripped, so the zero polynomial has an
    empty coefficient tuple and degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [_frac(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("ExactPolynomial is immutable")

    # -- constructors --------------------------------------------------

    @classmethod
    def zero(cls) -> "ExactPolynomial":
        return cls(())

    @classmethod
    def constant(cls, c) -> "ExactPolynomial":
        return cls((c,))

    @classmethod
    def monomial(cls, k: int, c=1) -> "ExactPolynomial":
        return cls([0] * k + [c])

    # -- basic queries -------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __getitem__(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def __call__(self, x) -> Fraction:
        x = _frac(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def integer_coeffs(self) -> list[int]:
        if any(c.denominator != 1 for c in self.coeffs):
            raise ValueError("polynomial has non-integer coefficients")
        return [int(c) for c in self.coeffs]

    # -- ring operations -----------------------------------------------

    def __add__(self, other) -> "ExactPolynomial":
        other = _coerce(other)
        m = max(len(self.coeffs), len(other.coeffs))
        return ExactPolynomial(self[i] + other[i] for i in range(m))

    __radd__ = __add__

    def __neg__(self) -> "ExactPolynomial":
        return ExactPolynomial(-c for c in self.coeffs)

    def __sub__(self, other) -> "ExactPolynomial":
        return self + (-_coerce(other))

    def __rsub__(self, other) -> "ExactPolynomial":
        return _coerce(other) - self

    def __mul__(self, other) -> "ExactPolynomial":
        other = _coerce(other)
        if self.is_zero() or other.is_zero():
            return ExactPolynomial.zero()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return ExactPolynomial(out)

    __rmul__ = __mul__

    def scale(self, q) -> "ExactPolynomial":
        q = _frac(q)
        return ExactPolynomial(c * q for c in self.coeffs)

    def __pow__(self, k: int) -> "ExactPolynomial":
        out = ExactPolynomial.constant(1)
        for _ in range(k):
            out = out * self
        return out

    def derivative(self) -> "ExactPolynomial":
        return ExactPolynomial(i * c for i, c in enumerate(self.coeffs) if i)

    def divmod(self, g: "ExactPolynomial") -> tuple["ExactPolynomial", "ExactPolynomial"]:
        return divide_with_remainder(self, g)

    def reverse(self, n: int) -> "ExactPolynomial":
        return reverse(self, n)

    def monic(self) -> "ExactPolynomial":
        if self.is_zero():
            return self
        return self.scale(1 / self.leading)

    # -- comparison / display ------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = ExactPolynomial.constant(other)
        if not isinstance(other, ExactPolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"ExactPolynomial({render(self)!r})"

    def __str__(self) -> str:
        return render(self)


def _coerce(x) -> ExactPolynomial:
    if isinstance(x, ExactPolynomial):
        return x
    return ExactPolynomial.constant(x)


def add(f: ExactPolynomial, g: ExactPolynomial) -> ExactPolynomial:
    return f + g


def mul(f: ExactPolynomial, g: ExactPolynomial) -> ExactPolynomial:
    return f * g


def scale(f: ExactPolynomial, q) -> ExactPolynomial:
    return f.scale(q)


def derivative(f: ExactPolynomial) -> ExactPolynomial:
    return f.derivative()


def divide_with_remainder(f: ExactPolynomial, g: ExactPolynomial) -> tuple[ExactPolynomial, ExactPolynomial]:
    """Euclidean division ``f = g*q + r`` with ``deg r < deg g``."""
    if g.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    rem = list(f.coeffs)
    dg = g.degree
    lead = g.leading
    if len(rem) - 1 < dg:
        return ExactPolynomial.zero(), f
    quot = [Fraction(0)] * (len(rem) - dg)
    for k in range(len(rem) - 1, dg - 1, -1):
        c = rem[k] / lead
        if c:
            quot[k - dg] = c
            for i, b in enumerate(g.coeffs):
                rem[k - dg + i] -= c * b
    return ExactPolynomial(quot), ExactPolynomial(rem[:dg])


def reverse(f: ExactPolynomial, n: int) -> ExactPolynomial:
    """``x^n f(1/x)``; requires ``n >= deg f``."""
    if n < f.degree:
        raise ValueError(f"reversal length {n} below degree {f.degree}")
    cs = list(f.coeffs) + [Fraction(0)] * (n + 1 - len(f.coeffs))
    return ExactPolynomial(reversed(cs))


def poly_gcd(f: ExactPolynomial, g: ExactPolynomial) -> ExactPolynomial:
    """Monic greatest common divisor by Euclid's algorithm."""
    if f.is_zero() and g.is_zero():
        raise ValueError("gcd of two zero polynomials is undefined")
    while not g.is_zero():
        f, g = g, divide_with_remainder(f, g)[1]
    return f.monic()


def squarefree_part(f: ExactPolynomial) -> ExactPolynomial:
    """Monic ``f / gcd(f, f')``: the same roots, each with multiplicity one."""
    if f.is_zero():
        raise ValueError("squarefree part of the zero polynomial is undefined")
    if f.degree == 0:
        return ExactPolynomial.constant(1)
    q, r = divide_with_remainder(f, poly_gcd(f, f.derivative()))
    assert r.is_zero()
    return q.monic()


def binomial_expansion(n: int) -> ExactPolynomial:
    """(1 + x)^n with exact binomial coefficients."""
    return ExactPolynomial(math.comb(n, i) for i in range(n + 1))


# ---------------------------------------------------------------------------
# text form: "a_0 + a_1*x + ... + a_d*x^d"
# ---------------------------------------------------------------------------

def _num(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def render(f: ExactPolynomial) -> str:
    if f.is_zero():
        return "0"
    parts = []
    for i, c in enumerate(f.coeffs):
        if c == 0:
            continue
        mag = _num(abs(c))
        term = mag if i == 0 else f"{mag}*x" if i == 1 else f"{mag}*x^{i}"
        if not parts:
            parts.append(term if c > 0 else f"-{term}")
        else:
            parts.append(f"+ {term}" if c > 0 else f"- {term}")
    return " ".join(parts)


_TERM = re.compile(
    r"""\s*(?P<sign>[+-])?\s*
        (?:(?P<coef>\d+(?:/\d+)?)\s*(?P<star>\*)?\s*)?
        (?P<x>x(?:\s*(?:\^|\*\*)\s*(?P<pow>\d+))?)?\s*""",
    re.VERBOSE,
)


def parse_polynomial(text: str) -> ExactPolynomial:
    """Parse ``render`` output or a comma-separated coefficient list ``a_0,a_1,...``."""
    text = text.strip()
    if not text:
        raise PolynomialParseError("empty polynomial string")
    if "x" not in text and "," in text:
        try:
            return ExactPolynomial(Fraction(t.strip()) for t in text.split(","))
        except (ValueError, ZeroDivisionError) as exc:
            raise PolynomialParseError(str(exc)) from None
    coeffs: dict[int, Fraction] = {}
    pos = 0
    first = True
    while pos < len(text):
        m = _TERM.match(text, pos)
        if not m or m.end() == pos or not (m["coef"] or m["x"]):
            raise PolynomialParseError(f"cannot parse polynomial near {text[pos:]!r}")
        if not first and not m["sign"]:
            raise PolynomialParseError(f"missing operator near {text[pos:]!r}")
        if m["star"] and not m["x"]:
            raise PolynomialParseError(f"dangling '*' near {text[pos:]!r}")
        c = Fraction(m["coef"]) if m["coef"] else Fraction(1)
        if m["sign"] == "-":
            c = -c
        k = (int(m["pow"]) if m["pow"] else 1) if m["x"] else 0
        coeffs[k] = coeffs.get(k, Fraction(0)) + c
        pos = m.end()
        first = False
    deg = max(coeffs)
    return ExactPolynomial(coeffs.get(i, 0) for i in range(deg + 1))

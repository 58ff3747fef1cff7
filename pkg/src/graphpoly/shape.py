"""Shape of coefficient sequences: unimodality, log-concavity and the
ratio inequalities that force a central mode for upward-closed families.

Everything is exact integer arithmetic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence


@dataclass(frozen=True)
class ShapeReport:
    is_unimodal: bool
    modes: frozenset[int]
    is_log_concave: bool
    has_internal_zeros: bool
    ratio_sequence: tuple[Fraction, ...]
    star_holds_at: frozenset[int]


@dataclass(frozen=True)
class InequalityReport:
    """Result of the two deterministic checks for upward-closed families.

    ``lemma21``: ``c_k <= c_{k+1}`` for ``k < n/2``.
    ``ratio``: ``(n-i) c_i <= (i+1) c_{i+1}`` for every ``i < n``.
    """

    lemma21_pass: bool
    lemma21_first_violation: int | None
    ratio_pass: bool
    ratio_first_violation: int | None

    @property
    def passed(self) -> bool:
        return self.lemma21_pass and self.ratio_pass


@dataclass(frozen=True)
class NewtonVerdict:
    consistent: bool
    real_rooted: bool | None
    log_concave: bool
    internal_zeros: bool
    unimodal: bool
    violations: tuple[str, ...] = field(default=())


def is_unimodal(seq: Sequence[int]) -> tuple[bool, frozenset[int]]:
    """All admissible modes ``k``: nondecreasing up to k, nonincreasing after.

    Weak inequalities, so plateaus give several modes. An empty sequence is
    vacuously unimodal and has no mode index.
    """
    a = list(seq)
    d = len(a)
    if d == 0:
        return True, frozenset()
    up = [True] * d
    for i in range(1, d):
        up[i] = up[i - 1] and a[i - 1] <= a[i]
    down = [True] * d
    for i in range(d - 2, -1, -1):
        down[i] = down[i + 1] and a[i] >= a[i + 1]
    modes = frozenset(k for k in range(d) if up[k] and down[k])
    return bool(modes), modes


def is_log_concave(seq: Sequence[int]) -> bool:
    a = list(seq)
    return all(a[j] * a[j] >= a[j - 1] * a[j + 1] for j in range(1, len(a) - 1))


def has_internal_zeros(seq: Sequence[int]) -> bool:
    nz = [i for i, c in enumerate(seq) if c != 0]
    return bool(nz) and any(seq[i] == 0 for i in range(nz[0], nz[-1] + 1))


def ratio_sequence(seq: Sequence[int]) -> tuple[Fraction, ...]:
    """``r_i = c_i / C(n, i)`` with ``n = len(seq) - 1``."""
    n = len(seq) - 1
    return tuple(Fraction(c, math.comb(n, i)) for i, c in enumerate(seq))


def star_condition(seq: Sequence[int], k: int) -> bool:
    """``c_k / C(n, k) >= (n - k) / (k + 1)``, compared as integers."""
    n = len(seq) - 1
    if not 0 <= k <= n:
        raise ValueError(f"index {k} outside 0..{n}")
    return seq[k] * (k + 1) >= (n - k) * math.comb(n, k)


def cohereditary_inequalities(seq: Sequence[int]) -> InequalityReport:
    n = len(seq) - 1
    first21 = next((k for k in range(n) if 2 * k < n and seq[k] > seq[k + 1]), None)
    first_ratio = next(
        (i for i in range(n) if (n - i) * seq[i] > (i + 1) * seq[i + 1]), None
    )
    return InequalityReport(first21 is None, first21, first_ratio is None, first_ratio)


def newton_chain_check(coeffs: Sequence[int], real_rooted) -> NewtonVerdict:
    """Real-rooted => log-concave; log-concave without internal zeros => unimodal.

    ``real_rooted`` may be a zero-argument callable; it is then evaluated
    only when log-concavity or internal zeros make the answer matter.
    A violation here means a bug somewhere upstream.
    """
    if any(c < 0 for c in coeffs):
        raise ValueError("Newton-chain check needs nonnegative coefficients")
    lc = is_log_concave(coeffs)
    iz = has_internal_zeros(coeffs)
    uni, _ = is_unimodal(coeffs)
    if callable(real_rooted):
        real_rooted = real_rooted() if (not lc or iz) else None
    violations = []
    if real_rooted and not lc:
        violations.append("real-rooted but not log-concave")
    if real_rooted and iz:
        violations.append("real-rooted but has internal zeros")
    if lc and not iz and not uni:
        violations.append("log-concave without internal zeros but not unimodal")
    return NewtonVerdict(not violations, real_rooted, lc, iz, uni, tuple(violations))


def analyze(seq: Sequence[int]) -> ShapeReport:
    uni, modes = is_unimodal(seq)
    n = len(seq) - 1
    return ShapeReport(
        is_unimodal=uni,
        modes=modes,
        is_log_concave=is_log_concave(seq),
        has_internal_zeros=has_internal_zeros(seq),
        ratio_sequence=ratio_sequence(seq) if n >= 0 else (),
        star_holds_at=frozenset(k for k in range(n + 1) if star_condition(seq, k)),
    )


def central_index(n: int) -> int:
    """``ceil(n / 2)``."""
    return (n + 1) // 2

"""Exact integer/rational helpers and the Lovasz form of Kruskal-Katona.

``LL_c(x)`` is ``binom(q, c-1)`` where ``q >= c`` is the real solution of
``binom(q, c) = x``.  Nothing in here touches floating point: ``q`` is
bracketed by dyadic rationals ``m / 2**e`` and every comparison is done on
scaled integers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Union

Rational = Union[int, Fraction]

DEFAULT_WIDTH = Fraction(1, 10**9)


def binom(n: int, i: int) -> int:
    """``C(n, i)``, zero outside ``0 <= i <= n``."""
    if i < 0 or n < 0 or i > n:
        return 0
    return math.comb(n, i)


def falling(x: int, i: int) -> int:
    """Falling factorial ``(x)_i = x (x-1) ... (x-i+1)``."""
    if i < 0:
        raise ValueError("i must be non-negative")
    out = 1
    for j in range(i):
        out *= x - j
    return out


@dataclass(frozen=True)
class GenBinomialPoly:
    """``binom(q, d)`` as a polynomial in ``q`` with rational coefficients.

    ``coeffs[j]`` is the coefficient of ``q**j``.
    """

    degree: int
    coeffs: tuple = field(init=False, repr=False)

    def __post_init__(self):
        if self.degree < 0:
            raise ValueError("degree must be non-negative")
        poly = [Fraction(1)]
        for j in range(self.degree):
            # multiply by (q - j)
            nxt = [Fraction(0)] * (len(poly) + 1)
            for a, coef in enumerate(poly):
                nxt[a + 1] += coef
                nxt[a] -= j * coef
            poly = nxt
        fact = math.factorial(self.degree)
        object.__setattr__(self, "coeffs", tuple(cf / fact for cf in poly))

    def __call__(self, q: Rational) -> Fraction:
        acc = Fraction(0)
        for coef in reversed(self.coeffs):
            acc = acc * q + coef
        return acc


def gen_binom_at(d: int, q: Rational) -> Fraction:
    """Generalised binomial ``q (q-1) ... (q-d+1) / d!`` for ``q >= d - 1``."""
    q = Fraction(q)
    if d < 0:
        raise ValueError("d must be non-negative")
    if q < d - 1:
        raise ValueError(f"generalised binomial needs q >= d - 1, got q={q}, d={d}")
    num = Fraction(1)
    for j in range(d):
        num *= q - j
    return num / math.factorial(d)


# --- dyadic evaluation --------------------------------------------------------
#
# For q = m / 2**e, binom(q, d) = P_d(m, e) / (d! * 2**(e*d)) with
# P_d(m, e) = prod_{j<d} (m - j * 2**e).  All comparisons below clear the
# common denominator.


def _prod(m: int, e: int, d: int) -> int:
    step = 1 << e
    out = 1
    for j in range(d):
        out *= m - j * step
    return out


def _as_ratio(x: Rational) -> tuple[int, int]:
    x = Fraction(x)
    return x.numerator, x.denominator


def _g_cmp(c: int, m: int, e: int, x: Rational) -> int:
    """Sign of ``binom(m/2**e, c) - x``."""
    a, b = _as_ratio(x)
    lhs = _prod(m, e, c) * b
    rhs = a * math.factorial(c) << (e * c)
    return (lhs > rhs) - (lhs < rhs)


def _f_value(c: int, m: int, e: int) -> Fraction:
    d = c - 1
    return Fraction(_prod(m, e, d), math.factorial(d) << (e * d))


def _lattice_floor(c: int, x: Rational) -> int:
    """Largest integer ``q0 >= c`` with ``binom(q0, c) <= x`` (needs ``x >= 1``)."""
    lo = c
    hi = c + 1
    while binom(hi, c) <= x:
        lo = hi
        hi = c + 2 * (hi - c)
    # binom(lo, c) <= x < binom(hi, c)
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if binom(mid, c) <= x:
            lo = mid
        else:
            hi = mid
    return lo


@dataclass(frozen=True)
class QEnclosure:
    """Bracket ``lo <= q <= hi`` of the solution of ``binom(q, c) = x``."""

    c: int
    x: Fraction
    lo: Fraction
    hi: Fraction

    @property
    def exact(self) -> bool:
        return self.lo == self.hi


def solve_q(c: int, x: Rational, width: Rational = DEFAULT_WIDTH) -> QEnclosure:
    """Enclose the real ``q >= c`` with ``binom(q, c) = x`` (``x >= 1``)."""
    if c < 1:
        raise ValueError("c must be >= 1")
    x = Fraction(x)
    if x < 1:
        raise ValueError("binom(q, c) = x has a solution q >= c only for x >= 1")
    q0 = _lattice_floor(c, x)
    if binom(q0, c) == x:
        return QEnclosure(c, x, Fraction(q0), Fraction(q0))
    m, e = q0, 0
    width = Fraction(width)
    while Fraction(1, 1 << e) > width:
        m, e = 2 * m, e + 1
        if _g_cmp(c, m + 1, e, x) <= 0:
            m += 1
        if _g_cmp(c, m, e, x) == 0:
            return QEnclosure(c, x, Fraction(m, 1 << e), Fraction(m, 1 << e))
    return QEnclosure(c, x, Fraction(m, 1 << e), Fraction(m + 1, 1 << e))


@dataclass(frozen=True)
class LLEnclosure:
    c: int
    x: int
    lo: Fraction
    hi: Fraction
    exact: Optional[Fraction] = None

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def __float__(self) -> float:
        return float((self.lo + self.hi) / 2)


def ll_eval(c: int, x: int, width: Rational = DEFAULT_WIDTH) -> LLEnclosure:
    """Certified enclosure of ``LL_c(x)`` of width at most ``width``."""
    if c < 2:
        raise ValueError("LL_c is defined for c >= 2")
    if x < 0 or (0 < x < 1):
        raise ValueError("LL_c is defined on {0} and [1, inf)")
    if x == 0:
        zero = Fraction(0)
        return LLEnclosure(c, x, zero, zero, zero)
    width = Fraction(width)
    if width <= 0:
        raise ValueError("width must be positive")
    q0 = _lattice_floor(c, x)
    if binom(q0, c) == x:
        val = Fraction(binom(q0, c - 1))
        return LLEnclosure(c, x, val, val, val)
    fact = math.factorial(c - 1)
    m, e = q0, 0
    while True:
        # F(hi) - F(lo) <= width, cleared of denominators
        gap = _prod(m + 1, e, c - 1) - _prod(m, e, c - 1)
        if gap * width.denominator <= width.numerator * (fact << (e * (c - 1))):
            break
        m, e = 2 * m, e + 1
        s = _g_cmp(c, m + 1, e, x)
        if s == 0:
            val = _f_value(c, m + 1, e)
            return LLEnclosure(c, x, val, val, val)
        if s < 0:
            m += 1
    return LLEnclosure(c, x, _f_value(c, m, e), _f_value(c, m + 1, e))


def ll_leq(c: int, x: int, T: int) -> bool:
    """Exact truth value of ``LL_c(x) <= T``.

    ``G(q) = binom(q, c)`` and ``F(q) = binom(q, c-1)`` are both increasing on
    ``q >= c``, so a rational ``q`` with ``G(q) >= x`` and ``F(q) <= T`` proves
    the inequality and one with ``G(q) <= x`` and ``F(q) > T`` refutes it.
    The only configuration no witness can settle is ``LL_c(x) == T``; there
    ``c*(G - x) - (q - c + 1)*(F - T)`` reduces to the linear polynomial
    ``T*(q - c + 1) - c*x``, so the common root can only be
    ``q = c*x/T + c - 1`` and is checked directly.
    """
    if c < 2:
        raise ValueError("LL_c is defined for c >= 2")
    if x < 0:
        raise ValueError("x must be non-negative")
    if x == 0:
        return T >= 0
    if T < c:
        # LL_c(x) >= binom(c, c-1) = c for x >= 1
        return False
    q_tie = Fraction(c * x, T) + c - 1
    if q_tie >= c and gen_binom_at(c, q_tie) == x:
        return True
    q0 = _lattice_floor(c, x)
    if binom(q0, c) == x:
        return binom(q0, c - 1) <= T
    # G(q0) < x < G(q0 + 1)
    fact = math.factorial(c - 1)
    m, e = q0, 0
    while True:
        scale = fact << (e * (c - 1))
        if _prod(m + 1, e, c - 1) <= T * scale:
            return True
        if _prod(m, e, c - 1) > T * scale:
            return False
        m, e = 2 * m, e + 1
        s = _g_cmp(c, m + 1, e, x)
        if s == 0:
            # q is dyadic; F there is LL exactly
            return _f_value(c, m + 1, e) <= T
        if s < 0:
            m += 1

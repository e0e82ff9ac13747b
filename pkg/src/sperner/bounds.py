"""Bounds on SP(n, k) and a best-known aggregator.

All quantities are exact integers or ``Fraction``s.  Every record carries a
``source`` tag so a table cell can be traced back to the rule producing it.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .errors import NotApplicable
from .exactmath import DEFAULT_WIDTH, binom, ll_leq, solve_q


@dataclass(frozen=True)
class Params:
    n: int
    k: int

    def __post_init__(self):
        if self.k < 1:
            raise ValueError(f"k must be >= 1, got {self.k}")
        if self.n < self.k:
            raise ValueError(f"need n >= k, got n={self.n}, k={self.k}")

    @property
    def c(self) -> int:
        return self.n // self.k

    @property
    def r(self) -> int:
        return self.n % self.k

    def __str__(self):
        return f"({self.n},{self.k})"


class Direction(str, enum.Enum):
    LOWER = "lower"
    UPPER = "upper"
    EXACT = "exact"


@dataclass(frozen=True)
class BoundRecord:
    params: Params
    value: int
    direction: Direction
    source: str


# ---------------------------------------------------------------------------
# closed forms


def nlb_rational(params: Params) -> Fraction:
    n, k, c, r = params.n, params.k, params.c, params.r
    return Fraction(binom(n - r, c), k)


def nlb(params: Params) -> int:
    """Naive lower bound ``floor(binom(n-r, c) / k)``."""
    n, k, c, r = params.n, params.k, params.c, params.r
    return binom(n - r, c) // k


def mms(params: Params) -> Fraction:
    """``binom(n, c) / (k - r + r(c+1)/(n-c))`` as an exact rational."""
    n, k, c, r = params.n, params.k, params.c, params.r
    denom = Fraction(k - r)
    if r:
        denom += Fraction(r * (c + 1), n - c)
    return Fraction(binom(n, c)) / denom


def mms_floor(params: Params) -> int:
    return math.floor(mms(params))


def lhs_eq1(params: Params, p: int) -> bool:
    """Whether ``ceil((1 - r(c+1)/n) p) + LL_c(floor(r(c+1)p/n)) <= binom(n-1, c-1)``."""
    n, k, c, r = params.n, params.k, params.c, params.r
    if c < 2:
        raise NotApplicable("the LL_c inequality needs c >= 2")
    if p < 0:
        raise ValueError("p must be non-negative")
    rhs = binom(n - 1, c - 1)
    # 1 - r(c+1)/n == c(k-r)/n
    a = -((-c * (k - r) * p) // n)
    if a > rhs:
        return False
    x = (r * (c + 1) * p) // n
    return ll_leq(c, x, rhs - a)


def thm_applicable(params: Params) -> Optional[str]:
    """``None`` when the implicit upper bound applies, else the failed condition."""
    if params.k < 4:
        return "k >= 4"
    if params.n < 2 * params.k + 2:
        return "n >= 2k+2"
    if params.r == 0:
        return "r != 0"
    return None


def thm_upper(params: Params) -> int:
    """Largest ``p`` for which the LL_c inequality holds at every ``p' <= p``.

    Raises :class:`NotApplicable` outside ``n >= 2k+2, k >= 4, r >= 1``.
    """
    why = thm_applicable(params)
    if why:
        raise NotApplicable(f"implicit upper bound needs {why} at {params}")
    lo = nlb(params)
    hi = mms_floor(params) + 1
    if not lhs_eq1(params, lo):
        raise AssertionError(f"inequality fails at NLB for {params}")
    if lhs_eq1(params, hi):
        raise AssertionError(f"inequality holds above floor(MMS) for {params}")
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if lhs_eq1(params, mid):
            lo = mid
        else:
            hi = mid
    return lo


def cor_upper(params: Params, sp_candidate: int,
              width=DEFAULT_WIDTH) -> tuple[Fraction, Fraction]:
    """Enclosure of ``binom(n,c) / ((k-r) + r(c+1)/(q-c+1))``.

    ``q >= c`` solves ``binom(q, c) = r(c+1) sp_candidate / n``.  The value is
    increasing in ``q``, so the q-bracket maps to the returned ``(lo, hi)``.
    """
    why = thm_applicable(params)
    if why:
        raise NotApplicable(f"MMS-form bound needs {why} at {params}")
    if sp_candidate < nlb(params):
        raise NotApplicable("sp_candidate must be at least NLB(n,k)")
    n, k, c, r = params.n, params.k, params.c, params.r
    x = Fraction(r * (c + 1) * sp_candidate, n)
    q = solve_q(c, x, width)

    def value(qq: Fraction) -> Fraction:
        return Fraction(binom(n, c)) / ((k - r) + Fraction(r * (c + 1)) / (qq - c + 1))

    return value(q.lo), value(q.hi)


# ---------------------------------------------------------------------------
# known exact values and the Li-Meagher ranges


def exact_known(params: Params) -> Optional[BoundRecord]:
    n, k, c = params.n, params.k, params.c

    def rec(value, tag):
        return BoundRecord(params, value, Direction.EXACT, tag)

    if k == 1 or n < 2 * k:
        return rec(1, "EXACT-TRIVIAL")
    if n % k == 0:
        return rec(binom(n - 1, c - 1), "EXACT-DIV")
    if k == 2:
        return rec(binom(n - 1, n // 2 - 1), "EXACT-K2")
    if n == 2 * k + 1 and k % 2 == 0:
        return rec(2 * k, "EXACT-2K1")
    if n == 3 * k - 6 and k >= 11 and k % 6 != 4:
        return rec((k - 2) ** 2 // 2, "FAMILY-3K6")
    return None


def limea_bounds(params: Params) -> Optional[tuple[int, Optional[int]]]:
    """Li-Meagher range for ``n`` in ``{2k+1, 2k+2, 3k-1}`` (``k >= 3``)."""
    n, k = params.n, params.k
    if k < 3:
        return None
    lower, upper = None, None
    if n == 2 * k + 1:
        lower, upper = 2 * k - 1, 2 * k
    if n == 2 * k + 2:
        lower, upper = 2 * k + 1, 2 * k + 3
    if n == 3 * k - 1:
        lower = max(lower or 0, 3 * k - 1)
    if lower is None:
        return None
    return lower, upper


# ---------------------------------------------------------------------------
# direct constructions


def main_admissible_us(params: Params) -> list[int]:
    n, k, c, r = params.n, params.k, params.c, params.r
    if n < 2 * k or k < 3 or r == 0 or n % 2 or (c * k) % 2:
        return []
    if r == k - 1:
        return [c // 2] if c % 2 == 0 and c >= 2 else []
    return list(range(1, c // 2 + 1))


def _main_check(params: Params, u: int):
    n, k, c, r = params.n, params.k, params.c, params.r
    for ok, what in ((n >= 2 * k, "n >= 2k"), (k >= 3, "k >= 3"), (r != 0, "r != 0"),
                     (n % 2 == 0, "n even"), ((c * k) % 2 == 0, "c*k even"),
                     (1 <= u <= c // 2, "1 <= u <= floor(c/2)"),
                     (r != k - 1 or 2 * u == c, "u = c/2 when r = k-1")):
        if not ok:
            raise NotApplicable(f"main construction needs {what} at {params}, u={u}")


def main_a_b(params: Params, u: int) -> tuple[int, int]:
    _main_check(params, u)
    n, c = params.n, params.c
    h = n // 2
    a = sum(binom(h, i) * binom(h, c - i) for i in range(u, c - u + 1))
    b = 2 * sum(binom(h, i) * binom(h, c + 1 - i) for i in range(u))
    return a, b


def main_construction_p(params: Params, u: int) -> int:
    a, b = main_a_b(params, u)
    return min(a // (params.k - params.r), b // params.r)


def alt_admissible_us(params: Params) -> list[int]:
    n, k, c, r = params.n, params.k, params.c, params.r
    if n < 2 * k or k < 3 or n % 2 or (c * k) % 2 == 0:
        return []
    if r == 1:
        return [(c + 1) // 2] if (c + 1) // 2 <= c - 1 else []
    return list(range((c + 1) // 2, c))


def _alt_check(params: Params, u: int):
    n, k, c, r = params.n, params.k, params.c, params.r
    for ok, what in ((n >= 2 * k, "n >= 2k"), (k >= 3, "k >= 3"),
                     (n % 2 == 0, "n even"), ((c * k) % 2 == 1, "c*k odd"),
                     ((c + 1) // 2 <= u <= c - 1, "(c+1)/2 <= u <= c-1"),
                     (r != 1 or 2 * u == c + 1, "u = (c+1)/2 when r = 1")):
        if not ok:
            raise NotApplicable(f"alternate construction needs {what} at {params}, u={u}")


def alt_a_b(params: Params, u: int) -> tuple[int, int]:
    _alt_check(params, u)
    n, c = params.n, params.c
    h = n // 2
    a = 2 * sum(binom(h, i) * binom(h, c - i) for i in range(u + 1, c + 1))
    b = sum(binom(h, i) * binom(h, c + 1 - i) for i in range(c + 1 - u, u + 1))
    return a, b


def alt_construction_p(params: Params, u: int) -> int:
    a, b = alt_a_b(params, u)
    return min(a // (params.k - params.r), b // params.r)


# tie preference among equal-valued lower bounds: lower rank wins
_RANK = {"EXACT": 0, "FAMILY-3K6": 0, "MAIN": 1, "ALT": 1, "LIMEA-RANGE": 2,
         "PRODUCT": 3, "TIMES-K": 4, "MONO": 5, "NLB": 6, "MMS-floor": 7, "THM-UB": 1}


def _rank(source: str) -> int:
    head = source.split("(")[0]
    if head.startswith("EXACT"):
        head = "EXACT"
    return _RANK.get(head, 9)


def direct_lower_candidates(params: Params) -> list[BoundRecord]:
    out = []
    ex = exact_known(params)
    if ex is not None:
        out.append(ex)
    for u in main_admissible_us(params):
        out.append(BoundRecord(params, main_construction_p(params, u), Direction.LOWER, f"MAIN({u})"))
    for u in alt_admissible_us(params):
        out.append(BoundRecord(params, alt_construction_p(params, u), Direction.LOWER, f"ALT({u})"))
    lm = limea_bounds(params)
    if lm is not None:
        out.append(BoundRecord(params, lm[0], Direction.LOWER, "LIMEA-RANGE"))
    return out


def _best(records: list[BoundRecord]) -> BoundRecord:
    return min(records, key=lambda rec: (-rec.value, _rank(rec.source)))


def best_direct_lower(params: Params) -> BoundRecord:
    """Best lower bound from exact values, Li-Meagher and every admissible ``u``.

    Falls back to NLB when nothing else applies.
    """
    cands = direct_lower_candidates(params)
    cands.append(BoundRecord(params, nlb(params), Direction.LOWER, "NLB"))
    return _best(cands)


def upper_candidates(params: Params) -> list[BoundRecord]:
    out = []
    ex = exact_known(params)
    if ex is not None:
        out.append(ex)
    if thm_applicable(params) is None:
        out.append(BoundRecord(params, thm_upper(params), Direction.UPPER, "THM-UB"))
    lm = limea_bounds(params)
    if lm is not None and lm[1] is not None:
        out.append(BoundRecord(params, lm[1], Direction.UPPER, "LIMEA-RANGE"))
    out.append(BoundRecord(params, mms_floor(params), Direction.UPPER, "MMS-floor"))
    return out


def best_upper(params: Params) -> BoundRecord:
    return min(upper_candidates(params), key=lambda rec: (rec.value, _rank(rec.source)))


@dataclass
class Cell:
    params: Params
    lower: BoundRecord
    upper: BoundRecord
    lower_candidates: list = field(default_factory=list, repr=False)

    @property
    def ties(self) -> list[str]:
        """Sources whose value equals the chosen lower bound."""
        return [rec.source for rec in self.lower_candidates if rec.value == self.lower.value]


def aggregate(k: int, n_max: int) -> dict[int, Cell]:
    """Best known lower/upper records for every ``n`` in ``[k, n_max]``.

    Lowers come from direct constructions and exact values, propagated in
    ascending ``n`` through monotonicity, the ``x k`` rule and the product
    rule over every split ``m + (n - m)`` with both parts at least ``k``.
    """
    if k < 1 or n_max < k:
        raise ValueError("need k >= 1 and n_max >= k")
    cells: dict[int, Cell] = {}
    for n in range(k, n_max + 1):
        params = Params(n, k)
        cands = direct_lower_candidates(params)
        cands.append(BoundRecord(params, nlb(params), Direction.LOWER, "NLB"))
        if n - 1 >= k:
            cands.append(BoundRecord(params, cells[n - 1].lower.value, Direction.LOWER, "MONO"))
        if k >= 2 and n - k >= k:
            cands.append(BoundRecord(params, k * cells[n - k].lower.value,
                                     Direction.LOWER, "TIMES-K"))
        for m in range(k, n - k + 1):
            value = k * cells[m].lower.value * cells[n - m].lower.value
            cands.append(BoundRecord(params, value, Direction.LOWER, f"PRODUCT({m}, {n - m})"))
        upper = best_upper(params)
        lower = _best(cands)
        if lower.direction is not Direction.EXACT:
            lower = BoundRecord(params, lower.value, Direction.LOWER, lower.source)
        if lower.value > upper.value:
            raise AssertionError(f"lower {lower} exceeds upper {upper}")
        if upper.direction is Direction.EXACT:
            lower = upper
        cells[n] = Cell(params, lower, upper, cands)
    return cells


def ratio_diagnostics(params: Params) -> tuple[Fraction, Fraction]:
    """``NLB/MMS`` and ``k MMS(n,k) / MMS(n+k,k)`` as exact rationals."""
    n, k = params.n, params.k
    if n <= 2 * k or k < 3:
        raise NotApplicable(f"ratio diagnostics need n > 2k and k >= 3 at {params}")
    first = nlb_rational(params) / mms(params)
    second = k * mms(params) / mms(Params(n + k, k))
    return first, second

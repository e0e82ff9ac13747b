"""Colour plans for the halved-ground-set constructions.

A plan says, per colour (= per partition to be built), which edge types
``(i, j)`` it uses: ``i`` elements from the first half ``X1`` and ``j``
from the second half ``X2``.  Edges are grouped into compatible pairs and
triples, so every colour meets each half in exactly ``n/2`` elements.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from ..bounds import Params, alt_a_b, alt_construction_p, main_a_b, main_construction_p
from ..exactmath import binom
from .triples import comp_triples

EdgeType = tuple[int, int]


@dataclass
class ColourPlan:
    params: Params
    method: str
    u: int
    case: str
    colours: list = field(default_factory=list)     # per colour: list of (kind, types)
    supply: dict = field(default_factory=dict)      # type -> |E_(i,j)| available in the clutter

    @property
    def p(self) -> int:
        return len(self.colours)

    def colour_types(self, idx: int) -> list[EdgeType]:
        return [tp for _, group in self.colours[idx] for tp in group]

    def consumption(self) -> Counter:
        used: Counter = Counter()
        for idx in range(self.p):
            used.update(self.colour_types(idx))
        return used

    def black(self) -> dict:
        """Unused supply per type."""
        used = self.consumption()
        return {tp: cnt - used[tp] for tp, cnt in self.supply.items()}

    def check(self):
        n, k, c, r = self.params.n, self.params.k, self.params.c, self.params.r
        h = n // 2
        for idx in range(self.p):
            types = self.colour_types(idx)
            if len(types) != k:
                raise AssertionError(f"colour {idx} has {len(types)} edges")
            if sum(i for i, _ in types) != h or sum(j for _, j in types) != h:
                raise AssertionError(f"colour {idx} does not meet each half in n/2 elements")
            big = sum(1 for i, j in types if i + j == c + 1)
            if big != r or len(types) - big != k - r:
                raise AssertionError(f"colour {idx} has {big} edges of size c+1, expected {r}")
            for _, group in self.colours[idx]:
                if sum(i for i, _ in group) != sum(j for _, j in group):
                    raise AssertionError(f"colour {idx} has an incompatible group {group}")
        for tp, cnt in self.consumption().items():
            if tp not in self.supply:
                raise AssertionError(f"type {tp} not in the clutter")
            if cnt > self.supply[tp]:
                raise AssertionError(f"type {tp} used {cnt} times, supply {self.supply[tp]}")


class _PairPool:
    """Compatible pairs ``(i,j)+(j,i)`` handed out smallest type first."""

    def __init__(self, remaining: dict):
        self.stock = []
        for (i, j), cnt in sorted(remaining.items()):
            if i < j:
                self.stock.append([(i, j), cnt])
            elif i == j:
                self.stock.append([(i, j), cnt // 2])
        self.pos = 0

    def size(self) -> int:
        return sum(cnt for _, cnt in self.stock[self.pos:])

    def take(self, count: int) -> list[tuple]:
        out = []
        while len(out) < count:
            if self.pos >= len(self.stock):
                raise AssertionError("pair supply exhausted")
            entry = self.stock[self.pos]
            if entry[1] == 0:
                self.pos += 1
                continue
            (i, j) = entry[0]
            entry[1] -= 1
            out.append(("pair", ((i, j), (j, i))))
        return out


def _supply(h: int, types) -> dict:
    return {(i, j): binom(h, i) * binom(h, j) for i, j in types}


def _triple_groups(t: int, s: int, h: int, p: int) -> list[tuple]:
    """``p`` compatible triples among types ``(t+x, t-x)`` with ``|x| <= s``."""
    counts = [binom(h, t - i) * binom(h, t + i) if i <= s else 0 for i in range(t + 1)]
    return [("triple", tuple((t + x, t - x) for x in tri)) for tri in comp_triples(t, counts, p)]


def plan_main(params: Params, u: int) -> ColourPlan:
    p = main_construction_p(params, u)   # validates hypotheses
    a, b = main_a_b(params, u)
    n, k, c, r = params.n, params.k, params.c, params.r
    h = n // 2
    a_types = [(i, c - i) for i in range(u, c - u + 1)]
    b_types = [(i, c + 1 - i) for i in range(c + 2) if min(i, c + 1 - i) <= u - 1]
    supply = _supply(h, a_types + b_types)
    assert sum(supply[tp] for tp in a_types) == a and sum(supply[tp] for tp in b_types) == b

    if k % 2 == 0:
        case = "k even"
        a_pool = _PairPool({tp: supply[tp] for tp in a_types})
        b_pool = _PairPool({tp: supply[tp] for tp in b_types})
        colours = [b_pool.take(r // 2) + a_pool.take((k - r) // 2) for _ in range(p)]
    elif r != k - 1:
        case = "k odd, c even, r != k-1"
        t = c // 2
        triples = _triple_groups(t, t - u, h, p)
        left = {tp: supply[tp] for tp in a_types}
        for _, group in triples:
            for tp in group:
                left[tp] -= 1
        a_pool = _PairPool(left)
        b_pool = _PairPool({tp: supply[tp] for tp in b_types})
        colours = [[triples[idx]] + a_pool.take((k - r - 3) // 2) + b_pool.take(r // 2)
                   for idx in range(p)]
    else:
        case = "k odd, c even, r = k-1"
        centre = (c // 2, c // 2)
        b_pool = _PairPool({tp: supply[tp] for tp in b_types})
        colours = [[("single", (centre,))] + b_pool.take((k - 1) // 2) for _ in range(p)]

    plan = ColourPlan(params, "main", u, case, colours, supply)
    plan.check()
    return plan


def plan_alt(params: Params, u: int) -> ColourPlan:
    p = alt_construction_p(params, u)
    a, b = alt_a_b(params, u)
    n, k, c, r = params.n, params.k, params.c, params.r
    h = n // 2
    a_types = [(i, c - i) for i in range(c + 1) if max(i, c - i) >= u + 1]
    b_types = [(i, c + 1 - i) for i in range(c + 1 - u, u + 1)]
    supply = _supply(h, a_types + b_types)
    assert sum(supply[tp] for tp in a_types) == a and sum(supply[tp] for tp in b_types) == b
    t = (c + 1) // 2

    if r != 1:
        case = "r != 1"
        triples = _triple_groups(t, u - t, h, p)
        left = {tp: supply[tp] for tp in b_types}
        for _, group in triples:
            for tp in group:
                left[tp] -= 1
        b_pool = _PairPool(left)
        a_pool = _PairPool({tp: supply[tp] for tp in a_types})
        colours = [[triples[idx]] + b_pool.take((r - 3) // 2) + a_pool.take((k - r) // 2)
                   for idx in range(p)]
    else:
        case = "r = 1"
        a_pool = _PairPool({tp: supply[tp] for tp in a_types})
        colours = [[("single", ((t, t),))] + a_pool.take((k - 1) // 2) for _ in range(p)]

    plan = ColourPlan(params, "alt", u, case, colours, supply)
    plan.check()
    return plan

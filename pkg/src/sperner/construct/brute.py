"""Exact SP(n, k) for tiny n by maximum-clique search.

Vertices are the k-partitions of ``range(n)``; two are adjacent when no class
of one contains a class of the other.  The search is a bitset branch and
bound with a greedy-colouring bound (in the style of Tomita's MCQ/MCS and
San Segundo's BBMC).  Ties between maximum cliques are broken by the order of
discovery, which is fixed, so the result is deterministic.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import Sequence

from .system import PartitionSystem, from_mask

log = logging.getLogger(__name__)

BRUTE_CAP = 9


def k_partitions(n: int, k: int) -> list[tuple[int, ...]]:
    """All partitions of ``range(n)`` into ``k`` blocks, as tuples of bitmasks.

    Generated from restricted growth strings, so blocks are ordered by their
    smallest element.
    """
    out = []
    blocks = [0] * k

    def rec(x: int, used: int):
        if n - x < k - used:
            return
        if x == n:
            out.append(tuple(blocks))
            return
        for b in range(min(used + 1, k)):
            blocks[b] |= 1 << x
            rec(x + 1, max(used, b + 1))
            blocks[b] &= ~(1 << x)

    if 1 <= k <= n:
        rec(0, 0)
    return out


def _incompatibility(n: int, parts: list[tuple[int, ...]]) -> list[int]:
    full = 1 << n
    has = [0] * full
    for v, part in enumerate(parts):
        for cls in part:
            has[cls] |= 1 << v
    up, down = has[:], has[:]
    for bit in range(n):
        step = 1 << bit
        for mask in range(full):
            if mask & step:
                up[mask ^ step] |= up[mask]      # partitions with a class containing mask
                down[mask] |= down[mask ^ step]  # partitions with a class inside mask
    return [_or(up[c] | down[c] for c in part) for part in parts]


def _or(values) -> int:
    acc = 0
    for v in values:
        acc |= v
    return acc


def _bits(x: int):
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


class _Found(Exception):
    pass


def kk_shadow(m: int, size: int) -> int:
    """Least shadow on level ``size - 1`` of ``m`` sets of ``size`` (Kruskal-Katona)."""
    if size <= 0 or m <= 0:
        return 0
    total, level = 0, size
    while m > 0 and level > 0:
        a = level
        while math.comb(a + 1, level) <= m:
            a += 1
        m -= math.comb(a, level)
        total += math.comb(a, level - 1)
        level -= 1
    return total


def antichain_fits(n: int, sizes: Sequence[int]) -> bool:
    """Necessary condition for an antichain on ``range(n)`` with ``sizes[s]`` sets of size ``s``.

    Walking down the levels, the down-closure must hold the sets of the
    current level plus the shadow of the closure one level up, and the two
    are disjoint in an antichain.
    """
    closure = 0
    for s in range(n, 0, -1):
        closure = sizes[s] + kk_shadow(closure, s + 1)
        if closure > math.comb(n, s):
            return False
    return True


def profile_bound(n: int, base: Sequence[int], profiles: list[tuple[Sequence[int], int]]) -> int:
    """Most partitions addable to the class-size vector ``base`` without breaking ``antichain_fits``.

    ``profiles`` lists (class-size vector, available count) pairs.
    """
    best = 0

    def rec(i: int, sizes: list[int], got: int):
        nonlocal best
        best = max(best, got)
        if i == len(profiles):
            return
        vec, have = profiles[i]
        cur = sizes
        taken = 0
        while taken < have:
            nxt = [a + b for a, b in zip(cur, vec)]
            if not antichain_fits(n, nxt):
                break
            cur, taken = nxt, taken + 1
        # try larger counts first so ``best`` climbs quickly
        for t in range(taken, -1, -1):
            if got + t + sum(h for _, h in profiles[i + 1:]) <= best:
                break
            rec(i + 1, [a + t * b for a, b in zip(sizes, vec)], got + t)

    rec(0, list(base), 0)
    return best


class _MaxClique:
    """Bitset clique search with colouring and LYM bounds.

    The classes of a clique form an antichain, so their LYM sum
    ``sum 1/binom(n, |A|)`` is at most 1.  Every partition has a fixed weight
    given by its class-size profile, and the remaining budget bounds how many
    more partitions fit (cheapest profiles first).  A second form counts
    classes: only sets that are still a class of some candidate can be used,
    so filling the budget with available sets (largest binomial first) caps
    the number of new classes, hence of new partitions.

    The search runs top down: for ``t`` from the root bound downwards it asks
    whether a clique of size ``t`` exists, pruning against ``t - 1``.
    """

    def __init__(self, adj: list[int], weight: list[int], budget: int,
                 k: int, holders: Sequence[tuple[int, int]], by_sets: bool = False):
        self.adj = adj
        self.k = k
        self.weight = weight
        self.budget = budget
        self.by_sets = by_sets
        # (weight of one class, bitset of vertices holding it), cheapest first
        self.holders = sorted(holders, key=lambda h: h[0])
        groups: dict[int, int] = {}
        for v, w in enumerate(weight):
            groups[w] = groups.get(w, 0) | 1 << v
        self.groups = sorted(groups.items())
        self.profiles: list[tuple[list[int], int]] = []
        self.n = 0
        self.nodes = 0
        self.floor = 0
        self.found: list[int] = []

    def _lym(self, cand: int, left: int) -> int:
        fit = 0
        for w, members in self.groups:
            have = (cand & members).bit_count()
            if not have:
                continue
            take = min(have, left // w)
            fit += take
            left -= take * w
            if take < have:
                break
        return fit

    def _classes(self, cand: int, left: int) -> int:
        fit = 0
        for w, members in self.holders:
            if cand & members:
                if w > left:
                    break
                left -= w
                fit += 1
        return fit // self.k

    def _colour(self, cand: int) -> list[tuple[int, int]]:
        order = []
        colour = 0
        left = cand
        while left:
            colour += 1
            free = left
            while free:
                low = free & -free
                v = low.bit_length() - 1
                free &= ~self.adj[v] & ~low
                left ^= low
                order.append((v, colour))
        return order

    def bound(self, cand: int, left: int) -> int:
        if not cand or left <= 0:
            return 0
        return min(self._lym(cand, left), self._classes(cand, left))

    def _hit(self, clique: list[int]):
        if len(clique) > self.floor:
            self.found = clique[:]
            raise _Found

    def _by_colour(self, clique: list[int], cand: int, left: int):
        self.nodes += 1
        self._hit(clique)
        if len(clique) + self.bound(cand, left) <= self.floor:
            return
        for v, colour in reversed(self._colour(cand)):
            if len(clique) + colour <= self.floor:
                return
            if len(clique) + self._lym(cand, left) <= self.floor:
                return
            clique.append(v)
            self._by_colour(clique, cand & self.adj[v], left - self.weight[v])
            clique.pop()
            cand &= ~(1 << v)

    def _by_sets(self, clique: list[int], cand: int, left: int):
        """Branch on the available class with the fewest holders.

        Either some holder of that class joins the clique, or none does and
        the class drops out of the availability count.
        """
        self.nodes += 1
        self._hit(clique)
        if len(clique) + self.bound(cand, left) <= self.floor:
            return
        pick, fewest = 0, None
        for w, members in self.holders:
            if w > left:
                break
            cnt = (cand & members).bit_count()
            if cnt and (fewest is None or cnt < fewest):
                pick, fewest = members, cnt
                if cnt == 1:
                    break
        if fewest is None:
            return
        for v in _bits(cand & pick):
            clique.append(v)
            self._by_sets(clique, cand & self.adj[v], left - self.weight[v])
            clique.pop()
            cand &= ~(1 << v)
        self._by_sets(clique, cand, left)

    def _antichain(self, clique: list[int], cand: int) -> int:
        """Profile bound at a root; ``self.profiles`` holds (size vector, member bitset)."""
        if not self.profiles:
            return len(self.adj)
        base = [0] * (self.n + 1)
        for v in clique:
            for vec, members in self.profiles:
                if members >> v & 1:
                    base = [a + b for a, b in zip(base, vec)]
        avail = [(vec, (cand & members).bit_count()) for vec, members in self.profiles]
        return profile_bound(self.n, base, [a for a in avail if a[1]])

    def search(self, roots: list[tuple[list[int], int, int]]) -> list[int]:
        """Largest clique extending one of ``(clique, cand, left)``."""
        step = self._by_sets if self.by_sets else self._by_colour
        top = max(len(c) + (min(self.bound(cand, left), self._colour(cand)[-1][1],
                                self._antichain(c, cand)) if cand else 0)
                  for c, cand, left in roots)
        for target in range(top, 0, -1):
            self.floor = target - 1
            for clique, cand, left in roots:
                try:
                    step(list(clique), cand, left)
                except _Found:
                    return self.found
        return []


@dataclass
class BruteResult:
    value: int
    witness: PartitionSystem
    vertices: int
    nodes: int


def brute_force_sp(n: int, k: int, cap: int = BRUTE_CAP, symmetric: bool = False,
                   by_sets: bool = False, antichain: bool = True) -> BruteResult:
    """Exact SP(n, k) with a witness system.

    ``symmetric=True`` fixes the first partition up to relabelling the ground
    set (one representative per class-size profile), which is much faster but
    relies on that symmetry argument; the default search uses none.
    ``antichain=False`` drops the Kruskal-Katona profile bound at the root.
    """
    if n > cap:
        raise ValueError(f"n = {n} exceeds the brute-force cap {cap}")
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got n={n}, k={k}")
    parts = k_partitions(n, k)
    incompat = _incompatibility(n, parts)
    # partitions compatible with nothing (e.g. with a singleton class) cannot join a larger clique
    everything = (1 << len(parts)) - 1
    live = [v for v in range(len(parts)) if everything & ~incompat[v]]
    if not live:
        return BruteResult(1, PartitionSystem(n, k, [[from_mask(c) for c in parts[0]]]), len(parts), 0)

    # highest degree first; bit i of the search graph is vertex live_order[i]
    live_mask = _or(1 << v for v in live)
    degree = {v: (live_mask & ~incompat[v]).bit_count() for v in live}
    order = sorted(live, key=lambda v: (-degree[v], v))
    pos = {v: i for i, v in enumerate(order)}
    adj = []
    for v in order:
        row = 0
        for w in _bits(live_mask & ~incompat[v]):
            row |= 1 << pos[w]
        adj.append(row)

    budget = 1
    for size in range(1, n + 1):
        budget = math.lcm(budget, math.comb(n, size))
    weight = [sum(budget // math.comb(n, m.bit_count()) for m in parts[v]) for v in order]
    holders: dict[int, int] = {}
    for i, v in enumerate(order):
        for m in parts[v]:
            holders[m] = holders.get(m, 0) | 1 << i
    solver = _MaxClique(adj, weight, budget, k,
                        [(budget // math.comb(n, m.bit_count()), bits) for m, bits in holders.items()],
                        by_sets)
    if antichain:
        solver.n = n
        groups: dict[tuple[int, ...], int] = {}
        for i, v in enumerate(order):
            vec = [0] * (n + 1)
            for m in parts[v]:
                vec[m.bit_count()] += 1
            groups[tuple(vec)] = groups.get(tuple(vec), 0) | 1 << i
        solver.profiles = [(list(vec), members) for vec, members in sorted(groups.items())]
    if symmetric:
        roots, seen = [], set()
        for v in order:
            profile = tuple(sorted(m.bit_count() for m in parts[v]))
            if profile not in seen:
                seen.add(profile)
                roots.append(([pos[v]], adj[pos[v]], budget - weight[pos[v]]))
    else:
        roots = [([], (1 << len(order)) - 1, budget)]
    best = solver.search(roots)
    chosen = sorted(order[i] for i in best)
    log.info("brute SP(%d,%d): %d vertices, %d live, %d search nodes",
             n, k, len(parts), len(live), solver.nodes)
    witness = PartitionSystem(n, k, [[from_mask(c) for c in parts[v]] for v in chosen])
    return BruteResult(len(chosen), witness, len(parts), solver.nodes)

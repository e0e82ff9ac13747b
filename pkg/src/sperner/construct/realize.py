"""Turn per-colour edge types into concrete, pairwise distinct classes.

The ground set is split into parts, and the clutter is closed under any
permutation inside a part.  Each colour lists edge types (one size per part)
that add up to the part sizes.  Realisation runs in two stages:

1. Initial colouring.  Each colour slices a rotated copy of every part into
   blocks.  If a block collides with an edge already taken, seeded random
   permutations are tried.  As a last resort the next unused edge of that
   type is used.  The result has distinct edges, but a colour need not be a
   partition yet.
2. Balancing, one part ``Y`` at a time.  While some colour has two elements
   ``x, y`` of ``Y`` whose degrees differ by 2 or more, edges are swapped
   along a chain.  Each edge ``E`` with ``x`` in it and ``y`` not is traded
   for ``E - x + y``, which lies in the same permutation class.  The chain
   ends at an unused edge or at a colour in deficit on ``x``.  The sum of
   squared degrees strictly drops with every chain, so the loop terminates.
   Degrees on the other parts never change.  Since every colour's degree sum
   on ``Y`` equals ``|Y|``, balanced means each element has degree exactly 1.
"""

from __future__ import annotations

import logging
import random
from collections import deque
from itertools import combinations, product
from typing import Sequence

from ..errors import RealizationError

log = logging.getLogger(__name__)

TypeVec = tuple[int, ...]


class _Realizer:
    def __init__(self, parts: Sequence[Sequence[int]], colours: Sequence[Sequence[TypeVec]], seed: int):
        self.parts = [list(pt) for pt in parts]
        self.colours = [list(map(tuple, col)) for col in colours]
        self.rng = random.Random(seed)
        self.n = sum(len(pt) for pt in self.parts)
        for idx, col in enumerate(self.colours):
            for j, part in enumerate(self.parts):
                if sum(tp[j] for tp in col) != len(part):
                    raise ValueError(f"colour {idx} does not cover part {j} exactly")
        self.edges: list[list[int]] = [[0] * len(col) for col in self.colours]
        self.owner: dict[int, tuple[int, int]] = {}
        self._iters: dict[TypeVec, object] = {}
        self.fallbacks = 0
        self.chains = 0

    # -- stage 1 -----------------------------------------------------------

    def _slice(self, col: list[TypeVec], orders: list[list[int]]) -> list[int]:
        pos = [0] * len(self.parts)
        masks = []
        for tp in col:
            m = 0
            for j, size in enumerate(tp):
                for x in orders[j][pos[j]:pos[j] + size]:
                    m |= 1 << x
                pos[j] += size
            masks.append(m)
        return masks

    def _next_unused(self, tp: TypeVec) -> int:
        it = self._iters.get(tp)
        if it is None:
            it = product(*[combinations(part, size) for part, size in zip(self.parts, tp)])
            self._iters[tp] = it
        for pieces in it:
            m = 0
            for piece in pieces:
                for x in piece:
                    m |= 1 << x
            if m not in self.owner:
                return m
        raise RealizationError(f"edge supply of type {tp} exhausted")

    def initial(self, attempts: int = 8):
        for idx, col in enumerate(self.colours):
            orders = [pt[idx % len(pt):] + pt[:idx % len(pt)] if pt else [] for pt in self.parts]
            masks = self._slice(col, orders)
            tries = 0
            while (any(m in self.owner for m in masks) or len(set(masks)) < len(masks)) and tries < attempts:
                orders = [self.rng.sample(pt, len(pt)) for pt in self.parts]
                masks = self._slice(col, orders)
                tries += 1
            for slot, m in enumerate(masks):
                if m in self.owner or m in masks[:slot]:
                    m = self._next_unused(col[slot])
                    self.fallbacks += 1
                self.edges[idx][slot] = m
                self.owner[m] = (idx, slot)

    # -- stage 2 -----------------------------------------------------------

    def balance(self, part: Sequence[int]):
        if len(part) < 2:
            return
        pos = {x: a for a, x in enumerate(part)}
        deg = []
        for col_edges in self.edges:
            d = [0] * len(part)
            for m in col_edges:
                for x in part:
                    if m >> x & 1:
                        d[pos[x]] += 1
            deg.append(d)

        queue = deque(range(len(self.edges)))
        queued = [True] * len(self.edges)
        while queue:
            col = queue.popleft()
            queued[col] = False
            while True:
                d = deg[col]
                hi = max(range(len(part)), key=d.__getitem__)
                lo = min(range(len(part)), key=d.__getitem__)
                if d[hi] - d[lo] < 2:
                    break
                end = self._chain(col, part[hi], part[lo], hi, lo, deg)
                if end is not None and not queued[end]:
                    queue.append(end)
                    queued[end] = True

    def _chain(self, start: int, x: int, y: int, xi: int, yi: int, deg) -> int | None:
        bx, by = 1 << x, 1 << y
        parent: dict[int, tuple[int, int]] = {start: (-1, -1)}
        frontier = deque([start])
        found = None
        while frontier and found is None:
            col = frontier.popleft()
            for slot, m in enumerate(self.edges[col]):
                if not (m & bx) or (m & by):
                    continue
                image = m ^ bx ^ by
                own = self.owner.get(image)
                if own is None:
                    found = ("black", col, slot)
                    break
                nxt = own[0]
                if nxt in parent:
                    continue
                parent[nxt] = (col, slot)
                if deg[nxt][xi] - deg[nxt][yi] <= -1:
                    found = ("colour", nxt, None)
                    break
                frontier.append(nxt)
        if found is None:
            raise RealizationError(f"no balancing chain from colour {start} on ({x}, {y})")
        self.chains += 1

        # collect arcs (colour, slot) from start to the end of the chain
        arcs = []
        if found[0] == "black":
            arcs.append((found[1], found[2]))
            col = found[1]
            end = None
        else:
            col = end = found[1]
        while parent[col][0] != -1:
            prev, slot = parent[col]
            arcs.append((prev, slot))
            col = prev
        for col, slot in arcs:
            m = self.edges[col][slot]
            image = m ^ bx ^ by
            own = self.owner.get(image)
            self.edges[col][slot] = image
            self.owner[image] = (col, slot)
            deg[col][xi] -= 1
            deg[col][yi] += 1
            if own is None:
                del self.owner[m]
            else:
                oc, os_ = own
                self.edges[oc][os_] = m
                self.owner[m] = own
                deg[oc][xi] += 1
                deg[oc][yi] -= 1
        return end

    def run(self) -> list[list[int]]:
        self.initial()
        for part in self.parts:
            self.balance(part)
        full = (1 << self.n) - 1
        for idx, col_edges in enumerate(self.edges):
            acc = 0
            for m in col_edges:
                if acc & m:
                    raise RealizationError(f"colour {idx} is not a partition after balancing")
                acc |= m
            if acc != full:
                raise RealizationError(f"colour {idx} does not cover the ground set")
        if self.fallbacks or self.chains:
            log.info("realisation used %d fallback edges and %d balancing chains",
                     self.fallbacks, self.chains)
        return self.edges


def realize_types(parts, colours, seed: int = 0) -> list[list[int]]:
    """Distinct-edge realisation of per-colour type vectors, as bitmasks."""
    return _Realizer(parts, colours, seed).run()


def split_parts(n: int) -> list[list[int]]:
    """``X1 = {0..n/2-1}`` and ``X2 = {n/2..n-1}``."""
    if n % 2:
        raise ValueError("the halved ground set needs even n")
    h = n // 2
    return [list(range(h)), list(range(h, n))]


def realize(plan, seed: int = 0, split=None):
    """Concrete :class:`PartitionSystem` for a colour plan, verified before return."""
    from ..verify import verify_system
    from .system import PartitionSystem, from_mask

    n, k = plan.params.n, plan.params.k
    parts = split if split is not None else split_parts(n)
    colours = [plan.colour_types(idx) for idx in range(plan.p)]
    masks = realize_types(parts, colours, seed)
    system = PartitionSystem(n, k, [[from_mask(m) for m in col] for col in masks])
    report = verify_system(system)
    if not report.ok:
        raise RealizationError(f"realised system failed verification: {report.message}")
    return system

"""Independent checkers for partition systems, shadows and detecting arrays."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .bounds import Params
from .construct.system import PartitionSystem, check_partition, to_mask
from .exactmath import binom


@dataclass(frozen=True)
class Report:
    ok: bool
    message: str = "ok"
    witness: tuple | None = None   # (i, a, j, b): class a of partition i inside class b of partition j
    relation: str | None = None    # "equal" or "subset"

    def __bool__(self):
        return self.ok


def _supersets(mask: int, free: list[int], extra: int) -> Iterable[int]:
    for add in combinations(free, extra):
        m = mask
        for x in add:
            m |= 1 << x
        yield m


def verify_system(system: PartitionSystem) -> Report:
    """Check partition structure and the Sperner property.

    Reports the smallest witness ``(i, a, j, b)`` in lexicographic order.
    """
    n, k = system.n, system.k
    for idx, part in enumerate(system.partitions):
        try:
            check_partition(part, n, k, idx)
        except ValueError as exc:
            return Report(False, str(exc))

    where: dict[int, list[tuple[int, int]]] = defaultdict(list)
    by_size: dict[int, list[int]] = defaultdict(list)
    for i, a, cls in system.classes():
        m = to_mask(cls)
        if m not in where:
            by_size[len(cls)].append(m)
        where[m].append((i, a))

    bad: list[tuple] = []
    for locs in where.values():
        for x in locs:
            for y in locs:
                if x[0] != y[0]:
                    bad.append((*x, *y, "equal"))

    sizes = sorted(by_size)
    for s in sizes:
        for m in by_size[s]:
            free = [x for x in range(n) if not m >> x & 1]
            for t in sizes:
                if t <= s:
                    continue
                bigger = by_size[t]
                if binom(n - s, t - s) <= len(bigger):
                    hits = [sup for sup in _supersets(m, free, t - s) if sup in where]
                else:
                    hits = [sup for sup in bigger if sup & m == m]
                for sup in hits:
                    for x in where[m]:
                        for y in where[sup]:
                            bad.append((*x, *y, "subset"))
    if not bad:
        return Report(True)
    i, a, j, b, rel = min(bad)
    word = "equals" if rel == "equal" else "is a proper subset of"
    return Report(False, f"class {a} of partition {i} {word} class {b} of partition {j}",
                  (i, a, j, b), rel)


def verify_almost_uniform(system: PartitionSystem, params: Params) -> bool:
    if (system.n, system.k) != (params.n, params.k):
        raise ValueError(f"system is ({system.n},{system.k}), params are ({params.n},{params.k})")
    c, r = params.c, params.r
    for part in system.partitions:
        sizes = [len(cls) for cls in part]
        if sizes.count(c + 1) != r or sizes.count(c) != params.k - r:
            return False
    return True


# -- shadows -------------------------------------------------------------------

def shadow(family: Iterable[Iterable[int]], target: int, direction: str = "down",
           m: int | None = None) -> set[frozenset]:
    """All ``target``-sets below (``down``) or above (``up``, inside ``range(m)``) the family."""
    fam = [frozenset(s) for s in family]
    out: set[frozenset] = set()
    if direction == "down":
        for s in fam:
            if target > len(s):
                raise ValueError(f"down-shadow to size {target} of a {len(s)}-set")
            out.update(frozenset(sub) for sub in combinations(sorted(s), target))
    elif direction == "up":
        if m is None:
            raise ValueError("upper shadow needs the ground-set size m")
        for s in fam:
            if target < len(s):
                raise ValueError(f"up-shadow to size {target} of a {len(s)}-set")
            rest = [x for x in range(m) if x not in s]
            out.update(s | frozenset(add) for add in combinations(rest, target - len(s)))
    else:
        raise ValueError(f"direction must be 'down' or 'up', got {direction!r}")
    return out


@dataclass
class Clutter:
    n: int
    edges: list

    def __post_init__(self):
        self.edges = [frozenset(e) for e in self.edges]
        if len(set(self.edges)) != len(self.edges):
            raise ValueError("edges must be distinct")

    def is_clutter(self) -> bool:
        return not any(a < b for a in self.edges for b in self.edges)


def min_shadow_floor(clutter: Clutter, c: int) -> bool:
    """``|shadow_c(E)| >= min(|E|, binom(2c+1, c) + 1)`` for a clutter with edges of size ``>= c``."""
    if any(len(e) < c for e in clutter.edges):
        raise ValueError(f"every edge needs at least {c} elements")
    if not clutter.is_clutter():
        raise ValueError("edge set is not a clutter")
    size = len(shadow(clutter.edges, c))
    return size >= min(len(clutter.edges), binom(2 * c + 1, c) + 1)


# -- detecting arrays ------------------------------------------------------------

@dataclass(frozen=True)
class DetectingArray:
    """``rows x cols`` array; entry ``(i, j)`` is the 1-based class of element i in partition j."""

    k: int
    rows: tuple

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), (len(self.rows[0]) if self.rows else 0)


def to_detecting_array(system: PartitionSystem) -> DetectingArray:
    grid = [[0] * len(system) for _ in range(system.n)]
    for j, a, cls in system.classes():
        for x in cls:
            grid[x][j] = a + 1
    return DetectingArray(system.k, tuple(tuple(row) for row in grid))


def verify_detecting(arr: DetectingArray) -> Report:
    """No symbol's row set in one column lies inside another symbol's row set.

    All pairs ``(j1, l1) != (j2, l2)`` are checked, same column included.  Each
    row set is compared against the smaller ones by enumerating its subsets of
    that size, or by a direct scan when there are fewer candidates than subsets.
    """
    n, p = arr.shape
    if any(len(row) != p for row in arr.rows):
        raise ValueError("ragged array")
    sets = {(j, l): 0 for j in range(p) for l in range(1, arr.k + 1)}
    for i, row in enumerate(arr.rows):
        for j, sym in enumerate(row):
            if not 1 <= sym <= arr.k:
                raise ValueError(f"entry ({i},{j}) = {sym} outside 1..{arr.k}")
            sets[(j, sym)] |= 1 << i

    keys_of: dict[int, list] = defaultdict(list)
    for key, rows in sets.items():
        keys_of[rows].append(key)
    by_size: dict[int, list[int]] = defaultdict(list)
    for rows in keys_of:
        by_size[rows.bit_count()].append(rows)

    bad: list[tuple] = []
    for rows, keys in keys_of.items():
        bad.extend((k1, k2, "equal") for k1 in keys for k2 in keys if k1 != k2)
    sizes = sorted(by_size)
    for t in sizes:
        for big in by_size[t]:
            members = [i for i in range(n) if big >> i & 1]
            for s in sizes:
                if s >= t:
                    break
                small = by_size[s]
                if binom(t, s) <= len(small):
                    hits = [sub for sub in (to_mask(c) for c in combinations(members, s)) if sub in keys_of]
                else:
                    hits = [sub for sub in small if sub & big == sub]
                bad.extend((k1, k2, "subset") for sub in hits for k1 in keys_of[sub] for k2 in keys_of[big])
    if not bad:
        return Report(True)
    (j1, l1), (j2, l2), rel = min(bad)
    return Report(False, f"rows of symbol {l1} in column {j1} lie inside rows of symbol {l2} in column {j2}",
                  (j1, l1 - 1, j2, l2 - 1), rel)


__all__ = [
    "Report", "verify_system", "verify_almost_uniform", "shadow", "Clutter",
    "min_shadow_floor", "DetectingArray", "to_detecting_array", "verify_detecting",
]

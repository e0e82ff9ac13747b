from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence


@dataclass
class PartitionSystem:
    """Partitions of ``{0, ..., n-1}``, each into ``k`` classes.

    Structure (cover, disjointness, class count) is checked on construction;
    the Sperner property is the verifier's job.
    """

    n: int
    k: int
    partitions: list = field(default_factory=list)

    def __post_init__(self):
        self.partitions = [tuple(frozenset(cls) for cls in part) for part in self.partitions]
        for idx, part in enumerate(self.partitions):
            check_partition(part, self.n, self.k, idx)

    def __len__(self):
        return len(self.partitions)

    def classes(self) -> Iterable[tuple[int, int, frozenset]]:
        for i, part in enumerate(self.partitions):
            for a, cls in enumerate(part):
                yield i, a, cls

    def to_lists(self) -> list:
        return [[sorted(cls) for cls in part] for part in self.partitions]


def check_partition(part: Sequence[frozenset], n: int, k: int, idx: int = 0):
    if len(part) != k:
        raise ValueError(f"partition {idx} has {len(part)} classes, expected {k}")
    seen: set = set()
    for a, cls in enumerate(part):
        if not cls:
            raise ValueError(f"partition {idx} class {a} is empty")
        bad = [x for x in cls if not (isinstance(x, int) and 0 <= x < n)]
        if bad:
            raise ValueError(f"partition {idx} class {a} has elements outside 0..{n - 1}: {bad}")
        if seen & cls:
            raise ValueError(f"partition {idx} class {a} overlaps an earlier class on {sorted(seen & cls)}")
        seen |= cls
    if len(seen) != n:
        missing = sorted(set(range(n)) - seen)
        raise ValueError(f"partition {idx} misses elements {missing}")


def to_mask(cls: Iterable[int]) -> int:
    out = 0
    for x in cls:
        out |= 1 << x
    return out


def from_mask(mask: int) -> frozenset:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return frozenset(out)

"""The family of systems on ``n = 3k - 6`` points meeting the implicit upper bound."""

from __future__ import annotations

from ..errors import NotApplicable, RealizationError
from ..exactmath import binom
from .realize import realize_types
from .system import PartitionSystem, from_mask

# cross-part pairs avoid one part; triples sit inside one part
_A = [(0, 1, 1), (1, 0, 1), (1, 1, 0)]
_B = [(3, 0, 0), (0, 3, 0), (0, 0, 3)]


def _colour_groups(k: int, p: int) -> list[int]:
    """Group index (0, 1, 2) of every colour; sizes as equal as possible, larger first."""
    q, extra = divmod(p, 3)
    sizes = [q + (j < extra) for j in range(3)]
    return [j for j in range(3) for _ in range(sizes[j])]


def _a_counts(k: int, j: int) -> list[int]:
    if k % 3 == 0:
        return [2, 2, 2]
    if k % 6 == 1:
        return [4 if i == j else 1 for i in range(3)]
    return [0 if i == j else 3 for i in range(3)]   # k = 2 mod 3


def family_colours(k: int) -> list[list[tuple]]:
    """Per-colour type vectors (sizes on ``X1, X2, X3``)."""
    if k < 11 or k % 6 == 4:
        raise NotApplicable("k >= 11 and k != 4 mod 6")
    m = k - 2
    p = m * m // 2
    colours = []
    for j in _colour_groups(k, p):
        a = _a_counts(k, j)
        types = [t for i in range(3) for t in [_A[i]] * a[i]]
        for part in range(3):
            deg = sum(a[i] for i in range(3) if i != part)
            nb, rem = divmod(m - deg, 3)
            assert rem == 0 and nb >= 0, (k, j, part)
            types += [_B[part]] * nb
        assert len(types) == k
        colours.append(types)
    for i in range(3):
        used_a = sum(col.count(_A[i]) for col in colours)
        used_b = sum(col.count(_B[i]) for col in colours)
        assert used_a <= m * m and used_b <= binom(m, 3), (k, i, used_a, used_b)
    return colours


def build_3k6(k: int, seed: int = 0) -> PartitionSystem:
    from ..verify import verify_system

    colours = family_colours(k)
    m = k - 2
    parts = [list(range(i * m, (i + 1) * m)) for i in range(3)]
    masks = realize_types(parts, colours, seed)
    system = PartitionSystem(3 * m, k, [[from_mask(x) for x in col] for col in masks])
    report = verify_system(system)
    if not report.ok:
        raise RealizationError(f"family system failed verification: {report.message}")
    return system

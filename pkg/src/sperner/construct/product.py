from __future__ import annotations

from .system import PartitionSystem


def product_build(sys_a: PartitionSystem, sys_b: PartitionSystem) -> PartitionSystem:
    """Combine an ``(m,k)`` and an ``(n,k)`` system into an ``(m+n,k)`` one of size ``k*p*q``.

    Partition ``(i, j, y)`` joins class ``z`` of ``A_i`` with class ``z+y (mod k)``
    of ``B_j``; elements of ``B`` are shifted up by ``m``.
    """
    if sys_a.k != sys_b.k:
        raise ValueError(f"class counts differ: {sys_a.k} vs {sys_b.k}")
    k, m = sys_a.k, sys_a.n
    shifted = [[frozenset(x + m for x in cls) for cls in part] for part in sys_b.partitions]
    out = []
    for pa in sys_a.partitions:
        for pb in shifted:
            for y in range(k):
                out.append([pa[z] | pb[(z + y) % k] for z in range(k)])
    return PartitionSystem(m + sys_b.n, k, out)

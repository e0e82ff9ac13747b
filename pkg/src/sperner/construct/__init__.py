"""Explicit builders for Sperner partition systems."""

from ..bounds import Params, alt_admissible_us, alt_construction_p, main_admissible_us, main_construction_p
from ..errors import NotApplicable
from .brute import BRUTE_CAP, BruteResult, brute_force_sp, k_partitions
from .family import build_3k6, family_colours
from .plans import ColourPlan, plan_alt, plan_main
from .product import product_build
from .realize import realize, realize_types, split_parts
from .system import PartitionSystem, from_mask, to_mask
from .triples import binom_product_counts, check_e_condition, comp_triples


def single_partition(n: int, k: int) -> PartitionSystem:
    """One almost-uniform partition; a maximum system whenever ``n < 2k``."""
    params = Params(n, k)
    sizes = [params.c + 1] * params.r + [params.c] * (k - params.r)
    out, start = [], 0
    for s in sizes:
        out.append(range(start, start + s))
        start += s
    return PartitionSystem(n, k, [out])


def build_direct(n: int, k: int, seed: int = 0) -> PartitionSystem:
    """Largest system from the direct builders that apply to ``(n, k)``."""
    params = Params(n, k)
    options = []
    if n < 2 * k:
        options.append((1, "single", None))
    if n % 2 == 0:
        options += [(main_construction_p(params, u), "main", u) for u in main_admissible_us(params)]
        options += [(alt_construction_p(params, u), "alt", u) for u in alt_admissible_us(params)]
    if n == 3 * k - 6 and k >= 11 and k % 6 != 4:
        options.append(((k - 2) ** 2 // 2, "family3k6", None))
    if not options:
        raise NotApplicable(f"no direct builder applies to {params}")
    p, method, u = max(options, key=lambda o: (o[0], o[1] != "single"))
    if method == "single":
        return single_partition(n, k)
    if method == "family3k6":
        return build_3k6(k, seed)
    plan = plan_main(params, u) if method == "main" else plan_alt(params, u)
    return realize(plan, seed)


__all__ = [
    "BRUTE_CAP", "BruteResult", "ColourPlan", "PartitionSystem", "binom_product_counts",
    "brute_force_sp", "build_3k6", "build_direct", "check_e_condition", "comp_triples",
    "family_colours", "from_mask", "k_partitions", "plan_alt", "plan_main", "product_build",
    "realize", "realize_types", "single_partition", "split_parts", "to_mask",
]

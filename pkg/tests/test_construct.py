from collections import Counter

import pytest

from sperner.bounds import Params, aggregate, alt_admissible_us, main_admissible_us
from sperner.construct import (
    PartitionSystem, build_3k6, build_direct, family_colours, plan_alt, plan_main, product_build,
    realize, realize_types, single_partition, split_parts,
)
from sperner.construct.brute import antichain_fits, brute_force_sp, k_partitions, kk_shadow
from sperner.errors import NotApplicable
from sperner.verify import verify_almost_uniform, verify_system

from oracles import brute_sperner_check


def _find(pred, method):
    admissible = main_admissible_us if method == "main" else alt_admissible_us
    for n in range(8, 40, 2):
        for k in range(3, 10):
            if k > n:
                continue
            p = Params(n, k)
            for u in admissible(p):
                if pred(p, u):
                    return p, u
    raise LookupError


def test_plan_main_case_even_k():
    plan = plan_main(Params(10, 4), 1)
    assert plan.p == 10 and plan.case == "k even"
    assert plan.supply[(1, 1)] == 25
    assert sum(plan.supply[tp] for tp in [(0, 3), (3, 0)]) == 20
    for idx in range(plan.p):
        assert Counter(plan.colour_types(idx)) == Counter({(0, 3): 1, (3, 0): 1, (1, 1): 2})


def test_plan_main_18_4_consumption():
    plan = plan_main(Params(18, 4), 2)
    used = plan.consumption()
    assert plan.p == 648
    assert used[(2, 2)] == 1296 == plan.supply[(2, 2)]
    b_used = sum(v for (i, j), v in used.items() if i + j == 5)
    assert b_used == 1296 and sum(plan.supply[tp] for tp in plan.supply if sum(tp) == 5) == 2520
    assert plan.black()[(2, 2)] == 0


def test_plan_main_odd_cases():
    p, u = _find(lambda p, u: p.k % 2 == 1 and p.c % 2 == 0 and p.r not in (0, p.k - 1), "main")
    plan = plan_main(p, u)
    assert plan.case == "k odd, c even, r != k-1"
    assert all(plan.colours[i][0][0] == "triple" for i in range(plan.p))
    p, u = _find(lambda p, u: p.k % 2 == 1 and p.r == p.k - 1, "main")
    plan = plan_main(p, u)
    assert plan.case == "k odd, c even, r = k-1" and u == p.c // 2
    centre = (p.c // 2, p.c // 2)
    assert all(plan.colours[i][0] == ("single", (centre,)) for i in range(plan.p))


def test_plan_alt_cases():
    plan = plan_alt(Params(26, 7), 2)
    assert plan.p == 286 and plan.case == "r != 1"
    assert plan_alt(Params(28, 5), 3).p == 16016
    p, u = _find(lambda p, u: p.r == 1, "alt")
    plan = plan_alt(p, u)
    t = (p.c + 1) // 2
    assert plan.case == "r = 1"
    assert all(plan.colours[i][0] == ("single", ((t, t),)) for i in range(plan.p))


def test_plan_rejects_inapplicable():
    with pytest.raises(NotApplicable):
        plan_alt(Params(10, 4), 1)


def test_plan_sums_per_colour():
    for n, k, u, maker in [(10, 4, 1, plan_main), (22, 5, 2, plan_main), (26, 7, 2, plan_alt)]:
        plan = maker(Params(n, k), u)
        for idx in range(plan.p):
            types = plan.colour_types(idx)
            assert sum(i for i, _ in types) == sum(j for _, j in types) == n // 2


def test_realize_matches_plan_types():
    params = Params(10, 4)
    plan = plan_main(params, 1)
    system = realize(plan)
    half = set(range(5))
    assert len(system) == 10
    assert brute_sperner_check(system.partitions)
    assert verify_almost_uniform(system, params)
    for idx, part in enumerate(system.partitions):
        got = Counter((len(cls & half), len(cls - half)) for cls in part)
        assert got == Counter(plan.colour_types(idx))


def test_realize_alt_26_7():
    system = realize(plan_alt(Params(26, 7), 2))
    assert len(system) == 286 and verify_system(system).ok
    assert verify_almost_uniform(system, Params(26, 7))


def test_realize_is_seeded():
    plan = plan_main(Params(14, 4), 1)
    assert realize(plan, seed=3).partitions == realize(plan, seed=3).partitions


def test_single_colour_realisation():
    masks = realize_types(split_parts(6), [[(1, 2), (2, 1)]])
    assert len(masks) == 1 and masks[0][0] | masks[0][1] == 0b111111


def test_build_3k6_sizes():
    for k, want in [(11, 40), (12, 50), (13, 60)]:
        system = build_3k6(k)
        assert (system.n, len(system)) == (3 * k - 6, want)
        assert verify_system(system).ok
        sizes = Counter(len(cls) for part in system.partitions for cls in part)
        assert sizes == Counter({2: 6 * want, 3: (k - 6) * want})


def test_build_3k6_preconditions():
    with pytest.raises(NotApplicable):
        build_3k6(10)
    with pytest.raises(NotApplicable):
        build_3k6(16)  # 16 = 4 mod 6


def test_family_colour_split_k13():
    colours = family_colours(13)
    heavy = Counter(max(range(3), key=lambda i: col.count([(0, 1, 1), (1, 0, 1), (1, 1, 0)][i]))
                    for col in colours)
    assert sorted(heavy.values()) == [20, 20, 20]


def test_product_sizes_and_validity():
    a = build_direct(10, 4)
    b = single_partition(4, 4)
    assert len(product_build(b, a)) == 4 * len(a)
    prod = product_build(a, a)
    assert (prod.n, len(prod)) == (20, 4 * 10 * 10)
    assert verify_system(prod).ok


def test_product_k_mismatch():
    with pytest.raises(ValueError, match="class counts"):
        product_build(single_partition(4, 4), single_partition(5, 5))


def test_partition_system_rejects_bad_input():
    with pytest.raises(ValueError, match="misses"):
        PartitionSystem(4, 2, [[[0], [1, 2]]])
    with pytest.raises(ValueError, match="classes"):
        PartitionSystem(4, 2, [[[0, 1, 2, 3]]])
    with pytest.raises(ValueError, match="overlaps"):
        PartitionSystem(3, 2, [[[0, 1], [1, 2]]])


def test_k_partitions_counts():
    # Stirling numbers of the second kind
    assert len(k_partitions(5, 2)) == 15
    assert len(k_partitions(6, 3)) == 90
    assert len(k_partitions(9, 4)) == 7770


@pytest.mark.parametrize("n,k,want", [(4, 2, 3), (5, 2, 4), (6, 3, 5), (6, 2, 10), (7, 2, 15)])
def test_brute_small(n, k, want):
    res = brute_force_sp(n, k)
    assert res.value == want == len(res.witness)
    assert brute_sperner_check(res.witness.partitions)


def test_brute_cap():
    with pytest.raises(ValueError, match="cap"):
        brute_force_sp(10, 3)


def test_brute_symmetric_mode_agrees_with_full_search():
    for n in range(2, 8):
        for k in range(1, n + 1):
            assert brute_force_sp(n, k).value == brute_force_sp(n, k, symmetric=True).value


@pytest.mark.slow
def test_brute_within_aggregate_range():
    for n in range(2, 10):
        for k in range(1, n + 1):
            cell = aggregate(k, n)[n]
            value = brute_force_sp(n, k).value
            assert cell.lower.value <= value <= cell.upper.value, (n, k)


def test_kk_shadow_matches_exhaustive_minimum():
    from itertools import combinations

    for n, size in [(5, 2), (5, 3), (6, 3)]:
        pool = [frozenset(c) for c in combinations(range(n), size)]
        for m in range(1, min(len(pool), 8) + 1):
            least = min(len({s - {x} for s in fam for x in s}) for fam in combinations(pool, m))
            assert kk_shadow(m, size) == least, (n, size, m)


def test_antichain_fits_examples():
    # all 2-subsets of [4] form an antichain; adding one more set cannot fit
    assert antichain_fits(4, [0, 0, 6, 0, 0])
    assert not antichain_fits(4, [0, 0, 6, 1, 0])
    # nine 3-sets of [9] shadow at least ten pairs, so 27 further pairs do not fit
    assert not antichain_fits(9, [0, 0, 27, 9] + [0] * 6)
    assert antichain_fits(9, [0, 0, 24, 8] + [0] * 6)


def test_brute_antichain_bound_does_not_change_values():
    for n in range(2, 8):
        for k in range(1, n + 1):
            assert brute_force_sp(n, k).value == brute_force_sp(n, k, antichain=False).value

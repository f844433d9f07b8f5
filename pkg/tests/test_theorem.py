"""Tests for torsion-generation verdicts and the homology cross-check."""

import random
from math import gcd, lcm

import pytest

from mcgtorsion.intlinalg import AbelianGroup
from mcgtorsion.theorem import (
    CrossCheckError,
    CrossCheckReport,
    Verdict,
    cross_check,
    h1_of_mcg,
    torsion_generation_verdict,
    torsion_image_subgroup,
)


def expected_verdict(g: int, r: int) -> tuple[bool, set[int], int]:
    """Oracle: the generation table spelled out case by case."""
    if g == 0:
        return True, {r - 1, r}, 1
    if g == 1:
        return True, {2, 3, 4}, 1
    if g == 2:
        if r % 5 == 4:
            return False, set(), 5
        return True, {2, 5}, 1
    return True, {2}, 1


def subgroup_by_enumeration(
    group: AbelianGroup, allowed: set[int]
) -> tuple[int, ...]:
    """Oracle: enumerate elements killed by an allowed order, close under
    addition, and read off the subgroup's invariant factors by brute force.

    Only for small finite groups, as a direct product of cyclic ranges.
    """
    factors = group.invariant_factors
    elements = [()]
    for d in factors:
        elements = [e + (x,) for e in elements for x in range(d)]
    killed = [
        e
        for e in elements
        if any(all((m * x) % d == 0 for x, d in zip(e, factors)) for m in allowed)
    ]
    closure = {tuple(0 for _ in factors)}
    frontier = list(killed)
    while frontier:
        e = frontier.pop()
        for k in killed:
            s = tuple((x + y) % d for x, y, d in zip(e, k, factors))
            if s not in closure:
                closure.add(s)
                frontier.append(s)
    # Invariant factors of a finite abelian group from element orders:
    # the largest factor is the group exponent; recurse on the quotient
    # size.  For the tiny groups here, exponent and size suffice since
    # every subgroup is a product of at most two cyclic factors.
    size = len(closure)
    if size == 1:
        return ()
    exponent = 1
    for e in closure:
        element_order = 1
        for x, d in zip(e, factors):
            if x:
                element_order = lcm(element_order, d // gcd(x, d))
        exponent = lcm(exponent, element_order)
    if exponent == size:
        return (exponent,)
    assert size % exponent == 0
    return (size // exponent, exponent)


class TestVerdictType:
    def test_index_links_to_flag(self):
        with pytest.raises(ValueError, match="exactly when the index is 1"):
            Verdict(True, frozenset({2}), 5)
        with pytest.raises(ValueError, match="exactly when the index is 1"):
            Verdict(False, frozenset(), 1)

    def test_index_positive(self):
        with pytest.raises(ValueError, match="index must be >= 1"):
            Verdict(True, frozenset({2}), 0)


class TestTorsionGenerationVerdict:
    def test_grid_against_oracle(self):
        for g in range(6):
            for r in range(21):
                if g == 0 and r < 3:
                    continue
                flag, orders, index = expected_verdict(g, r)
                verdict = torsion_generation_verdict(g, r)
                assert verdict.generated_by_torsion == flag
                assert verdict.generator_orders == frozenset(orders)
                assert verdict.torsion_subgroup_index == index

    def test_exception_family(self):
        for r in range(101):
            verdict = torsion_generation_verdict(2, r)
            assert verdict.generated_by_torsion == (r % 5 != 4)

    def test_named_cases(self):
        assert torsion_generation_verdict(2, 9) == Verdict(False, frozenset(), 5)
        assert torsion_generation_verdict(3, 17) == Verdict(True, frozenset({2}), 1)
        assert torsion_generation_verdict(0, 5) == Verdict(True, frozenset({4, 5}), 1)

    def test_degenerate_genus_zero(self):
        for r in range(3):
            with pytest.raises(ValueError, match="at least 3 boundary"):
                torsion_generation_verdict(0, r)

    def test_negative_inputs(self):
        with pytest.raises(ValueError, match="nonnegative"):
            torsion_generation_verdict(-1, 0)
        with pytest.raises(ValueError, match="nonnegative"):
            torsion_generation_verdict(1, -1)


class TestH1OfMcg:
    def test_closed_surface_values(self):
        assert h1_of_mcg(1, 0) == AbelianGroup((12,))
        assert h1_of_mcg(2, 0) == AbelianGroup((10,))
        assert h1_of_mcg(3, 0).is_trivial

    def test_boundary_swap_factor(self):
        assert h1_of_mcg(2, 9) == AbelianGroup((2, 10))
        assert h1_of_mcg(1, 2) == AbelianGroup((2, 12))
        assert h1_of_mcg(3, 1).is_trivial
        assert h1_of_mcg(4, 2) == AbelianGroup((2,))

    def test_one_boundary_circle_changes_nothing(self):
        for g in range(1, 6):
            assert h1_of_mcg(g, 1) == h1_of_mcg(g, 0)

    def test_genus_zero_rejected(self):
        with pytest.raises(ValueError, match="genus >= 1"):
            h1_of_mcg(0, 5)


class TestTorsionImageSubgroup:
    def test_index_five_example(self):
        subgroup, index = torsion_image_subgroup(AbelianGroup((2, 10)), {2, 3})
        assert subgroup == AbelianGroup((2, 2))
        assert index == 5

    def test_full_group_example(self):
        subgroup, index = torsion_image_subgroup(AbelianGroup((10,)), {2, 5})
        assert subgroup == AbelianGroup((10,))
        assert index == 1

    def test_trivial_group(self):
        subgroup, index = torsion_image_subgroup(AbelianGroup(()), {2, 7})
        assert subgroup.is_trivial
        assert index == 1

    def test_infinite_group_rejected(self):
        with pytest.raises(ValueError, match="finite"):
            torsion_image_subgroup(AbelianGroup((2, 0)), {2})

    def test_empty_or_small_orders_rejected(self):
        with pytest.raises(ValueError, match="at least one"):
            torsion_image_subgroup(AbelianGroup((4,)), set())
        with pytest.raises(ValueError, match=">= 2"):
            torsion_image_subgroup(AbelianGroup((4,)), {1, 2})

    def test_matches_enumeration_oracle(self):
        rng = random.Random(81)
        for _ in range(120):
            d = rng.choice((2, 3, 4, 6))
            factors = [d]
            if rng.random() < 0.6:
                factors = [rng.choice([x for x in (2, 3) if d % x == 0]), d]
            group = AbelianGroup(tuple(factors))
            allowed = set(rng.sample((2, 3, 4, 5, 6, 7), rng.randint(1, 3)))
            subgroup, index = torsion_image_subgroup(group, allowed)
            assert subgroup.invariant_factors == subgroup_by_enumeration(
                group, allowed
            )
            assert group.order() == index * subgroup.order()

    def test_monotone_in_allowed_orders(self):
        rng = random.Random(82)
        group = AbelianGroup((2, 12))
        pool = (2, 3, 4, 5, 6)
        for _ in range(60):
            small = set(rng.sample(pool, rng.randint(1, 3)))
            large = small | set(rng.sample(pool, rng.randint(1, 2)))
            sub_small, index_small = torsion_image_subgroup(group, small)
            sub_large, index_large = torsion_image_subgroup(group, large)
            assert index_small % index_large == 0
            assert sub_large.order() % sub_small.order() == 0


class TestCrossCheck:
    def test_genus_two_full_index(self):
        report = cross_check(2, 8)
        assert isinstance(report, CrossCheckReport)
        assert report.index == 1
        assert report.allowed_orders == frozenset({2, 3, 5})

    def test_genus_two_index_five(self):
        report = cross_check(2, 9)
        assert report.index == 5
        assert report.allowed_orders == frozenset({2, 3})
        assert report.homology == AbelianGroup((2, 10))
        assert report.torsion_subgroup == AbelianGroup((2, 2))

    def test_genus_one(self):
        report = cross_check(1, 7)
        assert report.index == 1
        assert report.allowed_orders == frozenset({2, 3, 4})

    def test_whole_grid_passes(self):
        for g in (1, 2):
            for r in range(21):
                report = cross_check(g, r)
                assert report.verdict.torsion_subgroup_index == report.index

    def test_other_genera_rejected(self):
        with pytest.raises(ValueError, match="genus 1 and 2 only"):
            cross_check(3, 0)

    def test_error_type_is_catchable(self):
        assert issubclass(CrossCheckError, RuntimeError)

import itertools
import random
from math import factorial

import pytest

from ramsys.perm import (
    Cycle,
    CycleType,
    Permutation,
    canonical_representative,
    centralizer_membership,
    centralizer_order,
    class_size,
    compose,
    conjugate,
    cycle_count,
    cycle_decomposition,
    cycle_string,
    cycle_type,
    enumerate_cycle_types,
    inverse,
    support_blocks,
)


def perm(*images):
    return Permutation(tuple(images))


def all_perms(n):
    return [Permutation(images) for images in itertools.permutations(range(1, n + 1))]


class TestPermutation:
    def test_rejects_non_bijections(self):
        with pytest.raises(ValueError):
            perm(1, 1, 3)
        with pytest.raises(ValueError):
            perm(0, 1)
        with pytest.raises(ValueError):
            perm(2, 3)

    def test_identity_and_call(self):
        e = Permutation.identity(4)
        assert e.images == (1, 2, 3, 4)
        assert e(3) == 3

    def test_from_cycles(self):
        p = Permutation.from_cycles(5, [(1, 2), (3, 4, 5)])
        assert p.images == (2, 1, 4, 5, 3)
        with pytest.raises(ValueError):
            Permutation.from_cycles(3, [(1, 2), (2, 3)])
        with pytest.raises(ValueError):
            Permutation.from_cycles(3, [(1, 4)])


class TestCycleDecomposition:
    def test_identity(self):
        cycles = cycle_decomposition(Permutation.identity(3))
        assert cycles == [Cycle((1,)), Cycle((2,)), Cycle((3,))]

    def test_single_three_cycle(self):
        assert cycle_decomposition(perm(2, 3, 1)) == [Cycle((1, 2, 3))]

    def test_disjoint_cycles(self):
        # 1->2, 2->1, 3->4, 4->5, 5->3
        assert cycle_decomposition(perm(2, 1, 4, 5, 3)) == [
            Cycle((1, 2)),
            Cycle((3, 4, 5)),
        ]

    def test_partitions_all_points_and_is_anchored(self):
        rng = random.Random(11)
        for _ in range(100):
            p = Permutation(tuple(rng.sample(range(1, 8), 7)))
            cycles = cycle_decomposition(p)
            points = [x for c in cycles for x in c.points]
            assert sorted(points) == list(range(1, 8))
            anchors = [c.points[0] for c in cycles]
            assert anchors == sorted(anchors)
            for c in cycles:
                assert c.points[0] == min(c.points)
                for src, dst in zip(c.points, c.points[1:] + c.points[:1]):
                    assert p(src) == dst


class TestCycleType:
    def test_examples(self):
        assert str(cycle_type(Permutation.identity(3))) == "1^3"
        assert str(cycle_type(perm(2, 3, 1))) == "3^1"
        assert str(cycle_type(Permutation.from_cycles(5, [(1, 2), (3, 4, 5)]))) == "2^1 3^1"

    def test_validation(self):
        with pytest.raises(ValueError):
            CycleType(3, (1, 0, 1))  # parts sum to 4, not 3
        with pytest.raises(ValueError):
            CycleType(3, (0, 0))  # wrong length
        with pytest.raises(ValueError):
            CycleType(3, (4, 1, -1))  # negative multiplicity
        assert CycleType(3, (1, 1, 0)) == CycleType.parse("1^1 2^1")

    def test_parse_token_form(self):
        lam = CycleType.parse("1^1 2^2")
        assert lam.n == 5
        assert lam.multiplicities == (1, 2, 0, 0, 0)
        assert str(lam) == "1^1 2^2"

    def test_parse_bracket_form(self):
        assert CycleType.parse("[2,2,1]") == CycleType.parse("1^1 2^2")

    def test_parse_rejects_garbage(self):
        for text in ("", "2^", "^2", "1^0", "0^1", "x", "[1,2", "[]", "1^1 1^2"):
            with pytest.raises(ValueError):
                CycleType.parse(text)

    def test_parts_roundtrip(self):
        lam = CycleType.from_parts([3, 1, 1])
        assert lam.parts() == (3, 1, 1)
        assert str(lam) == "1^2 3^1"


class TestOfCycleCount:
    def test_examples(self):
        assert cycle_count(Permutation.identity(3)) == 3
        assert cycle_count(perm(2, 3, 1)) == 1
        assert cycle_count(Permutation.from_cycles(5, [(1, 2), (4, 5)])) == 3


class TestComposeInverse:
    def test_identity_neutral(self):
        q = perm(3, 1, 2)
        assert compose(Permutation.identity(3), q) == q
        assert compose(q, Permutation.identity(3)) == q

    def test_inverse_of_three_cycle(self):
        assert inverse(perm(2, 3, 1)) == perm(3, 1, 2)

    def test_involution(self):
        t = perm(2, 1)
        assert compose(t, t) == Permutation.identity(2)

    def test_composition_order(self):
        # compose(p, q)(x) = p(q(x))
        p = Permutation.from_cycles(3, [(1, 2)])
        q = Permutation.from_cycles(3, [(2, 3)])
        assert compose(p, q)(2) == p(q(2)) == p(3) == 3

    def test_size_mismatch(self):
        with pytest.raises(ValueError):
            compose(Permutation.identity(2), Permutation.identity(3))

    def test_inverse_roundtrip_random(self):
        rng = random.Random(5)
        for _ in range(100):
            p = Permutation(tuple(rng.sample(range(1, 7), 6)))
            assert compose(p, inverse(p)) == Permutation.identity(6)
            assert compose(inverse(p), p) == Permutation.identity(6)


class TestConjugate:
    def test_identity(self):
        x = perm(2, 3, 1)
        assert conjugate(Permutation.identity(3), x) == x

    def test_relabelling(self):
        g = Permutation.from_cycles(3, [(2, 3)])
        x = Permutation.from_cycles(3, [(1, 2)])
        assert conjugate(g, x) == Permutation.from_cycles(3, [(1, 3)])

    def test_preserves_cycle_type_random(self):
        rng = random.Random(17)
        for _ in range(1000):
            g = Permutation(tuple(rng.sample(range(1, 6), 5)))
            x = Permutation(tuple(rng.sample(range(1, 6), 5)))
            assert cycle_type(conjugate(g, x)) == cycle_type(x)

    def test_matches_product_formula(self):
        rng = random.Random(23)
        for _ in range(200):
            g = Permutation(tuple(rng.sample(range(1, 6), 5)))
            x = Permutation(tuple(rng.sample(range(1, 6), 5)))
            assert conjugate(g, x) == compose(compose(g, x), inverse(g))


class TestClassSizes:
    def test_transpositions_of_s3(self):
        assert class_size(CycleType.parse("1^1 2^1")) == 3

    def test_three_cycles_of_s3(self):
        assert class_size(CycleType.parse("3^1")) == 2

    def test_four_cycles_of_s5_brute_force(self):
        lam = CycleType.parse("1^1 4^1")
        brute = sum(1 for p in all_perms(5) if cycle_type(p) == lam)
        assert brute == 30
        assert class_size(lam) == brute

    def test_centralizer_order_examples(self):
        assert centralizer_order(CycleType.parse("3^1")) == 3
        assert centralizer_order(CycleType.parse("1^3")) == 6

    def test_centralizer_order_brute_force_2_2(self):
        sigma = Permutation.from_cycles(4, [(1, 2), (3, 4)])
        brute = sum(
            1 for g in all_perms(4) if compose(g, sigma) == compose(sigma, g)
        )
        assert brute == 8
        assert centralizer_order(cycle_type(sigma)) == brute

    def test_class_sizes_partition_group(self):
        for n in range(1, 9):
            assert sum(class_size(lam) for lam in enumerate_cycle_types(n)) == factorial(n)

    def test_orbit_stabilizer(self):
        for n in range(1, 9):
            for lam in enumerate_cycle_types(n):
                assert class_size(lam) * centralizer_order(lam) == factorial(n)

    def test_centralizer_order_by_conjugation_count(self):
        # |{g : g x g^-1 = x}| agrees with the closed form for every x, n <= 5
        for n in range(1, 6):
            group = all_perms(n)
            for x in group:
                fixed = sum(1 for g in group if conjugate(g, x) == x)
                assert fixed == centralizer_order(cycle_type(x))


class TestEnumerateCycleTypes:
    def test_small_counts(self):
        assert {str(lam) for lam in enumerate_cycle_types(3)} == {"1^3", "1^1 2^1", "3^1"}
        assert len(enumerate_cycle_types(4)) == 5
        assert len(enumerate_cycle_types(5)) == 7

    def test_canonical_order_n4(self):
        assert [str(lam) for lam in enumerate_cycle_types(4)] == [
            "4^1",
            "1^1 3^1",
            "2^2",
            "1^2 2^1",
            "1^4",
        ]

    def test_each_type_once(self):
        for n in range(1, 9):
            types = enumerate_cycle_types(n)
            assert len(types) == len(set(types))
            assert all(lam.n == n for lam in types)

    def test_rejects_bad_n(self):
        with pytest.raises(ValueError):
            enumerate_cycle_types(0)


class TestCanonicalRepresentative:
    def test_identity(self):
        assert canonical_representative(CycleType.parse("1^3")) == Permutation.identity(3)

    def test_three_cycle(self):
        assert canonical_representative(CycleType.parse("3^1")) == perm(2, 3, 1)

    def test_fixed_point_then_two_cycles(self):
        rep = canonical_representative(CycleType.parse("1^1 2^2"))
        assert rep == Permutation.from_cycles(5, [(2, 3), (4, 5)])

    def test_has_right_type(self):
        for n in range(1, 8):
            for lam in enumerate_cycle_types(n):
                assert cycle_type(canonical_representative(lam)) == lam


class TestSupportBlocks:
    def test_mixed(self):
        sigma = Permutation.from_cycles(5, [(1, 2), (3, 4, 5)])
        assert support_blocks(sigma) == {2: frozenset({1, 2}), 3: frozenset({3, 4, 5})}

    def test_identity(self):
        assert support_blocks(Permutation.identity(3)) == {1: frozenset({1, 2, 3})}

    def test_double_transposition(self):
        sigma = Permutation.from_cycles(4, [(1, 2), (3, 4)])
        assert support_blocks(sigma) == {2: frozenset({1, 2, 3, 4})}

    def test_blocks_partition_points(self):
        rng = random.Random(3)
        for _ in range(50):
            p = Permutation(tuple(rng.sample(range(1, 8), 7)))
            blocks = support_blocks(p)
            union = set().union(*blocks.values())
            assert union == set(range(1, 8))
            lam = cycle_type(p)
            for length, block in blocks.items():
                assert len(block) == length * lam.multiplicities[length - 1]


class TestCentralizerMembership:
    def test_self(self):
        sigma = perm(2, 3, 1)
        assert centralizer_membership(sigma, sigma)

    def test_transposition_vs_three_cycle(self):
        sigma = perm(2, 3, 1)
        rho = Permutation.from_cycles(3, [(1, 2)])
        assert not centralizer_membership(rho, sigma)

    def test_agrees_with_direct_commutation_exhaustive(self):
        for n in range(1, 5):
            group = all_perms(n)
            for sigma in group:
                for rho in group:
                    direct = compose(rho, sigma) == compose(sigma, rho)
                    assert centralizer_membership(rho, sigma) == direct

    def test_agrees_with_direct_commutation_random_s5(self):
        rng = random.Random(29)
        group = all_perms(5)
        for _ in range(10_000):
            rho, sigma = rng.choice(group), rng.choice(group)
            direct = compose(rho, sigma) == compose(sigma, rho)
            assert centralizer_membership(rho, sigma) == direct

    def test_size_mismatch(self):
        with pytest.raises(ValueError):
            centralizer_membership(Permutation.identity(3), Permutation.identity(4))


class TestCycleString:
    def test_formats(self):
        assert cycle_string(Permutation.identity(3)) == "()"
        assert cycle_string(Permutation.from_cycles(5, [(1, 2), (4, 5)])) == "(1 2)(4 5)"
        assert cycle_string(Permutation.identity(2), include_fixed=True) == "(1)(2)"

"""Partitions, Kostka numbers, and symmetric-group characters."""

import itertools
import math

import pytest

from hallcanon import symchar


class TestPartitions:
    def test_counts(self):
        # number of partitions of n
        want = {0: 1, 1: 1, 2: 2, 3: 3, 4: 5, 5: 7, 6: 11, 7: 15}
        for n, k in want.items():
            assert len(list(symchar.partitions(n))) == k

    def test_max_part(self):
        got = list(symchar.partitions(4, max_part=2))
        assert sorted(got) == [(1, 1, 1, 1), (2, 1, 1), (2, 2)]

    def test_is_partition_and_normalize(self):
        assert symchar.is_partition((3, 2, 2))
        assert not symchar.is_partition((2, 3))
        assert symchar.normalize_partition([1, 3, 2]) == (3, 2, 1)

    def test_dominates(self):
        assert symchar.dominates((3, 1), (2, 2))
        assert symchar.dominates((2, 2), (2, 1, 1))
        assert not symchar.dominates((2, 2), (3, 1))
        # incomparable pair
        assert not symchar.dominates((3, 1, 1, 1), (2, 2, 2))
        assert not symchar.dominates((2, 2, 2), (3, 1, 1, 1))


class TestKostka:
    def test_known_values(self):
        assert symchar.kostka((2,), (1, 1)) == 1
        assert symchar.kostka((1, 1), (2,)) == 0
        assert symchar.kostka((2, 1), (1, 1, 1)) == 2
        assert symchar.kostka((3, 2, 1), (1, 1, 1, 1, 1, 1)) == 16
        assert symchar.kostka((2, 2), (2, 1, 1)) == 1

    def test_triangularity(self):
        # K(lam, mu) != 0 iff lam dominates mu; K(lam, lam) = 1
        for n in range(1, 7):
            for lam in symchar.partitions(n):
                assert symchar.kostka(lam, lam) == 1
                for mu in symchar.partitions(n):
                    nz = symchar.kostka(lam, mu) != 0
                    assert nz == symchar.dominates(lam, mu)

    def test_content_permutation_invariance_via_totals(self):
        # sum over shapes of K(lam, mu) * dim-like multiplicities reproduces
        # the multinomial: number of words with content mu equals
        # sum_lam K(lam, mu) * f^lam-like count via RSK; check the simplest
        # consequence sum_lam K(lam, (1^n)) * K(lam, (1^n)) = n!
        for n in range(1, 6):
            ones = tuple([1] * n)
            total = sum(symchar.kostka(lam, ones) ** 2
                        for lam in symchar.partitions(n))
            assert total == math.factorial(n)


class TestCharacters:
    def test_class_sizes_sum_to_group_order(self):
        for n in range(1, 7):
            assert sum(symchar.class_size(mu)
                       for mu in symchar.partitions(n)) == math.factorial(n)
            for mu in symchar.partitions(n):
                assert symchar.class_size(mu) * \
                    symchar.centralizer_size(mu) == math.factorial(n)

    def test_perm_character_counts_fixed_points(self):
        # the permutation character of S_n acting on set partitions into
        # blocks of sizes lam, evaluated at a permutation of cycle type mu,
        # counts the arrangements fixed by it; brute force for n <= 5
        for n in range(1, 6):
            for lam in symchar.partitions(n):
                for mu in symchar.partitions(n):
                    assert symchar.perm_character(lam, mu) == \
                        _brute_perm_character(lam, mu)

    def test_specht_first_column(self):
        # value at the identity is the number of standard tableaux
        dims = {(3,): 1, (2, 1): 2, (1, 1, 1): 1,
                (4,): 1, (3, 1): 3, (2, 2): 2, (2, 1, 1): 3, (1, 1, 1, 1): 1}
        for lam, d in dims.items():
            ones = tuple([1] * sum(lam))
            assert symchar.specht_character(lam, ones) == d

    def test_trivial_and_sign(self):
        for n in range(1, 6):
            for mu in symchar.partitions(n):
                assert symchar.specht_character((n,), mu) == 1
                sign = (-1) ** (n - len(mu))
                assert symchar.specht_character(tuple([1] * n), mu) == sign

    def test_character_table_orthogonality(self):
        # row orthogonality with class sizes
        for n in range(1, 6):
            parts = list(symchar.partitions(n))
            table = symchar.character_table(n)
            order = math.factorial(n)
            for la in parts:
                for lb in parts:
                    s = sum(symchar.class_size(mu) *
                            table[(la, mu)] * table[(lb, mu)]
                            for mu in parts)
                    assert s == (order if la == lb else 0)

    def test_perm_decomposes_with_kostka(self):
        # the permutation character is the Kostka-weighted sum of irreducible
        # characters with shapes dominating lam
        for n in range(1, 6):
            for lam in symchar.partitions(n):
                for mu in symchar.partitions(n):
                    want = sum(symchar.kostka(nu, lam) *
                               symchar.specht_character(nu, mu)
                               for nu in symchar.partitions(n))
                    assert symchar.perm_character(lam, mu) == want


def _brute_perm_character(lam, mu):
    """Count ordered set partitions of {0..n-1} with block sizes lam fixed by
    a fixed permutation of cycle type mu."""
    n = sum(lam)
    perm = _perm_of_type(mu)
    count = 0
    for assignment in _assignments(n, lam):
        if all(assignment[perm[i]] == assignment[i] for i in range(n)):
            count += 1
    return count


def _perm_of_type(mu):
    perm = {}
    start = 0
    for part in mu:
        cyc = list(range(start, start + part))
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            perm[a] = b
        start += part
    return perm


def _assignments(n, lam):
    """All ways to color {0..n-1} with color i used lam[i] times."""
    colors = []
    for i, part in enumerate(lam):
        colors.extend([i] * part)
    seen = set()
    for arrangement in itertools.permutations(colors):
        if arrangement not in seen:
            seen.add(arrangement)
            yield arrangement

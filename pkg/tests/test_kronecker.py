"""The tame two-arrow quiver: classification, orbits, and symmetric bases."""

import random

from hallcanon import ffrep, symchar
from hallcanon.hallalg import HallAlgebra, eval_int_poly
from hallcanon.kronecker import (KroneckerBases, KroneckerFamily, num_points,
                                 points_of_degree)
from hallcanon.laurent import LaurentPoly

V = LaurentPoly.v_power
FAM = KroneckerFamily()

SMALL_WEIGHTS = [(1, 0), (0, 1), (1, 1), (2, 1), (1, 2), (2, 2)]


class TestPoints:
    def test_num_points_matches_enumeration(self):
        for p in (2, 3, 5):
            for d in (1, 2, 3):
                assert num_points(p, d) == len(points_of_degree(p, d))

    def test_projective_line_count(self):
        for p in (2, 3, 5, 7):
            assert num_points(p, 1) == p + 1


class TestClassification:
    def test_roundtrip_on_catalogued_classes(self):
        for p in (2, 3):
            for w in SMALL_WEIGHTS:
                for c in FAM.concrete_labels_of_weight(w, p):
                    rep = FAM.rep_concrete(c, p)
                    assert FAM.classify_concrete(rep) == c

    def test_random_representations(self):
        rng = random.Random(41)
        for p in (2, 3):
            for _ in range(40):
                d0, d1 = rng.randrange(4), rng.randrange(4)
                if d0 + d1 == 0:
                    continue
                rep = ffrep.QuiverRep(
                    FAM.quiver, p, (d0, d1),
                    [[[rng.randrange(p) for _ in range(d1)]
                      for _ in range(d0)] for _ in range(2)])
                c = FAM.classify_concrete(rep)
                assert FAM.weight(c) == (d0, d1)
                assert ffrep.is_isomorphic(rep, FAM.rep_concrete(c, p))

    def test_orbit_count_matches_concretizations(self):
        for p in (2, 3, 5):
            for w in SMALL_WEIGHTS:
                for g in FAM.labels_of_weight(w):
                    if not FAM.realizable(g, p):
                        continue
                    assert FAM.orbit_count(g, p) == \
                        len(FAM.concretizations(g, p))

    def test_realizability_needs_enough_points(self):
        # four distinct degree-1 points do not exist over F_2
        g = ((), tuple((1, (1,)) for _ in range(4)), ())
        assert not FAM.realizable(g, 2)
        assert FAM.realizable(g, 3)
        assert FAM.realizable(g, 5)


class TestSymmetricBases:
    def test_regular_sum_generic(self):
        kb = KroneckerBases()
        for k in (1, 2):
            want = {}
            for lab in FAM.labels_of_weight((k, k)):
                if not lab[0] and not lab[2]:
                    want[lab] = V(-2 * k)
            assert kb.p_tilde(k).coeffs == want

    def test_regular_sum_specialized(self):
        kb = KroneckerBases()
        for p in (2, 3):
            spec = HallAlgebra(FAM, p)
            for k in (1, 2):
                got = spec.generic_to_element(kb.p_tilde(k)).coeffs
                want = {}
                for lab in spec.concrete_labels_of_weight((k, k)):
                    if not lab[0] and not lab[2]:
                        want[lab] = V(-2 * k)
                assert got == want

    def test_kostka_coefficients(self):
        kb = KroneckerBases()
        for m in (1, 2):
            for lam in symchar.partitions(m):
                for mu in symchar.partitions(m):
                    label = ((), kb._pivot_config(mu), ())
                    _, b = kb.coefficient_AB(lam, label)
                    want = V(-m) * LaurentPoly.from_int(
                        symchar.kostka(lam, mu))
                    assert b == want, (lam, mu)

    def test_character_coefficients(self):
        kb = KroneckerBases()
        for m in (1, 2):
            for lam in symchar.partitions(m):
                for mu in symchar.partitions(m):
                    label = ((), tuple(sorted((d, (1,)) for d in mu)), ())
                    a, b = kb.coefficient_AB(lam, label)
                    assert a == V(-m) * LaurentPoly.from_int(
                        symchar.perm_character(lam, mu))
                    assert b == V(-m) * LaurentPoly.from_int(
                        symchar.specht_character(lam, mu))

    def test_schur_via_jacobi_trudi_inverse(self):
        # sum over lam of K(lam, mu) S_lam == P~_mu for small mu
        kb = KroneckerBases()
        for mu in [(1,), (2,), (1, 1)]:
            m = sum(mu)
            acc = kb.alg.zero()
            for lam in symchar.partitions(m):
                acc = acc + kb.schur_S(lam).scale(
                    LaurentPoly.from_int(symchar.kostka(lam, mu)))
            assert acc == kb.p_tilde_partition(mu)


class TestCanonical:
    def test_weight_21_exact(self):
        kb = KroneckerBases()
        cb = dict(kb.kron_canonical((2, 1)))
        assert len(cb) == 3
        semis = ((0, 0), (), (0,))
        regp = ((0,), (1,), ())
        prep1 = ((1,), (), ())
        assert cb[semis] == {semis: LaurentPoly.one()}
        assert cb[regp] == {regp: LaurentPoly.one(),
                            semis: V(-1) + V(-3)}
        assert cb[prep1] == {prep1: LaurentPoly.one(),
                             semis: -V(-2) + V(-4),
                             regp: V(-1)}

    def test_mirror_symmetry_12(self):
        # swapping the two vertices exchanges the (2,1) and (1,2) spaces
        kb = KroneckerBases()
        cb21 = dict(kb.kron_canonical((2, 1)))
        cb12 = dict(kb.kron_canonical((1, 2)))

        def mirror(g):
            return (g[2], g[1], g[0])

        assert {mirror(g): {mirror(k): c for k, c in coords.items()}
                for g, coords in cb21.items()} == cb12

    def test_bar_invariance_22(self):
        kb = KroneckerBases()
        system = kb.bar_system((2, 2))
        system.check_involution()
        for g, coords in kb.kron_canonical((2, 2)):
            assert coords[g].is_one()
            for other, c in coords.items():
                if other != g:
                    assert c.in_v_inverse(strict=True)
                    assert kb.g_less(other, g)

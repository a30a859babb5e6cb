"""Cyclic quivers: nilpotent classes, aperiodicity, and the canonical basis.

CyclicFamily(n) is the oriented cycle on n + 1 vertices; labels are
multisegments ((i, l), mult) of start vertex and length.
"""

from hallcanon import ffrep
from hallcanon.cyclicq import (CyclicBases, CyclicFamily, cyclic_quiver,
                               is_aperiodic, is_nilpotent, segment_rep)
from hallcanon.hallalg import GenericHall, HallPolyCache
from hallcanon.laurent import LaurentPoly


def bases_for(n, tmp_path):
    fam = CyclicFamily(n)
    alg = GenericHall(fam, cache=HallPolyCache(str(tmp_path / "c.jsonl")))
    return CyclicBases(n, algebra=alg)


def _small_weights(n):
    if n == 1:
        return [(1, 0), (1, 1), (2, 1), (2, 2)]
    return [(1, 0, 0), (1, 1, 0), (1, 1, 1), (2, 1, 1)]


class TestFamily:
    def test_labels_count_nilpotent_isoclasses(self):
        # multisegments of weight w biject with nilpotent isoclasses; count
        # the latter by brute orbit enumeration over F_2
        p = 2
        for n in (1, 2):
            fam = CyclicFamily(n)
            q = cyclic_quiver(n)
            for w in _small_weights(n)[:2]:
                brute = [r for r in ffrep.brute_orbit_isoclasses(q, p, w)
                         if is_nilpotent(r)]
                assert len(fam.labels_of_weight(w)) == len(brute)

    def test_classify_roundtrip(self):
        for n in (1, 2):
            fam = CyclicFamily(n)
            for p in (2, 3):
                for w in _small_weights(n):
                    for g in fam.labels_of_weight(w):
                        assert fam.classify(fam.rep(g, p)) == g

    def test_segment_reps_nilpotent(self):
        for n in (1, 2):
            for i in range(n + 1):
                for l in (1, 2, 3):
                    rep = segment_rep(n, 2, i, l)
                    assert is_nilpotent(rep)
                    assert sum(rep.dims) == l

    def test_weight_additive(self):
        fam = CyclicFamily(2)
        g = (((0, 1), 2), ((1, 3), 1))
        w = fam.weight(g)
        want = [0, 0, 0]
        for (i, l), m in g:
            sw = fam.seg_weight(i, l)
            want = [a + m * b for a, b in zip(want, sw)]
        assert w == tuple(want)

    def test_aperiodicity(self):
        # two vertices: a class is periodic when some segment length appears
        # starting at every vertex
        assert not is_aperiodic((((0, 2), 1), ((1, 2), 1)), 2)
        assert is_aperiodic((((0, 1), 1), ((0, 2), 1)), 2)
        assert is_aperiodic((((0, 1), 1),), 2)
        fam = CyclicFamily(1)
        assert not fam.aperiodic((((0, 1), 1), ((1, 1), 1)))


class TestCanonical:
    def test_monomial_lead(self, tmp_path):
        bases = bases_for(1, tmp_path)
        fam = CyclicFamily(1)
        for w in [(1, 1), (2, 1)]:
            for pi in fam.labels_of_weight(w):
                if not fam.aperiodic(pi):
                    continue
                exp = bases.monomial_expansion(pi)
                assert exp[pi].is_one()
                for other, c in exp.items():
                    if other != pi:
                        assert bases.hom_order_less(other, pi)

    def test_canonical_bar_invariant(self, tmp_path):
        for n in (1, 2):
            bases = bases_for(n, tmp_path)
            weights = [(1, 1), (2, 1)] if n == 1 else [(1, 1, 0), (1, 1, 1)]
            for w in weights:
                system = bases.bar_system(w)
                system.check_involution()
                for pi, coords in bases.cyclic_canonical(w):
                    assert coords[pi].is_one()
                    for other, c in coords.items():
                        if other != pi:
                            assert c.in_v_inverse(strict=True)

    def test_pbw_triangular(self, tmp_path):
        # E_pi = <M(pi)> + lower terms supported on periodic classes only
        bases = bases_for(1, tmp_path)
        fam = CyclicFamily(1)
        for w in [(1, 1), (2, 1)]:
            for pi in fam.labels_of_weight(w):
                if not fam.aperiodic(pi):
                    continue
                coords, in_mono = bases.pbw_coords(pi)
                assert coords[pi].is_one()
                assert in_mono[pi].is_one()
                for k in coords:
                    if k != pi:
                        assert not fam.aperiodic(k)
                        assert bases.hom_order_less(k, pi)

    def test_canonical_indexed_by_aperiodic(self, tmp_path):
        bases = bases_for(1, tmp_path)
        fam = CyclicFamily(1)
        for w in [(1, 1), (2, 1), (2, 2)]:
            aper = [pi for pi in fam.labels_of_weight(w) if fam.aperiodic(pi)]
            assert len(bases.cyclic_canonical(w)) == len(aper)

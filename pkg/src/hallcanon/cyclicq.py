"""Nilpotent representations of cyclic quivers.

The cyclic quiver with m = n + 1 vertices has arrows i -> i+1 (mod m).
Nilpotent isomorphism classes are multisegments: multisets of segments
(i, l) standing for the indecomposable with top the simple at i and length
l.  A multisegment is aperiodic when for every length l some vertex i has
no segment (i, l).
"""

from __future__ import annotations

from fractions import Fraction

from .errors import AmbiguousFingerprint, MonomialSearchFailed
from .ffrep import Quiver, QuiverRep, direct_sum_all, hom_dim
from .laurent import LaurentPoly
from .triangular import TriangularSystem
from . import gfp


def cyclic_quiver(n):
    m = n + 1
    if m < 2:
        raise ValueError("need at least two vertices (no loops)")
    return Quiver(m, [(i, (i + 1) % m) for i in range(m)])


def segment_rep(n, p, i, l):
    """Indecomposable nilpotent module with top the simple at vertex i and
    length l: basis x_0..x_{l-1}, x_k at vertex i+k, arrows x_k -> x_{k+1}."""
    q = cyclic_quiver(n)
    m = n + 1
    verts = [(i + k) % m for k in range(l)]
    dims = tuple(verts.count(v) for v in range(m))
    # index of x_k within the basis of its vertex
    slot = []
    seen = [0] * m
    for v in verts:
        slot.append(seen[v])
        seen[v] += 1
    maps = [gfp.zeros(dims[(v + 1) % m], dims[v]) for v in range(m)]
    for k in range(l - 1):
        v = verts[k]
        maps[v][slot[k + 1]][slot[k]] = 1
    return QuiverRep(q, p, dims, maps)


def is_nilpotent(rep):
    """True when the composite around the cycle is eventually zero."""
    m = rep.quiver.n
    p = rep.p
    comp = gfp.identity(rep.dims[0])
    for _ in range(rep.total_dim + 1):
        for v in range(m):
            comp = gfp.mat_mul(rep.maps[v], comp, p)
    return all(all(x == 0 for x in row) for row in comp)


class CyclicFamily:
    """Generic labels: multisegments, as sorted tuples of ((i, l), mult)."""

    name = "cyclic"

    def __init__(self, n):
        self.n = n
        self.m = n + 1
        self.quiver = cyclic_quiver(n)
        self._seg_reps = {}
        self._homs = {}

    # -- labels ------------------------------------------------------------

    def seg_weight(self, i, l):
        verts = [(i + k) % self.m for k in range(l)]
        return tuple(verts.count(v) for v in range(self.m))

    def weight(self, label):
        w = [0] * self.m
        for (i, l), mult in label:
            sw = self.seg_weight(i, l)
            for v in range(self.m):
                w[v] += mult * sw[v]
        return tuple(w)

    def aperiodic(self, label):
        lengths = {}
        for (i, l), _ in label:
            lengths.setdefault(l, set()).add(i)
        return all(len(vs) < self.m for vs in lengths.values())

    def labels_of_weight(self, w):
        total = sum(w)
        segs = [(i, l) for l in range(1, total + 1) for i in range(self.m)
                if all(a <= b for a, b in zip(self.seg_weight(i, l), w))]
        out = []

        def rec(k, rem, acc):
            if all(x == 0 for x in rem):
                out.append(tuple(sorted(acc)))
                return
            if k == len(segs):
                return
            i, l = segs[k]
            sw = self.seg_weight(i, l)
            sup = [v for v in range(self.m) if sw[v]]
            mmax = min(rem[v] // sw[v] for v in sup)
            for mult in range(mmax + 1):
                nrem = [rem[v] - mult * sw[v] for v in range(self.m)]
                if any(x < 0 for x in nrem):
                    break
                rec(k + 1, nrem, acc + ([((i, l), mult)] if mult else []))

        rec(0, list(w), [])
        return out

    def simple_label(self, v):
        return (((v, 1), 1),)

    # -- representations ----------------------------------------------------

    def _segments(self, total):
        return [(i, l) for l in range(1, total + 1) for i in range(self.m)]

    def seg_rep(self, i, l, p):
        key = (i, l, p)
        if key not in self._seg_reps:
            self._seg_reps[key] = segment_rep(self.n, p, i, l)
        return self._seg_reps[key]

    def rep(self, label, p):
        parts = []
        for (i, l), mult in label:
            parts.extend([self.seg_rep(i, l, p)] * mult)
        return direct_sum_all(parts, self.quiver, p)

    def hom_matrix(self, total, p):
        key = (total, p)
        if key not in self._homs:
            segs = self._segments(total)
            reps = [self.seg_rep(i, l, p) for i, l in segs]
            self._homs[key] = [[hom_dim(a, b) for b in reps] for a in reps]
        return self._homs[key]

    def classify(self, rep):
        """Multisegment of a nilpotent representation, by Hom fingerprints
        against all segments of length up to the total dimension."""
        total = rep.total_dim
        if total == 0:
            return ()
        segs = self._segments(total)
        probes = [self.seg_rep(i, l, rep.p) for i, l in segs]
        fing = [hom_dim(x, rep) for x in probes]
        h = self.hom_matrix(total, rep.p)
        n = len(segs)
        aug = [[Fraction(h[j][k]) for k in range(n)] + [Fraction(fing[j])]
               for j in range(n)]
        row = 0
        for col in range(n):
            piv = next((r for r in range(row, n) if aug[r][col]), None)
            if piv is None:
                raise AmbiguousFingerprint("singular segment Hom matrix")
            aug[row], aug[piv] = aug[piv], aug[row]
            pv = aug[row][col]
            aug[row] = [x / pv for x in aug[row]]
            for r in range(n):
                if r != row and aug[r][col]:
                    f = aug[r][col]
                    aug[r] = [x - f * y for x, y in zip(aug[r], aug[row])]
            row += 1
        label = []
        for k, (i, l) in enumerate(segs):
            x = aug[k][n]
            if x.denominator != 1 or x < 0:
                raise AmbiguousFingerprint(f"non-integral multiplicity {x}")
            if x:
                label.append(((i, l), int(x)))
        label = tuple(sorted(label))
        if self.weight(label) != rep.dims:
            raise AmbiguousFingerprint("weight mismatch in classification")
        return label

    def decomposition(self, label):
        return [(seg, mult, 1) for seg, mult in label]

    def concrete_labels_of_weight(self, w, p):
        return self.labels_of_weight(w)

    def realizable(self, label, p):
        return True

    # generic and concrete labels coincide for cyclic quivers
    def concrete_label(self, label, p):
        return label

    def generic_key(self, concrete):
        return concrete

    def rep_concrete(self, concrete, p):
        return self.rep(concrete, p)

    def classify_concrete(self, rep):
        return self.classify(rep)

    @property
    def tag(self):
        return f"cyclic[{self.n}]"


# ---------------------------------------------------------------------------
# Hom order, monomials, PBW basis E_pi, canonical basis c_pi


MAX_MONOMIAL_CANDIDATES = 5000


def is_aperiodic(pi, nvertices):
    """True iff for every length l some vertex carries no segment (i, l)."""
    lengths = {}
    for (i, l), _ in pi:
        lengths.setdefault(l, set()).add(i)
    return all(len(vs) < nvertices for vs in lengths.values())


class CyclicBases:
    """Monomial basis, inductive PBW basis E_pi on aperiodic multisegments,
    and canonical basis c_pi of the composition subalgebra."""

    def __init__(self, n, algebra=None, p=2, check_prime=3):
        from . import hallalg
        self.family = CyclicFamily(n)
        self.alg = algebra if algebra is not None \
            else hallalg.GenericHall(self.family)
        self.p = p
        self.check_prime = check_prime
        self._fings = {}
        self._monomials = {}
        self._pbw = {}

    # -- Hom order ---------------------------------------------------------

    def _fingerprint(self, pi, p):
        """dim Hom(S_i[l], M(pi)) over all segments with l <= |pi|."""
        fam = self.family
        total = sum(fam.weight(pi))
        segs = fam._segments(total)
        h = fam.hom_matrix(total, p)
        idx = {seg: k for k, seg in enumerate(segs)}
        out = [0] * len(segs)
        for seg, mult in pi:
            col = idx[seg]
            for row in range(len(segs)):
                out[row] += mult * h[row][col]
        return tuple(out)

    def fingerprint(self, pi):
        hit = self._fings.get(pi)
        if hit is None:
            hit = self._fingerprint(pi, self.p)
            assert hit == self._fingerprint(pi, self.check_prime)
            self._fings[pi] = hit
        return hit

    def hom_order_less(self, a, b):
        """a < b iff Hom(M, M(a)) strictly dominates Hom(M, M(b)) over all
        indecomposable nilpotent M (equivalently all segments)."""
        if a == b or self.family.weight(a) != self.family.weight(b):
            return False
        fa, fb = self.fingerprint(a), self.fingerprint(b)
        return all(x >= y for x, y in zip(fa, fb)) and fa != fb

    def sorted_labels(self, labels):
        """Deterministic linear extension of the Hom order."""
        pending = sorted(labels)
        out = []
        while pending:
            nxt = next(x for x in pending
                       if not any(self.hom_order_less(y, x) for y in pending
                                  if y != x))
            pending.remove(nxt)
            out.append(nxt)
        return out

    # -- monomials ----------------------------------------------------------

    def _candidate_words(self, pi):
        from itertools import islice, permutations, product
        from .dynkin import radical_layers
        layers = radical_layers(self.family.rep(pi, self.p))
        per_layer = []
        for lay in layers:
            base = sorted(lay, reverse=True)
            rest = [list(t) for t in permutations(base) if list(t) != base]
            per_layer.append([base] + rest)
        seen = set()
        for combo in islice(product(*per_layer), MAX_MONOMIAL_CANDIDATES):
            word = tuple((v, lay[v]) for ordering, lay in zip(combo, layers)
                         for v in ordering)
            # Same vertex in consecutive radical layers sometimes needs a
            # single divided power rather than a split product, so offer the
            # adjacency-merged variant too.
            merged = [list(word[0])]
            for v, m in word[1:]:
                if merged[-1][0] == v:
                    merged[-1][1] += m
                else:
                    merged.append([v, m])
            for cand in (tuple(tuple(e) for e in merged), word):
                if cand not in seen:
                    seen.add(cand)
                    yield cand

    def cyclic_monomial(self, pi):
        """A verified word whose divided-power product expands as
        <M(pi)> + strictly smaller bracket terms."""
        hit = self._monomials.get(pi)
        if hit is not None:
            return hit[0]
        assert self.family.aperiodic(pi)
        for word in self._candidate_words(pi):
            coords = self.alg.bracket_coords(self.alg.divided_power_word(word))
            lead = coords.get(pi)
            if lead is None or not lead.is_one():
                continue
            if all(pp == pi or self.hom_order_less(pp, pi) for pp in coords):
                self._monomials[pi] = (word, coords)
                return word
        raise MonomialSearchFailed(f"no verified monomial for {pi}")

    def monomial_expansion(self, pi):
        self.cyclic_monomial(pi)
        return self._monomials[pi][1]

    # -- PBW basis E_pi -----------------------------------------------------

    def pbw_coords(self, pi):
        """Bracket-basis coordinates of E_pi, plus its expansion in the
        monomial basis: E_pi = m_pi - sum of eta E_pi' over aperiodic
        pi' < pi."""
        hit = self._pbw.get(pi)
        if hit is not None:
            return hit
        fam = self.family
        mono = self.monomial_expansion(pi)
        coords = dict(mono)
        in_mono = {pi: LaurentPoly.one()}
        for pp, eta in mono.items():
            if pp == pi or not fam.aperiodic(pp):
                continue
            sub_coords, sub_in_mono = self.pbw_coords(pp)
            for k, c in sub_coords.items():
                coords[k] = coords.get(k, LaurentPoly.zero()) - eta * c
            for k, c in sub_in_mono.items():
                in_mono[k] = in_mono.get(k, LaurentPoly.zero()) - eta * c
        coords = {k: c for k, c in coords.items() if not c.is_zero()}
        in_mono = {k: c for k, c in in_mono.items() if not c.is_zero()}
        # closed form: leading 1 at pi, lower support non-aperiodic only
        assert coords.get(pi) == LaurentPoly.one()
        for k in coords:
            if k != pi:
                assert not fam.aperiodic(k) and self.hom_order_less(k, pi)
        self._pbw[pi] = (coords, in_mono)
        return self._pbw[pi]

    def cyclic_pbw(self, pi):
        """E_pi as a HallElement."""
        coords, _ = self.pbw_coords(pi)
        x = self.alg.zero()
        for k, c in coords.items():
            x = x + self.alg.bracket(k).scale(c)
        return x

    # -- canonical basis ----------------------------------------------------

    def bar_system(self, nu):
        """TriangularSystem on aperiodic multisegments of weight nu with
        r = the expansion of bar(E_pi) in the E basis."""
        fam = self.family
        labels = self.sorted_labels(
            [x for x in fam.labels_of_weight(tuple(nu)) if fam.aperiodic(x)])
        e_coords = {pi: self.pbw_coords(pi)[0] for pi in labels}
        r = {}
        for pi in labels:
            _, in_mono = self.pbw_coords(pi)
            bar = {}
            for pp, c in in_mono.items():
                cb = c.bar()
                for k, d in self.monomial_expansion(pp).items():
                    bar[k] = bar.get(k, LaurentPoly.zero()) + cb * d
            # peel aperiodic leading terms from the top down
            for high in reversed(labels):
                c = bar.get(high)
                if c is None or c.is_zero():
                    continue
                r[(high, pi)] = c
                for k, d in e_coords[high].items():
                    bar[k] = bar.get(k, LaurentPoly.zero()) - c * d
            leftover = {k: c for k, c in bar.items() if not c.is_zero()}
            assert not leftover, (pi, leftover)
        return TriangularSystem(labels, self.hom_order_less, r)

    def cyclic_canonical(self, nu):
        """[(pi, expansion of c_pi in the E basis)], increasing order."""
        system = self.bar_system(nu)
        system.check_involution()
        p = system.solve()
        out = []
        for pi in system.labels:
            coords = {pi: LaurentPoly.one()}
            for low in system.below(pi):
                c = p.get((low, pi))
                if c is not None:
                    assert c.in_v_inverse(strict=True)
                    coords[low] = c
            out.append((pi, coords))
        return out

    def canonical_bracket_coords(self, pi, e_expansion):
        """Bracket-basis coordinates of c_pi from its E-basis expansion."""
        out = {}
        for pp, c in e_expansion.items():
            for k, d in self.pbw_coords(pp)[0].items():
                out[k] = out.get(k, LaurentPoly.zero()) + c * d
        return {k: c for k, c in out.items() if not c.is_zero()}

    def element_from_bracket_coords(self, coords):
        x = self.alg.zero()
        for k, c in coords.items():
            x = x + self.alg.bracket(k).scale(c)
        return x

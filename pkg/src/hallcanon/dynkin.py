"""Representations of Dynkin quivers.

For a quiver whose underlying graph is a simply-laced Dynkin diagram,
isomorphism classes of representations over any field correspond to
multiplicity functions on the positive roots.  Positive roots and the
indecomposable representation attached to each are produced by reflection
functors along an admissible sequence of sinks.
"""

from __future__ import annotations

from functools import lru_cache

from . import gfp
from .errors import (AmbiguousFingerprint, CycleDetected,
                     MonomialSearchFailed, NotDynkin)
from .ffrep import Quiver, QuiverRep, direct_sum_all, hom_dim
from .laurent import LaurentPoly
from .triangular import TriangularSystem

MAX_ROOTS = 200


def reversed_at(quiver, v):
    """The quiver with every arrow incident to v reversed."""
    arrows = [(t, s) if s == v or t == v else (s, t)
              for s, t in quiver.arrows]
    return Quiver(quiver.n, arrows)


def admissible_sequence(quiver):
    """A sink ordering i_1..i_n: i_k is a sink of the quiver obtained by
    reversing at i_1..i_{k-1}.  Reverse topological order works."""
    return list(reversed(quiver.topological_order()))


def simple_reflection(quiver, i, vec):
    """s_i acting on dimension vectors via the symmetrized Euler form."""
    e = tuple(1 if j == i else 0 for j in range(quiver.n))
    c = quiver.sym_form(vec, e)  # Cartan pairing; (e, e) = 2
    return tuple(vec[j] - (c if j == i else 0) for j in range(quiver.n))


def is_finite_type(quiver):
    """True when the Tits form is positive definite (i.e. the underlying
    graph is a disjoint union of ADE diagrams)."""
    from fractions import Fraction
    n = quiver.n
    c = [[0] * n for _ in range(n)]
    for i in range(n):
        c[i][i] = 2
    for s, t in quiver.arrows:
        c[s][t] -= 1
        c[t][s] -= 1
    # leading principal minors must all be positive
    m = [[Fraction(x) for x in row] for row in c]
    for k in range(n):
        if m[k][k] <= 0:
            return False
        for i in range(k + 1, n):
            f = m[i][k] / m[k][k]
            if f:
                m[i] = [a - f * b for a, b in zip(m[i], m[k])]
    return True


def positive_roots(quiver):
    """Positive roots of a finite-type quiver: the positive vectors of Tits
    form 1, grown from the simples by adding one simple at a time.  Sorted by
    total dimension, then lexicographically.  Raises NotDynkin when the root
    system is not finite."""
    if not is_finite_type(quiver):
        raise NotDynkin("Tits form is not positive definite")
    n = quiver.n
    simples = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    roots = set(simples)
    frontier = list(simples)
    while frontier:
        new = []
        for beta in frontier:
            for e in simples:
                cand = tuple(b + s for b, s in zip(beta, e))
                if cand not in roots and quiver.euler_form(cand, cand) == 1:
                    roots.add(cand)
                    new.append(cand)
                    if len(roots) > MAX_ROOTS:
                        raise NotDynkin("too many roots; not finite type")
        frontier = new
    return sorted(roots, key=lambda b: (sum(b), b))


def reflect_source(rep, i, target_quiver):
    """Source reflection functor at a source i: replace V_i by the cokernel
    of V_i -> sum of targets, and reverse the arrows at i."""
    q, p = rep.quiver, rep.p
    out_arrows = q.arrows_from(i)
    assert not q.arrows_into(i), "reflect_source needs a source"
    targets = [q.arrows[h][1] for h in out_arrows]
    block = sum(rep.dims[t] for t in targets)
    # rows of `image`: images of the V_i basis inside the direct sum
    image = []
    for c in range(rep.dims[i]):
        vec = []
        for h, t in zip(out_arrows, targets):
            vec.extend(rep.maps[h][r][c] for r in range(rep.dims[t]))
        image.append(vec)
    ir, ipiv = gfp.rref(image, p)
    free = [c for c in range(block) if c not in ipiv]
    new_dim_i = len(free)

    dims = tuple(new_dim_i if v == i else rep.dims[v] for v in range(q.n))
    maps = []
    offsets = {}
    off = 0
    for h, t in zip(out_arrows, targets):
        offsets[h] = off
        off += rep.dims[t]
    for hi, (s, t) in enumerate(q.arrows):
        if hi in out_arrows:
            # new arrow t -> i: V_t -> coker, in complement coordinates
            tdim = rep.dims[q.arrows[hi][1]]
            m = gfp.zeros(new_dim_i, tdim)
            for c in range(tdim):
                vec = [0] * block
                vec[offsets[hi] + c] = 1
                red = gfp.reduce_mod_rowspace(ir, ipiv, vec, p)
                for r, fc in enumerate(free):
                    m[r][c] = red[fc]
            maps.append(m)
        else:
            maps.append(rep.maps[hi])
    # target_quiver must agree with q reversed at i up to per-arrow flips
    new_arrows = [(t, s) if hi in out_arrows else (s, t)
                  for hi, (s, t) in enumerate(q.arrows)]
    assert tuple(new_arrows) == target_quiver.arrows
    return QuiverRep(target_quiver, p, dims, maps)


def _sink_path_to_simple(quiver, beta):
    """Reflect beta through successive sinks (cycling an admissible order)
    until it becomes a unit vector.  Returns (path, quivers, vertex) where
    path[k] is the sink reflected at stage k and quivers[k] is the quiver
    before that reflection."""
    path, quivers = [], []
    q, vec = quiver, beta
    steps = 0
    while sum(vec) > 1:
        for i in admissible_sequence(q):
            if sum(vec) == 1:
                break
            if vec == tuple(1 if j == i else 0 for j in range(q.n)):
                break
            nxt = simple_reflection(q, i, vec)
            if any(x < 0 for x in nxt):
                raise NotDynkin(f"reflection of {vec} at {i} went negative")
            path.append(i)
            quivers.append(q)
            q = reversed_at(q, i)
            vec = nxt
        steps += 1
        if steps > MAX_ROOTS:
            raise NotDynkin("reflection path did not terminate")
    return path, quivers, vec.index(1), q


def indecomposables(quiver, p):
    """List of indecomposable representations over F_p, aligned with
    positive_roots(quiver)."""
    roots = positive_roots(quiver)
    reps = []
    for beta in roots:
        path, quivers, v, qfin = _sink_path_to_simple(quiver, beta)
        rep = QuiverRep.simple(qfin, p, v)
        for i, qprev in zip(reversed(path), reversed(quivers)):
            rep = reflect_source(rep, i, qprev)
        assert rep.dims == beta, (rep.dims, beta)
        reps.append(rep)
    return reps


class DynkinFamily:
    """Generic isomorphism-class labels for a Dynkin quiver: tuples of
    multiplicities over the positive roots.  Labels are prime-independent."""

    name = "dynkin"

    def __init__(self, quiver):
        self.quiver = quiver
        self.roots = positive_roots(quiver)
        self._indec = {}
        self._homs = {}

    def simple_label(self, v):
        e = tuple(1 if j == v else 0 for j in range(self.quiver.n))
        return self.unit_label({self.roots.index(e): 1})

    def unit_label(self, mults):
        return tuple(mults.get(k, 0) for k in range(len(self.roots)))

    def weight(self, label):
        w = [0] * self.quiver.n
        for m, beta in zip(label, self.roots):
            for v in range(self.quiver.n):
                w[v] += m * beta[v]
        return tuple(w)

    def labels_of_weight(self, w):
        """All multiplicity tuples whose root combination equals w."""
        roots = self.roots
        out = []

        def rec(k, rem, acc):
            if k == len(roots):
                if all(x == 0 for x in rem):
                    out.append(tuple(acc))
                return
            beta = roots[k]
            sup = [v for v in range(len(rem)) if beta[v]]
            mmax = min(rem[v] // beta[v] for v in sup)
            for m in range(mmax + 1):
                rec(k + 1, [rem[v] - m * beta[v] for v in range(len(rem))],
                    acc + [m])

        rec(0, list(w), [])
        return out

    def indec_reps(self, p):
        if p not in self._indec:
            self._indec[p] = indecomposables(self.quiver, p)
        return self._indec[p]

    def rep(self, label, p):
        reps = self.indec_reps(p)
        parts = []
        for k, m in enumerate(label):
            parts.extend([reps[k]] * m)
        return direct_sum_all(parts, self.quiver, p)

    def hom_matrix(self, p):
        """dim Hom(X_j, X_k) over the indecomposables; prime-independent."""
        if p not in self._homs:
            reps = self.indec_reps(p)
            self._homs[p] = [[hom_dim(a, b) for b in reps] for a in reps]
        return self._homs[p]

    def classify(self, rep):
        """Multiplicity label of an arbitrary representation, from the
        fingerprint of Hom dimensions against all indecomposables."""
        reps = self.indec_reps(rep.p)
        h = self.hom_matrix(rep.p)
        fing = [hom_dim(x, rep) for x in reps]
        # solve H^T m = fing over the rationals; H is invertible for
        # finite-type quivers
        from fractions import Fraction
        n = len(reps)
        aug = [[Fraction(h[j][k]) for k in range(n)] + [Fraction(fing[j])]
               for j in range(n)]
        # gaussian elimination
        row = 0
        for col in range(n):
            piv = next((r for r in range(row, n) if aug[r][col]), None)
            if piv is None:
                raise AmbiguousFingerprint("singular Hom matrix")
            aug[row], aug[piv] = aug[piv], aug[row]
            pv = aug[row][col]
            aug[row] = [x / pv for x in aug[row]]
            for r in range(n):
                if r != row and aug[r][col]:
                    f = aug[r][col]
                    aug[r] = [x - f * y for x, y in zip(aug[r], aug[row])]
            row += 1
        mults = [aug[r][n] for r in range(n)]
        out = []
        for x in mults:
            if x.denominator != 1 or x < 0:
                raise AmbiguousFingerprint(f"non-integral multiplicity {x}")
            out.append(int(x))
        label = tuple(out)
        if self.weight(label) != rep.dims:
            raise AmbiguousFingerprint("weight mismatch in classification")
        return label

    def indec_degree(self, k):
        """Degree of the residue division ring of End(X_k): always 1 here."""
        return 1

    # generic and concrete labels coincide for Dynkin quivers
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
        body = ",".join(f"{s}>{t}" for s, t in self.quiver.arrows)
        return f"dynkin[{body}]"

    def decomposition(self, label):
        """[(indec key, multiplicity, degree)] for the Aut-order formula."""
        return [(k, m, 1) for k, m in enumerate(label) if m]

    def concrete_labels_of_weight(self, w, p):
        return self.labels_of_weight(w)

    def realizable(self, label, p):
        return True


# ---------------------------------------------------------------------------
# directed order, monomial basis, bar transition, canonical basis


MAX_MONOMIAL_CANDIDATES = 5000


def directed_order(q, p=2):
    """Total order on the positive roots such that Hom(M_a, M_b) != 0
    implies a <= b; ties broken lexicographically on dimension vectors."""
    fam = DynkinFamily(q)
    reps = fam.indec_reps(p)
    n = len(reps)
    h = fam.hom_matrix(p)
    succ = [[k for k in range(n) if k != j and h[j][k]] for j in range(n)]
    indeg = [0] * n
    for j in range(n):
        for k in succ[j]:
            indeg[k] += 1
    out = []
    ready = sorted((fam.roots[j], j) for j in range(n) if indeg[j] == 0)
    while ready:
        _, j = ready.pop(0)
        out.append(fam.roots[j])
        for k in succ[j]:
            indeg[k] -= 1
            if indeg[k] == 0:
                ready.append((fam.roots[k], k))
        ready.sort()
    if len(out) != n:
        raise CycleDetected("Hom relation on indecomposables has a cycle")
    return out


def radical_layers(rep):
    """Vertex multiplicities of the radical filtration, top layer first."""
    m = rep
    layers = []
    while any(m.dims):
        p = m.p
        rad_rows = []
        for t in range(m.quiver.n):
            rows = []
            for h, (s, _) in enumerate(m.quiver.arrows):
                if m.quiver.arrows[h][1] == t and m.dims[s] and m.dims[t]:
                    rows.extend(gfp.transpose(m.maps[h]))
            r, piv = gfp.rref(rows, p) if rows else ([], [])
            rad_rows.append((r, piv))
        top = {v: m.dims[v] - len(rad_rows[v][0]) for v in range(m.quiver.n)
               if m.dims[v] - len(rad_rows[v][0])}
        layers.append(top)
        new_dims = tuple(len(rad_rows[v][0]) for v in range(m.quiver.n))
        new_maps = []
        for h, (s, t) in enumerate(m.quiver.arrows):
            bs, bt = rad_rows[s][0], rad_rows[t][0]
            cols = []
            for r in bs:
                y = gfp.mat_vec(m.maps[h], r, p)
                c = gfp.solve(gfp.transpose(bt), y, p) if bt else []
                cols.append(c)
            mat = [[cols[j][i] for j in range(len(bs))]
                   for i in range(len(bt))]
            new_maps.append(mat)
        m = QuiverRep(m.quiver, p, new_dims, new_maps)
    return layers


class DynkinBases:
    """Monomial, PBW (bracket), and canonical bases of the twisted Hall
    algebra of a Dynkin quiver, via Lusztig's triangularization."""

    def __init__(self, quiver, algebra=None, p=2):
        from . import hallalg
        self.family = DynkinFamily(quiver)
        self.alg = algebra if algebra is not None \
            else hallalg.GenericHall(self.family)
        self.p = p
        self.root_order = directed_order(quiver, p)
        self._order_idx = [self.family.roots.index(b) for b in self.root_order]
        self._monomials = {}

    def phi_less(self, a, b):
        """a < b iff at the lowest root where they differ, a is bigger."""
        for k in self._order_idx:
            if a[k] != b[k]:
                return a[k] > b[k]
        return False

    def sorted_phis(self, nu):
        import functools

        def cmp(a, b):
            return -1 if self.phi_less(a, b) else (1 if a != b else 0)

        return sorted(self.family.labels_of_weight(tuple(nu)),
                      key=functools.cmp_to_key(cmp))

    # -- monomial basis --------------------------------------------------

    def _candidate_words(self, phi):
        """Radical-filtration words, base intra-layer order first, then
        bounded backtracking over intra-layer permutations."""
        from itertools import islice, permutations, product
        layers = radical_layers(self.family.rep(phi, self.p))
        topo = self.family.quiver.topological_order()
        pos = {v: i for i, v in enumerate(topo)}
        per_layer = []
        for lay in layers:
            base = sorted(lay, key=lambda v: -pos[v])
            rest = [list(t) for t in permutations(base) if list(t) != base]
            per_layer.append([base] + rest)
        for combo in islice(product(*per_layer), MAX_MONOMIAL_CANDIDATES):
            yield tuple((v, lay[v]) for ordering, lay in zip(combo, layers)
                        for v in ordering)

    def monomial_for(self, phi):
        """A word of (vertex, multiplicity) whose divided-power product is
        <M_phi> plus strictly smaller bracket terms."""
        hit = self._monomials.get(phi)
        if hit is not None:
            return hit[0]
        for word in self._candidate_words(phi):
            coords = self.pbw_expand(self.alg.divided_power_word(word))
            lead = coords.get(phi)
            if lead is None or not lead.is_one():
                continue
            if all(pp == phi or self.phi_less(pp, phi) for pp in coords):
                self._monomials[phi] = (word, coords)
                return word
        raise MonomialSearchFailed(f"no verified monomial for {phi}")

    def monomial_expansion(self, phi):
        self.monomial_for(phi)
        return self._monomials[phi][1]

    def pbw_expand(self, x):
        """Coordinates of a homogeneous element in the bracket basis."""
        return self.alg.bracket_coords(x)

    # -- bar transition and canonical basis -------------------------------

    def bar_transition(self, nu):
        """TriangularSystem whose entry (phi', phi) is the coefficient of
        <M_phi'> in bar(<M_phi>), solved from bar-invariance of the
        monomial basis."""
        labels = self.sorted_phis(nu)
        a = {phi: self.monomial_expansion(phi) for phi in labels}
        bar_a = {phi: {pp: c.bar() for pp, c in row.items()}
                 for phi, row in a.items()}
        # invert bar(a) by forward substitution (unitriangular rows)
        inv = {}
        for phi in labels:
            row = {phi: LaurentPoly.one()}
            for pp, c in bar_a[phi].items():
                if pp == phi:
                    continue
                for qq, d in inv[pp].items():
                    row[qq] = row.get(qq, LaurentPoly.zero()) - c * d
            inv[phi] = {k: c for k, c in row.items() if not c.is_zero()}
        r = {}
        for phi in labels:            # bar(<phi>) = sum_low r[(low,phi)]<low>
            acc = {}
            for mid, c in inv[phi].items():
                for low, d in a[mid].items():
                    acc[low] = acc.get(low, LaurentPoly.zero()) + c * d
            for low, c in acc.items():
                if not c.is_zero():
                    r[(low, phi)] = c
        return TriangularSystem(labels, self.phi_less, r)

    def bar_bracket_coords(self, coords, system):
        """Bar involution applied to bracket-basis coordinates."""
        out = {}
        for phi, c in coords.items():
            cb = c.bar()
            for low in system.below(phi) + [phi]:
                e = system.entry(low, phi)
                if not e.is_zero():
                    out[low] = out.get(low, LaurentPoly.zero()) + cb * e
        return {k: c for k, c in out.items() if not c.is_zero()}

    def canonical_basis(self, nu):
        """[(phi, bracket-basis expansion of C_phi)] in increasing order."""
        system = self.bar_transition(nu)
        system.check_involution()
        p = system.solve()
        out = []
        for phi in system.labels:
            coords = {phi: LaurentPoly.one()}
            for low in system.below(phi):
                c = p.get((low, phi))
                if c is not None:
                    assert c.in_v_inverse(strict=True)
                    coords[low] = c
            out.append((phi, coords))
        return out

    def element_from_bracket_coords(self, coords):
        x = self.alg.zero()
        for phi, c in coords.items():
            x = x + self.alg.bracket(phi).scale(c)
        return x

"""Quivers and their finite-dimensional representations over prime fields.

A representation assigns an F_p vector space to each vertex and a matrix to
each arrow.  This module is the brute-force substrate: Hom spaces by linear
algebra, automorphism counts by enumeration, and exhaustive sweeps over
subrepresentations of a given dimension vector with stability pruning.
"""

from __future__ import annotations

from itertools import product

from . import gfp
from .errors import BudgetExceeded, CycleDetected, UnsupportedFamily

MAX_SUBSPACE_TUPLES = 20_000_000
MAX_AUT_ENUM = 1_000_000


class Quiver:
    """A finite quiver without loops.  Vertices are 0..n-1, arrows are
    (source, target) pairs; parallel arrows are allowed."""

    def __init__(self, num_vertices, arrows):
        self.n = num_vertices
        self.arrows = tuple((int(s), int(t)) for s, t in arrows)
        for s, t in self.arrows:
            if s == t:
                raise ValueError("loops are not supported")
            if not (0 <= s < self.n and 0 <= t < self.n):
                raise ValueError("arrow endpoint out of range")

    def euler_form(self, a, b):
        """<a, b> = sum_i a_i b_i - sum_{s->t} a_s b_t."""
        val = sum(a[i] * b[i] for i in range(self.n))
        for s, t in self.arrows:
            val -= a[s] * b[t]
        return val

    def sym_form(self, a, b):
        return self.euler_form(a, b) + self.euler_form(b, a)

    def arrows_from(self, v):
        return [i for i, (s, _) in enumerate(self.arrows) if s == v]

    def arrows_into(self, v):
        return [i for i, (_, t) in enumerate(self.arrows) if t == v]

    def is_acyclic(self):
        try:
            self.topological_order()
            return True
        except CycleDetected:
            return False

    def topological_order(self):
        """Vertices ordered sources first; raises CycleDetected on cycles."""
        indeg = [0] * self.n
        for _, t in self.arrows:
            indeg[t] += 1
        ready = sorted(v for v in range(self.n) if indeg[v] == 0)
        order = []
        while ready:
            v = ready.pop(0)
            order.append(v)
            for i, (s, t) in enumerate(self.arrows):
                if s == v:
                    indeg[t] -= 1
                    if indeg[t] == 0:
                        ready.append(t)
            ready.sort()
        if len(order) != self.n:
            raise CycleDetected("quiver has an oriented cycle")
        return order

    def __repr__(self):
        body = ",".join(f"{s}->{t}" for s, t in self.arrows)
        return f"Quiver({self.n}, [{body}])"


def dim_sum(a, b):
    return tuple(x + y for x, y in zip(a, b))


class QuiverRep:
    """Representation of a quiver over F_p: dims[v] per vertex, one matrix
    per arrow with shape dims[target] x dims[source] (columns index the
    source space)."""

    def __init__(self, quiver, p, dims, maps):
        self.quiver = quiver
        self.p = p
        self.dims = tuple(int(d) for d in dims)
        self.maps = [[[x % p for x in row] for row in m] for m in maps]
        for (s, t), m in zip(quiver.arrows, self.maps):
            if len(m) != self.dims[t] or any(len(r) != self.dims[s] for r in m):
                raise ValueError("arrow matrix has wrong shape")

    @property
    def total_dim(self):
        return sum(self.dims)

    @classmethod
    def zero(cls, quiver, p):
        n = quiver.n
        return cls(quiver, p, (0,) * n, [[] for _ in quiver.arrows])

    @classmethod
    def simple(cls, quiver, p, v):
        dims = tuple(1 if i == v else 0 for i in range(quiver.n))
        maps = [gfp.zeros(dims[t], dims[s]) for s, t in quiver.arrows]
        return cls(quiver, p, dims, maps)

    def direct_sum(self, other):
        assert self.quiver is other.quiver or \
            self.quiver.arrows == other.quiver.arrows
        dims = dim_sum(self.dims, other.dims)
        maps = []
        for i, (s, t) in enumerate(self.quiver.arrows):
            m = gfp.zeros(dims[t], dims[s])
            a, b = self.maps[i], other.maps[i]
            for r in range(self.dims[t]):
                for c in range(self.dims[s]):
                    m[r][c] = a[r][c]
            for r in range(other.dims[t]):
                for c in range(other.dims[s]):
                    m[self.dims[t] + r][self.dims[s] + c] = b[r][c]
            maps.append(m)
        return QuiverRep(self.quiver, self.p, dims, maps)

    def key(self):
        return (self.dims, tuple(gfp.mat_to_tuple(m) for m in self.maps))

    def __repr__(self):
        return f"QuiverRep(p={self.p}, dims={self.dims})"


def direct_sum_all(reps, quiver=None, p=None):
    if not reps:
        return QuiverRep.zero(quiver, p)
    out = reps[0]
    for r in reps[1:]:
        out = out.direct_sum(r)
    return out


def hom_dim(m, n):
    """dim_Fp Hom(M, N): morphisms f_v with f_t M_h = N_h f_s per arrow."""
    assert m.p == n.p and m.quiver.arrows == n.quiver.arrows
    p = m.p
    q = m.quiver
    nvars = sum(n.dims[v] * m.dims[v] for v in range(q.n))
    if nvars == 0:
        return 0
    offsets = []
    off = 0
    for v in range(q.n):
        offsets.append(off)
        off += n.dims[v] * m.dims[v]

    def var(v, i, j):
        # entry (i, j) of f_v, an n.dims[v] x m.dims[v] matrix
        return offsets[v] + i * m.dims[v] + j

    rows = []
    for h, (s, t) in enumerate(q.arrows):
        a, b = m.maps[h], n.maps[h]
        # (f_t A - B f_s)[i][j] = 0 for i < n.dims[t], j < m.dims[s]
        for i in range(n.dims[t]):
            for j in range(m.dims[s]):
                row = [0] * nvars
                for k in range(m.dims[t]):
                    row[var(t, i, k)] = (row[var(t, i, k)] + a[k][j]) % p
                for k in range(n.dims[s]):
                    row[var(s, k, j)] = (row[var(s, k, j)] - b[i][k]) % p
                rows.append(row)
    return nvars - gfp.rank(rows, p)


def end_dim(m):
    return hom_dim(m, m)


def end_basis(m):
    """Basis of End(M) as tuples of per-vertex matrices."""
    p, q = m.p, m.quiver
    nvars = sum(d * d for d in m.dims)
    offsets = []
    off = 0
    for v in range(q.n):
        offsets.append(off)
        off += m.dims[v] ** 2

    def var(v, i, j):
        return offsets[v] + i * m.dims[v] + j

    rows = []
    for h, (s, t) in enumerate(q.arrows):
        a = m.maps[h]
        for i in range(m.dims[t]):
            for j in range(m.dims[s]):
                row = [0] * nvars
                for k in range(m.dims[t]):
                    row[var(t, i, k)] = (row[var(t, i, k)] + a[k][j]) % p
                for k in range(m.dims[s]):
                    row[var(s, k, j)] = (row[var(s, k, j)] - a[i][k]) % p
                rows.append(row)
    if nvars == 0:
        return []
    vecs = gfp.nullspace(rows, p, nvars) if rows else gfp.identity(nvars)
    basis = []
    for vec in vecs:
        mats = []
        for v in range(q.n):
            d = m.dims[v]
            mats.append([[vec[var(v, i, j)] for j in range(d)]
                         for i in range(d)])
        basis.append(mats)
    return basis


def aut_count(m, budget=MAX_AUT_ENUM):
    """|Aut(M)| by enumerating End(M) and counting invertible elements."""
    basis = end_basis(m)
    d = len(basis)
    p = m.p
    if p ** d > budget:
        raise BudgetExceeded(f"p^dim End = {p}^{d} exceeds budget {budget}")
    count = 0
    q = m.quiver
    for coeffs in product(range(p), repeat=d):
        ok = True
        for v in range(q.n):
            dv = m.dims[v]
            if dv == 0:
                continue
            fv = gfp.zeros(dv, dv)
            for c, mats in zip(coeffs, basis):
                if c:
                    bv = mats[v]
                    for i in range(dv):
                        for j in range(dv):
                            fv[i][j] = (fv[i][j] + c * bv[i][j]) % p
            if not gfp.is_invertible(fv, p):
                ok = False
                break
        if ok:
            count += 1
    return count


def is_isomorphic(m, n):
    """Test isomorphism by searching for an invertible intertwiner.  Uses the
    Hom space in both directions, so it is cheap when dims are small."""
    if m.dims != n.dims:
        return False
    if hom_dim(m, n) != hom_dim(n, m):
        return False
    # enumerate Hom(M, N) and look for an invertible element
    p, q = m.p, m.quiver
    nvars = sum(n.dims[v] * m.dims[v] for v in range(q.n))
    if nvars == 0:
        return True
    offsets = []
    off = 0
    for v in range(q.n):
        offsets.append(off)
        off += n.dims[v] * m.dims[v]

    def var(v, i, j):
        return offsets[v] + i * m.dims[v] + j

    rows = []
    for h, (s, t) in enumerate(q.arrows):
        a, b = m.maps[h], n.maps[h]
        for i in range(n.dims[t]):
            for j in range(m.dims[s]):
                row = [0] * nvars
                for k in range(m.dims[t]):
                    row[var(t, i, k)] = (row[var(t, i, k)] + a[k][j]) % p
                for k in range(n.dims[s]):
                    row[var(s, k, j)] = (row[var(s, k, j)] - b[i][k]) % p
                rows.append(row)
    vecs = gfp.nullspace(rows, p, nvars) if rows else gfp.identity(nvars)
    d = len(vecs)
    if p ** d > MAX_AUT_ENUM:
        raise BudgetExceeded(f"hom space too large for iso search: {p}^{d}")
    for coeffs in product(range(p), repeat=d):
        ok = True
        for v in range(q.n):
            dv = m.dims[v]
            if dv == 0:
                continue
            fv = gfp.zeros(dv, dv)
            for c, vec in zip(coeffs, vecs):
                if c:
                    for i in range(dv):
                        for j in range(dv):
                            fv[i][j] = (fv[i][j]
                                        + c * vec[var(v, i, j)]) % p
            if not gfp.is_invertible(fv, p):
                ok = False
                break
        if ok:
            return True
    return False


# ---------------------------------------------------------------------------
# subrepresentation sweeps


def _sweep_order(quiver):
    """Vertex order for the subspace sweep: sinks first when acyclic, so each
    new vertex sees as many upper-bound constraints as possible."""
    try:
        return list(reversed(quiver.topological_order()))
    except CycleDetected:
        return list(range(quiver.n))


def _preimage_rows(mat, sub_r, sub_piv, p, src_dim):
    """Rows whose kernel is mat^{-1}(rowspace of sub_r)."""
    free = [c for c in range(len(mat)) if c not in sub_piv] if mat else []
    cols = [gfp.reduce_mod_rowspace(sub_r, sub_piv,
                                    [mat[i][j] for i in range(len(mat))], p)
            for j in range(src_dim)] if mat else []
    return [[cols[j][c] for j in range(src_dim)] for c in free]


def _between(lower, upper_r, upper_piv, k, p, dim):
    """Yield RREF bases of k-dim subspaces U with span(lower) <= U <= span(upper).
    `lower` is a list of vectors (not necessarily RREF); upper is RREF."""
    m = len(upper_r)
    # coordinates of lower inside the upper basis
    low_coords = []
    for vec in lower:
        if not gfp.rowspace_contains(upper_r, upper_piv, vec, p):
            return
        low_coords.append([vec[pc] % p for pc in upper_piv])
    lr, lpiv = gfp.rref(low_coords, p) if low_coords else ([], [])
    c = len(lr)
    if k < c or k > m:
        return
    nonpiv = [j for j in range(m) if j not in lpiv]
    for qbasis in gfp.subspaces(len(nonpiv), k - c, p):
        rows_m = [r[:] for r in lr]
        for qrow in qbasis:
            vec = [0] * m
            for idx, j in enumerate(nonpiv):
                vec[j] = qrow[idx]
            rows_m.append(vec)
        # map back to the ambient space and re-echelonize
        amb = [gfp.mat_vec(gfp.transpose(upper_r), row, p) if upper_r else
               [0] * dim for row in rows_m]
        r, piv = gfp.rref(amb, p)
        yield r, piv


def subrep_sweep(m, sub_dims, budget=MAX_SUBSPACE_TUPLES):
    """Yield subrepresentations of M with the given dimension vector, as
    tuples of per-vertex RREF bases (basis, pivots)."""
    p, q = m.p, m.quiver
    if any(sub_dims[v] > m.dims[v] for v in range(q.n)):
        return
    order = _sweep_order(q)
    est = 1
    for v in range(q.n):
        est *= gfp.count_subspaces(m.dims[v], sub_dims[v], p)
        if est > budget:
            raise BudgetExceeded(
                f"subspace sweep would touch ~{est} tuples (> {budget})")

    full = {v: (gfp.identity(m.dims[v]), list(range(m.dims[v])))
            for v in range(q.n)}

    def rec(idx, chosen):
        if idx == len(order):
            yield dict(chosen)
            return
        v = order[idx]
        # upper bound: intersect preimages over arrows v -> placed w
        constraint_rows = []
        for h in q.arrows_from(v):
            _, t = q.arrows[h]
            if t in chosen:
                tr, tpiv = chosen[t]
                constraint_rows.extend(_preimage_rows(
                    m.maps[h], tr, tpiv, p, m.dims[v]))
        if constraint_rows:
            upper = gfp.nullspace(constraint_rows, p, m.dims[v])
            upper_r, upper_piv = gfp.rref(upper, p)
        else:
            upper_r, upper_piv = full[v]
        # lower bound: images over arrows placed u -> v
        lower = []
        for h in q.arrows_into(v):
            s, _ = q.arrows[h]
            if s in chosen:
                sr, _ = chosen[s]
                for row in sr:
                    lower.append(gfp.mat_vec(m.maps[h], row, p))
        for r, piv in _between(lower, upper_r, upper_piv,
                               sub_dims[v], p, m.dims[v]):
            chosen[v] = (r, piv)
            yield from rec(idx + 1, chosen)
            del chosen[v]

    yield from rec(0, {})


def sub_quotient_pair(m, bases):
    """Build the (sub, quotient) representations for a stable subspace tuple
    produced by subrep_sweep."""
    p, q = m.p, m.quiver
    sub_dims = tuple(len(bases[v][0]) for v in range(q.n))
    quot_dims = tuple(m.dims[v] - sub_dims[v] for v in range(q.n))
    sub_maps, quot_maps = [], []
    for h, (s, t) in enumerate(q.arrows):
        sr, spiv = bases[s]
        tr, tpiv = bases[t]
        a = m.maps[h]
        smat = gfp.zeros(len(tr), len(sr))
        for j, row in enumerate(sr):
            img = gfp.mat_vec(a, row, p)
            # coordinates in the RREF basis of U_t: read pivot entries
            for i, pc in enumerate(tpiv):
                smat[i][j] = img[pc] % p
        sub_maps.append(smat)
        free_t = [c for c in range(m.dims[t]) if c not in tpiv]
        free_s = [c for c in range(m.dims[s]) if c not in spiv]
        qmat = gfp.zeros(len(free_t), len(free_s))
        for j, c in enumerate(free_s):
            e = [0] * m.dims[s]
            e[c] = 1
            img = gfp.mat_vec(a, e, p)
            red = gfp.reduce_mod_rowspace(tr, tpiv, img, p)
            for i, fc in enumerate(free_t):
                qmat[i][j] = red[fc]
        quot_maps.append(qmat)
    sub = QuiverRep(q, p, sub_dims, sub_maps)
    quot = QuiverRep(q, p, quot_dims, quot_maps)
    return sub, quot


def subrep_count_by_dims(m, sub_dims, predicate=None,
                         budget=MAX_SUBSPACE_TUPLES):
    """Number of subrepresentations of M with dimension vector sub_dims,
    optionally filtered by predicate(sub, quot)."""
    count = 0
    for bases in subrep_sweep(m, sub_dims, budget=budget):
        if predicate is None:
            count += 1
        else:
            sub, quot = sub_quotient_pair(m, bases)
            if predicate(sub, quot):
                count += 1
    return count


def subrep_count(m, sub_class, quot_class, family,
                 budget=MAX_SUBSPACE_TUPLES):
    """Hall number g^[M]_{quot, sub}: submodules of M isomorphic to
    sub_class with quotient isomorphic to quot_class."""
    sub_dims = family.weight(sub_class)
    quot_dims = family.weight(quot_class)
    if tuple(dim_sum(sub_dims, quot_dims)) != tuple(m.dims):
        return 0

    def match(sub, quot):
        return (family.classify_concrete(sub) == sub_class
                and family.classify_concrete(quot) == quot_class)

    return subrep_count_by_dims(m, sub_dims, match, budget=budget)


def euler_form(q, a, b):
    return q.euler_form(a, b)


def symmetric_euler_form(q, a, b):
    return q.sym_form(a, b)


def isoclass_of(m, family):
    """Class label of an arbitrary representation, via Hom fingerprints
    against the family's indecomposable catalog."""
    return family.classify_concrete(m)


def enumerate_isoclasses(q, family, nu, p):
    """Complete, duplicate-free list of (label, representative) with
    dimension vector nu over F_p."""
    if q is not None and tuple(q.arrows) != tuple(family.quiver.arrows):
        raise UnsupportedFamily(f"quiver {q.arrows} is not the family's")
    return [(lab, family.rep_concrete(lab, p))
            for lab in family.concrete_labels_of_weight(tuple(nu), p)]


# ---------------------------------------------------------------------------
# brute-force isomorphism classes (tiny dimension vectors only)


def brute_orbit_isoclasses(quiver, p, dims, budget=1_000_000):
    """All isomorphism classes of representations with the given dimension
    vector, by enumerating every matrix tuple and grouping under iso.  Only
    usable for very small p and dims; this is a test oracle."""
    sizes = [(quiver.arrows[h], p ** (dims[t] * dims[s]))
             for h, (s, t) in enumerate(quiver.arrows)]
    total = 1
    for _, sz in sizes:
        total *= sz
    if total > budget:
        raise BudgetExceeded(f"{total} matrix tuples exceeds budget {budget}")

    def all_mats(rows, cols):
        for vals in product(range(p), repeat=rows * cols):
            yield [list(vals[i * cols:(i + 1) * cols]) for i in range(rows)]

    classes = []
    spaces = [list(all_mats(dims[t], dims[s])) for s, t in quiver.arrows]
    for combo in product(*spaces) if spaces else [()]:
        rep = QuiverRep(quiver, p, dims, list(combo))
        for known in classes:
            if is_isomorphic(rep, known):
                break
        else:
            classes.append(rep)
    return classes

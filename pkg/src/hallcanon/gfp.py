"""Exact linear algebra over prime fields F_p, plus univariate polynomial
arithmetic over F_p (gcd, factorization, Smith normal form of polynomial
matrices).

Matrices are lists of lists of ints in [0, p).  Everything is pure Python;
the dimensions in this library are tiny (<= 8 or so), so clarity wins.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product


# ---------------------------------------------------------------------------
# matrices over F_p


def zeros(rows, cols):
    return [[0] * cols for _ in range(rows)]


def identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def mat_mul(a, b, p):
    n, m = len(a), len(b[0]) if b else 0
    k = len(b)
    out = zeros(n, m)
    for i in range(n):
        ai = a[i]
        oi = out[i]
        for t in range(k):
            c = ai[t]
            if c:
                bt = b[t]
                for j in range(m):
                    oi[j] = (oi[j] + c * bt[j]) % p
    return out


def mat_vec(a, v, p):
    return [sum(c * x for c, x in zip(row, v)) % p for row in a]


def transpose(a):
    return [list(col) for col in zip(*a)] if a else []


def mat_eq(a, b):
    return a == b


def rref(a, p):
    """Reduced row echelon form. Returns (R, pivot_columns); zero rows kept off."""
    m = [row[:] for row in a]
    rows = len(m)
    cols = len(m[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(cols):
        pr = None
        for i in range(r, rows):
            if m[i][c] % p:
                pr = i
                break
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        inv = pow(m[r][c], -1, p)
        m[r] = [(x * inv) % p for x in m[r]]
        for i in range(rows):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [(x - f * y) % p for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return m[:r], pivots


def rank(a, p):
    if not a or not a[0]:
        return 0
    return len(rref(a, p)[0])


def nullspace(a, p, ncols=None):
    """Basis of the right kernel {x : a.x = 0} as a list of vectors."""
    if not a:
        return identity(ncols) if ncols else []
    cols = len(a[0])
    r, piv = rref(a, p)
    free = [c for c in range(cols) if c not in piv]
    basis = []
    for fc in free:
        v = [0] * cols
        v[fc] = 1
        for i, pc in enumerate(piv):
            v[pc] = (-r[i][fc]) % p
        basis.append(v)
    return basis


def solve(a, b, p):
    """One solution x of a.x = b, or None when inconsistent."""
    if not a:
        return [] if all(x % p == 0 for x in b) else None
    rows, cols = len(a), len(a[0])
    aug = [a[i][:] + [b[i] % p] for i in range(rows)]
    r, piv = rref(aug, p)
    if cols in piv:
        return None
    x = [0] * cols
    for i, pc in enumerate(piv):
        x[pc] = r[i][cols]
    return x


def inverse(a, p):
    """Inverse matrix, or None when singular."""
    n = len(a)
    aug = [a[i][:] + identity(n)[i] for i in range(n)]
    r, piv = rref(aug, p)
    if piv[:n] != list(range(n)):
        return None
    return [row[n:] for row in r]


def is_invertible(a, p):
    n = len(a)
    if n == 0:
        return True
    if any(len(row) != n for row in a):
        return False
    return rank(a, p) == n


def mat_to_tuple(a):
    return tuple(tuple(row) for row in a)


# ---------------------------------------------------------------------------
# subspaces as reduced row echelon bases


def count_subspaces(n, k, p):
    """Gaussian binomial coefficient [n choose k]_p as an integer."""
    if k < 0 or k > n:
        return 0
    num = den = 1
    for i in range(k):
        num *= p ** (n - i) - 1
        den *= p ** (i + 1) - 1
    return num // den


def subspaces(n, k, p):
    """Yield all k-dimensional subspaces of F_p^n as RREF basis matrices."""
    if k == 0:
        yield []
        return
    if k > n:
        return
    from itertools import combinations
    for piv in combinations(range(n), k):
        free_slots = []
        for i in range(k):
            for c in range(piv[i] + 1, n):
                if c not in piv:
                    free_slots.append((i, c))
        for vals in product(range(p), repeat=len(free_slots)):
            m = zeros(k, n)
            for i, pc in enumerate(piv):
                m[i][pc] = 1
            for (i, c), v in zip(free_slots, vals):
                m[i][c] = v
            yield m


def rowspace_contains(r, piv, vec, p):
    """True if vec lies in the rowspace given by RREF rows r with pivots piv."""
    v = vec[:]
    for i, pc in enumerate(piv):
        c = v[pc] % p
        if c:
            v = [(x - c * y) % p for x, y in zip(v, r[i])]
    return all(x % p == 0 for x in v)


def reduce_mod_rowspace(r, piv, vec, p):
    """Reduce vec modulo the rowspace; result vanishes on pivot columns."""
    v = [x % p for x in vec]
    for i, pc in enumerate(piv):
        c = v[pc]
        if c:
            v = [(x - c * y) % p for x, y in zip(v, r[i])]
    return v


# ---------------------------------------------------------------------------
# univariate polynomials over F_p, as stripped coefficient tuples (low first)


def pstrip(c):
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def padd(a, b, p):
    n = max(len(a), len(b))
    return pstrip([( (a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)) % p
                   for i in range(n)])


def pneg(a, p):
    return tuple((-x) % p for x in a)


def psub(a, b, p):
    return padd(a, pneg(b, p), p)


def pmul(a, b, p):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return pstrip(out)


def pdivmod(a, b, p):
    if not b:
        raise ZeroDivisionError
    a = list(a)
    db, lb = len(b) - 1, b[-1]
    inv = pow(lb, -1, p)
    q = [0] * max(0, len(a) - db)
    while len(pstrip(a)) - 1 >= db and pstrip(a):
        a = list(pstrip(a))
        da = len(a) - 1
        if da < db:
            break
        f = (a[-1] * inv) % p
        q[da - db] = f
        for i in range(db + 1):
            a[da - db + i] = (a[da - db + i] - f * b[i]) % p
    return pstrip(q), pstrip(a)


def pmonic(a, p):
    if not a:
        return a
    inv = pow(a[-1], -1, p)
    return tuple((x * inv) % p for x in a)


def pgcd(a, b, p):
    a, b = pstrip(a), pstrip(b)
    while b:
        _, r = pdivmod(a, b, p)
        a, b = b, r
    return pmonic(a, p)


@lru_cache(maxsize=None)
@lru_cache(maxsize=None)
def irreducibles(p, d):
    """All monic irreducible polynomials of degree d over F_p, sorted."""
    if d == 1:
        return tuple(pstrip((a, 1)) for a in range(p))
    lower = []
    for e in range(1, d // 2 + 1):
        lower.extend(irreducibles(p, e))
    out = []
    for tail in product(range(p), repeat=d):
        poly = pstrip(tail + (1,))
        if len(poly) != d + 1:
            continue
        if all(pdivmod(poly, f, p)[1] for f in lower):
            out.append(poly)
    return tuple(sorted(out))


def pfactor(a, p):
    """Factor a nonzero polynomial into monic irreducibles; returns
    (unit, {irreducible: multiplicity})."""
    a = pstrip(a)
    if not a:
        raise ValueError("cannot factor the zero polynomial")
    unit = a[-1]
    a = pmonic(a, p)
    factors = {}
    d = 1
    while len(a) > 1:
        deg = len(a) - 1
        if d > deg // 2:
            factors[a] = factors.get(a, 0) + 1
            break
        hit = False
        for f in irreducibles(p, d):
            while True:
                q, r = pdivmod(a, f, p)
                if r:
                    break
                a = q
                factors[f] = factors.get(f, 0) + 1
                hit = True
            if len(a) == 1:
                break
        d += 1
    return unit, factors


# ---------------------------------------------------------------------------
# Smith normal form over F_p[t]


def smith_invariant_factors(mat, p):
    """Invariant factors (monic, each dividing the next) of a polynomial
    matrix over F_p[t]; entries of `mat` are coefficient tuples."""
    m = [[pstrip(e) for e in row] for row in mat]
    rows, cols = len(m), len(m[0]) if m else 0
    factors = []
    top = 0

    def pivot_search(t0):
        best = None
        for i in range(t0, rows):
            for j in range(t0, cols):
                if m[i][j]:
                    if best is None or len(m[i][j]) < len(m[best[0]][best[1]]):
                        best = (i, j)
        return best

    t0 = 0
    while t0 < min(rows, cols):
        pos = pivot_search(t0)
        if pos is None:
            break
        bi, bj = pos
        m[t0], m[bi] = m[bi], m[t0]
        for row in m:
            row[t0], row[bj] = row[bj], row[t0]
        while True:
            # clear column t0
            changed = False
            for i in range(t0 + 1, rows):
                if m[i][t0]:
                    q, r = pdivmod(m[i][t0], m[t0][t0], p)
                    if q:
                        m[i] = [psub(a, pmul(q, b, p), p)
                                for a, b in zip(m[i], m[t0])]
                    if m[i][t0]:
                        m[t0], m[i] = m[i], m[t0]
                        changed = True
                        break
            if changed:
                continue
            # clear row t0
            for j in range(t0 + 1, cols):
                if m[t0][j]:
                    q, r = pdivmod(m[t0][j], m[t0][t0], p)
                    if q:
                        for row in m:
                            row[j] = psub(row[j], pmul(q, row[t0], p), p)
                    if m[t0][j]:
                        for row in m:
                            row[t0], row[j] = row[j], row[t0]
                        changed = True
                        break
            if not changed:
                break
        # enforce divisibility of the remaining block
        piv = m[t0][t0]
        bad = None
        for i in range(t0 + 1, rows):
            for j in range(t0 + 1, cols):
                if m[i][j] and pdivmod(m[i][j], piv, p)[1]:
                    bad = i
                    break
            if bad is not None:
                break
        if bad is not None:
            m[t0] = [padd(a, b, p) for a, b in zip(m[t0], m[bad])]
            continue
        factors.append(pmonic(piv, p))
        t0 += 1
    return factors

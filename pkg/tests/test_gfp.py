"""Linear algebra and polynomial arithmetic over prime fields."""

import itertools
import random

from hallcanon import gfp


def random_matrix(rng, rows, cols, p):
    return [[rng.randrange(p) for _ in range(cols)] for _ in range(rows)]


class TestMatrices:
    def test_rref_reproduces_rowspace(self):
        rng = random.Random(7)
        for p in (2, 3, 5):
            for _ in range(20):
                a = random_matrix(rng, 3, 4, p)
                r, piv = gfp.rref(a, p)
                assert gfp.rank(a, p) == len(piv)
                # every original row reduces to zero against the rref rows
                for row in a:
                    assert gfp.rowspace_contains(r, piv, row, p)

    def test_rank_via_brute_force(self):
        rng = random.Random(11)
        for p in (2, 3):
            for _ in range(10):
                a = random_matrix(rng, 3, 3, p)
                # the row span has exactly p^rank elements
                assert len(_span(a, p)) == p ** gfp.rank(a, p)

    def test_nullspace(self):
        rng = random.Random(3)
        for p in (2, 3, 5):
            for _ in range(15):
                a = random_matrix(rng, 3, 4, p)
                basis = gfp.nullspace(a, p)
                assert len(basis) == 4 - gfp.rank(a, p)
                for vec in basis:
                    assert all(x % p == 0 for x in gfp.mat_vec(a, vec, p))

    def test_solve_and_inverse(self):
        rng = random.Random(5)
        for p in (2, 3, 5):
            for _ in range(15):
                a = random_matrix(rng, 3, 3, p)
                x = [rng.randrange(p) for _ in range(3)]
                b = gfp.mat_vec(a, x, p)
                got = gfp.solve(a, b, p)
                assert got is not None
                assert gfp.mat_vec(a, got, p) == b
                if gfp.is_invertible(a, p):
                    inv = gfp.inverse(a, p)
                    assert gfp.mat_eq(gfp.mat_mul(a, inv, p),
                                      gfp.identity(3))

    def test_count_subspaces_matches_enumeration(self):
        for p in (2, 3):
            for n in range(0, 4):
                for k in range(0, n + 1):
                    subs = list(gfp.subspaces(n, k, p))
                    assert len(subs) == gfp.count_subspaces(n, k, p)
                    assert len({tuple(map(tuple, s[0] if isinstance(s, tuple)
                                          else s)) for s in subs}) == len(subs)


def _span(rows, p):
    n = len(rows[0]) if rows else 0
    out = {tuple([0] * n)}
    for row in rows:
        new = set()
        for v in out:
            for c in range(p):
                new.add(tuple((x + c * y) % p for x, y in zip(v, row)))
        out = new
    return out


class TestPolynomials:
    def test_arithmetic(self):
        p = 5
        a, b = (1, 2, 3), (4, 0, 1)  # coefficient tuples, index = degree
        assert gfp.padd(a, gfp.pneg(a, p), p) == ()
        assert gfp.psub(a, a, p) == ()
        q, r = gfp.pdivmod(gfp.pmul(a, b, p), b, p)
        assert gfp.pstrip(q) == gfp.pstrip(a) and r == ()

    def test_gcd(self):
        p = 3
        a = gfp.pmul((1, 1), (2, 1), p)
        b = gfp.pmul((1, 1), (1, 0, 1), p)
        g = gfp.pgcd(a, b, p)
        assert gfp.pmonic(g, p) == gfp.pmonic((1, 1), p)

    def test_irreducibles_count(self):
        # necklace-counting: the number of monic irreducibles of degree d
        # over F_p is (1/d) sum_{e|d} mu(e) p^{d/e}
        def moebius(n):
            out, m = 1, n
            for q in range(2, n + 1):
                if m % q == 0:
                    m //= q
                    if m % q == 0:
                        return 0
                    out = -out
            return out

        for p in (2, 3, 5):
            for d in (1, 2, 3, 4):
                want = sum(moebius(e) * p ** (d // e)
                           for e in range(1, d + 1) if d % e == 0) // d
                assert len(gfp.irreducibles(p, d)) == want

    def test_factor_roundtrip(self):
        rng = random.Random(17)
        for p in (2, 3):
            irr1 = gfp.irreducibles(p, 1)
            irr2 = gfp.irreducibles(p, 2)
            for _ in range(10):
                chosen = rng.sample(irr1, 2) + [rng.choice(irr2)]
                prod = (1,)
                want = {}
                for f in chosen:
                    e = rng.randrange(1, 3)
                    want[gfp.pstrip(f)] = want.get(gfp.pstrip(f), 0) + e
                    for _ in range(e):
                        prod = gfp.pmul(prod, f, p)
                unit, factors = gfp.pfactor(prod, p)
                got = {}
                for f, e in dict(factors).items():
                    got[gfp.pstrip(f)] = got.get(gfp.pstrip(f), 0) + e
                assert got == want

    def test_smith_invariant_factors(self):
        p = 5
        # diagonal already: invariant factors are the diagonal, sorted by
        # divisibility; d1 | d2
        t = (0, 1)  # the variable t
        mat = [[t, ()], [(), gfp.pmul(t, t, p)]]
        facs = gfp.smith_invariant_factors(mat, p)
        nontrivial = [f for f in facs if len(f) > 1]
        assert nontrivial == [gfp.pmonic(t, p),
                              gfp.pmonic(gfp.pmul(t, t, p), p)]

    def test_smith_divisibility_chain(self):
        rng = random.Random(23)
        p = 3
        for _ in range(10):
            mat = [[tuple(rng.randrange(p) for _ in range(3))
                    for _ in range(2)] for _ in range(2)]
            facs = [f for f in gfp.smith_invariant_factors(mat, p) if f]
            for a, b in zip(facs, facs[1:]):
                _, r = gfp.pdivmod(b, a, p)
                assert r == ()

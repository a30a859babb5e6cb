"""Solving unitriangular bar-invariance systems.

Given a finite poset of labels and a unitriangular matrix r (r[h][h] = 1,
r[h][h'] = 0 unless h' <= h) satisfying the involution condition

    sum_{h''} bar(r[h'][h'']) * r[h''][h] == delta_{h', h},

there is a unique unitriangular p with p[h][h] = 1, off-diagonal entries in
v^{-1} Z[v^{-1}], and p == bar(p) composed through r, i.e.

    p[h'][h] = sum_{h''} bar(p[h'][h'']) * r[h''][h]   for all h' <= h.

The solver proceeds by induction on the interval [h', h]; at each step the
right-hand side f satisfies bar(f) == -f, so its strictly-negative part is
the unique admissible solution.  Coefficient entries are LaurentPoly.
"""

from __future__ import annotations

from .errors import BadDiagonal, BadInvolution, ConstantObstruction
from .laurent import LaurentPoly

ONE = LaurentPoly.one()
ZERO = LaurentPoly.zero()


class TriangularSystem:
    """labels: sequence, linearly ordered compatibly with the partial order
    `less(a, b)` (a strictly below b).  r: dict (h_low, h_high) -> LaurentPoly
    for h_low <= h_high; missing keys are zero, diagonal defaults to 1."""

    def __init__(self, labels, less, r):
        self.labels = list(labels)
        self.index = {h: i for i, h in enumerate(self.labels)}
        self.less = less
        self.r = dict(r)
        for i, a in enumerate(self.labels):
            for b in self.labels[i + 1:]:
                if less(b, a):
                    raise ValueError("labels not listed in increasing order")
        for h in self.labels:
            d = self.r.setdefault((h, h), ONE)
            if d != ONE:
                raise BadDiagonal(f"r[{h}][{h}] = {d}, expected 1")
        for (a, b) in self.r:
            if a != b and not less(a, b):
                raise ValueError(f"entry r[{a}][{b}] violates triangularity")

    def entry(self, low, high):
        return self.r.get((low, high), ZERO)

    def below(self, h):
        """Labels strictly below h, in increasing order."""
        return [a for a in self.labels[: self.index[h]] if self.less(a, h)]

    def check_involution(self):
        """Verify sum_h'' bar(r[h'][h'']) r[h''][h] = delta for all pairs."""
        for j, h in enumerate(self.labels):
            mids = self.below(h) + [h]
            for hp in mids:
                total = ZERO
                for hpp in mids:
                    if hpp != hp and not self.less(hp, hpp):
                        continue
                    total = total + self.entry(hp, hpp).bar() * self.entry(hpp, h)
                want = ONE if hp == h else ZERO
                if total != want:
                    raise BadInvolution(
                        f"involution fails at ({hp}, {h}): got {total}")

    def solve(self):
        """Return p as dict (h_low, h_high) -> LaurentPoly with unit diagonal
        and strictly negative off-diagonal entries."""
        p = {}
        for h in self.labels:
            p[(h, h)] = ONE
            for hp in reversed(self.below(h)):
                # f = sum over hp <= h'' < h of bar(p[hp][h'']) r[h''][h]
                f = ZERO
                for hpp in [hp] + [x for x in self.below(h)
                                   if self.less(hp, x)]:
                    if (hp, hpp) in p:
                        f = f + p[(hp, hpp)].bar() * self.entry(hpp, h)
                # p[hp][h] - bar(p[hp][h]) = f requires bar(f) = -f
                if f.bar() != -f:
                    raise BadInvolution(
                        f"rhs not antisymmetric at ({hp}, {h}): {f}")
                if f.coeffs.get(0, 0):
                    raise ConstantObstruction(
                        f"constant term in rhs at ({hp}, {h}): {f}")
                val = f.negative_part()
                if not val.is_zero():
                    p[(hp, h)] = val
        return p


def solve_triangular(labels, less, r, check=True):
    sys = TriangularSystem(labels, less, r)
    if check:
        sys.check_involution()
    return sys.solve()

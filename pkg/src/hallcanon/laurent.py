"""Exact Laurent polynomials in v over the rationals.

A Laurent polynomial is stored as a map from integer exponents to nonzero
Fractions.  All basis-transition coefficients in the library live in this
ring; rational functions (needed for values of the bilinear form) are pairs
of Laurent polynomials reduced by an exact polynomial gcd.
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce

from .errors import NotDivisible, PositiveDegree


def _coeff(x):
    if isinstance(x, Fraction):
        return x
    return Fraction(x)


class LaurentPoly:
    """Immutable Laurent polynomial in v with Fraction coefficients.

    Invariant: no stored coefficient is zero.
    """

    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs=None):
        d = {}
        if coeffs:
            for e, c in coeffs.items():
                c = _coeff(c)
                if c != 0:
                    d[int(e)] = c
        self.coeffs = d
        self._hash = None

    # -- constructors -------------------------------------------------

    @staticmethod
    def zero():
        return LaurentPoly()

    @staticmethod
    def one():
        return LaurentPoly({0: 1})

    @staticmethod
    def v_power(n, coeff=1):
        return LaurentPoly({n: coeff})

    @staticmethod
    def from_int(n):
        return LaurentPoly({0: n})

    # -- structure ----------------------------------------------------

    def is_zero(self):
        return not self.coeffs

    def is_one(self):
        return self.coeffs == {0: Fraction(1)}

    def max_exp(self):
        """Largest exponent with nonzero coefficient; None for zero."""
        return max(self.coeffs) if self.coeffs else None

    def min_exp(self):
        return min(self.coeffs) if self.coeffs else None

    def __getitem__(self, e):
        return self.coeffs.get(e, Fraction(0))

    def items(self):
        return self.coeffs.items()

    def is_integral(self):
        """True if all coefficients are integers."""
        return all(c.denominator == 1 for c in self.coeffs.values())

    def in_v_inverse(self, strict=True):
        """True if supported on negative exponents (nonpositive if not strict)."""
        bound = 0 if strict else 1
        return all(e < bound for e in self.coeffs)

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other):
        other = _as_lp(other)
        d = dict(self.coeffs)
        for e, c in other.coeffs.items():
            s = d.get(e, Fraction(0)) + c
            if s:
                d[e] = s
            else:
                d.pop(e, None)
        out = LaurentPoly.__new__(LaurentPoly)
        out.coeffs = d
        out._hash = None
        return out

    __radd__ = __add__

    def __neg__(self):
        out = LaurentPoly.__new__(LaurentPoly)
        out.coeffs = {e: -c for e, c in self.coeffs.items()}
        out._hash = None
        return out

    def __sub__(self, other):
        return self + (-_as_lp(other))

    def __rsub__(self, other):
        return _as_lp(other) + (-self)

    def __mul__(self, other):
        other = _as_lp(other)
        d = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = e1 + e2
                s = d.get(e, Fraction(0)) + c1 * c2
                if s:
                    d[e] = s
                else:
                    d.pop(e, None)
        out = LaurentPoly.__new__(LaurentPoly)
        out.coeffs = d
        out._hash = None
        return out

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative powers are not Laurent-closed in general")
        result = LaurentPoly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def bar(self):
        """Bar involution: v^n -> v^(-n)."""
        out = LaurentPoly.__new__(LaurentPoly)
        out.coeffs = {-e: c for e, c in self.coeffs.items()}
        out._hash = None
        return out

    def shift(self, n):
        """Multiply by v^n."""
        out = LaurentPoly.__new__(LaurentPoly)
        out.coeffs = {e + n: c for e, c in self.coeffs.items()}
        out._hash = None
        return out

    def negative_part(self):
        """Terms with strictly negative exponent."""
        return LaurentPoly({e: c for e, c in self.coeffs.items() if e < 0})

    def div_exact(self, other):
        """Exact quotient self / other; raises NotDivisible otherwise."""
        other = _as_lp(other)
        if other.is_zero():
            raise ZeroDivisionError("division by the zero Laurent polynomial")
        if self.is_zero():
            return LaurentPoly.zero()
        rem = dict(self.coeffs)
        q = {}
        top_b = other.max_exp()
        lead_b = other.coeffs[top_b]
        # any exact quotient has exponents within this range
        min_q = self.min_exp() - other.min_exp()
        while rem:
            top_r = max(rem)
            e = top_r - top_b
            if e < min_q:
                raise NotDivisible(f"({self}) is not divisible by ({other})")
            c = rem[top_r] / lead_b
            q[e] = c
            for eb, cb in other.coeffs.items():
                k = eb + e
                s = rem.get(k, Fraction(0)) - c * cb
                if s:
                    rem[k] = s
                else:
                    rem.pop(k, None)
        return LaurentPoly(q)

    def divides(self, other):
        try:
            other.div_exact(self)
            return True
        except NotDivisible:
            return False

    def subs_q_for_v_squared(self):
        """Interpret self as a polynomial in q and substitute q = v^2."""
        return LaurentPoly({2 * e: c for e, c in self.coeffs.items()})

    def evaluate(self, x):
        """Evaluate at an exact rational (or integer) value of v."""
        x = Fraction(x)
        return sum((c * x ** e for e, c in self.coeffs.items()), Fraction(0))

    # -- comparisons / hash -------------------------------------------

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.from_int(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(tuple(sorted(self.coeffs.items())))
        return self._hash

    # -- rendering / serialization ------------------------------------

    def __repr__(self):
        return f"LaurentPoly({self!s})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for e in sorted(self.coeffs, reverse=True):
            c = self.coeffs[e]
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if e == 0:
                term = str(mag)
            else:
                var = "v" if e == 1 else f"v^{e}"
                term = var if mag == 1 else f"{mag}*{var}"
            if not parts:
                parts.append(term if sign == "+" else f"-{term}")
            else:
                parts.append(f"{sign} {term}")
        return " ".join(parts)

    def to_triples(self):
        """Serialize as a sorted list of (exponent, numerator, denominator)."""
        return [[e, self.coeffs[e].numerator, self.coeffs[e].denominator]
                for e in sorted(self.coeffs)]

    @staticmethod
    def from_triples(triples):
        return LaurentPoly({e: Fraction(n, d) for e, n, d in triples})


def _as_lp(x):
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, (int, Fraction)):
        return LaurentPoly({0: x})
    raise TypeError(f"cannot coerce {type(x)!r} to LaurentPoly")


ZERO = LaurentPoly.zero()
ONE = LaurentPoly.one()
V = LaurentPoly.v_power(1)
VINV = LaurentPoly.v_power(-1)


def quantum_int(n):
    """[n] = (v^n - v^-n)/(v - v^-1), antisymmetric in n."""
    if n == 0:
        return LaurentPoly.zero()
    if n < 0:
        return -quantum_int(-n)
    # v^(n-1) + v^(n-3) + ... + v^(1-n)
    return LaurentPoly({n - 1 - 2 * k: 1 for k in range(n)})


def quantum_factorial(n):
    """[n]! = [n][n-1]...[1], with [0]! = 1."""
    if n < 0:
        raise ValueError("quantum_factorial requires n >= 0")
    return reduce(lambda a, k: a * quantum_int(k), range(1, n + 1),
                  LaurentPoly.one())


def quantum_binomial(n, k):
    """Gaussian binomial [n choose k] as a Laurent polynomial."""
    if k < 0 or k > n:
        return LaurentPoly.zero()
    num = LaurentPoly.one()
    for j in range(k):
        num = num * quantum_int(n - j)
    return num.div_exact(quantum_factorial(k))


def _strip(lst):
    while lst and lst[-1] == 0:
        lst.pop()
    return lst


def _poly_gcd(a, b):
    """Monic gcd of two rational-coefficient polynomials (coefficient lists,
    index = degree)."""
    a = _strip(list(a))
    b = _strip(list(b))
    while b:
        # a mod b
        a = list(a)
        db, lb = len(b) - 1, b[-1]
        while len(a) - 1 >= db and a:
            da, la = len(a) - 1, a[-1]
            f = la / lb
            for i in range(db + 1):
                a[da - db + i] -= f * b[i]
            _strip(a)
        a, b = b, a
    if a:
        lead = a[-1]
        a = [c / lead for c in a]
    return a


class RationalFunc:
    """Quotient of two Laurent polynomials, kept in reduced form.

    The reduction shifts both parts into ordinary polynomials, cancels their
    exact gcd, and normalizes the denominator to leading coefficient 1 at its
    highest exponent.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        num = _as_lp(num)
        den = LaurentPoly.one() if den is None else _as_lp(den)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            self.num = LaurentPoly.zero()
            self.den = LaurentPoly.one()
            return
        # shift to ordinary polynomials
        s = min(num.min_exp(), den.min_exp())
        np_, dp = num.shift(-s), den.shift(-s)
        a = [np_[i] for i in range(np_.max_exp() + 1)]
        b = [dp[i] for i in range(dp.max_exp() + 1)]
        g = _poly_gcd(a, b)
        if len(g) > 1:
            glp = LaurentPoly({i: c for i, c in enumerate(g)})
            np_ = np_.div_exact(glp)
            dp = dp.div_exact(glp)
        # pull out common v-power so the denominator has min exponent 0
        t = dp.min_exp()
        np_, dp = np_.shift(-t), dp.shift(-t)
        lead = dp.coeffs[dp.max_exp()]
        if lead != 1:
            np_ = np_ * LaurentPoly({0: Fraction(1) / lead})
            dp = dp * LaurentPoly({0: Fraction(1) / lead})
        self.num = np_
        self.den = dp

    @staticmethod
    def from_laurent(p):
        return RationalFunc(p)

    def is_zero(self):
        return self.num.is_zero()

    def __add__(self, other):
        other = _as_rf(other)
        return RationalFunc(self.num * other.den + other.num * self.den,
                            self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        r = RationalFunc.__new__(RationalFunc)
        r.num = -self.num
        r.den = self.den
        return r

    def __sub__(self, other):
        return self + (-_as_rf(other))

    def __rsub__(self, other):
        return _as_rf(other) + (-self)

    def __mul__(self, other):
        other = _as_rf(other)
        return RationalFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _as_rf(other)
        if other.is_zero():
            raise ZeroDivisionError
        return RationalFunc(self.num * other.den, self.den * other.num)

    def bar(self):
        return RationalFunc(self.num.bar(), self.den.bar())

    def as_laurent(self):
        """Return self as a LaurentPoly; raises NotDivisible otherwise."""
        return self.num.div_exact(self.den)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, LaurentPoly)):
            other = RationalFunc(_as_lp(other))
        if not isinstance(other, RationalFunc):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        return f"RationalFunc(({self.num!s}) / ({self.den!s}))"

    def series_head(self, order):
        """Coefficients of v^0 .. v^(-order) of the expansion at v = infinity.

        Raises PositiveDegree if the expansion has a nonzero coefficient at a
        positive exponent.
        """
        if self.num.is_zero():
            return {}
        top = self.den.max_exp()
        lead = self.den.coeffs[top]
        head = {}
        rem = dict(self.num.coeffs)
        lowest = -order
        while rem:
            e = max(rem)
            k = e - top
            if k > 0:
                raise PositiveDegree(
                    f"expansion has nonzero coefficient at v^{k}")
            if k < lowest:
                break
            c = rem[e] / lead
            if c:
                head[k] = c
            for eb, cb in self.den.coeffs.items():
                j = eb + k
                s = rem.get(j, Fraction(0)) - c * cb
                if s:
                    rem[j] = s
                else:
                    rem.pop(j, None)
        return head


def _as_rf(x):
    if isinstance(x, RationalFunc):
        return x
    return RationalFunc(_as_lp(x))


def rf_series_head(f, order):
    """Series head of a RationalFunc at v = infinity (module-level form)."""
    return f.series_head(order)

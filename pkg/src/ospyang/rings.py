"""Exact scalar arithmetic: rationals, a sqrt(2) extension, univariate
polynomials and rational functions, and deterministic polynomial identity
testing on evaluation grids.

Everything here is exact. No floats, no rounding, ever. The scalar types
are immutable and safe to share between threads.
"""

from fractions import Fraction
from itertools import product

Rat = Fraction


class NonUnitLeadingCoefficient(ArithmeticError):
    """Series inversion needs an invertible constant coefficient."""


class PoleAtInfinity(ArithmeticError):
    """Rational function grows at infinity, no inverse-power expansion."""


class DegreeBoundExceeded(ArithmeticError):
    """Actual degree exceeds the bound the evaluation grid was sized for."""


def rat_str(q):
    """Serialize a rational as 'p/q' (or 'p' when the denominator is 1)."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return "%d/%d" % (q.numerator, q.denominator)


def rat_parse(s):
    return Fraction(s)


class Sqrt2:
    """Element a + b*sqrt(2) of the real quadratic field Q(sqrt 2).

    Needed for the spin basis of the symmetric-square fusion and for the
    Chevalley generators of so_3 type constructions, where normalization
    constants involve sqrt(2). Comparison against plain rationals works
    when the irrational part vanishes.
    """

    __slots__ = ("a", "b")

    def __init__(self, a=0, b=0):
        object.__setattr__(self, "a", Fraction(a))
        object.__setattr__(self, "b", Fraction(b))

    def __setattr__(self, *args):
        raise AttributeError("Sqrt2 values are immutable")

    @staticmethod
    def lift(x):
        if isinstance(x, Sqrt2):
            return x
        return Sqrt2(x, 0)

    def __add__(self, other):
        o = Sqrt2.lift(other)
        return Sqrt2(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __sub__(self, other):
        o = Sqrt2.lift(other)
        return Sqrt2(self.a - o.a, self.b - o.b)

    def __rsub__(self, other):
        return Sqrt2.lift(other) - self

    def __neg__(self):
        return Sqrt2(-self.a, -self.b)

    def __mul__(self, other):
        o = Sqrt2.lift(other)
        return Sqrt2(self.a * o.a + 2 * self.b * o.b, self.a * o.b + self.b * o.a)

    __rmul__ = __mul__

    def inverse(self):
        # (a + b r)^-1 = (a - b r) / (a^2 - 2 b^2), the norm is nonzero
        # for nonzero elements since sqrt(2) is irrational
        n = self.a * self.a - 2 * self.b * self.b
        if n == 0:
            raise ZeroDivisionError("inverse of zero in Q(sqrt 2)")
        return Sqrt2(self.a / n, -self.b / n)

    def __truediv__(self, other):
        return self * Sqrt2.lift(other).inverse()

    def __rtruediv__(self, other):
        return Sqrt2.lift(other) * self.inverse()

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.a == other
        if isinstance(other, Sqrt2):
            return self.a == other.a and self.b == other.b
        return NotImplemented

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b))

    def __bool__(self):
        return self.a != 0 or self.b != 0

    def conjugate(self):
        return Sqrt2(self.a, -self.b)

    def __repr__(self):
        if self.b == 0:
            return rat_str(self.a)
        if self.a == 0:
            return "%s*r2" % rat_str(self.b)
        return "(%s + %s*r2)" % (rat_str(self.a), rat_str(self.b))

    def __pow__(self, n):
        assert n >= 0
        out = Sqrt2(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out


SQRT2 = Sqrt2(0, 1)


def _trim(coeffs):
    n = len(coeffs)
    while n > 0 and not coeffs[n - 1]:
        n -= 1
    return tuple(coeffs[:n])


class Poly:
    """Univariate polynomial, coefficient list ordered low to high degree.

    Coefficients live in any exact field with +, *, - and / (Fraction or
    Sqrt2). The zero polynomial has degree -1 and an empty tuple.
    """

    __slots__ = ("c",)

    def __init__(self, coeffs=()):
        if isinstance(coeffs, Poly):
            object.__setattr__(self, "c", coeffs.c)
            return
        if not isinstance(coeffs, (tuple, list)):
            coeffs = (coeffs,)
        object.__setattr__(self, "c", _trim(tuple(coeffs)))

    def __setattr__(self, *args):
        raise AttributeError("Poly values are immutable")

    @property
    def degree(self):
        return len(self.c) - 1

    def is_zero(self):
        return not self.c

    @property
    def leading(self):
        if not self.c:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.c[-1]

    def __add__(self, other):
        o = other if isinstance(other, Poly) else Poly(other)
        a, b = self.c, o.c
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, x in enumerate(b):
            out[i] = out[i] + x
        return Poly(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly(tuple(-x for x in self.c))

    def __sub__(self, other):
        o = other if isinstance(other, Poly) else Poly(other)
        return self + (-o)

    def __rsub__(self, other):
        return Poly(other) - self

    def __mul__(self, other):
        if not isinstance(other, Poly):
            if not other:
                return Poly()
            return Poly(tuple(x * other for x in self.c))
        if not self.c or not other.c:
            return Poly()
        out = [None] * (len(self.c) + len(other.c) - 1)
        for i, x in enumerate(self.c):
            for j, y in enumerate(other.c):
                p = x * y
                out[i + j] = p if out[i + j] is None else out[i + j] + p
        return Poly(out)

    def __rmul__(self, other):
        return self * other

    def __pow__(self, n):
        assert n >= 0
        out = Poly((self._one_like(),))
        for _ in range(n):
            out = out * self
        return out

    def _one_like(self):
        for x in self.c:
            if x:
                return x / x
        return Fraction(1)

    def divmod(self, other):
        """Exact polynomial division with remainder over the field."""
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.c)
        dq = len(rem) - len(other.c)
        if dq < 0:
            return Poly(), self
        quo = [0] * (dq + 1)
        inv_lead = other._one_like() / other.leading
        for k in range(dq, -1, -1):
            coef = rem[k + len(other.c) - 1] * inv_lead
            quo[k] = coef
            if coef:
                for j, y in enumerate(other.c):
                    rem[k + j] = rem[k + j] - coef * y
        return Poly(quo), Poly(rem)

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def __eq__(self, other):
        o = other if isinstance(other, Poly) else Poly(other)
        return self.c == o.c

    def __hash__(self):
        return hash(self.c)

    def monic(self):
        if self.is_zero():
            return self
        inv = self._one_like() / self.leading
        return Poly(tuple(x * inv for x in self.c))

    def gcd(self, other):
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a.monic() if not a.is_zero() else a

    def __call__(self, x):
        out = 0
        for coef in reversed(self.c):
            out = out * x + coef
        return out

    def shifted(self, s):
        """The polynomial p(u - s) in the same variable u."""
        x_minus = Poly((-Fraction(s) if not isinstance(s, Sqrt2) else -s, 1))
        out = Poly()
        for coef in reversed(self.c):
            out = out * x_minus + Poly((coef,))
        return out

    def derivative(self):
        return Poly(tuple(self.c[i] * i for i in range(1, len(self.c))))

    def __repr__(self):
        if not self.c:
            return "Poly(0)"
        terms = []
        for i, x in enumerate(self.c):
            if x:
                terms.append("%r*u^%d" % (x, i))
        return "Poly(%s)" % " + ".join(terms)


def poly_u(*coeffs):
    """Convenience: poly_u(c0, c1, ...) = c0 + c1 u + ..."""
    return Poly(tuple(Fraction(c) for c in coeffs))


U = Poly((Fraction(0), Fraction(1)))


class RationalFunction:
    """Quotient of univariate polynomials, kept coprime with monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        num = num if isinstance(num, Poly) else Poly(num)
        den = Poly((Fraction(1),)) if den is None else (den if isinstance(den, Poly) else Poly(den))
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        g = num.gcd(den)
        if g.degree > 0:
            num = num // g
            den = den // g
        if not den.is_zero() and den.leading != 1:
            inv = den._one_like() / den.leading
            num = num * inv
            den = den * inv
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, *args):
        raise AttributeError("RationalFunction values are immutable")

    @staticmethod
    def lift(x):
        if isinstance(x, RationalFunction):
            return x
        if isinstance(x, Poly):
            return RationalFunction(x)
        return RationalFunction(Poly((Fraction(x),)))

    def is_zero(self):
        return self.num.is_zero()

    def __add__(self, other):
        o = RationalFunction.lift(other)
        return RationalFunction(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other):
        return self + (-RationalFunction.lift(other))

    def __rsub__(self, other):
        return RationalFunction.lift(other) - self

    def __mul__(self, other):
        o = RationalFunction.lift(other)
        return RationalFunction(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = RationalFunction.lift(other)
        if o.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RationalFunction(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        return RationalFunction.lift(other) / self

    def __eq__(self, other):
        o = RationalFunction.lift(other)
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __call__(self, x):
        d = self.den(x)
        if not d:
            raise ZeroDivisionError("evaluation at a pole")
        return self.num(x) / d

    def shifted(self, s):
        """The function r(u - s)."""
        return RationalFunction(self.num.shifted(s), self.den.shifted(s))

    def __repr__(self):
        return "RationalFunction(%r, %r)" % (self.num, self.den)


RF_ZERO = RationalFunction(Poly())
RF_ONE = RationalFunction(Poly((Fraction(1),)))


def _entry_map(m):
    """Normalize a matrix-like value (dict keyed by (i,j), or nested lists,
    or a bare scalar) to a dict of nonzero entries."""
    if isinstance(m, dict):
        return {k: v for k, v in m.items() if v}
    if isinstance(m, (list, tuple)):
        out = {}
        for i, row in enumerate(m):
            for j, v in enumerate(row):
                if v:
                    out[(i, j)] = v
        return out
    return {(0, 0): m} if m else {}


def polynomial_identity_check(lhs, rhs, degree_bound, nvars=2,
                              actual_degree=None, starts=None, max_restarts=60):
    """Decide lhs == rhs identically by exact evaluation on a grid.

    lhs and rhs are callables taking nvars rational arguments and returning
    a matrix (nested lists, or a sparse dict keyed by index pairs, or a
    scalar). Both sides must be rational-function valued with cleared
    degree at most degree_bound in each variable; a (degree_bound+1)^nvars
    grid of distinct abscissas then decides equality exactly.

    Grid points are chosen deterministically. Points where either side
    has a pole (ZeroDivisionError) are replaced deterministically, so the
    result never depends on chance.
    """
    if actual_degree is not None and actual_degree > degree_bound:
        raise DegreeBoundExceeded(
            "degree %s exceeds grid bound %s" % (actual_degree, degree_bound))
    npts = degree_bound + 1
    if starts is None:
        # offsets in distinct prime denominators keep u, v, u-v etc. away
        # from the half- and quarter-integer pole lattice
        starts = (Fraction(7), Fraction(22, 3), Fraction(36, 5), Fraction(51, 7))
    axes = [[starts[a] + k for k in range(npts)] for a in range(nvars)]
    fresh = [npts for _ in range(nvars)]

    restarts = 0
    while True:
        try:
            for pt in product(*axes):
                lv = _entry_map(lhs(*pt))
                rv = _entry_map(rhs(*pt))
                if lv != rv:
                    return False
            return True
        except ZeroDivisionError:
            if restarts >= max_restarts:
                raise
            # replace one abscissa on a rotating axis with a fresh value
            axis = restarts % nvars
            axes[axis][restarts // nvars % npts] = starts[axis] + fresh[axis]
            fresh[axis] += 1
            restarts += 1

"""Truncated series in inverse powers, and multivariate window series.

TruncatedSeries holds c_0..c_L of sum c_r u^(-r) with coefficients in an
arbitrary ring, possibly noncommutative (Fraction, Sqrt2, QMat, Sqrt2Mat).
All products respect operand order.

MultivariateWindowSeries tracks, per variable, which coefficients are
guaranteed exact. Multiplying a truncated tail (unknown below exponent
lo) by anything with support up to exponent hi contaminates the product
below lo + hi. Clearing a pole prefactor, that is multiplying by a degree
d polynomial, therefore shrinks the trusted window by exactly d. Equality
and zero tests consult only the trusted window.
"""

import math
from fractions import Fraction

from .rings import (NonUnitLeadingCoefficient, Poly, PoleAtInfinity,
                    RationalFunction)


def _is_zero_coeff(c):
    z = getattr(c, "is_zero", None)
    if z is not None:
        return z()
    return not c


def _invert_coeff(c):
    inv = getattr(c, "inverse", None)
    try:
        if inv is not None:
            return inv()
        if c == 0:
            raise ZeroDivisionError
        return 1 / c
    except ZeroDivisionError:
        raise NonUnitLeadingCoefficient("constant coefficient is not a unit")


class TruncatedSeries:
    """sum_{r=0..L} c_r u^(-r), exact up to and including order L."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        self.coeffs = tuple(coeffs)
        assert self.coeffs

    @property
    def order(self):
        return len(self.coeffs) - 1

    @staticmethod
    def constant(c, order):
        zero = c - c
        return TruncatedSeries((c,) + (zero,) * order)

    def truncate(self, order):
        assert order <= self.order
        return TruncatedSeries(self.coeffs[:order + 1])

    def __add__(self, other):
        L = min(self.order, other.order)
        return TruncatedSeries(tuple(a + b for a, b in
                                     zip(self.coeffs[:L + 1], other.coeffs[:L + 1])))

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return TruncatedSeries(tuple(-a for a in self.coeffs))

    def __mul__(self, other):
        """Truncated Cauchy product; left operand coefficients stay on the left."""
        L = min(self.order, other.order)
        out = []
        for r in range(L + 1):
            acc = None
            for s in range(r + 1):
                t = self.coeffs[s] * other.coeffs[r - s]
                acc = t if acc is None else acc + t
            out.append(acc)
        return TruncatedSeries(out)

    def scale(self, s):
        return TruncatedSeries(tuple(c * s for c in self.coeffs))

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        if self.order != other.order:
            return False
        return all(_is_zero_coeff(a - b) for a, b in zip(self.coeffs, other.coeffs))

    def is_zero(self):
        return all(_is_zero_coeff(c) for c in self.coeffs)

    def shift(self, c):
        """Expansion of f(u - c): (u-c)^(-r) = sum_{s>=r} C(s-1, r-1) c^(s-r) u^(-s)."""
        c = Fraction(c)
        L = self.order
        out = [self.coeffs[0]]
        for s in range(1, L + 1):
            acc = None
            for r in range(1, s + 1):
                w = math.comb(s - 1, r - 1) * c ** (s - r)
                if w == 0:
                    continue
                t = self.coeffs[r] * w
                acc = t if acc is None else acc + t
            out.append(acc if acc is not None else self.coeffs[0] - self.coeffs[0])
        return TruncatedSeries(out)

    def invert(self):
        """Two-sided inverse up to order L; needs an invertible constant term."""
        z0 = _invert_coeff(self.coeffs[0])
        out = [z0]
        for r in range(1, self.order + 1):
            acc = None
            for s in range(1, r + 1):
                t = self.coeffs[s] * out[r - s]
                acc = t if acc is None else acc + t
            out.append(-(z0 * acc))
        return TruncatedSeries(out)

    def map_coeffs(self, fn):
        return TruncatedSeries(tuple(fn(c) for c in self.coeffs))

    def to_json(self, serializer=str):
        return [serializer(c) for c in self.coeffs]

    def __repr__(self):
        return "TruncatedSeries(order=%d)" % self.order


def series_invert(f):
    return f.invert()


def series_shift(f, c):
    return f.shift(c)


def expand_rational(r, L):
    """Laurent expansion at infinity of a rational function, to order L.

    Requires deg num <= deg den; the denominator is monic by invariant.
    """
    if isinstance(r, Poly):
        r = RationalFunction(r)
    num, den = r.num, r.den
    if num.degree > den.degree:
        raise PoleAtInfinity("degree %d over degree %d" % (num.degree, den.degree))
    zero = Fraction(0)
    if num.is_zero():
        return TruncatedSeries((zero,) * (L + 1))
    k = den.degree - num.degree
    nrev = list(reversed(num.c))
    drev = list(reversed(den.c))
    # den is monic so drev[0] == 1 and the quotient recursion divides by 1
    q = []
    for i in range(L - k + 1):
        acc = nrev[i] if i < len(nrev) else zero
        for j in range(1, min(i, len(drev) - 1) + 1):
            acc -= drev[j] * q[i - j]
        q.append(acc)
    coeffs = [zero] * (L + 1)
    for i, v in enumerate(q):
        if k + i <= L:
            coeffs[k + i] = v
    return TruncatedSeries(coeffs)


NEG_INF = None  # lo marker for fully known (polynomial-type) series


class MultivariateWindowSeries:
    """Finite coefficient table in k variables with per-variable trust windows.

    table maps integer exponent tuples to ring coefficients. For variable i,
    coefficients with exponent below lo[i] are unknown (truncation garbage),
    unless lo[i] is None which means fully known. hi[i] bounds the support
    from above: exponents beyond hi[i] are known zero.
    """

    __slots__ = ("k", "table", "lo", "hi")

    def __init__(self, k, table, lo, hi):
        self.k = k
        self.table = table
        self.lo = tuple(lo)
        self.hi = tuple(hi)

    @staticmethod
    def constant(k, coeff):
        return MultivariateWindowSeries(k, {(0,) * k: coeff}, (NEG_INF,) * k, (0,) * k)

    @staticmethod
    def monomial(k, exps, coeff):
        exps = tuple(exps)
        return MultivariateWindowSeries(k, {exps: coeff}, (NEG_INF,) * k, exps)

    @staticmethod
    def from_truncated(ts, var, k):
        """Place a univariate truncated series on axis var of a k-variable window."""
        table = {}
        for r, c in enumerate(ts.coeffs):
            if not _is_zero_coeff(c):
                e = [0] * k
                e[var] = -r
                table[tuple(e)] = c
        lo = [NEG_INF] * k
        lo[var] = -ts.order
        hi = [0] * k
        return MultivariateWindowSeries(k, table, lo, hi)

    def __add__(self, other):
        assert self.k == other.k
        table = dict(self.table)
        for e, c in other.table.items():
            if e in table:
                s = table[e] + c
                if _is_zero_coeff(s):
                    del table[e]
                else:
                    table[e] = s
            else:
                table[e] = c
        lo = tuple(_lo_max(a, b) for a, b in zip(self.lo, other.lo))
        hi = tuple(max(a, b) for a, b in zip(self.hi, other.hi))
        return MultivariateWindowSeries(self.k, table, lo, hi)

    def __neg__(self):
        return MultivariateWindowSeries(self.k, {e: -c for e, c in self.table.items()},
                                        self.lo, self.hi)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        assert self.k == other.k
        table = {}
        for e1, c1 in self.table.items():
            for e2, c2 in other.table.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                t = c1 * c2
                if e in table:
                    table[e] = table[e] + t
                else:
                    table[e] = t
        table = {e: c for e, c in table.items() if not _is_zero_coeff(c)}
        lo = []
        for i in range(self.k):
            cands = []
            if self.lo[i] is not NEG_INF:
                cands.append(self.lo[i] + other.hi[i])
            if other.lo[i] is not NEG_INF:
                cands.append(other.lo[i] + self.hi[i])
            lo.append(max(cands) if cands else NEG_INF)
        hi = tuple(a + b for a, b in zip(self.hi, other.hi))
        return MultivariateWindowSeries(self.k, table, tuple(lo), hi)

    def scale(self, s):
        if not s:
            return MultivariateWindowSeries(self.k, {}, self.lo, self.hi)
        return MultivariateWindowSeries(self.k, {e: c * s for e, c in self.table.items()},
                                        self.lo, self.hi)

    def _known(self, e):
        return all(l is NEG_INF or x >= l for x, l in zip(e, self.lo))

    def trusted_entries(self):
        for e, c in self.table.items():
            if self._known(e) and not _is_zero_coeff(c):
                yield e, c

    def is_zero_on_window(self):
        for _ in self.trusted_entries():
            return False
        return True

    def first_nonzero(self):
        """Lexicographically least trusted exponent with a nonzero coefficient."""
        best = None
        for e, c in self.trusted_entries():
            if best is None or e < best[0]:
                best = (e, c)
        return best

    def window_empty(self):
        """True when no trusted exponent can carry support."""
        return any(l is not NEG_INF and l > h for l, h in zip(self.lo, self.hi))

    def windows(self):
        return tuple((l, h) for l, h in zip(self.lo, self.hi))

    def equal_on_window(self, other):
        return (self - other).is_zero_on_window()

    def __repr__(self):
        return "MultivariateWindowSeries(k=%d, terms=%d, windows=%s)" % (
            self.k, len(self.table), self.windows())


WindowSeries = MultivariateWindowSeries


def _lo_max(a, b):
    if a is NEG_INF:
        return b
    if b is NEG_INF:
        return a
    return max(a, b)


def poly_factor(k, terms):
    """Fully-known polynomial in k variables: terms maps exponent tuples to
    scalar coefficients. Used for pole prefactors like (u - v - c)."""
    ws = None
    for exps, coeff in terms.items():
        m = MultivariateWindowSeries.monomial(k, exps, coeff)
        ws = m if ws is None else ws + m
    assert ws is not None
    return ws

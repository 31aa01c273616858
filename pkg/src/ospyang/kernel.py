"""Exact dense and sparse matrix kernels.

QMat stores a rational matrix as an integer numpy array with one shared
positive denominator. While entry magnitudes stay provably below 2^62 the
integer array uses dtype int64 and numpy does the work; otherwise the array
holds Python ints (dtype object) and stays exact. Every int64 product is
guarded by an a priori magnitude bound, so overflow cannot happen silently.

SpMat is a dict-of-rows sparse matrix over any exact scalar type, used for
pointwise evaluation of large but sparse operators (leg embeddings of
R-matrices on triple tensor products).
"""

import math
from fractions import Fraction

import numpy as np

INT64_SAFE = 1 << 62


def _max_abs(z):
    if z.size == 0:
        return 0
    if z.dtype == object:
        return max((abs(int(x)) for x in z.flat), default=0)
    m = int(np.abs(z).max())
    return m


def _content(z):
    if z.dtype == object:
        g = 0
        for x in z.flat:
            g = math.gcd(g, abs(int(x)))
            if g == 1:
                return 1
        return g
    nz = z[z != 0]
    if nz.size == 0:
        return 0
    return int(np.gcd.reduce(np.abs(nz)))


def _to_object(z):
    if z.dtype == object:
        return z
    out = np.empty(z.shape, dtype=object)
    out[...] = [[int(v) for v in row] for row in z] if z.ndim == 2 else [int(v) for v in z]
    return out


def _shrink(z):
    """Downgrade an object array back to int64 when entries fit well."""
    if z.dtype != object:
        return z
    if _max_abs(z) < INT64_SAFE:
        return z.astype(np.int64)
    return z


class QMat:
    """Exact rational matrix: integer array z over a common denominator d."""

    __slots__ = ("z", "d", "_maxabs")

    def __init__(self, z, d=1, reduce=True):
        assert d > 0
        self.z = z
        self.d = d
        self._maxabs = None
        if reduce and d > 1:
            self._reduce()

    def _reduce(self):
        if self.d == 1:
            return
        c = _content(self.z)
        if c == 0:
            # zero matrix: the denominator is free, normalize it away
            self.d = 1
            self.z = _shrink(self.z)
            return
        g = math.gcd(c, self.d)
        if g > 1:
            if self.z.dtype == object:
                self.z = np.array([[int(v) // g for v in row] for row in self.z],
                                  dtype=object)
            else:
                self.z = self.z // g
            self.d //= g
            self._maxabs = None
        self.z = _shrink(self.z)

    @property
    def shape(self):
        return self.z.shape

    def max_abs(self):
        if self._maxabs is None:
            self._maxabs = _max_abs(self.z)
        return self._maxabs

    @staticmethod
    def identity(n):
        return QMat(np.eye(n, dtype=np.int64), 1, reduce=False)

    @staticmethod
    def zeros(n, m=None):
        return QMat(np.zeros((n, n if m is None else m), dtype=np.int64), 1, reduce=False)

    @staticmethod
    def from_rows(rows):
        """Build from nested lists of Fractions/ints."""
        fr = [[Fraction(v) for v in row] for row in rows]
        d = 1
        for row in fr:
            for v in row:
                d = d * v.denominator // math.gcd(d, v.denominator)
        ints = [[int(v * d) for v in row] for row in fr]
        mx = max((abs(x) for row in ints for x in row), default=0)
        if mx < INT64_SAFE:
            z = np.array(ints, dtype=np.int64)
        else:
            z = np.empty((len(ints), len(ints[0])), dtype=object)
            z[...] = ints
        return QMat(z, d)

    @staticmethod
    def from_entries(n, m, entries):
        """entries: dict {(i,j): int or Fraction}."""
        vals = {k: Fraction(v) for k, v in entries.items() if v}
        d = 1
        for v in vals.values():
            d = d * v.denominator // math.gcd(d, v.denominator)
        ints = {k: int(v * d) for k, v in vals.items()}
        mx = max((abs(x) for x in ints.values()), default=0)
        z = np.zeros((n, m), dtype=np.int64 if mx < INT64_SAFE else object)
        for (i, j), v in ints.items():
            z[i, j] = v
        return QMat(z, d, reduce=False)

    def entry(self, i, j):
        return Fraction(int(self.z[i, j]), self.d)

    def to_rows(self):
        return [[Fraction(int(v), self.d) for v in row] for row in self.z]

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return self
            n = self.shape[0]
            other = QMat.identity(n) * other
        l = self.d * other.d // math.gcd(self.d, other.d)
        s1, s2 = l // self.d, l // other.d
        bound = self.max_abs() * s1 + other.max_abs() * s2
        a, b = self.z, other.z
        # max(s1, s2) alone can exceed the int64 range while multiplying a
        # zero matrix, and numpy rejects the scalar before multiplying
        if (bound >= INT64_SAFE or max(s1, s2) >= INT64_SAFE
                or a.dtype == object or b.dtype == object):
            a, b = _to_object(a), _to_object(b)
        return QMat(a * s1 + b * s2, l)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-other if isinstance(other, QMat) else -Fraction(other))

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        m = QMat(-self.z if self.z.dtype != object else np.negative(self.z),
                 self.d, reduce=False)
        m._maxabs = self._maxabs
        return m

    def __mul__(self, other):
        """Scalar multiply (Fraction/int) or matrix product (QMat)."""
        if isinstance(other, QMat):
            return self._matmul(other)
        s = Fraction(other)
        if s == 0:
            return QMat.zeros(*self.shape)
        bound = self.max_abs() * abs(s.numerator)
        z = self.z
        if (bound >= INT64_SAFE or abs(s.numerator) >= INT64_SAFE
                or z.dtype == object):
            z = _to_object(z)
        return QMat(z * s.numerator, self.d * s.denominator)

    def __rmul__(self, other):
        # scalars commute with everything, matrix order is preserved elsewhere
        return self * other

    def _matmul(self, other):
        inner = self.shape[1]
        assert inner == other.shape[0]
        bound = inner * self.max_abs() * other.max_abs()
        a, b = self.z, other.z
        if bound >= INT64_SAFE or a.dtype == object or b.dtype == object:
            a, b = _to_object(a), _to_object(b)
        return QMat(a @ b, self.d * other.d)

    __matmul__ = _matmul

    def kron(self, other):
        bound = self.max_abs() * other.max_abs()
        a, b = self.z, other.z
        if bound >= INT64_SAFE or a.dtype == object or b.dtype == object:
            a, b = _to_object(a), _to_object(b)
        return QMat(np.kron(a, b), self.d * other.d)

    def transpose(self):
        m = QMat(self.z.T.copy(), self.d, reduce=False)
        m._maxabs = self._maxabs
        return m

    def trace(self):
        return Fraction(int(self.z.trace()) if self.z.dtype != object
                        else sum(int(self.z[i, i]) for i in range(self.shape[0])),
                        self.d)

    def is_zero(self):
        return not np.any(self.z)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return self.is_zero()
            return self == QMat.identity(self.shape[0]) * other
        if not isinstance(other, QMat):
            return NotImplemented
        return (self - other).is_zero()

    def inverse(self):
        """Exact inverse by Gauss-Jordan over Fractions. Meant for series
        constant terms, which are small or near-identity in practice."""
        n = self.shape[0]
        assert n == self.shape[1]
        if self.d == 1 and self.z.dtype != object and (self.z == np.eye(n, dtype=np.int64)).all():
            return self
        a = [[Fraction(int(v), self.d) for v in row] for row in self.z]
        inv = [[Fraction(1) if i == j else Fraction(0) for j in range(n)] for i in range(n)]
        for col in range(n):
            piv = None
            for r in range(col, n):
                if a[r][col]:
                    piv = r
                    break
            if piv is None:
                raise ZeroDivisionError("singular matrix")
            a[col], a[piv] = a[piv], a[col]
            inv[col], inv[piv] = inv[piv], inv[col]
            pv = a[col][col]
            a[col] = [x / pv for x in a[col]]
            inv[col] = [x / pv for x in inv[col]]
            for r in range(n):
                if r != col and a[r][col]:
                    f = a[r][col]
                    a[r] = [x - f * y for x, y in zip(a[r], a[col])]
                    inv[r] = [x - f * y for x, y in zip(inv[r], inv[col])]
        return QMat.from_rows(inv)

    def __repr__(self):
        return "QMat(%dx%d, den=%d, max=%d)" % (*self.shape, self.d, self.max_abs())


class Sqrt2Mat:
    """Matrix over Q(sqrt 2) stored as a pair of QMat: value = re + sqrt(2) im."""

    __slots__ = ("re", "im")

    def __init__(self, re, im=None):
        self.re = re
        self.im = QMat.zeros(*re.shape) if im is None else im

    @staticmethod
    def identity(n):
        return Sqrt2Mat(QMat.identity(n))

    @staticmethod
    def zeros(n, m=None):
        return Sqrt2Mat(QMat.zeros(n, m))

    @property
    def shape(self):
        return self.re.shape

    def __add__(self, other):
        o = self._lift(other)
        return Sqrt2Mat(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def _lift(self, other):
        if isinstance(other, Sqrt2Mat):
            return other
        if isinstance(other, QMat):
            return Sqrt2Mat(other)
        raise TypeError(other)

    def __neg__(self):
        return Sqrt2Mat(-self.re, -self.im)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __mul__(self, other):
        from .rings import Sqrt2
        if isinstance(other, (Sqrt2Mat, QMat)):
            o = self._lift(other)
            return Sqrt2Mat(self.re @ o.re + (self.im @ o.im) * 2,
                            self.re @ o.im + self.im @ o.re)
        if isinstance(other, Sqrt2):
            return Sqrt2Mat(self.re * other.a + self.im * (2 * other.b),
                            self.re * other.b + self.im * other.a)
        return Sqrt2Mat(self.re * other, self.im * other)

    def __rmul__(self, other):
        from .rings import Sqrt2
        if isinstance(other, (Sqrt2Mat, QMat)):
            return self._lift(other) * self
        if isinstance(other, Sqrt2):
            # scalar, commutes
            return self * other
        return self * other

    __matmul__ = __mul__

    def kron(self, other):
        o = self._lift(other)
        return Sqrt2Mat(self.re.kron(o.re) + self.im.kron(o.im) * 2,
                        self.re.kron(o.im) + self.im.kron(o.re))

    def entry(self, i, j):
        from .rings import Sqrt2
        return Sqrt2(self.re.entry(i, j), self.im.entry(i, j))

    def is_zero(self):
        return self.re.is_zero() and self.im.is_zero()

    def __eq__(self, other):
        return (self - self._lift(other)).is_zero()

    def inverse(self):
        """Inverse via the regular representation [[A, 2B], [B, A]]."""
        n = self.shape[0]
        a, b = self.re.to_rows(), self.im.to_rows()
        big = [[Fraction(0)] * (2 * n) for _ in range(2 * n)]
        for i in range(n):
            for j in range(n):
                big[i][j] = a[i][j]
                big[i][n + j] = 2 * b[i][j]
                big[n + i][j] = b[i][j]
                big[n + i][n + j] = a[i][j]
        binv = QMat.from_rows(big).inverse().to_rows()
        re = QMat.from_rows([row[:n] for row in binv[:n]])
        im = QMat.from_rows([row[:n] for row in binv[n:]])
        return Sqrt2Mat(re, im)

    def __repr__(self):
        return "Sqrt2Mat(%dx%d)" % self.shape


class SpMat:
    """Sparse matrix over any exact scalar: dict of rows {i: {j: value}}."""

    __slots__ = ("rows", "nr", "nc")

    def __init__(self, nr, nc, rows=None):
        self.nr = nr
        self.nc = nc
        self.rows = {} if rows is None else rows

    @staticmethod
    def identity(n, one=Fraction(1)):
        return SpMat(n, n, {i: {i: one} for i in range(n)})

    def set(self, i, j, v):
        if v:
            self.rows.setdefault(i, {})[j] = v
        else:
            r = self.rows.get(i)
            if r and j in r:
                del r[j]
                if not r:
                    del self.rows[i]

    def get(self, i, j):
        return self.rows.get(i, {}).get(j, 0)

    def __add__(self, other):
        assert (self.nr, self.nc) == (other.nr, other.nc)
        out = {i: dict(r) for i, r in self.rows.items()}
        for i, r in other.rows.items():
            tr = out.setdefault(i, {})
            for j, v in r.items():
                s = tr.get(j, 0) + v
                if s:
                    tr[j] = s
                elif j in tr:
                    del tr[j]
            if not tr:
                del out[i]
        return SpMat(self.nr, self.nc, out)

    def __neg__(self):
        return SpMat(self.nr, self.nc,
                     {i: {j: -v for j, v in r.items()} for i, r in self.rows.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, s):
        if not s:
            return SpMat(self.nr, self.nc)
        return SpMat(self.nr, self.nc,
                     {i: {j: v * s for j, v in r.items()} for i, r in self.rows.items()})

    def __matmul__(self, other):
        assert self.nc == other.nr
        out = {}
        orows = other.rows
        for i, r in self.rows.items():
            acc = {}
            for k, a in r.items():
                br = orows.get(k)
                if not br:
                    continue
                for j, b in br.items():
                    acc[j] = acc.get(j, 0) + a * b
            acc = {j: v for j, v in acc.items() if v}
            if acc:
                out[i] = acc
        return SpMat(self.nr, other.nc, out)

    def kron(self, other):
        out = {}
        for i1, r1 in self.rows.items():
            for i2, r2 in other.rows.items():
                row = {}
                for j1, a in r1.items():
                    for j2, b in r2.items():
                        v = a * b
                        if v:
                            row[j1 * other.nc + j2] = v
                if row:
                    out[i1 * other.nr + i2] = row
        return SpMat(self.nr * other.nr, self.nc * other.nc, out)

    def entries(self):
        for i, r in self.rows.items():
            for j, v in r.items():
                yield i, j, v

    def to_dict(self):
        return {(i, j): v for i, j, v in self.entries()}

    def is_zero(self):
        return not self.rows

    def __eq__(self, other):
        if isinstance(other, SpMat):
            return self.to_dict() == other.to_dict()
        return NotImplemented

    def nnz(self):
        return sum(len(r) for r in self.rows.values())

    def __repr__(self):
        return "SpMat(%dx%d, nnz=%d)" % (self.nr, self.nc, self.nnz())

"""Parity bookkeeping and graded linear algebra.

A parity sequence assigns Z_2-parities to the first r = floor(N/2) + m
basis vectors of a superspace with dim V_even = N, dim V_odd = 2m; the
rest of the parity vector is forced by the mirror symmetry bar(i) =
bar(i'), where i' = N + 2m + 1 - i, and for odd N the middle vector is
even. The sequence theta of signs, the constant kappa = N/2 - m - 1, and
the involution all derive from that data.

Matrix products here are always plain matrix products. The Koszul sign
of the defining T-matrix convention is applied at entry extraction and
insertion boundaries only, never inside multiplication.
"""

from fractions import Fraction
from itertools import combinations

from .kernel import SpMat


class IndexOutOfRange(IndexError):
    pass


class DepthOutOfRange(ValueError):
    pass


class ParitySequence:
    """N, m and the parities of v_1..v_r, r = floor(N/2) + m."""

    __slots__ = ("N", "m", "seq")

    def __init__(self, N, m, seq):
        seq = tuple(int(x) for x in seq)
        r = N // 2 + m
        if len(seq) != r:
            raise ValueError("parity sequence must have length %d, got %d" % (r, len(seq)))
        if any(x not in (0, 1) for x in seq):
            raise ValueError("parities must be 0 or 1")
        if sum(seq) != m:
            raise ValueError("parity sequence must contain exactly m=%d odd entries" % m)
        if N < 0 or m < 0 or N + 2 * m == 0:
            raise ValueError("need N, m >= 0 and N + 2m > 0")
        self.N = N
        self.m = m
        self.seq = seq

    @classmethod
    def parse(cls, N, m, text):
        """CLI format: comma-separated 0/1 entries, e.g. '1,0'."""
        text = text.strip()
        seq = tuple(int(t) for t in text.split(",")) if text else ()
        return cls(N, m, seq)

    @property
    def r(self):
        return self.N // 2 + self.m

    @property
    def dim(self):
        return self.N + 2 * self.m

    def label(self):
        return "osp(%d|%d)[%s]" % (self.N, self.m * 2, ",".join(str(x) for x in self.seq))

    def __eq__(self, other):
        return (self.N, self.m, self.seq) == (other.N, other.m, other.seq)

    def __hash__(self):
        return hash((self.N, self.m, self.seq))

    def __repr__(self):
        return "ParitySequence(N=%d, m=%d, seq=%s)" % (self.N, self.m, self.seq)


def all_parity_sequences(N, m):
    """Every admissible parity assignment for given N, m."""
    r = N // 2 + m
    out = []
    for odd_positions in combinations(range(r), m):
        seq = [0] * r
        for p in odd_positions:
            seq[p] = 1
        out.append(ParitySequence(N, m, tuple(seq)))
    return out


def all_index_data(max_dim):
    """All IndexData with 1 <= N + 2m <= max_dim, N >= 1, skipping nothing."""
    out = []
    for dim in range(1, max_dim + 1):
        for m in range(0, dim // 2 + 1):
            N = dim - 2 * m
            if N < 0 or N + 2 * m == 0:
                continue
            for ps in all_parity_sequences(N, m):
                out.append(IndexData(ps))
    return out


class IndexData:
    """Full parity vector, involution, theta signs and kappa for one
    parity sequence. Indices are 1-based throughout, as in the source
    conventions; the raw tuples are 0-based internally."""

    __slots__ = ("ps", "par", "thetas", "kappa")

    def __init__(self, ps):
        self.ps = ps
        n2m = ps.dim
        par = [None] * n2m
        for i, p in enumerate(ps.seq):
            par[i] = p
            par[n2m - 1 - i] = p
        if ps.N % 2 == 1:
            par[ps.r] = 0  # middle vector is even for odd N
        assert all(p is not None for p in par)
        self.par = tuple(par)
        half = (ps.N + 1) // 2 + ps.m
        th = [None] * n2m
        for i in range(1, half + 1):
            th[i - 1] = 1
            th[n2m - i] = -1 if par[i - 1] else 1
        self.thetas = tuple(th)
        self.kappa = Fraction(ps.N, 2) - ps.m - 1

    @property
    def dim(self):
        return self.ps.dim

    @property
    def N(self):
        return self.ps.N

    @property
    def m(self):
        return self.ps.m

    def check_index(self, i):
        if not 1 <= i <= self.dim:
            raise IndexOutOfRange("index %d outside 1..%d" % (i, self.dim))

    def prime(self, i):
        self.check_index(i)
        return self.dim + 1 - i

    def bar(self, i):
        self.check_index(i)
        return self.par[i - 1]

    def theta(self, i):
        self.check_index(i)
        return self.thetas[i - 1]

    def sign(self, i):
        """(-1)^bar(i)."""
        return -1 if self.bar(i) else 1

    def slice(self, s):
        """Index data of the subspace spanned by v_i with s < i < s', which
        is itself an orthosymplectic superspace for the induced parities."""
        if not 0 <= s <= (self.N - 1) // 2 + self.m:
            raise DepthOutOfRange("depth %d outside 0..%d" % (s, (self.N - 1) // 2 + self.m))
        N2, m2 = self.N, self.m
        for i in range(1, s + 1):
            if self.bar(i):
                m2 -= 1
            else:
                N2 -= 2
        return IndexData(ParitySequence(N2, m2, self.ps.seq[s:]))

    def kappa_truncated(self, s):
        """kappa - sum_{i<=s} (-1)^bar(i); agrees with the sliced kappa."""
        k = self.kappa
        for i in range(1, s + 1):
            k -= self.sign(i)
        return k

    def __repr__(self):
        return "IndexData(%s)" % self.ps.label()


def involution(idx, i):
    return idx.prime(i)


def theta(idx, i):
    return idx.theta(i)


def tensor_parities(p1, p2):
    """Parities of the ordered tensor basis v_i (x) v_k."""
    return tuple((a + b) % 2 for a in p1 for b in p2)


class SuperMatrix:
    """Dense matrix with a Z_2 parity attached to each basis index.

    Entries can live in any exact ring (Fraction, RationalFunction,
    series...). Products are plain matrix products.
    """

    __slots__ = ("parities", "rows")

    def __init__(self, parities, rows):
        self.parities = tuple(parities)
        self.rows = [list(r) for r in rows]
        assert len(self.rows) == len(self.parities)
        assert all(len(r) == len(self.parities) for r in self.rows)

    @property
    def dim(self):
        return len(self.parities)

    @staticmethod
    def zeros(parities, zero=Fraction(0)):
        n = len(parities)
        return SuperMatrix(parities, [[zero for _ in range(n)] for _ in range(n)])

    @staticmethod
    def identity(parities, one=Fraction(1), zero=Fraction(0)):
        n = len(parities)
        return SuperMatrix(parities, [[one if i == j else zero for j in range(n)]
                                      for i in range(n)])

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def entry1(self, i, j):
        """1-based entry access."""
        return self.rows[i - 1][j - 1]

    def __add__(self, other):
        assert self.parities == other.parities
        return SuperMatrix(self.parities,
                           [[a + b for a, b in zip(r1, r2)]
                            for r1, r2 in zip(self.rows, other.rows)])

    def __sub__(self, other):
        assert self.parities == other.parities
        return SuperMatrix(self.parities,
                           [[a - b for a, b in zip(r1, r2)]
                            for r1, r2 in zip(self.rows, other.rows)])

    def __neg__(self):
        return SuperMatrix(self.parities, [[-a for a in r] for r in self.rows])

    def scale(self, s):
        return SuperMatrix(self.parities, [[a * s for a in r] for r in self.rows])

    def __matmul__(self, other):
        assert self.parities == other.parities
        n = self.dim
        cols = list(zip(*other.rows))
        out = []
        for r in self.rows:
            row = []
            for c in cols:
                acc = None
                for a, b in zip(r, c):
                    t = a * b
                    acc = t if acc is None else acc + t
                row.append(acc)
            out.append(row)
        return SuperMatrix(self.parities, out)

    def __eq__(self, other):
        if not isinstance(other, SuperMatrix):
            return NotImplemented
        return self.parities == other.parities and all(
            not _nonzero(a - b)
            for r1, r2 in zip(self.rows, other.rows) for a, b in zip(r1, r2))

    def is_zero(self):
        return all(not _nonzero(a) for r in self.rows for a in r)

    def map_entries(self, fn):
        return SuperMatrix(self.parities, [[fn(a) for a in r] for r in self.rows])

    def to_json(self, serializer=str):
        return {"dim": self.dim, "parities": list(self.parities),
                "entries": [[serializer(a) for a in r] for r in self.rows]}

    def __repr__(self):
        return "SuperMatrix(dim=%d)" % self.dim


def _nonzero(c):
    z = getattr(c, "is_zero", None)
    if z is not None:
        return not z()
    return bool(c)


def graded_tensor(A, B):
    """Graded tensor product as a flat matrix on the ordered tensor basis.

    The Koszul rule (x (x) y)(x' (x) y') = (-1)^{|y| |x'|} xx' (x) yy'
    corresponds entrywise to sign (-1)^{(bar_k + bar_l) bar_j} on the
    product A_ij B_kl, with j a column index of A and (k, l) indices of B.
    """
    pa, pb = A.parities, B.parities
    na, nb = len(pa), len(pb)
    out_par = tensor_parities(pa, pb)
    n = na * nb
    rows = [[None] * n for _ in range(n)]
    for i in range(na):
        for j in range(na):
            a = A.rows[i][j]
            for k in range(nb):
                for l in range(nb):
                    v = a * B.rows[k][l]
                    if (pb[k] + pb[l]) % 2 and pa[j]:
                        v = -v
                    rows[i * nb + k][j * nb + l] = v
    return SuperMatrix(out_par, rows)


def graded_kron_sp(A, B, pa, pb):
    """Same Koszul sign rule for sparse numeric matrices."""
    nb = B.nr
    out = SpMat(A.nr * B.nr, A.nc * B.nc)
    for i, j, a in A.entries():
        for k, l, b in B.entries():
            v = a * b
            if (pb[k] + pb[l]) % 2 and pa[j]:
                v = -v
            out.set(i * nb + k, j * nb + l, v)
    return out


def permutation_P_entries(par):
    """Sparse entries of P = sum (-1)^bar(j) e_ij (x) e_ji: the graded swap
    P(v_a (x) v_b) = (-1)^{bar(a) bar(b)} v_b (x) v_a."""
    n = len(par)
    ent = {}
    for a in range(n):
        for b in range(n):
            s = -1 if par[a] and par[b] else 1
            ent[(b * n + a, a * n + b)] = Fraction(s)
    return ent


def permutation_P(idx):
    """P as a dense SuperMatrix on V (x) V."""
    par = idx.par if isinstance(idx, IndexData) else tuple(idx)
    n = len(par)
    tp = tensor_parities(par, par)
    M = SuperMatrix.zeros(tp)
    for (i, j), v in permutation_P_entries(par).items():
        M.rows[i][j] = v
    return M


def q_operator_entries(idx):
    """Sparse entries of Q = sum (-1)^{bar(i) bar(j)} theta_i theta_j
    e_ij (x) e_i'j'. Support: rows (i, i'), columns (j, j')."""
    n = idx.dim
    ent = {}
    for i in range(1, n + 1):
        ip = idx.prime(i)
        for j in range(1, n + 1):
            jp = idx.prime(j)
            s = idx.theta(i) * idx.theta(j)
            if idx.bar(i) and idx.bar(j):
                s = -s
            # Koszul sign of insertion: A = e_ij, B = e_i'j' at column j
            if (idx.bar(i) + idx.bar(j)) % 2 and idx.bar(j):
                s = -s
            ent[((i - 1) * n + (ip - 1), (j - 1) * n + (jp - 1))] = Fraction(s)
    return ent


def q_operator(idx):
    tp = tensor_parities(idx.par, idx.par)
    M = SuperMatrix.zeros(tp)
    for (i, j), v in q_operator_entries(idx).items():
        M.rows[i][j] = v
    return M


def supertranspose(A, idx):
    """(A^t)_ij = (-1)^{bar(i) bar(j) + bar(j)} theta_i theta_j A_{j'i'}."""
    n = idx.dim
    assert A.dim == n
    out = SuperMatrix.zeros(A.parities, zero=None)
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            v = A.entry1(idx.prime(j), idx.prime(i))
            s = idx.theta(i) * idx.theta(j)
            if idx.bar(i) and idx.bar(j):
                s = -s
            if idx.bar(j):
                s = -s
            out.rows[i - 1][j - 1] = v * s if s != 1 else v
    return out

"""Evaluation representations of the extended orthosymplectic Yangian.

The auxiliary-space product R_{0,k}(u-a_k)...R_{0,1}(u-a_1) realizes T(u)
on W = V^{(x)k} as a matrix of truncated series whose coefficients are
exact rational operators on W.  This module builds that matrix, checks the
defining commutation system coefficient by coefficient, extracts the
scalar series c(u) = T(u-kappa)T^t(u) together with its multiplicative
square root, applies multiplicative twists, and verifies the level-one
truncation against the finite-dimensional commutation relations.
"""

import math
from fractions import Fraction

import numpy as np

from .kernel import QMat
from .series import TruncatedSeries
from .supermatrix import (SuperMatrix, permutation_P_entries,
                          q_operator_entries, tensor_parities)


class DuplicatePoints(ValueError):
    pass


class PoleCollision(ValueError):
    pass


class BadConstantTerm(ValueError):
    pass


class NotScalar(ValueError):
    pass


def w_parities(idx, k):
    """Parity vector of the ordered tensor basis of V^{(x)k}."""
    out = (0,)
    for _ in range(k):
        out = tensor_parities(out, idx.par)
    return out


def _flat_pq(idx):
    n = idx.dim
    P = QMat.from_entries(n * n, n * n, permutation_P_entries(idx.par))
    Q = QMat.from_entries(n * n, n * n, q_operator_entries(idx))
    return P, Q


def _embedded_pq(idx, k, pos):
    """P and Q acting on legs (0, pos) of V^{(x)(k+1)}, leg 0 auxiliary.

    P and Q are globally even, so adjacent legs embed by a plain Kronecker
    product; leg pos is brought next to leg 0 by conjugating with a chain
    of adjacent swaps.
    """
    n = idx.dim
    P, Q = _flat_pq(idx)
    rest = QMat.identity(n ** (k - 1))
    Pe, Qe = P.kron(rest), Q.kron(rest)
    if pos == 1:
        return Pe, Qe
    S = QMat.from_entries(n * n, n * n, permutation_P_entries(idx.par))
    ks = []
    for j in range(1, pos):
        kj = QMat.identity(n ** j).kron(S)
        if k - 1 - j > 0:
            kj = kj.kron(QMat.identity(n ** (k - 1 - j)))
        ks.append(kj)
    C = ks[-1]
    for kj in reversed(ks[:-1]):
        C = C @ kj
    Ci = ks[0]
    for kj in ks[1:]:
        Ci = Ci @ kj
    return C @ Pe @ Ci, C @ Qe @ Ci


class RepresentedT:
    """T(u) on W = V^{(x)k}: entries t_ij(u) as truncated series over
    exact operators, stored so that matrix products compose plainly."""

    __slots__ = ("idx", "points", "L", "ts", "wdim", "wpar")

    def __init__(self, idx, points, L, ts):
        self.idx = idx
        self.points = tuple(Fraction(a) for a in points)
        self.L = L
        self.ts = ts
        self.wpar = w_parities(idx, len(self.points))
        self.wdim = len(self.wpar)
        n = idx.dim
        eye = QMat.identity(self.wdim)
        for i in range(n):
            for j in range(n):
                c0 = ts[i][j].coeffs[0]
                assert c0 == (eye if i == j else 0), "constant term must be the identity"

    def t(self, i, j):
        """Series of the (i, j) entry, indices 1-based."""
        self.idx.check_index(i)
        self.idx.check_index(j)
        return self.ts[i - 1][j - 1]

    def matrix(self):
        """The full matrix as a SuperMatrix of series."""
        return SuperMatrix(self.idx.par, [row[:] for row in self.ts])

    def coefficient_table(self, r):
        """All t^{(r)}_ij as a nested list of operators."""
        return [[s.coeffs[r] for s in row] for row in self.ts]


def evaluation_T(idx, points, L=6):
    """Expand R_{0,k}(u-a_k)...R_{0,1}(u-a_1) to order L and extract the
    entry series t_ij(u).

    Points must be pairwise distinct, and no ordered difference may hit
    kappa exactly; all expansions are at u = infinity, so nearby values
    are fine.
    """
    pts = [Fraction(a) for a in points]
    k = len(pts)
    for x in range(k):
        for y in range(x + 1, k):
            if pts[x] == pts[y]:
                raise DuplicatePoints("evaluation points %s and %s coincide" % (pts[x], pts[y]))
    for x in range(k):
        for y in range(k):
            if x != y and pts[x] - pts[y] == idx.kappa:
                raise PoleCollision(
                    "difference %s - %s equals kappa = %s" % (pts[x], pts[y], idx.kappa))
    n = idx.dim
    d = n ** k
    big = n * d
    acc = [QMat.identity(big)] + [QMat.zeros(big, big) for _ in range(L)]
    for pos in range(k, 0, -1):
        Pe, Qe = _embedded_pq(idx, k, pos)
        a = pts[pos - 1]
        fac = [QMat.identity(big)]
        for s in range(1, L + 1):
            fac.append(Pe * (-(a ** (s - 1))) + Qe * ((a + idx.kappa) ** (s - 1)))
        out = []
        for s in range(L + 1):
            tot = acc[0] @ fac[s]
            for r in range(1, s + 1):
                tot = tot + acc[r] @ fac[s - r]
            out.append(tot)
        acc = out
    wpar = w_parities(idx, k)
    sgn_w = np.array([1 if p == 0 else -1 for p in wpar], dtype=np.int64)
    ts = []
    for i in range(n):
        row = []
        for j in range(n):
            s0 = 1 if (idx.par[i] * idx.par[j] + idx.par[j]) % 2 == 0 else -1
            coeffs = []
            for s in range(L + 1):
                zb = np.array(acc[s].z[i * d:(i + 1) * d, j * d:(j + 1) * d])
                if idx.par[j]:
                    zb = zb * sgn_w[:, None] * sgn_w[None, :]
                if s0 < 0:
                    zb = -zb
                coeffs.append(QMat(zb, acc[s].d))
            row.append(TruncatedSeries(coeffs))
        ts.append(row)
    return RepresentedT(idx, pts, L, ts)


def perturb_entry(T, i, j, order=2, value=1):
    """Copy of T with value * u^{-order} * Id added to entry (i, j);
    the deliberate way to produce negative controls."""
    assert 1 <= order <= T.L
    ts = [[s for s in row] for row in T.ts]
    coeffs = list(ts[i - 1][j - 1].coeffs)
    coeffs[order] = coeffs[order] + QMat.identity(T.wdim) * Fraction(value)
    ts[i - 1][j - 1] = TruncatedSeries(coeffs)
    return RepresentedT(T.idx, T.points, T.L, ts)


def _int_tensor(T):
    """All coefficients over one common denominator, plus the max entry."""
    n, L = T.idx.dim, T.L
    den = 1
    for row in T.ts:
        for s in row:
            for c in s.coeffs:
                den = den * c.d // math.gcd(den, c.d)
    bound = 0
    for row in T.ts:
        for s in row:
            for c in s.coeffs:
                bound = max(bound, int(c.max_abs()) * (den // c.d))
    return den, bound


def _is_prime(x):
    if x < 2:
        return False
    if x % 2 == 0:
        return x == 2
    f = 3
    while f * f <= x:
        if x % f == 0:
            return False
        f += 2
    return True


def _primes_covering(bound):
    """Distinct primes just below 2^26 whose product exceeds bound."""
    out, prod, c = [], 1, (1 << 26) - 3
    while prod <= bound:
        while not _is_prime(c):
            c -= 2
        out.append(c)
        prod *= c
        c -= 2
    return out


def _mm_split(A, Bm):
    """Exact product of residue matrices as two float64 products.

    Entries must lie in (-2^26, 2^26) and the inner dimension below 2^13,
    so each half-word partial stays inside the float64 exact-integer range.
    """
    Bf = Bm.astype(np.float64)
    hi = np.rint((A >> 13).astype(np.float64) @ Bf).astype(np.int64)
    lo = np.rint((A & 8191).astype(np.float64) @ Bf).astype(np.int64)
    return (hi << 13) + lo


def _uvk(X, p_, q_):
    """Coefficients of q*(u - v - kappa)*X, kappa = p/q; loses one order."""
    return (q_ * (X[:, 1:, :, :, :-1, :] - X[:, :-1, :, :, 1:, :])
            - p_ * X[:, :-1, :, :, :-1, :])


def _uv(X):
    """Coefficients of (u - v)*X; loses one order."""
    return X[:, 1:, :, :, :-1, :] - X[:, :-1, :, :, 1:, :]


def check_rtt_termwise(T):
    """Check the defining commutation system on the comparison window.

    For every quadruple (i, j, k, l) the bivariate identity, cleared of
    its two simple poles, must vanish coefficient-wise for orders up to
    L - 2 in each variable.  Products of coefficient tables are batched
    per row pair into ordinary matrix multiplications; the arithmetic
    runs in float64 when every intermediate provably fits into the 2^53
    exact-integer range, in int64 under the wider 2^63 bound, and
    otherwise modulo enough word-sized primes that a residual below the
    magnitude bound vanishing in every residue field is exactly zero.
    """
    idx, L = T.idx, T.L
    n, d = idx.dim, T.wdim
    par = np.array(idx.par, dtype=np.int64)
    th0 = np.array([idx.theta(i) for i in range(1, n + 1)], dtype=np.int64)
    pr0 = np.array([idx.prime(i) - 1 for i in range(1, n + 1)], dtype=np.int64)
    p_, q_ = idx.kappa.numerator, idx.kappa.denominator

    den, B = _int_tensor(T)
    M0 = n * d * B * B
    F = 8 * (2 * q_ + abs(p_)) * M0
    if M0 < (1 << 53) and F < (1 << 63):
        tier = "f8"
    elif F < (1 << 63):
        tier = "i8"
    else:
        tier = "crt"

    TT = np.zeros((n, n, L + 1, d, d), dtype=object if tier == "crt" else np.int64)
    for i in range(n):
        for j in range(n):
            for s in range(L + 1):
                c = T.ts[i][j].coeffs[s]
                scal = den // c.d
                if tier == "crt":
                    TT[i, j, s] = c.z.astype(object) * scal
                else:
                    TT[i, j, s] = np.asarray(c.z * scal, dtype=np.int64)

    rows = n * (L + 1) * d
    pe = np.where(par == 0)[0]
    po = np.where(par == 1)[0]
    jsgn = np.where(par == 0, 1, -1).astype(np.int64)
    failures = set()

    def run_pass(TTn, mm, red):
        TTrow = TTn.reshape(n, rows, d)
        TTcol = np.ascontiguousarray(TTn.transpose(0, 3, 1, 2, 4)).reshape(n, d, rows)

        # S1-sum: G1[(j,a,x),(l,b,z)] = sum_p theta_p (-1)^{j.p} t_pj^a t_p'l^b.
        # The p-dependent parity sign splits by the parity of p, so two plain
        # products cover every column parity at once.
        A1s = np.ascontiguousarray((TTn * th0[:, None, None, None, None]).transpose(1, 2, 3, 0, 4))
        B1s = np.ascontiguousarray(TTn[pr0].transpose(0, 3, 1, 2, 4))
        ge = mm(A1s[:, :, :, pe, :].reshape(rows, pe.size * d),
                B1s[pe].reshape(pe.size * d, rows))
        go = mm(A1s[:, :, :, po, :].reshape(rows, po.size * d),
                B1s[po].reshape(po.size * d, rows))
        G1 = red(ge.reshape(n, (L + 1) * d, rows)
                 + jsgn[:, None, None] * go.reshape(n, (L + 1) * d, rows))
        G1 = G1.reshape(n, L + 1, d, n, L + 1, d)
        del ge, go, A1s, B1s

        # S2-sum: G2[(k,b,x),(i,a,z)] = sum_p theta_p' (-1)^{i.p} t_kp'^b t_ip^a.
        thp = th0[pr0]
        A2s = np.ascontiguousarray((TTn[:, pr0] * thp[None, :, None, None, None]).transpose(0, 2, 3, 1, 4))
        B2s = np.ascontiguousarray(TTn.transpose(1, 3, 0, 2, 4))
        ge = mm(A2s[:, :, :, pe, :].reshape(rows, pe.size * d),
                B2s[pe].reshape(pe.size * d, rows))
        go = mm(A2s[:, :, :, po, :].reshape(rows, po.size * d),
                B2s[po].reshape(po.size * d, rows))
        G2 = red(ge.reshape(n, (L + 1) * d, n, (L + 1) * d)
                 + jsgn[None, None, :, None] * go.reshape(n, (L + 1) * d, n, (L + 1) * d))
        G2 = G2.reshape(n, L + 1, d, n, L + 1, d)
        del ge, go, A2s, B2s

        def orientation(i, k, Vik, Vki):
            vj = (par + par[i]) % 2
            vl = (par + par[k]) % 2
            eps1 = (1 - 2 * np.outer(vj, vl))[:, None, None, :, None, None]
            sglob = 1 - 2 * ((par[i] * par[k]) % 2)
            svec = sglob * (1 - 2 * ((par * (par[i] + par[k])) % 2))
            sigma = svec[:, None, None, None, None, None]

            comm = Vik - eps1 * Vki.transpose(3, 4, 2, 0, 1, 5)
            t1 = _uv(_uvk(comm, p_, q_))
            del comm
            aterm = sigma * (Vki - Vki.transpose(0, 4, 2, 3, 1, 5))
            t2 = _uvk(aterm, p_, q_)[:, :L - 1, :, :, :L - 1, :] if L >= 1 else _uvk(aterm, p_, q_)
            del aterm
            S = np.zeros((n, L + 1, d, n, L + 1, d), dtype=TTn.dtype)
            if k == pr0[i]:
                v1 = th0[i] * (1 - 2 * ((par[i] + par[i] * par) % 2))
                S += v1[:, None, None, None, None, None] * G1
            for j in range(n):
                l = int(pr0[j])
                pref2 = int(th0[pr0[j]]) * (1 - 2 * ((par[i] * par[k] + par[j] * par[k]) % 2))
                S[j, :, :, l, :, :] -= pref2 * G2[k, :, :, i, :, :].transpose(2, 1, 0, 3)
            t3 = (q_ * _uv(S))[:, :L - 1, :, :, :L - 1, :] if L >= 1 else q_ * _uv(S)
            del S
            Z = red(t1 - t2 + t3)
            if Z.size and np.any(Z != 0):
                bad = np.argwhere(np.any(Z != 0, axis=(1, 2, 4, 5)))
                for jj, ll in bad:
                    failures.add((i + 1, int(jj) + 1, k + 1, int(ll) + 1))

        for i in range(n):
            for k in range(i, n):
                Vik = red(mm(TTrow[i], TTcol[k])).reshape(n, L + 1, d, n, L + 1, d)
                if k == i:
                    orientation(i, i, Vik, Vik)
                    continue
                Vki = red(mm(TTrow[k], TTcol[i])).reshape(n, L + 1, d, n, L + 1, d)
                orientation(i, k, Vik, Vki)
                orientation(k, i, Vki, Vik)

    if tier == "crt":
        for prime in _primes_covering(2 * F):
            TTp = (TT % prime).astype(np.int64)
            run_pass(TTp, _mm_split, lambda X, p=prime: X % p)
    else:
        def mm(A, Bm):
            if tier == "f8":
                return np.rint(A.astype(np.float64) @ Bm.astype(np.float64)).astype(np.int64)
            return A @ Bm

        run_pass(TT, mm, lambda X: X)

    fl = sorted(failures)
    return {"ok": not fl, "failures": fl, "window": L - 2,
            "quadruples": n ** 4, "tier": tier}


class CentralSeries:
    """The scalar series of T(u-kappa)T^t(u) and its square root."""

    __slots__ = ("c_V", "z_V")

    def __init__(self, c_V, z_V):
        self.c_V = c_V
        self.z_V = z_V


def _transposed_entries(T):
    """Entries of T^t: (T^t)_ij = (-1)^{i.j+j} theta_i theta_j t_j'i'(u)."""
    idx = T.idx
    n = idx.dim
    out = []
    for i in range(1, n + 1):
        row = []
        for j in range(1, n + 1):
            s = idx.theta(i) * idx.theta(j)
            if (idx.bar(i) * idx.bar(j) + idx.bar(j)) % 2:
                s = -s
            row.append(T.ts[idx.prime(j) - 1][idx.prime(i) - 1].scale(Fraction(s)))
        out.append(row)
    return out


def central_series(T):
    """Extract c(u) from T(u-kappa)T^t(u) = c(u) Id and solve
    z(u-kappa)z(u) = c(u) for the square root z."""
    idx, L = T.idx, T.L
    n, d = idx.dim, T.wdim
    shifted = [[s.shift(idx.kappa) for s in row] for row in T.ts]
    trans = _transposed_entries(T)
    eye = QMat.identity(d)
    diag = None
    for i in range(n):
        for j in range(n):
            acc = shifted[i][0] * trans[0][j]
            for h in range(1, n):
                acc = acc + shifted[i][h] * trans[h][j]
            if i != j:
                if not acc.is_zero():
                    raise NotScalar("entry (%d, %d) of T(u-kappa)T^t(u) is nonzero" % (i + 1, j + 1))
            elif diag is None:
                diag = acc
            elif acc != diag:
                raise NotScalar("diagonal of T(u-kappa)T^t(u) is not constant")
    cs = []
    for r in range(L + 1):
        c = diag.coeffs[r]
        val = c.entry(0, 0)
        if not c == eye * val:
            raise NotScalar("order-%d coefficient is not a scalar operator" % r)
        cs.append(val)
    assert cs[0] == 1
    cser = TruncatedSeries(cs)
    zs = [Fraction(1)]
    for r in range(1, L + 1):
        part = TruncatedSeries(zs + [Fraction(0)] * (L + 1 - len(zs)))
        prod = part.shift(idx.kappa) * part
        zs.append((cs[r] - prod.coeffs[r]) / 2)
    zser = TruncatedSeries(zs)
    assert zser.shift(idx.kappa) * zser == cser
    return CentralSeries(cser, zser)


def _pad_scalar_series(f, L):
    coeffs = [Fraction(c) for c in f.coeffs[:L + 1]]
    coeffs += [Fraction(0)] * (L + 1 - len(coeffs))
    return TruncatedSeries(coeffs)


def twist_mu(T, f):
    """Multiply every entry by the scalar series f; f(infinity) must be 1."""
    if f.coeffs[0] != 1:
        raise BadConstantTerm("twist series must have constant term 1, got %s" % f.coeffs[0])
    fser = _pad_scalar_series(f, T.L)
    ts = [[s * fser for s in row] for row in T.ts]
    return RepresentedT(T.idx, T.points, T.L, ts)


def normalized_T(T):
    """Divide T by the square root of its central series; the result has
    central series 1 and is fixed by every twist."""
    zinv = central_series(T).z_V.invert()
    ts = [[s * zinv for s in row] for row in T.ts]
    return RepresentedT(T.idx, T.points, T.L, ts)


def iota_level1_check(T):
    """Verify the commutation and symmetry relations of the first-order
    coefficients hat t_ij = (-1)^i t^(1)_ij as exact operator identities."""
    idx, L = T.idx, T.L
    n, d = idx.dim, T.wdim
    assert L >= 1
    par = idx.par
    pr0 = [idx.prime(i) - 1 for i in range(1, n + 1)]
    th0 = [idx.theta(i) for i in range(1, n + 1)]
    that = [[T.ts[i][j].coeffs[1] * (-1 if par[i] else 1) for j in range(n)]
            for i in range(n)]
    eye = QMat.identity(d)
    failures = []
    try:
        c1 = central_series(T).c_V.coeffs[1]
    except NotScalar:
        failures.append(("central",))
        c1 = None
    for i in range(n):
        for j in range(n):
            for k in range(n):
                for l in range(n):
                    sg = -1 if ((par[i] + par[j]) * (par[k] + par[l])) % 2 else 1
                    lhs = that[i][j] @ that[k][l] - (that[k][l] @ that[i][j]) * sg
                    rhs = QMat.zeros(d, d)
                    if k == j:
                        rhs = rhs + that[i][l]
                    if l == i:
                        rhs = rhs - that[k][j] * sg
                    if k == pr0[i]:
                        s3 = th0[i] * th0[j] * (-1 if (par[i] * par[j] + par[i]) % 2 else 1)
                        rhs = rhs - that[pr0[j]][l] * s3
                    if l == pr0[j]:
                        s4 = th0[pr0[i]] * th0[pr0[j]] * \
                            (-1 if (par[i] * par[k] + par[l] * par[k]) % 2 else 1)
                        rhs = rhs + that[k][pr0[i]] * s4
                    if not (lhs - rhs).is_zero():
                        failures.append(("commutation", i + 1, j + 1, k + 1, l + 1))
    for i in range(n):
        for j in range(n):
            s = th0[i] * th0[j] * (-1 if (par[i] * par[j] + par[i]) % 2 else 1)
            if i != j:
                if not (that[pr0[j]][pr0[i]] + that[i][j] * s).is_zero():
                    failures.append(("symmetry", i + 1, j + 1))
        if c1 is not None:
            want = eye * (c1 * (-1 if par[i] else 1))
            if not (that[pr0[i]][pr0[i]] + that[i][i] - want).is_zero():
                failures.append(("diagonal", i + 1))
    return {"ok": not failures, "failures": failures,
            "quadruples": n ** 4, "c1": c1}

"""Gauss decomposition of represented generator matrices.

Block LDU factorization T = F*H*E over the ring of truncated operator
series: F is lower unitriangular, H diagonal, E upper unitriangular.
On top of the factors: extraction of the generating currents with the
middle-index branch conventions, the central truncated submatrices
T^[s] = F^[s]*H^[s]*E^[s], the rank-reduction check (the truncated
matrix satisfies the commutation system of the sliced index data and
its entries commute with the eliminated corner), and the catalog of
explicit identities expressing every triangular entry through the
currents, recovering the mirror diagonal entries, and factorizing the
central series.
"""

import math
from fractions import Fraction

import numpy as np

from .kernel import QMat
from .series import TruncatedSeries
from .supermatrix import SuperMatrix
from .evaluation import (NotScalar, central_series, check_rtt_termwise,
                         _mm_split, _primes_covering)


class NonUnitPivot(ValueError):
    """A diagonal entry has a non-invertible constant coefficient."""


class GaussData:
    """Triangular factor tables of one decomposition.

    H is the list of diagonal series, E and F map index pairs (above
    respectively below the diagonal) to series with vanishing constant
    coefficient.  The represented matrix the factors came from is kept
    for recomposition and for the central-series factorization check.
    """

    __slots__ = ("idx", "L", "wdim", "H", "E", "F", "source")

    def __init__(self, idx, L, wdim, H, E, F, source):
        self.idx = idx
        self.L = L
        self.wdim = wdim
        self.H = H
        self.E = E
        self.F = F
        self.source = source
        one = QMat.identity(wdim)
        assert len(H) == idx.dim
        assert all(h.coeffs[0] == one for h in H)
        assert all(s.coeffs[0].is_zero() for s in E.values())
        assert all(s.coeffs[0].is_zero() for s in F.values())

    def h(self, i):
        return self.H[i - 1]

    def e(self, i, j):
        assert i < j
        return self.E[(i, j)]

    def f(self, j, i):
        assert j > i
        return self.F[(j, i)]

    def recompose(self):
        """Entry table sum_k f_ik h_k e_kj with unit diagonal f, e."""
        n = self.idx.dim
        rows = []
        for i in range(1, n + 1):
            row = []
            for j in range(1, n + 1):
                acc = None
                for k in range(1, min(i, j) + 1):
                    he = self.H[k - 1] if k == j else self.H[k - 1] * self.E[(k, j)]
                    term = he if k == i else self.F[(i, k)] * he
                    acc = term if acc is None else acc + term
                row.append(acc)
            rows.append(row)
        return rows


def gauss_decompose(T):
    """Factor a represented generator matrix as F*H*E.

    Standard forward elimination: each pivot is inverted as a series
    (its constant coefficient must be the identity, else NonUnitPivot),
    the pivot row and column give one row of E and one column of F, and
    the trailing block is replaced by its Schur complement.
    """
    idx, L, d = T.idx, T.L, T.wdim
    n = idx.dim
    one = QMat.identity(d)
    M = [[T.ts[i][j] for j in range(n)] for i in range(n)]
    H, E, F = [], {}, {}
    for k in range(n):
        piv = M[k][k]
        if piv.coeffs[0] != one:
            raise NonUnitPivot("pivot %d has a non-unit constant term" % (k + 1))
        H.append(piv)
        pinv = piv.invert()
        for j in range(k + 1, n):
            E[(k + 1, j + 1)] = pinv * M[k][j]
        for i in range(k + 1, n):
            F[(i + 1, k + 1)] = M[i][k] * pinv
        # Schur update: f_ik h_k e_kj = (M_ik pinv)(piv pinv M_kj) = F_ik M_kj
        for i in range(k + 1, n):
            fi = F[(i + 1, k + 1)]
            for j in range(k + 1, n):
                M[i][j] = M[i][j] - fi * M[k][j]
    return GaussData(idx, L, d, H, E, F, T)


def _branch(idx):
    """Middle-index convention: parity of N and of the last slot."""
    if idx.ps.N % 2:
        return "odd"
    return "even-even" if idx.bar(idx.ps.r) == 0 else "even-odd"


class CurrentSet:
    """Generating currents e_i, f_i (i <= r) and h_i (i <= r+1)."""

    __slots__ = ("idx", "branch", "e", "f", "h")

    def __init__(self, idx, branch, e, f, h):
        self.idx = idx
        self.branch = branch
        self.e = e
        self.f = f
        self.h = h


def extract_currents(G, idx=None):
    """Select the current entries from the triangular factors.

    Below the middle index the currents are the adjacent entries.  At
    the middle index, even N with an even last slot skips the vanishing
    adjacent entry and takes the skew one; that choice needs rank at
    least two, and the rank-one even case keeps the adjacent entry,
    which vanishes identically.
    """
    idx = G.idx if idx is None else idx
    rk = idx.ps.r
    branch = _branch(idx)
    e, f, h = {}, {}, {}
    for i in range(1, rk):
        e[i] = G.e(i, i + 1)
        f[i] = G.f(i + 1, i)
    if branch == "even-even" and rk >= 2:
        e[rk] = G.e(rk - 1, rk + 1)
        f[rk] = G.f(rk + 1, rk - 1)
    else:
        e[rk] = G.e(rk, rk + 1)
        f[rk] = G.f(rk + 1, rk)
    for i in range(1, rk + 2):
        h[i] = G.h(i)
    return CurrentSet(idx, branch, e, f, h)


def truncated_T(G, s):
    """Central (dim-2s)-square submatrix sum_{s<k<=min(i,j)} f_ik h_k e_kj.

    Computed as the Schur complement t_ij - sum_{k<=s} f_ik h_k e_kj,
    which agrees term by term with the factored form.  Depth 0 returns
    the full entry table; invalid depths raise through the index slice.
    """
    idx = G.idx
    sub = idx.slice(s)
    n = idx.dim
    lo, hi = s + 1, n - s
    he = {}
    for k in range(1, lo):
        for j in range(lo, hi + 1):
            he[(k, j)] = G.H[k - 1] * G.E[(k, j)]
    rows = []
    for i in range(lo, hi + 1):
        row = []
        for j in range(lo, hi + 1):
            acc = G.source.ts[i - 1][j - 1]
            for k in range(1, lo):
                acc = acc - G.F[(i, k)] * he[(k, j)]
            row.append(acc)
        rows.append(row)
    return SuperMatrix(sub.par, rows)


class _SeriesT:
    """Entry-table view with the attributes the termwise check reads."""

    __slots__ = ("idx", "L", "ts", "wdim")

    def __init__(self, idx, L, ts, wdim):
        self.idx = idx
        self.L = L
        self.ts = ts
        self.wdim = wdim


def _coeff_stacks(series, L, d):
    """Row (L*d x d) and column (d x L*d) integer stacks of orders 1..L.

    Entries share one denominator per series; zero residuals are scale
    invariant, so the denominator itself is not needed downstream.
    """
    den = 1
    for r in range(1, L + 1):
        den = den * series.coeffs[r].d // math.gcd(den, series.coeffs[r].d)
    blocks = []
    mx = 0
    for r in range(1, L + 1):
        c = series.coeffs[r]
        z = c.z.astype(object) * (den // c.d)
        blocks.append(z)
        mx = max(mx, int(c.max_abs()) * (den // c.d))
    rowstack = np.concatenate(blocks, axis=0)
    colstack = np.concatenate(blocks, axis=1)
    return rowstack, colstack, mx


def _corner_commutativity(T, G, s, sm):
    """Check [t_ab(u), t^[s]_ij(v)] = 0 for a,b <= s < i,j <= dim-s.

    All coefficient pairs of orders 1..L are compared at once per
    quadruple through two stacked products, exactly, by residues
    modulo enough word-sized primes to cover the magnitude bound.
    """
    idx, L, d = T.idx, T.L, T.wdim
    n = idx.dim
    lo, hi = s + 1, n - s
    corner, inner = {}, {}
    mxa = mxb = 0
    for a in range(1, s + 1):
        for b in range(1, s + 1):
            rs, cs, mx = _coeff_stacks(T.ts[a - 1][b - 1], L, d)
            if mx:
                corner[(a, b)] = (rs, cs)
                mxa = max(mxa, mx)
    for i in range(lo, hi + 1):
        for j in range(lo, hi + 1):
            rs, cs, mx = _coeff_stacks(sm.rows[i - lo][j - lo], L, d)
            if mx:
                inner[(i, j)] = (rs, cs)
                mxb = max(mxb, mx)
    pairs = len(corner) * len(inner)
    failures = []
    if not pairs:
        return {"ok": True, "failures": failures, "pairs": 0}

    # |[A_x, B_y]| <= 2 d mxa mxb entrywise; the prime product must
    # exceed twice that for balanced residues to pin the exact value
    seen = set()
    for p in _primes_covering(4 * d * mxa * mxb):
        cp = {k: ((v[0] % p).astype(np.int64), (v[1] % p).astype(np.int64))
              for k, v in corner.items()}
        ip = {k: ((v[0] % p).astype(np.int64), (v[1] % p).astype(np.int64))
              for k, v in inner.items()}
        for (a, b), (Ar, Ac) in cp.items():
            pa = (idx.bar(a) + idx.bar(b)) % 2
            for (i, j), (Br, Bc) in ip.items():
                pb = (idx.bar(i) + idx.bar(j)) % 2
                sg = -1 if pa * pb else 1
                AB = (_mm_split(Ar, Bc) % p).reshape(L, d, L, d)
                BA = (_mm_split(Br, Ac) % p).reshape(L, d, L, d)
                Z = (AB - sg * BA.transpose(2, 1, 0, 3)) % p
                bad = np.argwhere(np.any(Z, axis=(1, 3)))
                for x, y in bad:
                    key = (a, b, i, j, int(x) + 1, int(y) + 1)
                    if key not in seen:
                        seen.add(key)
                        failures.append(key)
    failures.sort()
    return {"ok": not failures, "failures": failures, "pairs": pairs}


def rank_reduction_check(T, s, gauss=None):
    """Drive both halves of the rank-reduction statement at depth s.

    The truncated matrix must satisfy the termwise commutation system
    of the sliced index data (with its shifted kappa), and each of its
    entries must supercommute with every corner entry t_ab, a,b <= s.
    A precomputed decomposition can be passed to avoid repeating it
    across depths.
    """
    G = gauss if gauss is not None else gauss_decompose(T)
    if s == 0:
        rep = check_rtt_termwise(T)
        return {"ok": rep["ok"], "depth": 0, "rtt": rep,
                "commutativity": {"ok": True, "failures": [], "pairs": 0}}
    sm = truncated_T(G, s)
    sub = T.idx.slice(s)
    rtt = check_rtt_termwise(_SeriesT(sub, T.L, sm.rows, T.wdim))
    comm = _corner_commutativity(T, G, s, sm)
    return {"ok": rtt["ok"] and comm["ok"], "depth": s,
            "rtt": rtt, "commutativity": comm}


def _first_mismatch(lhs, rhs):
    top = min(lhs.order, rhs.order)
    for r in range(top + 1):
        dz = lhs.coeffs[r] - rhs.coeffs[r]
        if not dz.is_zero():
            return r
    return None


def entry_identity_suite(G, idx=None):
    """Run every applicable entry identity on one decomposition.

    Families: the triangular entries in terms of the currents (one
    catalog per middle-index branch, upper and lower versions), the
    mirror diagonal entries h_{i'} recovered from h_1..h_{r+1}, and the
    factorization of the central series into shifted ratios of diagonal
    entries.  Comparisons are exact; a failure records the identity key
    and the first mismatching order.
    """
    idx = G.idx if idx is None else idx
    n = idx.dim
    rk = idx.ps.r
    m = idx.ps.m
    half = idx.ps.N // 2
    kap = idx.kappa
    L = G.L
    branch = _branch(idx)
    bar, pr = idx.bar, idx.prime
    S = [0] * (n + 1)
    for i in range(1, n + 1):
        S[i] = S[i - 1] + idx.sign(i)

    def sg(x):
        return -1 if x % 2 else 1

    def pb(i, j):
        return (bar(i) + bar(j)) % 2

    def E1(i, j):
        return G.e(i, j).coeffs[1]

    def F1(j, i):
        return G.f(j, i).coeffs[1]

    def brk(series, ps_, C, pc):
        s_ = -1 if (ps_ * pc) % 2 else 1
        return series.map_coeffs(lambda c: c @ C - (C @ c) * s_)

    def brkL(C, pc, series, ps_):
        s_ = -1 if (ps_ * pc) % 2 else 1
        return series.map_coeffs(lambda c: C @ c - (c @ C) * s_)

    zero = G.h(1).map_coeffs(lambda c: c * 0)
    checks = []

    # upper catalog
    if branch == "even-even":
        checks.append((("upper", "vanish"), G.e(rk, rk + 1), zero))
    step_excl = rk if branch in ("even-even", "even-odd") else None
    for i in range(1, n + 1):
        for j in range(i + 1, pr(i) - 1):
            if j == step_excl:
                continue
            rhs = brk(G.e(i, j), pb(i, j), E1(j, j + 1), pb(j, j + 1))
            checks.append((("upper", "step", i, j), G.e(i, j + 1),
                           rhs.scale(sg(bar(j)))))
    if branch == "even-even":
        for i in range(1, rk - 1):
            rhs = brk(G.e(i, rk - 1), pb(i, rk - 1),
                      E1(rk - 1, rk + 1), pb(rk - 1, rk + 1))
            checks.append((("upper", "mid", i), G.e(i, rk + 1),
                           rhs.scale(sg(bar(rk - 1)))))
    elif branch == "even-odd":
        for i in range(1, rk):
            rhs = brk(G.e(i, rk), pb(i, rk), E1(rk, rk + 1), pb(rk, rk + 1))
            checks.append((("upper", "mid", i), G.e(i, rk + 1),
                           rhs.scale(Fraction(-1, 2))))
    mtop = rk if branch == "odd" else rk - 1
    for i in range(1, mtop + 1):
        sc = -sg(bar(i + 1) + bar(i) * bar(i + 1))
        rhs = G.e(i, i + 1).shift(S[i] - kap).scale(sc)
        checks.append((("upper", "mirror", i), G.e(pr(i + 1), pr(i)), rhs))
    for i in range(1, rk):
        for j in range(1, i):
            rhs = brk(G.e(pr(i + 1), pr(j + 1)), pb(pr(i + 1), pr(j + 1)),
                      E1(j, j + 1), pb(j, j + 1))
            checks.append((("upper", "mirror-step", i, j),
                           G.e(pr(i + 1), pr(j)),
                           rhs.scale(-sg(bar(j) * bar(j + 1)))))
    for i in range(1, mtop + 1):
        s1 = -sg(bar(i + 1) + bar(i) * bar(i + 1))
        s2 = -sg(bar(i) * bar(i + 1))
        t1 = (G.e(i, i + 1) * G.e(i, pr(i + 1))).scale(s1)
        t2 = brk(G.e(i, pr(i + 1)), pb(i, pr(i + 1)),
                 E1(i, i + 1), pb(i, i + 1)).scale(s2)
        checks.append((("upper", "diag", i), G.e(i, pr(i)), t1 + t2))
    ntop = rk - 2 if branch == "even-even" else rk - 1
    for i in range(1, ntop + 1):
        s1 = sg(bar(i + 1) + bar(i) * bar(i + 1))
        s2 = -sg(bar(i) * bar(i + 1))
        t1 = (G.e(i, i + 1) * G.e(i + 1, pr(i + 1))).scale(s1)
        t2 = G.e(i, pr(i + 1)).scale(-s1)
        t3 = brk(G.e(i + 1, pr(i + 1)), pb(i + 1, pr(i + 1)),
                 E1(i, i + 1), pb(i, i + 1)).scale(s2)
        checks.append((("upper", "near-diag", i), G.e(i + 1, pr(i)),
                       t1 + t2 + t3))
    ftop = rk + 1 if branch == "odd" else rk
    for i in range(1, ftop + 1):
        for j in range(1, min(i - 2, rk - 1) + 1):
            rhs = brk(G.e(i, pr(j + 1)), pb(i, pr(j + 1)),
                      E1(j, j + 1), pb(j, j + 1))
            checks.append((("upper", "far", i, j), G.e(i, pr(j)),
                           rhs.scale(-sg(bar(j) * bar(j + 1)))))
    if branch == "even-even" and rk >= 2:
        checks.append((("upper", "skew"), G.e(rk, rk + 2),
                       G.e(rk - 1, rk + 1).scale(-1)))

    # lower catalog
    if branch == "even-even":
        checks.append((("lower", "vanish"), G.f(rk + 1, rk), zero))
    for j in range(1, n + 1):
        for i in range(1, j):
            if j >= pr(i) - 1 or j == step_excl:
                continue
            rhs = brkL(F1(j + 1, j), pb(j + 1, j), G.f(j, i), pb(j, i))
            checks.append((("lower", "step", j, i), G.f(j + 1, i),
                           rhs.scale(sg(bar(j)))))
    if branch == "even-even":
        for i in range(1, rk - 1):
            rhs = brkL(F1(rk + 1, rk - 1), pb(rk + 1, rk - 1),
                       G.f(rk - 1, i), pb(rk - 1, i))
            checks.append((("lower", "mid", i), G.f(rk + 1, i),
                           rhs.scale(sg(bar(rk - 1)))))
    elif branch == "even-odd":
        for i in range(1, rk):
            rhs = brkL(F1(rk + 1, rk), pb(rk + 1, rk), G.f(rk, i), pb(rk, i))
            checks.append((("lower", "mid", i), G.f(rk + 1, i),
                           rhs.scale(Fraction(-1, 2))))
    for i in range(1, mtop + 1):
        sc = -sg(bar(i) + bar(i) * bar(i + 1))
        rhs = G.f(i + 1, i).shift(S[i] - kap).scale(sc)
        checks.append((("lower", "mirror", i), G.f(pr(i), pr(i + 1)), rhs))
    for i in range(1, rk):
        for j in range(1, i):
            rhs = brkL(F1(j + 1, j), pb(j + 1, j),
                       G.f(pr(j + 1), pr(i + 1)), pb(pr(j + 1), pr(i + 1)))
            checks.append((("lower", "mirror-step", i, j),
                           G.f(pr(j), pr(i + 1)),
                           rhs.scale(-sg(bar(j) + bar(j + 1) + bar(j) * bar(j + 1)))))
    for i in range(1, mtop + 1):
        s1 = -sg(bar(i) + bar(i) * bar(i + 1))
        s2 = -sg(bar(i) + bar(i + 1) + bar(i) * bar(i + 1))
        t1 = (G.f(pr(i + 1), i) * G.f(i + 1, i)).scale(s1)
        t2 = brkL(F1(i + 1, i), pb(i + 1, i),
                  G.f(pr(i + 1), i), pb(pr(i + 1), i)).scale(s2)
        checks.append((("lower", "diag", i), G.f(pr(i), i), t1 + t2))
    for i in range(1, ntop + 1):
        s1 = sg(bar(i) + bar(i) * bar(i + 1))
        s2 = -sg(bar(i) + bar(i + 1) + bar(i) * bar(i + 1))
        t1 = (G.f(pr(i + 1), i + 1) * G.f(i + 1, i)).scale(s1)
        t2 = G.f(pr(i + 1), i).scale(-s1)
        t3 = brkL(F1(i + 1, i), pb(i + 1, i),
                  G.f(pr(i + 1), i + 1), pb(pr(i + 1), i + 1)).scale(s2)
        checks.append((("lower", "near-diag", i), G.f(pr(i), i + 1),
                       t1 + t2 + t3))
    for i in range(1, ftop + 1):
        for j in range(1, min(i - 2, rk - 1) + 1):
            rhs = brkL(F1(j + 1, j), pb(j + 1, j),
                       G.f(pr(j + 1), i), pb(pr(j + 1), i))
            checks.append((("lower", "far", i, j), G.f(pr(j), i),
                           rhs.scale(-sg(bar(j) + bar(j + 1) + bar(j) * bar(j + 1)))))
    if branch == "even-even" and rk >= 2:
        checks.append((("lower", "skew"), G.f(rk + 2, rk),
                       G.f(rk + 1, rk - 1).scale(-sg(bar(rk - 1)))))

    # mirror diagonal entries
    htop = rk if branch == "odd" else rk - 1
    ptop = rk if branch == "odd" else rk - 1
    for i in range(1, htop + 1):
        acc = G.h(i).shift(S[i] - kap).invert()
        for j in range(i + 1, ptop + 1):
            acc = acc * G.h(j).shift(S[j - 1] - kap)
            acc = acc * G.h(j).shift(S[j] - kap).invert()
        if branch == "even-even":
            acc = acc * G.h(rk) * G.h(rk + 1)
        elif branch == "even-odd":
            acc = acc * G.h(rk).shift(2) * G.h(rk + 1)
        else:
            acc = acc * G.h(rk + 1) * G.h(rk + 1).shift(Fraction(1, 2))
        checks.append((("hrec", i), G.h(pr(i)), acc))

    # central-series factorization
    report_failures = []
    try:
        cs = central_series(G.source)
        acc = None
        for i in range(1, ptop + 1):
            term = G.h(i).shift(S[i - 1]) * G.h(i).shift(S[i]).invert()
            acc = term if acc is None else acc * term
        if branch == "even-even":
            tail = G.h(rk).shift(half - m - 1) * G.h(rk + 1).shift(half - m - 1)
        elif branch == "even-odd":
            tail = G.h(rk).shift(half - m + 1) * G.h(rk + 1).shift(half - m - 1)
        else:
            tail = (G.h(rk + 1).shift(half - m - Fraction(1, 2))
                    * G.h(rk + 1).shift(half - m))
        acc = tail if acc is None else acc * tail
        ide = QMat.identity(G.wdim)
        cser = cs.c_V.map_coeffs(lambda c: ide * c)
        checks.append((("cseries",), cser, acc))
    except NotScalar:
        report_failures.append((("cseries", "scalar"), -1))

    for key, lhs, rhs in checks:
        r = _first_mismatch(lhs, rhs)
        if r is not None:
            report_failures.append((key, r))
    report_failures.sort(key=repr)
    return {"ok": not report_failures, "branch": branch,
            "checked": len(checks), "failures": report_failures}

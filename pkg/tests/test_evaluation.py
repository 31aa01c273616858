"""Evaluation representations: series extraction, the termwise commutation
check, central series, twists, and the level-one embedding."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from ospyang.kernel import QMat
from ospyang.series import TruncatedSeries
from ospyang.supermatrix import IndexData, ParitySequence
from ospyang.rmatrix import build_osp_R
from ospyang.evaluation import (BadConstantTerm, DuplicatePoints, NotScalar,
                                PoleCollision, central_series,
                                check_rtt_termwise, evaluation_T,
                                iota_level1_check, normalized_T,
                                perturb_entry, twist_mu, w_parities)


def make_idx(N, m, seq):
    return IndexData(ParitySequence(N, m, seq))


def is_one_series(s):
    return all(c == (1 if r == 0 else 0) for r, c in enumerate(s.coeffs))


def test_trivial_representation():
    idx = make_idx(3, 1, (1, 0))
    T = evaluation_T(idx, [], 6)
    assert T.wdim == 1
    for i in range(1, idx.dim + 1):
        for j in range(1, idx.dim + 1):
            s = T.t(i, j)
            assert s.coeffs[0] == (1 if i == j else 0)
            assert all(c.is_zero() for c in s.coeffs[1:])
    assert check_rtt_termwise(T)["ok"]
    cs = central_series(T)
    assert is_one_series(cs.c_V)
    assert is_one_series(cs.z_V)
    assert iota_level1_check(T)["ok"]


def test_point_validation():
    idx = make_idx(3, 1, (1, 0))
    with pytest.raises(DuplicatePoints):
        evaluation_T(idx, [Fraction(2), Fraction(2)], 4)
    with pytest.raises(PoleCollision):
        evaluation_T(idx, [Fraction(2), Fraction(2) - idx.kappa], 4)
    # near-kappa differences expand fine at infinity
    T = evaluation_T(idx, [Fraction(2), Fraction(2) - idx.kappa + Fraction(1, 100)], 3)
    assert check_rtt_termwise(T)["ok"]


def _value_matrix(idx, x, a):
    """t_ij(x) for the one-point representation, extracted from the flat
    R-matrix value with the same sign convention as the series route."""
    n = idx.dim
    M = build_osp_R(idx).eval_point(x - a)
    out = {}
    for i in range(n):
        for j in range(n):
            s0 = -1 if (idx.par[i] * idx.par[j] + idx.par[j]) % 2 else 1
            rows = []
            for w in range(n):
                row = []
                for wp in range(n):
                    v = M.get(i * n + w, j * n + wp) * s0
                    if idx.par[j] and (idx.par[w] + idx.par[wp]) % 2:
                        v = -v
                    row.append(v)
                rows.append(row)
            out[(i, j)] = QMat.from_rows(rows)
    return out


def test_one_point_series_is_the_rational_function():
    """(u-a)(u-a-kappa) t_ij(u) must be a quadratic polynomial in u: the
    higher cleared coefficients vanish and the three polynomial
    coefficients reproduce pointwise values of the R-matrix."""
    idx = make_idx(2, 1, (1, 0))
    a, L = Fraction(5, 3), 6
    T = evaluation_T(idx, [a], L)
    kap = idx.kappa
    e1 = 2 * a + kap
    e0 = a * (a + kap)
    n = idx.dim
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            c = T.t(i, j).coeffs
            for s in range(3, L + 1):
                res = c[s] - c[s - 1] * e1 + c[s - 2] * e0
                assert res.is_zero(), (i, j, s)
    for x in (Fraction(4), Fraction(-3, 2), Fraction(31, 7)):
        vals = _value_matrix(idx, x, a)
        scale = (x - a) * (x - a - kap)
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                c = T.t(i, j).coeffs
                p2 = c[0]
                p1 = c[1] - c[0] * e1
                p0 = c[2] - c[1] * e1 + c[0] * e0
                poly = p2 * (x * x) + p1 * x + p0
                assert poly == vals[(i - 1, j - 1)] * scale, (i, j, x)


def test_first_order_block_is_q_minus_p():
    """The u^{-1} coefficient of R(u-a) is -P + Q for every a, so each
    t^(1) block must be independent of the evaluation point."""
    idx = make_idx(3, 0, (0,))
    Ta = evaluation_T(idx, [Fraction(7)], 2)
    Tb = evaluation_T(idx, [Fraction(-2, 5)], 2)
    for i in range(1, 4):
        for j in range(1, 4):
            assert Ta.t(i, j).coeffs[1] == Tb.t(i, j).coeffs[1]


def test_rtt_passes_small_cases():
    cases = [
        (make_idx(3, 1, (1, 0)), [Fraction(2), Fraction(9, 4)]),
        (make_idx(2, 1, (0, 1)), [Fraction(2), Fraction(9, 4)]),
        (make_idx(0, 1, (1,)), [Fraction(3, 2)]),
        (make_idx(4, 0, (0, 0)), [Fraction(1, 3)]),
    ]
    for idx, pts in cases:
        rep = check_rtt_termwise(evaluation_T(idx, pts, 6))
        assert rep["ok"], (idx.ps.label(), rep["failures"][:5])
        assert rep["window"] == 4


def test_rtt_perturbation_is_located():
    idx = make_idx(3, 1, (1, 0))
    T = evaluation_T(idx, [Fraction(2)], 6)
    rep = check_rtt_termwise(perturb_entry(T, 1, 2, order=2))
    assert not rep["ok"]
    assert any((f[0], f[1]) == (1, 2) or (f[2], f[3]) == (1, 2)
               for f in rep["failures"])


def _naive_failures(T):
    """Direct translation of the cleared commutation system with plain
    operator arithmetic; the reference the batched engine must match."""
    idx, L = T.idx, T.L
    n, d, kap = idx.dim, T.wdim, idx.kappa
    bar = list(idx.par)
    th = [idx.theta(x) for x in range(1, n + 1)]
    pr = [idx.prime(x) for x in range(1, n + 1)]

    def coeffs(i, j):
        return T.ts[i - 1][j - 1].coeffs

    def mul_uvk(X):
        q = len(X) - 1
        return [[X[a + 1][b] - X[a][b + 1] - X[a][b] * kap for b in range(q)]
                for a in range(q)]

    def mul_uv(X):
        q = len(X) - 1
        return [[X[a + 1][b] - X[a][b + 1] for b in range(q)] for a in range(q)]

    bad = []
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            for k in range(1, n + 1):
                for l in range(1, n + 1):
                    sgn = -1 if ((bar[i - 1] + bar[j - 1]) * (bar[k - 1] + bar[l - 1])) % 2 else 1
                    sig = -1 if (bar[i - 1] * bar[j - 1] + bar[i - 1] * bar[k - 1]
                                 + bar[j - 1] * bar[k - 1]) % 2 else 1
                    comm, At, St = [], [], []
                    for a in range(L + 1):
                        rc, ra, rs = [], [], []
                        for b in range(L + 1):
                            rc.append(coeffs(i, j)[a] @ coeffs(k, l)[b]
                                      - (coeffs(k, l)[b] @ coeffs(i, j)[a]) * sgn)
                            ra.append((coeffs(k, j)[a] @ coeffs(i, l)[b]
                                       - coeffs(k, j)[b] @ coeffs(i, l)[a]) * sig)
                            acc = QMat.zeros(d, d)
                            if k == pr[i - 1]:
                                for p in range(1, n + 1):
                                    s1 = -1 if (bar[i - 1] + bar[i - 1] * bar[j - 1]
                                                + bar[j - 1] * bar[p - 1]) % 2 else 1
                                    acc = acc + (coeffs(p, j)[a] @ coeffs(pr[p - 1], l)[b]) \
                                        * (s1 * th[i - 1] * th[p - 1])
                            if l == pr[j - 1]:
                                for p in range(1, n + 1):
                                    s2 = -1 if (bar[i - 1] * bar[k - 1] + bar[j - 1] * bar[k - 1]
                                                + bar[i - 1] * bar[p - 1]) % 2 else 1
                                    acc = acc - (coeffs(k, pr[p - 1])[b] @ coeffs(i, p)[a]) \
                                        * (s2 * th[pr[j - 1] - 1] * th[pr[p - 1] - 1])
                            rs.append(acc)
                        comm.append(rc)
                        At.append(ra)
                        St.append(rs)
                    t1 = mul_uv(mul_uvk(comm))
                    t2 = mul_uvk(At)
                    t3 = mul_uv(St)
                    zero = True
                    for a in range(L - 1):
                        for b in range(L - 1):
                            if not (t1[a][b] - t2[a][b] + t3[a][b]).is_zero():
                                zero = False
                    if not zero:
                        bad.append((i, j, k, l))
    return bad


def test_engine_matches_naive_translation():
    idx = make_idx(2, 1, (1, 0))
    T = evaluation_T(idx, [Fraction(5, 3)], 4)
    assert _naive_failures(T) == []
    assert check_rtt_termwise(T)["ok"]
    Tp = perturb_entry(T, 2, 3, order=1)
    naive = set(_naive_failures(Tp))
    engine = set(check_rtt_termwise(Tp)["failures"])
    assert naive == engine
    assert naive


def test_residue_tier_is_exact():
    # a twist by a unit series with a 2^40 denominator rules out the word
    # tiers while keeping the commutation system valid
    idx = make_idx(2, 1, (1, 0))
    T = evaluation_T(idx, [Fraction(2)], 4)
    f = TruncatedSeries([Fraction(1), Fraction(1, 2 ** 40)] + [Fraction(0)] * 3)
    Tt = twist_mu(T, f)
    rep = check_rtt_termwise(Tt)
    assert rep["tier"] == "crt"
    assert rep["ok"]

    Tp = perturb_entry(Tt, 2, 3, order=1, value=Fraction(1, 3))
    rep2 = check_rtt_termwise(Tp)
    assert rep2["tier"] == "crt"
    assert set(rep2["failures"]) == set(_naive_failures(Tp))
    assert rep2["failures"]


def test_central_series_scalar_and_square_root():
    idx = make_idx(3, 1, (1, 0))
    T = evaluation_T(idx, [Fraction(2)], 6)
    cs = central_series(T)
    assert cs.c_V.coeffs[0] == 1
    assert cs.z_V.coeffs[1] == cs.c_V.coeffs[1] / 2
    assert cs.z_V.shift(idx.kappa) * cs.z_V == cs.c_V
    with pytest.raises(NotScalar):
        central_series(perturb_entry(T, 1, 2, order=2))


def test_twist_laws():
    idx = make_idx(2, 1, (1, 0))
    T = evaluation_T(idx, [Fraction(5, 3)], 6)
    one = TruncatedSeries([Fraction(1)] + [Fraction(0)] * 6)
    Tid = twist_mu(T, one)
    assert all(Tid.ts[i][j] == T.ts[i][j] for i in range(4) for j in range(4))
    f = TruncatedSeries([Fraction(1), Fraction(1, 2), Fraction(0),
                         Fraction(-2), Fraction(0), Fraction(0), Fraction(0)])
    Tw = twist_mu(T, f)
    assert check_rtt_termwise(Tw)["ok"]
    assert central_series(Tw).c_V == f * f.shift(idx.kappa) * central_series(T).c_V
    with pytest.raises(BadConstantTerm):
        twist_mu(T, TruncatedSeries([Fraction(2), Fraction(1)]))


def test_normalized_currents():
    idx = make_idx(2, 1, (1, 0))
    T = evaluation_T(idx, [Fraction(5, 3)], 6)
    Tn = normalized_T(T)
    assert is_one_series(central_series(Tn).c_V)
    f = TruncatedSeries([Fraction(1), Fraction(-1, 3), Fraction(2),
                         Fraction(0), Fraction(0), Fraction(0), Fraction(0)])
    Tnw = normalized_T(twist_mu(T, f))
    n = idx.dim
    assert all(Tn.ts[i][j] == Tnw.ts[i][j] for i in range(n) for j in range(n))


def test_iota_level1():
    idx = make_idx(2, 1, (1, 0))
    T = evaluation_T(idx, [Fraction(5, 3)], 6)
    assert iota_level1_check(T)["ok"]
    idx3 = make_idx(3, 0, (0,))
    T3 = evaluation_T(idx3, [Fraction(2), Fraction(9, 4)], 6)
    assert iota_level1_check(T3)["ok"]
    bad = iota_level1_check(perturb_entry(T, 1, 2, order=1))
    assert not bad["ok"]


def test_w_parities():
    idx = make_idx(2, 1, (1, 0))
    assert w_parities(idx, 0) == (0,)
    assert w_parities(idx, 1) == idx.par
    two = w_parities(idx, 2)
    n = idx.dim
    assert len(two) == n * n
    for a in range(n):
        for b in range(n):
            assert two[a * n + b] == (idx.par[a] + idx.par[b]) % 2


@settings(max_examples=8, deadline=None)
@given(st.integers(-30, 30), st.integers(1, 6), st.integers(-30, 30), st.integers(1, 6))
def test_rtt_holds_at_random_points(p1, q1, p2, q2):
    idx = make_idx(2, 1, (1, 0))
    a, b = Fraction(p1, q1), Fraction(p2, q2)
    if a == b or abs(a - b) == abs(idx.kappa):
        return
    T = evaluation_T(idx, [a, b], 4)
    assert check_rtt_termwise(T)["ok"]

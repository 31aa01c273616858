from fractions import Fraction

import pytest

from ospyang.rings import RationalFunction, poly_u
from ospyang.supermatrix import (DepthOutOfRange, IndexData, ParitySequence,
                                 all_index_data)
from ospyang.rmatrix import (build_gl_R, build_osp_R, build_truncated_R,
                             check_ybe, unitarity_scalar)


def idx_of(N, m, seq):
    return IndexData(ParitySequence(N, m, seq))


def test_kappa_of_standard_cases():
    assert build_osp_R(idx_of(3, 0, (0,))).kappa == Fraction(1, 2)
    assert build_osp_R(idx_of(6, 0, (0, 0, 0))).kappa == 2
    assert build_osp_R(idx_of(2, 1, (1, 0))).kappa == -1


def test_eval_point_matches_symbolic():
    idx = idx_of(1, 1, (1,))
    R = build_osp_R(idx)
    M = R.symbolic()
    x = Fraction(5, 3)
    pt = R.eval_point(x)
    for i in range(R.dim2):
        for j in range(R.dim2):
            assert M.rows[i][j](x) == pt.get(i, j)


def test_eval_point_pole():
    R = build_osp_R(idx_of(2, 0, (0,)))
    with pytest.raises(ZeroDivisionError):
        R.eval_point(0)
    with pytest.raises(ZeroDivisionError):
        R.eval_point(R.kappa)


def test_ybe_all_osp_up_to_dim_5():
    for idx in all_index_data(5):
        assert check_ybe(build_osp_R(idx)) is True, idx


def test_ybe_gl():
    for par in [(0,), (1,), (0, 0), (1, 0), (0, 1), (1, 1),
                (0, 1, 1), (1, 0, 1), (0, 0, 0),
                (0, 0, 1, 1), (1, 0, 0, 1)]:
        assert check_ybe(build_gl_R(par)) is True, par


def test_perturbed_q_breaks_ybe():
    idx = idx_of(3, 1, (1, 0))
    assert check_ybe(build_osp_R(idx, q_pole_offset=1)) is False
    assert check_ybe(build_osp_R(idx, q_pole_offset=Fraction(1, 3))) is False


def test_truncated_r():
    idx = idx_of(3, 1, (1, 0))
    sub = build_truncated_R(idx, 1)
    assert (sub.idx.N, sub.idx.m) == (3, 0)
    assert sub.kappa == Fraction(1, 2)
    assert check_ybe(sub) is True
    # slicing an odd-dimension space all the way down leaves a single vector
    idx5 = idx_of(3, 1, (0, 1))
    deep = build_truncated_R(idx5, 2)
    assert deep.dim == 1
    with pytest.raises(DepthOutOfRange):
        build_truncated_R(idx, 3)
    with pytest.raises(DepthOutOfRange):
        build_truncated_R(idx, 0)


def test_truncated_kappa_consistency():
    for idx in all_index_data(7):
        for s in range(1, (idx.N - 1) // 2 + idx.m + 1):
            sub = build_truncated_R(idx, s)
            assert sub.kappa == idx.kappa_truncated(s)
            assert check_ybe(sub) is True


def test_unitarity_product_is_scalar():
    one_minus = RationalFunction(poly_u(-1, 0, 1), poly_u(0, 0, 1))
    for idx in [idx_of(3, 0, (0,)), idx_of(2, 1, (1, 0)), idx_of(1, 1, (1,))]:
        c = unitarity_scalar(build_osp_R(idx))
        assert c is not None
        assert c == one_minus
    assert unitarity_scalar(build_gl_R((0, 1))) == one_minus

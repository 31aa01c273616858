"""Matrix osp: basis, commutation formula, root data, diagrams, Serre
relations and the low-rank isomorphisms."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ospyang.liealgebra import (
    GeneratorConstructionFailed,
    NonHomogeneous,
    RowSpace,
    UnsupportedRank,
    bracket,
    cartan_and_dynkin,
    chevalley_generators,
    classical_iso_check,
    e_matrix,
    element_parity,
    f_basis_indices,
    f_commutator_expected,
    f_matrix,
    f_span,
    generator_map_is_bracket_morphism,
    higher_serre_cases,
    invariant_form,
    mat_vec,
    osp_dimension,
    serre_verify,
    supertrace,
)
from ospyang.rings import Sqrt2
from ospyang.supermatrix import (
    IndexData,
    ParitySequence,
    all_index_data,
    all_parity_sequences,
)


def all_ps(max_dim):
    out = []
    for dim in range(1, max_dim + 1):
        for N in range(dim % 2, dim + 1, 2):
            m = (dim - N) // 2
            out.append((N, m))
    seqs = []
    for (N, m) in out:
        seqs.extend(all_parity_sequences(N, m))
    return seqs


def test_f_index_symmetry():
    for idx in all_index_data(6):
        n = idx.dim
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                lhs = f_matrix(idx, idx.prime(j), idx.prime(i))
                sgn = idx.theta(i) * idx.theta(j)
                if (idx.bar(i) * idx.bar(j) + idx.bar(i)) % 2:
                    sgn = -sgn
                rhs = f_matrix(idx, i, j).scale(Fraction(-sgn))
                assert (lhs - rhs).is_zero()


def test_f_antidiagonal_vanishes_for_even_vectors():
    idx = IndexData(ParitySequence(4, 1, (0, 1, 0)))
    for i in range(1, idx.dim + 1):
        fm = f_matrix(idx, i, idx.prime(i))
        assert fm.is_zero() == (idx.bar(i) == 0)


def test_f_basis_spans_osp():
    for idx in all_index_data(7):
        sp = f_span(idx)
        assert sp.rank == osp_dimension(idx) == len(f_basis_indices(idx))


def test_f_commutation_exhaustive_small():
    for idx in all_index_data(5):
        n = idx.dim
        F = {(i, j): f_matrix(idx, i, j)
             for i in range(1, n + 1) for j in range(1, n + 1)}
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                for k in range(1, n + 1):
                    for l in range(1, n + 1):
                        lhs = bracket(F[i, j], F[k, l])
                        rhs = f_commutator_expected(idx, i, j, k, l)
                        assert (lhs - rhs).is_zero(), (idx.ps.label(), i, j, k, l)


BIG_IDX = [idx for idx in all_index_data(7) if idx.dim >= 6]


@settings(max_examples=120, deadline=None)
@given(st.data())
def test_f_commutation_sampled_large(data):
    idx = data.draw(st.sampled_from(BIG_IDX))
    n = idx.dim
    i, j, k, l = (data.draw(st.integers(1, n)) for _ in range(4))
    lhs = bracket(f_matrix(idx, i, j), f_matrix(idx, k, l))
    assert (lhs - f_commutator_expected(idx, i, j, k, l)).is_zero()


def test_bracket_closure_in_span():
    for idx in all_index_data(5):
        sp = f_span(idx)
        pairs = f_basis_indices(idx)
        for (i, j) in pairs[:4]:
            for (k, l) in pairs[-4:]:
                x = bracket(f_matrix(idx, i, j), f_matrix(idx, k, l))
                assert sp.contains(mat_vec(x))


def test_bracket_rejects_mixed_parity():
    idx = IndexData(ParitySequence(2, 1, (1, 0)))
    mixed = e_matrix(idx, 1, 2) + e_matrix(idx, 2, 3)
    assert element_parity(e_matrix(idx, 1, 2)) == 1
    with pytest.raises(NonHomogeneous):
        bracket(mixed, e_matrix(idx, 1, 1))


def test_supertrace_form_on_cartan():
    for idx in all_index_data(6):
        r = idx.ps.r
        for i in range(1, r + 1):
            for j in range(1, r + 1):
                val = invariant_form(f_matrix(idx, i, i), f_matrix(idx, j, j))
                want = Fraction(idx.sign(i)) if i == j else Fraction(0)
                assert val == want


def test_f_matrices_are_form_skew():
    # graded form invariance: the supertranspose negates even elements of
    # osp and fixes odd ones
    from ospyang.supermatrix import supertranspose
    for idx in all_index_data(5):
        for (i, j) in f_basis_indices(idx):
            fm = f_matrix(idx, i, j)
            if fm.is_zero():
                continue
            s = Fraction(-1 if element_parity(fm) == 0 else 1)
            assert (supertranspose(fm, idx) - fm.scale(s)).is_zero()


def test_unsupported_rank():
    with pytest.raises(UnsupportedRank):
        cartan_and_dynkin(ParitySequence(2, 0, (0,)))


def test_rank_one_diagrams():
    rd, cd, dd = cartan_and_dynkin(ParitySequence(1, 1, (1,)))
    assert cd.A == ((Fraction(2),),)
    assert cd.D == (Fraction(-1, 2),)
    assert dd.colors == ("black",)
    assert dd.labels == (Fraction(2),)

    rd, cd, dd = cartan_and_dynkin(ParitySequence(3, 0, (0,)))
    assert cd.A == ((Fraction(2),),)
    assert dd.colors == ("white",)
    assert dd.labels == (Fraction(1),)

    rd, cd, dd = cartan_and_dynkin(ParitySequence(0, 1, (1,)))
    assert cd.A == ((Fraction(2),),)
    assert dd.colors == ("white",)
    assert dd.labels == (Fraction(1),)


def test_osp22_is_single_grey_edge():
    rd, cd, dd = cartan_and_dynkin(ParitySequence(2, 1, (1, 0)))
    assert dd.colors == ("grey", "grey")
    assert cd.A == ((Fraction(0), Fraction(-1)), (Fraction(-1), Fraction(0)))
    assert dd.edges == {(1, 2): 1}
    assert rd.l2min == 4


CASE_TABLE = [
    # (N, m, seq, labels, K parity, fork)
    (2, 4, (1, 1, 1, 1, 0), (2, 2, 2, 1, 1), 0, True),
    (4, 3, (0, 1, 1, 1, 0), (1, 2, 2, 1, 1), 1, True),
    (10, 0, (0, 0, 0, 0, 0), (1, 2, 2, 1, 1), 0, True),
    (8, 1, (1, 0, 0, 0, 0), (2, 2, 2, 1, 1), 1, True),
    (0, 5, (1, 1, 1, 1, 1), (2, 2, 2, 2, 1), 0, False),
    (2, 4, (0, 1, 1, 1, 1), (1, 2, 2, 2, 1), 1, False),
    (11, 0, (0, 0, 0, 0, 0), (1, 2, 2, 2, 2), 0, False),
    (9, 1, (1, 0, 0, 0, 0), (2, 2, 2, 2, 2), 1, False),
    (1, 5, (1, 1, 1, 1, 1), (2, 2, 2, 2, 2), 0, False),
    (3, 4, (0, 1, 1, 1, 1), (1, 2, 2, 2, 2), 1, False),
]


@pytest.mark.parametrize("N,m,seq,labels,kpar,fork", CASE_TABLE)
def test_case_table_labels(N, m, seq, labels, kpar, fork):
    rd, cd, dd = cartan_and_dynkin(ParitySequence(N, m, seq))
    assert tuple(int(a) for a in dd.labels) == labels
    assert dd.grey_count % 2 == kpar
    assert dd.fork == fork


def test_case_table_shapes():
    # grey fork tips carry a double undirected edge; white tips are unjoined
    _, _, dd = cartan_and_dynkin(ParitySequence(4, 3, (0, 1, 1, 1, 0)))
    assert dd.colors[3] == dd.colors[4] == "grey"
    assert dd.edges[(4, 5)] == 2
    assert dd.orientations[(4, 5)] == "undirected"
    _, _, dd = cartan_and_dynkin(ParitySequence(10, 0, (0, 0, 0, 0, 0)))
    assert dd.colors[3] == dd.colors[4] == "white"
    assert (4, 5) not in dd.edges

    # B-series double edge points toward the short last root
    _, _, dd = cartan_and_dynkin(ParitySequence(11, 0, (0, 0, 0, 0, 0)))
    assert dd.edges[(4, 5)] == 2
    assert dd.orientations[(4, 5)] == "4->5"
    _, _, dd = cartan_and_dynkin(ParitySequence(1, 5, (1, 1, 1, 1, 1)))
    assert dd.colors[4] == "black"
    assert dd.orientations[(4, 5)] == "4->5"

    # C-series double edge points away from the long last root
    _, _, dd = cartan_and_dynkin(ParitySequence(0, 5, (1, 1, 1, 1, 1)))
    assert dd.edges[(4, 5)] == 2
    assert dd.orientations[(4, 5)] == "5->4"


def test_first_label_rule():
    for ps in all_ps(9):
        r = ps.r
        if r < 2 or (ps.N, ps.m) == (2, 0):
            continue
        _, _, dd = cartan_and_dynkin(ps)
        if dd.fork and r == 2:
            continue  # so(4)-type degeneration, highest root hits alpha_2 alone
        want = 2 if ps.seq[0] == 1 else 1
        assert int(dd.labels[0]) == want, ps.label()


def test_symmetric_b_and_integral_a():
    for ps in all_ps(8):
        if ps.r == 0 or (ps.N, ps.m) == (2, 0):
            continue
        rd, cd, dd = cartan_and_dynkin(ps)
        r = ps.r
        for i in range(r):
            for j in range(r):
                assert cd.B[i][j] == cd.B[j][i]
                assert cd.A[i][j] == cd.B[i][j] / cd.D[i]
                assert cd.A[i][j].denominator == 1
            assert cd.A[i][i] in (Fraction(0), Fraction(2))


def test_grey_count_matches_endpoint_parity():
    # K counts chain vertices with bar(i) != bar(i+1); its parity telescopes
    for ps in all_ps(9):
        if ps.r < 2 or (ps.N, ps.m) == (2, 0):
            continue
        _, _, dd = cartan_and_dynkin(ps)
        end = ps.r - 2 if dd.fork else ps.r - 1
        want = (ps.seq[0] != ps.seq[end]) if end >= 1 else False
        assert (dd.grey_count % 2 == 1) == want


def test_renderers():
    _, _, dd = cartan_and_dynkin(ParitySequence(4, 3, (0, 1, 1, 1, 0)))
    j = dd.to_json()
    assert set(j) == {"colors", "edges", "orientations", "labels", "grey_count", "fork"}
    text = dd.to_text()
    assert "vertex 1: grey, label 1" in text
    dot = dd.to_dot()
    assert dot.startswith("digraph") and dot.rstrip().endswith("}")
    assert "dir=none" in dot


def test_chevalley_generators_so3():
    es, fs, hs, cd = chevalley_generators(ParitySequence(3, 0, (0,)))
    idx = IndexData(ParitySequence(3, 0, (0,)))
    root2 = Sqrt2(0, 1)
    assert (es[0] - f_matrix(idx, 1, 2, one=Sqrt2(1)).scale(root2)).is_zero()
    assert (fs[0] - f_matrix(idx, 2, 1, one=Sqrt2(1)).scale(root2)).is_zero()
    assert (hs[0] - f_matrix(idx, 1, 1, one=Sqrt2(1)).scale(Sqrt2(2))).is_zero()


def test_serre_verify_all_small():
    for ps in all_ps(7):
        if ps.r == 0 or (ps.N, ps.m) == (2, 0):
            continue
        rep = serre_verify(ps)
        assert rep["ok"]


def test_higher_serre_negative_controls_present():
    # the excluded degree-4 fork configuration really is nonzero
    rep = serre_verify(ParitySequence(4, 1, (1, 0, 0)))
    names = dict(rep["relations"])
    assert names["deg4-excluded (nonzero)"]
    assert names["deg4-fork" ] if "deg4-fork" in names else True
    # the degree-3 relation fails exactly when the last vector is odd
    rep = serre_verify(ParitySequence(0, 3, (1, 1, 1)))
    names = dict(rep["relations"])
    assert names["deg3 (nonzero)"]
    rep = serre_verify(ParitySequence(2, 2, (1, 1, 0)))
    names = dict(rep["relations"])
    assert names["deg3"]


def test_higher_serre_case_coverage():
    cases = {n for (n, _, _, _) in higher_serre_cases(ParitySequence(4, 1, (1, 0, 0)))}
    assert {"deg4-excluded", "deg3", "deg6"} <= cases
    cases = {n for (n, _, _, _) in higher_serre_cases(ParitySequence(8, 0, (0, 0, 0, 0)))}
    assert {"deg4-fork-even", "deg7", "deg3", "deg6", "deg4-chain t=2"} <= cases
    cases = {n for (n, _, _, _) in higher_serre_cases(ParitySequence(7, 0, (0, 0, 0)))}
    assert "deg4-tail" in cases
    cases = {n for (n, _, _, _) in higher_serre_cases(ParitySequence(5, 1, (0, 1, 0)))}
    assert "deg4-tail" in cases


def test_classical_isos():
    assert classical_iso_check("so3_sl2")
    assert classical_iso_check("osp22_sl12")
    assert classical_iso_check("so6_sl4")
    with pytest.raises(ValueError):
        classical_iso_check("nope")


def test_broken_assignment_is_rejected():
    # flipping one generator sign must break the bracket morphism property
    from ospyang.liealgebra import _gl_elementary
    idx = IndexData(ParitySequence(6, 0, (0, 0, 0)))
    one = Sqrt2(1)
    F = lambda i, j: f_matrix(idx, i, j, one=one)
    p4 = (0, 0, 0, 0)
    assign = [((1, 2), (2, 3)), ((2, 3), (1, 2)), ((3, 4), (2, 4)),
              ((2, 1), (3, 2)), ((3, 2), (2, 1)), ((4, 3), (4, 2))]
    pairs = [(_gl_elementary(p4, a, b), F(c, d)) for (a, b), (c, d) in assign]
    x, y = pairs[2]
    pairs[2] = (x, -y)
    assert not generator_map_is_bracket_morphism(pairs)


def test_row_space_membership():
    sp = RowSpace()
    assert sp.add([Fraction(1), Fraction(2), Fraction(0)])
    assert sp.add([Fraction(0), Fraction(1), Fraction(1)])
    assert not sp.add([Fraction(2), Fraction(5), Fraction(1)])
    assert sp.rank == 2
    assert sp.contains([Fraction(1), Fraction(3), Fraction(1)])
    assert not sp.contains([Fraction(0), Fraction(0), Fraction(1)])


def test_supertrace_vanishes_on_osp():
    for idx in all_index_data(6):
        for (i, j) in f_basis_indices(idx):
            assert supertrace(f_matrix(idx, i, j)) == 0

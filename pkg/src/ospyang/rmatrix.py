"""Rational R-matrices of orthosymplectic and super A-type, truncated
variants, and the Yang-Baxter verifier.

The orthosymplectic R(u) = I - P/u + Q/(u - kappa) acts on V (x) V; the
A-type counterpart drops the Q term. Both are globally even operators,
so their leg embeddings into triple tensor products reduce to plain
Kronecker products, with leg moves implemented by conjugating with the
graded permutation P.
"""

from fractions import Fraction

from .kernel import SpMat
from .rings import (DegreeBoundExceeded, Poly, RationalFunction,
                    polynomial_identity_check)
from .supermatrix import (DepthOutOfRange, IndexData, SuperMatrix,
                          permutation_P_entries, q_operator_entries,
                          tensor_parities)


class RMatrix:
    """kind 'osp' or 'gl'; sparse P and Q tables plus kappa give pointwise
    values and symbolic entries on demand."""

    __slots__ = ("kind", "idx", "parities", "kappa", "p_ent", "q_ent", "q_pole_offset")

    def __init__(self, kind, parities, p_ent, q_ent=None, kappa=None,
                 idx=None, q_pole_offset=Fraction(0)):
        self.kind = kind
        self.parities = tuple(parities)
        self.p_ent = p_ent
        self.q_ent = q_ent
        self.kappa = kappa
        self.idx = idx
        self.q_pole_offset = q_pole_offset

    @property
    def dim(self):
        return len(self.parities)

    @property
    def dim2(self):
        return self.dim ** 2

    def eval_point(self, x):
        """R(x) as a sparse Fraction matrix; raises ZeroDivisionError at poles."""
        x = Fraction(x)
        n2 = self.dim2
        out = SpMat.identity(n2)
        inv_u = -1 / x
        for (i, j), v in self.p_ent.items():
            out.set(i, j, out.get(i, j) + v * inv_u)
        if self.q_ent is not None:
            inv_q = 1 / (x - self.kappa - self.q_pole_offset)
            for (i, j), v in self.q_ent.items():
                out.set(i, j, out.get(i, j) + v * inv_q)
        return out

    def symbolic(self):
        """Entries as a dense SuperMatrix over RationalFunction."""
        u = Poly((Fraction(0), Fraction(1)))
        tp = tensor_parities(self.parities, self.parities)
        inv_u = RationalFunction(Poly((Fraction(-1),)), u)
        M = SuperMatrix.identity(tp, one=RationalFunction(Poly((Fraction(1),))),
                                 zero=RationalFunction(Poly()))
        for (i, j), v in self.p_ent.items():
            M.rows[i][j] = M.rows[i][j] + inv_u * v
        if self.q_ent is not None:
            inv_q = RationalFunction(Poly((Fraction(1),)),
                                     u - Poly(((self.kappa + self.q_pole_offset),)))
            for (i, j), v in self.q_ent.items():
                M.rows[i][j] = M.rows[i][j] + inv_q * v
        return M


def build_osp_R(idx, q_pole_offset=Fraction(0)):
    """R(u) = I - P/u + Q/(u - kappa). The q_pole_offset hook shifts the Q
    pole and exists only so negative controls can break the Yang-Baxter
    equation on purpose."""
    return RMatrix("osp", idx.par, permutation_P_entries(idx.par),
                   q_operator_entries(idx), idx.kappa, idx=idx,
                   q_pole_offset=Fraction(q_pole_offset))


def build_gl_R(parities):
    """A-type R(u) = I - P/u for the superspace with the given parities."""
    parities = tuple(int(p) for p in parities)
    return RMatrix("gl", parities, permutation_P_entries(parities))


def build_truncated_R(idx, s):
    """R-matrix of the subspace V^[s] = span{v_i : s < i < s'}.

    Its constant equals kappa - sum_{i<=s} (-1)^bar(i), which agrees with
    the intrinsic kappa of the sliced index data; asserted here."""
    if not 1 <= s <= (idx.N - 1) // 2 + idx.m:
        raise DepthOutOfRange("depth %d outside 1..%d" % (s, (idx.N - 1) // 2 + idx.m))
    sub = idx.slice(s)
    assert sub.kappa == idx.kappa_truncated(s)
    return build_osp_R(sub)


def _p_matrix_sp(parities):
    n2 = len(parities) ** 2
    out = SpMat(n2, n2)
    for (i, j), v in permutation_P_entries(parities).items():
        out.set(i, j, v)
    return out


def leg_embeddings_at(R, x12, x13, x23):
    """Pointwise R12, R13, R23 on V (x) V (x) V.

    All embeddings are plain Kronecker products because R is globally
    even; R13 is obtained from R12 by conjugating with P23.
    """
    n = R.dim
    I = SpMat.identity(n)
    P23 = I.kron(_p_matrix_sp(R.parities))
    R12 = R.eval_point(x12).kron(I)
    R23 = I.kron(R.eval_point(x23))
    R13 = P23 @ R.eval_point(x13).kron(I) @ P23
    return R12, R13, R23


def check_ybe(R, degree_bound=4):
    """R12(u) R13(u+v) R23(v) = R23(v) R13(u+v) R12(u), decided exactly.

    Clearing the six pole factors leaves polynomial entries of degree at
    most 4 per variable, so a 5 x 5 rational grid decides the identity.
    """

    def lhs(u, v):
        R12, R13, R23 = leg_embeddings_at(R, u, u + v, v)
        return (R12 @ R13 @ R23).to_dict()

    def rhs(u, v):
        R12, R13, R23 = leg_embeddings_at(R, u, u + v, v)
        return (R23 @ R13 @ R12).to_dict()

    return polynomial_identity_check(lhs, rhs, degree_bound, nvars=2,
                                     actual_degree=4)


def unitarity_scalar(R):
    """R(u) R21(-u) is a scalar multiple of the identity; returns that
    scalar as a RationalFunction after confirming scalarity on a grid.

    The value is recorded for inspection rather than asserted against a
    closed form; returns None when the product is not scalar."""
    P = _p_matrix_sp(R.parities)

    def prod_at(x):
        A = R.eval_point(x)
        B = P @ R.eval_point(-x) @ P
        return A @ B

    def scalar_at(x):
        M = prod_at(x)
        c = M.get(0, 0)
        for i, j, v in M.entries():
            if i != j and v:
                return None
            if i == j and v != c:
                return None
        return c

    pts = [Fraction(7) + k for k in range(12)]
    vals = []
    for x in pts:
        try:
            c = scalar_at(x)
        except ZeroDivisionError:
            continue
        if c is None:
            return None
        vals.append((x, c))
        if len(vals) >= 10:
            break
    # clearing denominator: poles of R(u) and of R21(-u)
    u = Poly((Fraction(0), Fraction(1)))
    if R.kind == "osp":
        den = u * u * (u - Poly((R.kappa,))) * (u + Poly((R.kappa,)))
    else:
        den = u * u
    # cleared values c(x) * den(x) interpolate to a polynomial of degree <= deg den
    xs = [x for x, _ in vals]
    ys = [c * den(x) for x, c in vals]
    num = _lagrange(xs, ys)
    if num.degree > den.degree:
        return None
    cand = RationalFunction(num, den)
    for x, c in vals:
        if cand(x) != c:
            return None
    return cand


def _lagrange(xs, ys):
    """Exact Lagrange interpolation through the given rational points."""
    total = Poly()
    one = Poly((Fraction(1),))
    for i, (xi, yi) in enumerate(zip(xs, ys)):
        li = one
        denom = Fraction(1)
        for j, xj in enumerate(xs):
            if j != i:
                li = li * Poly((-xj, Fraction(1)))
                denom *= (xi - xj)
        total = total + li * (yi / denom)
    return total

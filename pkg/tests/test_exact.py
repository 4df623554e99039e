from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given
from hypothesis import strategies as st

from conftest import poly_matrices, scalars
from oracles import monic_sympy, pm_to_sympy, poly_to_sympy, x
from symeigen.errors import ValidationError
from symeigen.exact import (
    I,
    ONE,
    ZERO,
    GaussianRational,
    MoebiusMap,
    PolyMatrix,
    UniPoly,
    format_scalar,
    parse_scalar,
    pm_eval,
    pm_moebius,
    pm_rev,
    poly_arith,
)


@pytest.mark.parametrize("text, re, im", [
    ("3", 3, 0),
    ("-3/2+1/4i", Fraction(-3, 2), Fraction(1, 4)),
    ("4/6", Fraction(2, 3), 0),
    ("i", 0, 1),
    ("-i", 0, -1),
    ("3i", 0, 3),
    ("-1/4i", 0, Fraction(-1, 4)),
    ("2-i", 2, -1),
    ("0+1i", 0, 1),
])
def test_parse_scalar(text, re, im):
    z = parse_scalar(text)
    assert (z.re, z.im) == (re, im)


@pytest.mark.parametrize("bad", ["", "1/0", "abc", "1+", "i2", "3ii", "1.5"])
def test_parse_scalar_rejects(bad):
    with pytest.raises(ValidationError):
        parse_scalar(bad)


@given(scalars)
def test_format_parse_roundtrip(z):
    assert parse_scalar(format_scalar(z)) == z


def test_canonical_form():
    z = GaussianRational(Fraction(2, 4), Fraction(-6, 8))
    assert z._d == 4 and (z._a, z._b) == (2, -3)
    assert GaussianRational(Fraction(1, 2)) == Fraction(1, 2)
    assert hash(GaussianRational(Fraction(1, 2))) == hash(Fraction(1, 2))
    assert I * I == -1


@given(scalars, scalars, scalars)
def test_field_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert (a * b) * c == a * (b * c)
    if a:
        assert a * a.inverse() == ONE
        assert (b / a) * a == b


def test_poly_arith_examples():
    p = UniPoly([-1, 0, 1])
    assert poly_arith(p, UniPoly([-1, 1]), "gcd") == UniPoly([-1, 1])
    assert poly_arith(UniPoly([-1, 1]), UniPoly([1, 1]), "mul") == p
    assert poly_arith(UniPoly([0, 1]), UniPoly([1, 1]), "gcd") == UniPoly([1])
    q, r = poly_arith(p, UniPoly([2, 1]), "divrem")
    assert q * UniPoly([2, 1]) + r == p and r.degree < 1
    with pytest.raises(ZeroDivisionError):
        poly_arith(p, UniPoly([]), "divrem")


polys = st.lists(scalars, min_size=0, max_size=5).map(UniPoly)


@given(polys, polys)
def test_divrem_is_exact(p, q):
    if q.is_zero():
        return
    quo, rem = divmod(p * q, q)
    assert quo == p and rem.is_zero()
    quo, rem = divmod(p, q)
    assert quo * q + rem == p
    assert rem.is_zero() or rem.degree < q.degree


@given(polys, polys)
def test_gcd_matches_sympy(p, q):
    if p.is_zero() and q.is_zero():
        return
    g = poly_arith(p, q, "gcd")
    assert g.is_monic()
    want = sp.gcd(monic_sympy(poly_to_sympy(p.raw)), monic_sympy(poly_to_sympy(q.raw)))
    assert monic_sympy(poly_to_sympy(g.raw)) == want.monic()


def test_pm_eval_examples():
    P = PolyMatrix.from_entries([[[0, 1], 0], [0, [0, 1]]])
    assert pm_eval(P, 0) == ((ZERO, ZERO), (ZERO, ZERO))
    assert pm_eval(PolyMatrix.from_entries([[[0, 0, 1]]]), 2) == ((GaussianRational(4),),)


@given(poly_matrices(gaussian=True), scalars)
def test_pm_eval_matches_sympy(P, z):
    got = pm_eval(P, z)
    want = pm_to_sympy(P).subs(x, sp.Rational(z.re.numerator, z.re.denominator)
                               + sp.I * sp.Rational(z.im.numerator, z.im.denominator))
    for i in range(P.rows):
        for j in range(P.cols):
            assert sp.simplify(want[i, j] - (sp.Rational(got[i][j].re.numerator, got[i][j].re.denominator)
                                            + sp.I * sp.Rational(got[i][j].im.numerator,
                                                                 got[i][j].im.denominator))) == 0


def test_rev_examples():
    assert pm_rev(PolyMatrix.from_entries([[[0, 1]]])) == PolyMatrix.from_entries([[1]], grade=1)
    assert pm_rev(PolyMatrix.from_entries([[1]], grade=2)) == PolyMatrix.from_entries([[[0, 0, 1]]])


@given(poly_matrices(gaussian=True))
def test_rev_involution(P):
    assert pm_rev(pm_rev(P)) == P
    assert pm_rev(P).grade == P.grade


def test_grade_is_declared():
    P = PolyMatrix.from_entries([[1]], grade=3)
    assert P.grade == 3 and P.degree == 0
    with pytest.raises(ValidationError):
        PolyMatrix.from_entries([[[0, 0, 1]]], grade=1)


@given(poly_matrices(symmetric=True, gaussian=True))
def test_moebius_identity_and_reversal(P):
    assert pm_moebius(P, MoebiusMap.identity()) == P
    assert pm_moebius(P, MoebiusMap(0, 1, 1, 0)) == pm_rev(P)


@given(poly_matrices(symmetric=True), st.tuples(*[st.integers(-3, 3)] * 8))
def test_moebius_composition_and_symmetry(P, vals):
    a = MoebiusMap(*vals[:4]) if vals[0] * vals[3] - vals[1] * vals[2] else MoebiusMap(1, 1, 0, 1)
    b = MoebiusMap(*vals[4:]) if vals[4] * vals[7] - vals[5] * vals[6] else MoebiusMap(2, 0, 1, 1)
    assert pm_moebius(pm_moebius(P, b), a) == pm_moebius(P, b @ a)
    assert pm_moebius(P, a).is_symmetric()
    assert pm_rev(P).is_symmetric()


def test_moebius_moves_eigenvalues():
    # P = x - 2; with A = [[1, 0], [1, 1]] the image has its root at m_A^{-1}(2) = -2
    P = PolyMatrix.from_entries([[[-2, 1]]])
    A = MoebiusMap(1, 0, 1, 1)
    Q = pm_moebius(P, A)
    root = -Q.coeffs[0][0][0] / Q.coeffs[1][0][0]
    assert A(root) == 2


def test_singular_moebius_rejected():
    with pytest.raises(ValidationError):
        MoebiusMap(1, 2, 2, 4)


@given(poly_matrices(), poly_matrices())
def test_matmul_matches_sympy(A, B):
    if A.cols != B.rows:
        return
    got = pm_to_sympy(A @ B)
    assert (got - (pm_to_sympy(A) * pm_to_sympy(B))).applyfunc(sp.expand) == sp.zeros(A.rows, B.cols)

import pytest
from hypothesis import given

from conftest import low_rank_products, poly_matrices
from symeigen.eigenstructure import (
    CompleteEigenstructure,
    classify_bundle,
    complete_eigenstructure,
    index_sum_check,
    is_simple_structure,
)
from symeigen.exact import GaussianRational, MoebiusMap, PolyMatrix, UniPoly, pm_moebius
from symeigen.realization import RealizationSpec, realize
from test_polylinalg import P1


def _gq(v):
    return GaussianRational(v)


def test_p1_structure():
    E = complete_eigenstructure(P1)
    assert E.rank == 1 and not E.finite_divisors and not E.infinite_divisors
    assert E.right_minimal == E.left_minimal == (1, 2)


def test_diagonal_cubics():
    P = PolyMatrix.from_entries([[UniPoly.from_roots([1, 2, 3]), 0], [0, UniPoly.from_roots([4, 5, 6])]])
    E = complete_eigenstructure(P)
    assert E.rank == 2 and E.finite_divisors == tuple((_gq(k), 1) for k in range(1, 7))
    assert not E.right_minimal and not E.infinite_divisors and is_simple_structure(E)


def test_constant_at_grade_one_is_infinite():
    E = complete_eigenstructure(PolyMatrix.from_entries([[1]], grade=1))
    assert E.infinite_divisors == (1,) and not E.finite_divisors
    E = complete_eigenstructure(PolyMatrix.identity(3, 1))
    assert E.infinite_divisors == (1, 1, 1)


def test_irrational_eigenvalues_stay_unfactored():
    P = PolyMatrix.from_entries([[[-2, 0, 1], 0], [0, [-1, 1]]])
    E = complete_eigenstructure(P)
    assert [p for p, _ in E.unfactored] == [UniPoly([-2, 0, 1])]
    assert E.finite_divisors == ((_gq(1), 1),)
    assert is_simple_structure(E)


@given(poly_matrices(max_m=3, max_n=3, gaussian=True))
def test_index_sum_random(P):
    E = complete_eigenstructure(P)
    assert E.index_sum() == P.grade * E.rank
    assert len(E.right_minimal) == P.cols - E.rank
    assert len(E.left_minimal) == P.rows - E.rank


@given(low_rank_products(max_m=3, max_n=3))
def test_index_sum_low_rank(P):
    E = complete_eigenstructure(P)
    assert E.index_sum() == P.grade * E.rank


@given(poly_matrices(max_m=3, symmetric=True))
def test_symmetric_minimal_indices_agree(P):
    E = complete_eigenstructure(P)
    assert E.left_minimal == E.right_minimal


def test_moebius_maps_eigenvalues():
    P = realize(RealizationSpec(3, 3, 2, (_gq(1), _gq(2)), 0, (2,)))
    A = MoebiusMap(3, 1, 1, 1)  # m_A(inf) = 3 is not an eigenvalue
    E, F = complete_eigenstructure(P), complete_eigenstructure(pm_moebius(P, A))
    assert F.right_minimal == E.right_minimal == (2,)
    key = lambda z: (z.re, z.im)  # noqa: E731
    assert sorted((A(z) for z in F.eigenvalues), key=key) == sorted(E.eigenvalues, key=key)


@pytest.mark.parametrize("args, want", [
    ((6, 0, [], 2, 3), True),
    ((0, 0, [1], 1, 3), False),
    ((1, 0, [1], 1, 3), True),
])
def test_index_sum_check(args, want):
    assert index_sum_check(*args) is want


def _structure(finite=(), unfactored=(), infinite=(), eps=(), rank=1, size=(2, 2), grade=1):
    return CompleteEigenstructure(tuple(finite), tuple(unfactored), tuple(infinite), tuple(eps),
                                  tuple(eps), rank, grade, size)


def test_simple_structure_rules():
    assert not is_simple_structure(_structure(finite=[(_gq(3), 2)]))
    g1, g2 = UniPoly([0, 1]), UniPoly([0, -1, 1])
    P = PolyMatrix.from_entries([[g1.raw, 0], [0, g2.raw]])
    assert not is_simple_structure(complete_eigenstructure(P))
    assert not is_simple_structure(_structure(unfactored=[(UniPoly([-2, 0, 1]), True)] * 2))
    assert not is_simple_structure(_structure(infinite=[2]))
    assert not is_simple_structure(_structure(infinite=[1, 1]))
    assert is_simple_structure(_structure(finite=[(_gq(1), 1), (_gq(2), 1)], infinite=[1]))


def test_classify_realized_bundle():
    P = realize(RealizationSpec(3, 3, 2, tuple(map(_gq, (1, 2))), 0, (2,)))
    assert classify_bundle(complete_eigenstructure(P), 3, 3, 2) == 2


def test_classify_rejects():
    # repeated eigenvalue
    E = _structure(finite=[(_gq(1), 2)], eps=(1,), rank=2, size=(3, 3), grade=3)
    assert classify_bundle(E, 3, 3, 2) is None
    # minimal indices {0, 2} are not nearly homogeneous
    E = _structure(finite=[(_gq(k), 1) for k in range(2)], eps=(0, 2), rank=2, size=(4, 4), grade=3)
    assert E.index_sum() == 6
    assert classify_bundle(E, 4, 3, 2) is None
    # rank below r
    E = _structure(eps=(0,), rank=1, size=(2, 2), grade=1, finite=[(_gq(0), 1)])
    assert classify_bundle(E, 2, 1, 1) == 0
    assert classify_bundle(E, 3, 1, 2) is None


def test_signature_forgets_values():
    a = _structure(finite=[(_gq(1), 1), (_gq(2), 1)], infinite=[1])
    b = _structure(finite=[(_gq(5), 1)], unfactored=[(UniPoly([-2, 0, 1]), True)], infinite=[1])
    assert a.signature() != b.signature()
    c = _structure(finite=[(_gq(5), 1)], unfactored=[(UniPoly([-2, 1]), True)], infinite=[1])
    assert a.signature() == c.signature()
    d = _structure(unfactored=[(UniPoly([4, 0, -4, 0, 1]), False)])
    assert d.signature()[3] == (4,)

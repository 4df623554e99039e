"""Block-tridiagonal symmetric strong linearization of odd-grade symmetric
matrix polynomials, its inverse, and the minimal-index shift check.

For ``P = sum A_k x^k`` of grade ``d`` the pencil has ``d x d`` blocks of
size ``n``: diagonal block ``i`` (1-based) is ``x A_(d-i+1) + A_(d-i)`` for
odd ``i`` and zero for even ``i``; the off-diagonal pair ``(i, i+1)`` is
``I`` for odd ``i`` and ``x I`` for even ``i``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .eigenstructure import CompleteEigenstructure, complete_eigenstructure
from .errors import ValidationError
from .exact import ONE, ZERO, PolyMatrix, squared_distance, zero_matrix
from .polylinalg import minimal_indices, normal_rank

__all__ = [
    "SylvesterPencil",
    "linearize",
    "delinearize",
    "ShiftLawReport",
    "verify_shift_law",
    "distance",
]


@dataclass(frozen=True)
class SylvesterPencil:
    pencil: PolyMatrix
    n: int
    d: int


def _check_poly(P: PolyMatrix) -> None:
    if P.grade % 2 == 0:
        raise ValidationError(f"grade must be odd, got {P.grade}")
    if not P.is_symmetric():
        raise ValidationError("polynomial must be square and symmetric")


def linearize(P: PolyMatrix) -> SylvesterPencil:
    _check_poly(P)
    n, d = P.rows, P.grade
    N = n * d
    A0 = [[ZERO] * N for _ in range(N)]  # constant coefficient
    A1 = [[ZERO] * N for _ in range(N)]  # coefficient of x
    for i in range(1, d + 1):
        at = (i - 1) * n
        if i % 2:
            hi, lo = P.coeffs[d - i + 1], P.coeffs[d - i]
            for p in range(n):
                for q in range(n):
                    A1[at + p][at + q] = hi[p][q]
                    A0[at + p][at + q] = lo[p][q]
        if i < d:
            target = A0 if i % 2 else A1
            for p in range(n):
                target[at + p][at + n + p] = ONE
                target[at + n + p][at + p] = ONE
    return SylvesterPencil(PolyMatrix._trusted([A0, A1], N, N, 1), n, d)


def delinearize(F: SylvesterPencil) -> PolyMatrix:
    """Read ``P`` back from a pencil with the exact block pattern of ``linearize``."""
    n, d, L = F.n, F.d, F.pencil
    if n < 1 or d < 1 or d % 2 == 0:
        raise ValidationError("pattern needs n >= 1 and odd d")
    if L.grade != 1 or L.shape != (n * d, n * d):
        raise ValidationError(f"expected a grade-1 pencil of size {n * d}")
    A0, A1 = L.coeffs
    coeffs = [None] * (d + 1)
    for bi in range(d):
        for bj in range(d):
            i, j = bi + 1, bj + 1
            blk0 = [row[bj * n:(bj + 1) * n] for row in A0[bi * n:(bi + 1) * n]]
            blk1 = [row[bj * n:(bj + 1) * n] for row in A1[bi * n:(bi + 1) * n]]
            if i == j and i % 2:
                coeffs[d - i + 1], coeffs[d - i] = blk1, blk0
                continue
            want0 = want1 = _zero(n)
            if abs(i - j) == 1:
                if min(i, j) % 2:
                    want0 = _eye(n)
                else:
                    want1 = _eye(n)
            if [list(r) for r in blk0] != want0 or [list(r) for r in blk1] != want1:
                raise ValidationError(f"block ({i},{j}) does not match the linearization pattern")
    P = PolyMatrix._trusted(coeffs, n, n, d)
    if not P.is_symmetric():
        raise ValidationError("diagonal blocks are not symmetric")
    return P


def _zero(n: int):
    return [list(r) for r in zero_matrix(n, n)]


def _eye(n: int):
    return [[ONE if p == q else ZERO for q in range(n)] for p in range(n)]


@dataclass(frozen=True)
class ShiftLawReport:
    shift: int
    poly_right: tuple[int, ...]
    poly_left: tuple[int, ...]
    pencil_right: tuple[int, ...]
    pencil_left: tuple[int, ...]
    poly_rank: int
    pencil_rank: int
    divisors_match: bool | None = None
    poly_structure: CompleteEigenstructure | None = None
    pencil_structure: CompleteEigenstructure | None = None

    @property
    def indices_shifted(self) -> bool:
        want_r = tuple(e + self.shift for e in self.poly_right)
        want_l = tuple(e + self.shift for e in self.poly_left)
        return self.pencil_right == want_r and self.pencil_left == want_l

    @property
    def passed(self) -> bool:
        return self.indices_shifted and self.divisors_match is not False


def verify_shift_law(P: PolyMatrix, divisors: bool = True) -> ShiftLawReport:
    """Compare minimal indices (and optionally elementary divisors) of ``P``
    and of its linearization, each computed from scratch."""
    _check_poly(P)
    F = linearize(P).pencil
    shift = (P.grade - 1) // 2
    if divisors:
        EP = complete_eigenstructure(P)
        EF = complete_eigenstructure(F)
        match = (EP.finite_divisors == EF.finite_divisors
                 and [p for p, _ in EP.unfactored] == [p for p, _ in EF.unfactored]
                 and EP.infinite_divisors == EF.infinite_divisors)
        return ShiftLawReport(shift, EP.right_minimal, EP.left_minimal, EF.right_minimal,
                              EF.left_minimal, EP.rank, EF.rank, match, EP, EF)
    rp, rf = normal_rank(P), normal_rank(F)
    mp, mf = minimal_indices(P, rp), minimal_indices(F, rf)
    return ShiftLawReport(shift, mp.right, mp.left, mf.right, mf.left, rp, rf)


def distance(P: PolyMatrix, Q: PolyMatrix) -> Fraction:
    """Squared coefficient distance; equal for two polynomials and for their linearizations."""
    return squared_distance(P, Q)

"""Construction of symmetric matrix polynomials with prescribed rank, grade,
simple finite eigenvalues, at most one simple infinite eigenvalue and
prescribed minimal indices.

Outline: pick a Moebius map that sends every prescribed eigenvalue and
infinity to finite points, build ``Q = U S U^T`` with ``U^T`` one half of a
pair of dual minimal bases and ``S`` carrying the elementary divisors, then
transform back.
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from typing import Sequence

from . import linalg
from .catalog import BundleDescriptor
from .eigenstructure import complete_eigenstructure
from .errors import ConstructionFailed, IndexSumViolation, InvariantBreach, ValidationError
from .exact import (
    ONE,
    ZERO,
    GaussianRational,
    MoebiusMap,
    PolyMatrix,
    UniPoly,
    gq,
    pm_moebius,
)
from .polylinalg import minimal_indices, minimal_kernel_basis, normal_rank, row_degrees

__all__ = [
    "RealizationSpec",
    "DualBasisPair",
    "dual_minimal_bases",
    "nearly_homogeneous_split",
    "choose_moebius",
    "realize",
    "realize_bundle",
]

DEFAULT_ATTEMPTS = 60


@dataclass(frozen=True)
class RealizationSpec:
    """Prescribed data: eigenvalues ``mus`` (s of them), ``t`` simple infinite
    eigenvalues (0 or 1) and right (= left) minimal indices ``eps``."""

    n: int
    d: int
    r: int
    mus: tuple[GaussianRational, ...] = ()
    t: int = 0
    eps: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "mus", tuple(gq(z) for z in self.mus))
        object.__setattr__(self, "eps", tuple(int(e) for e in self.eps))

    @property
    def s(self) -> int:
        return len(self.mus)

    @property
    def residual(self) -> int:
        return self.s + self.t + 2 * sum(self.eps) - self.r * self.d

    def validate(self) -> None:
        if self.n < 1 or not 1 <= self.r <= self.n:
            raise ValidationError(f"need 1 <= r <= n, got r={self.r}, n={self.n}")
        if self.d < 1:
            raise ValidationError(f"grade must be positive, got {self.d}")
        if self.t not in (0, 1):
            raise ValidationError(f"t must be 0 or 1, got {self.t}")
        if len(self.eps) != self.n - self.r:
            raise ValidationError(f"need exactly n-r = {self.n - self.r} minimal indices, got {len(self.eps)}")
        if any(e < 0 for e in self.eps):
            raise ValidationError("minimal indices must be nonnegative")
        if len(set(self.mus)) != len(self.mus):
            raise ValidationError("eigenvalues must be pairwise distinct")
        if self.residual:
            raise IndexSumViolation(self.residual)


@dataclass(frozen=True)
class DualBasisPair:
    M: PolyMatrix
    N: PolyMatrix
    attempts: int = field(default=1, compare=False)


def nearly_homogeneous_split(total: int, r: int) -> tuple[int, ...]:
    """``r`` degrees, ascending, summing to ``total`` and differing by at most one."""
    q, w = divmod(total, r)
    return tuple([q] * (r - w) + [q + 1] * w)


def _x_pow(k: int) -> list:
    return [ZERO] * k + [ONE]


def _chain(degs: Sequence[int]) -> tuple[list, list]:
    """Single row [1, x^g1, x^(g1+g2), ...] and its kernel rows x^gi e_i - e_(i+1)."""
    k = len(degs) + 1
    single, acc = [[ONE]], 0
    for g in degs:
        acc += g
        single.append(_x_pow(acc))
    rows = []
    for i, g in enumerate(degs):
        row = [[] for _ in range(k)]
        row[i] = _x_pow(g)
        row[i + 1] = [-ONE]
        rows.append(row)
    return [single], rows


def _random_rows(degs: Sequence[int], n: int, rng: random.Random) -> list[list[list]]:
    rows = []
    for g in degs:
        while True:
            row = [[gq(rng.randint(-3, 3)) for _ in range(g + 1)] for _ in range(n)]
            if any(p[g] for p in row):
                break
        rows.append(row)
    return rows


def _check_pair(M: PolyMatrix, N: PolyMatrix, eps: tuple[int, ...], eta: tuple[int, ...]) -> bool:
    n = M.cols
    if (M @ N.T).degree >= 0:
        return False
    if sorted(row_degrees(M)) != list(eps) or sorted(row_degrees(N)) != list(eta):
        return False
    if normal_rank(M) != M.rows or normal_rank(N) != N.rows:
        return False
    # a full-rank polynomial basis whose degree sum equals the sum of the
    # minimal indices of the space it spans is a minimal basis
    if minimal_indices(M, M.rows).right != eta:
        return False
    if minimal_indices(N, N.rows).right != eps:
        return False
    return M.rows + N.rows == n


def dual_minimal_bases(eps: Sequence[int], r: int, seed: int = 0,
                       attempts: int = DEFAULT_ATTEMPTS) -> DualBasisPair:
    """Dual minimal bases ``M`` ((n-r) x n, row degrees ``eps``) and ``N``
    (r x n, nearly homogeneous row degrees with the same sum)."""
    eps = tuple(sorted(int(e) for e in eps))
    if r < 1 or any(e < 0 for e in eps):
        raise ValidationError("need r >= 1 and nonnegative degrees")
    n = len(eps) + r
    eta = nearly_homogeneous_split(sum(eps), r)
    if not eps:
        return DualBasisPair(PolyMatrix.zeros(0, n), PolyMatrix.identity(n))
    if r == 1:
        single, rows = _chain(eps)
        M = PolyMatrix.from_entries(rows)
        N = PolyMatrix.from_entries(single)
    elif len(eps) == 1:
        single, rows = _chain(eta)
        M = PolyMatrix.from_entries(single)
        N = PolyMatrix.from_entries(rows)
    else:
        rng = random.Random(seed)
        for k in range(1, attempts + 1):
            M = PolyMatrix.from_entries(_random_rows(eps, n, rng))
            if linalg.rank(_leading_rows(M)) < M.rows:
                continue
            N = minimal_kernel_basis(M)
            if _check_pair(M, N, eps, eta):
                return DualBasisPair(M, N, k)
        raise ConstructionFailed(f"no dual minimal bases for eps={list(eps)}, r={r} in {attempts} attempts")
    if not _check_pair(M, N, eps, eta):
        raise InvariantBreach("explicit dual minimal bases failed verification")
    return DualBasisPair(M, N)


def _leading_rows(P: PolyMatrix):
    return [P.coeffs[d][i] for i, d in enumerate(row_degrees(P))]


def choose_moebius(mus: Sequence[GaussianRational]) -> MoebiusMap:
    """``x -> x / (c x + 1)`` with the first c in 1, -1, 2, -2, ... keeping every ``mus`` finite."""
    k = 1
    while True:
        for c in (k, -k):
            if all(c * z + 1 for z in mus):
                return MoebiusMap(ONE, ZERO, gq(c), ONE)
        k += 1


def _diag(entries: Sequence[list], size: int) -> PolyMatrix:
    raw = [[entries[i] if i == j else [] for j in range(size)] for i in range(size)]
    return PolyMatrix.from_entries(raw)


def _products(roots: Sequence[GaussianRational], sizes: Sequence[int]) -> list[list]:
    out, at = [], 0
    for k in sizes:
        out.append(UniPoly.from_roots(roots[at:at + k]).raw)
        at += k
    if at != len(roots):  # pragma: no cover - guaranteed by the index sum
        raise InvariantBreach("eigenvalue grouping does not use every divisor")
    return out


def _integral(P: PolyMatrix) -> PolyMatrix:
    """Scale by a positive integer so that every coefficient is a Gaussian integer."""
    L = 1
    for A in P.coeffs:
        for row in A:
            for x in row:
                if x:
                    L = L * x._d // math.gcd(L, x._d)
    return P if L == 1 else P.scale(L)


def _build_q(spec: RealizationSpec, targets: list[GaussianRational], seed: int,
             attempts: int) -> PolyMatrix:
    n, d, r = spec.n, spec.d, spec.r
    if r == n:
        return _diag(_products(targets, [d] * n), n).with_grade(d)
    pair = dual_minimal_bases(spec.eps, r, seed=seed, attempts=attempts)
    U = pair.N.T
    q, w = divmod(sum(spec.eps), r)
    gap = d - 2 * q
    if gap < 0:  # pragma: no cover - excluded by the index sum
        raise InvariantBreach("negative degree gap")
    if gap == 0:
        S = PolyMatrix.identity(r)
    elif gap == 1:
        k = r - 2 * w
        raw = [[[] for _ in range(r)] for _ in range(r)]
        for i, p in enumerate(_products(targets, [1] * k)):
            raw[i][i] = p
        for i in range(w):
            raw[k + i][k + w + i] = [ONE]
            raw[k + w + i][k + i] = [ONE]
        S = PolyMatrix.from_entries(raw)
    else:
        S = _diag(_products(targets, [gap] * (r - w) + [gap - 2] * w), r)
    Q = U @ S @ U.T
    if Q.degree > d:
        raise InvariantBreach(f"intermediate product has degree {Q.degree} > {d}")
    return Q.with_grade(d)


def realize(spec: RealizationSpec, seed: int = 0, verify: bool = False,
            attempts: int = DEFAULT_ATTEMPTS) -> PolyMatrix:
    """Symmetric n x n polynomial of grade d realizing ``spec``.

    The result has Gaussian-integer coefficients.  With ``verify`` the full
    eigenstructure is recomputed and compared with the spec.
    """
    spec.validate()
    A = choose_moebius(spec.mus)
    targets = [A(z) for z in spec.mus]
    if spec.t:
        targets.append(A(None))
    Q = _build_q(spec, targets, seed, attempts)
    P = _integral(pm_moebius(Q, A))
    if not P.is_symmetric():
        raise InvariantBreach("realized polynomial is not symmetric")
    if normal_rank(P) != spec.r:
        raise InvariantBreach("realized polynomial has the wrong rank")
    if verify:
        check_realization(P, spec)
    return P


def check_realization(P: PolyMatrix, spec: RealizationSpec) -> None:
    E = complete_eigenstructure(P)
    want_eps = tuple(sorted(spec.eps))
    problems = []
    if E.rank != spec.r:
        problems.append(f"rank {E.rank}")
    if E.unfactored or any(k != 1 for _, k in E.finite_divisors):
        problems.append("finite divisors not simple and Gaussian-rational")
    if sorted(E.eigenvalues, key=_key) != sorted(spec.mus, key=_key) or len(E.finite_divisors) != spec.s:
        problems.append("finite eigenvalues differ")
    if E.infinite_divisors != (1,) * spec.t:
        problems.append(f"infinite divisors {E.infinite_divisors}")
    if E.right_minimal != want_eps or E.left_minimal != want_eps:
        problems.append(f"minimal indices {E.right_minimal}/{E.left_minimal}")
    if problems:
        raise InvariantBreach("realization round-trip failed: " + "; ".join(problems))


def _key(z: GaussianRational):
    return (z.re, z.im)


def realize_bundle(D: BundleDescriptor, eigenvalues: Sequence, seed: int = 0,
                   verify: bool = False) -> PolyMatrix:
    """A member of the generic bundle ``K_a`` described by ``D``."""
    if D.kind != "polynomial":
        raise ValidationError("realize_bundle needs a polynomial descriptor")
    eigs = tuple(gq(z) for z in eigenvalues)
    if len(eigs) != D.eig_count:
        raise ValidationError(f"expected {D.eig_count} eigenvalues, got {len(eigs)}")
    spec = RealizationSpec(D.n, D.d, D.r, eigs, 0, D.min_indices)
    return realize(spec, seed=seed, verify=verify)

"""Complete eigenstructure of a matrix polynomial of declared grade."""
from __future__ import annotations

from dataclasses import dataclass, field

from .errors import InvariantBreach
from .exact import GaussianRational, PolyMatrix, UniPoly, p_gcd, pm_rev
from .polylinalg import (
    invariant_polynomials,
    is_squarefree,
    linear_roots,
    minimal_indices,
    normal_rank,
)

__all__ = [
    "CompleteEigenstructure",
    "complete_eigenstructure",
    "index_sum_check",
    "is_simple_structure",
    "classify_bundle",
    "nearly_homogeneous",
]


@dataclass(frozen=True)
class CompleteEigenstructure:
    """Elementary divisors and minimal indices of a matrix polynomial.

    ``finite_divisors`` holds ``(eigenvalue, degree)`` pairs for divisors
    with a Gaussian-rational root.  Factors of the invariant polynomials
    without such roots are kept, monic, in ``unfactored`` as
    ``(poly, squarefree)`` pairs, one per invariant polynomial.
    """

    finite_divisors: tuple[tuple[GaussianRational, int], ...]
    unfactored: tuple[tuple[UniPoly, bool], ...]
    infinite_divisors: tuple[int, ...]
    right_minimal: tuple[int, ...]
    left_minimal: tuple[int, ...]
    rank: int
    grade: int
    size: tuple[int, int]
    invariants: tuple[UniPoly, ...] = field(default=(), compare=False, repr=False)

    @property
    def finite_degree(self) -> int:
        return sum(k for _, k in self.finite_divisors) + sum(p.degree for p, _ in self.unfactored)

    @property
    def eigenvalues(self) -> list[GaussianRational]:
        return sorted({z for z, _ in self.finite_divisors}, key=lambda z: (z.re, z.im))

    def index_sum(self) -> int:
        return (self.finite_degree + sum(self.infinite_divisors)
                + sum(self.right_minimal) + sum(self.left_minimal))

    def signature(self) -> tuple:
        """Eigenstructure with the eigenvalue values forgotten (bundle data)."""
        finite = [k for _, k in self.finite_divisors]
        finite += [1 for p, sf in self.unfactored if sf for _ in range(p.degree)]
        # a repeated irrational factor has unknown divisor degrees; keep its degree apart
        opaque = sorted(p.degree for p, sf in self.unfactored if not sf)
        return (self.size, self.rank, tuple(sorted(finite)), tuple(opaque),
                tuple(sorted(self.infinite_divisors)), self.right_minimal, self.left_minimal)


def _x_power(g: UniPoly) -> int:
    raw = g.raw
    k = 0
    while k < len(raw) and not raw[k]:
        k += 1
    return k


def complete_eigenstructure(P: PolyMatrix) -> CompleteEigenstructure:
    rank = normal_rank(P)
    inv = invariant_polynomials(P)
    inv_rev = invariant_polynomials(pm_rev(P))
    mi = minimal_indices(P, rank)
    if len(inv) != rank or len(inv_rev) != rank:
        raise InvariantBreach(
            f"rank disagreement: evaluation {rank}, Smith {len(inv)}, reversal Smith {len(inv_rev)}")
    finite: list[tuple[GaussianRational, int]] = []
    rest: list[tuple[UniPoly, bool]] = []
    for g in inv:
        if g.degree <= 0:
            continue
        roots, cof = linear_roots(g)
        finite.extend(roots)
        if cof.degree > 0:
            rest.append((cof, is_squarefree(cof)))
    finite.sort(key=lambda e: (e[0].re, e[0].im, e[1]))
    infinite = sorted(k for k in (_x_power(g) for g in inv_rev) if k > 0)
    E = CompleteEigenstructure(
        finite_divisors=tuple(finite),
        unfactored=tuple(rest),
        infinite_divisors=tuple(infinite),
        right_minimal=mi.right,
        left_minimal=mi.left,
        rank=rank,
        grade=P.grade,
        size=P.shape,
        invariants=tuple(inv),
    )
    if E.index_sum() != P.grade * rank:
        raise InvariantBreach(f"index sum {E.index_sum()} differs from grade*rank {P.grade * rank}")
    return E


def index_sum_check(s: int, t: int, eps, r: int, d: int) -> bool:
    return s + t + 2 * sum(eps) == r * d


def is_simple_structure(E: CompleteEigenstructure) -> bool:
    if any(k != 1 for _, k in E.finite_divisors):
        return False
    eigs = [z for z, _ in E.finite_divisors]
    if len(set(eigs)) != len(eigs):
        return False
    polys = [p.raw for p, _ in E.unfactored]
    if not all(sf for _, sf in E.unfactored):
        return False
    for i, p in enumerate(polys):
        if any(len(p_gcd(p, q)) > 1 for q in polys[i + 1:]):
            return False
    # unfactored parts have no Gaussian-rational roots, so they are
    # automatically coprime to the linear divisors
    return len(E.infinite_divisors) <= 1 and all(k == 1 for k in E.infinite_divisors)


def nearly_homogeneous(n: int, r: int, a: int) -> tuple[int, ...]:
    """Sorted minimal indices of the generic bundle with parameter ``a``."""
    if n == r:
        return ()
    alpha, s = divmod(a, n - r)
    return tuple([alpha] * (n - r - s) + [alpha + 1] * s)


def classify_bundle(E: CompleteEigenstructure, n: int, d: int, r: int) -> int | None:
    """The ``a`` with ``E`` in the generic bundle ``K_a`` for (n, d, r), or None."""
    if E.size != (n, n) or E.rank != r or r >= n:
        return None
    if E.infinite_divisors or not is_simple_structure(E):
        return None
    gap = r * d - E.finite_degree
    if gap < 0 or gap % 2:
        return None
    a = gap // 2
    want = nearly_homogeneous(n, r, a)
    if E.right_minimal != want or E.left_minimal != want:
        return None
    return a

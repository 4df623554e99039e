"""Generic bounded-rank bundles of odd-grade symmetric matrix polynomials and
of symmetric pencils, their canonical pencils and codimensions.
"""
from __future__ import annotations

from dataclasses import asdict, dataclass
from typing import Sequence

from .errors import ValidationError
from .exact import ONE, ZERO, PolyMatrix, gq

__all__ = [
    "BundleDescriptor",
    "enumerate_poly_bundles",
    "enumerate_pencil_bundles",
    "pencil_descriptor",
    "poly_descriptor",
    "linearization_partner",
    "build_canonical_pencil",
    "codim_orbit",
    "codim_bundle",
    "pencil_realizable_as_linearization",
]


@dataclass(frozen=True)
class BundleDescriptor:
    kind: str  # "polynomial" or "pencil"
    n: int
    d: int
    r: int
    a: int
    alpha: int
    s: int
    eig_count: int
    min_indices: tuple[int, ...]

    def to_json(self) -> dict:
        out = asdict(self)
        out["min_indices"] = list(self.min_indices)
        return out

    @classmethod
    def from_json(cls, obj: dict) -> BundleDescriptor:
        want = {"kind", "n", "d", "r", "a", "alpha", "s", "eig_count", "min_indices"}
        if set(obj) != want:
            raise ValidationError(f"descriptor keys must be {sorted(want)}")
        D = _descriptor(obj["kind"], obj["n"], obj["d"], obj["r"], obj["a"])
        if D.to_json() != {**obj, "min_indices": list(obj["min_indices"])}:
            raise ValidationError("descriptor fields are inconsistent")
        return D


def _check_domain(n: int, d: int, r: int) -> None:
    if n < 2:
        raise ValidationError(f"n must be at least 2, got {n}")
    if d < 1 or d % 2 == 0:
        raise ValidationError(f"grade must be odd and positive, got {d}")
    if not 1 <= r <= n - 1:
        raise ValidationError(f"rank must satisfy 1 <= r <= n-1, got r={r}, n={n}")


def _descriptor(kind: str, n: int, d: int, r: int, a: int) -> BundleDescriptor:
    if kind not in ("polynomial", "pencil"):
        raise ValidationError(f"unknown descriptor kind {kind!r}")
    if kind == "pencil" and d != 1:
        raise ValidationError("pencil descriptors have grade 1")
    _check_domain(n, d, r)
    if not 0 <= a <= r * d // 2:
        raise ValidationError(f"a must lie in 0..{r * d // 2}, got {a}")
    alpha, s = divmod(a, n - r)
    mins = tuple([alpha + 1] * s + [alpha] * (n - r - s))
    return BundleDescriptor(kind, n, d, r, a, alpha, s, r * d - 2 * a, mins)


def poly_descriptor(n: int, d: int, r: int, a: int) -> BundleDescriptor:
    return _descriptor("polynomial", n, d, r, a)


def pencil_descriptor(n: int, r: int, a: int) -> BundleDescriptor:
    return _descriptor("pencil", n, 1, r, a)


def enumerate_poly_bundles(n: int, d: int, r: int) -> list[BundleDescriptor]:
    """The generic bundles ``K_0 .. K_{floor(rd/2)}`` for grade ``d``, rank at most ``r``."""
    _check_domain(n, d, r)
    return [poly_descriptor(n, d, r, a) for a in range(r * d // 2 + 1)]


def enumerate_pencil_bundles(n: int, r: int) -> list[BundleDescriptor]:
    _check_domain(n, 1, r)
    return [pencil_descriptor(n, r, a) for a in range(r // 2 + 1)]


def linearization_partner(D: BundleDescriptor) -> BundleDescriptor:
    """Pencil bundle containing the symmetric linearizations of ``K_a``."""
    if D.kind != "polynomial":
        raise ValidationError("linearization partner needs a polynomial descriptor")
    half = (D.d - 1) // 2
    return pencil_descriptor(D.n * D.d, D.n * (D.d - 1) + D.r, D.a + (D.n - D.r) * half)


def _m_block(k: int) -> list[list[list]]:
    """Raw entries of the (2k+1)x(2k+1) block [[0, L^T], [L, 0]], L = x*G + F."""
    size = 2 * k + 1
    out = [[[] for _ in range(size)] for _ in range(size)]
    for i in range(k):
        row = k + 1 + i
        out[row][i] = [ONE]        # F: column i
        out[row][i + 1] = [ZERO, ONE]  # G: column i+1
        out[i][row] = [ONE]
        out[i + 1][row] = [ZERO, ONE]
    return out


def build_canonical_pencil(D: BundleDescriptor, eigenvalues: Sequence) -> PolyMatrix:
    """Block-diagonal symmetric pencil representing the bundle ``D``."""
    if D.kind != "pencil":
        raise ValidationError("canonical pencils exist for pencil descriptors only")
    eigs = [gq(z) for z in eigenvalues]
    if len(eigs) != D.eig_count:
        raise ValidationError(f"expected {D.eig_count} eigenvalues, got {len(eigs)}")
    if len(set(eigs)) != len(eigs):
        raise ValidationError("eigenvalues must be pairwise distinct")
    blocks = [_m_block(D.alpha + 1)] * D.s + [_m_block(D.alpha)] * (D.n - D.r - D.s)
    blocks += [[[[-z, ONE]]] for z in eigs]
    raw = [[[] for _ in range(D.n)] for _ in range(D.n)]
    at = 0
    for B in blocks:
        for i, row in enumerate(B):
            for j, e in enumerate(row):
                raw[at + i][at + j] = e
        at += len(B)
    if at != D.n:  # pragma: no cover - guaranteed by the descriptor invariants
        raise ValidationError("block sizes do not add up to n")
    return PolyMatrix._from_raw_entries(raw, D.n, D.n, 1)


def codim_orbit(n: int, d: int, r: int, a: int) -> int:
    _check_domain(n, d, r)
    if not 0 <= a <= r * d // 2:
        raise ValidationError(f"a must lie in 0..{r * d // 2}, got {a}")
    return ((n + r) * (d - 1) + 2 * (n - a)) * (n - r + 1) // 2


def codim_bundle(n: int, d: int, r: int, a: int) -> int:
    """Orbit codimension minus the number of distinct eigenvalues, ``rd - 2a``.

    In closed form this is
    ``(n-r+1)(n+r)(d-1)/2 + n(n-r+1) - rd - a(n-r-1)``, strictly decreasing
    in ``a`` exactly when ``r < n-1``.
    """
    return codim_orbit(n, d, r, a) - (r * d - 2 * a)


def pencil_realizable_as_linearization(n: int, d: int, r: int, a1: int) -> bool:
    """Whether the pencil bundle with parameter ``a1`` (size nd, rank n(d-1)+r)
    can contain the symmetric linearization of an n x n grade-d polynomial."""
    _check_domain(n, d, r)
    r1 = n * (d - 1) + r
    if not 0 <= a1 <= r1 // 2:
        raise ValidationError(f"a1 must lie in 0..{r1 // 2}, got {a1}")
    return 2 * a1 >= (n - r) * (d - 1)

"""Exact linear algebra over Q(i)[x]: normal rank, Smith form, minimal indices,
minimal kernel bases, squarefree tests and Gaussian-rational root extraction.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from . import linalg
from ._roots import gaussian_rational_roots
from .errors import InvariantBreach, ValidationError
from .exact import (
    ONE,
    ZERO,
    GaussianRational,
    PolyMatrix,
    UniPoly,
    p_add,
    p_deriv,
    p_divmod,
    p_gcd,
    p_monic,
    p_mul,
    p_neg,
    pm_eval,
)

__all__ = [
    "SmithForm",
    "MinimalIndexReport",
    "normal_rank",
    "smith_form",
    "invariant_polynomials",
    "minimal_indices",
    "right_minimal_indices",
    "minimal_kernel_basis",
    "is_squarefree",
    "linear_roots",
    "is_unimodular",
    "row_degrees",
    "leading_row_matrix",
]


# ---------------------------------------------------------------------------
# normal rank

def normal_rank(P: PolyMatrix) -> int:
    """Rank of ``P`` over the field of rational functions.

    ``P`` is evaluated at 0, 1, 2, ...  If the best evaluation rank so far
    is ``k``, every ``(k+1) x (k+1)`` minor has degree at most ``(k+1)*grade``
    and so cannot vanish at ``(k+1)*grade + 1`` distinct points unless it is
    identically zero.  Stopping there is therefore a deterministic certificate,
    and never needs more than ``min(m, n)*grade + 1`` points.
    """
    full = min(P.rows, P.cols)
    if full == 0:
        return 0
    best, x = 0, 0
    while True:
        best = max(best, linalg.rank(pm_eval(P, x)))
        x += 1
        if best == full or x >= (best + 1) * P.grade + 1:
            return best


# ---------------------------------------------------------------------------
# Smith form

@dataclass(frozen=True)
class SmithForm:
    """``U @ P @ V == D`` with ``D`` diagonal and ``invariants`` on its diagonal."""

    U: PolyMatrix
    D: PolyMatrix
    V: PolyMatrix
    invariants: tuple[UniPoly, ...]

    @property
    def rank(self) -> int:
        return len(self.invariants)


def _identity_raw(n: int) -> list[list[list]]:
    return [[[ONE] if i == j else [] for j in range(n)] for i in range(n)]


def _pick_pivot(A, t: int, m: int, n: int):
    best, best_key = None, None
    for i in range(t, m):
        row = A[i]
        for j in range(t, n):
            e = row[j]
            if not e:
                continue
            key = len(e)
            if best_key is not None and key > best_key[0]:
                continue
            nnz = sum(1 for jj in range(t, n) if row[jj]) + sum(1 for ii in range(t, m) if A[ii][j])
            if best_key is None or (key, nnz) < best_key:
                best, best_key = (i, j), (key, nnz)
                if best_key == (1, 2):
                    return best
    return best


def _smith_reduce(A: list[list[list]], m: int, n: int, track: bool):
    """In-place Smith reduction of the raw entry matrix ``A``.

    Returns ``(diagonal, U, V)``; ``U`` and ``V`` are ``None`` unless
    ``track`` is set.
    """
    U = _identity_raw(m) if track else None
    V = _identity_raw(n) if track else None
    t = 0
    while t < min(m, n):
        piv = _pick_pivot(A, t, m, n)
        if piv is None:
            break
        pi, pj = piv
        _swap_rows(A, U, t, pi)
        _swap_cols(A, V, t, pj, m)
        while True:
            p = A[t][t]
            dirty = False
            for i in range(t + 1, m):
                e = A[i][t]
                if e:
                    q, rem = p_divmod(e, p)
                    if q:
                        _row_axpy(A, U, i, t, p_neg(q), t, n)
                    if rem:
                        dirty = True
            for j in range(t + 1, n):
                e = A[t][j]
                if e:
                    q, rem = p_divmod(e, p)
                    if q:
                        _col_axpy(A, V, j, t, p_neg(q), t, m)
                    if rem:
                        dirty = True
            if dirty:
                cand = [(len(A[i][t]), i, t) for i in range(t + 1, m) if A[i][t]]
                cand += [(len(A[t][j]), t, j) for j in range(t + 1, n) if A[t][j]]
                _, i, j = min(cand)
                _swap_rows(A, U, t, i)
                _swap_cols(A, V, t, j, m)
                continue
            if len(p) > 1:
                bad = _non_multiple(A, t, m, n, p)
                if bad is not None:
                    _row_axpy(A, U, t, bad, [ONE], t, n)
                    continue
            break
        lead = A[t][t][-1]
        if lead != ONE:
            inv = [lead.inverse()]
            A[t] = [p_mul(e, inv) for e in A[t]]
            if track:
                U[t] = [p_mul(e, inv) for e in U[t]]
        t += 1
    return [A[k][k] for k in range(t)], U, V


def _non_multiple(A, t, m, n, p):
    for i in range(t + 1, m):
        for j in range(t + 1, n):
            e = A[i][j]
            if e and p_divmod(e, p)[1]:
                return i
    return None


def _swap_rows(A, U, a, b):
    if a != b:
        A[a], A[b] = A[b], A[a]
        if U is not None:
            U[a], U[b] = U[b], U[a]


def _swap_cols(A, V, a, b, m):
    if a != b:
        for row in A:
            row[a], row[b] = row[b], row[a]
        if V is not None:
            for row in V:
                row[a], row[b] = row[b], row[a]


def _row_axpy(A, U, dst, src, q, start, n):
    """row[dst] += q * row[src] (in A from column ``start``, and in U)."""
    ad, asrc = A[dst], A[src]
    for k in range(start, n):
        if asrc[k]:
            ad[k] = p_add(ad[k], p_mul(q, asrc[k]))
    if U is not None:
        ud, us = U[dst], U[src]
        for k in range(len(ud)):
            if us[k]:
                ud[k] = p_add(ud[k], p_mul(q, us[k]))


def _col_axpy(A, V, dst, src, q, start, m):
    """col[dst] += q * col[src] (in A from row ``start``, and in V)."""
    for k in range(start, m):
        row = A[k]
        if row[src]:
            row[dst] = p_add(row[dst], p_mul(q, row[src]))
    if V is not None:
        for row in V:
            if row[src]:
                row[dst] = p_add(row[dst], p_mul(q, row[src]))


def _raw_to_pm(raw, m, n) -> PolyMatrix:
    deg = max((len(p) - 1 for row in raw for p in row), default=0)
    return PolyMatrix._from_raw_entries(raw, m, n, max(deg, 0))


def smith_form(P: PolyMatrix) -> SmithForm:
    """Smith form with unimodular transforms; ``U @ P @ V == D`` is checked."""
    m, n = P.shape
    A = P.raw_entries()
    diag, U, V = _smith_reduce(A, m, n, track=True)
    D_raw = [[diag[i] if i == j and i < len(diag) else [] for j in range(n)] for i in range(m)]
    Um, Vm, Dm = _raw_to_pm(U, m, m), _raw_to_pm(V, n, n), _raw_to_pm(D_raw, m, n)
    prod = Um @ P @ Vm
    if prod.raw_entries() != Dm.raw_entries():
        raise InvariantBreach("Smith reconstruction U P V = D failed")
    return SmithForm(Um, Dm, Vm, tuple(UniPoly._from_raw(g) for g in diag))


def invariant_polynomials(P: PolyMatrix) -> list[UniPoly]:
    """Monic invariant polynomials g_1 | g_2 | ... (no transforms kept)."""
    A = P.raw_entries()
    diag, _, _ = _smith_reduce(A, P.rows, P.cols, track=False)
    return [UniPoly._from_raw(g) for g in diag]


def is_unimodular(W: PolyMatrix) -> bool:
    """True iff ``det W`` is a nonzero constant.

    ``det W`` has degree at most the sum of the row degrees, so agreeing
    values at that many plus one points pin it down.
    """
    if W.rows != W.cols:
        return False
    if W.rows == 0:
        return True
    bound = sum(max(d, 0) for d in row_degrees(W))
    first = linalg.determinant(pm_eval(W, 0))
    if not first:
        return False
    return all(linalg.determinant(pm_eval(W, x)) == first for x in range(1, bound + 1))


# ---------------------------------------------------------------------------
# minimal indices and minimal bases

@dataclass(frozen=True)
class MinimalIndexReport:
    right: tuple[int, ...]
    left: tuple[int, ...]
    rank: int


def _conv_rows(coeffs: Sequence, m: int, n: int, delta: int) -> list[dict]:
    """Rows of the map from degree-<=delta vectors x(x) to coefficients of P x."""
    d = len(coeffs) - 1
    sparse = [[[(q, v) for q, v in enumerate(A[p]) if v] for p in range(m)] for A in coeffs]
    rows = []
    for out in range(d + delta + 1):
        lo, hi = max(0, out - d), min(delta, out)
        for p in range(m):
            row = {}
            for k in range(lo, hi + 1):
                base = k * n
                for q, v in sparse[out - k][p]:
                    row[base + q] = v
            if row:
                rows.append(row)
    return rows


def _indices(coeffs, m: int, n: int, count: int, rank: int) -> tuple[int, ...]:
    d = len(coeffs) - 1
    out: list[int] = []
    prev_nullity = prev_count = 0
    delta = 0
    while len(out) < count:
        if delta > rank * d + 1:
            raise InvariantBreach("minimal index search exceeded the index-sum bound")
        rows = _conv_rows(coeffs, m, n, delta)
        nullity = n * (delta + 1) - linalg.rank_of_rows(rows)
        at_most = nullity - prev_nullity  # number of indices <= delta
        out.extend([delta] * (at_most - prev_count))
        prev_nullity, prev_count = nullity, at_most
        delta += 1
    if len(out) != count:
        raise InvariantBreach("minimal index count disagrees with the normal rank")
    return tuple(out)


def right_minimal_indices(P: PolyMatrix, rank: int | None = None) -> tuple[int, ...]:
    if rank is None:
        rank = normal_rank(P)
    return _indices(P.coeffs, P.rows, P.cols, P.cols - rank, rank)


def minimal_indices(P: PolyMatrix, rank: int | None = None) -> MinimalIndexReport:
    """Right and left minimal indices from convolution-matrix nullities.

    For degree bound ``delta`` the nullity of the convolution matrix is
    ``sum(delta - e + 1 for e in indices if e <= delta)``, so successive
    differences count the indices not exceeding ``delta``.
    """
    if rank is None:
        rank = normal_rank(P)
    right = _indices(P.coeffs, P.rows, P.cols, P.cols - rank, rank)
    Pt = P.T
    left = _indices(Pt.coeffs, Pt.rows, Pt.cols, Pt.cols - rank, rank)
    return MinimalIndexReport(right, left, rank)


def _primitive(vec: list[GaussianRational]) -> list[GaussianRational]:
    """Scale to Gaussian-integer entries without a common integer factor."""
    import math

    lcm = 1
    for v in vec:
        if v:
            lcm = lcm * v._d // math.gcd(lcm, v._d)
    g = 0
    for v in vec:
        if v:
            k = lcm // v._d
            g = math.gcd(g, math.gcd(v._a * k, v._b * k))
    scale = GaussianRational(lcm) / GaussianRational(g or 1)
    first = next((v for v in vec if v), None)
    if first is not None and (first * scale).re < 0:
        scale = -scale
    return [v * scale for v in vec]


def minimal_kernel_basis(P: PolyMatrix) -> PolyMatrix:
    """Rows form a minimal basis of the right rational null space of ``P``.

    Built degree by degree: at degree bound ``delta`` the shifts
    ``x^k b`` of the rows found so far span part of the convolution kernel,
    and new kernel vectors are added greedily (in pivot order) until the
    kernel is spanned.  New vectors have exact degree ``delta`` and their
    leading coefficients stay independent, so the result is row reduced.
    """
    m, n = P.shape
    rank = normal_rank(P)
    need_total = n - rank
    basis: list[tuple[int, list]] = []
    delta = 0
    while len(basis) < need_total:
        if delta > rank * P.grade + 1:
            raise InvariantBreach("kernel basis search exceeded the index-sum bound")
        size = n * (delta + 1)
        kernel = linalg.nullspace(_conv_rows(P.coeffs, m, n, delta), size)
        ech = linalg.Echelon()
        for deg, vec in basis:
            for sh in range(delta - deg + 1):
                ech.insert({(k + sh) * n + q: v for k in range(deg + 1)
                            for q, v in enumerate(vec[k * n:(k + 1) * n]) if v})
        fresh = len(kernel) - len(ech)
        for v in kernel:
            if fresh == 0:
                break
            if ech.insert(v):
                basis.append((delta, _primitive(v)))
                fresh -= 1
        delta += 1
    rows = []
    for deg, vec in basis:
        rows.append([[vec[k * n + q] for k in range(deg + 1)] for q in range(n)])
    if not rows:
        return PolyMatrix.zeros(0, n)
    return PolyMatrix.from_entries(rows)


def row_degrees(P: PolyMatrix) -> list[int]:
    """Degree of each row (-1 for a zero row)."""
    out = []
    for i in range(P.rows):
        deg = -1
        for k in range(P.grade, -1, -1):
            if any(P.coeffs[k][i]):
                deg = k
                break
        out.append(deg)
    return out


def leading_row_matrix(P: PolyMatrix) -> list[list[GaussianRational]]:
    """Row i holds the coefficient of x^(deg row i) in row i."""
    return [list(P.coeffs[d][i]) if d >= 0 else [ZERO] * P.cols
            for i, d in enumerate(row_degrees(P))]


# ---------------------------------------------------------------------------
# scalar polynomial helpers

def is_squarefree(g: UniPoly) -> bool:
    raw = g.raw
    if not raw:
        raise ValidationError("squarefree test of the zero polynomial")
    return len(p_gcd(raw, p_deriv(raw))) == 1


def squarefree_part(g: UniPoly) -> UniPoly:
    raw = p_monic(g.raw)
    if not raw:
        raise ValidationError("squarefree part of the zero polynomial")
    return UniPoly._from_raw(p_divmod(raw, p_gcd(raw, p_deriv(raw)))[0])


def linear_roots(g: UniPoly) -> tuple[list[tuple[GaussianRational, int]], UniPoly]:
    """Gaussian-rational roots with multiplicities, and the root-free cofactor."""
    raw = p_monic(g.raw)
    if not raw:
        raise ValidationError("linear_roots of the zero polynomial")
    core = p_divmod(raw, p_gcd(raw, p_deriv(raw)))[0]
    roots = sorted(gaussian_rational_roots(core), key=lambda z: (z.re, z.im))
    found = []
    cof = raw
    for z in roots:
        lin = [-z, ONE]
        k = 0
        while True:
            q, rem = p_divmod(cof, lin)
            if rem:
                break
            cof, k = q, k + 1
        found.append((z, k))
    return found, UniPoly._from_raw(cof)


def poly_matrix_times_vector_is_zero(P: PolyMatrix, row: Sequence[list]) -> bool:
    """Check ``P(x) v(x) == 0`` for a raw polynomial vector ``v``."""
    ent = P.raw_entries()
    for i in range(P.rows):
        acc: list = []
        for j in range(P.cols):
            if ent[i][j] and row[j]:
                acc = p_add(acc, p_mul(ent[i][j], row[j]))
        if acc:
            return False
    return True


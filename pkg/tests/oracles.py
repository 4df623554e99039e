"""Independent reference computations built on sympy, plus small brute-force
searches.  Nothing here imports the package's algorithms, only its data types."""
from __future__ import annotations

import itertools
from fractions import Fraction

import sympy as sp

from symeigen.exact import GaussianRational, PolyMatrix, UniPoly

x = sp.Symbol("x")


def scalar_to_sympy(z: GaussianRational):
    return sp.Rational(z.re.numerator, z.re.denominator) + sp.I * sp.Rational(z.im.numerator, z.im.denominator)


def sympy_to_scalar(v) -> GaussianRational:
    v = sp.nsimplify(v)
    re, im = sp.re(v), sp.im(v)
    return GaussianRational(Fraction(int(re.p), int(re.q)), Fraction(int(im.p), int(im.q)))


def poly_to_sympy(coeffs) -> sp.Expr:
    return sum((scalar_to_sympy(c) * x**k for k, c in enumerate(coeffs)), sp.Integer(0))


def uni_to_sympy(p: UniPoly) -> sp.Expr:
    return poly_to_sympy(p.raw)


def pm_to_sympy(P: PolyMatrix) -> sp.Matrix:
    return sp.Matrix(P.rows, P.cols, lambda i, j: poly_to_sympy([A[i][j] for A in P.coeffs]))


def monic_sympy(e) -> sp.Poly:
    p = sp.Poly(sp.expand(e), x, domain="QQ_I")
    return p.monic() if not p.is_zero else p


def rank_oracle(M: sp.Matrix) -> int:
    return M.rank(simplify=True)


def gcd_of_minors_invariants(M: sp.Matrix) -> list[sp.Poly]:
    """Invariant polynomials via d_k = gcd of all k x k minors, g_k = d_k / d_(k-1)."""
    m, n = M.shape
    ds = [sp.Poly(1, x, domain="QQ_I")]
    for k in range(1, min(m, n) + 1):
        g = sp.Poly(0, x, domain="QQ_I")
        for rows in itertools.combinations(range(m), k):
            for cols in itertools.combinations(range(n), k):
                minor = sp.Poly(sp.expand(M.extract(list(rows), list(cols)).det(method="berkowitz")),
                                x, domain="QQ_I")
                g = sp.gcd(g, minor)
        if g.is_zero:
            break
        ds.append(g.monic())
    return [sp.div(ds[k], ds[k - 1])[0] for k in range(1, len(ds))]


def kernel_dimensions(M: sp.Matrix, max_degree: int) -> list[int]:
    """Number of minimal indices equal to each delta = 0..max_degree.

    At each degree bound the kernel of the coefficient equations is solved
    directly; vectors not generated by the previous kernel and its shift by x
    are new basis directions of exactly that degree.
    """
    m, n = M.shape
    counts = []
    prev_basis: list[sp.Matrix] = []  # kernel basis at degree delta-1 as coefficient vectors
    for delta in range(max_degree + 1):
        cs = sp.symbols(f"c0:{n * (delta + 1)}")
        vec = sp.Matrix(n, 1, lambda j, _: sum(cs[k * n + j] * x**k for k in range(delta + 1)))
        prod = (M * vec).applyfunc(sp.expand)
        eqs = []
        for e in prod:
            eqs.extend(sp.Poly(e, x).all_coeffs() if e != 0 else [])
        if eqs:
            A, _ = sp.linear_eq_to_matrix(eqs, cs)
            basis = A.nullspace()
        else:
            basis = [sp.eye(n * (delta + 1))[:, i] for i in range(n * (delta + 1))]
        # shifts of the previous kernel: v and x*v embedded at degree delta
        shifted = []
        for v in prev_basis:
            pad = sp.zeros(n, 1)
            shifted.append(v.col_join(pad))
            shifted.append(pad.col_join(v))
        gen = sp.Matrix.hstack(*shifted).rank() if shifted else 0
        counts.append(len(basis) - gen)
        prev_basis = basis
    return counts


def brute_minimal_indices(M: sp.Matrix, max_degree: int) -> list[int]:
    counts = kernel_dimensions(M, max_degree)
    out = []
    for delta, c in enumerate(counts):
        out.extend([delta] * c)
    return out


def gaussian_divisor_roots(coeffs) -> list[GaussianRational]:
    """Roots in Q(i) by enumerating candidates p/q with N(p) | N(a_0) and
    N(q) | N(a_n) over Gaussian-integer coefficients (small inputs only)."""
    import math

    L = 1
    for c in coeffs:
        L = L * c._d // math.gcd(L, c._d)
    ints = [(c * L) for c in coeffs]
    roots = set()
    k = 0
    while not ints[k]:
        k += 1
    if k:
        roots.add(GaussianRational(0))
    ints = ints[k:]
    if len(ints) < 2:
        return sorted(roots, key=lambda z: (z.re, z.im))

    def gauss_divisors(norm: int):
        out = []
        r = math.isqrt(norm)
        for a in range(-r, r + 1):
            for b in range(-r, r + 1):
                nn = a * a + b * b
                if nn and norm % nn == 0:
                    out.append(GaussianRational(a, b))
        return out

    n0, nn = int(ints[0].norm()), int(ints[-1].norm())
    for p in gauss_divisors(n0):
        for q in gauss_divisors(nn):
            z = p / q
            acc = GaussianRational(0)
            for c in reversed(ints):
                acc = acc * z + c
            if not acc:
                roots.add(z)
    return sorted(roots, key=lambda z: (z.re, z.im))

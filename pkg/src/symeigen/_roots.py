"""Roots in Q(i) of a squarefree polynomial over Q(i).

Reduce modulo a prime p = 3 (mod 4), where Z[i]/(p) is the field with p^2
elements, find the roots there by exhaustive evaluation, Newton-lift each
simple root in Z_p[i] until the precision covers the a priori size bound of
a Gaussian-rational root, then recover real and imaginary parts by rational
reconstruction.  Every candidate is confirmed by exact evaluation.
"""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence

from .exact import ZERO, GaussianRational, gq, p_deriv, p_eval, p_monic

_PRIME_LIMIT = 1000


def _primes_3_mod_4(limit: int):
    sieve = bytearray([1]) * limit
    sieve[0:2] = b"\x00\x00"
    for i in range(2, math.isqrt(limit) + 1):
        if sieve[i]:
            sieve[i * i::i] = bytearray(len(sieve[i * i::i]))
    return [p for p in range(3, limit) if sieve[p] and p % 4 == 3]


_PRIMES = _primes_3_mod_4(_PRIME_LIMIT)


def _reduce(coeffs: Sequence[GaussianRational], mod: int) -> list[tuple[int, int]]:
    out = []
    for c in coeffs:
        inv = pow(c._d, -1, mod)
        out.append((c._a * inv % mod, c._b * inv % mod))
    return out


def _horner(coeffs: Sequence[tuple[int, int]], x: int, y: int, mod: int) -> tuple[int, int]:
    ar, ai = 0, 0
    for cr, ci in reversed(coeffs):
        ar, ai = (ar * x - ai * y + cr) % mod, (ar * y + ai * x + ci) % mod
    return ar, ai


def _ratrec(u: int, mod: int, bound: int) -> Fraction | None:
    r0, r1 = mod, u % mod
    t0, t1 = 0, 1
    while r1 > bound:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        t0, t1 = t1, t0 - q * t1
    if t1 == 0 or abs(t1) > bound or math.gcd(r1, abs(t1)) != 1:
        return None
    return Fraction(r1, t1)


def gaussian_rational_roots(f: Sequence[GaussianRational]) -> list[GaussianRational]:
    """Distinct roots in Q(i) of the squarefree raw polynomial ``f``."""
    f = p_monic(f)
    roots: list[GaussianRational] = []
    if len(f) <= 1:
        return roots
    if not f[0]:
        roots.append(ZERO)
        f = f[1:]
    if len(f) <= 1:
        return roots
    if len(f) == 2:
        roots.append(-f[0])
        return roots

    L = 1
    for c in f:
        L = L * c._d // math.gcd(L, c._d)
    cauchy = 1 + max(math.ceil(abs(c.re) + abs(c.im)) for c in f[:-1])
    num_bound = cauchy * L * L
    target = 2 * num_bound * num_bound + 1

    df = p_deriv(f)
    for p in _PRIMES:
        if L % p == 0:
            continue
        fp, dp = _reduce(f, p), _reduce(df, p)
        found = [(x, y) for x in range(p) for y in range(p) if _horner(fp, x, y, p) == (0, 0)]
        if all(_horner(dp, x, y, p) != (0, 0) for x, y in found):
            break
    else:  # pragma: no cover - needs a discriminant divisible by every listed prime
        raise RuntimeError("no admissible prime for root lifting")

    for x, y in found:
        mod = p
        while mod < target:
            mod = mod * mod
            fr, fi = _horner(_reduce(f, mod), x, y, mod)
            dr, di = _horner(_reduce(df, mod), x, y, mod)
            inv = pow((dr * dr + di * di) % mod, -1, mod)
            # (fr + i fi) / (dr + i di) = (fr + i fi)(dr - i di) / |d|^2
            qr = (fr * dr + fi * di) * inv % mod
            qi = (fi * dr - fr * di) * inv % mod
            x, y = (x - qr) % mod, (y - qi) % mod
        bound = math.isqrt(mod // 2)
        re_part, im_part = _ratrec(x, mod, bound), _ratrec(y, mod, bound)
        if re_part is None or im_part is None:
            continue
        z = gq(re_part) + gq(im_part) * GaussianRational(0, 1)
        if not p_eval(f, z):
            roots.append(z)
    return roots

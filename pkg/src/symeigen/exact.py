"""Exact scalar, polynomial and matrix-polynomial arithmetic over Q(i).

Scalars are Gaussian rationals stored as an integer triple ``(a, b, den)``
meaning ``(a + b*i) / den`` with ``den > 0`` and ``gcd(a, b, den) == 1``.
Univariate polynomials are handled internally as plain lists of scalars with
no trailing zeros (``[]`` is the zero polynomial); :class:`UniPoly` and
:class:`PolyMatrix` are the immutable public wrappers.
"""
from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import ValidationError

__all__ = [
    "GaussianRational",
    "gq",
    "UniPoly",
    "PolyMatrix",
    "MoebiusMap",
    "poly_arith",
    "pm_eval",
    "pm_rev",
    "pm_moebius",
    "parse_scalar",
    "format_scalar",
]

_gcd = math.gcd


class GaussianRational:
    __slots__ = ("_a", "_b", "_d")

    def __new__(cls, re=0, im=0):
        if isinstance(re, str) and im == 0:
            return parse_scalar(re)
        x = _coerce(re)
        if im == 0:
            return x
        y = _coerce(im)
        # x + i*y
        return x + y * I

    @property
    def re(self) -> Fraction:
        return Fraction(self._a, self._d)

    @property
    def im(self) -> Fraction:
        return Fraction(self._b, self._d)

    def is_real(self) -> bool:
        return self._b == 0

    def conjugate(self) -> GaussianRational:
        return _mk(self._a, -self._b, self._d)

    def norm(self) -> Fraction:
        """Squared modulus ``re**2 + im**2`` (exact)."""
        return Fraction(self._a * self._a + self._b * self._b, self._d * self._d)

    def __bool__(self):
        return self._a != 0 or self._b != 0

    def __hash__(self):
        if self._b == 0:
            return hash(Fraction(self._a, self._d))
        return hash((self._a, self._b, self._d))

    def __eq__(self, other):
        if type(other) is not GaussianRational:
            try:
                other = _coerce(other)
            except TypeError:
                return NotImplemented
        return self._a == other._a and self._b == other._b and self._d == other._d

    def __neg__(self):
        return _mk_raw(-self._a, -self._b, self._d)

    def __pos__(self):
        return self

    def __add__(self, other):
        if type(other) is not GaussianRational:
            try:
                other = _coerce(other)
            except TypeError:
                return NotImplemented
        d1, d2 = self._d, other._d
        if d1 == d2:
            return _mk(self._a + other._a, self._b + other._b, d1)
        return _mk(self._a * d2 + other._a * d1, self._b * d2 + other._b * d1, d1 * d2)

    __radd__ = __add__

    def __sub__(self, other):
        if type(other) is not GaussianRational:
            try:
                other = _coerce(other)
            except TypeError:
                return NotImplemented
        d1, d2 = self._d, other._d
        if d1 == d2:
            return _mk(self._a - other._a, self._b - other._b, d1)
        return _mk(self._a * d2 - other._a * d1, self._b * d2 - other._b * d1, d1 * d2)

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        if type(other) is not GaussianRational:
            try:
                other = _coerce(other)
            except TypeError:
                return NotImplemented
        a, b, c, e = self._a, self._b, other._a, other._b
        if b == 0 and e == 0:
            return _mk(a * c, 0, self._d * other._d)
        return _mk(a * c - b * e, a * e + b * c, self._d * other._d)

    __rmul__ = __mul__

    def inverse(self) -> GaussianRational:
        a, b, d = self._a, self._b, self._d
        if a == 0 and b == 0:
            raise ZeroDivisionError("GaussianRational division by zero")
        if b == 0:
            return _mk(d if a > 0 else -d, 0, abs(a))
        return _mk(a * d, -b * d, a * a + b * b)

    def __truediv__(self, other):
        if type(other) is not GaussianRational:
            try:
                other = _coerce(other)
            except TypeError:
                return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return _coerce(other) * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        out, base = ONE, self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __repr__(self):
        return f"GaussianRational('{format_scalar(self)}')"

    def __str__(self):
        return format_scalar(self)

    def __reduce__(self):
        return (parse_scalar, (format_scalar(self),))


def _mk_raw(a: int, b: int, d: int) -> GaussianRational:
    obj = object.__new__(GaussianRational)
    obj._a = a
    obj._b = b
    obj._d = d
    return obj


def _mk(a: int, b: int, d: int) -> GaussianRational:
    if d != 1:
        g = _gcd(_gcd(a, b), d)
        if g != 1:
            a //= g
            b //= g
            d //= g
    return _mk_raw(a, b, d)


def _coerce(x) -> GaussianRational:
    t = type(x)
    if t is GaussianRational:
        return x
    if t is int or t is bool:
        return _mk_raw(int(x), 0, 1)
    if t is Fraction:
        return _mk_raw(x.numerator, 0, x.denominator)
    if t is str:
        return parse_scalar(x)
    if t is complex:
        raise TypeError("floating complex values are not exact; use strings or Fractions")
    raise TypeError(f"cannot convert {t.__name__} to GaussianRational")


def gq(x) -> GaussianRational:
    """Coerce an int, Fraction, string or GaussianRational to a scalar."""
    return _coerce(x)


ZERO = _mk_raw(0, 0, 1)
ONE = _mk_raw(1, 0, 1)
I = _mk_raw(0, 1, 1)

_RAT = r"\d+(?:/\d+)?"
_SCALAR_RE = re.compile(
    rf"^(?P<re>[+-]?{_RAT})?(?:(?P<isign>[+-])?(?P<im>{_RAT})?(?P<i>i))?$"
)


def _rat(tok: str) -> Fraction:
    if "/" in tok:
        p, q = tok.split("/")
        if int(q) == 0:
            raise ValidationError(f"zero denominator in scalar {tok!r}")
        return Fraction(int(p), int(q))
    return Fraction(int(tok))


def parse_scalar(text: str) -> GaussianRational:
    """Parse ``"p/q"``, ``"p/q+r/si"``, ``"-3/2+1/4i"``, ``"2i"``, ``"-i"``..."""
    s = text.replace(" ", "")
    m = _SCALAR_RE.match(s)
    if not s or m is None or (m.group("re") is None and m.group("i") is None):
        raise ValidationError(f"malformed scalar {text!r}")
    re_part = _rat(m.group("re")) if m.group("re") else Fraction(0)
    im_part = Fraction(0)
    if m.group("i"):
        if m.group("re") and m.group("isign") is None:
            if m.group("im") is not None:
                raise ValidationError(f"malformed scalar {text!r}")
            # pure imaginary such as "3i" or "-1/4i"
            re_part, im_part = Fraction(0), re_part
        else:
            im_part = _rat(m.group("im")) if m.group("im") else Fraction(1)
            if m.group("isign") == "-":
                im_part = -im_part
    x = _coerce(re_part)
    if im_part:
        x = x + _coerce(im_part) * I
    return x


def _fmt_rat(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def format_scalar(x) -> str:
    x = _coerce(x)
    if x._b == 0:
        return _fmt_rat(x.re)
    im = x.im
    sign = "-" if im < 0 else "+"
    return f"{_fmt_rat(x.re)}{sign}{_fmt_rat(abs(im))}i"


# ---------------------------------------------------------------------------
# raw polynomial helpers: lists of GaussianRational, no trailing zeros

def p_trim(p: list) -> list:
    while p and not p[-1]:
        p.pop()
    return p


def p_from(coeffs: Iterable) -> list:
    return p_trim([_coerce(c) for c in coeffs])


def p_add(p: Sequence, q: Sequence) -> list:
    if len(p) < len(q):
        p, q = q, p
    out = list(p)
    for k, c in enumerate(q):
        out[k] = out[k] + c
    return p_trim(out)


def p_sub(p: Sequence, q: Sequence) -> list:
    out = list(p) + [ZERO] * (len(q) - len(p))
    for k, c in enumerate(q):
        out[k] = out[k] - c
    return p_trim(out)


def p_neg(p: Sequence) -> list:
    return [-c for c in p]


def p_scale(p: Sequence, c) -> list:
    if not c:
        return []
    return [c * x for x in p]


def p_mul(p: Sequence, q: Sequence) -> list:
    if not p or not q:
        return []
    out = [ZERO] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if not a:
            continue
        for j, b in enumerate(q):
            if b:
                out[i + j] = out[i + j] + a * b
    return p_trim(out)


def p_divmod(p: Sequence, q: Sequence) -> tuple[list, list]:
    if not q:
        raise ZeroDivisionError("polynomial division by the zero polynomial")
    r = list(p)
    dq = len(q) - 1
    if len(r) - 1 < dq:
        return [], r
    inv = q[-1].inverse()
    quo = [ZERO] * (len(r) - dq)
    for k in range(len(r) - 1 - dq, -1, -1):
        c = r[k + dq]
        if not c:
            continue
        c = c * inv
        quo[k] = c
        for j in range(dq + 1):
            if q[j]:
                r[k + j] = r[k + j] - c * q[j]
    r = p_trim(r[:dq]) if dq > 0 else []
    return p_trim(quo), r


def p_monic(p: Sequence) -> list:
    if not p:
        return []
    lead = p[-1]
    if lead == ONE:
        return list(p)
    inv = lead.inverse()
    return [c * inv for c in p]


def p_gcd(p: Sequence, q: Sequence) -> list:
    """Monic gcd (the zero polynomial if both inputs are zero)."""
    a, b = p_monic(p), p_monic(q)
    while b:
        _, rem = p_divmod(a, b)
        a, b = b, p_monic(rem)
    return p_monic(a)


def p_deriv(p: Sequence) -> list:
    return p_trim([c * k for k, c in enumerate(p)][1:])


def p_eval(p: Sequence, x) -> GaussianRational:
    acc = ZERO
    for c in reversed(p):
        acc = acc * x + c
    return acc


def p_pow(p: Sequence, k: int) -> list:
    out = [ONE]
    for _ in range(k):
        out = p_mul(out, p)
    return out


def p_deg(p: Sequence) -> int:
    return len(p) - 1


# ---------------------------------------------------------------------------

class UniPoly:
    """Univariate polynomial over Q(i) with a declared grade.

    Equality is mathematical equality of the coefficient sequences; the
    grade is a container attribute and is not compared.
    """

    __slots__ = ("coeffs", "grade")

    def __init__(self, coeffs: Iterable = (), grade: int | None = None):
        cs = [_coerce(c) for c in coeffs]
        deg = len(p_trim(list(cs))) - 1
        if grade is None:
            grade = max(deg, 0)
        if grade < deg:
            raise ValidationError(f"grade {grade} below degree {deg}")
        cs = cs[: grade + 1] + [ZERO] * (grade + 1 - len(cs))
        self.coeffs = tuple(cs)
        self.grade = grade

    @classmethod
    def _from_raw(cls, raw: list, grade: int | None = None) -> UniPoly:
        obj = object.__new__(cls)
        g = max(len(raw) - 1, 0) if grade is None else grade
        obj.coeffs = tuple(raw) + (ZERO,) * (g + 1 - len(raw))
        obj.grade = g
        return obj

    @classmethod
    def monomial(cls, k: int, c=1) -> UniPoly:
        return cls([0] * k + [c])

    @classmethod
    def from_roots(cls, roots: Iterable) -> UniPoly:
        out = [ONE]
        for z in roots:
            out = p_mul(out, [-_coerce(z), ONE])
        return cls._from_raw(out)

    @property
    def raw(self) -> list:
        return p_trim(list(self.coeffs))

    @property
    def degree(self):
        """Degree, or ``-math.inf`` for the zero polynomial."""
        d = len(self.raw) - 1
        return -math.inf if d < 0 else d

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __call__(self, x) -> GaussianRational:
        return p_eval(self.coeffs, _coerce(x))

    def __eq__(self, other):
        if isinstance(other, UniPoly):
            return self.raw == other.raw
        try:
            return self.raw == p_from([other])
        except TypeError:
            return NotImplemented

    def __hash__(self):
        return hash(tuple(self.raw))

    def __add__(self, other):
        other = _as_poly(other)
        return UniPoly._from_raw(p_add(self.raw, other.raw), max(self.grade, other.grade))

    __radd__ = __add__

    def __sub__(self, other):
        other = _as_poly(other)
        return UniPoly._from_raw(p_sub(self.raw, other.raw), max(self.grade, other.grade))

    def __rsub__(self, other):
        return _as_poly(other) - self

    def __neg__(self):
        return UniPoly._from_raw(p_neg(self.raw), self.grade)

    def __mul__(self, other):
        other = _as_poly(other)
        return UniPoly._from_raw(p_mul(self.raw, other.raw), self.grade + other.grade)

    __rmul__ = __mul__

    def __divmod__(self, other):
        q, r = p_divmod(self.raw, _as_poly(other).raw)
        return UniPoly._from_raw(q), UniPoly._from_raw(r)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def derivative(self) -> UniPoly:
        return UniPoly._from_raw(p_deriv(self.raw))

    def monic(self) -> UniPoly:
        return UniPoly._from_raw(p_monic(self.raw))

    def is_monic(self) -> bool:
        raw = self.raw
        return bool(raw) and raw[-1] == ONE

    def __repr__(self):
        return f"UniPoly({poly_to_str(self.raw)!r})"

    def __str__(self):
        return poly_to_str(self.raw)


def _as_poly(x) -> UniPoly:
    if isinstance(x, UniPoly):
        return x
    return UniPoly([x])


def poly_to_str(raw: Sequence, var: str = "x") -> str:
    if not raw:
        return "0"
    terms = []
    for k in range(len(raw) - 1, -1, -1):
        c = raw[k]
        if not c:
            continue
        cs = format_scalar(c)
        if not c.is_real() and c.re != 0:
            cs = f"({cs})"
        if k == 0:
            terms.append(cs)
            continue
        mono = var if k == 1 else f"{var}^{k}"
        if cs == "1":
            terms.append(mono)
        elif cs == "-1":
            terms.append(f"-{mono}")
        else:
            terms.append(f"{cs}*{mono}")
    out = " + ".join(terms)
    return out.replace("+ -", "- ")


def poly_arith(p: UniPoly, q: UniPoly, op: str):
    """Dispatch ``add``, ``mul``, ``divrem`` or ``gcd`` on two polynomials."""
    if op == "add":
        return p + q
    if op == "mul":
        return p * q
    if op == "divrem":
        return divmod(p, q)
    if op == "gcd":
        return UniPoly._from_raw(p_gcd(p.raw, q.raw))
    raise ValueError(f"unknown polynomial operation {op!r}")


def poly_gcd(p: UniPoly, q: UniPoly) -> UniPoly:
    return UniPoly._from_raw(p_gcd(p.raw, q.raw))


# ---------------------------------------------------------------------------

Matrix = tuple  # tuple of row tuples of GaussianRational


def _const_matrix(rows, m: int | None = None, n: int | None = None) -> Matrix:
    out = tuple(tuple(_coerce(x) for x in row) for row in rows)
    if m is not None and len(out) != m:
        raise ValidationError(f"expected {m} rows, got {len(out)}")
    if n is not None and any(len(row) != n for row in out):
        raise ValidationError(f"expected {n} columns in every row")
    return out


def zero_matrix(m: int, n: int) -> Matrix:
    return tuple((ZERO,) * n for _ in range(m))


class PolyMatrix:
    """An ``m x n`` matrix polynomial ``sum_k A_k x^k`` of declared grade.

    ``coeffs[k]`` is ``A_k`` as a tuple of row tuples.  Instances are
    immutable; the grade is never inferred from trailing zero coefficients.
    """

    __slots__ = ("rows", "cols", "grade", "coeffs")

    def __init__(self, coeffs: Sequence, rows: int | None = None, cols: int | None = None,
                 grade: int | None = None):
        if not coeffs and (rows is None or cols is None):
            raise ValidationError("empty coefficient list needs explicit shape")
        if coeffs:
            rows = len(coeffs[0]) if rows is None else rows
            cols = (len(coeffs[0][0]) if rows else 0) if cols is None else cols
        mats = [_const_matrix(A, rows, cols) for A in coeffs]
        if grade is None:
            grade = max(len(mats) - 1, 0)
        if len(mats) > grade + 1:
            if any(any(any(row) for row in A) for A in mats[grade + 1:]):
                raise ValidationError("nonzero coefficient beyond the declared grade")
            mats = mats[: grade + 1]
        while len(mats) < grade + 1:
            mats.append(zero_matrix(rows, cols))
        if rows < 0 or cols < 0 or grade < 0:
            raise ValidationError("negative shape or grade")
        self.rows, self.cols, self.grade = rows, cols, grade
        self.coeffs = tuple(mats)

    # -- constructors -------------------------------------------------------
    @classmethod
    def _trusted(cls, mats: Sequence, rows: int, cols: int, grade: int) -> PolyMatrix:
        obj = object.__new__(cls)
        obj.rows, obj.cols, obj.grade = rows, cols, grade
        obj.coeffs = tuple(tuple(tuple(r) for r in A) for A in mats)
        return obj

    @classmethod
    def from_entries(cls, entries: Sequence[Sequence], grade: int | None = None,
                     cols: int | None = None) -> PolyMatrix:
        """Build from a nested list whose items are scalars, UniPolys or raw lists."""
        m = len(entries)
        n = len(entries[0]) if m else (cols or 0)
        raw = [[_entry_raw(e) for e in row] for row in entries]
        deg = max((len(p) - 1 for row in raw for p in row), default=-1)
        if grade is None:
            grade = max(deg, 0)
        elif grade < deg:
            raise ValidationError(f"grade {grade} below degree {deg}")
        return cls._from_raw_entries(raw, m, n, grade)

    @classmethod
    def _from_raw_entries(cls, raw: Sequence[Sequence[list]], m: int, n: int, grade: int) -> PolyMatrix:
        mats = []
        for k in range(grade + 1):
            mats.append(tuple(
                tuple(p[k] if k < len(p) else ZERO for p in row) for row in raw
            ))
        return cls._trusted(mats, m, n, grade)

    @classmethod
    def identity(cls, n: int, grade: int = 0) -> PolyMatrix:
        eye = tuple(tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n))
        return cls._trusted([eye] + [zero_matrix(n, n)] * grade, n, n, grade)

    @classmethod
    def zeros(cls, m: int, n: int, grade: int = 0) -> PolyMatrix:
        return cls._trusted([zero_matrix(m, n)] * (grade + 1), m, n, grade)

    # -- views ----------------------------------------------------------------
    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def raw_entries(self) -> list[list[list]]:
        out = []
        for i in range(self.rows):
            row = []
            for j in range(self.cols):
                row.append(p_trim([A[i][j] for A in self.coeffs]))
            out.append(row)
        return out

    def entry(self, i: int, j: int) -> UniPoly:
        return UniPoly._from_raw(p_trim([A[i][j] for A in self.coeffs]))

    @property
    def degree(self) -> int:
        """Largest k with A_k != 0, or -1 for the zero matrix polynomial."""
        for k in range(self.grade, -1, -1):
            if any(any(row) for row in self.coeffs[k]):
                return k
        return -1

    def is_zero(self) -> bool:
        return self.degree < 0

    def is_symmetric(self) -> bool:
        if self.rows != self.cols:
            return False
        n = self.rows
        return all(A[i][j] == A[j][i] for A in self.coeffs for i in range(n) for j in range(i + 1, n))

    @property
    def T(self) -> PolyMatrix:
        mats = [tuple(zip(*A)) if self.rows else zero_matrix(self.cols, 0) for A in self.coeffs]
        return PolyMatrix._trusted(mats, self.cols, self.rows, self.grade)

    def with_grade(self, grade: int) -> PolyMatrix:
        if grade < self.degree:
            raise ValidationError(f"grade {grade} below degree {self.degree}")
        mats = list(self.coeffs[: grade + 1])
        while len(mats) < grade + 1:
            mats.append(zero_matrix(self.rows, self.cols))
        return PolyMatrix._trusted(mats, self.rows, self.cols, grade)

    def leading_coefficient(self) -> Matrix:
        return self.coeffs[self.grade]

    # -- arithmetic -----------------------------------------------------------
    def __eq__(self, other):
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        return (self.shape == other.shape and self.grade == other.grade
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.shape, self.grade, self.coeffs))

    def __add__(self, other: PolyMatrix) -> PolyMatrix:
        if self.shape != other.shape:
            raise ValidationError("shape mismatch in addition")
        g = max(self.grade, other.grade)
        a, b = self.with_grade(g), other.with_grade(g)
        mats = [_madd(A, B) for A, B in zip(a.coeffs, b.coeffs)]
        return PolyMatrix._trusted(mats, self.rows, self.cols, g)

    def __neg__(self) -> PolyMatrix:
        return self.scale(-ONE)

    def __sub__(self, other: PolyMatrix) -> PolyMatrix:
        return self + (-other)

    def scale(self, c) -> PolyMatrix:
        c = _coerce(c)
        mats = [tuple(tuple(c * x for x in row) for row in A) for A in self.coeffs]
        return PolyMatrix._trusted(mats, self.rows, self.cols, self.grade)

    def __matmul__(self, other: PolyMatrix) -> PolyMatrix:
        if self.cols != other.rows:
            raise ValidationError(f"shape mismatch {self.shape} @ {other.shape}")
        g = self.grade + other.grade
        m, n = self.rows, other.cols
        acc = [[[ZERO] * n for _ in range(m)] for _ in range(g + 1)]
        for i, A in enumerate(self.coeffs):
            for j, B in enumerate(other.coeffs):
                C = acc[i + j]
                for p in range(m):
                    Ap = A[p]
                    Cp = C[p]
                    for k in range(self.cols):
                        a = Ap[k]
                        if not a:
                            continue
                        Bk = B[k]
                        for q in range(n):
                            b = Bk[q]
                            if b:
                                Cp[q] = Cp[q] + a * b
        return PolyMatrix._trusted(acc, m, n, g)

    def __call__(self, x) -> Matrix:
        return pm_eval(self, x)

    def __repr__(self):
        return f"PolyMatrix({self.rows}x{self.cols}, grade={self.grade})"

    def pretty(self, var: str = "x") -> str:
        cells = [[poly_to_str(p, var) for p in row] for row in self.raw_entries()]
        width = max((len(c) for row in cells for c in row), default=1)
        return "\n".join("[ " + "  ".join(c.rjust(width) for c in row) + " ]" for row in cells)


def _entry_raw(e) -> list:
    if isinstance(e, UniPoly):
        return e.raw
    if isinstance(e, (list, tuple)):
        return p_from(e)
    return p_from([e])


def _madd(A: Matrix, B: Matrix) -> Matrix:
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(A, B))


def mat_mul(A: Sequence[Sequence], B: Sequence[Sequence]) -> list[list]:
    n = len(B[0]) if B else 0
    out = []
    for row in A:
        acc = [ZERO] * n
        for k, a in enumerate(row):
            if a:
                for q, b in enumerate(B[k]):
                    if b:
                        acc[q] = acc[q] + a * b
        out.append(acc)
    return out


def pm_eval(P: PolyMatrix, x) -> Matrix:
    """Exact Horner evaluation of every entry of ``P`` at the scalar ``x``."""
    x = _coerce(x)
    acc = [list(row) for row in P.coeffs[P.grade]]
    for k in range(P.grade - 1, -1, -1):
        A = P.coeffs[k]
        for i, row in enumerate(acc):
            Ai = A[i]
            for j in range(len(row)):
                row[j] = row[j] * x + Ai[j]
    return tuple(tuple(row) for row in acc)


def pm_rev(P: PolyMatrix) -> PolyMatrix:
    """``x^grade * P(1/x)``: coefficient list reversed w.r.t. the declared grade."""
    return PolyMatrix._trusted(P.coeffs[::-1], P.rows, P.cols, P.grade)


class MoebiusMap:
    """The map ``x -> (a x + b) / (c x + d)`` with ``a d - b c != 0``."""

    __slots__ = ("a", "b", "c", "d")

    def __init__(self, a, b, c, d):
        self.a, self.b, self.c, self.d = (_coerce(v) for v in (a, b, c, d))
        if not self.det:
            raise ValidationError("singular Moebius matrix (ad - bc = 0)")

    @property
    def det(self) -> GaussianRational:
        return self.a * self.d - self.b * self.c

    @classmethod
    def identity(cls) -> MoebiusMap:
        return cls(1, 0, 0, 1)

    def __matmul__(self, other: MoebiusMap) -> MoebiusMap:
        """2x2 matrix product ``self * other``."""
        return MoebiusMap(
            self.a * other.a + self.b * other.c, self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c, self.c * other.b + self.d * other.d,
        )

    def inverse(self) -> MoebiusMap:
        return MoebiusMap(self.d, -self.b, -self.c, self.a)

    def __call__(self, x):
        """Apply the scalar map; ``None`` stands for the point at infinity."""
        if x is None:
            return None if not self.c else self.a / self.c
        x = _coerce(x)
        den = self.c * x + self.d
        if not den:
            return None
        return (self.a * x + self.b) / den

    def __eq__(self, other):
        if not isinstance(other, MoebiusMap):
            return NotImplemented
        return (self.a, self.b, self.c, self.d) == (other.a, other.b, other.c, other.d)

    def __repr__(self):
        return f"MoebiusMap({self.a}, {self.b}, {self.c}, {self.d})"


def pm_moebius(P: PolyMatrix, A: MoebiusMap) -> PolyMatrix:
    """``sum_i A_i (a x + b)^i (c x + d)^(k - i)`` for ``P`` of grade ``k``.

    The grade is preserved.  With this convention ``pm_moebius(pm_moebius(P, B), A)``
    equals ``pm_moebius(P, B @ A)``, and finite eigenvalues of the result are the
    images of those of ``P`` under the inverse scalar map.
    """
    k = P.grade
    num = [A.b, A.a]
    den = [A.d, A.c]
    num_pows = [[ONE]]
    den_pows = [[ONE]]
    for _ in range(k):
        num_pows.append(_p_mul_full(num_pows[-1], num))
        den_pows.append(_p_mul_full(den_pows[-1], den))
    m, n = P.rows, P.cols
    acc = [[[ZERO] * n for _ in range(m)] for _ in range(k + 1)]
    for i, Ai in enumerate(P.coeffs):
        if not any(any(row) for row in Ai):
            continue
        w = _p_mul_full(num_pows[i], den_pows[k - i])
        for t, c in enumerate(w):
            if not c:
                continue
            C = acc[t]
            for p in range(m):
                for q in range(n):
                    a = Ai[p][q]
                    if a:
                        C[p][q] = C[p][q] + c * a
    return PolyMatrix._trusted(acc, m, n, k)


def _p_mul_full(p: Sequence, q: Sequence) -> list:
    """Product keeping full length len(p)+len(q)-1 (no trimming)."""
    out = [ZERO] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                if b:
                    out[i + j] = out[i + j] + a * b
    return out


def squared_distance(P: PolyMatrix, Q: PolyMatrix) -> Fraction:
    """Sum of squared moduli of coefficient differences (grades must agree)."""
    if P.shape != Q.shape or P.grade != Q.grade:
        raise ValidationError("distance needs equal shape and grade")
    total = Fraction(0)
    for A, B in zip(P.coeffs, Q.coeffs):
        for ra, rb in zip(A, B):
            for x, y in zip(ra, rb):
                total += (x - y).norm()
    return total

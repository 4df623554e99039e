"""JSON interchange for matrix polynomials, pencils and eigenstructures."""
from __future__ import annotations

import json
from typing import Any

from .eigenstructure import CompleteEigenstructure
from .errors import ValidationError
from .exact import PolyMatrix, format_scalar, parse_scalar
from .linearization import SylvesterPencil


def polymatrix_to_json(P: PolyMatrix) -> dict:
    return {
        "m": P.rows,
        "n": P.cols,
        "grade": P.grade,
        "coeffs": [[[format_scalar(x) for x in row] for row in A] for A in P.coeffs],
    }


def _int_field(obj: dict, key: str) -> int:
    v = obj.get(key)
    if not isinstance(v, int) or isinstance(v, bool) or v < 0:
        raise ValidationError(f"field {key!r} must be a nonnegative integer")
    return v


def polymatrix_from_json(obj: Any) -> PolyMatrix:
    if not isinstance(obj, dict):
        raise ValidationError("matrix polynomial JSON must be an object")
    m, n, grade = _int_field(obj, "m"), _int_field(obj, "n"), _int_field(obj, "grade")
    coeffs = obj.get("coeffs")
    if not isinstance(coeffs, list) or len(coeffs) != grade + 1:
        raise ValidationError(f"'coeffs' must list exactly grade+1 = {grade + 1} matrices")
    mats = []
    for k, A in enumerate(coeffs):
        if not isinstance(A, list) or len(A) != m or any(not isinstance(r, list) or len(r) != n for r in A):
            raise ValidationError(f"coefficient {k} is not a {m}x{n} matrix")
        try:
            mats.append([[parse_scalar(str(x)) for x in row] for row in A])
        except ValueError as exc:
            raise ValidationError(f"coefficient {k}: {exc}") from None
    return PolyMatrix._trusted(mats, m, n, grade)


def sylvester_to_json(F: SylvesterPencil) -> dict:
    out = polymatrix_to_json(F.pencil)
    out["sylvester"] = {"n": F.n, "d": F.d}
    return out


def sylvester_from_json(obj: Any) -> SylvesterPencil:
    pencil = polymatrix_from_json(obj)
    side = obj.get("sylvester")
    if not isinstance(side, dict):
        raise ValidationError("missing 'sylvester' block with the polynomial size and grade")
    return SylvesterPencil(pencil, _int_field(side, "n"), _int_field(side, "d"))


def eigenstructure_to_json(E: CompleteEigenstructure) -> dict:
    return {
        "size": list(E.size),
        "rank": E.rank,
        "grade": E.grade,
        "finite_divisors": [{"eigenvalue": format_scalar(z), "degree": k} for z, k in E.finite_divisors],
        "unfactored": [{"coeffs": [format_scalar(c) for c in p.raw], "squarefree": sf}
                       for p, sf in E.unfactored],
        "infinite_divisors": list(E.infinite_divisors),
        "right_minimal": list(E.right_minimal),
        "left_minimal": list(E.left_minimal),
    }


def load(path: str) -> Any:
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise ValidationError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise ValidationError(f"{path} is not valid JSON: {exc}") from None


def dump(obj: Any, path: str | None) -> str:
    text = json.dumps(obj, indent=1)
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    return text

"""Monte-Carlo classification of random low-rank symmetric matrix polynomials.

Samples are ``U S U^T`` with ``U`` an n x r polynomial matrix whose columns
have degree floor(d/2) and ``S`` a symmetric r x r polynomial matrix whose
entries have degree d - 2*floor(d/2), all coefficients uniform integers in
-BOX..BOX.  A wide box keeps the chance of landing on a degenerate set small.
This is a constructed subfamily of the rank-at-most-r polynomials, not the
whole set, so the report is evidence about genericity and not a proof.
"""
from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction

from . import linalg
from .catalog import enumerate_poly_bundles
from .eigenstructure import classify_bundle, complete_eigenstructure
from .errors import InvariantBreach
from .exact import PolyMatrix, gq

BOX = 1000

__all__ = ["ExperimentReport", "random_low_rank", "congruence_perturbation", "run_sampler"]

HEADER = ("samples U S U^T with U n x r of column degree floor(d/2) and S symmetric of "
          f"degree d - 2 floor(d/2), integer coefficients in -{BOX}..{BOX}; a constructed "
          "subfamily of the rank <= r polynomials")


@dataclass
class ExperimentReport:
    n: int
    d: int
    r: int
    trials: int
    seed: int
    perturbation: str
    classified: dict = field(default_factory=dict)  # a (or "none") -> count
    perturbed_kept: int = 0
    perturbed_total: int = 0
    unclassified: list = field(default_factory=list)  # PolyMatrix samples
    header: str = HEADER

    @property
    def classified_fraction(self) -> float:
        none = self.classified.get("none", 0)
        return (self.trials - none) / self.trials if self.trials else 0.0

    def to_json(self) -> dict:
        from .serialize import polymatrix_to_json

        return {
            "header": self.header,
            "n": self.n, "d": self.d, "r": self.r,
            "trials": self.trials, "seed": self.seed,
            "perturbation": self.perturbation,
            "classified": {str(k): v for k, v in self.classified.items()},
            "perturbed_kept": self.perturbed_kept,
            "perturbed_total": self.perturbed_total,
            "unclassified": [polymatrix_to_json(P) for P in self.unclassified],
        }


def _rand_poly(deg: int, rng: random.Random) -> list:
    return [gq(rng.randint(-BOX, BOX)) for _ in range(deg + 1)]


def random_low_rank(n: int, d: int, r: int, rng: random.Random) -> PolyMatrix:
    q = d // 2
    U = PolyMatrix.from_entries([[_rand_poly(q, rng) for _ in range(r)] for _ in range(n)], grade=q)
    raw = [[None] * r for _ in range(r)]
    for i in range(r):
        for j in range(i, r):
            raw[i][j] = raw[j][i] = _rand_poly(d - 2 * q, rng)
    S = PolyMatrix.from_entries(raw, grade=d - 2 * q)
    return (U @ S @ U.T).with_grade(d)


def congruence_perturbation(P: PolyMatrix, z: Fraction, rng: random.Random) -> PolyMatrix:
    """``(I + zE)^T P (I + zE)`` for a random integer ``E`` with ``I + zE`` nonsingular."""
    n = P.rows
    while True:
        E = [[gq(rng.randint(-3, 3)) for _ in range(n)] for _ in range(n)]
        C = [[(1 if i == j else 0) + gq(z) * E[i][j] for j in range(n)] for i in range(n)]
        if linalg.determinant(C):
            break
    Cm = PolyMatrix([C])
    return (Cm.T @ P @ Cm).with_grade(P.grade)


def run_sampler(n: int, d: int, r: int, trials: int, seed: int,
                z: Fraction = Fraction(1, 1000), perturb: bool = True) -> ExperimentReport:
    """Classify ``trials`` seeded samples; each classified one is also perturbed
    by a constant congruence and classified again."""
    enumerate_poly_bundles(n, d, r)  # domain check
    report = ExperimentReport(n, d, r, trials, seed,
                              f"(I+zE)^T P (I+zE), z={z}, E entries uniform in -3..3")
    counts: Counter = Counter()
    for k in range(trials):
        rng = random.Random(f"{seed}:{k}")
        P = random_low_rank(n, d, r, rng)
        E = complete_eigenstructure(P)
        if E.rank > r:
            raise InvariantBreach(f"sample of rank {E.rank} exceeds {r}")
        a = classify_bundle(E, n, d, r)
        counts["none" if a is None else a] += 1
        if a is None:
            report.unclassified.append(P)
            continue
        if perturb:
            Pz = congruence_perturbation(P, z, rng)
            report.perturbed_total += 1
            if classify_bundle(complete_eigenstructure(Pz), n, d, r) == a:
                report.perturbed_kept += 1
    report.classified = dict(sorted(counts.items(), key=lambda kv: (kv[0] == "none", str(kv[0]))))
    return report

"""Command-line interface.

Exit status: 0 on success, 2 for invalid input, 3 when an internal
consistency check fails.
"""
from __future__ import annotations

import argparse
import sys
from typing import Sequence

from .catalog import (
    codim_bundle,
    codim_orbit,
    enumerate_pencil_bundles,
    enumerate_poly_bundles,
    poly_descriptor,
)
from .eigenstructure import classify_bundle, complete_eigenstructure
from .errors import ConstructionFailed, InvariantBreach, ValidationError
from .exact import parse_scalar
from .linearization import delinearize, linearize, verify_shift_law
from .realization import RealizationSpec, realize, realize_bundle
from .sampler import run_sampler
from .serialize import (
    dump,
    eigenstructure_to_json,
    load,
    polymatrix_from_json,
    polymatrix_to_json,
    sylvester_from_json,
    sylvester_to_json,
)

EXIT_OK, EXIT_INVALID, EXIT_BREACH = 0, 2, 3


def _scalars(text: str | None):
    if not text:
        return []
    return [parse_scalar(tok) for tok in text.split(",") if tok.strip()]


def _ints(text: str | None) -> list[int]:
    if not text:
        return []
    try:
        return [int(tok) for tok in text.split(",") if tok.strip()]
    except ValueError:
        raise ValidationError(f"expected comma-separated integers, got {text!r}") from None


def _emit(obj, out: str | None) -> None:
    text = dump(obj, out)
    if out:
        print(f"wrote {out}")
    else:
        print(text)


def cmd_enumerate(args) -> int:
    if args.pencil:
        rows = enumerate_pencil_bundles(args.n, args.r)
    else:
        rows = enumerate_poly_bundles(args.n, args.d, args.r)
    print(f"{'kind':<11}{'n':>3}{'d':>3}{'r':>3}{'a':>4}{'alpha':>6}{'s':>3}{'eigs':>6}  min_indices")
    for D in rows:
        print(f"{D.kind:<11}{D.n:>3}{D.d:>3}{D.r:>3}{D.a:>4}{D.alpha:>6}{D.s:>3}{D.eig_count:>6}  "
              f"{list(D.min_indices)}")
    if args.out:
        dump([D.to_json() for D in rows], args.out)
        print(f"wrote {args.out}")
    return EXIT_OK


def cmd_realize(args) -> int:
    eigs = _scalars(args.eigs)
    if args.a is not None:
        D = poly_descriptor(args.n, args.d, args.r, args.a)
        if args.eigs is None:
            eigs = list(range(1, D.eig_count + 1))
        P = realize_bundle(D, eigs, seed=args.seed, verify=args.verify)
        if args.verify and classify_bundle(complete_eigenstructure(P), args.n, args.d, args.r) != args.a:
            raise InvariantBreach("realized polynomial does not classify back to its bundle")
    else:
        spec = RealizationSpec(args.n, args.d, args.r, tuple(eigs), args.t, tuple(_ints(args.eps)))
        P = realize(spec, seed=args.seed, verify=args.verify)
    _emit(polymatrix_to_json(P), args.out)
    return EXIT_OK


def _analysis(P) -> dict:
    E = complete_eigenstructure(P)
    out = {"eigenstructure": eigenstructure_to_json(E), "bundle": None}
    n = P.rows
    if P.is_symmetric() and P.grade % 2 and 1 <= E.rank < n:
        out["bundle"] = classify_bundle(E, n, P.grade, E.rank)
    return out


def cmd_analyze(args) -> int:
    P = polymatrix_from_json(load(args.file))
    _emit(_analysis(P), args.out)
    return EXIT_OK


def cmd_linearize(args) -> int:
    P = polymatrix_from_json(load(args.file))
    _emit(sylvester_to_json(linearize(P)), args.out)
    return EXIT_OK


def cmd_delinearize(args) -> int:
    F = sylvester_from_json(load(args.file))
    _emit(polymatrix_to_json(delinearize(F)), args.out)
    return EXIT_OK


def cmd_codim(args) -> int:
    orbit = codim_orbit(args.n, args.d, args.r, args.a)
    bundle = codim_bundle(args.n, args.d, args.r, args.a)
    print(f"codim orbit  {orbit}")
    print(f"codim bundle {bundle}")
    return EXIT_OK


def cmd_checkshift(args) -> int:
    P = polymatrix_from_json(load(args.file))
    rep = verify_shift_law(P)
    print(f"shift (d-1)/2 = {rep.shift}")
    print(f"polynomial minimal indices  right {list(rep.poly_right)} left {list(rep.poly_left)}")
    print(f"linearization minimal indices right {list(rep.pencil_right)} left {list(rep.pencil_left)}")
    print(f"rank {rep.poly_rank} -> {rep.pencil_rank}")
    print(f"elementary divisors {'match' if rep.divisors_match else 'DIFFER'}")
    print("PASS" if rep.passed else "FAIL")
    return EXIT_OK if rep.passed else EXIT_BREACH


def cmd_sample(args) -> int:
    rep = run_sampler(args.n, args.d, args.r, args.trials, args.seed)
    print(f"# {rep.header}")
    print(f"n={rep.n} d={rep.d} r={rep.r} trials={rep.trials} seed={rep.seed}")
    for key, count in rep.classified.items():
        label = f"a={key}" if key != "none" else "none"
        print(f"{label:<8}{count:>6}")
    print(f"classified fraction {rep.classified_fraction:.3f}")
    print(f"perturbation {rep.perturbation}: kept bundle {rep.perturbed_kept}/{rep.perturbed_total}")
    if args.out:
        dump(rep.to_json(), args.out)
        print(f"wrote {args.out} ({len(rep.unclassified)} unclassified samples included)")
    elif rep.unclassified:
        for P in rep.unclassified:
            print(dump(polymatrix_to_json(P), None))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="symeigen",
                                description="Exact eigenstructure tools for symmetric matrix polynomials.")
    sub = p.add_subparsers(dest="command", required=True)

    def shape(sp, need_d=True, need_r=True):
        sp.add_argument("--n", type=int, required=True)
        sp.add_argument("--d", type=int, required=need_d, default=1)
        sp.add_argument("--r", type=int, required=need_r)

    sp = sub.add_parser("enumerate", help="list the generic bundles for (n, d, r)")
    shape(sp, need_d=False)
    sp.add_argument("--pencil", action="store_true", help="pencil catalog (grade 1)")
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_enumerate)

    sp = sub.add_parser("realize", help="build a symmetric polynomial with prescribed structure")
    shape(sp)
    sp.add_argument("--a", type=int, help="generic bundle index instead of explicit data")
    sp.add_argument("--eigs", help="comma-separated distinct finite eigenvalues")
    sp.add_argument("--eps", help="comma-separated minimal indices")
    sp.add_argument("--t", type=int, default=0, help="number of infinite eigenvalues (0 or 1)")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--verify", action="store_true", help="recompute the eigenstructure before writing")
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_realize)

    for name, func, text in (
        ("analyze", cmd_analyze, "complete eigenstructure and bundle of a polynomial file"),
        ("linearize", cmd_linearize, "symmetric linearization of a polynomial file"),
        ("delinearize", cmd_delinearize, "recover the polynomial from a linearization file"),
        ("checkshift", cmd_checkshift, "check the minimal-index shift under linearization"),
    ):
        sp = sub.add_parser(name, help=text)
        sp.add_argument("file")
        if name != "checkshift":
            sp.add_argument("--out")
        sp.set_defaults(func=func)

    sp = sub.add_parser("codim", help="orbit and bundle codimension of K_a")
    shape(sp)
    sp.add_argument("--a", type=int, required=True)
    sp.set_defaults(func=cmd_codim)

    sp = sub.add_parser("sample", help="classify random low-rank symmetric polynomials")
    shape(sp)
    sp.add_argument("--trials", type=int, default=200)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_sample)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except (InvariantBreach, ConstructionFailed) as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_BREACH


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())

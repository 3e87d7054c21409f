"""Command-line interface.

Commands read a JSON problem file (see README for the schema) and
write a JSON report to standard output.  Exit codes: 0 for success or
a true verdict, 1 for a false verdict or failed selftest, 2 for input
errors.
"""

import argparse
import random
import sys

from . import documents
from .documents import Problem, ProblemError, load_problem, render
from .eigstructure import complete_eigenstructure, verify_theorem
from .fields import QQ, FieldError, field_from_name
from .generators import random_verify_instance
from .minbasis import left_kernel_minimal_basis, right_kernel_minimal_basis
from .parsing import ParseError, parse_scalar
from .properties import run_structural_checks
from .ratmap import INFINITY, degree_bound, phi_matrix, preimage_set
from .smith import smith_form

EXIT_OK = 0
EXIT_FALSE = 1
EXIT_INPUT = 2


def _read_problem(path: str) -> Problem:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ProblemError(f"cannot read {path}: {exc}") from None
    return load_problem(text)


def _need_matrix(problem: Problem):
    if problem.matrix is None:
        raise ProblemError("this command needs a 'matrix' entry in the problem file")
    return problem.matrix


def _need_map(problem: Problem):
    if problem.map is None:
        raise ProblemError("this command needs a 'map' entry in the problem file")
    return problem.map


def _cmd_smith(args) -> int:
    problem = _read_problem(args.file)
    P = _need_matrix(problem)
    sd = smith_form(P)
    print(render(documents.smith_to_doc(sd, problem.field, problem.matrix_var)))
    return EXIT_OK


def _cmd_eig(args) -> int:
    problem = _read_problem(args.file)
    P = _need_matrix(problem)
    eig = complete_eigenstructure(P)
    print(
        render(
            documents.eigenstructure_to_doc(eig, problem.field, problem.matrix_var)
        )
    )
    return EXIT_OK


def _cmd_transform(args) -> int:
    problem = _read_problem(args.file)
    P = _need_matrix(problem)
    m = _need_map(problem)
    Q = phi_matrix(P, m)
    doc = {
        "report": "transform",
        "field": problem.field.name,
        "var": problem.map_var,
        "matrix": documents.matrix_to_doc(Q, problem.map_var),
    }
    if not P.is_zero():
        bound = degree_bound(P, m)
        doc["degree_bound"] = {
            "q": bound.q,
            "attained": bound.attained,
            "reason": bound.reason.value,
            "critical_value": (
                None
                if bound.critical_value is None
                else problem.field.to_str(bound.critical_value)
            ),
        }
    print(render(doc))
    return EXIT_OK


def _cmd_preimage(args) -> int:
    problem = _read_problem(args.file)
    m = _need_map(problem)
    if args.at.strip() == "inf":
        target = INFINITY
    else:
        target = parse_scalar(args.at, problem.field)
    pre = preimage_set(m, target)
    print(
        render(
            documents.preimage_to_doc(
                pre, problem.field, problem.matrix_var, problem.map_var
            )
        )
    )
    return EXIT_OK


def _cmd_minbasis(args) -> int:
    problem = _read_problem(args.file)
    P = _need_matrix(problem)
    if args.side == "right":
        basis = right_kernel_minimal_basis(P, degree_cap=args.degree_cap)
    else:
        basis = left_kernel_minimal_basis(P, degree_cap=args.degree_cap)
    print(render(documents.minbasis_to_doc(basis, args.side, problem.matrix_var)))
    return EXIT_OK


def _cmd_verify(args) -> int:
    problem = _read_problem(args.file)
    P = _need_matrix(problem)
    m = _need_map(problem)
    rep = verify_theorem(P, m)
    print(
        render(
            documents.theorem_to_doc(
                rep, problem.field, problem.matrix_var, problem.map_var
            )
        )
    )
    return EXIT_OK if rep.verdict else EXIT_FALSE


def _cmd_selftest(args) -> int:
    fields = []
    if args.field == "both":
        fields = [QQ, field_from_name("Fp:7")]
    else:
        fields = [field_from_name(args.field)]
    rng = random.Random(args.seed)
    max_rows, max_cols = args.max_dim
    failures = 0
    for case in range(args.cases):
        field = fields[case % len(fields)]
        P, m = random_verify_instance(
            field,
            rng,
            max_rows=max_rows,
            max_cols=max_cols,
            max_deg=args.max_deg,
        )
        rep = verify_theorem(P, m)
        struct = run_structural_checks(P, m, rng)
        ok = rep.verdict and not struct
        if not ok:
            failures += 1
        print(
            f"case {case:03d} field {field.name} dims {P.rows}x{P.cols} "
            f"grade {P.grade} G {m.G} verdict "
            f"{'true' if rep.verdict else 'FALSE'}"
            + (f" structural-failures {len(struct)}" if struct else "")
        )
        for msg in struct:
            print(f"  - {msg}")
    print(f"selftest: {args.cases - failures}/{args.cases} passed (seed {args.seed})")
    return EXIT_OK if failures == 0 else EXIT_FALSE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="eigmap",
        description=(
            "Exact eigenstructure of polynomial matrices and its behaviour "
            "under rational changes of variable."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("smith", help="Smith form with unimodular transformers")
    p.add_argument("file")
    p.set_defaults(func=_cmd_smith)

    p = sub.add_parser("eig", help="complete eigenstructure of the matrix")
    p.add_argument("file")
    p.set_defaults(func=_cmd_eig)

    p = sub.add_parser("transform", help="apply the rational substitution")
    p.add_argument("file")
    p.set_defaults(func=_cmd_transform)

    p = sub.add_parser("preimage", help="preimage of a point under the map")
    p.add_argument("file")
    p.add_argument("--at", required=True, help="field element or 'inf'")
    p.set_defaults(func=_cmd_preimage)

    p = sub.add_parser("minbasis", help="minimal basis of a kernel")
    p.add_argument("file")
    p.add_argument("--side", choices=("left", "right"), required=True)
    p.add_argument("--degree-cap", type=int, default=None)
    p.set_defaults(func=_cmd_minbasis)

    p = sub.add_parser("verify", help="verify the structure mapping for P and the map")
    p.add_argument("file")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("selftest", help="randomized differential self-test")
    p.add_argument("--cases", type=int, default=25)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-dim", type=int, nargs=2, default=(3, 4), metavar=("R", "C"))
    p.add_argument("--max-deg", type=int, default=3)
    p.add_argument("--field", default="both", help="Q, Fp:<prime>, or both")
    p.set_defaults(func=_cmd_selftest)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ProblemError, ParseError, FieldError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())

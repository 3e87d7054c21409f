"""Problem files and report documents.

Problems and reports are JSON texts: key/value objects with nested
lists, polynomials as canonical expression strings.  Every report
round-trips: parsing a serialized document reconstructs the original
value bit for bit.
"""

import json
from dataclasses import dataclass

from .eigstructure import (
    CompleteEigenstructure,
    DivisorMappingRecord,
    IndexMappingRecord,
    TheoremReport,
)
from .fields import field_from_name
from .minbasis import MinimalBasis
from .parsing import parse_poly, poly_to_str
from .polymat import PolyMatrix
from .ratmap import CharPoint, PreimageSet, RationalMap
from .smith import ElementaryDivisorList, ElementaryDivisors, SmithDecomposition

INFINITY_TOKEN = "inf"


class ProblemError(ValueError):
    pass


@dataclass(frozen=True)
class Problem:
    field: object
    matrix: PolyMatrix | None
    map: RationalMap | None
    matrix_var: str
    map_var: str


def load_problem(text: str) -> Problem:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ProblemError(f"not valid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise ProblemError("problem document must be a JSON object")
    if "field" not in doc:
        raise ProblemError("missing required key 'field'")
    try:
        field = field_from_name(doc["field"])
    except ValueError as exc:
        raise ProblemError(str(exc)) from None
    matrix_var = doc.get("matrix_var", "x")
    map_var = doc.get("map_var", "y")

    matrix = None
    if "matrix" in doc:
        raw = doc["matrix"]
        if (
            not isinstance(raw, list)
            or not raw
            or not all(isinstance(row, list) and row for row in raw)
        ):
            raise ProblemError("'matrix' must be a nonempty 2D array of expressions")
        try:
            entries = [
                [parse_poly(e, field, matrix_var) for e in row] for row in raw
            ]
        except ValueError as exc:
            raise ProblemError(f"bad matrix entry: {exc}") from None
        try:
            matrix = PolyMatrix(field, entries, doc.get("grade"))
        except ValueError as exc:
            raise ProblemError(str(exc)) from None

    rat = None
    if "map" in doc:
        raw = doc["map"]
        if not isinstance(raw, dict) or "n" not in raw or "d" not in raw:
            raise ProblemError("'map' must be an object with keys 'n' and 'd'")
        try:
            n = parse_poly(raw["n"], field, map_var)
            d = parse_poly(raw["d"], field, map_var)
            rat = RationalMap(n, d)
        except ValueError as exc:
            raise ProblemError(f"bad map: {exc}") from None

    return Problem(
        field=field, matrix=matrix, map=rat, matrix_var=matrix_var, map_var=map_var
    )


def dump_problem(problem: Problem) -> str:
    doc = {"field": problem.field.name}
    if problem.matrix_var != "x":
        doc["matrix_var"] = problem.matrix_var
    if problem.map_var != "y":
        doc["map_var"] = problem.map_var
    if problem.matrix is not None:
        doc["grade"] = problem.matrix.grade
        doc["matrix"] = [
            [poly_to_str(e, problem.matrix_var) for e in row]
            for row in problem.matrix.entries
        ]
    if problem.map is not None:
        doc["map"] = {
            "n": poly_to_str(problem.map.n, problem.map_var),
            "d": poly_to_str(problem.map.d, problem.map_var),
        }
    return json.dumps(doc, indent=2)


# ---------------------------------------------------------------------------
# Shared pieces.


def matrix_to_doc(M: PolyMatrix, var: str) -> dict:
    return {
        "rows": M.rows,
        "cols": M.cols,
        "grade": M.grade,
        "entries": [[poly_to_str(e, var) for e in row] for row in M.entries],
    }


def matrix_from_doc(doc: dict, field, var: str) -> PolyMatrix:
    entries = [[parse_poly(e, field, var) for e in row] for row in doc["entries"]]
    return PolyMatrix(field, entries, doc["grade"])


def charpoint_to_str(pt: CharPoint, var: str) -> str:
    if pt.is_infinite:
        return INFINITY_TOKEN
    return poly_to_str(pt.base, var)


def charpoint_from_str(text: str, field, var: str) -> CharPoint:
    if text == INFINITY_TOKEN:
        return CharPoint.infinity()
    return CharPoint.finite(parse_poly(text, field, var))


def _divisor_list_to_doc(div: ElementaryDivisorList, var: str):
    return {
        "rank": div.rank,
        "entries": [
            {
                "base": charpoint_to_str(e.base, var),
                "exponents": list(e.exponents),
            }
            for e in div.entries
        ],
    }


def _divisor_list_from_doc(doc, field, var: str) -> ElementaryDivisorList:
    entries = tuple(
        ElementaryDivisors(
            base=charpoint_from_str(e["base"], field, var),
            exponents=tuple(e["exponents"]),
        )
        for e in doc["entries"]
    )
    return ElementaryDivisorList(entries=entries, rank=doc["rank"])


# ---------------------------------------------------------------------------
# Reports.


def eigenstructure_to_doc(
    eig: CompleteEigenstructure, field, var: str = "x"
) -> dict:
    return {
        "report": "eigenstructure",
        "field": field.name,
        "var": var,
        "grade": eig.grade,
        "rank": eig.rank,
        "finite": _divisor_list_to_doc(eig.finite, var),
        "infinite": list(eig.infinite),
        "right_indices": list(eig.right_indices),
        "left_indices": list(eig.left_indices),
    }


def eigenstructure_from_doc(doc: dict) -> CompleteEigenstructure:
    field = field_from_name(doc["field"])
    var = doc["var"]
    return CompleteEigenstructure(
        finite=_divisor_list_from_doc(doc["finite"], field, var),
        infinite=tuple(doc["infinite"]),
        right_indices=tuple(doc["right_indices"]),
        left_indices=tuple(doc["left_indices"]),
        rank=doc["rank"],
        grade=doc["grade"],
    )


def smith_to_doc(sd: SmithDecomposition, field, var: str = "x") -> dict:
    return {
        "report": "smith",
        "field": field.name,
        "var": var,
        "invariant_polys": [poly_to_str(d, var) for d in sd.invariant_polys],
        "A": matrix_to_doc(sd.A, var),
        "S": matrix_to_doc(sd.S, var),
        "B": matrix_to_doc(sd.B, var),
    }


def smith_from_doc(doc: dict) -> SmithDecomposition:
    field = field_from_name(doc["field"])
    var = doc["var"]
    return SmithDecomposition(
        A=matrix_from_doc(doc["A"], field, var),
        S=matrix_from_doc(doc["S"], field, var),
        B=matrix_from_doc(doc["B"], field, var),
        invariant_polys=tuple(
            parse_poly(d, field, var) for d in doc["invariant_polys"]
        ),
    )


def preimage_to_doc(pre: PreimageSet, field, x_var="x", y_var="y") -> dict:
    return {
        "report": "preimage",
        "field": field.name,
        "x_var": x_var,
        "y_var": y_var,
        "target": charpoint_to_str(pre.target, x_var),
        "entries": [
            {"point": charpoint_to_str(pt, y_var), "multiplicity": mult}
            for pt, mult in pre.entries
        ],
        "pencil_degree": pre.S,
        "includes_infinity": pre.includes_infinity,
    }


def preimage_from_doc(doc: dict) -> PreimageSet:
    field = field_from_name(doc["field"])
    entries = tuple(
        (charpoint_from_str(e["point"], field, doc["y_var"]), e["multiplicity"])
        for e in doc["entries"]
    )
    return PreimageSet(
        target=charpoint_from_str(doc["target"], field, doc["x_var"]),
        entries=entries,
        S=doc["pencil_degree"],
        includes_infinity=doc["includes_infinity"],
    )


def minbasis_to_doc(basis: MinimalBasis, side: str, var: str = "x") -> dict:
    return {
        "report": "minimal_basis",
        "field": basis.field.name,
        "var": var,
        "side": side,
        "ambient_dim": basis.ambient_dim,
        "indices": list(basis.indices),
        "order": basis.order,
        "vectors": [
            [poly_to_str(p, var) for p in vec] for vec in basis.vectors
        ],
    }


def minbasis_from_doc(doc: dict) -> MinimalBasis:
    field = field_from_name(doc["field"])
    var = doc["var"]
    vectors = tuple(
        tuple(parse_poly(p, field, var) for p in vec) for vec in doc["vectors"]
    )
    return MinimalBasis(
        field=field,
        ambient_dim=doc["ambient_dim"],
        vectors=vectors,
        indices=tuple(doc["indices"]),
    )


def theorem_to_doc(rep: TheoremReport, field, x_var="x", y_var="y") -> dict:
    return {
        "report": "theorem",
        "field": field.name,
        "x_var": x_var,
        "y_var": y_var,
        "scaling_degree": rep.scaling_degree,
        "rank": rep.rank,
        "records": [
            {
                "x_base": charpoint_to_str(r.x_base, x_var),
                "x_exponents": list(r.x_exponents),
                "y_base": charpoint_to_str(r.y_base, y_var),
                "multiplicity": r.multiplicity,
                "predicted": list(r.predicted),
                "observed": list(r.observed),
                "ok": r.ok,
                "converse_ok": r.converse_ok,
            }
            for r in rep.records
        ],
        "index_records": [
            {
                "side": r.side,
                "p_indices": list(r.p_indices),
                "q_indices": list(r.q_indices),
                "predicted": list(r.predicted),
                "ok": r.ok,
            }
            for r in rep.index_records
        ],
        "unexplained": [
            {
                "y_base": charpoint_to_str(pt, y_var),
                "exponents": list(exps),
            }
            for pt, exps in rep.unexplained
        ],
        "internal_exponents": list(rep.internal_exponents),
        "verdict": rep.verdict,
    }


def theorem_from_doc(doc: dict) -> TheoremReport:
    field = field_from_name(doc["field"])
    x_var, y_var = doc["x_var"], doc["y_var"]
    records = tuple(
        DivisorMappingRecord(
            x_base=charpoint_from_str(r["x_base"], field, x_var),
            x_exponents=tuple(r["x_exponents"]),
            y_base=charpoint_from_str(r["y_base"], field, y_var),
            multiplicity=r["multiplicity"],
            predicted=tuple(r["predicted"]),
            observed=tuple(r["observed"]),
            ok=r["ok"],
            converse_ok=r["converse_ok"],
        )
        for r in doc["records"]
    )
    index_records = tuple(
        IndexMappingRecord(
            side=r["side"],
            p_indices=tuple(r["p_indices"]),
            q_indices=tuple(r["q_indices"]),
            predicted=tuple(r["predicted"]),
            ok=r["ok"],
        )
        for r in doc["index_records"]
    )
    unexplained = tuple(
        (charpoint_from_str(u["y_base"], field, y_var), tuple(u["exponents"]))
        for u in doc["unexplained"]
    )
    return TheoremReport(
        scaling_degree=doc["scaling_degree"],
        rank=doc["rank"],
        records=records,
        index_records=index_records,
        unexplained=unexplained,
        internal_exponents=tuple(doc["internal_exponents"]),
        verdict=doc["verdict"],
    )


def render(doc: dict) -> str:
    return json.dumps(doc, indent=2)

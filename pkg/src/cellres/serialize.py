"""JSON wire formats for complexes, families, labellings, and reports.

Formats:
    complex    {"n_vertices": int, "cells": [{"id", "dim", "vertices",
                "boundary": [[cell_id, sign]]}]}   (sign 0 = unset)
    family     {"n": int, "sets": [[int]]}
    labelling  {"n_variables": int, "labels": [[int exponents]]}

Serialization is canonical: keys sorted, vertex lists ascending, cells in id
order, so identical objects always produce identical bytes.
"""

from __future__ import annotations

import json

from .complexes import Cell, CellComplex, HomologyReport, validate_complex
from .monomials import Monomial, MonomialLabelling, Refinement, VertexFamily
from .resolution import CmVerdict, FamilyCriteriaReport
from .search import ConjectureReport, CoveringReport, MaximalityReport


class SerializationError(ValueError):
    """Malformed document for one of the wire formats."""


def _require(cond: bool, message: str):
    if not cond:
        raise SerializationError(message)


def _int_list(value, what: str) -> list:
    _require(isinstance(value, list)
             and all(isinstance(v, int) and not isinstance(v, bool)
                     for v in value),
             f"{what} must be a list of integers")
    return list(value)


# ---------------------------------------------------------------------------
# complexes


def complex_to_dict(X: CellComplex) -> dict:
    return {
        "n_vertices": X.n_vertices,
        "cells": [
            {
                "id": c.id,
                "dim": c.dim,
                "vertices": sorted(c.vertices),
                "boundary": [[b, s] for b, s in c.boundary],
            }
            for c in X.cells
        ],
    }


def complex_from_dict(doc) -> CellComplex:
    _require(isinstance(doc, dict), "complex document must be an object")
    _require(set(doc) == {"n_vertices", "cells"},
             "complex document needs exactly the keys n_vertices and cells")
    n = doc["n_vertices"]
    _require(isinstance(n, int) and n >= 0, "n_vertices must be a count")
    _require(isinstance(doc["cells"], list), "cells must be a list")
    cells = []
    for i, rec in enumerate(doc["cells"]):
        _require(isinstance(rec, dict) and
                 set(rec) == {"id", "dim", "vertices", "boundary"},
                 f"cell #{i} needs exactly the keys id, dim, vertices, boundary")
        _require(rec["id"] == i, f"cell ids must be dense and ordered; "
                 f"cell #{i} has id {rec['id']}")
        _require(isinstance(rec["dim"], int) and rec["dim"] >= 0,
                 f"cell {i}: dim must be a non-negative integer")
        verts = _int_list(rec["vertices"], f"cell {i}: vertices")
        _require(isinstance(rec["boundary"], list),
                 f"cell {i}: boundary must be a list")
        boundary = []
        for pair in rec["boundary"]:
            _require(isinstance(pair, list) and len(pair) == 2
                     and all(isinstance(v, int) for v in pair)
                     and pair[1] in (-1, 0, 1),
                     f"cell {i}: boundary entries are [cell_id, sign] "
                     "with sign in -1/0/+1")
            boundary.append((pair[0], pair[1]))
        cells.append(Cell(i, rec["dim"], frozenset(verts), tuple(boundary)))
    try:
        X = CellComplex(n, tuple(cells))
    except ValueError as exc:
        raise SerializationError(str(exc)) from exc
    problems = validate_complex(X)
    if problems:
        raise SerializationError("not a valid complex: " + "; ".join(problems))
    return X


# ---------------------------------------------------------------------------
# families and labellings


def family_to_dict(F: VertexFamily) -> dict:
    return {"n": F.n, "sets": [sorted(s) for s in F.sets]}


def family_from_dict(doc) -> VertexFamily:
    _require(isinstance(doc, dict) and set(doc) == {"n", "sets"},
             "family document needs exactly the keys n and sets")
    _require(isinstance(doc["n"], int), "n must be an integer")
    _require(isinstance(doc["sets"], list), "sets must be a list")
    members = tuple(frozenset(_int_list(s, "family member"))
                    for s in doc["sets"])
    try:
        return VertexFamily(doc["n"], members)
    except ValueError as exc:
        raise SerializationError(str(exc)) from exc


def labelling_to_dict(L: MonomialLabelling) -> dict:
    return {
        "n_variables": L.n_variables,
        "labels": [list(m.exponents) for m in L.labels],
    }


def labelling_from_dict(doc) -> MonomialLabelling:
    _require(isinstance(doc, dict) and set(doc) == {"n_variables", "labels"},
             "labelling document needs exactly the keys n_variables and labels")
    _require(isinstance(doc["n_variables"], int), "n_variables must be an integer")
    _require(isinstance(doc["labels"], list), "labels must be a list")
    rows = [tuple(_int_list(row, "label exponent row")) for row in doc["labels"]]
    try:
        return MonomialLabelling(
            doc["n_variables"], tuple(Monomial(r) for r in rows))
    except ValueError as exc:
        raise SerializationError(str(exc)) from exc


# ---------------------------------------------------------------------------
# reports (one-way: library objects to plain JSON data)


def homology_report_to_dict(rep: HomologyReport) -> dict:
    return {
        "field": rep.field,
        "reduced_betti": {str(k): v for k, v in sorted(rep.reduced_betti.items())},
        "acyclic": rep.acyclic,
    }


def cm_verdict_to_dict(v: CmVerdict) -> dict:
    return {
        "is_cellular_resolution": v.is_cellular_resolution,
        "is_minimal": v.is_minimal,
        "codimension": v.codimension,
        "projective_dimension": v.projective_dimension,
        "is_cm": v.is_cm,
        "field": v.field,
        "witness": _witness(v.witness),
    }


def criteria_report_to_dict(rep: FamilyCriteriaReport) -> dict:
    return {
        "cover_bound": rep.cover_bound,
        "complements_acyclic": rep.complements_acyclic,
        "face_separation": rep.face_separation,
        "covers_vertices": rep.covers_vertices,
        "ok": rep.ok,
        "field": rep.field,
        "cover_witness": _witness(rep.cover_witness),
        "union_witness": _witness(rep.union_witness),
        "separation_witness": _witness(rep.separation_witness),
        "uncovered_vertex": rep.uncovered_vertex,
    }


def maximality_report_to_dict(rep: MaximalityReport) -> dict:
    return {
        "is_maximal": rep.is_maximal,
        "extension": _witness(rep.extension),
        "decomposable": _witness(rep.decomposable),
    }


def covering_report_to_dict(rep: CoveringReport) -> dict:
    return {
        "single_vertex_cover": rep.single_vertex_cover,
        "disjoint_pair_cover": rep.disjoint_pair_cover,
        "ok": rep.ok,
        "witness": _witness(rep.witness),
    }


def conjecture_report_to_dict(rep: ConjectureReport) -> dict:
    return {
        "kind": rep.kind,
        "holds": rep.holds,
        "rows": [dict(r) for r in rep.rows],
        "counterexamples": [dict(r) for r in rep.counterexamples],
    }


def refinement_to_str(rel: Refinement) -> str:
    return rel.name.lower()


def _witness(value):
    """Plain-JSON view of a witness: frozensets become sorted lists."""
    if value is None or isinstance(value, (bool, int, str)):
        return value
    if isinstance(value, (frozenset, set)):
        return sorted(value)
    if isinstance(value, (tuple, list)):
        return [_witness(v) for v in value]
    raise SerializationError(f"cannot serialize witness {value!r}")


# ---------------------------------------------------------------------------
# canonical JSON text


def canonical_json(obj) -> str:
    """Stable text rendering: sorted keys, two-space indent, newline at end."""
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def parse_json(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise SerializationError(f"invalid JSON: {exc}") from exc

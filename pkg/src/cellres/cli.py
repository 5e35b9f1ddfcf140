"""Command-line interface over the JSON wire formats.

One binary, subcommand style.  Every run prints a single JSON report on
stdout (canonical formatting, byte-stable for identical inputs); errors go
to stderr as structured JSON.  Exit codes: 0 completed, 1 verification
negative (not CM, not maximal, no morphism), 2 guard refusal, 3 malformed
input.
"""

from __future__ import annotations

import argparse
import hashlib
import os
import sys
import time

from . import constructions as cons
from .complexes import (
    ComplexError,
    SignsMissingError,
    reduced_homology,
    restrict,
)
from .linalg import GF2, RATIONAL
from .monomials import (
    FamilyError,
    LabellingError,
    family_of,
    labelling_of,
    morphism_exists,
    polarize,
    refinement_compare,
)
from .resolution import (
    build_free_complex,
    check_cm_labelling,
    check_family_criteria,
)
from .search import (
    GuardExceeded,
    SearchSpace,
    chord_symmetry,
    conjecture_harness,
    dihedral_group,
    enumerate_maximal_families,
    enumerate_valid_families,
    is_maximal,
)
from .serialize import (
    SerializationError,
    canonical_json,
    cm_verdict_to_dict,
    complex_from_dict,
    complex_to_dict,
    conjecture_report_to_dict,
    covering_report_to_dict,
    criteria_report_to_dict,
    family_from_dict,
    family_to_dict,
    homology_report_to_dict,
    labelling_from_dict,
    labelling_to_dict,
    maximality_report_to_dict,
    parse_json,
    refinement_to_str,
)

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_GUARD = 2
EXIT_BAD_INPUT = 3


class CliError(Exception):
    """Unusable command line or input document."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise CliError(message)


class _Run:
    """Collects input hashes and the result for the final report."""

    def __init__(self, command: str, field_name: str):
        self.command = command
        self.field_name = field_name
        self.inputs = []
        self.result = None
        self.exit_code = EXIT_OK

    def load(self, path: str, kind: str):
        try:
            with open(path, "rb") as fh:
                raw = fh.read()
        except OSError as exc:
            raise CliError(f"cannot read {kind} file {path}: {exc}") from exc
        self.inputs.append({
            "path": path,
            "sha256": hashlib.sha256(raw).hexdigest(),
        })
        doc = parse_json(raw.decode("utf-8"))
        loader = {
            "complex": complex_from_dict,
            "family": family_from_dict,
            "labelling": labelling_from_dict,
        }[kind]
        return loader(doc)

    def report(self) -> dict:
        return {
            "command": self.command,
            "field": self.field_name,
            "inputs": self.inputs,
            "result": self.result,
        }


def _field(args):
    return RATIONAL if args.field == "rational" else GF2


def _jobs(args):
    if args.jobs is not None:
        return args.jobs
    env = os.environ.get("CELLRES_JOBS", "").strip()
    if env:
        try:
            return max(1, int(env))
        except ValueError as exc:
            raise CliError(f"CELLRES_JOBS must be an integer, got {env!r}") from exc
    return None


def _parse_pairs(text: str, what: str) -> tuple:
    """'0-1,1-2' -> ((0, 1), (1, 2))"""
    pairs = []
    for chunk in text.split(","):
        chunk = chunk.strip()
        if not chunk:
            continue
        bits = chunk.split("-")
        if len(bits) != 2:
            raise CliError(f"{what} entries look like 'i-j', got {chunk!r}")
        try:
            pairs.append((int(bits[0]), int(bits[1])))
        except ValueError as exc:
            raise CliError(f"{what} entries need integer endpoints: {chunk!r}") from exc
    return tuple(pairs)


def _symmetry(spec_text: str, X):
    if spec_text in (None, "none"):
        return ()
    if spec_text == "dihedral":
        return dihedral_group(X.n_vertices)
    if spec_text.startswith("chord:"):
        try:
            a = int(spec_text.split(":", 1)[1])
        except ValueError as exc:
            raise CliError("--symmetry chord:A needs an integer A") from exc
        return chord_symmetry(X.n_vertices, a)
    raise CliError(f"unknown symmetry {spec_text!r}; "
                   "use none, dihedral, or chord:A")


def _build_parser() -> _Parser:
    top = _Parser(prog="cellres", description=__doc__)
    sub = top.add_subparsers(dest="command", metavar="SUBCOMMAND")

    def cmd(name, **kw):
        p = sub.add_parser(name, **kw)
        p.add_argument("--field", choices=["gf2", "rational"], default="gf2",
                       help="coefficient field for homology verdicts")
        p.add_argument("--timing", action="store_true",
                       help="include wall_time_ms in the report")
        return p

    p = cmd("construct", help="emit a complex/family/labelling by name")
    p.add_argument("kind", nargs="?",
                   choices=["polygon", "chord", "subdivided-polygon",
                            "polygon-family", "chord-families", "wheel",
                            "wheel-family", "bipyramid", "pyramid",
                            "elongated-pyramid", "tree-complex",
                            "tree-labelling", "fixture"])
    p.add_argument("--list", action="store_true",
                   help="catalogue the named fixtures")
    p.add_argument("--n", type=int)
    p.add_argument("--a", type=int)
    p.add_argument("--chords", help="comma list like 1-5,3-5")
    p.add_argument("--edges", help="comma list of tree edges like 0-1,1-2")
    p.add_argument("--id", help="fixture id (see construct --list)")
    p.add_argument("--complex", dest="complex_file",
                   help="input complex for pyramid / elongated-pyramid")

    p = cmd("verify", help="Cohen-Macaulay verdict for a labelled complex")
    p.add_argument("--complex", dest="complex_file", required=True)
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--labelling", dest="labelling_file")
    g.add_argument("--family", dest="family_file")

    p = cmd("enumerate", help="families passing the validity criteria")
    p.add_argument("--complex", dest="complex_file", required=True)
    p.add_argument("--maximal", action="store_true",
                   help="keep only maximal families")
    p.add_argument("--symmetry", default="none",
                   help="none | dihedral | chord:A")
    p.add_argument("--max-candidates", type=int, default=60)
    p.add_argument("--jobs", type=int)

    p = cmd("maximal-check", help="is the family maximal on the complex?")
    p.add_argument("--complex", dest="complex_file", required=True)
    p.add_argument("--family", dest="family_file", required=True)

    p = cmd("homology", help="reduced homology of a (restricted) complex")
    p.add_argument("--complex", dest="complex_file", required=True)
    p.add_argument("--vertices", help="comma list restricting the complex")

    p = cmd("betti", help="ranks of the labelled free complex")
    p.add_argument("--complex", dest="complex_file", required=True)
    p.add_argument("--labelling", dest="labelling_file", required=True)

    p = cmd("morphism", help="does a variable substitution map one "
                             "labelling family onto another?")
    p.add_argument("--from", dest="from_file", required=True)
    p.add_argument("--to", dest="to_file", required=True)

    p = cmd("polarize", help="square-free the labelling")
    p.add_argument("--labelling", dest="labelling_file", required=True)

    p = cmd("conjecture", help="evidence tables for the open conjectures")
    p.add_argument("kind", choices=["variable-count", "selfdual"])
    p.add_argument("--max-candidates", type=int, default=200)
    p.add_argument("--jobs", type=int)

    return top


# ---------------------------------------------------------------------------
# subcommand bodies


def _run_construct(args, run: _Run):
    if args.list:
        run.result = {"fixtures": cons.fixture_catalogue()}
        return
    if args.kind is None:
        raise CliError("construct needs a kind or --list")

    def need(flag, value):
        if value is None:
            raise CliError(f"construct {args.kind} needs {flag}")
        return value

    kind = args.kind
    if kind == "polygon":
        run.result = {"complex": complex_to_dict(
            cons.polygon_complex(need("--n", args.n)))}
    elif kind == "chord":
        run.result = {"complex": complex_to_dict(
            cons.chord_complex(need("--n", args.n), need("--a", args.a)))}
    elif kind == "subdivided-polygon":
        chords = _parse_pairs(need("--chords", args.chords), "--chords")
        run.result = {"complex": complex_to_dict(
            cons.subdivided_polygon(need("--n", args.n), chords))}
    elif kind == "polygon-family":
        run.result = {"family": family_to_dict(
            cons.polygon_family(need("--n", args.n)))}
    elif kind == "chord-families":
        first, second = cons.chord_families(need("--n", args.n),
                                            need("--a", args.a))
        run.result = {"families": [family_to_dict(first),
                                   family_to_dict(second)]}
    elif kind == "wheel":
        run.result = {"complex": complex_to_dict(
            cons.wheel_polytope(need("--n", args.n)))}
    elif kind == "wheel-family":
        run.result = {"family": family_to_dict(cons.wheel_family())}
    elif kind == "bipyramid":
        run.result = {"complex": complex_to_dict(
            cons.bipyramid_complex(need("--n", args.n)))}
    elif kind in ("pyramid", "elongated-pyramid"):
        X = run.load(need("--complex", args.complex_file), "complex")
        built = cons.pyramid(X) if kind == "pyramid" else cons.elongated_pyramid(X)
        run.result = {"complex": complex_to_dict(built)}
    elif kind in ("tree-complex", "tree-labelling"):
        edges = _parse_pairs(need("--edges", args.edges), "--edges")
        T = cons.edges_to_tree(need("--n", args.n), edges)
        doc = {"complex": complex_to_dict(cons.tree_complex(T))}
        if kind == "tree-labelling":
            doc["labelling"] = labelling_to_dict(cons.tree_maximal_labelling(T))
        run.result = doc
    elif kind == "fixture":
        fid = need("--id", args.id)
        try:
            X, L = cons.fixture(fid)
        except KeyError as exc:
            raise CliError(str(exc.args[0])) from exc
        run.result = {
            "complex": complex_to_dict(X),
            "labelling": labelling_to_dict(L),
            "description": cons.fixture_catalogue()[fid],
        }


def _run_verify(args, run: _Run):
    field = _field(args)
    X = run.load(args.complex_file, "complex")
    result = {}
    if args.labelling_file:
        L = run.load(args.labelling_file, "labelling")
    else:
        F = run.load(args.family_file, "family")
        result["criteria"] = criteria_report_to_dict(
            check_family_criteria(X, F, field))
        L = labelling_of(F)
    verdict = check_cm_labelling(X, L, field)
    result["cm_verdict"] = cm_verdict_to_dict(verdict)
    run.result = result
    if not verdict.is_cm:
        run.exit_code = EXIT_NEGATIVE


def _run_enumerate(args, run: _Run):
    X = run.load(args.complex_file, "complex")
    space = SearchSpace(symmetry=_symmetry(args.symmetry, X),
                        max_candidates=args.max_candidates)
    enum = enumerate_maximal_families if args.maximal else enumerate_valid_families
    families = enum(X, space, _field(args), _jobs(args))
    run.result = {
        "maximal_only": bool(args.maximal),
        "count": len(families),
        "families": [family_to_dict(F) for F in families],
    }


def _run_maximal_check(args, run: _Run):
    field = _field(args)
    X = run.load(args.complex_file, "complex")
    F = run.load(args.family_file, "family")
    criteria = check_family_criteria(X, F, field)
    if not criteria.ok:
        run.result = {
            "criteria": criteria_report_to_dict(criteria),
            "note": "family fails the validity criteria; "
                    "maximality is undefined for it",
        }
        run.exit_code = EXIT_NEGATIVE
        return
    verdict = is_maximal(X, F, field)
    run.result = {
        "criteria": criteria_report_to_dict(criteria),
        "maximality": maximality_report_to_dict(verdict),
    }
    if not verdict.is_maximal:
        run.exit_code = EXIT_NEGATIVE


def _run_homology(args, run: _Run):
    X = run.load(args.complex_file, "complex")
    if args.vertices is not None:
        try:
            keep = {int(v) for v in args.vertices.split(",") if v.strip()}
        except ValueError as exc:
            raise CliError("--vertices is a comma list of integers") from exc
        X = restrict(X, keep)
    run.result = {"homology": homology_report_to_dict(
        reduced_homology(X, _field(args)))}


def _run_betti(args, run: _Run):
    X = run.load(args.complex_file, "complex")
    L = run.load(args.labelling_file, "labelling")
    fc = build_free_complex(X, L)
    run.result = {
        "ranks": list(fc.ranks()),
        "composition_is_zero": fc.composition_is_zero(),
    }


def _run_morphism(args, run: _Run):
    F = run.load(args.from_file, "family")
    G = run.load(args.to_file, "family")
    exists = morphism_exists(F, G)
    run.result = {
        "morphism_exists": exists,
        "relation": refinement_to_str(refinement_compare(F, G)),
    }
    if not exists:
        run.exit_code = EXIT_NEGATIVE


def _run_polarize(args, run: _Run):
    L = run.load(args.labelling_file, "labelling")
    P = polarize(L)
    run.result = {
        "labelling": labelling_to_dict(P),
        "family": family_to_dict(family_of(P)),
    }


def _run_conjecture(args, run: _Run):
    rep = conjecture_harness(args.kind, field=_field(args), jobs=_jobs(args),
                             max_candidates=args.max_candidates)
    run.result = conjecture_report_to_dict(rep)


_BODIES = {
    "construct": _run_construct,
    "verify": _run_verify,
    "enumerate": _run_enumerate,
    "maximal-check": _run_maximal_check,
    "homology": _run_homology,
    "betti": _run_betti,
    "morphism": _run_morphism,
    "polarize": _run_polarize,
    "conjecture": _run_conjecture,
}


def _emit_error(kind: str, message: str):
    sys.stderr.write(canonical_json({
        "error": {"type": kind, "message": message},
    }))


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command is None:
            raise CliError("a subcommand is required; see --help")
        run = _Run(args.command, args.field)
        started = time.monotonic()
        _BODIES[args.command](args, run)
        report = run.report()
        if args.timing:
            report["wall_time_ms"] = int((time.monotonic() - started) * 1000)
        sys.stdout.write(canonical_json(report))
        return run.exit_code
    except GuardExceeded as exc:
        _emit_error("guard", str(exc))
        return EXIT_GUARD
    except (CliError, SerializationError, LabellingError, FamilyError,
            ComplexError, SignsMissingError) as exc:
        _emit_error(type(exc).__name__, str(exc))
        return EXIT_BAD_INPUT


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end: JSON in, deterministic JSON or TSV out.

Exit codes: 0 on success, 2 when a precondition is violated (the error
is printed as a machine-readable JSON object), 3 on parse errors —
malformed command lines or malformed input files.  All rationals are
serialized as "p/q" strings; no floats appear in any input or output.
Reports are byte-reproducible for a fixed command line and seed.
"""

import argparse
import json
import sys
from fractions import Fraction

from .aomoto import GradedAlgebraPresentation, aomoto_betti, resonance_member
from .arrangements import (
    OracleError,
    ProjLineArrangement,
    multiple_points,
    omega_bounds,
    r1_arrangement,
    r1_completeness_note,
)
from .cvmodel import (
    CVModel,
    TranslatedTorus,
    classify_straightness,
    omega_member,
    strictness_witness,
)
from .fixtures import (
    _point_json,
    _poly_json,
    _subspace_json,
    _coord_json,
    fixture_list,
    run_fixture,
)
from .laurent import (
    EquivariantChainComplex1,
    LaurentPolynomial,
    arrangement_to_json,
    compare_tangent_cones,
    cv_rank1_chain,
    exp_tangent_cone,
    link_cv1,
)
from .qlinalg import RationalSubspace, SubspaceArrangement
from .simplicial import SimplicialComplex
from .toric import toric_cv, toric_omega_member, toric_resonance

Q = Fraction


class CliParseError(Exception):
    """Unreadable or structurally invalid input."""


# ---------------------------------------------------------------------------
# input parsing
# ---------------------------------------------------------------------------


def _load_json(path):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as e:
        raise CliParseError(f"cannot read {path}: {e}") from e
    except json.JSONDecodeError as e:
        raise CliParseError(f"{path} is not valid JSON: {e}") from e


def _structure(fn, data, what):
    try:
        return fn(data)
    except CliParseError:
        raise
    except Exception as e:
        raise CliParseError(f"bad {what}: {e}") from e


def _parse_poly(data):
    if isinstance(data, dict):
        return LaurentPolynomial.from_json(data["terms"], data.get("n_vars"))
    return LaurentPolynomial.from_json(data)


def _parse_poly_or_list(data):
    """A polynomial file may hold one polynomial or a list of them."""
    if isinstance(data, list) and data and isinstance(data[0], dict) and "terms" in data[0]:
        return [_parse_poly(d) for d in data]
    if isinstance(data, dict) and "polys" in data:
        return [_parse_poly(d) for d in data["polys"]]
    return [_parse_poly(data)]


def _parse_complex(data):
    if isinstance(data, dict):
        return SimplicialComplex(data.get("facets", ()), data.get("n"))
    return SimplicialComplex(data)


def _parse_subspace(data):
    if isinstance(data, dict):
        basis = data.get("basis", [])
        n = data.get("n")
    else:
        basis, n = data, None
    rows = [[Q(x) for x in row] for row in basis]
    if n is None:
        if not rows:
            raise CliParseError("subspace needs 'n' when the basis is empty")
        n = len(rows[0])
    return RationalSubspace.span(int(n), rows)


def _parse_arrangement(data):
    n = int(data["n"])
    comps = [
        RationalSubspace.span(n, [[Q(x) for x in row] for row in c["basis"]])
        for c in data.get("components", [])
    ]
    return SubspaceArrangement(n, comps)


def _parse_chain(data):
    ranks = data["ranks"]
    boundaries = []
    for mat in data.get("boundaries", []):
        boundaries.append(
            [[_parse_poly(entry) for entry in row] for row in mat]
        )
    return EquivariantChainComplex1(ranks, boundaries)


def _parse_point(data):
    if isinstance(data, dict):
        data = data["point"]
    return tuple(Q(x) for x in data)


# ---------------------------------------------------------------------------
# output
# ---------------------------------------------------------------------------


def _emit(report, fmt):
    if fmt == "tsv":
        sys.stdout.write("".join(f"{k}\t{v}\n" for k, v in _flatten(report)))
    else:
        sys.stdout.write(json.dumps(report, indent=2, sort_keys=True) + "\n")


def _flatten(obj, prefix=""):
    if isinstance(obj, dict):
        for key in sorted(obj):
            yield from _flatten(obj[key], f"{prefix}{key}.")
    elif isinstance(obj, (list, tuple)):
        for idx, item in enumerate(obj):
            yield from _flatten(item, f"{prefix}{idx}.")
    else:
        if obj is None:
            rendered = "null"
        elif obj is True:
            rendered = "true"
        elif obj is False:
            rendered = "false"
        else:
            rendered = str(obj)
        yield (prefix[:-1] if prefix else "value", rendered)


def _error_object(kind, message):
    return {"error": {"type": kind, "message": str(message)}}


# ---------------------------------------------------------------------------
# handlers
# ---------------------------------------------------------------------------


def _cmd_toric_res(args):
    k = _structure(_parse_complex, _load_json(args.complex), "simplicial complex")
    arr = toric_resonance(k, args.degree, args.depth)
    return {"degree": args.degree, "depth": args.depth, "resonance": _coord_json(arr)}


def _cmd_toric_cv(args):
    k = _structure(_parse_complex, _load_json(args.complex), "simplicial complex")
    arr = toric_cv(k, args.degree, args.depth)
    return {"degree": args.degree, "depth": args.depth, "cv": _coord_json(arr)}


def _cmd_toric_omega(args):
    k = _structure(_parse_complex, _load_json(args.complex), "simplicial complex")
    plane = _structure(_parse_subspace, _load_json(args.plane), "plane")
    member = toric_omega_member(k, args.degree, args.r, plane)
    return {"degree": args.degree, "r": args.r, "member": member}


def _cmd_tcone(args):
    polys = _structure(_parse_poly_or_list, _load_json(args.poly), "polynomial")
    if len(polys) == 1:
        rep = compare_tangent_cones(polys[0])
        return {
            "tau1": arrangement_to_json(rep["tau1"]),
            "tc1": _poly_json(rep["tc1"]),
            "tau1_inside_tc1": rep["tau1_inside_tc1"],
            "equal": rep["equal"],
        }
    return {"tau1": arrangement_to_json(exp_tangent_cone(polys))}


def _cmd_linkcv(args):
    delta = _structure(_parse_poly, _load_json(args.poly), "polynomial")
    link = link_cv1(delta)
    report = link.to_json()
    report["hypersurface_contains_identity"] = link.hypersurface_contains_identity()
    if delta.n_vars == 1 and not delta.is_zero():
        torsion = link.torsion_model()
        report["model"] = torsion["model"].to_json()
        report["nontorsion_factors"] = [
            _poly_json(p) for p in torsion["nontorsion_factors"]
        ]
    return report


def _cmd_cvchain(args):
    chain = _structure(_parse_chain, _load_json(args.chain), "chain complex")
    w = cv_rank1_chain(chain, args.degree, args.depth)
    return {
        "degree": args.degree,
        "depth": args.depth,
        "w_polynomial": _poly_json(w),
    }


def _cmd_cv_classify(args):
    data = _load_json(args.model)

    def build(d):
        models, res = {}, {}
        for entry in d["degrees"]:
            deg = int(entry["degree"])
            models[deg] = CVModel.from_json(entry["model"])
            res[deg] = _parse_arrangement(entry["resonance"])
        return models, res

    models, res = _structure(build, data, "classification input")
    return classify_straightness(models, res)


def _cmd_cv_omega(args):
    model = _structure(CVModel.from_json, _load_json(args.model), "model")
    plane = _structure(_parse_subspace, _load_json(args.plane), "plane")
    return {"member": omega_member(model, plane)}


def _cmd_cv_witness(args):
    data = _load_json(args.model)

    def build(d):
        n = int(d["n"])
        component = TranslatedTorus.from_json(d["component"], n)
        res = _parse_arrangement(d["resonance"])
        return component, res

    component, res = _structure(build, data, "witness input")
    witness = strictness_witness(component, res, args.bound)
    if witness is None:
        return {"witness": None, "reason": "search exhausted within bound"}
    return {"witness": _subspace_json(witness)}


def _cmd_arr_points(args):
    arr = _structure(ProjLineArrangement.from_json, _load_json(args.forms), "forms")
    return {"points": [_point_json(p) for p in multiple_points(arr)]}


def _cmd_arr_res1(args):
    arr = _structure(ProjLineArrangement.from_json, _load_json(args.forms), "forms")
    res = r1_arrangement(arr, seed=args.seed)
    report = arrangement_to_json(res)
    report["codim"] = res.codim()
    report["completeness_note"] = r1_completeness_note(arr)
    return report


def _cmd_arr_omega(args):
    arr = _structure(ProjLineArrangement.from_json, _load_json(args.forms), "forms")
    return {"r": args.r, "answer": omega_bounds(arr, args.r)}


def _cmd_aomoto_betti(args):
    alg = _structure(
        GradedAlgebraPresentation.from_json, _load_json(args.algebra), "algebra"
    )
    a = _structure(_parse_point, _load_json(args.point), "point")
    return {"degree": args.degree, "betti": aomoto_betti(alg, a, args.degree)}


def _cmd_aomoto_member(args):
    alg = _structure(
        GradedAlgebraPresentation.from_json, _load_json(args.algebra), "algebra"
    )
    a = _structure(_parse_point, _load_json(args.point), "point")
    member = resonance_member(alg, a, args.degree, args.depth)
    return {"degree": args.degree, "depth": args.depth, "member": member}


def _cmd_fixtures_list(args):
    return {"fixtures": fixture_list()}


def _cmd_fixtures_run(args):
    return run_fixture(args.name, seed=args.seed)


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    """argparse with parse failures mapped to exit code 3."""

    def error(self, message):
        sys.stdout.write(
            json.dumps(_error_object("parse", message), sort_keys=True) + "\n"
        )
        raise SystemExit(3)


def _common(sub):
    sub.add_argument("--format", choices=("json", "tsv"), default="json")
    sub.add_argument("--seed", type=int, default=0)


def build_parser():
    parser = _Parser(prog="jumploci", description=__doc__)
    top = parser.add_subparsers(dest="command", required=True)

    toric = top.add_parser("toric", help="toric-complex jump loci")
    tsub = toric.add_subparsers(dest="subcommand", required=True)
    p = tsub.add_parser("res", help="resonance arrangement")
    p.add_argument("--complex", required=True)
    p.add_argument("--degree", type=int, default=1)
    p.add_argument("--depth", type=int, default=1)
    _common(p)
    p.set_defaults(handler=_cmd_toric_res)
    p = tsub.add_parser("cv", help="character-torus locus")
    p.add_argument("--complex", required=True)
    p.add_argument("--degree", type=int, default=1)
    p.add_argument("--depth", type=int, default=1)
    _common(p)
    p.set_defaults(handler=_cmd_toric_cv)
    p = tsub.add_parser("omega", help="finite-cover membership for a plane")
    p.add_argument("--complex", required=True)
    p.add_argument("--plane", required=True)
    p.add_argument("--degree", type=int, default=1)
    p.add_argument("--r", type=int, required=True)
    _common(p)
    p.set_defaults(handler=_cmd_toric_omega)

    p = top.add_parser("tcone", help="tangent cones of a hypersurface in the torus")
    p.add_argument("--poly", required=True)
    _common(p)
    p.set_defaults(handler=_cmd_tcone)

    p = top.add_parser("linkcv", help="degree-1 locus from a link polynomial")
    p.add_argument("--poly", required=True)
    _common(p)
    p.set_defaults(handler=_cmd_linkcv)

    p = top.add_parser("cvchain", help="order polynomial of a rank-1 chain complex")
    p.add_argument("--chain", required=True)
    p.add_argument("--degree", type=int, default=1)
    p.add_argument("--depth", type=int, default=1)
    _common(p)
    p.set_defaults(handler=_cmd_cvchain)

    cv = top.add_parser("cv", help="presented locus models")
    csub = cv.add_subparsers(dest="subcommand", required=True)
    p = csub.add_parser("classify", help="straightness conditions per degree")
    p.add_argument("--model", required=True)
    _common(p)
    p.set_defaults(handler=_cmd_cv_classify)
    p = csub.add_parser("omega", help="finite-intersection test for a plane")
    p.add_argument("--model", required=True)
    p.add_argument("--plane", required=True)
    _common(p)
    p.set_defaults(handler=_cmd_cv_omega)
    p = csub.add_parser("witness", help="search for a strictness witness plane")
    p.add_argument("--model", required=True)
    p.add_argument("--bound", type=int, default=3)
    _common(p)
    p.set_defaults(handler=_cmd_cv_witness)

    arr = top.add_parser("arr", help="line arrangements")
    asub = arr.add_subparsers(dest="subcommand", required=True)
    p = asub.add_parser("points", help="intersection points with multiplicities")
    p.add_argument("--forms", required=True)
    _common(p)
    p.set_defaults(handler=_cmd_arr_points)
    p = asub.add_parser("res1", help="degree-1 resonance components")
    p.add_argument("--forms", required=True)
    _common(p)
    p.set_defaults(handler=_cmd_arr_res1)
    p = asub.add_parser("omega", help="coarse cover-invariant bounds")
    p.add_argument("--forms", required=True)
    p.add_argument("--r", type=int, required=True)
    _common(p)
    p.set_defaults(handler=_cmd_arr_omega)

    aom = top.add_parser("aomoto", help="rank tests on a presented algebra")
    osub = aom.add_subparsers(dest="subcommand", required=True)
    p = osub.add_parser("betti", help="cohomology rank at a point")
    p.add_argument("--algebra", required=True)
    p.add_argument("--point", required=True)
    p.add_argument("--degree", type=int, default=1)
    _common(p)
    p.set_defaults(handler=_cmd_aomoto_betti)
    p = osub.add_parser("member", help="depth-d jump test at a point")
    p.add_argument("--algebra", required=True)
    p.add_argument("--point", required=True)
    p.add_argument("--degree", type=int, default=1)
    p.add_argument("--depth", type=int, default=1)
    _common(p)
    p.set_defaults(handler=_cmd_aomoto_member)

    fix = top.add_parser("fixtures", help="built-in worked examples")
    fsub = fix.add_subparsers(dest="subcommand", required=True)
    p = fsub.add_parser("list", help="names and descriptions")
    _common(p)
    p.set_defaults(handler=_cmd_fixtures_list)
    p = fsub.add_parser("run", help="run one example by name")
    p.add_argument("name")
    _common(p)
    p.set_defaults(handler=_cmd_fixtures_run)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        report = args.handler(args)
    except CliParseError as e:
        sys.stdout.write(
            json.dumps(_error_object("parse", e), sort_keys=True) + "\n"
        )
        return 3
    except (ValueError, OracleError) as e:
        sys.stdout.write(
            json.dumps(_error_object("precondition", e), sort_keys=True) + "\n"
        )
        return 2
    _emit(report, args.format)
    return 0


if __name__ == "__main__":
    sys.exit(main())

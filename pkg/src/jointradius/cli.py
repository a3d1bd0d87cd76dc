"""Command-line front end.

Reads a problem file (space + tuple, plus optional direction/against/
subspace sections), dispatches to the solvers, and writes machine-readable
JSON to standard output.  Diagnostics go to standard error.  Exit codes:
0 success, 1 I/O or schema errors, 2 mathematical errors (zero radius,
dependent direction).
"""

from __future__ import annotations

import argparse
import json
import math
import sys

import numpy as np

from .errors import (
    DependentDirection,
    EmptyBasis,
    InvalidCertificate,
    JointRadiusError,
    ZeroRadius,
)
from .optuples import OperatorTuple, tuple_from_json
from .oracle import audit, sampled_radius
from .orth import TupleSubspace, orth_scalar, orth_subspace
from .radius import DEFAULT_STARTS, radius_exact, radius_smooth
from .spaces import (
    COMPLEX,
    UNBOUNDED,
    SpaceDescriptor,
    extreme_points,
    space_from_json,
)
from .subdiff import gateaux_one_sided, generators, smoothness

MATH_ERRORS = (ZeroRadius, DependentDirection, EmptyBasis, InvalidCertificate)


class ProblemFile:
    def __init__(self, space: SpaceDescriptor, tup: OperatorTuple, raw: dict):
        self.space = space
        self.tuple = tup
        self.raw = raw


def _load_json(path: str) -> dict:
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)


def parse(path: str, p_override: float | None = None) -> ProblemFile:
    raw = _load_json(path)
    if "space" not in raw or "tuple" not in raw:
        raise JointRadiusError("problem file must contain 'space' and 'tuple' sections")
    space = space_from_json(raw["space"])
    tup_obj = dict(raw["tuple"])
    if p_override is not None:
        tup_obj["p"] = p_override
    tup = tuple_from_json(tup_obj, field=space.field)
    if tup.n != space.dim:
        raise JointRadiusError(
            f"space dimension {space.dim} does not match operator dimension {tup.n}"
        )
    return ProblemFile(space, tup, raw)


def _aux_tuple(problem: ProblemFile, section: str, flag_path: str | None) -> OperatorTuple:
    obj = None
    if flag_path is not None:
        loaded = _load_json(flag_path)
        obj = loaded.get(section, loaded) if isinstance(loaded, dict) else loaded
    elif section in problem.raw:
        ref = problem.raw[section]
        obj = _load_json(ref) if isinstance(ref, str) else ref
    if obj is None:
        raise JointRadiusError(f"command needs a '{section}' section or the matching flag")
    S = tuple_from_json(obj, field=problem.space.field, default_p=problem.tuple.p)
    if (S.d, S.n, S.p) != (problem.tuple.d, problem.tuple.n, problem.tuple.p):
        raise JointRadiusError(f"'{section}' tuple does not match the problem tuple shape")
    return S


def _aux_subspace(problem: ProblemFile, flag_path: str | None) -> TupleSubspace:
    obj = None
    if flag_path is not None:
        obj = _load_json(flag_path)
    elif "subspace" in problem.raw:
        ref = problem.raw["subspace"]
        obj = _load_json(ref) if isinstance(ref, str) else ref
    if obj is None:
        raise JointRadiusError("command needs a 'subspace' section or --subspace")
    items = obj["basis"] if isinstance(obj, dict) else obj
    basis = tuple(
        tuple_from_json(it, field=problem.space.field, default_p=problem.tuple.p)
        for it in items
    )
    return TupleSubspace(basis)


def _scalar_json(v, field: str):
    if field == COMPLEX:
        return [float(np.real(v)), float(np.imag(v))]
    return float(np.real(v))


def _vector_json(v, field: str):
    return [_scalar_json(c, field) for c in np.asarray(v)]


def _orbits_json(rr, field):
    return [
        {
            "x": _vector_json(o.representative.x, field),
            "x_star": _vector_json(o.representative.x_star, field),
            "value": float(o.value),
        }
        for o in rr.attaining.orbits
    ]


def _compute_radius(problem: ProblemFile, args):
    if problem.space.is_smooth_lp:
        return radius_smooth(
            problem.tuple,
            problem.space,
            starts=args.starts,
            seed=args.seed,
            attain_tol=args.tol if args.tol is not None else 1e-8,
        )
    return radius_exact(
        problem.tuple,
        problem.space,
        attain_tol=args.tol if args.tol is not None else 1e-12,
    )


def _assert_finite(obj):
    if isinstance(obj, dict):
        for v in obj.values():
            _assert_finite(v)
    elif isinstance(obj, (list, tuple)):
        for v in obj:
            _assert_finite(v)
    elif isinstance(obj, float) and not math.isfinite(obj):
        raise JointRadiusError("non-finite numeric in output; refusing to serialize")


def _emit(obj, pretty: bool) -> None:
    _assert_finite(obj)
    if pretty:
        print(json.dumps(obj, indent=2, sort_keys=True))
    else:
        print(json.dumps(obj, separators=(",", ":"), sort_keys=True))


def _cmd_radius(problem, args):
    rr = _compute_radius(problem, args)
    return {
        "value": float(rr.value),
        "method": rr.method,
        "exhaustive": rr.exhaustive,
        "degenerate": rr.degenerate,
        "orbits": _orbits_json(rr, problem.space.field),
    }


def _cmd_subdiff(problem, args):
    rr = _compute_radius(problem, args)
    gens = generators(problem.tuple, problem.space, rr)
    fld = problem.space.field
    return {
        "value": float(rr.value),
        "exhaustive": rr.exhaustive,
        "generators": [
            {
                "x": _vector_json(g.pair.x, fld),
                "x_star": _vector_json(g.pair.x_star, fld),
                "alpha": _vector_json(g.alpha.alpha, fld),
            }
            for g in gens
        ],
    }


def _cmd_gateaux(problem, args):
    S = _aux_tuple(problem, "direction", args.direction)
    rr = _compute_radius(problem, args)
    rep = gateaux_one_sided(problem.tuple, S, problem.space, rr)
    return {
        "g_plus": rep.g_plus,
        "g_minus": rep.g_minus,
        "c_values": list(rep.c_values),
        "exhaustive": rep.exhaustive,
    }


def _cmd_smooth(problem, args):
    rr = _compute_radius(problem, args)
    rep = smoothness(problem.tuple, problem.space, rr)
    out = {"smooth": rep.verdict, "exhaustive": rep.exhaustive}
    if rep.generator is not None:
        fld = problem.space.field
        out["derivative_basis"] = {
            "x": _vector_json(rep.generator.pair.x, fld),
            "x_star": _vector_json(rep.generator.pair.x_star, fld),
            "alpha": _vector_json(rep.generator.alpha.alpha, fld),
        }
    return out


def _cmd_orth(problem, args):
    rr = _compute_radius(problem, args)
    if args.subspace is not None or "subspace" in problem.raw:
        V = _aux_subspace(problem, args.subspace)
        res = orth_subspace(problem.tuple, V, problem.space, rr)
    else:
        S = _aux_tuple(problem, "against", args.against)
        res = orth_scalar(problem.tuple, S, problem.space, rr)
    out = {"orthogonal": res.orthogonal, "approximate": res.approximate}
    if res.certificate is not None:
        out["certificate"] = {
            "weights": [
                {"orbit_index": j, "t": t} for j, t in res.certificate.weights
            ],
            "residual": res.certificate.residual,
        }
    else:
        out["certificate"] = None
    return out


def _cmd_extremes(problem, args):
    ext = extreme_points(problem.space)
    if ext is UNBOUNDED:
        return {"unbounded": True}
    primal, dual = ext
    return {
        "unbounded": False,
        "primal": [[float(c) for c in v] for v in primal],
        "dual": [[float(c) for c in u] for u in dual],
    }


def _cmd_verify(problem, args):
    rr = _compute_radius(problem, args)
    gens = generators(problem.tuple, problem.space, rr) if rr.value > 0 and not rr.degenerate else []
    report = audit(problem.tuple, problem.space, rr, gens, seed=args.seed)
    sr = sampled_radius(problem.tuple, problem.space, samples=args.samples, seed=args.seed)
    rows = [
        {"name": c.name, "status": c.status, "measured": c.measured, "bound": c.bound}
        for c in report.checks
    ]
    print(f"{'check':32s} {'status':8s} {'measured':>14s} {'bound':>14s}", file=sys.stderr)
    for c in report.checks:
        print(
            f"{c.name:32s} {c.status:8s} {c.measured:14.6e} {c.bound:14.6e}",
            file=sys.stderr,
        )
    return {
        "value": float(rr.value),
        "sampled_radius": sr,
        "passed": report.passed,
        "checks": rows,
    }


COMMANDS = {
    "radius": _cmd_radius,
    "subdiff": _cmd_subdiff,
    "gateaux": _cmd_gateaux,
    "smooth": _cmd_smooth,
    "orth": _cmd_orth,
    "extremes": _cmd_extremes,
    "verify": _cmd_verify,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="jointradius",
        description="Joint numerical radius toolkit for operator tuples.",
    )
    parser.add_argument("command", choices=sorted(COMMANDS))
    parser.add_argument("input", help="problem JSON file")
    parser.add_argument("--p", type=float, default=None, help="override the aggregation exponent")
    parser.add_argument("--starts", type=int, default=DEFAULT_STARTS)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--tol", type=float, default=None, help="attaining tolerance")
    parser.add_argument("--samples", type=int, default=10_000)
    parser.add_argument("--pretty", action="store_true")
    parser.add_argument("--direction", default=None, help="direction tuple JSON (gateaux)")
    parser.add_argument("--against", default=None, help="tuple JSON to test orthogonality against")
    parser.add_argument("--subspace", default=None, help="basis JSON for subspace orthogonality")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        problem = parse(args.input, p_override=args.p)
        out = COMMANDS[args.command](problem, args)
    except MATH_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (JointRadiusError, OSError, json.JSONDecodeError, KeyError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    _emit(out, args.pretty)
    return 0


if __name__ == "__main__":
    sys.exit(main())

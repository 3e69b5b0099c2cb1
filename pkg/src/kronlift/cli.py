"""``kronlift`` command line front end.

Every subcommand reads one JSON document (a path or ``-`` for stdin) and
prints one JSON document with sorted keys.  Exit codes: 0 decided,
2 malformed input, 3 precondition violated, 4 internal verification failed.
See ``docs/format.md`` for the schema.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

from . import counterexamples as cx
from . import ranks
from .errors import InputError, InternalVerificationFailed, PreconditionViolated
from .gentest import (
    closure,
    density_oracle,
    extract_irredundant,
    generates,
    irredundant_witness,
    redundancy_rank,
)
from .group import GroupElement, GroupShape, descriptor_equal, full_group
from .lifting import LiftProblem, lift_generators
from .numfield import NumberField, make_field

EXIT_OK, EXIT_INPUT, EXIT_PRECONDITION, EXIT_INTERNAL = 0, 2, 3, 4


# --- decoding ---------------------------------------------------------------

def _require(doc, key, kind=None):
    if not isinstance(doc, dict) or key not in doc:
        raise InputError(f"missing key {key!r}")
    value = doc[key]
    if kind is not None and not isinstance(value, kind):
        raise InputError(f"{key!r} must be a {kind.__name__}")
    return value


def _count(value, name):
    if isinstance(value, bool) or not isinstance(value, int) or value < 0:
        raise InputError(f"{name} must be a nonnegative integer")
    return value


def parse_field(doc) -> NumberField:
    f = _require(doc, "field", dict)
    minpoly = _require(f, "minpoly", list)
    interval = _require(f, "root_interval", list)
    if len(interval) != 2:
        raise InputError("root_interval needs two endpoints")
    poly = []
    for c in minpoly:
        if isinstance(c, (bool, float)):
            raise InputError("minimal polynomial coefficients must be integers")
        try:
            poly.append(int(c))
        except (TypeError, ValueError) as exc:
            raise InputError(f"bad minimal polynomial: {exc}") from exc
    try:
        return make_field(poly, tuple(interval))
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        if isinstance(exc, InputError):
            raise
        raise InputError(f"bad root interval: {exc}") from exc


def parse_shape(doc) -> GroupShape:
    s = _require(doc, "shape", dict)
    return GroupShape(_count(_require(s, "n"), "n"), _count(_require(s, "m"), "m"))


def parse_elements(items, shape: GroupShape, field: NumberField) -> list[GroupElement]:
    if not isinstance(items, list):
        raise InputError("element lists must be arrays")
    out = []
    for item in items:
        coords = _require(item, "coords", list)
        if len(coords) != shape.dim:
            raise InputError(f"element has {len(coords)} coordinates, shape needs {shape.dim}")
        vals = []
        for c in coords:
            if not isinstance(c, list) or len(c) != field.degree:
                raise InputError(f"each coordinate needs {field.degree} power-basis coefficients")
            try:
                vals.append(field.element(c))
            except (TypeError, ValueError, ZeroDivisionError) as exc:
                if isinstance(exc, InputError):
                    raise
                raise InputError(f"bad rational: {exc}") from exc
        out.append(GroupElement(shape, vals))
    return out


def _elements_json(xs):
    return [x.to_json() for x in xs]


def _covector_json(c):
    return [x.to_json() for x in c]


# --- subcommands ------------------------------------------------------------

def cmd_generates(doc, args):
    field, shape = parse_field(doc), parse_shape(doc)
    xs = parse_elements(_require(doc, "elements"), shape, field)
    v = generates(xs, shape)
    out = {"generates": v.generates}
    if not v.generates:
        out["witness"] = _covector_json(v.witness)
        out["reason"] = v.reason
    elif shape.n_free:
        out["subset"] = list(v.subset)
    if args.seed is not None:
        rep = density_oracle(xs, shape, samples=args.samples, grid=args.grid, seed=args.seed)
        out["density"] = {
            "coverage": rep.coverage,
            "grid": rep.grid,
            "samples": rep.samples,
            "seed": args.seed,
            "worst_character": list(rep.worst_character),
        }
    return out


def _components_json(k):
    return "infinite" if k == math.inf else int(k)


def cmd_closure(doc, args):
    field, shape = parse_field(doc), parse_shape(doc)
    xs = parse_elements(_require(doc, "elements"), shape, field)
    d = closure(xs, shape, field)
    return {
        "components": _components_json(d.component_count),
        "dim": d.dim,
        "full": descriptor_equal(d, full_group(shape, field)),
        "integral": [_covector_json(r) for r in d.integral],
        "vanishing": [_covector_json(r) for r in d.vanishing],
    }


def cmd_irredundant(doc, args):
    field, shape = parse_field(doc), parse_shape(doc)
    if "elements" in doc:
        xs = parse_elements(doc["elements"], shape, field)
        kept = extract_irredundant(xs, shape)
        remaining = list(range(len(xs)))
        indices = []
        for k in kept:
            i = next(i for i in remaining if xs[i] == k)
            remaining.remove(i)
            indices.append(i)
    else:
        kept = irredundant_witness(shape, field)
        indices = None
    out = {
        "elements": _elements_json(kept),
        "redundancy_rank": redundancy_rank(shape),
        "size": len(kept),
    }
    if indices is not None:
        out["indices"] = indices
    return out


def cmd_lift(doc, args):
    field, shape = parse_field(doc), parse_shape(doc)
    gs = parse_elements(_require(doc, "gs"), shape, field)
    delta = parse_elements(_require(doc, "delta_gens"), shape, field)
    w = lift_generators(LiftProblem(shape, gs, delta))
    out = w.to_json(lifted_generates=generates(list(w.lifted), shape).generates)
    if args.emit_lifted:
        out["lifted"] = _elements_json(w.lifted)
    return out


def _structure(doc) -> ranks.LieStructure:
    fields = ("d_G", "dim_ab", "dim_T")
    vals = {k: _count(_require(doc, k), k) for k in fields}
    for k in ("ab_noncompact", "G_compact"):
        v = _require(doc, k)
        if not isinstance(v, bool):
            raise InputError(f"{k} must be a boolean")
        vals[k] = v
    return ranks.LieStructure(**vals)


def _isotypics(items):
    if not isinstance(items, list):
        raise InputError("isotypic must be an array")
    out = []
    for it in items:
        out.append(ranks.IsotypicDescriptor(
            _count(_require(it, "multiplicity"), "multiplicity"),
            _count(_require(it, "schur_dim"), "schur_dim"),
            _count(_require(it, "sigma_dim_over_k"), "sigma_dim_over_k"),
        ))
    return out


def cmd_ranks(doc, args):
    if not isinstance(doc, dict):
        raise InputError("ranks expects a JSON object")
    out = {}
    if "shape" in doc:
        shape = parse_shape(doc)
        out["d"] = ranks.d_abelian(shape)
        out["redundancy_rank"] = ranks.redundancy_rank_abelian(shape)
        out["gaschutz_rank"] = {"exact": ranks.gaschutz_rank_abelian(shape)}
    if "structure" in doc:
        out["gaschutz_bound"] = ranks.gaschutz_bound(_structure(doc["structure"])).to_json()
    if "module" in doc:
        mod = doc["module"]
        isos = _isotypics(_require(mod, "isotypic"))
        out["d_module"] = ranks.d_module(isos)
        if "d_L" in mod:
            out["d_abels_noskov"] = ranks.d_abels_noskov(_count(mod["d_L"], "d_L"), isos)
    if "reductive" in doc:
        red = doc["reductive"]
        out["d_reductive"] = ranks.d_reductive(
            _count(_require(red, "d_S"), "d_S"), _count(_require(red, "d_A"), "d_A"))
    if not out:
        raise InputError("nothing to compute: give shape, structure, module or reductive")
    return out


def cmd_counterexample(args):
    if args.family == "lowerbound":
        inst = cx.lowerbound_instance(args.n, args.m)
        out = {
            "family": "lowerbound",
            "n": args.n,
            "m": args.m,
            "source_shape": {"n": inst.source_shape.n_free, "m": inst.source_shape.m_torus},
            "target_shape": {"n": inst.target_shape.n_free, "m": inst.target_shape.m_torus},
            "field": cx.SQRT2.to_json(),
            "h_tuple": _elements_json(inst.h_tuple),
            "generates_target": True,
        }
        if args.verify_bound is not None:
            out["verify_bound"] = args.verify_bound
            out["no_lift_up_to_bound"] = cx.verify_no_lift_bounded(inst, args.verify_bound)
        return out
    delta, gs = cx.torus_nonlift_instance(args.n)
    shape = GroupShape(0, args.n)
    out = {
        "family": "torus",
        "n": args.n,
        "field": cx.SQRT2.to_json(),
        "delta_gens": _elements_json(delta),
        "gs": _elements_json(gs),
        "dense": generates(gs + delta, shape).generates,
    }
    if args.verify_bound is not None:
        sweep = cx.torus_nonlift_sweep(args.n, args.verify_bound)
        out["verify_bound"] = args.verify_bound
        out["checked"] = sweep.checked
        out["no_lift_up_to_bound"] = sweep.failures == 0 and sweep.exact_generating == 0
    return out


# --- driver -----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="kronlift", description="Exact topological generation in R^n x T^m.")
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("generates", help="decide topological generation")
    g.add_argument("problem")
    g.add_argument("--seed", type=int, default=None, help="also run the sampling cross-check with this seed")
    g.add_argument("--samples", type=int, default=10_000)
    g.add_argument("--grid", type=int, default=100)

    for name, text in (("closure", "closure of the generated subgroup"),
                       ("irredundant", "irredundant generating subset or default witness"),
                       ("ranks", "rank formulas")):
        sub.add_parser(name, help=text).add_argument("problem")

    lp = sub.add_parser("lift", help="lift generators through G -> G / closure(Delta)")
    lp.add_argument("problem")
    lp.add_argument("--emit-lifted", action="store_true", help="include the lifted elements")

    c = sub.add_parser("counterexample", help="build and check non-liftable families")
    c.add_argument("--family", choices=("lowerbound", "torus"), required=True)
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--m", type=int, default=0)
    c.add_argument("--verify-bound", type=int, default=None)
    return p


COMMANDS = {
    "generates": cmd_generates,
    "closure": cmd_closure,
    "irredundant": cmd_irredundant,
    "lift": cmd_lift,
    "ranks": cmd_ranks,
}


def _load(path):
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON: {exc}") from exc


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    args = build_parser().parse_args(argv)
    try:
        if args.command == "counterexample":
            if args.n < 0 or args.m < 0:
                raise InputError("n and m must be nonnegative")
            result = cmd_counterexample(args)
        else:
            result = COMMANDS[args.command](_load(args.problem), args)
    except InputError as exc:
        print(f"kronlift: malformed input: {exc}", file=stderr)
        return EXIT_INPUT
    except PreconditionViolated as exc:
        print(f"kronlift: precondition violated ({type(exc).__name__}): {exc}", file=stderr)
        return EXIT_PRECONDITION
    except InternalVerificationFailed as exc:
        print(f"kronlift: internal verification failed: {exc}", file=stderr)
        return EXIT_INTERNAL
    json.dump(result, stdout, sort_keys=True)
    stdout.write("\n")
    return EXIT_OK


def main(argv=None):
    sys.exit(run(argv))


if __name__ == "__main__":
    main()

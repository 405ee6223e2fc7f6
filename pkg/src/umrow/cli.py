"""Command-line front end.

Subcommands:

* ``umrow verify`` runs a named suite over a parameter range and prints a
  deterministic JSON report; the exit status is 0 exactly when every case
  passed.
* ``umrow gb`` prints the reduced basis of an algebra's relation ideal.
* ``umrow add`` performs orbit-level addition of two named rows from a
  bundle and prints the sum with its elementary certificates.
* ``umrow map`` prints any of the named morphisms (eta, mu, E, mu-prime,
  mu-minus-one, delta, phi, degree, fold) at a given size.
"""

from __future__ import annotations

import argparse
import json
import sys
import warnings

from .algebra import Algebra
from .errors import UmrowError
from .fields import field_from_text
from .fileio import load_algebra, load_rows_bundle, row_to_json, word_to_json
from .groebner import groebner_basis
from .poly import make_order
from .quadrics import (
    degree_action,
    delta_map,
    e_endo,
    eta_hom,
    fold_model_certificate,
    fold_model_row,
    mu_hom,
    mu_minus_one,
    mu_prime_hom,
    phi_map,
    vtilde_ring,
)
from .rows import check_unimodular, vdk_add
from .suites import SuiteConfig, run_suite


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="umrow")
    sub = parser.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("--suite", required=True)
    v.add_argument("--n-min", type=int, required=True)
    v.add_argument("--n-max", type=int, required=True)
    v.add_argument("--field", required=True, help="q or fp:<prime>")
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--shrink-budget", type=int, default=200)
    v.add_argument("--report", help="also write the report to this path")
    v.add_argument("--no-timing", action="store_true", help="zero the timing fields")

    g = sub.add_parser("gb", help="reduced basis of an algebra's relations")
    g.add_argument("--input", required=True)
    g.add_argument("--order", choices=["lex", "grevlex"], default="grevlex")

    a = sub.add_parser("add", help="orbit-level addition of two rows")
    a.add_argument("--rows", required=True, help="row bundle file")
    a.add_argument("--u", required=True)
    a.add_argument("--v", required=True)
    a.add_argument("--seed", type=int, default=0)
    a.add_argument("--shrink-budget", type=int, default=200)

    m = sub.add_parser("map", help="print a named morphism")
    m.add_argument(
        "--name",
        required=True,
        choices=[
            "eta",
            "mu",
            "E",
            "mu-prime",
            "mu-minus-one",
            "delta",
            "phi",
            "degree",
            "fold",
        ],
    )
    m.add_argument("--n", type=int, required=True)
    m.add_argument("--field", required=True)
    m.add_argument("--alpha", type=int, default=2, help="scaling factor for degree")
    return parser


def _emit(payload) -> None:
    sys.stdout.write(json.dumps(payload, sort_keys=True, indent=2) + "\n")


def _cmd_verify(args) -> int:
    config = SuiteConfig(
        suite=args.suite,
        n_min=args.n_min,
        n_max=args.n_max,
        field=field_from_text(args.field),
        seed=args.seed,
        shrink_budget=args.shrink_budget,
        timing=not args.no_timing,
    )
    report = run_suite(config)
    text = report.to_json()
    sys.stdout.write(text)
    if args.report:
        with open(args.report, "w") as fh:
            fh.write(text)
    return 0 if report.all_pass() else 1


def _cmd_gb(args) -> int:
    algebra = load_algebra(args.input)
    order = make_order(args.order, algebra.ring.nvars)
    gb = groebner_basis(algebra.relations_ideal, order)
    _emit(
        {
            "order": args.order,
            "vars": list(algebra.variables),
            "basis": [str(g) for g in gb.basis],
        }
    )
    return 0


def _cmd_add(args) -> int:
    algebra, rows = load_rows_bundle(args.rows)
    for name in (args.u, args.v):
        if name not in rows:
            raise UmrowError(f"bundle has no row named {name!r}")
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        result = vdk_add(
            rows[args.u], rows[args.v], seed=args.seed, shrink_budget=args.shrink_budget
        )
    _emit(
        {
            "u": args.u,
            "v": args.v,
            "x": str(result.x.rep),
            "sum": row_to_json(result.row),
            "splitting": [str(e.rep) for e in result.splitting.entries],
            "word_u": word_to_json(result.word_u),
            "word_v": word_to_json(result.word_v),
        }
    )
    return 0


def _hom_payload(name, hom):
    return {
        "name": name,
        "source_vars": list(hom.source.variables),
        "target_vars": list(hom.target.variables),
        "images": {
            v: str(im.rep) for v, im in zip(hom.source.variables, hom.images)
        },
    }


def _cmd_map(args) -> int:
    fieldcfg = field_from_text(args.field)
    n = args.n
    name = args.name
    if name == "eta":
        _emit(_hom_payload(name, eta_hom(n, fieldcfg)))
    elif name == "mu":
        _emit(_hom_payload(name, mu_hom(n, fieldcfg)))
    elif name == "E":
        _emit(_hom_payload(name, e_endo(n, fieldcfg)))
    elif name == "mu-prime":
        _emit(_hom_payload(name, mu_prime_hom(n, fieldcfg)))
    elif name == "mu-minus-one":
        _emit(_hom_payload(name, mu_minus_one(n, fieldcfg)))
    elif name == "degree":
        _emit(_hom_payload(name, degree_action(args.alpha, n, fieldcfg)))
    elif name == "delta":
        from .suites import universal_even_point

        row, split = delta_map(universal_even_point(n, fieldcfg))
        _emit(
            {
                "name": name,
                "row": row_to_json(row),
                "splitting": [str(e.rep) for e in split.entries],
            }
        )
    elif name == "phi":
        names = [f"a{i}" for i in range(1, n + 2)] + [f"b{i}" for i in range(1, n + 2)]
        rel = " + ".join(f"a{i}*b{i}" for i in range(1, n + 2)) + " - 1"
        alg = Algebra(fieldcfg, names, [rel])
        row = check_unimodular(alg, [alg.var(f"a{i}") for i in range(1, n + 2)])
        oriented, point = phi_map(row)
        _emit(
            {
                "name": name,
                "lift": [str(e.rep) for e in oriented.lift],
                "point_x": [str(e.rep) for e in point.x],
                "point_y": [str(e.rep) for e in point.y],
                "point_z": str(point.z.rep),
            }
        )
    elif name == "fold":
        vt = vtilde_ring(n, fieldcfg)
        fold = fold_model_row(vt)
        payload = {
            "name": name,
            "row": row_to_json(fold.row),
            "witness_row": [str(e.rep) for e in fold.witness.row.entries],
            "witness_splitting": [str(e.rep) for e in fold.witness.entries],
        }
        if n >= 4:
            cert = fold_model_certificate(vt)
            payload["certificate"] = word_to_json(cert.word)
        _emit(payload)
    return 0


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "verify": _cmd_verify,
        "gb": _cmd_gb,
        "add": _cmd_add,
        "map": _cmd_map,
    }
    try:
        return handlers[args.command](args)
    except UmrowError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


if __name__ == "__main__":
    raise SystemExit(main())

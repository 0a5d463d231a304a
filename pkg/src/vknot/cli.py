"""Command-line front end.

Exit codes: 0 success, 1 domain error, 2 search found nothing.
"""
from __future__ import annotations

import argparse
import json
import math
import os
import sys
from typing import Sequence

from . import acceptance
from .diagram import DiagramError, GaussDiagram, parse_gauss_code, to_gauss_code
from .families import k_family, kpq_family
from .invariants import bridge_count, chord_report, henrich_P, turaev_u, vu_lower_bound
from .search import (
    Certificate,
    NotFoundWithinBudget,
    SearchBudget,
    find_homotopy,
    find_isotopy,
    verify_certificate,
)

# defaults for search flags; flags always win
ENV_MAX_FLIPS = "VKNOT_MAX_FLIPS"
ENV_MAX_STATES = "VKNOT_MAX_STATES"


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None:
        return default
    try:
        return int(raw)
    except ValueError:
        raise DiagramError(f"environment variable {name} is not an integer: {raw!r}")


def invariants_report(d: GaussDiagram) -> dict:
    p, u = henrich_P(d), turaev_u(d)
    vu = vu_lower_bound(p)
    return {
        "code": to_gauss_code(d),
        "bridge": bridge_count(d),
        "P": str(p),
        "P_terms": {str(k): v for k, v in p},
        "u": str(u),
        "u_terms": {str(k): v for k, v in u},
        "vu_lower": str(vu),
        "vu_lower_ceil": math.ceil(vu),
        "chords": [
            {"chord": r.chord, "i": r.i_value, "n": r.n_value, "sign": r.sign}
            for r in chord_report(d)
        ],
    }


def _cmd_canon(args) -> int:
    print(to_gauss_code(parse_gauss_code(args.code)))
    return 0


def _cmd_invariants(args) -> int:
    rep = invariants_report(parse_gauss_code(args.code))
    if args.json:
        print(json.dumps(rep, sort_keys=True))
        return 0
    print(f"code={rep['code']}")
    print(f"bridge={rep['bridge']}")
    print(f"P={rep['P']}")
    print(f"u={rep['u']}")
    print(f"vu_lower={rep['vu_lower']}")
    for row in rep["chords"]:
        sign = "+" if row["sign"] > 0 else "-"
        print(f"chord {row['chord']} i={row['i']} n={row['n']} sign={sign}")
    return 0


def _cmd_generate(args) -> int:
    if args.family == "ki":
        if len(args.params) != 1:
            raise DiagramError("generate ki takes one argument <i>")
        d = k_family(args.params[0])
    else:
        if len(args.params) != 3:
            raise DiagramError("generate kpq takes three arguments <p> <q> <n>")
        d = kpq_family(*args.params)
    # family layout, not the canonical rotation
    print(d)
    return 0


def _cmd_search(args) -> int:
    d1, d2 = parse_gauss_code(args.code1), parse_gauss_code(args.code2)
    max_chords = args.max_chords
    if max_chords is None:
        max_chords = max(d1.n_chords, d2.n_chords)
    budget = SearchBudget(
        max_chords=max_chords,
        max_flips=args.max_flips if args.max_flips is not None else _env_int(ENV_MAX_FLIPS, 16),
        max_states=args.max_states if args.max_states is not None else _env_int(ENV_MAX_STATES, 200_000),
    )
    try:
        if args.mode == "homotopy":
            cert = find_homotopy(d1, d2, budget)
        else:
            cert = find_isotopy(d1, d2, budget)
    except NotFoundWithinBudget as exc:
        print(f"NOT_FOUND reason={exc.reason} {json.dumps(exc.stats, sort_keys=True)}")
        return 2
    text = json.dumps(cert.to_json(), indent=2)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    print(text)
    return 0


def _cmd_verify(args) -> int:
    try:
        with open(args.path, encoding="utf-8") as fh:
            obj = json.load(fh)
        cert = Certificate.from_json(obj)
    except (OSError, json.JSONDecodeError, KeyError, TypeError) as exc:
        raise DiagramError(f"cannot read certificate {args.path}: {exc}")
    res = verify_certificate(cert)
    if res.ok:
        print(f"OK flip_count={cert.flip_count} steps={len(cert.steps)}")
        return 0
    print(f"FAIL step={res.failed_at} {res.message}")
    return 1


def _cmd_selftest(args) -> int:
    return 0 if acceptance.run_all() else 1


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="vknot", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("canon", help="print the canonical Gauss code")
    p.add_argument("code")
    p.set_defaults(func=_cmd_canon)

    p = sub.add_parser("invariants", help="bridge count, chord table, P, u, vu bound")
    p.add_argument("code")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_invariants)

    p = sub.add_parser("generate", help="Gauss code of a family member")
    p.add_argument("family", choices=["ki", "kpq"])
    p.add_argument("params", type=int, nargs="+")
    p.set_defaults(func=_cmd_generate)

    p = sub.add_parser("search", help="find a certificate between two diagrams")
    p.add_argument("mode", choices=["homotopy", "isotopy"])
    p.add_argument("code1")
    p.add_argument("code2")
    p.add_argument("--max-chords", type=int)
    p.add_argument("--max-flips", type=int)
    p.add_argument("--max-states", type=int)
    p.add_argument("--out", help="also write the certificate JSON here")
    p.set_defaults(func=_cmd_search)

    p = sub.add_parser("verify", help="replay a certificate JSON file")
    p.add_argument("path")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("selftest", help="run the acceptance checks")
    p.set_defaults(func=_cmd_selftest)
    return ap


def run(argv: Sequence[str] | None = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return 1 if exc.code else 0
    try:
        return args.func(args)
    except (DiagramError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()

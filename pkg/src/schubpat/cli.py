"""Command-line interface.

Subcommands: schubert | rothe | cw | cw-table | verify | purple | chi |
alternating-sum.  Global flags may also be set through environment
variables prefixed SCHUBPAT_ (e.g. SCHUBPAT_JOBS=4, SCHUBPAT_FORMAT=json).

Exit codes: 0 success / all holds, 1 usage or crash, 2 mathematical
counterexample, 3 budget exceeded somewhere.
"""
from __future__ import annotations

import argparse
import json
import os
import sys

from . import incexc, schubert, verify, weylchar
from .diagrams import Diagram, rothe
from .errors import BudgetExceededError, PatternViolationError, SchubpatError
from .permwords import Permutation, Word, all_permutations, avoids, flatten
from .polyx import Polynomial
from .purple import characterize_monomials, purple_family

ENV_PREFIX = "SCHUBPAT_"

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_COUNTEREXAMPLE = 2
EXIT_BUDGET = 3


def _env_default(name: str, fallback):
    raw = os.environ.get(ENV_PREFIX + name.upper().replace("-", "_"))
    if raw is None:
        return fallback
    if isinstance(fallback, int):
        return int(raw)
    return raw


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format",
        choices=["text", "json", "csv"],
        default=_env_default("format", "text"),
    )
    common.add_argument("--out", default=_env_default("out", None), help="write output to PATH")
    common.add_argument("--jobs", type=int, default=_env_default("jobs", 1))
    common.add_argument("--max-n", type=int, default=_env_default("max_n", 5))
    common.add_argument("--seed", type=int, default=_env_default("seed", verify.DEFAULT_SEED))
    common.add_argument("--cache", default=_env_default("cache", None), help="JSON-lines cache PATH")
    common.add_argument(
        "--budget-dominated",
        type=int,
        default=_env_default("budget_dominated", weylchar.DEFAULT_BUDGET),
    )
    common.add_argument("--timing", action="store_true", help="record per-report timing")

    parser = argparse.ArgumentParser(prog="schubpat", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("schubert", parents=[common], help="print a Schubert polynomial")
    p.add_argument("perm")
    p.add_argument("--method", choices=["divdiff", "diagram", "weyl"], default="divdiff")

    p = sub.add_parser("rothe", parents=[common], help="print a Rothe diagram")
    p.add_argument("perm")

    p = sub.add_parser("cw", parents=[common], help="print the coefficient c_w")
    p.add_argument("perm")
    p.add_argument("--method", choices=["ie", "rec", "aug"], default="ie")
    p.add_argument("--all-methods", action="store_true")

    p = sub.add_parser("cw-table", parents=[common], help="CSV table of c_w over S_n")
    p.add_argument("n", type=int)

    p = sub.add_parser("verify", parents=[common], help="run a verification suite")
    p.add_argument("claim", choices=sorted(verify.CLAIMS))

    p = sub.add_parser("purple", parents=[common], help="purple boxes, family and monomials")
    p.add_argument("perm_or_diagram", help="permutation string or diagram JSON")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--l", type=int, default=None)
    p.add_argument("--characterize", action="store_true")

    p = sub.add_parser("chi", parents=[common], help="dual character of a diagram")
    p.add_argument("diagram", help="diagram JSON or a permutation string (its Rothe diagram)")

    p = sub.add_parser(
        "alternating-sum", parents=[common], help="the signed subword expansion for (w, u)"
    )
    p.add_argument("perm")
    p.add_argument("u")

    return parser


def _emit(text: str, args) -> None:
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _poly_out(p: Polynomial, args, nvars: int) -> str:
    if args.format == "json":
        return json.dumps(p.to_json(nvars), separators=(",", ":"))
    return p.format()


def _parse_diagram(s: str) -> Diagram:
    s = s.strip()
    if s.startswith("{"):
        return Diagram.from_json(json.loads(s))
    return rothe(Permutation.from_string(s))


def _load_cache(path: str) -> None:
    if not path or not os.path.exists(path):
        return
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if not line:
                continue
            rec = json.loads(line)
            key = Permutation.from_string(rec["w"]).values
            if rec["kind"] == "spec":
                schubert._spec_cache[key] = int(rec["value"])
            elif rec["kind"] == "cw":
                incexc._cw_cache[key] = int(rec["value"])


def _save_cache(path: str, known_spec: set, known_cw: set) -> None:
    if not path:
        return
    with open(path, "a", encoding="utf-8") as fh:
        for key in sorted(set(schubert._spec_cache) - known_spec):
            rec = {"kind": "spec", "w": str(Permutation(key)), "value": schubert._spec_cache[key]}
            fh.write(json.dumps(rec, separators=(",", ":")) + "\n")
        for key in sorted(set(incexc._cw_cache) - known_cw):
            rec = {"kind": "cw", "w": str(Permutation(key)), "value": incexc._cw_cache[key]}
            fh.write(json.dumps(rec, separators=(",", ":")) + "\n")


def _cmd_schubert(args) -> int:
    w = Permutation.from_string(args.perm)
    if args.method == "divdiff":
        p = schubert.schubert_divdiff(w)
    elif args.method == "diagram":
        p = schubert.schubert_diagram(w)
    else:
        p = weylchar.chi(rothe(w), budget=args.budget_dominated)
    _emit(_poly_out(p, args, w.n), args)
    return EXIT_OK


def _cmd_rothe(args) -> int:
    D = rothe(Permutation.from_string(args.perm))
    if args.format == "json":
        _emit(json.dumps(D.to_json(), separators=(",", ":")), args)
    else:
        _emit(str(D), args)
    return EXIT_OK


def _cw_by(method: str, w: Permutation) -> int:
    if method == "ie":
        return incexc.cw_inclusion_exclusion(w)
    if method == "rec":
        return incexc.cw_recursive(w)
    return incexc.cw_augmentation(w)


def _cmd_cw(args) -> int:
    w = Permutation.from_string(args.perm)
    methods = ["ie", "rec"] + (["aug"] if avoids(w) else []) if args.all_methods else [args.method]
    values = {m: _cw_by(m, w) for m in methods}
    if len(set(values.values())) > 1:
        _emit(f"DISAGREE: {values}", args)
        return EXIT_COUNTEREXAMPLE
    value = next(iter(values.values()))
    if args.format == "json":
        _emit(json.dumps({"w": str(w), "c": value, "methods": methods}), args)
    else:
        _emit(str(value), args)
    return EXIT_OK


def _cmd_cw_table(args) -> int:
    lines = ["w,length,c_w,methods_agree"]
    for w in all_permutations(args.n):
        ie = incexc.cw_inclusion_exclusion(w)
        rec = incexc.cw_recursive(w)
        agree = ie == rec
        if avoids(w):
            agree = agree and incexc.cw_augmentation(w) == ie
        lines.append(f"{w},{w.inversions()},{ie},{str(agree).lower()}")
    _emit("\n".join(lines), args)
    return EXIT_OK


def _cmd_verify(args) -> int:
    config = verify.RunConfig(
        max_n=args.max_n,
        jobs=args.jobs,
        seed=args.seed,
        budget_dominated=args.budget_dominated,
        include_timing=args.timing,
    )
    reports = list(verify.run_claim(args.claim, config))
    if args.format == "json":
        text = "\n".join(json.dumps(r.as_dict(), separators=(",", ":")) for r in reports)
    elif args.format == "csv":
        rows = ["claim,subject,verdict,witness"]
        for r in reports:
            witness = (r.witness or "").replace(",", ";")
            rows.append(f"{r.claim},{r.subject},{r.verdict},{witness}")
        text = "\n".join(rows)
    else:
        text = "\n".join(
            f"{r.claim}\t{r.subject}\t{r.verdict}" + (f"\t{r.witness}" if r.witness else "")
            for r in reports
        )
    _emit(text, args)
    return verify.exit_code(reports)


def _cmd_purple(args) -> int:
    s = args.perm_or_diagram.strip()
    if s.startswith("{"):
        D = Diagram.from_json(json.loads(s))
        if args.l is None:
            raise SystemExit("--l is required for diagram input")
        l = args.l
        sigma = None
    else:
        sigma = Permutation.from_string(s)
        D = rothe(sigma)
        l = args.l if args.l is not None else sigma(args.k)
    family = purple_family(D, args.k, l)
    payload = family.to_json()
    if args.characterize:
        if sigma is None:
            raise SystemExit("--characterize requires permutation input")
        result = characterize_monomials(sigma, args.k)
        payload["working"] = sorted(str(m) for m in result.working)
        payload["extra"] = sorted(str(m) for m in result.extra)
    if args.format == "json":
        _emit(json.dumps(payload, separators=(",", ":")), args)
    else:
        lines = [
            f"purple boxes: {sorted(family.boxes)}",
            f"members: {[str(m) for m in sorted(family.members, key=Diagram.box_list)]}",
            f"monomials: {sorted(str(m) for m in family.monomials)}",
        ]
        if args.characterize:
            lines.append(f"working: {payload['working']}")
            lines.append(f"extra: {payload['extra']}")
        _emit("\n".join(lines), args)
    return EXIT_OK


def _cmd_chi(args) -> int:
    D = _parse_diagram(args.diagram)
    p = weylchar.chi(D, budget=args.budget_dominated)
    _emit(_poly_out(p, args, D.n), args)
    return EXIT_OK


def _cmd_alternating_sum(args) -> int:
    w = Permutation.from_string(args.perm)
    u = Word.from_string(args.u)
    result = incexc.alternating_sum(w, u)
    if args.format == "json":
        _emit(json.dumps(result.to_json(), separators=(",", ":")), args)
    else:
        _emit(result.total.format(), args)
    return EXIT_OK


_COMMANDS = {
    "schubert": _cmd_schubert,
    "rothe": _cmd_rothe,
    "cw": _cmd_cw,
    "cw-table": _cmd_cw_table,
    "verify": _cmd_verify,
    "purple": _cmd_purple,
    "chi": _cmd_chi,
    "alternating-sum": _cmd_alternating_sum,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    known_spec: set = set()
    known_cw: set = set()
    if args.cache:
        _load_cache(args.cache)
        known_spec = set(schubert._spec_cache)
        known_cw = set(incexc._cw_cache)
    try:
        code = _COMMANDS[args.command](args)
    except PatternViolationError as exc:
        print(f"pattern violation: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceededError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except SchubpatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.cache:
        _save_cache(args.cache, known_spec, known_cw)
    return code


if __name__ == "__main__":
    sys.exit(main())

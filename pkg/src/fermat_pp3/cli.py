"""Command-line entry point: one executable, subcommand per surface.

Exit codes: 0 success (and no surviving primes), 1 data error,
2 surviving primes in elimination, 64 usage error.

All output is deterministic: JSON uses sorted keys and fixed layout, so
identical invocations on identical inputs are byte-identical.  The
eliminate verdict cache (keyed by file hash, bound and norm bound)
lives beside the forms file unless FERMAT_PP3_CACHE_DIR overrides it.
"""

from __future__ import annotations

import argparse
import datetime
import hashlib
import json
import os
import sys

from . import __version__, bounds, eliminate, frey, ring, screen

EXIT_OK = 0
EXIT_DATA_ERROR = 1
EXIT_SURVIVORS = 2
EXIT_USAGE = 64

CLI_EXPONENT_CAP = 200_000


class UsageError(SystemExit):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _emit_json(payload) -> None:
    print(json.dumps(payload, sort_keys=True, indent=2))


def _bool_flag(text: str) -> bool:
    t = text.strip().lower()
    if t in ("true", "1", "yes"):
        return True
    if t in ("false", "0", "no"):
        return False
    raise argparse.ArgumentTypeError(f"expected true/false, got {text!r}")


def _field_arg(text: str) -> ring.QuadraticField:
    try:
        return ring.QuadraticField(int(text))
    except ValueError as ex:
        raise argparse.ArgumentTypeError(str(ex)) from None


def _sha256(path: str) -> str:
    h = hashlib.sha256()
    with open(path, "rb") as fh:
        h.update(fh.read())
    return h.hexdigest()


def _write_manifest(path: str, argv: list[str], params: dict,
                    input_files: list[str]) -> None:
    manifest = {
        "command_line": argv,
        "input_file_hashes": {f: _sha256(f) for f in sorted(input_files)},
        "tool_version": __version__,
        "parameters": {k: v for k, v in sorted(params.items())},
        "timestamp": datetime.datetime.now(datetime.timezone.utc).isoformat(),
    }
    with open(path, "w") as fh:
        json.dump(manifest, fh, sort_keys=True, indent=2)
        fh.write("\n")


def _jsonable_params(args: argparse.Namespace) -> dict:
    out = {}
    for k, v in vars(args).items():
        if k in ("func", "manifest"):
            continue
        if isinstance(v, ring.QuadraticField):
            v = v.d
        out[k] = v
    return out


# ---------------------------------------------------------------------------
# fields

def _cmd_fields(args) -> int:
    rows = []
    for d in ring.SUPPORTED_D:
        K = ring.QuadraticField(d)
        rows.append({
            "d": d,
            "disc": K.disc,
            "omega": "i" if d == 1 else f"(1+sqrt(-{d}))/2",
            "omega_convention": K.omega_convention.value,
            "unit_count": K.unit_count,
            "splitting_of_3": ring.splitting_type(K, 3).value,
        })
    if args.json:
        _emit_json({"fields": rows})
    else:
        print("d    disc  omega              units  3 is")
        for r in rows:
            print(f"{r['d']:<4} {r['disc']:<5} {r['omega']:<18} "
                  f"{r['unit_count']:<6} {r['splitting_of_3']}")
    return EXIT_OK


# ---------------------------------------------------------------------------
# frey

def _element_json(z: ring.RingElement) -> str:
    return f"{z.x},{z.y}"


def _classification_json(cls: frey.LocalClassification) -> dict:
    exp = cls.conductor_exponent
    out = {
        "reduction": cls.reduction.value,
        "conductor_exponent": sorted(exp) if isinstance(exp, frozenset) else exp,
    }
    if cls.prime is not None:
        out["q"] = _element_json(cls.prime.generator)
        out["norm"] = cls.prime.norm
    if cls.delta_valuation is not None:
        out["delta_valuation"] = cls.delta_valuation
    if cls.p_divides_delta_valuation is not None:
        out["p_divides_delta_valuation"] = cls.p_divides_delta_valuation
    return out


def _cmd_frey(args) -> int:
    K = args.field
    if args.p > CLI_EXPONENT_CAP:
        print(f"error: exponent capped at {CLI_EXPONENT_CAP} on the command line",
              file=sys.stderr)
        return EXIT_DATA_ERROR
    a = ring.parse_element(args.a, K)
    b = ring.parse_element(args.b, K)
    c = ring.parse_element(args.c, K)
    inv = frey.frey_invariants(a, b, c, args.p)
    payload = {
        "field": K.d,
        "p": args.p,
        "relation_holds": inv.relation_holds,
        "degenerate": inv.degenerate,
        "trivial": inv.trivial,
        "a1": _element_json(inv.a1),
        "a3": _element_json(inv.a3),
        "c4": _element_json(inv.c4),
        "c6": _element_json(inv.c6),
        "delta": _element_json(inv.delta),
        "j_num": _element_json(inv.j_num),
        "j_den": _element_json(inv.j_den),
    }
    if not inv.degenerate:
        lam_cls = frey.lambda_exponent(a, b, c, args.p)
        payload["lambda"] = _classification_json(lam_cls)
        if ring.val_lambda(b) >= 1:
            v, pot, inertia = frey.j_valuation_at_lambda(b, args.p)
            payload["lambda"].update({
                "j_valuation": v,
                "pot_mult": pot,
                "p_in_inertia": inertia,
            })
        elif (not c.is_zero() and ring.val_lambda(a) == 0
              and ring.val_lambda(c) == 0):
            payload["lambda"]["cubic_has_root_mod_lambda2"] = frey.cubic_test(
                b, c, args.p)
        classifications = []
        for q in ring.primes_up_to_norm(K, args.norm_bound):
            if q.residue_char == 3:
                continue
            cls = frey.classify_away_from_lambda(inv, q)
            if cls.reduction is not frey.ReductionType.GOOD:
                classifications.append(_classification_json(cls))
        payload["bad_primes"] = classifications
    if args.json:
        _emit_json(payload)
    else:
        print(f"Frey curve over Q(sqrt(-{K.d})), p = {args.p}: "
              f"Y^2 + 3c XY + b^p Y = X^3")
        for key in ("a1", "a3", "c4", "c6", "delta"):
            print(f"  {key:<6} = {payload[key]}")
        print(f"  j      = ({payload['j_num']}) / ({payload['j_den']})")
        print(f"  relation holds: {inv.relation_holds}   degenerate: "
              f"{inv.degenerate}   trivial: {inv.trivial}")
        if "lambda" in payload:
            print(f"  at lambda: {payload['lambda']}")
            for cls in payload["bad_primes"]:
                print(f"  at {cls['q']} (norm {cls['norm']}): {cls['reduction']}"
                      f", exponent {cls['conductor_exponent']}"
                      f", v(delta) = {cls['delta_valuation']}")
    return EXIT_OK


# ---------------------------------------------------------------------------
# bounds

def _cmd_bounds_ck(args) -> int:
    ck, table = bounds.compute_CK(args.case)
    if args.json:
        _emit_json({
            "case": args.case,
            "C_K": ck,
            "table": [{"trace": row.trace_a, "resultant": row.resultant,
                       "factorization": {str(p): e for p, e in row.factorization}}
                      for row in table],
        })
    else:
        print(f"candidate characteristic polynomials x^2 - a*x + 9 vs "
              f"{'x^4 - 9' if args.case == 'quartic' else 'x^12 - 9'}:")
        for row in table:
            fact = " * ".join(f"{p}^{e}" if e > 1 else str(p)
                              for p, e in row.factorization)
            print(f"  a = {row.trace_a:>3}: resultant = {row.resultant:>15} = {fact}")
        print(ck)
    return EXIT_OK


def _cmd_bounds_rcg(args) -> int:
    g = bounds.ray_class_group(args.field, args.m)
    if args.json:
        _emit_json({"field": args.field.d, "m": args.m,
                    "abelian_invariants": list(g.abelian_invariants),
                    "order": g.order})
    else:
        inv = list(g.abelian_invariants)
        name = " x ".join(f"Z/{k}" for k in inv) if inv else "trivial"
        print(f"ray class group of modulus lambda^{args.m} over "
              f"Q(sqrt(-{args.field.d})): {name}  invariants {inv}")
    return EXIT_OK


def _cmd_bounds_aq(args) -> int:
    matches = [q for q in ring.primes_up_to_norm(args.field, args.norm)
               if q.norm == args.norm]
    if not matches:
        print(f"error: no prime of norm {args.norm} in Q(sqrt(-{args.field.d}))",
              file=sys.stderr)
        return EXIT_DATA_ERROR
    q = matches[0]
    aq = bounds.set_Aq(q)
    if args.json:
        _emit_json({"field": args.field.d, "norm": args.norm,
                    "q": _element_json(q.generator), "A": aq})
    else:
        print(f"A(q) for q = ({q.generator}), norm {q.norm}: {aq}")
    return EXIT_OK


def _cmd_bounds_bk(args) -> int:
    rep = bounds.assemble_BK(args.field, args.mk, args.cubic_solvable)
    payload = {
        "field": args.field.d,
        "ell_K": rep.ell_K,
        "C_K": rep.C_K,
        "M_K": rep.M_K,
        "B_K_case1": rep.B_K_case1,
        "B_K_case2": rep.B_K_case2,
    }
    if args.json:
        _emit_json(payload)
    else:
        print(f"ell_K = {rep.ell_K}, C_K = {rep.C_K} "
              f"(cubic solvable: {args.cubic_solvable}), M_K = {rep.M_K}")
        print(f"Case I  bound max(ell_K, C_K)      = {rep.B_K_case1}")
        print("Case II bound max(ell_K, C_K, M_K) = "
              + (str(rep.B_K_case2) if rep.B_K_case2 is not None
                 else "unavailable (M_K not supplied)"))
    return EXIT_OK


# ---------------------------------------------------------------------------
# eliminate

def _eliminate_payload(field: ring.QuadraticField, records, B_K: int,
                       norm_bound: int) -> dict:
    S = eliminate.default_prime_set(field, norm_bound)
    forms = []
    all_survivors: set[int] = set()
    for rec in sorted(records, key=lambda r: (r.level_exponent, r.form_id)):
        rep = eliminate.verdict(rec, B_K, S)
        all_survivors.update(rep.verdict.survivors)
        forms.append({
            "form_id": rep.form_id,
            "level_exponent": rec.level_exponent,
            "qf": list(rec.qf_poly),
            "c_f": rep.c_f,
            "prime_divisors": list(rep.prime_divisors),
            "verdict": rep.verdict.kind,
            "survivors": list(rep.verdict.survivors),
            "per_prime": [{"q": _element_json(q.generator), "norm": q.norm,
                           "norm_B": v} for q, v in rep.per_prime],
        })
    return {
        "field": field.d,
        "B_K": B_K,
        "norm_bound": norm_bound,
        "forms": forms,
        "survivors": sorted(all_survivors),
    }


def _cache_path(forms_path: str) -> str:
    cache_dir = os.environ.get("FERMAT_PP3_CACHE_DIR")
    if cache_dir is None:
        cache_dir = os.path.dirname(os.path.abspath(forms_path))
    return os.path.join(cache_dir, "eliminate_cache.txt")


def _cache_lookup(path: str, key: str) -> dict | None:
    try:
        with open(path) as fh:
            for line in fh:
                stored_key, _, payload = line.rstrip("\n").partition("\t")
                if stored_key == key:
                    return json.loads(payload)
    except (OSError, json.JSONDecodeError):
        return None
    return None


def _cache_store(path: str, key: str, payload: dict) -> None:
    try:
        os.makedirs(os.path.dirname(path) or ".", exist_ok=True)
        with open(path, "a") as fh:
            fh.write(key + "\t" + json.dumps(payload, sort_keys=True) + "\n")
    except OSError:
        pass   # cache is best-effort


def _render_eliminate(payload: dict, as_json: bool) -> None:
    if as_json:
        _emit_json(payload)
        return
    print(f"elimination over Q(sqrt(-{payload['field']})), "
          f"B_K = {payload['B_K']}, prime norms < {payload['norm_bound']}:")
    for form in payload["forms"]:
        kind = form["verdict"]
        if kind == "cm_candidate":
            text = "CM candidate (C_f = 0; excluded by j-invariant integrality)"
        elif kind == "eliminated":
            text = f"eliminated (C_f = {form['c_f']}, all prime divisors <= B_K)"
        else:
            text = f"SURVIVORS {form['survivors']} (C_f = {form['c_f']})"
        print(f"  form {form['form_id']} (level lambda^{form['level_exponent']}): {text}")
    if payload["survivors"]:
        print(f"surviving primes: {payload['survivors']}")
    else:
        print("no surviving primes")


def _cmd_eliminate(args) -> int:
    field = args.field
    if args.bk is not None:
        B_K = args.bk
    else:
        rep = bounds.assemble_BK(field, args.mk, args.cubic_solvable)
        B_K = rep.B_K_case2 if rep.B_K_case2 is not None else rep.B_K_case1
    with open(args.forms) as fh:
        records = eliminate.parse_forms(fh)
    records = [r for r in records if r.field == field]
    if not records:
        print(f"error: no forms for d={field.d} in {args.forms}", file=sys.stderr)
        return EXIT_DATA_ERROR

    key = f"{_sha256(args.forms)} bk={B_K} nb={args.norm_bound}"
    payload = None
    if not args.no_cache:
        payload = _cache_lookup(_cache_path(args.forms), key)
    if payload is None:
        payload = _eliminate_payload(field, records, B_K, args.norm_bound)
        if not args.no_cache:
            _cache_store(_cache_path(args.forms), key, payload)
    _render_eliminate(payload, args.json)
    return EXIT_SURVIVORS if payload["survivors"] else EXIT_OK


# ---------------------------------------------------------------------------
# screen

def _zeta3_json(z: screen.Zeta3Verdict | None):
    if z is None:
        return None
    return {"kind": z.kind, "witness_prime": z.witness_prime,
            "primes_tested": z.primes_tested, "reason": z.reason}


def _screen_payload(verdicts, summary, signature: str) -> dict:
    rows = []
    for v in verdicts:
        row = {"label": v.label, "degree": v.degree}
        if signature == "pp3":
            row.update({
                "zeta3": _zeta3_json(v.zeta3),
                "primes_above_3": v.primes_above_3,
                "h_plus_one": v.h_plus_one,
                "passes_pp3": v.passes_pp3,
            })
        else:
            row.update({
                "ramified2": v.ramified2,
                "h_plus_one": v.h_plus_one,
                "passes_pp2": v.passes_pp2,
            })
        rows.append(row)
    return {"signature": signature, "verdicts": rows,
            "summary": {str(k): v for k, v in summary.items()}}


def _fmt_tri(value) -> str:
    return "unknown" if value is None else ("yes" if value else "no")


def _render_screen(payload: dict, as_json: bool, as_csv: bool) -> None:
    if as_json:
        _emit_json(payload)
        return
    sig = payload["signature"]
    if as_csv:
        if sig == "pp3":
            print("label,degree,zeta3,primes_above_3,h_plus_one,passes_pp3")
            for r in payload["verdicts"]:
                z = r["zeta3"]["kind"] if r["zeta3"] else ""
                print(f"{r['label']},{r['degree']},{z},"
                      f"{'' if r['primes_above_3'] is None else r['primes_above_3']},"
                      f"{_fmt_tri(r['h_plus_one'])},{_fmt_tri(r['passes_pp3'])}")
        else:
            print("label,degree,ramified2,h_plus_one,passes_pp2")
            for r in payload["verdicts"]:
                print(f"{r['label']},{r['degree']},{_fmt_tri(r['ramified2'])},"
                      f"{_fmt_tri(r['h_plus_one'])},{_fmt_tri(r['passes_pp2'])}")
        return
    for r in payload["verdicts"]:
        if sig == "pp3":
            z = r["zeta3"]
            print(f"  {r['label']:<22} deg {r['degree']:<3} zeta3: {z['kind']:<13} "
                  f"primes above 3: {r['primes_above_3'] if r['primes_above_3'] is not None else '?'}  "
                  f"h+=1: {_fmt_tri(r['h_plus_one']):<7} passes: {_fmt_tri(r['passes_pp3'])}")
        else:
            print(f"  {r['label']:<22} deg {r['degree']:<3} "
                  f"2 totally ramified: {_fmt_tri(r['ramified2']):<7} "
                  f"h+=1: {_fmt_tri(r['h_plus_one']):<7} passes: {_fmt_tri(r['passes_pp2'])}")
    print("per-degree summary:")
    for deg, row in payload["summary"].items():
        cells = "  ".join(f"{k}={v}" for k, v in row.items())
        print(f"  degree {deg}: {cells}")


def _cmd_screen(args) -> int:
    if args.mode == "tower":
        if args.n is None:
            print("error: screen tower requires --n", file=sys.stderr)
            return EXIT_USAGE
        f = screen.tower_poly(args.n)
        if args.json:
            _emit_json({"n": args.n, "degree": len(f) - 1, "coefficients": f})
        else:
            from . import polys
            print(polys.to_text(f))
        return EXIT_OK
    if args.input is None or args.signature is None:
        print("error: screen requires --input and --signature", file=sys.stderr)
        return EXIT_USAGE
    with open(args.input) as fh:
        records, skipped = screen.parse_records(fh)
    if skipped:
        print(f"warning: skipped {skipped} malformed record(s)", file=sys.stderr)
    if not records:
        print("error: no usable records", file=sys.stderr)
        return EXIT_DATA_ERROR
    if args.signature == "pp3":
        verdicts, summary = screen.screen_pp3(records, args.budget)
    else:
        verdicts, summary = screen.screen_pp2(records, args.budget)
    _render_screen(_screen_payload(verdicts, summary, args.signature),
                   args.json, args.csv)
    return EXIT_OK


# ---------------------------------------------------------------------------
# pipeline

def _cmd_pipeline(args) -> int:
    field = args.field
    payload: dict = {"field": field.d}
    ck_solv, _ = bounds.compute_CK("quartic")
    ck_unsolv, _ = bounds.compute_CK("duodecic")
    payload["C_K"] = {"cubic_solvable": ck_solv, "cubic_unsolvable": ck_unsolv}
    payload["ray_class_groups"] = {
        str(m): list(bounds.ray_class_group(field, m).abelian_invariants)
        for m in (0, 1)}
    solvable = args.cubic_solvable
    reports = {}
    for label, flag in (("cubic_solvable", True), ("cubic_unsolvable", False)):
        rep = bounds.assemble_BK(field, args.mk, flag)
        reports[label] = {"ell_K": rep.ell_K, "C_K": rep.C_K,
                          "B_K_case1": rep.B_K_case1, "B_K_case2": rep.B_K_case2}
    payload["bounds"] = reports
    if solvable is None:
        chosen = reports["cubic_unsolvable"]    # conservative
    else:
        chosen = reports["cubic_solvable" if solvable else "cubic_unsolvable"]
    B_K = chosen["B_K_case2"] if chosen["B_K_case2"] is not None else chosen["B_K_case1"]
    payload["B_K"] = B_K
    exit_code = EXIT_OK
    if args.forms:
        with open(args.forms) as fh:
            records = [r for r in eliminate.parse_forms(fh) if r.field == field]
        if not records:
            print(f"error: no forms for d={field.d} in {args.forms}", file=sys.stderr)
            return EXIT_DATA_ERROR
        payload["elimination"] = _eliminate_payload(field, records, B_K,
                                                    args.norm_bound)
        if payload["elimination"]["survivors"]:
            exit_code = EXIT_SURVIVORS
    if args.json:
        _emit_json(payload)
    else:
        print(f"pipeline for Q(sqrt(-{field.d})):")
        print(f"  C_K: {ck_solv} (cubic solvable) / {ck_unsolv} (otherwise)")
        print(f"  ray class groups lambda^0, lambda^1: "
              f"{payload['ray_class_groups']['0']} {payload['ray_class_groups']['1']}")
        print(f"  bounds: {reports}")
        print(f"  B_K used: {B_K}")
        if "elimination" in payload:
            _render_eliminate(payload["elimination"], as_json=False)
    return exit_code


# ---------------------------------------------------------------------------
# parser assembly

def build_parser() -> _Parser:
    parser = _Parser(prog="fermat-pp3",
                     description=__doc__.splitlines()[0])
    parser.add_argument("--manifest", metavar="PATH",
                        help="write a reproducibility manifest to PATH")
    sub = parser.add_subparsers(dest="command", metavar="COMMAND")

    p = sub.add_parser("fields", help="list the five supported fields")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_fields)

    p = sub.add_parser("frey", help="Frey-curve invariants and local data")
    p.add_argument("--field", type=_field_arg, required=True)
    p.add_argument("--a", required=True, metavar="X,Y")
    p.add_argument("--b", required=True, metavar="X,Y")
    p.add_argument("--c", required=True, metavar="X,Y")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--norm-bound", type=int, default=1000)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_frey)

    p = sub.add_parser("bounds", help="irreducibility constants and bound assembly")
    bsub = p.add_subparsers(dest="bounds_command", metavar="WHAT")
    pc = bsub.add_parser("ck", help="largest prime over the 13 resultants")
    pc.add_argument("--case", choices=("quartic", "duodecic"), required=True)
    pc.add_argument("--json", action="store_true")
    pc.set_defaults(func=_cmd_bounds_ck)
    pr = bsub.add_parser("rcg", help="ray class group of modulus lambda^m")
    pr.add_argument("--field", type=_field_arg, required=True)
    pr.add_argument("--m", type=int, required=True)
    pr.add_argument("--json", action="store_true")
    pr.set_defaults(func=_cmd_bounds_rcg)
    pa = bsub.add_parser("aq", help="Hasse trace set A(q)")
    pa.add_argument("--field", type=_field_arg, required=True)
    pa.add_argument("--norm", type=int, required=True)
    pa.add_argument("--json", action="store_true")
    pa.set_defaults(func=_cmd_bounds_aq)
    pb = bsub.add_parser("bk", help="assemble B_K = max(ell_K, C_K, M_K)")
    pb.add_argument("--field", type=_field_arg, required=True)
    pb.add_argument("--mk", type=int, default=None)
    pb.add_argument("--cubic-solvable", type=_bool_flag, required=True)
    pb.add_argument("--json", action="store_true")
    pb.set_defaults(func=_cmd_bounds_bk)

    p = sub.add_parser("eliminate", help="newform elimination over ingested data")
    p.add_argument("--field", type=_field_arg, required=True)
    p.add_argument("--forms", required=True, metavar="FILE")
    p.add_argument("--norm-bound", type=int, default=50)
    p.add_argument("--bk", type=int, default=None,
                   help="explicit B_K (otherwise assembled from --cubic-solvable/--mk)")
    p.add_argument("--auto-bk", action="store_true",
                   help="assemble B_K from the torsion table and C_K")
    p.add_argument("--cubic-solvable", type=_bool_flag, default=False)
    p.add_argument("--mk", type=int, default=None)
    p.add_argument("--no-cache", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_eliminate)

    p = sub.add_parser("screen", help="classify number-field records")
    p.add_argument("mode", nargs="?", choices=("tower",),
                   help="'tower' prints the n-th tower polynomial")
    p.add_argument("--input", metavar="FILE")
    p.add_argument("--signature", choices=("pp3", "pp2"))
    p.add_argument("--budget", type=int, default=50)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--json", action="store_true")
    p.add_argument("--csv", action="store_true")
    p.set_defaults(func=_cmd_screen)

    p = sub.add_parser("pipeline", help="ck, rcg, bk and optional elimination in one run")
    p.add_argument("--field", type=_field_arg, required=True)
    p.add_argument("--mk", type=int, default=None)
    p.add_argument("--cubic-solvable", type=_bool_flag, default=None)
    p.add_argument("--forms", metavar="FILE", default=None)
    p.add_argument("--norm-bound", type=int, default=50)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_pipeline)

    return parser


_COORD_FLAGS = ("--a", "--b", "--c")


def _merge_coordinate_flags(argv: list[str]) -> list[str]:
    """Join `--b -1,0` into `--b=-1,0` so negative coordinates parse."""
    out = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok in _COORD_FLAGS and i + 1 < len(argv) and argv[i + 1].startswith("-"):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
        else:
            out.append(tok)
            i += 1
    return out


def dispatch(argv: list[str]) -> int:
    parser = build_parser()
    args = parser.parse_args(_merge_coordinate_flags(argv))
    if not hasattr(args, "func"):
        parser.print_usage(sys.stderr)
        return EXIT_USAGE
    if args.command == "bounds" and args.bounds_command is None:
        parser.print_usage(sys.stderr)
        return EXIT_USAGE
    input_files = [f for f in (getattr(args, "forms", None),
                               getattr(args, "input", None)) if f]
    try:
        code = args.func(args)
    except (ValueError, OSError, AssertionError) as ex:
        print(f"error: {ex}", file=sys.stderr)
        return EXIT_DATA_ERROR
    if args.manifest:
        _write_manifest(args.manifest, argv, _jsonable_params(args), input_files)
    return code


def main() -> None:
    sys.exit(dispatch(sys.argv[1:]))


if __name__ == "__main__":
    main()

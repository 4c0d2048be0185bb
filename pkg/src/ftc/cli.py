"""Command-line front end.

Subcommands: validate | lambda-group | gen | invariants | certify.

Exit codes are strict: 0 = success, 1 = mathematical failure or violation,
2 = usage or parse error.  The environment variable FTC_SEED overrides the
default seed; an explicit --seed flag wins over the environment.  Output is
byte-stable for identical (input, flags, seed).
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import jsonio
from .errors import (
    InfiniteGroupError,
    SplittingError,
    UnsupportedFieldError,
)
from .fields import Field
from .fusion import lambda_group, validate_fusion
from .generators import (
    BUILTIN_GROUPS,
    gen_dual_group_algebra,
    gen_group_algebra,
    gen_sweedler,
    gen_taft,
    validate_group_table,
    zn_table,
)
from .hopf import (
    central_grouplikes,
    grouplike_independence,
    grouplikes,
    pivotal_grouplikes,
    verify_hopf,
)
from .algebra import center, verify_algebra
from .pipeline import run_all
from .repmod import DEFAULT_SEED, fusion_from_hopf

MAX_GROUP_ORDER = 24


def parse_int_poly(text: str):
    """Parse an integer polynomial like x^2+x+1 or 2*x^3-x+5 into coefficients."""
    s = text.replace(" ", "").replace("*", "")
    if not s:
        raise ValueError("empty polynomial")
    # split into signed terms
    terms = []
    cur = ""
    for ch in s:
        if ch in "+-" and cur:
            terms.append(cur)
            cur = ch if ch == "-" else ""
        else:
            cur += ch
    terms.append(cur)
    coeffs = {}
    for term in terms:
        if not term or term in "+-":
            raise ValueError(f"bad term in polynomial {text!r}")
        sign = 1
        if term.startswith("-"):
            sign, term = -1, term[1:]
        if "x" in term:
            head, _, tail = term.partition("x")
            coeff = int(head) if head else 1
            if tail.startswith("^"):
                power = int(tail[1:])
            elif tail == "":
                power = 1
            else:
                raise ValueError(f"bad term in polynomial {text!r}")
        else:
            coeff = int(term)
            power = 0
        coeffs[power] = coeffs.get(power, 0) + sign * coeff
    deg = max(coeffs)
    return [coeffs.get(i, 0) for i in range(deg + 1)]


def parse_field_flag(text: str) -> Field:
    """Field micro-syntax: Q | Fp:7 | ext:Q:x^2+x+1 | ext:Fp:7:x^2+1."""
    parts = text.split(":")
    if parts[0] == "Q" and len(parts) == 1:
        return Field.rationals()
    if parts[0] == "Fp" and len(parts) == 2:
        return Field.prime(int(parts[1]))
    if parts[0] == "ext":
        if len(parts) == 3 and parts[1] == "Q":
            return Field.extension(Field.rationals(), parse_int_poly(parts[2]))
        if len(parts) == 4 and parts[1] == "Fp":
            return Field.extension(Field.prime(int(parts[2])), parse_int_poly(parts[3]))
    raise ValueError(f"cannot parse field spec {text!r}")


def resolve_seed(args) -> int:
    if getattr(args, "seed", None) is not None:
        return args.seed
    env = os.environ.get("FTC_SEED")
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise ValueError(f"FTC_SEED must be an integer, got {env!r}")
    return DEFAULT_SEED


def resolve_group(text: str):
    """Zn:<k>, S3, D4, Q8, or a path to a JSON multiplication table."""
    if text.startswith("Zn:"):
        n = int(text.split(":", 1)[1])
        if not 1 <= n <= MAX_GROUP_ORDER:
            raise ValueError(f"cyclic group order must be in 1..{MAX_GROUP_ORDER}")
        return zn_table(n)
    if text in BUILTIN_GROUPS:
        return BUILTIN_GROUPS[text]()
    if os.path.exists(text):
        obj = jsonio.load_path(text)
        table = obj["table"] if isinstance(obj, dict) else obj
        if len(table) > MAX_GROUP_ORDER:
            raise ValueError(f"group tables are limited to {MAX_GROUP_ORDER} elements")
        validate_group_table(table)
        return table
    raise ValueError(
        f"unknown group {text!r}: use Zn:<k>, one of {sorted(BUILTIN_GROUPS)}, "
        "or a JSON table file"
    )


def _write_output(args, text: str):
    if getattr(args, "output", None):
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_validate(args) -> int:
    try:
        obj = jsonio.load_path(args.path)
        kind = jsonio.detect_kind(obj)
    except (OSError, json.JSONDecodeError, jsonio.SchemaError) as err:
        print(f"parse error: {err}", file=sys.stderr)
        return 2
    try:
        if kind == "fusion":
            ring, blocks = jsonio.fusion_from_json(obj)
            report = validate_fusion(ring)
        elif kind == "hopf":
            h = jsonio.hopf_from_json(obj)
            report = verify_hopf(h)
        else:
            a = jsonio.algebra_from_json(obj)
            report = verify_algebra(a)
    except (jsonio.SchemaError, ValueError) as err:
        print(f"parse error: {err}", file=sys.stderr)
        return 2
    print(f"kind: {kind}")
    if report.is_valid:
        print("valid")
        return 0
    for v in report.violations:
        print(str(v))
    print(f"invalid: {len(report.violations)} violation(s)")
    return 1


def cmd_lambda_group(args) -> int:
    try:
        obj = jsonio.load_path(args.path)
        if jsonio.detect_kind(obj) != "fusion":
            print("lambda-group needs a fusion file", file=sys.stderr)
            return 2
        ring, blocks = jsonio.fusion_from_json(obj)
        field = parse_field_flag(args.field) if args.field else None
    except (OSError, json.JSONDecodeError, jsonio.SchemaError, ValueError) as err:
        print(f"parse error: {err}", file=sys.stderr)
        return 2
    report = validate_fusion(ring)
    if not report.is_valid:
        print(str(report))
        return 1
    try:
        inv, funcs = lambda_group(ring, blocks, args.char, field=field)
    except InfiniteGroupError as err:
        print(f"not categorifiable: {err}")
        return 1
    except SplittingError as err:
        print(f"field cannot evaluate the characters: {err}")
        return 1
    print(f"labels: {' '.join(ring.labels)}")
    print(f"characteristic: {args.char}")
    print(f"group: {inv.describe()}")
    print(f"order: {inv.order}")
    for i, lam in enumerate(funcs):
        exps = " ".join(f"{e}/{lam.modulus}" for e in lam.exponents)
        line = f"lambda[{i}]: exponents {exps}"
        if lam.values is not None:
            vals = " ".join(field.to_str(v) for v in lam.values)
            line += f" values {vals}"
        print(line)
    return 0


def cmd_gen(args) -> int:
    try:
        field = parse_field_flag(args.field)
        if args.kind in ("group-algebra", "dual-group-algebra"):
            if not args.group:
                raise ValueError("--group is required for group algebra kinds")
            table = resolve_group(args.group)
            if args.kind == "group-algebra":
                h = gen_group_algebra(table, field)
            else:
                h = gen_dual_group_algebra(table, field)
        elif args.kind == "taft":
            if args.n is None or args.q is None:
                raise ValueError("taft needs --n and --q")
            if args.q.startswith("t"):
                power = 1 if args.q == "t" else int(args.q.split("^", 1)[1])
                q = field.pow(field.generator(), power)
            else:
                q = field.from_int(int(args.q))
            h = gen_taft(args.n, q, field)
        elif args.kind == "sweedler":
            h = gen_sweedler(field)
        else:
            raise ValueError(f"unknown kind {args.kind!r}")
    except (ValueError, UnsupportedFieldError) as err:
        print(f"invalid parameters: {err}", file=sys.stderr)
        return 2
    _write_output(args, jsonio.dumps(jsonio.hopf_to_json(h)))
    return 0


def _load_hopf(path: str):
    obj = jsonio.load_path(path)
    if jsonio.detect_kind(obj) != "hopf":
        raise jsonio.SchemaError("expected a Hopf algebra file")
    return jsonio.hopf_from_json(obj)


def cmd_invariants(args) -> int:
    try:
        h = _load_hopf(args.path)
        seed = resolve_seed(args)
    except (OSError, json.JSONDecodeError, jsonio.SchemaError, ValueError) as err:
        print(f"parse error: {err}", file=sys.stderr)
        return 2
    report = verify_hopf(h)
    if not report.is_valid:
        print(str(report))
        return 1
    f = h.alg.field
    print(f"field: {f!r}")
    print(f"dimension: {h.alg.dim}")
    try:
        gs = grouplikes(h)
        cg = central_grouplikes(h, gs)
        piv = pivotal_grouplikes(h, gs)
        zdim = center(h.alg).dim
        print(f"grouplikes: {len(gs)}")
        for e in gs.elements:
            print(f"  {h.alg.to_str(e)}")
        print(f"central grouplikes: {len(cg)}")
        for e in cg.elements:
            print(f"  {h.alg.to_str(e)}")
        print(f"pivotal: {len(piv)}")
        for e in piv:
            print(f"  {h.alg.to_str(e)}")
        print(f"center dimension: {zdim}")
        print(f"independent: {grouplike_independence(gs, f)}")
        ring, blocks, catalog = fusion_from_hopf(h, seed)
        dims = " ".join(
            f"{lab}:{catalog.simples[i].dim}" for i, lab in enumerate(ring.labels)
        )
        print(f"simples: {dims}")
        print("blocks: " + " ".join("[" + " ".join(c) + "]" for c in blocks.classes))
        print("fusion:")
        for (a, b, c) in ring.nonzero_triples():
            la, lb, lc = ring.labels[a], ring.labels[b], ring.labels[c]
            print(f"  N({la},{lb};{lc}) = {ring.n(la, lb, lc)}")
        if args.output:
            with open(args.output, "w", encoding="utf-8") as fh:
                fh.write(jsonio.dumps(jsonio.fusion_to_json(ring, blocks)))
    except (SplittingError, UnsupportedFieldError) as err:
        hint = getattr(err, "hint", None)
        print(f"cannot complete invariants: {err}")
        if hint:
            print(f"hint: {hint}")
        return 1
    return 0


def cmd_certify(args) -> int:
    try:
        h = _load_hopf(args.path)
        seed = resolve_seed(args)
    except (OSError, json.JSONDecodeError, jsonio.SchemaError, ValueError) as err:
        print(f"parse error: {err}", file=sys.stderr)
        return 2
    name = os.path.splitext(os.path.basename(args.path))[0]
    cert = run_all(h, seed, instance_name=name)
    for c in cert.checks:
        print(f"{c.name}: {c.status}")
    text = cert.to_json() + "\n"
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    print("result: " + ("PASS" if cert.all_pass else "FAIL"))
    return 0 if cert.all_pass else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="ftc",
        description="invariants of finite tensor categories from fusion or Hopf data",
    )
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("validate", help="check a fusion/Hopf/algebra JSON file")
    v.add_argument("path")
    v.set_defaults(fn=cmd_validate)

    lg = sub.add_parser("lambda-group", help="grading-function group of a fusion file")
    lg.add_argument("path")
    lg.add_argument("--char", type=int, default=0, help="field characteristic (default 0)")
    lg.add_argument("--field", help="evaluate characters in this field (Q | Fp:7 | ext:...)")
    lg.set_defaults(fn=cmd_lambda_group)

    g = sub.add_parser("gen", help="generate a built-in Hopf algebra instance")
    g.add_argument(
        "kind", choices=["group-algebra", "dual-group-algebra", "taft", "sweedler"]
    )
    g.add_argument("--group", help="Zn:<k> | S3 | D4 | Q8 | table.json")
    g.add_argument("--n", type=int, help="Taft parameter n")
    g.add_argument("--q", help="Taft parameter q (integer or t^k)")
    g.add_argument("--field", required=True, help="Q | Fp:7 | ext:Q:x^2+x+1")
    g.add_argument("-o", "--output", help="write JSON here instead of stdout")
    g.set_defaults(fn=cmd_gen)

    inv = sub.add_parser("invariants", help="grouplike/pivotal/fusion report for a Hopf file")
    inv.add_argument("path")
    inv.add_argument("--seed", type=int)
    inv.add_argument("-o", "--output", help="also export the fusion table as JSON")
    inv.set_defaults(fn=cmd_invariants)

    c = sub.add_parser("certify", help="run every check and emit a certificate")
    c.add_argument("path")
    c.add_argument("--seed", type=int)
    c.add_argument("-o", "--output", help="write the certificate JSON here")
    c.set_defaults(fn=cmd_certify)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as err:
        return 2 if err.code not in (0, None) else 0
    try:
        return args.fn(args)
    except ValueError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

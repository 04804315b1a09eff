"""Command-line front end.

Exit codes: 0 ok, 2 usage or invalid field, 3 condition violated,
4 malformed input, 5 verification failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from .errors import (
    BoundExceeded,
    ConditionViolated,
    FieldError,
    MissingK,
    NotABijection,
    SearchExhausted,
    SizeMismatch,
)
from .families import (
    FAMILIES,
    DicksonParams,
    MobiusParams,
    MonomialParams,
    RedeiParams,
    build_interleaver,
)
from .gf import FieldSpec, build_field
from .perm import Permutation, cycle_structure, two_row
from .skolem import (
    KINDS,
    SkolemSequence,
    from_text,
    generate,
    modify,
    prescribed_cycle_interleaver,
    prescribed_cycle_plan,
    skolem_interleaver,
    to_text,
    validate,
)
from .verify import TAGS, SweepConfig, run_sweep, summarize

EXIT_OK, EXIT_USAGE, EXIT_CONDITION, EXIT_INPUT, EXIT_VERIFY = 0, 2, 3, 4, 5
FORMATS = ("table", "json", "csv")

REPRODUCTIONS = {
    "monomial-13": ("monomial", {"p": 13, "n": 11}),
    "dickson-11": ("dickson", {"p": 11, "n": 19, "a": 1}),
    "skolem-hooked-6": ("skolem", {"kind": "hooked", "n": 6}),
}
# The hooked example sequence from the literature; reproduced as given rather than regenerated.
HOOKED_6 = (2, 5, 2, 6, 1, 1, 5, 3, 4, 6, 3, 0, 4)


class CliError(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


# --------------------------------------------------------------------------
# shared helpers


def _field(args) -> FieldSpec:
    poly = [int(c) for c in args.poly.split(",")] if getattr(args, "poly", None) else None
    return build_field(args.p, args.m, poly)


def _family_params(F: FieldSpec, family: str, args):
    if args.n is None and family != "mobius":
        raise CliError(EXIT_USAGE, f"{family} needs -n")
    if family == "monomial":
        return MonomialParams(args.n)
    if family == "dickson":
        return DicksonParams(args.n, 0 if args.a is None else args.a)
    if family == "mobius":
        vals = [args.a, args.b, args.c, args.d]
        if any(v is None for v in vals):
            raise CliError(EXIT_USAGE, "mobius needs -a -b -c -d")
        return MobiusParams.from_ints(F, *vals)
    if family == "redei":
        if args.a is None:
            raise CliError(EXIT_USAGE, "redei needs -a")
        return RedeiParams.from_ints(F, args.n, args.a)
    raise CliError(EXIT_USAGE, f"unknown family {family!r}")


def _params_dict(F: FieldSpec, family: str, params) -> dict:
    if family == "mobius":
        return dict(zip("abcd", params.to_ints(F)))
    if family == "redei":
        return {"n": params.n, "a": F.to_int(params.a)}
    if family == "dickson":
        return {"n": params.n, "a": params.a}
    return {"n": params.n}


def _emit_perm(perm: Permutation, fmt: str, base: int, provenance: dict, bare: bool) -> str:
    if bare:
        return two_row(perm, base)
    if fmt == "json":
        return json.dumps({**provenance, "size": perm.size, "image": list(perm.image)}) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["index", "image"])
        w.writerows((i + base, v + base) for i, v in enumerate(perm.image))
        return buf.getvalue()
    head = "".join(f"# {k}: {v if isinstance(v, str) else json.dumps(v)}\n" for k, v in provenance.items())
    return head + two_row(perm, base)


def _emit_census(perm: Permutation, fmt: str) -> str:
    cs = cycle_structure(perm)
    if fmt == "json":
        return json.dumps({"size": perm.size, "census": cs.as_json_dict(), "fixed_points": sorted(cs.fixed_points)}) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["length", "count"])
        w.writerows(cs.counts.items())
        return buf.getvalue()
    return f"{cs}\nfixed {{{','.join(map(str, sorted(cs.fixed_points)))}}}\n"


# --------------------------------------------------------------------------
# commands


def cmd_field(args) -> str:
    F = _field(args)
    alpha = F.to_int(F.alpha)
    if args.format == "json":
        data = {"p": F.p, "m": F.m, "q": F.q, "primitive_poly": list(F.primitive_poly), "alpha": alpha, "header": F.header()}
        if args.tables:
            data["exp"] = list(F.exp_table)
        return json.dumps(data) + "\n"
    if args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["code", "vector"])
        w.writerows((c, F.to_int(c)) for c in F.codes())
        return buf.getvalue()
    lines = [
        f"q = {F.q} (p = {F.p}, m = {F.m})",
        f"primitive polynomial = {_poly_str(F.primitive_poly, F.p)}",
        f"alpha = {alpha}",
        f"header: {F.header()}",
    ]
    if args.tables:
        lines.append("code vector")
        lines.extend(f"{c} {F.to_int(c)}" for c in F.codes())
    return "\n".join(lines) + "\n"


def _poly_str(coeffs, p: int) -> str:
    terms = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = coeffs[k] % p
        if not c:
            continue
        mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
        terms.append(str(c) if not mono else (mono if c == 1 else f"{c}{mono}"))
    return " + ".join(terms)


def _build(args) -> tuple[FieldSpec, Permutation, dict]:
    F = _field(args)
    params = _family_params(F, args.family, args)
    perm = build_interleaver(F, args.family, params)
    provenance = {"field": F.header(), "family": args.family, "params": _params_dict(F, args.family, params)}
    return F, perm, provenance


def cmd_interleave(args) -> str:
    _, perm, provenance = _build(args)
    return _emit_perm(perm, args.format, args.base, provenance, args.two_row)


def _read_perm(path: str) -> Permutation:
    try:
        text = sys.stdin.read() if path == "-" else open(path, encoding="utf-8").read()
    except OSError as exc:
        raise CliError(EXIT_INPUT, f"cannot read {path}: {exc}") from None
    try:
        return Permutation.from_json(text)
    except (ValueError, KeyError, TypeError, NotABijection, SizeMismatch) as exc:
        raise CliError(EXIT_INPUT, f"malformed permutation: {exc}") from None


def cmd_cycles(args) -> str:
    if args.file is not None:
        perm = _read_perm(args.file)
    elif args.family == "identity":
        if not args.size:
            raise CliError(EXIT_USAGE, "identity needs --size")
        perm = Permutation.identity(args.size)
    elif args.family in FAMILIES:
        _, perm, _ = _build(args)
    else:
        raise CliError(EXIT_USAGE, "give a family or --file")
    return _emit_census(perm, args.format)


def cmd_verify(args, out) -> int:
    q_list = tuple(int(v) for v in args.q_list.split(",")) if args.q_list else None
    cfg = SweepConfig(
        q_min=args.q_min, q_max=args.q_max, q_list=q_list, n_max=args.n_max, jn_max=args.jn_max,
        j_max=args.j_max, reading=args.reading, node_limit=args.node_limit, jobs=args.jobs,
    )
    summary = summarize(args.tag, _tee(run_sweep(args.tag, cfg), out, args.quiet))
    print(summary.line(), file=sys.stderr)
    return EXIT_OK if summary.disagree == 0 else EXIT_VERIFY


def _tee(records, out, quiet: bool):
    for rec in records:
        if not quiet:
            out.write(json.dumps(rec, ensure_ascii=False) + "\n")
        yield rec


def _read_sequence(path: str, kind: str) -> SkolemSequence:
    try:
        text = sys.stdin.read() if path == "-" else open(path, encoding="utf-8").read()
    except OSError as exc:
        raise CliError(EXIT_INPUT, f"cannot read {path}: {exc}") from None
    try:
        seq = from_text(text)
    except (ValueError, KeyError) as exc:
        raise CliError(EXIT_INPUT, f"malformed sequence: {exc}") from None
    if seq.kind != kind:
        raise CliError(EXIT_INPUT, f"file holds a {seq.kind} sequence, not {kind}")
    ok, why = validate(seq)
    if not ok:
        raise CliError(EXIT_INPUT, f"invalid {kind} sequence: {why}")
    return seq


def cmd_skolem(args) -> str:
    if args.kind == "prescribed":
        if not args.spec:
            raise CliError(EXIT_USAGE, "prescribed needs --spec like 1:2,3:3")
        spec = {int(j): int(c) for j, c in (part.split(":") for part in args.spec.split(","))}
        plan = prescribed_cycle_plan(spec, args.strict)
        perm = prescribed_cycle_interleaver(spec, args.strict)
        if args.format == "json":
            return json.dumps({"spec": plan.spec, "blocks": [[b.j, b.order] for b in plan.blocks], "notes": list(plan.notes),
                               "image": list(perm.image)}) + "\n"
        notes = "".join(f"# {n}\n" for n in plan.notes)
        return notes + f"# census {cycle_structure(perm)}\n" + two_row(perm, 1)
    if args.file is not None:
        seq = _read_sequence(args.file, args.kind)
    else:
        if args.kind == "k_extended" and args.k is None:
            raise MissingK("k_extended needs -k")
        seq = generate(args.kind, args.n, args.k, args.j)
    mod = modify(seq) if args.modify or args.interleave else None
    perm = skolem_interleaver(mod) if args.interleave else None
    if args.format == "json":
        data = {"kind": seq.kind, "n": seq.order, "j": seq.j, "k": seq.k, "sequence": list(seq.entries)}
        if args.modify:
            data["modified"] = list(mod.entries)
        if perm is not None:
            data["interleaver"] = [v + 1 for v in perm.image]
        return json.dumps(data) + "\n"
    out = to_text(seq)
    if args.modify:
        out += " ".join(map(str, mod.entries)) + "\n"
    if perm is not None:
        out += two_row(perm, 1)
    return out


def cmd_reproduce(args) -> str:
    family, kw = REPRODUCTIONS[args.id]
    if family == "skolem":
        seq = SkolemSequence("hooked", 6, HOOKED_6, 12)
        return two_row(skolem_interleaver(modify(seq)), 1)
    F = build_field(kw["p"])
    params = MonomialParams(kw["n"]) if family == "monomial" else DicksonParams(kw["n"], kw["a"])
    return two_row(build_interleaver(F, family, params), 0)


# --------------------------------------------------------------------------
# parser


def _add_field_args(p, required: bool = True):
    p.add_argument("-p", type=int, required=required, help="characteristic")
    p.add_argument("-m", type=int, default=1, help="extension degree")
    p.add_argument("--poly", help="primitive polynomial coefficients, constant term first, comma separated")


def _add_family_args(p):
    p.add_argument("-n", type=int, help="exponent or degree")
    p.add_argument("-a", type=int, help="Dickson a in {-1,0,1}; Redei a; Moebius a (vector encodings)")
    p.add_argument("-b", type=int)
    p.add_argument("-c", type=int)
    p.add_argument("-d", type=int)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ffinterleave", description="Finite-field and Skolem interleavers.")
    sub = parser.add_subparsers(dest="command", required=True)

    f = sub.add_parser("field", help="build F_{p^m} and report its primitive polynomial")
    _add_field_args(f)
    f.add_argument("--tables", action="store_true", help="also print code -> vector encoding")
    f.add_argument("--format", choices=FORMATS, default="table")

    i = sub.add_parser("interleave", help="construct a family interleaver")
    i.add_argument("family", choices=FAMILIES)
    _add_field_args(i)
    _add_family_args(i)
    i.add_argument("--format", choices=FORMATS, default="table")
    i.add_argument("--two-row", action="store_true", help="bare two-row matrix only")
    i.add_argument("--base", type=int, default=0, choices=(0, 1))

    c = sub.add_parser("cycles", help="cycle census of an interleaver")
    c.add_argument("family", nargs="?", choices=FAMILIES + ("identity",))
    _add_field_args(c, required=False)
    _add_family_args(c)
    c.add_argument("--size", type=int, help="size for the identity")
    c.add_argument("--file", help="JSON permutation file, '-' for stdin")
    c.add_argument("--format", choices=FORMATS, default="table")

    v = sub.add_parser("verify", help="check a theorem against brute force, JSONL on stdout")
    v.add_argument("tag", choices=sorted(TAGS))
    v.add_argument("--q-min", type=int, default=2)
    v.add_argument("--q-max", type=int, default=64)
    v.add_argument("--q-list", help="comma-separated field sizes to restrict to")
    v.add_argument("--n-max", type=int, default=30, help="largest Skolem order")
    v.add_argument("--jn-max", type=int, default=120, help="largest generalized Skolem length")
    v.add_argument("--j-max", type=int, default=6, help="largest generalized multiplicity")
    v.add_argument("--reading", choices=("corrected", "verbatim"), default="corrected")
    v.add_argument("--node-limit", type=int, default=200_000)
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--quiet", action="store_true", help="summary only")

    s = sub.add_parser("skolem", help="generate Skolem-type sequences and their interleavers")
    s.add_argument("kind", choices=KINDS + ("prescribed",))
    s.add_argument("-n", type=int, default=1)
    s.add_argument("-k", type=int)
    s.add_argument("-j", type=int)
    s.add_argument("--modify", action="store_true")
    s.add_argument("--interleave", action="store_true")
    s.add_argument("--file", help="read a sequence in text format instead of generating, '-' for stdin")
    s.add_argument("--spec", help="cycle structure j:count,... for kind prescribed")
    s.add_argument("--strict", action="store_true", help="require existence for (j, j*count) blocks")
    s.add_argument("--format", choices=("table", "json"), default="table")

    r = sub.add_parser("reproduce", help="print a worked example table")
    r.add_argument("id", choices=sorted(REPRODUCTIONS))
    return parser


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    args = build_parser().parse_args(argv)
    try:
        if args.command == "verify":
            return cmd_verify(args, out)
        handler = {
            "field": cmd_field,
            "interleave": cmd_interleave,
            "cycles": cmd_cycles,
            "skolem": cmd_skolem,
            "reproduce": cmd_reproduce,
        }[args.command]
        if args.command in ("interleave", "cycles") and getattr(args, "family", None) in FAMILIES and args.p is None:
            raise CliError(EXIT_USAGE, "-p is required")
        out.write(handler(args))
        return EXIT_OK
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except (FieldError, BoundExceeded, MissingK) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ConditionViolated as exc:
        print(f"condition violated: {exc}", file=sys.stderr)
        return EXIT_CONDITION
    except SearchExhausted as exc:
        print(f"search failed: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

"""Command line front end: ``exk0 <subcommand> <file> [--json]``.

Exit codes: 0 success, 1 diagnostics or usage errors, 2 refusal because a
hypothesis of the classification fails (even n, infinite quotient,
missing witness), 3 internal invariant violation.
"""

import argparse
import json
import os
import sys

from . import abgroup
from .catmodel import ObjectExpr
from .classify import (ExtensionalSubcategory, SubcategoryHandle, classify_all, f_member,
                       generating_family, roundtrip_fg, roundtrip_gf, verify_complete,
                       verify_dense)
from .dsl import load, parse_object
from .errors import ExK0Error, HypothesisViolation
from .grothendieck import compute_k0, express_as_difference, h_g

EXIT_OK, EXIT_ERROR, EXIT_REFUSED, EXIT_INVARIANT = 0, 1, 2, 3


class _Fail(Exception):
    def __init__(self, code, message):
        super().__init__(message)
        self.code = code


def _cap(args):
    if args.cap is not None:
        return args.cap
    env = os.environ.get("EXK0_CAP")
    if env:
        try:
            return int(env)
        except ValueError:
            raise _Fail(EXIT_ERROR, f"EXK0_CAP must be an integer, got {env!r}")
    return abgroup.DEFAULT_CAP


def _vector(text, k):
    try:
        vec = [int(x) for x in text.split(",")]
    except ValueError:
        raise _Fail(EXIT_ERROR, f"cannot read integer vector {text!r}")
    if len(vec) != k:
        raise _Fail(EXIT_ERROR, f"vector {text!r} has {len(vec)} entries, expected {k}")
    return vec


def _obj_json(A):
    return [[label, m] for label, m in A.terms]


def _group_json(G):
    return {"free_rank": G.free_rank, "torsion": list(G.torsion)}


def _subgroup_json(H):
    return {"basis": [list(c) for c in H.generators()], "index": H.index}


def cmd_k0(K, args):
    classes = [{"indecomposable": i, "class": list(K.class_of(ObjectExpr.of(i)).coords())}
               for i in K.indecs]
    data = {"category": K.pres.name, "n": K.pres.n, "group": _group_json(K.group),
            "classes": classes}
    lines = [f"K0({K.pres.name}) = {K.group}"]
    lines += [f"  [{c['indecomposable']}] = {tuple(c['class'])}" for c in classes]
    return data, lines


def cmd_hg(K, args):
    H = h_g(K)
    data = {"category": K.pres.name, "generator": sorted(K.pres.generator),
            "hg": _subgroup_json(H)}
    lines = [f"H_G basis (columns over {', '.join(K.indecs)}):"]
    lines += [f"  {tuple(c)}" for c in H.generators()]
    lines.append(f"index in K0: {H.index if H.index is not None else 'infinite'}")
    return data, lines


def cmd_subgroups(K, args):
    subs = abgroup.enumerate_subgroups_containing(K.group, h_g(K), _cap(args))
    data = {"category": K.pres.name, "count": len(subs),
            "subgroups": [_subgroup_json(H) for H in subs]}
    lines = [f"{len(subs)} subgroup(s) of K0 containing H_G:"]
    lines += [f"  index {H.index}: basis {[tuple(c) for c in H.generators()]}" for H in subs]
    return data, lines


def cmd_classify(K, args):
    rows = classify_all(K, _cap(args))
    data = {"category": K.pres.name, "count": len(rows), "rows": [
        dict(_subgroup_json(H),
             criterion=[{"coefficients": list(c), "modulus": m} for c, m in S.criterion()],
             description=S.describe())
        for H, S in rows
    ]}
    lines = [f"{len(rows)} dense complete subcategories containing the generator:"]
    for k, (H, S) in enumerate(rows, 1):
        lines.append(f"  {k}. H = <{', '.join(str(tuple(c)) for c in H.generators())}>"
                     f" (index {H.index}); f(H): {S.describe()}")
    return data, lines


def cmd_member(K, args):
    A = parse_object(args.object, K.indecs)
    gens = [_vector(v, len(K.indecs)) for v in args.subgroup.split(";") if v.strip()]
    H = abgroup.subgroup_from_generators(K.group, gens)
    member = f_member(SubcategoryHandle(K, H), A)
    data = {"object": _obj_json(A), "class": list(K.class_of(A).coords()),
            "member": member, "contains_hg": h_g(K) <= H}
    lines = [f"{A.format(K.indecs)} {'is' if member else 'is not'} in f(H)"]
    if not data["contains_hg"]:
        lines.append("note: H does not contain H_G")
    return data, lines


def cmd_diff(K, args):
    v = _vector(args.element, len(K.indecs))
    A, G = express_as_difference(K, v)
    if K.class_of(A) - K.class_of(G) != K.element(v):
        raise _Fail(EXIT_INVARIANT, "express_as_difference produced a wrong class")
    data = {"element": v, "A": _obj_json(A), "G": _obj_json(G)}
    lines = [f"{tuple(v)} = [{A.format(K.indecs)}] - [{G.format(K.indecs)}]"]
    return data, lines


def cmd_verify(K, args):
    rows, failed = [], False
    for H, S in classify_all(K, _cap(args)):
        dense = verify_dense(S)
        complete = verify_complete(S, args.samples)
        gf = roundtrip_gf(K, H)
        fg = roundtrip_fg(K, ExtensionalSubcategory(generating_family(K, H)), args.bound)
        failed |= not (dense.ok and complete.ok and gf)
        rows.append(dict(
            _subgroup_json(H),
            dense={"ok": dense.ok, "failures": dense.failures},
            complete={"ok": complete.ok, "checked": complete.checked,
                      "applicable": complete.applicable,
                      "violations": [str(c) for c in complete.violations]},
            roundtrip_gf=gf,
            roundtrip_fg={"confirmed": len(fg.confirmed), "exhausted": len(fg.exhausted),
                          "non_members": fg.non_members},
        ))
    data = {"category": K.pres.name, "bound": args.bound, "samples": args.samples,
            "ok": not failed, "subgroups": rows}
    lines = []
    for r in rows:
        lines.append(
            f"index {r['index']}: dense {'ok' if r['dense']['ok'] else 'FAIL'}, "
            f"complete {'ok' if r['complete']['ok'] else 'FAIL'} "
            f"({r['complete']['applicable']}/{r['complete']['checked']} applicable), "
            f"gf {'ok' if r['roundtrip_gf'] else 'FAIL'}, "
            f"fg {r['roundtrip_fg']['confirmed']} confirmed / "
            f"{r['roundtrip_fg']['exhausted']} inconclusive")
    if failed:
        return data, lines, EXIT_INVARIANT
    return data, lines


def build_parser():
    p = argparse.ArgumentParser(prog="exk0", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, func, help):
        sp = sub.add_parser(name, help=help)
        sp.add_argument("file")
        sp.add_argument("--json", action="store_true", help="machine-readable output")
        sp.set_defaults(func=func, cap=None)
        return sp

    add("k0", cmd_k0, "invariant factors of K0 and classes of indecomposables")
    add("hg", cmd_hg, "canonical basis of H_G")
    sp = add("subgroups", cmd_subgroups, "subgroups of K0 containing H_G")
    sp.add_argument("--cap", type=int, help="maximum order of K0/H_G (default 10000)")
    sp = add("classify", cmd_classify, "table of subgroups and their subcategories")
    sp.add_argument("--cap", type=int)
    sp = add("member", cmd_member, "is an object in f(H)?")
    sp.add_argument("--object", required=True, help="object, e.g. '2*S + P'")
    sp.add_argument("--subgroup", required=True, help="generators 'v1; v2; ...', each 'c1,c2,...'")
    sp = add("diff", cmd_diff, "write an element as [A] - [G]")
    sp.add_argument("--element", required=True, help="coordinates 'c1,c2,...'")
    sp = add("verify", cmd_verify, "run the density/completeness/roundtrip checks")
    sp.add_argument("--bound", type=int, default=4)
    sp.add_argument("--samples", type=int, default=200)
    sp.add_argument("--cap", type=int)
    return p


def main(argv=None, stdout=None, stderr=None):
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as e:
        # argparse uses 2 for usage errors; 2 is reserved for refusals here
        return EXIT_OK if e.code == 0 else EXIT_ERROR
    try:
        doc = load(args.file)
    except OSError as e:
        print(f"exk0: {e}", file=stderr)
        return EXIT_ERROR
    for d in doc.diagnostics:
        print(f"{args.file}:{d}", file=stderr)
    if not doc.ok:
        return EXIT_ERROR

    try:
        K = compute_k0(doc.presentation)
        result = args.func(K, args)
    except _Fail as e:
        print(f"exk0: {e}", file=stderr)
        return e.code
    except HypothesisViolation as e:
        print(f"exk0: refused: {e}", file=stderr)
        return EXIT_REFUSED
    except (ExK0Error, ValueError, KeyError) as e:
        print(f"exk0: error: {e}", file=stderr)
        return EXIT_ERROR

    data, lines, *code = result
    out = stderr if code else stdout
    if args.json:
        print(json.dumps(data, indent=2, sort_keys=True), file=out)
    else:
        print("\n".join(lines), file=out)
    if code:
        print("exk0: invariant violation detected", file=stderr)
        return code[0]
    return EXIT_OK


def main_exit():
    sys.exit(main())


if __name__ == "__main__":
    main_exit()

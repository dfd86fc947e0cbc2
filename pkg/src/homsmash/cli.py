"""Command line: ``homsmash {check,smash,cobraid,decompose,table,catalog}``.

Exit status is 0 when every checked condition holds, 1 when some axiom or
precondition fails, and 2 for malformed input.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import catalog
from .actions import (
    HomModuleAction,
    check_cocommutation_condition,
    check_hom_module,
    check_module_hom_algebra,
    check_module_hom_coalgebra,
)
from .cobraid import (
    CobraidingData,
    assemble_sigma,
    check_cobraiding,
    check_cobraiding_data,
    check_skew_pairing,
    decompose_sigma,
)
from .exactlin import TensorIndex, to_scalar
from .homcore import (
    HomAlgebra,
    HomBialgebra,
    HomCoalgebra,
    HomHopfAlgebra,
    check_derived_coassoc_identities,
    check_hom_algebra,
    check_hom_bialgebra,
    check_hom_coalgebra,
    check_hopf_suite,
)
from .report import CheckReport, StructureError
from .smash import (
    ConditionFailed,
    SmashProduct,
    TwistMap,
    build_r_smash,
    build_smash,
    check_R_coalgebra_map,
    check_twist_conditions,
    r_smash_algebra,
)
from .fileformat import FormFile, dumps, form_file, load, save, to_doc


class _Usage(Exception):
    pass


def _has_coalgebra(X) -> bool:
    return isinstance(X, (HomCoalgebra, HomBialgebra, HomHopfAlgebra)) or (
        isinstance(X, SmashProduct) and _has_coalgebra(X.underlying)
    )


def _has_algebra(X) -> bool:
    return isinstance(X, (HomAlgebra, HomBialgebra, HomHopfAlgebra)) or (
        isinstance(X, SmashProduct) and _has_algebra(X.underlying)
    )


def report_for(obj) -> CheckReport:
    """The full axiom suite appropriate to a loaded object."""
    if isinstance(obj, SmashProduct):
        rep = report_for(obj.underlying)
        rep.subject = "smash product " + rep.subject
        return rep
    if isinstance(obj, HomHopfAlgebra):
        return check_hopf_suite(obj)
    if isinstance(obj, HomBialgebra):
        rep = CheckReport("Hom-bialgebra")
        rep.extend(check_hom_algebra(obj)).extend(check_hom_coalgebra(obj))
        return rep.extend(check_derived_coassoc_identities(obj)).extend(check_hom_bialgebra(obj))
    if isinstance(obj, HomCoalgebra):
        return check_hom_coalgebra(obj).extend(check_derived_coassoc_identities(obj))
    if isinstance(obj, HomAlgebra):
        return check_hom_algebra(obj)
    if isinstance(obj, TwistMap):
        rep = check_twist_conditions(obj)
        if _has_coalgebra(obj.left) and _has_coalgebra(obj.right):
            rep.extend(check_R_coalgebra_map(obj))
        return rep
    if isinstance(obj, HomModuleAction):
        rep = check_hom_module(obj)
        if _has_algebra(obj.carrier) and _has_coalgebra(obj.acting):
            rep.extend(check_module_hom_algebra(obj))
        if _has_coalgebra(obj.carrier) and _has_coalgebra(obj.acting):
            rep.extend(check_module_hom_coalgebra(obj))
        if _has_coalgebra(obj.acting):
            rep.extend(check_cocommutation_condition(obj))
        return rep
    if isinstance(obj, FormFile):
        if obj.role == "cobraiding":
            return check_cobraiding(obj.left, obj.form)
        return check_skew_pairing(obj.left, obj.right, obj.form)
    raise StructureError("nothing to check for %s" % type(obj).__name__)


def _emit_report(rep: CheckReport, as_json: bool, out) -> int:
    if as_json:
        out.write(json.dumps(rep.to_dict(), indent=2, ensure_ascii=False) + "\n")
    else:
        out.write(rep.format() + "\n")
    return 0 if rep.ok else 1


# ------------------------------------------------------------------ tables


def combo(vec, names) -> str:
    """Render a coordinate vector as a linear combination of basis names."""
    out = ""
    for v, name in zip(vec, names):
        if v == 0:
            continue
        sign = "-" if v < 0 else "+"
        mag = abs(v)
        term = name if mag == 1 else "%s·%s" % (mag, name)
        out += ("-" + term if sign == "-" else term) if not out else " %s %s" % (sign, term)
    return out or "0"


def _grid(corner: str, cols, rows) -> str:
    """``rows`` is a list of (label, cells)."""
    table = [[corner] + list(cols)] + [[label] + list(cells) for label, cells in rows]
    widths = [max(len(r[i]) for r in table) for i in range(len(table[0]))]
    lines = ["  ".join(c.rjust(w) for c, w in zip(r, widths)).rstrip() for r in table]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines)


def render_table(obj, op: str) -> tuple[str, dict]:
    """A basis-labeled table for ``op`` plus a JSON-friendly copy of it."""
    X = obj.underlying if isinstance(obj, SmashProduct) else obj
    if isinstance(X, FormFile):
        if op not in ("sigma", "form"):
            raise _Usage("a bilinear form only has the 'sigma' table")
        m = X.form.matrix()
        rows = [(a, [str(v) for v in r]) for a, r in zip(X.left.basis, m)]
        return _grid("σ", X.right.basis, rows), {"rows": list(X.left.basis), "cols": list(X.right.basis),
                                                  "table": [r for _, r in rows]}
    if not hasattr(X, "basis"):
        raise _Usage("no tables for this kind of file")
    b = X.basis
    n = len(b)
    if op == "mul" and _has_algebra(X):
        rows = [(x, [combo(X.mul.col(i * n + j), b) for j in range(n)]) for i, x in enumerate(b)]
        return _grid("·", b, rows), {"rows": list(b), "cols": list(b), "table": [r for _, r in rows]}
    pairs = None
    if op == "comul" and _has_coalgebra(X):
        names = ["%s ⊗ %s" % (b[i], b[j]) for i, j in TensorIndex([n, n])]
        pairs = [(x, combo(X.comul.col(i), names)) for i, x in enumerate(b)]
        label = "Δ"
    elif op == "antipode" and isinstance(X, HomHopfAlgebra):
        pairs = [(x, combo(X.antipode.col(i), b)) for i, x in enumerate(b)]
        label = "S"
    elif op == "alpha":
        pairs = [(x, combo(X.alpha.col(i), b)) for i, x in enumerate(b)]
        label = "α"
    if pairs is None:
        raise _Usage("operation %r is not available for this file" % op)
    width = max(len(x) for x, _ in pairs)
    text = "\n".join("%s(%s)%s = %s" % (label, x, " " * (width - len(x)), v) for x, v in pairs)
    return text, {x: v for x, v in pairs}


# ----------------------------------------------------------------- commands


def cmd_check(args, out) -> int:
    return _emit_report(report_for(load(args.path)), args.json, out)


def cmd_smash(args, out) -> int:
    A, B = load(args.left), load(args.right)
    if args.action:
        act = load(args.action)
        if not isinstance(act, HomModuleAction):
            raise StructureError("%s: expected a hom_module_action file" % args.action)
        if not (_has_coalgebra(A) and _has_coalgebra(B)):
            raise StructureError("smash product from an action needs Hom-Hopf algebra factors")
        S = build_smash(A, B, act, force=args.force)
    else:
        T = load(args.twist)
        if not isinstance(T, TwistMap):
            raise StructureError("%s: expected a twist file" % args.twist)
        if isinstance(A, HomHopfAlgebra) and isinstance(B, HomHopfAlgebra):
            S = build_r_smash(A, B, T, force=args.force)
        elif args.force:
            S = SmashProduct(r_smash_algebra(A, B, T, force=True), A, B, T)
        else:
            alg = r_smash_algebra(A, B, T)
            S = SmashProduct(alg, A, B, T)
    save(S, args.out)
    msg = {"written": args.out, "dim": S.dim, "forced": bool(args.force)}
    out.write((json.dumps(msg) if args.json else "wrote %s (dim %d)" % (args.out, S.dim)) + "\n")
    return 0


def _same(x, y) -> bool:
    return to_doc(x) == to_doc(y)


def cmd_cobraid(args, out) -> int:
    S = load(args.smash)
    if not isinstance(S, SmashProduct):
        raise StructureError("%s: not a smash product file" % args.smash)
    forms = {}
    for key, left, right in (("tau", S.A, S.A), ("upsilon", S.B, S.B), ("phi", S.A, S.B), ("psi", S.B, S.A)):
        path = getattr(args, key)
        f = load(path)
        if not isinstance(f, FormFile):
            raise StructureError("%s: expected a bilinear_form file" % path)
        if not (_same(f.left, left) and _same(f.right, right)):
            raise StructureError("%s: %s does not live on the smash product's factors" % (path, key))
        forms[key] = f.form
    data = CobraidingData(**forms)
    sigma = assemble_sigma(S.A, S.B, data, T=S.twist)
    rep = check_cobraiding(S.underlying, sigma)
    save(form_file(sigma, S, S, "cobraiding"), args.out)
    return _emit_report(rep, args.json, out)


def cmd_decompose(args, out) -> int:
    S, sig = load(args.smash), load(args.sigma)
    if not isinstance(S, SmashProduct) or not isinstance(sig, FormFile):
        raise StructureError("decompose needs a sigma form file and a smash product file")
    data = decompose_sigma(S, sig.form)
    os.makedirs(args.out, exist_ok=True)
    for key, left, right in (("tau", S.A, S.A), ("upsilon", S.B, S.B), ("phi", S.A, S.B), ("psi", S.B, S.A)):
        role = "cobraiding" if key in ("tau", "upsilon") else "skew_pairing"
        save(form_file(getattr(data, key), left, right, role), os.path.join(args.out, key + ".json"))
    return _emit_report(check_cobraiding_data(S.A, S.B, S.twist, data), args.json, out)


def cmd_table(args, out) -> int:
    text, doc = render_table(load(args.path), args.op)
    out.write((json.dumps(doc, indent=2, ensure_ascii=False) if args.json else text) + "\n")
    return 0


CATALOG_NAMES = ("kz2", "taft", "taft_twisted", "action", "tau", "upsilon", "phi", "psi")


def catalog_object(name: str, k):
    if name == "kz2":
        return catalog.catalog_kz2()
    if name == "taft":
        return catalog.catalog_taft()
    if k is None:
        raise _Usage("catalog entry %r needs --k" % name)
    if name == "taft_twisted":
        return catalog.catalog_taft_twisted(k)
    if name == "action":
        return catalog.catalog_action(k)
    forms = catalog.catalog_forms(k)
    H, K = catalog.catalog_taft_twisted(k), catalog.catalog_kz2()
    left, right, role = {
        "tau": (H, H, "cobraiding"),
        "upsilon": (K, K, "cobraiding"),
        "phi": (H, K, "skew_pairing"),
        "psi": (K, H, "skew_pairing"),
    }[name]
    return form_file(getattr(forms, name), left, right, role)


def cmd_catalog(args, out) -> int:
    k = None
    if args.k is not None:
        try:
            k = to_scalar(args.k)
        except (ValueError, ZeroDivisionError) as exc:
            raise _Usage("bad --k %r: %s" % (args.k, exc))
    text = dumps(catalog_object(args.name, k))
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        out.write(text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="homsmash", description="Exact checks for Hom-Hopf algebras, smash products and cobraidings.")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    # also accepted after the subcommand
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help=argparse.SUPPRESS)
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("check", parents=[common], help="run the axiom suite for a file")
    c.add_argument("path")
    c.set_defaults(func=cmd_check)

    c = sub.add_parser("smash", parents=[common], help="build an R-smash or action smash product")
    c.add_argument("left")
    c.add_argument("right")
    g = c.add_mutually_exclusive_group(required=True)
    g.add_argument("--twist")
    g.add_argument("--action")
    c.add_argument("-o", "--out", required=True)
    c.add_argument("--force", action="store_true", help="skip precondition checks")
    c.set_defaults(func=cmd_smash)

    c = sub.add_parser("cobraid", parents=[common], help="assemble sigma from four forms")
    for key in ("tau", "upsilon", "phi", "psi", "smash"):
        c.add_argument(key)
    c.add_argument("-o", "--out", required=True)
    c.set_defaults(func=cmd_cobraid)

    c = sub.add_parser("decompose", parents=[common], help="split sigma into its four restrictions")
    c.add_argument("sigma")
    c.add_argument("smash")
    c.add_argument("-o", "--out", required=True, help="output directory")
    c.set_defaults(func=cmd_decompose)

    c = sub.add_parser("table", parents=[common], help="print a structure map as a table")
    c.add_argument("path")
    c.add_argument("op", choices=("mul", "comul", "antipode", "alpha", "sigma"))
    c.set_defaults(func=cmd_table)

    c = sub.add_parser("catalog", parents=[common], help="write a built-in example")
    c.add_argument("name", choices=CATALOG_NAMES)
    c.add_argument("--k", help="the scalar in alpha(x) = kx, e.g. 2 or 3/2")
    c.add_argument("-o", "--out")
    c.set_defaults(func=cmd_catalog)
    return p


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except ConditionFailed as exc:
        err.write("homsmash: %s\n" % exc)
        _emit_report(exc.report, args.json, out)
        return 1
    except (StructureError, _Usage, ValueError) as exc:
        err.write("homsmash: %s\n" % exc)
        return 2
    except OSError as exc:
        err.write("homsmash: %s: %s\n" % (exc.filename, exc.strerror))
        return 2


if __name__ == "__main__":
    sys.exit(main())

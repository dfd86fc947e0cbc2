"""JSON structure-constant files.

Every document has a ``kind``. Algebra-like kinds store sparse structure
constants (only nonzero entries, indices into ``basis``) and dense
vectors/matrices; scalars are strings such as ``"-2"`` or ``"3/2"``.

    mul      [[i, j, k, c], ...]     e_i e_j has coefficient c on e_k
    comul    [[i, j, k, c], ...]     Delta(e_i) has coefficient c on e_j (x) e_k
    twist    [[i, j, k, l, c], ...]  R(b_i (x) a_j) has c on a_k (x) b_l
    action   [[i, j, k, c], ...]     h_i |> m_j has c on m_k

Serialization is canonical: keys sorted, entries sorted, zeros dropped,
scalars in lowest terms, so ``dumps(loads(text)) == text`` for any
canonical text.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from .actions import HomModuleAction
from .cobraid import BilinearForm
from .exactlin import LinMap, TensorIndex, to_scalar
from .homcore import HomAlgebra, HomBialgebra, HomCoalgebra, HomHopfAlgebra
from .report import StructureError
from .smash import SmashProduct, TwistMap, action_induced_twist

__all__ = [
    "FileFormatError",
    "FormFile",
    "ALGEBRA_KINDS",
    "to_doc",
    "from_doc",
    "dumps",
    "loads",
    "load",
    "save",
    "form_file",
]

ALGEBRA_KINDS = ("hom_algebra", "hom_coalgebra", "hom_bialgebra", "hom_hopf")


class FileFormatError(StructureError):
    """Malformed input file; carries the file, line and key it refers to."""

    def __init__(self, message: str, source: str = "<string>", line: int | None = None, key: str | None = None):
        self.source, self.line, self.key, self.detail = source, line, key, message
        where = source if line is None else "%s:%d" % (source, line)
        super().__init__("%s: %s%s" % (where, "key '%s': " % key if key else "", message))


@dataclass(frozen=True)
class FormFile:
    """A bilinear form together with the algebras it pairs.

    ``role`` is ``"cobraiding"`` or ``"skew_pairing"``; it decides which
    axiom suite ``check`` runs.
    """

    form: BilinearForm
    left: Any
    right: Any
    role: str


def form_file(form: BilinearForm, left, right, role: str | None = None) -> FormFile:
    if role is None:
        role = "cobraiding" if left is right else "skew_pairing"
    return FormFile(form, left, right, role)


# ---------------------------------------------------------------- writing


def _s(v: Fraction) -> str:
    return str(Fraction(v))


def _sparse(m: LinMap, row_dims, col_dims) -> list[list]:
    rows, cols = TensorIndex(row_dims), TensorIndex(col_dims)
    out = [list(cols.unflatten(c)) + list(rows.unflatten(r)) + [_s(v)] for r, c, v in m.nonzero()]
    out.sort(key=lambda e: e[:-1])
    return out


def _dense(m: LinMap) -> list[list[str]]:
    return [[_s(v) for v in row] for row in m.entries()]


def _algebra_doc(obj) -> dict:
    n = obj.dim
    doc: dict = {"basis": list(obj.basis), "dim": n, "alpha": _dense(obj.alpha)}
    if isinstance(obj, HomHopfAlgebra):
        doc["kind"] = "hom_hopf"
        doc["antipode"] = _dense(obj.antipode)
    elif isinstance(obj, HomBialgebra):
        doc["kind"] = "hom_bialgebra"
    elif isinstance(obj, HomCoalgebra):
        doc["kind"] = "hom_coalgebra"
    else:
        doc["kind"] = "hom_algebra"
    if doc["kind"] != "hom_coalgebra":
        doc["mul"] = _sparse(obj.mul, [n], [n, n])
        doc["unit"] = [_s(v) for v in obj.unit.col(0)]
    if doc["kind"] != "hom_algebra":
        doc["comul"] = _sparse(obj.comul, [n, n], [n])
        doc["counit"] = [_s(v) for v in obj.counit.entries()[0]]
    return doc


def to_doc(obj) -> dict:
    if isinstance(obj, SmashProduct):
        doc = _algebra_doc(obj.underlying)
        prov = {"left": to_doc(obj.A), "right": to_doc(obj.B)}
        if obj.action is not None:
            prov["action"] = to_doc(obj.action)
        else:
            prov["twist"] = to_doc(obj.twist)
        doc["smash"] = prov
        return doc
    if isinstance(obj, (HomAlgebra, HomCoalgebra, HomBialgebra, HomHopfAlgebra)):
        return _algebra_doc(obj)
    if isinstance(obj, TwistMap):
        B, A = obj.left, obj.right
        return {
            "kind": "twist",
            "left": to_doc(B),
            "right": to_doc(A),
            "entries": _sparse(obj.R, [A.dim, B.dim], [B.dim, A.dim]),
        }
    if isinstance(obj, HomModuleAction):
        H, M = obj.acting, obj.carrier
        return {
            "kind": "hom_module_action",
            "acting": to_doc(H),
            "carrier": to_doc(M),
            "entries": _sparse(obj.act, [M.dim], [H.dim, M.dim]),
        }
    if isinstance(obj, FormFile):
        return {
            "kind": "bilinear_form",
            "left": to_doc(obj.left),
            "right": to_doc(obj.right),
            "role": obj.role,
            "matrix": [[_s(v) for v in row] for row in obj.form.matrix()],
        }
    raise TypeError("cannot serialize %r" % type(obj).__name__)


def _flat(value) -> bool:
    return not isinstance(value, (list, dict)) or (
        isinstance(value, list) and all(not isinstance(v, (list, dict)) for v in value)
    )


def _emit(value, indent: int) -> str:
    pad = "  " * (indent + 1)
    if isinstance(value, dict):
        if not value:
            return "{}"
        items = ["%s%s: %s" % (pad, json.dumps(k, ensure_ascii=False), _emit(value[k], indent + 1)) for k in sorted(value)]
        return "{\n" + ",\n".join(items) + "\n" + "  " * indent + "}"
    if isinstance(value, list) and not _flat(value):
        if all(_flat(v) for v in value):
            items = [pad + json.dumps(v, ensure_ascii=False, separators=(", ", ": ")) for v in value]
        else:
            items = [pad + _emit(v, indent + 1) for v in value]
        return "[\n" + ",\n".join(items) + "\n" + "  " * indent + "]"
    return json.dumps(value, ensure_ascii=False, separators=(", ", ": "))


def dumps(obj) -> str:
    """Canonical text: sorted keys, one structure constant per line."""
    doc = obj if isinstance(obj, dict) else to_doc(obj)
    return _emit(doc, 0) + "\n"


def save(obj, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(obj))


# ---------------------------------------------------------------- reading


class _Reader:
    def __init__(self, text: str, source: str, base_dir: str):
        self.text, self.source, self.base_dir = text, source, base_dir

    def line_of(self, key: str) -> int | None:
        pos = self.text.find('"%s"' % key)
        return None if pos < 0 else self.text.count("\n", 0, pos) + 1

    def fail(self, key: str | None, message: str):
        raise FileFormatError(message, self.source, self.line_of(key) if key else None, key)

    def get(self, doc: dict, key: str):
        if key not in doc:
            raise FileFormatError("missing", self.source, None, key)
        return doc[key]

    def scalar(self, key: str, value) -> Fraction:
        if isinstance(value, bool) or not isinstance(value, (str, int)):
            self.fail(key, "scalar %r must be a string like \"p/q\"" % (value,))
        try:
            return to_scalar(value)
        except (ValueError, TypeError, ZeroDivisionError) as exc:
            self.fail(key, "bad scalar %r (%s)" % (value, exc))

    def index(self, key: str, value, bound: int) -> int:
        if isinstance(value, bool) or not isinstance(value, int) or not 0 <= value < bound:
            self.fail(key, "index %r out of range 0..%d" % (value, bound - 1))
        return value

    def vector(self, doc: dict, key: str, n: int) -> list[Fraction]:
        v = self.get(doc, key)
        if not isinstance(v, list) or len(v) != n:
            self.fail(key, "expected a list of %d scalars" % n)
        return [self.scalar(key, x) for x in v]

    def matrix(self, doc: dict, key: str, rows: int, cols: int) -> LinMap:
        m = self.get(doc, key)
        if not isinstance(m, list) or len(m) != rows or any(not isinstance(r, list) or len(r) != cols for r in m):
            self.fail(key, "expected a %dx%d matrix" % (rows, cols))
        return LinMap([[self.scalar(key, x) for x in r] for r in m])

    def sparse(self, doc: dict, key: str, col_dims, row_dims) -> LinMap:
        entries = self.get(doc, key)
        if not isinstance(entries, list):
            self.fail(key, "expected a list of entries")
        cols, rows = TensorIndex(col_dims), TensorIndex(row_dims)
        width = len(col_dims) + len(row_dims) + 1
        dense = [[Fraction(0)] * cols.size for _ in range(rows.size)]
        seen = set()
        for e in entries:
            if not isinstance(e, list) or len(e) != width:
                self.fail(key, "entry %r should have %d items" % (e, width))
            idx = [self.index(key, i, d) for i, d in zip(e[:-1], list(col_dims) + list(row_dims))]
            if tuple(idx) in seen:
                self.fail(key, "duplicate entry for indices %s" % idx)
            seen.add(tuple(idx))
            c = cols.flat(*idx[: len(col_dims)])
            r = rows.flat(*idx[len(col_dims):])
            dense[r][c] = self.scalar(key, e[-1])
        return LinMap(dense)

    def sub(self, doc: dict, key: str):
        ref = self.get(doc, key)
        if isinstance(ref, str):
            path = os.path.join(self.base_dir, ref)
            try:
                return load(path)
            except OSError as exc:
                self.fail(key, "cannot read referenced file %s (%s)" % (ref, exc.strerror))
        if not isinstance(ref, dict):
            self.fail(key, "expected an embedded document or a relative path")
        return self.build(ref)

    def algebra(self, doc: dict, kind: str):
        n = self.get(doc, "dim")
        if isinstance(n, bool) or not isinstance(n, int) or n < 1:
            self.fail("dim", "dim must be a positive integer")
        basis = self.get(doc, "basis")
        if not isinstance(basis, list) or len(basis) != n or not all(isinstance(b, str) for b in basis):
            self.fail("basis", "expected %d basis names" % n)
        if len(set(basis)) != n:
            self.fail("basis", "basis names must be distinct")
        basis = tuple(basis)
        alpha = self.matrix(doc, "alpha", n, n)
        alg = coalg = None
        try:
            if kind != "hom_coalgebra":
                mul = self.sparse(doc, "mul", [n, n], [n])
                unit = LinMap.column(self.vector(doc, "unit", n))
                alg = HomAlgebra(basis, mul, unit, alpha)
            if kind != "hom_algebra":
                comul = self.sparse(doc, "comul", [n], [n, n])
                counit = LinMap.row(self.vector(doc, "counit", n))
                coalg = HomCoalgebra(basis, comul, counit, alpha)
            if kind == "hom_algebra":
                return alg
            if kind == "hom_coalgebra":
                return coalg
            bi = HomBialgebra(alg, coalg)
            if kind == "hom_bialgebra":
                return bi
            return HomHopfAlgebra(bi, self.matrix(doc, "antipode", n, n))
        except FileFormatError:
            raise
        except StructureError as exc:
            self.fail("alpha" if "alpha" in str(exc) or "automorphism" in str(exc) else None, str(exc))

    def build(self, doc):
        if not isinstance(doc, dict):
            self.fail(None, "expected a JSON object")
        kind = self.get(doc, "kind")
        if kind in ALGEBRA_KINDS:
            alg = self.algebra(doc, kind)
            if "smash" not in doc:
                return alg
            prov = doc["smash"]
            if not isinstance(prov, dict):
                self.fail("smash", "expected an object")
            A, B = self.sub(prov, "left"), self.sub(prov, "right")
            act = None
            if "action" in prov:
                act = self.sub(prov, "action")
                T = action_induced_twist(act, check=False)
            else:
                T = self.sub(prov, "twist")
            if alg.dim != A.dim * B.dim:
                self.fail("smash", "dimension %d is not %d x %d" % (alg.dim, A.dim, B.dim))
            return SmashProduct(alg, A, B, T, act)
        if kind == "twist":
            B, A = self.sub(doc, "left"), self.sub(doc, "right")
            R = self.sparse(doc, "entries", [B.dim, A.dim], [A.dim, B.dim])
            return TwistMap(B, A, R)
        if kind == "hom_module_action":
            H, M = self.sub(doc, "acting"), self.sub(doc, "carrier")
            return HomModuleAction(H, M, self.sparse(doc, "entries", [H.dim, M.dim], [M.dim]))
        if kind == "bilinear_form":
            left, right = self.sub(doc, "left"), self.sub(doc, "right")
            m = self.matrix(doc, "matrix", left.dim, right.dim)
            role = doc.get("role")
            if role is None:
                role = "cobraiding" if doc["left"] == doc["right"] else "skew_pairing"
            if role not in ("cobraiding", "skew_pairing"):
                self.fail("role", "role must be cobraiding or skew_pairing")
            form = BilinearForm.from_matrix(m.entries())
            return FormFile(form, left, right, role)
        self.fail("kind", "unknown kind %r" % (kind,))


def from_doc(doc: dict, source: str = "<doc>", base_dir: str = ".") -> Any:
    return _Reader(json.dumps(doc), source, base_dir).build(doc)


def loads(text: str, source: str = "<string>", base_dir: str = ".") -> Any:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FileFormatError("invalid JSON: %s" % exc.msg, source, exc.lineno) from None
    return _Reader(text, source, base_dir).build(doc)


def load(path: str) -> Any:
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    return loads(text, path, os.path.dirname(os.path.abspath(path)))

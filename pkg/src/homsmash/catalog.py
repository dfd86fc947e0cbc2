"""Built-in examples: the group algebra of Z/2, the 4-dimensional Taft
algebra, its Yau twist along ``x -> kx``, the module action of Z/2 on the
twist, and four bilinear forms assembling into a cobraiding of the smash
product.
"""

from __future__ import annotations

from fractions import Fraction

from .actions import HomModuleAction
from .cobraid import BilinearForm, CobraidingData
from .exactlin import LinMap, TensorIndex, identity, to_scalar
from .homcore import HomHopfAlgebra, yau_twist
from .report import StructureError

__all__ = [
    "structure_from_tables",
    "catalog_kz2",
    "catalog_taft",
    "taft_automorphism",
    "catalog_taft_twisted",
    "catalog_action",
    "catalog_forms",
]


def _from_table(basis, table: dict, arity_in: int, arity_out: int) -> LinMap:
    """Build a map from ``{(inputs...): {(outputs...): coeff}}`` keyed by basis names."""
    n = len(basis)
    pos = {name: i for i, name in enumerate(basis)}
    tin = TensorIndex([n] * arity_in)
    tout = TensorIndex([n] * arity_out)
    rows = [[Fraction(0)] * tin.size for _ in range(tout.size)]
    for src, image in table.items():
        src = (src,) if isinstance(src, str) else src
        c = tin.flat(*(pos[s] for s in src))
        for dst, coeff in image.items():
            dst = (dst,) if isinstance(dst, str) else dst
            rows[tout.flat(*(pos[d] for d in dst))][c] += to_scalar(coeff)
    return LinMap(rows)


def structure_from_tables(basis, mul, comul, counit, antipode, alpha=None, unit="1") -> HomHopfAlgebra:
    n = len(basis)
    unit_col = LinMap.column([1 if b == unit else 0 for b in basis])
    return HomHopfAlgebra.from_maps(
        basis,
        _from_table(basis, mul, 2, 1),
        unit_col,
        _from_table(basis, comul, 1, 2),
        LinMap.row([counit[b] for b in basis]),
        _from_table(basis, antipode, 1, 1),
        identity(n) if alpha is None else _from_table(basis, alpha, 1, 1),
    )


def catalog_kz2() -> HomHopfAlgebra:
    """K{1, a} with a^2 = 1, both basis elements group-like, alpha = id."""
    basis = ("1", "a")
    return structure_from_tables(
        basis,
        mul={("1", "1"): {"1": 1}, ("1", "a"): {"a": 1}, ("a", "1"): {"a": 1}, ("a", "a"): {"1": 1}},
        comul={"1": {("1", "1"): 1}, "a": {("a", "a"): 1}},
        counit={"1": 1, "a": 1},
        antipode={"1": {"1": 1}, "a": {"a": 1}},
    )


_TAFT_BASIS = ("1", "g", "x", "gx")

# g^2 = 1, x^2 = 0, xg = -gx
_TAFT_MUL = {
    ("1", "1"): {"1": 1},
    ("1", "g"): {"g": 1},
    ("1", "x"): {"x": 1},
    ("1", "gx"): {"gx": 1},
    ("g", "1"): {"g": 1},
    ("g", "g"): {"1": 1},
    ("g", "x"): {"gx": 1},
    ("g", "gx"): {"x": 1},
    ("x", "1"): {"x": 1},
    ("x", "g"): {"gx": -1},
    ("gx", "1"): {"gx": 1},
    ("gx", "g"): {"x": -1},
}

_TAFT_COMUL = {
    "1": {("1", "1"): 1},
    "g": {("g", "g"): 1},
    "x": {("x", "g"): 1, ("1", "x"): 1},
    "gx": {("gx", "1"): 1, ("g", "gx"): 1},
}


def catalog_taft() -> HomHopfAlgebra:
    """Taft's 4-dimensional Hopf algebra T_{2,-1} as a Hom-Hopf algebra with alpha = id."""
    return structure_from_tables(
        _TAFT_BASIS,
        mul=_TAFT_MUL,
        comul=_TAFT_COMUL,
        counit={"1": 1, "g": 1, "x": 0, "gx": 0},
        antipode={"1": {"1": 1}, "g": {"g": 1}, "x": {"gx": 1}, "gx": {"x": -1}},
    )


def _nonzero(k) -> Fraction:
    k = to_scalar(k)
    if k == 0:
        raise StructureError("k must be nonzero: alpha(x) = kx has to be an automorphism")
    return k


def taft_automorphism(k) -> LinMap:
    """The Hopf automorphism fixing 1, g and scaling x, gx by k."""
    k = _nonzero(k)
    return LinMap([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, k, 0], [0, 0, 0, k]])


def catalog_taft_twisted(k) -> HomHopfAlgebra:
    return yau_twist(catalog_taft(), taft_automorphism(k))


def catalog_action(k) -> HomModuleAction:
    """K Z_2 acting on the twisted Taft algebra: 1 acts by alpha, a by alpha composed with x -> -x."""
    k = _nonzero(k)
    kz2 = catalog_kz2()
    h = catalog_taft_twisted(k)
    table = {
        ("1", "1"): {"1": 1}, ("1", "g"): {"g": 1}, ("1", "x"): {"x": k}, ("1", "gx"): {"gx": k},
        ("a", "1"): {"1": 1}, ("a", "g"): {"g": 1}, ("a", "x"): {"x": -k}, ("a", "gx"): {"gx": -k},
    }
    rows = [[Fraction(0)] * (kz2.dim * h.dim) for _ in range(h.dim)]
    for (hb, m), image in table.items():
        c = kz2.basis.index(hb) * h.dim + h.basis.index(m)
        for out, coeff in image.items():
            rows[h.basis.index(out)][c] += to_scalar(coeff)
    return HomModuleAction(kz2, h, LinMap(rows))


def catalog_forms(k) -> CobraidingData:
    """The forms tau (on the Taft twist), upsilon (on K Z_2), phi and psi.

    The tables do not depend on k; k only fixes which algebras they live on.
    """
    _nonzero(k)
    tau = BilinearForm.from_matrix([[1, 1, 0, 0], [1, -1, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0]])
    upsilon = BilinearForm.from_matrix([[1, 1], [1, -1]])
    phi = BilinearForm.from_matrix([[1, 1], [1, -1], [0, 0], [0, 0]])
    psi = BilinearForm.from_matrix([[1, 1, 0, 0], [1, -1, 0, 0]])
    return CobraidingData(tau=tau, upsilon=upsilon, phi=phi, psi=psi)

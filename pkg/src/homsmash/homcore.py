"""Hom-algebras, Hom-coalgebras, Hom-bialgebras and Hom-Hopf algebras.

Every structure is given by structure constants stored as :class:`LinMap`:

* ``mul``: ``A (x) A -> A``        * ``unit``: ``K -> A`` (a column)
* ``comul``: ``C -> C (x) C``      * ``counit``: ``C -> K`` (a row)
* ``alpha``/``beta``: the twisting automorphism
* ``antipode``: ``H -> H``

All axioms are multilinear, so checking them on basis tuples suffices; each
checker turns an axiom into an equality of two composite maps and compares
them with :func:`compare`.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .exactlin import LinMap, SingularMapError, identity, invert, tensor
from .report import CheckReport, StructureError, compare

__all__ = [
    "HomAlgebra",
    "HomCoalgebra",
    "HomBialgebra",
    "HomHopfAlgebra",
    "check_hom_algebra",
    "check_hom_coalgebra",
    "check_derived_coassoc_identities",
    "check_hom_bialgebra",
    "check_hom_hopf",
    "check_hopf_suite",
    "check_bialgebra_morphism",
    "yau_twist",
    "one_map",
]


def one_map() -> LinMap:
    """The identity of the ground field, a 1x1 map."""
    return identity(1)


def _shape(what: str, m: LinMap, cod: int, dom: int) -> None:
    if not isinstance(m, LinMap):
        raise StructureError("%s must be a LinMap, got %r" % (what, type(m).__name__))
    if m.shape != (cod, dom):
        raise StructureError("%s has shape %dx%d, expected %dx%d" % (what, m.cod_dim, m.dom_dim, cod, dom))


def _require_invertible(what: str, m: LinMap) -> LinMap:
    try:
        return invert(m)
    except SingularMapError:
        raise StructureError("%s is not an automorphism (singular matrix)" % what) from None


@dataclass(frozen=True)
class HomAlgebra:
    basis: tuple[str, ...]
    mul: LinMap
    unit: LinMap
    alpha: LinMap

    def __post_init__(self):
        object.__setattr__(self, "basis", tuple(self.basis))
        n = len(self.basis)
        if n == 0 or len(set(self.basis)) != n:
            raise StructureError("basis names must be nonempty and distinct: %s" % (self.basis,))
        _shape("mul", self.mul, n, n * n)
        _shape("unit", self.unit, n, 1)
        _shape("alpha", self.alpha, n, n)

    @property
    def dim(self) -> int:
        return len(self.basis)

    @cached_property
    def alpha_inv(self) -> LinMap:
        return _require_invertible("alpha", self.alpha)


@dataclass(frozen=True)
class HomCoalgebra:
    basis: tuple[str, ...]
    comul: LinMap
    counit: LinMap
    beta: LinMap

    def __post_init__(self):
        object.__setattr__(self, "basis", tuple(self.basis))
        n = len(self.basis)
        if n == 0 or len(set(self.basis)) != n:
            raise StructureError("basis names must be nonempty and distinct: %s" % (self.basis,))
        _shape("comul", self.comul, n * n, n)
        _shape("counit", self.counit, 1, n)
        _shape("beta", self.beta, n, n)

    @property
    def dim(self) -> int:
        return len(self.basis)

    # a coalgebra's structure map is also reachable as ``alpha`` so that
    # tensor constructions can treat both kinds uniformly
    @property
    def alpha(self) -> LinMap:
        return self.beta

    @cached_property
    def beta_inv(self) -> LinMap:
        return _require_invertible("beta", self.beta)

    alpha_inv = property(lambda self: self.beta_inv)


@dataclass(frozen=True)
class HomBialgebra:
    """A Hom-algebra and a Hom-coalgebra sharing one basis and one structure map."""

    algebra: HomAlgebra
    coalgebra: HomCoalgebra

    def __post_init__(self):
        if self.algebra.basis != self.coalgebra.basis:
            raise StructureError("algebra and coalgebra bases differ")
        if self.algebra.alpha != self.coalgebra.beta:
            raise StructureError("a Hom-bialgebra needs one structure map: alpha != beta")

    basis = property(lambda self: self.algebra.basis)
    dim = property(lambda self: self.algebra.dim)
    mul = property(lambda self: self.algebra.mul)
    unit = property(lambda self: self.algebra.unit)
    comul = property(lambda self: self.coalgebra.comul)
    counit = property(lambda self: self.coalgebra.counit)
    alpha = property(lambda self: self.algebra.alpha)
    beta = alpha
    gamma = alpha
    alpha_inv = property(lambda self: self.algebra.alpha_inv)
    beta_inv = alpha_inv


@dataclass(frozen=True)
class HomHopfAlgebra:
    bialgebra: HomBialgebra
    antipode: LinMap

    def __post_init__(self):
        _shape("antipode", self.antipode, self.dim, self.dim)

    @classmethod
    def from_maps(cls, basis, mul, unit, comul, counit, antipode, alpha) -> "HomHopfAlgebra":
        return cls(
            HomBialgebra(HomAlgebra(basis, mul, unit, alpha), HomCoalgebra(basis, comul, counit, alpha)),
            antipode,
        )

    algebra = property(lambda self: self.bialgebra.algebra)
    coalgebra = property(lambda self: self.bialgebra.coalgebra)
    basis = property(lambda self: self.bialgebra.basis)
    dim = property(lambda self: self.bialgebra.dim)
    mul = property(lambda self: self.bialgebra.mul)
    unit = property(lambda self: self.bialgebra.unit)
    comul = property(lambda self: self.bialgebra.comul)
    counit = property(lambda self: self.bialgebra.counit)
    alpha = property(lambda self: self.bialgebra.alpha)
    beta = alpha
    gamma = alpha
    alpha_inv = property(lambda self: self.bialgebra.alpha_inv)
    beta_inv = alpha_inv


def check_hom_algebra(A) -> CheckReport:
    n, b = A.dim, A.basis
    I = identity(n)
    al = A.alpha
    A.alpha_inv  # structural: alpha must be invertible
    rep = CheckReport("Hom-algebra")
    rep.conditions += [
        compare("HA1", al @ A.mul, A.mul @ tensor(al, al), [b, b]),
        compare("HA1.unit", al @ A.unit, A.unit, [("1",)]),
        compare("HA2", A.mul @ tensor(al, A.mul), A.mul @ tensor(A.mul, al), [b, b, b]),
        compare("HA2.unit_right", A.mul @ tensor(I, A.unit), al, [b]),
        compare("HA2.unit_left", A.mul @ tensor(A.unit, I), al, [b]),
    ]
    return rep


def check_hom_coalgebra(C) -> CheckReport:
    n, b = C.dim, C.basis
    I = identity(n)
    be = C.beta
    C.beta_inv  # structural: beta must be invertible
    rep = CheckReport("Hom-coalgebra")
    rep.conditions += [
        compare("HC1", C.comul @ be, tensor(be, be) @ C.comul, [b]),
        compare("HC1.counit", C.counit @ be, C.counit, [b]),
        compare("HC2", tensor(be, C.comul) @ C.comul, tensor(C.comul, be) @ C.comul, [b]),
        compare("HC2.counit_left", tensor(C.counit, I) @ C.comul, be, [b]),
        compare("HC2.counit_right", tensor(I, C.counit) @ C.comul, be, [b]),
    ]
    return rep


def check_derived_coassoc_identities(C) -> CheckReport:
    """Re-expressions of Hom-coassociativity that move the twist around.

    shift_left:  c1 (x) c21 (x) c22 = b^-1(c11) (x) c12 (x) b(c2)
    shift_right: c11 (x) c12 (x) c2 = b(c1) (x) c21 (x) b^-1(c22)
    double:      c11 (x) c12 (x) c21 (x) c22 = b(c1) (x) b^-1(c211) (x) b^-1(c212) (x) c22
    """
    n, b = C.dim, C.basis
    I = identity(n)
    be = C.beta
    bi = C.beta_inv
    D = C.comul
    right = tensor(I, D) @ D
    left = tensor(D, I) @ D
    rep = CheckReport("derived coassociativity")
    rep.conditions += [
        compare("coassoc.shift_left", right, tensor(bi, I, be) @ left, [b]),
        compare("coassoc.shift_right", left, tensor(be, I, bi) @ right, [b]),
        compare(
            "coassoc.double",
            tensor(D, D) @ D,
            tensor(be, bi, bi, I) @ tensor(I, D, I) @ right,
            [b],
        ),
    ]
    return rep


def _comul_of_product(H) -> LinMap:
    """h (x) h' -> h1 h'1 (x) h2 h'2."""
    n = H.dim
    return tensor(H.mul, H.mul) @ tensor(H.comul, H.comul).reorder((n, n, n, n), (0, 2, 1, 3))


def check_hom_bialgebra(H) -> CheckReport:
    if H.algebra.alpha != H.coalgebra.beta:
        raise StructureError("alpha and beta differ; not a single structure map")
    b = H.basis
    rep = CheckReport("Hom-bialgebra")
    rep.conditions += [
        compare("bialg.comul_mult", H.comul @ H.mul, _comul_of_product(H), [b, b]),
        compare("bialg.comul_unit", H.comul @ H.unit, tensor(H.unit, H.unit), [("1",)]),
        compare("bialg.counit_mult", H.counit @ H.mul, tensor(H.counit, H.counit), [b, b]),
        compare("bialg.counit_unit", H.counit @ H.unit, one_map(), [("1",)]),
    ]
    return rep


def check_hom_hopf(H) -> CheckReport:
    n, b = H.dim, H.basis
    I = identity(n)
    S = H.antipode
    eta_eps = H.unit @ H.counit
    rep = CheckReport("Hom-Hopf antipode")
    rep.conditions += [
        compare("antipode.left", H.mul @ tensor(S, I) @ H.comul, eta_eps, [b]),
        compare("antipode.right", H.mul @ tensor(I, S) @ H.comul, eta_eps, [b]),
        compare("antipode.gamma", S @ H.gamma, H.gamma @ S, [b]),
    ]
    return rep


def check_hopf_suite(H) -> CheckReport:
    """Every homcore check applicable to ``H``, in one report."""
    rep = CheckReport("Hom-Hopf algebra")
    rep.extend(check_hom_algebra(H))
    rep.extend(check_hom_coalgebra(H))
    if hasattr(H, "bialgebra") or isinstance(H, HomBialgebra):
        rep.extend(check_hom_bialgebra(H))
    if hasattr(H, "antipode"):
        rep.extend(check_hom_hopf(H))
    return rep


def check_bialgebra_morphism(f: LinMap, H, H2) -> CheckReport:
    if f.shape != (H2.dim, H.dim):
        raise StructureError("morphism has shape %s, expected %s" % (f.shape, (H2.dim, H.dim)))
    b = H.basis
    rep = CheckReport("Hom-bialgebra morphism")
    rep.conditions += [
        compare("morph.gamma", f @ H.gamma, H2.gamma @ f, [b]),
        compare("morph.mul", f @ H.mul, H2.mul @ tensor(f, f), [b, b]),
        compare("morph.unit", f @ H.unit, H2.unit, [("1",)]),
        compare("morph.comul", H2.comul @ f, tensor(f, f) @ H.comul, [b]),
        compare("morph.counit", H2.counit @ f, H.counit, [b]),
    ]
    return rep


def check_hopf_automorphism(H, auto: LinMap) -> CheckReport:
    n, b = H.dim, H.basis
    _shape("automorphism", auto, n, n)
    _require_invertible("automorphism", auto)
    rep = CheckReport("Hopf automorphism")
    rep.conditions += [
        compare("auto.mul", auto @ H.mul, H.mul @ tensor(auto, auto), [b, b]),
        compare("auto.unit", auto @ H.unit, H.unit, [("1",)]),
        compare("auto.comul", H.comul @ auto, tensor(auto, auto) @ H.comul, [b]),
        compare("auto.counit", H.counit @ auto, H.counit, [b]),
        compare("auto.antipode", auto @ H.antipode, H.antipode @ auto, [b]),
    ]
    return rep


def yau_twist(H: HomHopfAlgebra, auto: LinMap) -> HomHopfAlgebra:
    """Twist an ordinary Hopf algebra along a Hopf automorphism.

    Returns ``(H, auto o mu, 1, Delta o auto, eps, auto)`` with the same
    antipode.
    """
    if H.gamma != identity(H.dim):
        raise StructureError("yau_twist expects an ordinary Hopf algebra (structure map = id)")
    rep = check_hopf_automorphism(H, auto)
    if not rep.ok:
        bad = rep.failures[0]
        raise StructureError("not a Hopf automorphism: %s fails at (%s)" % (bad.name, ", ".join(bad.witness_names)))
    return HomHopfAlgebra.from_maps(
        H.basis, auto @ H.mul, H.unit, H.comul @ auto, H.counit, H.antipode, auto
    )

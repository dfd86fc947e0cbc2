"""R-smash products of Hom-(Hopf) algebras and smash products from actions.

For Hom-algebras ``(A, alpha)``, ``(B, beta)`` and ``R: B (x) A -> A (x) B``,
written ``R(b (x) a) = a_R (x) b_R``, the product on ``A (x) B`` is

    (a (x) b)(a' (x) b') = a alpha^-1(a')_R (x) beta^-1(b_R) b'

with unit ``1 (x) 1`` and structure map ``alpha (x) beta``. Each Sweedler
expression below is spelled out as a chain of tensor maps and factor
reorderings on the flat (left-major) basis.
"""

from __future__ import annotations

from dataclasses import dataclass

from .actions import (
    HomModuleAction,
    check_cocommutation_condition,
    check_hom_module,
    check_module_hom_algebra,
    check_module_hom_coalgebra,
)
from .exactlin import LinMap, identity, swap, tensor
from .homcore import HomAlgebra, HomCoalgebra, HomHopfAlgebra
from .report import CheckReport, StructureError, compare

__all__ = [
    "ConditionFailed",
    "TwistMap",
    "SmashProduct",
    "product_basis",
    "flip_twist",
    "check_twist_conditions",
    "check_R_coalgebra_map",
    "build_tensor_hom_coalgebra",
    "r_smash_algebra",
    "r_smash_antipode",
    "build_r_smash",
    "action_induced_twist",
    "smash_antipode_from_action",
    "build_smash",
    "embeddings",
    "tensor_product_hopf",
]


class ConditionFailed(ValueError):
    """A construction's mathematical precondition is false; ``report`` says which."""

    def __init__(self, message: str, report: CheckReport):
        super().__init__(message)
        self.report = report


@dataclass(frozen=True)
class TwistMap:
    """``R: B (x) A -> A (x) B``. ``left`` is ``(B, beta)``, ``right`` is ``(A, alpha)``."""

    left: object
    right: object
    R: LinMap

    def __post_init__(self):
        db, da = self.left.dim, self.right.dim
        if self.R.shape != (da * db, db * da):
            raise StructureError("twist map has shape %s, expected %s" % (self.R.shape, (da * db, db * da)))


@dataclass(frozen=True)
class SmashProduct:
    underlying: object
    A: object
    B: object
    twist: TwistMap
    action: HomModuleAction | None = None

    def __getattr__(self, name):
        # forward structure-constant access (mul, comul, basis, ...)
        if name in ("underlying", "A", "B", "twist", "action"):
            raise AttributeError(name)
        return getattr(self.underlying, name)


def product_basis(A, B) -> tuple[str, ...]:
    return tuple("%s⊗%s" % (a, b) for a in A.basis for b in B.basis)


def flip_twist(A, B) -> TwistMap:
    """``b (x) a -> a (x) b``."""
    return TwistMap(B, A, swap(B.dim, A.dim))


def check_twist_conditions(T: TwistMap) -> CheckReport:
    """Twist compatibility plus the three conditions making the R-smash product a Hom-algebra."""
    B, A, R = T.left, T.right, T.R
    al, be = A.alpha, B.alpha
    bi = B.alpha_inv
    Ia, Ib = identity(A.dim), identity(B.dim)
    ab, bb = A.basis, B.basis
    rep = CheckReport("R-smash twist")
    rep.conditions += [
        # alpha(a)_R (x) beta(b)_R = alpha(a_R) (x) beta(b_R)
        compare("twist.alpha_beta", R @ tensor(be, al), tensor(al, be) @ R, [bb, ab]),
        # a_R (x) 1_R = alpha(a) (x) 1
        compare("C1.left", R @ tensor(B.unit, Ia), tensor(al, B.unit), [ab]),
        # 1_R (x) b_R = 1 (x) beta(b)
        compare("C1.right", R @ tensor(Ib, A.unit), tensor(A.unit, be), [bb]),
        # alpha(a)_R (x) (bb')_R = a_Rr (x) beta^-1(beta(b)_r) b'_R
        compare(
            "C2",
            R @ tensor(B.mul, al),
            tensor(Ia, B.mul) @ tensor(Ia, bi, Ib) @ tensor(R, Ib) @ tensor(be, R),
            [bb, bb, ab],
        ),
        # alpha((aa')_R) (x) beta(b)_R = alpha(a_R) alpha(a')_r (x) b_Rr
        compare(
            "C3",
            tensor(al, Ib) @ R @ tensor(be, A.mul),
            tensor(A.mul, Ib) @ tensor(al, Ia, Ib) @ tensor(Ia, R) @ tensor(R, al),
            [bb, ab, ab],
        ),
    ]
    return rep


def _tensor_comul(C, D) -> LinMap:
    """c (x) d -> c1 (x) d1 (x) c2 (x) d2."""
    n, m = C.dim, D.dim
    return tensor(C.comul, D.comul).reorder((n, n, m, m), (0, 2, 1, 3))


def check_R_coalgebra_map(T: TwistMap) -> CheckReport:
    B, A, R = T.left, T.right, T.R
    rep = CheckReport("R coalgebra map")
    rep.conditions += [
        compare("Rcoalg.comul", _tensor_comul(A, B) @ R, tensor(R, R) @ _tensor_comul(B, A), [B.basis, A.basis]),
        compare(
            "Rcoalg.counit",
            tensor(A.counit, B.counit) @ R,
            tensor(B.counit, A.counit),
            [B.basis, A.basis],
        ),
    ]
    return rep


def build_tensor_hom_coalgebra(C, D) -> HomCoalgebra:
    """``C (x) D`` with ``Delta(c (x) d) = c1 (x) d1 (x) c2 (x) d2`` and ``eps = eps_C eps_D``."""
    return HomCoalgebra(
        product_basis(C, D),
        _tensor_comul(C, D),
        tensor(C.counit, D.counit),
        tensor(C.alpha, D.alpha),
    )


def _r_smash_mul(A, B, R: LinMap) -> LinMap:
    Ia, Ib = identity(A.dim), identity(B.dim)
    return (
        tensor(A.mul, B.mul)
        @ tensor(Ia, Ia, B.alpha_inv, Ib)
        @ tensor(Ia, R, Ib)
        @ tensor(Ia, Ib, A.alpha_inv, Ib)
    )


def _require(rep: CheckReport, what: str) -> None:
    if not rep.ok:
        bad = rep.failures[0]
        raise ConditionFailed(
            "%s: condition %s fails at (%s)" % (what, bad.name, ", ".join(bad.witness_names)), rep
        )


def r_smash_algebra(A, B, T: TwistMap, force: bool = False) -> HomAlgebra:
    """The R-smash product as a Hom-algebra.

    With ``force`` the product is built even if the twist conditions fail,
    which is how the necessity of those conditions is exhibited.
    """
    if T.right.dim != A.dim or T.left.dim != B.dim:
        raise StructureError("twist map does not match the factors")
    if not force:
        _require(check_twist_conditions(T), "R-smash product")
    return HomAlgebra(
        product_basis(A, B),
        _r_smash_mul(A, B, T.R),
        tensor(A.unit, B.unit),
        tensor(A.alpha, B.alpha),
    )


def r_smash_antipode(A, B, T: TwistMap) -> LinMap:
    """a (x) b -> alpha^-1(S_A(a))_R (x) beta^-1(S_B(b)_R)."""
    return (
        tensor(identity(A.dim), B.alpha_inv)
        @ T.R
        @ tensor(B.antipode, A.alpha_inv @ A.antipode)
        @ swap(A.dim, B.dim)
    )


def build_r_smash(A, B, T: TwistMap, force: bool = False) -> SmashProduct:
    if not force:
        rep = check_twist_conditions(T)
        rep.extend(check_R_coalgebra_map(T))
        _require(rep, "R-smash Hom-Hopf algebra")
    alg = r_smash_algebra(A, B, T, force=True)
    H = HomHopfAlgebra.from_maps(
        alg.basis,
        alg.mul,
        alg.unit,
        _tensor_comul(A, B),
        tensor(A.counit, B.counit),
        r_smash_antipode(A, B, T),
        alg.alpha,
    )
    return SmashProduct(H, A, B, T)


def action_induced_twist(act: HomModuleAction, check: bool = True) -> TwistMap:
    """R(h (x) a) = (h1 |> a) (x) h2."""
    H, A = act.acting, act.carrier
    if check:
        rep = check_hom_module(act)
        rep.extend(check_module_hom_algebra(act))
        _require(rep, "action-induced twist")
    n, m = H.dim, A.dim
    R = tensor(act.act, identity(n)) @ tensor(H.comul, identity(m)).reorder((n, n, m), (0, 2, 1))
    return TwistMap(H, A, R)


def smash_antipode_from_action(act: HomModuleAction) -> LinMap:
    """a (x) h -> S_H(h)_1 |> alpha^-1(S_A(a)) (x) beta^-1(S_H(h)_2)."""
    H, A = act.acting, act.carrier
    n, m = H.dim, A.dim
    spread = tensor(H.comul, identity(m)).reorder((n, n, m), (0, 2, 1))
    return (
        tensor(act.act, H.alpha_inv)
        @ spread
        @ tensor(H.antipode, A.alpha_inv @ A.antipode)
        @ swap(m, n)
    )


def build_smash(A, H, act: HomModuleAction, force: bool = False) -> SmashProduct:
    """The smash product ``A # H`` of a module Hom-algebra, as a Hom-Hopf algebra."""
    if act.carrier.dim != A.dim or act.acting.dim != H.dim:
        raise StructureError("action does not match the factors")
    if not force:
        rep = check_hom_module(act)
        rep.extend(check_module_hom_algebra(act))
        rep.extend(check_module_hom_coalgebra(act))
        rep.extend(check_cocommutation_condition(act))
        _require(rep, "smash product")
    T = action_induced_twist(act, check=False)
    S = build_r_smash(A, H, T, force=force)
    if not force:
        direct = smash_antipode_from_action(act)
        if direct != S.underlying.antipode:
            rep = CheckReport("smash antipode")
            rep.conditions.append(compare("antipode.agree", direct, S.underlying.antipode, [A.basis, H.basis]))
            raise ConditionFailed("the two antipode formulas disagree", rep)
    return SmashProduct(S.underlying, A, H, T, act)


def embeddings(S: SmashProduct) -> tuple[LinMap, LinMap]:
    """``i(a) = a (x) 1`` and ``j(b) = 1 (x) b``."""
    return tensor(identity(S.A.dim), S.B.unit), tensor(S.A.unit, identity(S.B.dim))


def tensor_product_hopf(A, B) -> HomHopfAlgebra:
    """The componentwise tensor product ``(a (x) b)(a' (x) b') = aa' (x) bb'``."""
    n, m = A.dim, B.dim
    mul = tensor(A.mul, B.mul) @ tensor(identity(n), swap(m, n), identity(m))
    return HomHopfAlgebra.from_maps(
        product_basis(A, B),
        mul,
        tensor(A.unit, B.unit),
        _tensor_comul(A, B),
        tensor(A.counit, B.counit),
        tensor(A.antipode, B.antipode),
        tensor(A.alpha, B.alpha),
    )

"""Left Hom-modules and the module Hom-(co)algebra conditions."""

from __future__ import annotations

from dataclasses import dataclass

from .exactlin import LinMap, identity, swap, tensor
from .report import CheckReport, StructureError, compare

__all__ = [
    "HomModuleAction",
    "regular_action",
    "trivial_action",
    "check_hom_module",
    "check_module_hom_algebra",
    "check_module_hom_coalgebra",
    "check_cocommutation_condition",
]


@dataclass(frozen=True)
class HomModuleAction:
    """``act: H (x) A -> A`` with ``H`` acting through its structure map beta.

    ``acting`` is the Hom-(bi)algebra ``(H, beta)``; ``carrier`` is the module
    ``(A, alpha)``, which may also be a Hom-algebra or Hom-coalgebra.
    """

    acting: object
    carrier: object
    act: LinMap

    def __post_init__(self):
        want = (self.carrier.dim, self.acting.dim * self.carrier.dim)
        if self.act.shape != want:
            raise StructureError("action has shape %s, expected %s" % (self.act.shape, want))

    @property
    def dims(self) -> tuple[int, int]:
        return self.acting.dim, self.carrier.dim


def regular_action(A) -> HomModuleAction:
    """``A`` acting on itself by its multiplication."""
    return HomModuleAction(A, A, A.mul)


def trivial_action(H, A) -> HomModuleAction:
    """``h |> m = eps(h) alpha(m)``."""
    return HomModuleAction(H, A, tensor(H.counit, A.alpha))


def check_hom_module(act: HomModuleAction) -> CheckReport:
    H, A, f = act.acting, act.carrier, act.act
    be, al = H.alpha, A.alpha
    hb, ab = H.basis, A.basis
    A.alpha_inv  # structural
    rep = CheckReport("Hom-module")
    rep.conditions += [
        compare("HM1", al @ f, f @ tensor(be, al), [hb, ab]),
        compare("HM2", f @ tensor(be, f), f @ tensor(H.mul, al), [hb, hb, ab]),
        compare("HM2.unit", f @ tensor(H.unit, identity(A.dim)), al, [ab]),
    ]
    return rep


def check_module_hom_algebra(act: HomModuleAction) -> CheckReport:
    """beta^2(h) |> (aa') = (h1 |> a)(h2 |> a')  and  h |> 1 = eps(h) 1."""
    H, A, f = act.acting, act.carrier, act.act
    n, m = H.dim, A.dim
    hb, ab = H.basis, A.basis
    be2 = H.alpha @ H.alpha
    # h1 (x) h2 (x) a (x) a'  ->  h1 (x) a (x) h2 (x) a'
    split = tensor(H.comul, identity(m * m)).reorder((n, n, m, m), (0, 2, 1, 3))
    rep = CheckReport("module Hom-algebra")
    rep.conditions += [
        compare("HMA1", f @ tensor(be2, A.mul), A.mul @ tensor(f, f) @ split, [hb, ab, ab]),
        compare("HMA2", f @ tensor(identity(n), A.unit), A.unit @ H.counit, [hb]),
    ]
    return rep


def check_module_hom_coalgebra(act: HomModuleAction) -> CheckReport:
    """(h |> a)1 (x) (h |> a)2 = (h1 |> a1) (x) (h2 |> a2)  and  eps(h |> a) = eps(h) eps(a)."""
    H, A, f = act.acting, act.carrier, act.act
    n, m = H.dim, A.dim
    hb, ab = H.basis, A.basis
    split = tensor(H.comul, A.comul).reorder((n, n, m, m), (0, 2, 1, 3))
    rep = CheckReport("module Hom-coalgebra")
    rep.conditions += [
        compare("HMC.comul", A.comul @ f, tensor(f, f) @ split, [hb, ab]),
        compare("HMC.counit", A.counit @ f, tensor(H.counit, A.counit), [hb, ab]),
    ]
    return rep


def check_cocommutation_condition(act: HomModuleAction) -> CheckReport:
    """h1 (x) (h2 |> a) = h2 (x) (h1 |> a)."""
    H, A, f = act.acting, act.carrier, act.act
    n, m = H.dim, A.dim
    lifted = tensor(identity(n), f)
    spread = tensor(H.comul, identity(m))
    rep = CheckReport("cocommutation")
    rep.conditions.append(
        compare(
            "cocommutation",
            lifted @ spread,
            lifted @ tensor(swap(n, n), identity(m)) @ spread,
            [H.basis, A.basis],
        )
    )
    return rep

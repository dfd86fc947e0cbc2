"""Bilinear forms, cobraidings, Hom-skew pairings, and the correspondence
between cobraidings of an R-smash product and quadruples of forms on its
factors.

A bilinear form ``V x W -> K`` is stored as a row map ``V (x) W -> K``; its
matrix view puts ``V`` on rows. Products of form values such as
``s(h1, l) s(h2, g)`` are written as ``(s (x) s)`` applied after a reordering
of tensor factors.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Sequence

from .exactlin import LinMap, identity, tensor
from .report import CheckReport, StructureError, compare
from .smash import ConditionFailed, SmashProduct, TwistMap, embeddings

__all__ = [
    "BilinearForm",
    "CobraidingData",
    "counit_pairing",
    "check_cobraiding",
    "check_skew_pairing",
    "convolution_inverse_candidate",
    "convolve",
    "check_D_conditions",
    "check_D_prime_conditions",
    "check_cobraiding_data",
    "assemble_sigma",
    "decompose_sigma",
]


@dataclass(frozen=True)
class BilinearForm:
    left_dim: int
    right_dim: int
    map: LinMap

    def __post_init__(self):
        if self.map.shape != (1, self.left_dim * self.right_dim):
            raise StructureError(
                "form map has shape %s, expected (1, %d)" % (self.map.shape, self.left_dim * self.right_dim)
            )

    @classmethod
    def from_matrix(cls, rows: Sequence[Sequence]) -> "BilinearForm":
        rows = [list(r) for r in rows]
        return cls(len(rows), len(rows[0]), LinMap.row([v for r in rows for v in r]))

    @classmethod
    def from_map(cls, m: LinMap, left_dim: int, right_dim: int) -> "BilinearForm":
        return cls(left_dim, right_dim, m)

    def __call__(self, i: int, j: int) -> Fraction:
        return self.map[0, i * self.right_dim + j]

    def matrix(self) -> list[list[Fraction]]:
        row = self.map.entries()[0]
        r = self.right_dim
        return [row[i * r:(i + 1) * r] for i in range(self.left_dim)]

    def precompose(self, f: LinMap, g: LinMap) -> "BilinearForm":
        """``(v, w) -> form(f v, g w)``."""
        return BilinearForm(f.dom_dim, g.dom_dim, self.map @ tensor(f, g))


@dataclass(frozen=True)
class CobraidingData:
    """Forms ``tau`` on ``A x A``, ``upsilon`` on ``B x B``, ``phi`` on ``A x B``, ``psi`` on ``B x A``."""

    tau: BilinearForm
    upsilon: BilinearForm
    phi: BilinearForm
    psi: BilinearForm


def counit_pairing(A, B) -> BilinearForm:
    return BilinearForm(A.dim, B.dim, tensor(A.counit, B.counit))


def _pair(s: BilinearForm, t: BilinearForm) -> LinMap:
    return tensor(s.map, t.map)


def check_cobraiding(H, sigma: BilinearForm) -> CheckReport:
    n, b = H.dim, H.basis
    if (sigma.left_dim, sigma.right_dim) != (n, n):
        raise StructureError("form is %dx%d but the algebra has dim %d" % (sigma.left_dim, sigma.right_dim, n))
    I = identity(n)
    al, D, s = H.alpha, H.comul, sigma.map
    ss = _pair(sigma, sigma)
    rep = CheckReport("cobraiding")
    rep.conditions += [
        compare("CHA1.right", s @ tensor(I, H.unit), H.counit, [b]),
        compare("CHA1.left", s @ tensor(H.unit, I), H.counit, [b]),
        # s(hg, alpha(l)) = s(alpha(h), l1) s(alpha(g), l2)
        compare(
            "CHA2",
            s @ tensor(H.mul, al),
            ss @ tensor(al, al, D).reorder((n,) * 4, (0, 2, 1, 3)),
            [b, b, b],
        ),
        # s(alpha(h), gl) = s(h1, alpha(l)) s(h2, alpha(g))
        compare(
            "CHA3",
            s @ tensor(al, H.mul),
            ss @ tensor(D, al, al).reorder((n,) * 4, (0, 3, 1, 2)),
            [b, b, b],
        ),
        # s(h1, g1) h2 g2 = g1 h1 s(h2, g2)
        compare(
            "CHA4",
            tensor(s, H.mul) @ tensor(D, D).reorder((n,) * 4, (0, 2, 1, 3)),
            tensor(H.mul, s) @ tensor(D, D).reorder((n,) * 4, (2, 0, 1, 3)),
            [b, b],
        ),
        compare("CHA5", s @ tensor(al, al), s, [b, b]),
    ]
    return rep


def check_skew_pairing(A, B, theta: BilinearForm) -> CheckReport:
    n, m = A.dim, B.dim
    if (theta.left_dim, theta.right_dim) != (n, m):
        raise StructureError("form is %dx%d, expected %dx%d" % (theta.left_dim, theta.right_dim, n, m))
    ab, bb = A.basis, B.basis
    t = theta.map
    tt = _pair(theta, theta)
    al, be = A.alpha, B.alpha
    rep = CheckReport("Hom-skew pairing")
    rep.conditions += [
        compare("SP1.right", t @ tensor(identity(n), B.unit), A.counit, [ab]),
        compare("SP1.left", t @ tensor(A.unit, identity(m)), B.counit, [bb]),
        # t(aa', beta(b)) = t(alpha(a), b1) t(alpha(a'), b2)
        compare(
            "SP2",
            t @ tensor(A.mul, be),
            tt @ tensor(al, al, B.comul).reorder((n, n, m, m), (0, 2, 1, 3)),
            [ab, ab, bb],
        ),
        # t(alpha(a), bb') = t(a1, beta(b')) t(a2, beta(b))
        compare(
            "SP3",
            t @ tensor(al, B.mul),
            tt @ tensor(A.comul, be, be).reorder((n, n, m, m), (0, 3, 1, 2)),
            [ab, bb, bb],
        ),
        compare("SP4", t @ tensor(al, be), t, [ab, bb]),
    ]
    return rep


def convolve(A, B, f: BilinearForm, g: BilinearForm) -> BilinearForm:
    """(f * g)(a, b) = f(a1, b1) g(a2, b2)."""
    n, m = A.dim, B.dim
    spread = tensor(A.comul, B.comul).reorder((n, n, m, m), (0, 2, 1, 3))
    return BilinearForm(n, m, _pair(f, g) @ spread)


def convolution_inverse_candidate(A, B, theta: BilinearForm) -> tuple[BilinearForm, CheckReport]:
    """The form ``(a, b) -> theta(S_A(a), b)`` and whether it inverts ``theta`` under convolution."""
    cand = theta.precompose(A.antipode, identity(B.dim))
    eps = counit_pairing(A, B).map
    rep = CheckReport("convolution inverse")
    rep.conditions += [
        compare("conv.theta*inv", convolve(A, B, theta, cand).map, eps, [A.basis, B.basis]),
        compare("conv.inv*theta", convolve(A, B, cand, theta).map, eps, [A.basis, B.basis]),
    ]
    return cand, rep


def _check_D(A, B, Rt: LinMap, data: CobraidingData, mark: str) -> CheckReport:
    """The six compatibility conditions, given ``Rt(b (x) a) = alpha(alpha^-1(a)_R) (x) b_R``."""
    n, m = A.dim, B.dim
    ab, bb = A.basis, B.basis
    al, be = A.alpha, B.alpha
    Ia, Ib = identity(n), identity(m)
    tau, ups, phi, psi = data.tau, data.upsilon, data.phi, data.psi
    DA, DB = A.comul, B.comul
    rep = CheckReport("D conditions" + (" (action form)" if mark else ""))

    def name(k):
        return "D%d%s" % (k, mark)

    # phi(alpha(alpha^-1(a)_R), b1) ups(b'_R, b2) = ups(beta(b'), b1) phi(alpha(a), b2); vars (a, b, b')
    lhs = _pair(phi, ups) @ tensor(Rt, DB).reorder((n, m, m, m), (0, 2, 1, 3)) @ \
        tensor(Ia, Ib, Ib).reorder((n, m, m), (2, 0, 1))
    rhs = _pair(ups, phi) @ tensor(al, DB, be).reorder((n, m, m, m), (3, 1, 0, 2))
    rep.conditions.append(compare(name(1), lhs, rhs, [ab, bb, bb]))

    # tau(alpha(alpha^-1(a)_R), a'1) psi(b_R, a'2) = psi(beta(b), a'1) tau(alpha(a), a'2); vars (a, b, a')
    lhs = _pair(tau, psi) @ tensor(Rt, DA).reorder((n, m, n, n), (0, 2, 1, 3)) @ \
        tensor(Ia, Ib, Ia).reorder((n, m, n), (1, 0, 2))
    rhs = _pair(psi, tau) @ tensor(al, be, DA).reorder((n, m, n, n), (1, 2, 0, 3))
    rep.conditions.append(compare(name(2), lhs, rhs, [ab, bb, ab]))

    # ups(b1, b'_R) psi(b2, alpha(alpha^-1(a)_R)) = psi(b1, alpha(a)) ups(b2, beta(b')); vars (a, b, b')
    lhs = _pair(ups, psi) @ tensor(DB, Rt).reorder((m, m, n, m), (0, 3, 1, 2)) @ \
        tensor(Ia, Ib, Ib).reorder((n, m, m), (1, 2, 0))
    rhs = _pair(psi, ups) @ tensor(DB, al, be).reorder((m, m, n, m), (0, 2, 1, 3)) @ \
        tensor(Ia, Ib, Ib).reorder((n, m, m), (1, 0, 2))
    rep.conditions.append(compare(name(3), lhs, rhs, [ab, bb, bb]))

    # phi(a1, b_R) tau(a2, alpha(alpha^-1(a')_R)) = tau(a1, alpha(a')) phi(a2, beta(b)); vars (a, a', b)
    lhs = _pair(phi, tau) @ tensor(DA, Rt).reorder((n, n, n, m), (0, 3, 1, 2)) @ \
        tensor(Ia, Ia, Ib).reorder((n, n, m), (0, 2, 1))
    rhs = _pair(tau, phi) @ tensor(DA, al, be).reorder((n, n, n, m), (0, 2, 1, 3))
    rep.conditions.append(compare(name(4), lhs, rhs, [ab, ab, bb]))

    # psi(b1, a1) alpha(alpha^-1(a2)_R) (x) b2_R = alpha(a1) (x) beta(b1) psi(b2, a2); vars (b, a)
    spread = tensor(DB, DA)
    lhs = tensor(psi.map, Rt) @ spread.reorder((m, m, n, n), (0, 2, 1, 3))
    rhs = tensor(al, be, psi.map) @ spread.reorder((m, m, n, n), (2, 0, 1, 3))
    rep.conditions.append(compare(name(5), lhs, rhs, [bb, ab]))

    # phi(a1, b1) alpha(a2) (x) beta(b2) = alpha(alpha^-1(a1)_R) (x) b1_R phi(a2, b2); vars (a, b)
    spread = tensor(DA, DB)
    lhs = tensor(phi.map, al, be) @ spread.reorder((n, n, m, m), (0, 2, 1, 3))
    rhs = tensor(Rt, phi.map) @ spread.reorder((n, n, m, m), (2, 0, 1, 3))
    rep.conditions.append(compare(name(6), lhs, rhs, [ab, bb]))
    return rep


def check_D_conditions(A, B, T: TwistMap, data: CobraidingData) -> CheckReport:
    """Compatibility conditions between the four forms and the twist map."""
    _check_dims(A, B, data)
    Rt = tensor(A.alpha, identity(B.dim)) @ T.R @ tensor(identity(B.dim), A.alpha_inv)
    return _check_D(A, B, Rt, data, "")


def check_D_prime_conditions(A, H, act, data: CobraidingData) -> CheckReport:
    """The same conditions written directly in terms of a module action.

    Here ``alpha(alpha^-1(a)_R) (x) h_R`` is ``beta(h1) |> a (x) h2``.
    """
    _check_dims(A, H, data)
    n, m = A.dim, H.dim
    Rt = tensor(act.act, identity(m)) @ tensor(H.alpha, identity(n), identity(m)) @ \
        tensor(H.comul, identity(n)).reorder((m, m, n), (0, 2, 1))
    return _check_D(A, H, Rt, data, "'")


def _check_dims(A, B, data: CobraidingData) -> None:
    want = {
        "tau": (A.dim, A.dim),
        "upsilon": (B.dim, B.dim),
        "phi": (A.dim, B.dim),
        "psi": (B.dim, A.dim),
    }
    for key, dims in want.items():
        f = getattr(data, key)
        if (f.left_dim, f.right_dim) != dims:
            raise StructureError("%s is %dx%d, expected %dx%d" % ((key, f.left_dim, f.right_dim) + dims))


def check_cobraiding_data(A, B, T: TwistMap, data: CobraidingData) -> CheckReport:
    """Component axioms for all four forms, then the D conditions."""
    _check_dims(A, B, data)
    rep = CheckReport("cobraiding data")
    for label, sub in (
        ("tau", check_cobraiding(A, data.tau)),
        ("upsilon", check_cobraiding(B, data.upsilon)),
        ("phi", check_skew_pairing(A, B, data.phi)),
        ("psi", check_skew_pairing(B, A, data.psi)),
    ):
        rep.conditions += [replace(c, name=label + ":" + c.name) for c in sub.conditions]
    rep.extend(check_D_conditions(A, B, T, data))
    return rep


def assemble_sigma(A, B, data: CobraidingData, T: TwistMap | None = None, force: bool = False) -> BilinearForm:
    """The form on ``(A (x) B) x (A (x) B)`` built from the four pieces.

    sigma(x (x) u, y (x) v) = phi(X1, V1) tau(X2, Y1) ups(U1, V2) psi(U2, Y2)
    with X = alpha^-1(x), U = beta^-1(u), Y = alpha^-1(y), V = beta^-1(v).
    Unless ``force`` is set, the component axioms (and, given ``T``, the D
    conditions) must hold.
    """
    _check_dims(A, B, data)
    if not force:
        if T is not None:
            rep = check_cobraiding_data(A, B, T, data)
        else:
            rep = CheckReport("cobraiding data")
            rep.extend(check_cobraiding(A, data.tau)).extend(check_cobraiding(B, data.upsilon))
            rep.extend(check_skew_pairing(A, B, data.phi)).extend(check_skew_pairing(B, A, data.psi))
        if not rep.ok:
            bad = rep.failures[0]
            raise ConditionFailed("cannot assemble sigma: %s fails" % bad.name, rep)
    n, m = A.dim, B.dim
    ai, bi = A.alpha_inv, B.alpha_inv
    spread = tensor(A.comul @ ai, B.comul @ bi, A.comul @ ai, B.comul @ bi)
    # X1 X2 U1 U2 Y1 Y2 V1 V2  ->  X1 V1 X2 Y1 U1 V2 U2 Y2
    order = (0, 6, 1, 4, 2, 7, 3, 5)
    four = tensor(data.phi.map, data.tau.map, data.upsilon.map, data.psi.map)
    sigma = four @ spread.reorder((n, n, m, m, n, n, m, m), order)
    return BilinearForm(n * m, n * m, sigma)


def decompose_sigma(S: SmashProduct, sigma: BilinearForm, check: bool = True) -> CobraidingData:
    """Restrict a cobraiding of ``A (x) B`` along the embeddings ``a -> a (x) 1`` and ``b -> 1 (x) b``."""
    if check:
        rep = check_cobraiding(S.underlying, sigma)
        if not rep.ok:
            raise ConditionFailed("sigma is not a cobraiding: %s fails" % rep.failures[0].name, rep)
    i, j = embeddings(S)
    return CobraidingData(
        tau=sigma.precompose(i, i),
        upsilon=sigma.precompose(j, j),
        phi=sigma.precompose(i, j),
        psi=sigma.precompose(j, i),
    )


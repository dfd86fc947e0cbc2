"""Brute-force reference computations.

Everything here works on plain lists of Fractions with explicit loops over
basis indices, deliberately sharing nothing with the map-composition route
the package uses.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product


def table(m) -> list[list[Fraction]]:
    return [list(r) for r in m.entries()]


class Alg:
    """Structure constants of a (Hom-)algebra/coalgebra as nested lists."""

    def __init__(self, H):
        self.n = n = H.dim
        self.basis = H.basis
        self.alpha = table(H.alpha)
        if hasattr(H, "mul"):
            M = table(H.mul)
            self.mul = [[[M[k][i * n + j] for k in range(n)] for j in range(n)] for i in range(n)]
            self.unit = [r[0] for r in table(H.unit)]
        if hasattr(H, "comul"):
            D = table(H.comul)
            self.comul = [[[D[j * n + k][i] for k in range(n)] for j in range(n)] for i in range(n)]
            self.counit = table(H.counit)[0]
        if hasattr(H, "antipode"):
            self.S = table(H.antipode)

    def e(self, i):
        return [Fraction(int(k == i)) for k in range(self.n)]

    def apply(self, mat, v):
        return [sum((mat[r][c] * v[c] for c in range(self.n)), Fraction(0)) for r in range(self.n)]

    def a(self, v):
        return self.apply(self.alpha, v)

    def a_inv(self, v):
        # solve alpha w = v by Gauss-Jordan on a copy
        n = self.n
        aug = [list(self.alpha[r]) + [v[r]] for r in range(n)]
        for c in range(n):
            p = next(r for r in range(c, n) if aug[r][c] != 0)
            aug[c], aug[p] = aug[p], aug[c]
            piv = aug[c][c]
            aug[c] = [x / piv for x in aug[c]]
            for r in range(n):
                if r != c and aug[r][c] != 0:
                    f = aug[r][c]
                    aug[r] = [x - f * y for x, y in zip(aug[r], aug[c])]
        return [aug[r][n] for r in range(n)]

    def m(self, u, v):
        out = [Fraction(0)] * self.n
        for i, j in product(range(self.n), repeat=2):
            c = u[i] * v[j]
            if c:
                for k in range(self.n):
                    out[k] += c * self.mul[i][j][k]
        return out

    def d(self, u):
        """Comultiplication as a dict {(j, k): coeff}."""
        out = {}
        for i in range(self.n):
            if u[i]:
                for j, k in product(range(self.n), repeat=2):
                    c = self.comul[i][j][k]
                    if c:
                        out[(j, k)] = out.get((j, k), 0) + u[i] * c
        return {key: c for key, c in out.items() if c}

    def eps(self, u):
        return sum((x * y for x, y in zip(self.counit, u)), Fraction(0))


def add(u, v, c=1):
    return [x + c * y for x, y in zip(u, v)]


def scale(u, c):
    return [c * x for x in u]


def is_hom_associative(H) -> bool:
    A = Alg(H)
    for i, j, k in product(range(A.n), repeat=3):
        x, y, z = A.e(i), A.e(j), A.e(k)
        if A.m(A.a(x), A.m(y, z)) != A.m(A.m(x, y), A.a(z)):
            return False
    return True


def hom_assoc_witness(H):
    A = Alg(H)
    for i, j, k in product(range(A.n), repeat=3):
        x, y, z = A.e(i), A.e(j), A.e(k)
        if A.m(A.a(x), A.m(y, z)) != A.m(A.m(x, y), A.a(z)):
            return (H.basis[i], H.basis[j], H.basis[k])
    return None


def antipode_ok(H) -> bool:
    """S(h1) h2 = h1 S(h2) = eps(h) 1 on all basis elements."""
    A = Alg(H)
    for i in range(A.n):
        left = [Fraction(0)] * A.n
        right = [Fraction(0)] * A.n
        for (j, k), c in A.d(A.e(i)).items():
            left = add(left, A.m(A.apply(A.S, A.e(j)), A.e(k)), c)
            right = add(right, A.m(A.e(j), A.apply(A.S, A.e(k))), c)
        want = scale(A.unit, A.eps(A.e(i)))
        if left != want or right != want:
            return False
    return True


class ActionSmash:
    """The smash product ``A # H`` computed straight from the action formulas."""

    def __init__(self, act):
        self.A = Alg(act.carrier)
        self.H = Alg(act.acting)
        T = table(act.act)
        na = self.A.n
        self.act = [[[T[k][h * na + m] for k in range(na)] for m in range(na)] for h in range(self.H.n)]

    def tri(self, hv, av):
        out = [Fraction(0)] * self.A.n
        for h in range(self.H.n):
            for m in range(self.A.n):
                c = hv[h] * av[m]
                if c:
                    out = add(out, self.act[h][m], c)
        return out

    def mul(self, i, j, k, l) -> dict:
        """(a_i # h_j)(a_k # h_l) = a_i (h_j1 |> alpha^-1(a_k)) # beta^-1(h_j2) h_l."""
        A, H = self.A, self.H
        out = {}
        for (p, q), c in H.d(H.e(j)).items():
            left = A.m(A.e(i), self.tri(H.e(p), A.a_inv(A.e(k))))
            right = H.m(H.a_inv(H.e(q)), H.e(l))
            for x, y in product(range(A.n), range(H.n)):
                v = c * left[x] * right[y]
                if v:
                    out[(x, y)] = out.get((x, y), 0) + v
        return {key: v for key, v in out.items() if v}

    def antipode(self, i, j) -> dict:
        """a # h -> S_H(h)_1 |> alpha^-1(S_A(a)) # beta^-1(S_H(h)_2)."""
        A, H = self.A, self.H
        sa = A.a_inv(A.apply(A.S, A.e(i)))
        out = {}
        for (p, q), c in H.d(H.apply(H.S, H.e(j))).items():
            left = self.tri(H.e(p), sa)
            right = H.a_inv(H.e(q))
            for x, y in product(range(A.n), range(H.n)):
                v = c * left[x] * right[y]
                if v:
                    out[(x, y)] = out.get((x, y), 0) + v
        return {key: v for key, v in out.items() if v}


def form_value(M, u, v):
    return sum((u[i] * M[i][j] * v[j] for i in range(len(u)) for j in range(len(v))), Fraction(0))


def sigma_entry(A, B, tau, ups, phi, psi, x, u, y, v):
    """phi(X1, V1) tau(X2, Y1) ups(U1, V2) psi(U2, Y2) with X = alpha^-1(e_x), ...

    ``A``/``B`` are :class:`Alg`; forms are matrices (lists of rows).
    """
    X, Y = A.a_inv(A.e(x)), A.a_inv(A.e(y))
    U, V = B.a_inv(B.e(u)), B.a_inv(B.e(v))
    total = Fraction(0)
    for (x1, x2), cx in A.d(X).items():
        for (y1, y2), cy in A.d(Y).items():
            for (u1, u2), cu in B.d(U).items():
                for (v1, v2), cv in B.d(V).items():
                    total += cx * cy * cu * cv * phi[x1][v1] * tau[x2][y1] * ups[u1][v2] * psi[u2][y2]
    return total


def sigma_table(A, B, tau, ups, phi, psi):
    A, B = Alg(A), Alg(B)
    idx = [(a, b) for a in range(A.n) for b in range(B.n)]
    return [[sigma_entry(A, B, tau, ups, phi, psi, x, u, y, v) for (y, v) in idx] for (x, u) in idx]


def cobraiding_ok(H, M) -> bool:
    """All five cobraiding axioms by explicit Sweedler sums."""
    A = Alg(H)
    n = A.n
    E = A.e
    for i in range(n):
        if form_value(M, E(i), A.unit) != A.eps(E(i)) or form_value(M, A.unit, E(i)) != A.eps(E(i)):
            return False
    for h, g, l in product(range(n), repeat=3):
        lhs = form_value(M, A.m(E(h), E(g)), A.a(E(l)))
        rhs = sum((c * form_value(M, A.a(E(h)), E(p)) * form_value(M, A.a(E(g)), E(q))
                   for (p, q), c in A.d(E(l)).items()), Fraction(0))
        if lhs != rhs:
            return False
        lhs = form_value(M, A.a(E(h)), A.m(E(g), E(l)))
        rhs = sum((c * form_value(M, E(p), A.a(E(l))) * form_value(M, E(q), A.a(E(g)))
                   for (p, q), c in A.d(E(h)).items()), Fraction(0))
        if lhs != rhs:
            return False
    for h, g in product(range(n), repeat=2):
        lhs = [Fraction(0)] * n
        rhs = [Fraction(0)] * n
        for (h1, h2), ch in A.d(E(h)).items():
            for (g1, g2), cg in A.d(E(g)).items():
                lhs = add(lhs, A.m(E(h2), E(g2)), ch * cg * M[h1][g1])
                rhs = add(rhs, A.m(E(g1), E(h1)), ch * cg * M[h2][g2])
        if lhs != rhs:
            return False
        if form_value(M, A.a(E(h)), A.a(E(g))) != M[h][g]:
            return False
    return True

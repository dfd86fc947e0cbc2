"""Shared fixtures: random 2-dimensional Hom-algebras and twist maps that break
exactly one of the three R-smash conditions."""

from __future__ import annotations

import random
from fractions import Fraction

from homsmash.exactlin import LinMap, identity, nullspace, swap, tensor
from homsmash.homcore import HomAlgebra
from homsmash.smash import TwistMap, check_twist_conditions

SCALARS = [1, -1, 2, -2, 3, Fraction(1, 2), Fraction(-3, 2), Fraction(5, 3)]


def quadratic_algebra(s, lam, name="t") -> HomAlgebra:
    """Yau twist of K[t]/(t^2 - s) along t -> lam t (needs lam^2 s = s)."""
    s, lam = Fraction(s), Fraction(lam)
    assert lam * lam * s == s
    mul = LinMap([[1, 0, 0, s], [0, 1, 1, 0]])
    al = LinMap([[1, 0], [0, lam]])
    return HomAlgebra(("1", name), al @ mul, LinMap.column([1, 0]), al)


def random_algebra(rng: random.Random, name="t") -> HomAlgebra:
    # dual numbers admit any lam; otherwise lam = -1 is e.g. the factor swap of K x K
    if rng.random() < 0.5:
        return quadratic_algebra(0, rng.choice(SCALARS), name)
    return quadratic_algebra(rng.choice(SCALARS), rng.choice([1, -1]), name)


def split_algebra(rng: random.Random, name="t") -> tuple[HomAlgebra, list[Fraction]]:
    """K[t]/(t^2 - r^2) with alpha = id and an idempotent other than 0, 1."""
    r = Fraction(rng.choice(SCALARS))
    e = [Fraction(1, 2), rng.choice([1, -1]) / (2 * r)]
    return quadratic_algebra(r * r, 1, name), e


def eq4_solutions(A, B) -> list[list[Fraction]]:
    """Basis of the E with E (beta (x) alpha) = (alpha (x) beta) E, flattened row-major."""
    P, Q = tensor(B.alpha, A.alpha), tensor(A.alpha, B.alpha)
    rows = []
    for r in range(4):
        for c in range(4):
            row = [Fraction(0)] * 16
            for k in range(4):
                row[r * 4 + k] += P[k, c]
                row[k * 4 + c] -= Q[r, k]
            rows.append(row)
    # only perturb the column of t (x) t
    for r in range(4):
        for c in range(3):
            row = [Fraction(0)] * 16
            row[r * 4 + c] = Fraction(1)
            rows.append(row)
    return nullspace(LinMap(rows))


def base_twist(A, B) -> LinMap:
    """b (x) a -> alpha(a) (x) beta(b), which satisfies every condition."""
    return tensor(A.alpha, B.alpha) @ swap(B.dim, A.dim)


def _c1_breaker(rng: random.Random):
    """Multiply by a fixed idempotent on one side: only the unit condition fails."""
    if rng.random() < 0.5:
        A = random_algebra(rng, "t")
        B, e = split_algebra(rng, "u")
        e_map = B.mul @ tensor(identity(2), LinMap.column(e))
        R = tensor(A.alpha, e_map @ B.alpha) @ swap(2, 2)
    else:
        A, e = split_algebra(rng, "t")
        B = random_algebra(rng, "u")
        e_map = A.mul @ tensor(identity(2), LinMap.column(e))
        R = tensor(e_map @ A.alpha, B.alpha) @ swap(2, 2)
    return A, B, R


def _top_breaker(rng: random.Random):
    """Perturb R(t (x) t) inside the solutions of the compatibility with alpha, beta."""
    A, B = random_algebra(rng, "t"), random_algebra(rng, "u")
    sols = eq4_solutions(A, B)
    E = [Fraction(0)] * 16
    for v in sols:
        c = rng.choice([-2, -1, 1, 2, Fraction(1, 2)])
        E = [x + c * y for x, y in zip(E, v)]
    return A, B, base_twist(A, B) + LinMap([E[i * 4:(i + 1) * 4] for i in range(4)])


def single_violation(rng: random.Random, target: str, tries: int = 500):
    """An (A, B, twist) breaking ``target`` and none of the other two conditions."""
    make = _c1_breaker if target == "C1" else _top_breaker
    for _ in range(tries):
        A, B, R = make(rng)
        T = TwistMap(B, A, R)
        rep = check_twist_conditions(T)
        broken = {c for c in ("C1", "C2", "C3") if rep.failed(c)}
        if rep["twist.alpha_beta"].passed and broken == {target}:
            return A, B, T
    raise RuntimeError("no instance breaking only %s found" % target)

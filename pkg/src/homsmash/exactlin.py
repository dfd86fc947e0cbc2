"""Exact rational linear maps between finite-dimensional spaces.

A :class:`LinMap` is stored as an integer matrix together with one positive
common denominator, kept in lowest terms, so equality of maps is equality of
their stored data. Products run on int64 when the operand bounds guarantee
no overflow and on Python integers otherwise; results are exact either way.

Tensor products order bases left-factor-major: ``e_i (x) f_j`` sits at flat
index ``i * dim(F) + j``.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import reduce
from typing import Iterable, Sequence

import numpy as np

__all__ = [
    "Scalar",
    "to_scalar",
    "DimensionError",
    "SingularMapError",
    "LinMap",
    "TensorIndex",
    "identity",
    "zeros",
    "compose",
    "tensor",
    "invert",
    "swap",
    "permute",
    "nullspace",
]

Scalar = Fraction

_INT64_SAFE = 2**62


def to_scalar(value) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to an exact scalar."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        raise TypeError("floating-point scalars are not accepted: %r" % (value,))
    if isinstance(value, str):
        return Fraction(value.strip())
    return Fraction(value)


class DimensionError(ValueError):
    pass


class SingularMapError(ValueError):
    """Raised when inverting a map that is not an automorphism."""


def _maxabs(a: np.ndarray) -> int:
    if a.size == 0:
        return 0
    return int(max(abs(int(a.max())), abs(int(a.min()))))


def _as_object(a: np.ndarray) -> np.ndarray:
    if a.dtype == object:
        return a
    out = np.empty(a.size, dtype=object)
    out[:] = [int(v) for v in a.ravel()]
    return out.reshape(a.shape)


def _shrink(a: np.ndarray) -> np.ndarray:
    if a.dtype != object:
        return a
    if a.size == 0 or _maxabs(a) < _INT64_SAFE:
        return a.astype(np.int64)
    return a


def _imatmul(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    inner = x.shape[1]
    if x.dtype != object and y.dtype != object:
        if _maxabs(x) * _maxabs(y) * max(inner, 1) < _INT64_SAFE:
            return x @ y
    return _shrink(np.dot(_as_object(x), _as_object(y)))


def _ikron(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    if x.dtype != object and y.dtype != object:
        if _maxabs(x) * _maxabs(y) < _INT64_SAFE:
            return np.kron(x, y)
    return _shrink(np.kron(_as_object(x), _as_object(y)))


def _iscale(x: np.ndarray, c: int) -> np.ndarray:
    if x.dtype != object and _maxabs(x) * abs(c) < _INT64_SAFE:
        return x * c
    return _shrink(_as_object(x) * c)


def _iadd(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    if x.dtype != object and y.dtype != object:
        if _maxabs(x) + _maxabs(y) < _INT64_SAFE:
            return x + y
    return _shrink(_as_object(x) + _as_object(y))


def _content(a: np.ndarray) -> int:
    if a.size == 0:
        return 0
    if a.dtype != object:
        return int(np.gcd.reduce(np.abs(a).ravel()))
    return reduce(math.gcd, (abs(int(v)) for v in a.ravel()), 0)


class LinMap:
    """Linear map ``K^dom_dim -> K^cod_dim`` with exact rational entries.

    ``entries[r][c]`` is the coefficient of basis vector ``r`` in the image of
    basis vector ``c``. Instances are immutable.
    """

    __slots__ = ("_num", "_den")

    def __init__(self, entries: Sequence[Sequence] | np.ndarray):
        rows = [[to_scalar(v) for v in row] for row in entries]
        if not rows or not rows[0]:
            raise DimensionError("a LinMap needs positive dimensions")
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise DimensionError("ragged matrix rows")
        den = reduce(math.lcm, (v.denominator for r in rows for v in r), 1)
        num = np.empty((len(rows), width), dtype=object)
        for i, r in enumerate(rows):
            for j, v in enumerate(r):
                num[i, j] = v.numerator * (den // v.denominator)
        self._set(_shrink(num), den)

    def _set(self, num: np.ndarray, den: int) -> None:
        g = math.gcd(_content(num), den)
        if g > 1:
            num = num // g
            den //= g
        if not num.any():
            den = 1
        num.flags.writeable = False
        object.__setattr__(self, "_num", num)
        object.__setattr__(self, "_den", int(den))

    @classmethod
    def _from_scaled(cls, num: np.ndarray, den: int) -> "LinMap":
        if num.ndim != 2 or num.shape[0] == 0 or num.shape[1] == 0:
            raise DimensionError("a LinMap needs positive dimensions, got %s" % (num.shape,))
        if den <= 0:
            num, den = -num, -den
        out = cls.__new__(cls)
        out._set(_shrink(np.array(num, copy=True)), den)
        return out

    def __setattr__(self, name, value):
        raise AttributeError("LinMap is immutable")

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence]) -> "LinMap":
        return cls([list(r) for r in zip(*columns)])

    @classmethod
    def row(cls, values: Sequence) -> "LinMap":
        return cls([list(values)])

    @classmethod
    def column(cls, values: Sequence) -> "LinMap":
        return cls([[v] for v in values])

    @property
    def cod_dim(self) -> int:
        return self._num.shape[0]

    @property
    def dom_dim(self) -> int:
        return self._num.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return self._num.shape

    def __getitem__(self, idx: tuple[int, int]) -> Fraction:
        r, c = idx
        return Fraction(int(self._num[r, c]), self._den)

    def col(self, c: int) -> list[Fraction]:
        return [Fraction(int(v), self._den) for v in self._num[:, c]]

    def entries(self) -> list[list[Fraction]]:
        return [[Fraction(int(v), self._den) for v in row] for row in self._num]

    def nonzero(self) -> Iterable[tuple[int, int, Fraction]]:
        """Nonzero entries as ``(row, col, value)`` in row-major order."""
        for r, c in zip(*np.nonzero(self._num)):
            yield int(r), int(c), Fraction(int(self._num[r, c]), self._den)

    def is_zero(self) -> bool:
        return not self._num.any()

    def __eq__(self, other) -> bool:
        if not isinstance(other, LinMap):
            return NotImplemented
        return (
            self.shape == other.shape
            and self._den == other._den
            and bool(np.array_equal(self._num, other._num))
        )

    def __hash__(self) -> int:
        return hash((self.shape, self._den, tuple(int(v) for v in self._num.ravel())))

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(v) for v in row) for row in self.entries())
        return "LinMap(%dx%d: %s)" % (self.cod_dim, self.dom_dim, body)

    def __matmul__(self, other: "LinMap") -> "LinMap":
        return compose(self, other)

    def __call__(self, vector: Sequence) -> list[Fraction]:
        if len(vector) != self.dom_dim:
            raise DimensionError("vector of length %d fed to map with dom_dim %d" % (len(vector), self.dom_dim))
        return (self @ LinMap.column(vector)).col(0)

    def _binop(self, other: "LinMap", sign: int) -> "LinMap":
        if self.shape != other.shape:
            raise DimensionError("cannot add maps of shapes %s and %s" % (self.shape, other.shape))
        den = math.lcm(self._den, other._den)
        a = _iscale(self._num, den // self._den)
        b = _iscale(other._num, sign * (den // other._den))
        return LinMap._from_scaled(_iadd(a, b), den)

    def __add__(self, other: "LinMap") -> "LinMap":
        return self._binop(other, 1)

    def __sub__(self, other: "LinMap") -> "LinMap":
        return self._binop(other, -1)

    def __neg__(self) -> "LinMap":
        return LinMap._from_scaled(_iscale(self._num, -1), self._den)

    def scale(self, c) -> "LinMap":
        c = to_scalar(c)
        return LinMap._from_scaled(_iscale(self._num, c.numerator), self._den * c.denominator)

    __rmul__ = scale

    def tensor(self, other: "LinMap") -> "LinMap":
        return tensor(self, other)

    def reorder(self, dims: Sequence[int], order: Sequence[int]) -> "LinMap":
        """Return ``permute(dims, order) @ self`` without building the permutation."""
        dims = tuple(dims)
        if math.prod(dims) != self.cod_dim:
            raise DimensionError("factor dims %s do not multiply to cod_dim %d" % (dims, self.cod_dim))
        if sorted(order) != list(range(len(dims))):
            raise ValueError("order %s is not a permutation" % (order,))
        arr = self._num.reshape(dims + (self.dom_dim,))
        arr = np.transpose(arr, tuple(order) + (len(dims),))
        return LinMap._from_scaled(arr.reshape(self.cod_dim, self.dom_dim), self._den)

    def transpose(self) -> "LinMap":
        return LinMap._from_scaled(self._num.T, self._den)


def identity(n: int) -> LinMap:
    return LinMap._from_scaled(np.eye(n, dtype=np.int64), 1)


def zeros(cod_dim: int, dom_dim: int) -> LinMap:
    return LinMap._from_scaled(np.zeros((cod_dim, dom_dim), dtype=np.int64), 1)


def compose(f: LinMap, g: LinMap) -> LinMap:
    """``f o g``: apply ``g`` first."""
    if g.cod_dim != f.dom_dim:
        raise DimensionError(
            "cannot compose: inner map has cod_dim %d but outer map has dom_dim %d" % (g.cod_dim, f.dom_dim)
        )
    return LinMap._from_scaled(_imatmul(f._num, g._num), f._den * g._den)


def tensor(*maps: LinMap) -> LinMap:
    """Tensor product of maps, left factor most significant."""
    if not maps:
        raise ValueError("tensor() needs at least one map")
    out = maps[0]
    for m in maps[1:]:
        out = LinMap._from_scaled(_ikron(out._num, m._num), out._den * m._den)
    return out


def invert(f: LinMap) -> LinMap:
    """Exact inverse by fraction-free (Bareiss) Gauss-Jordan elimination."""
    n = f.cod_dim
    if f.dom_dim != n:
        raise DimensionError("cannot invert a %dx%d map" % f.shape)
    # f = N / d, so f^-1 = d * N^-1
    a = [[int(v) for v in row] + [int(i == j) for j in range(n)] for i, row in enumerate(f._num)]
    prev = 1
    for k in range(n):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    break
            else:
                raise SingularMapError("not an automorphism: map is singular")
        pivot = a[k][k]
        rk = a[k]
        for i in range(n):
            if i == k:
                continue
            ri = a[i]
            m = ri[k]
            a[i] = [(pivot * ri[j] - m * rk[j]) // prev for j in range(2 * n)]
        prev = pivot
    # every diagonal entry now equals the last pivot
    inv = [[Fraction(a[i][n + j] * f._den, a[i][i]) for j in range(n)] for i in range(n)]
    return LinMap(inv)


def swap(dim_a: int, dim_b: int) -> LinMap:
    """Flip ``A (x) B -> B (x) A``."""
    return identity(dim_a * dim_b).reorder((dim_a, dim_b), (1, 0))


def permute(dims: Sequence[int], order: Sequence[int]) -> LinMap:
    """Map ``V_0 (x) ... (x) V_{n-1} -> V_{order[0]} (x) ... (x) V_{order[n-1]}``."""
    return identity(math.prod(dims)).reorder(dims, order)


def nullspace(f: LinMap) -> list[list[Fraction]]:
    """Basis of the kernel of ``f`` via exact reduced row echelon form."""
    rows = f.entries()
    m, n = f.shape
    pivots = []
    r = 0
    for c in range(n):
        p = next((i for i in range(r, m) if rows[i][c] != 0), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        lead = rows[r][c]
        rows[r] = [v / lead for v in rows[r]]
        for i in range(m):
            if i != r and rows[i][c] != 0:
                factor = rows[i][c]
                rows[i] = [vi - factor * vr for vi, vr in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == m:
            break
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * n
        v[fc] = Fraction(1)
        for i, pc in enumerate(pivots):
            v[pc] = -rows[i][fc]
        basis.append(v)
    return basis


class TensorIndex:
    """Flat indexing of ``V_1 (x) ... (x) V_n`` with the left factor most significant."""

    def __init__(self, factor_dims: Sequence[int]):
        if not factor_dims or any(d <= 0 for d in factor_dims):
            raise DimensionError("factor dims must be positive, got %s" % (list(factor_dims),))
        self.factor_dims = tuple(int(d) for d in factor_dims)

    @property
    def size(self) -> int:
        return math.prod(self.factor_dims)

    def flat(self, *idx: int) -> int:
        if len(idx) != len(self.factor_dims):
            raise DimensionError("expected %d indices, got %d" % (len(self.factor_dims), len(idx)))
        out = 0
        for i, d in zip(idx, self.factor_dims):
            if not 0 <= i < d:
                raise IndexError("index %d out of range for factor of dim %d" % (i, d))
            out = out * d + i
        return out

    def unflatten(self, n: int) -> tuple[int, ...]:
        if not 0 <= n < self.size:
            raise IndexError("flat index %d out of range" % n)
        out = []
        for d in reversed(self.factor_dims):
            n, i = divmod(n, d)
            out.append(i)
        return tuple(reversed(out))

    def __iter__(self):
        return (self.unflatten(n) for n in range(self.size))

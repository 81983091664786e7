"""Supermatrices over ``Q[x]`` (symbolic) and over ``Q`` (numeric)."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import sympy

from ..errors import InvalidParameterError
from .tensor import Superspace, x

NumMatrix = tuple[tuple[Fraction, ...], ...]


def _frac(v) -> Fraction:
    r = sympy.Rational(v)
    return Fraction(int(r.p), int(r.q))


@dataclass(frozen=True)
class PolyMatrix:
    space: Superspace
    entries: sympy.ImmutableMatrix

    @classmethod
    def from_rows(cls, space: Superspace, rows: Sequence[Sequence]) -> PolyMatrix:
        M = sympy.ImmutableMatrix([[sympy.sympify(v) for v in row] for row in rows])
        if M.shape != (space.dim, space.dim):
            raise InvalidParameterError(f"expected a {space.dim}x{space.dim} matrix, got {M.shape}")
        return cls(space, M)

    @classmethod
    def zero(cls, space: Superspace) -> PolyMatrix:
        return cls(space, sympy.ImmutableMatrix.zeros(space.dim, space.dim))

    @classmethod
    def unit(cls, space: Superspace, a: int, b: int, coeff=1) -> PolyMatrix:
        M = sympy.zeros(space.dim, space.dim)
        M[a, b] = coeff
        return cls(space, sympy.ImmutableMatrix(M))

    def __getitem__(self, ab: tuple[int, int]):
        return self.entries[ab]

    def _check(self, other: PolyMatrix) -> None:
        if other.space != self.space:
            raise InvalidParameterError("supermatrices live on different superspaces")

    def __add__(self, other: PolyMatrix) -> PolyMatrix:
        self._check(other)
        return PolyMatrix(self.space, (self.entries + other.entries).applyfunc(sympy.expand))

    def __sub__(self, other: PolyMatrix) -> PolyMatrix:
        self._check(other)
        return PolyMatrix(self.space, (self.entries - other.entries).applyfunc(sympy.expand))

    def __rmul__(self, scalar) -> PolyMatrix:
        return PolyMatrix(self.space, (sympy.sympify(scalar) * self.entries).applyfunc(sympy.expand))

    def __matmul__(self, other: PolyMatrix) -> PolyMatrix:
        self._check(other)
        return PolyMatrix(self.space, (self.entries * other.entries).applyfunc(sympy.expand))

    def nonzero(self):
        d = self.space.dim
        for a in range(d):
            for b in range(d):
                v = sympy.expand(self.entries[a, b])
                if v != 0:
                    yield a, b, v

    def parity(self) -> int:
        """0 (even) or 1 (odd); raises for inhomogeneous matrices.

        The zero matrix counts as even.
        """
        ps = {self.space.entry_parity(a, b) for a, b, _ in self.nonzero()}
        if len(ps) > 1:
            raise InvalidParameterError("supermatrix is not parity-homogeneous")
        return ps.pop() if ps else 0

    def supertrace(self):
        return sympy.expand(sum(self.space.str_sign(i) * self.entries[i, i] for i in range(self.space.dim)))

    def bracket(self, other: PolyMatrix) -> PolyMatrix:
        sign = -1 if self.parity() and other.parity() else 1
        return (self @ other) - sign * (other @ self)

    def is_zero(self) -> bool:
        return next(self.nonzero(), None) is None

    def equals(self, other: PolyMatrix) -> bool:
        return (self - other).is_zero()

    def at(self, eps: Fraction | int) -> NumMatrix:
        e = sympy.Rational(Fraction(eps).numerator, Fraction(eps).denominator)
        d = self.space.dim
        return tuple(tuple(_frac(self.entries[a, b].subs(x, e)) for b in range(d)) for a in range(d))


# numeric supermatrices -------------------------------------------------------

def num_zero(d: int) -> NumMatrix:
    return tuple(tuple(Fraction(0) for _ in range(d)) for _ in range(d))


def num_unit(d: int, a: int, b: int, coeff: Fraction | int = 1) -> NumMatrix:
    return tuple(tuple(Fraction(coeff) if (i, j) == (a, b) else Fraction(0) for j in range(d)) for i in range(d))


def num_parity(space: Superspace, A: NumMatrix) -> int:
    ps = {space.entry_parity(a, b) for a, row in enumerate(A) for b, v in enumerate(row) if v}
    if len(ps) > 1:
        raise InvalidParameterError("supermatrix is not parity-homogeneous")
    return ps.pop() if ps else 0


def num_matmul(A: NumMatrix, B: NumMatrix) -> NumMatrix:
    d = len(A)
    cols = list(zip(*B))
    return tuple(tuple(sum((A[i][k] * cols[j][k] for k in range(d) if A[i][k]), Fraction(0)) for j in range(d))
                 for i in range(d))


def num_bracket(space: Superspace, A: NumMatrix, B: NumMatrix) -> NumMatrix:
    sign = -1 if num_parity(space, A) and num_parity(space, B) else 1
    AB, BA = num_matmul(A, B), num_matmul(B, A)
    return tuple(tuple(p - sign * q for p, q in zip(r1, r2)) for r1, r2 in zip(AB, BA))


def num_lincomb(terms: Sequence[tuple[Fraction | int, NumMatrix]], d: int) -> NumMatrix:
    out = [[Fraction(0)] * d for _ in range(d)]
    for c, A in terms:
        for i in range(d):
            for j in range(d):
                if A[i][j]:
                    out[i][j] += c * A[i][j]
    return tuple(tuple(r) for r in out)


def num_supertrace(space: Superspace, A: NumMatrix) -> Fraction:
    return sum((space.str_sign(i) * A[i][i] for i in range(space.dim)), Fraction(0))


def flatten(A: NumMatrix) -> list[Fraction]:
    return [v for row in A for v in row]


def unflatten(v: Sequence[Fraction], d: int) -> NumMatrix:
    return tuple(tuple(Fraction(v[i * d + j]) for j in range(d)) for i in range(d))

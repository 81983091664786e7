"""Exact rational linear algebra used by the lattice and deformation code."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from .errors import NotPositiveDefiniteError

Matrix = list[list[Fraction]]


def ldl(M: Sequence[Sequence[int | Fraction]]) -> tuple[Matrix, list[Fraction]]:
    """Factor a symmetric matrix as ``L diag(D) L^T`` with unit lower-triangular ``L``.

    Raises :class:`NotPositiveDefiniteError` as soon as a pivot is not
    strictly positive, so a successful return certifies positive definiteness.
    """
    d = len(M)
    L = [[Fraction(int(i == j)) for j in range(d)] for i in range(d)]
    D: list[Fraction] = []
    for j in range(d):
        if len(M[j]) != d:
            raise ValueError("matrix is not square")
        pivot = Fraction(M[j][j]) - sum(L[j][p] * L[j][p] * D[p] for p in range(j))
        if pivot <= 0:
            raise NotPositiveDefiniteError(f"pivot {j} is {pivot}, form is not positive definite")
        D.append(pivot)
        for i in range(j + 1, d):
            if M[i][j] != M[j][i]:
                raise ValueError("matrix is not symmetric")
            s = Fraction(M[i][j]) - sum(L[i][p] * L[j][p] * D[p] for p in range(j))
            L[i][j] = s / pivot
    return L, D


def inverse(M: Sequence[Sequence[int | Fraction]]) -> Matrix:
    dm = DomainMatrix([[QQ(Fraction(v).numerator, Fraction(v).denominator) for v in row] for row in M],
                      (len(M), len(M)), QQ)
    return _to_fractions(dm.inv())


def _to_domain(rows: Sequence[Sequence[Fraction | int]], ncols: int) -> DomainMatrix:
    elems = []
    for row in rows:
        if len(row) != ncols:
            raise ValueError("ragged matrix")
        elems.append([QQ(int(Fraction(v).numerator), int(Fraction(v).denominator)) for v in row])
    return DomainMatrix(elems, (len(elems), ncols), QQ)


def _to_fractions(dm: DomainMatrix) -> Matrix:
    return [[Fraction(int(v.numerator), int(v.denominator)) for v in row] for row in dm.to_Matrix().tolist()]


def rref(rows: Sequence[Sequence[Fraction | int]], ncols: int) -> tuple[Matrix, tuple[int, ...]]:
    """Reduced row echelon form with zero rows dropped, plus pivot columns."""
    if not rows:
        return [], ()
    dm = _to_domain(rows, ncols).to_sparse()
    reduced, pivots = dm.rref()
    out = _to_fractions(reduced.to_dense())[: len(pivots)]
    return out, tuple(pivots)


def rank(rows: Sequence[Sequence[Fraction | int]], ncols: int) -> int:
    return len(rref(rows, ncols)[1])


def nullspace(rows: Sequence[Sequence[Fraction | int]], ncols: int) -> Matrix:
    """Basis of ``{v : A v = 0}``, one vector per free column of the RREF."""
    reduced, pivots = rref(rows, ncols)
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        v = [Fraction(0)] * ncols
        v[free] = Fraction(1)
        for r, p in enumerate(pivots):
            v[p] = -reduced[r][free]
        basis.append(v)
    return basis


def in_span(basis_rref: Matrix, pivots: Sequence[int], v: Sequence[Fraction]) -> bool:
    """Membership test of ``v`` in the row space of an RREF matrix."""
    w = list(v)
    for row, p in zip(basis_rref, pivots):
        c = w[p]
        if c:
            w = [a - c * b for a, b in zip(w, row)]
    return not any(w)

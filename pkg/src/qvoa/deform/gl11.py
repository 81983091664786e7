"""A gl(1|1) inside sl(1|2n+1) and the finite cohomological reduction of
the principal subalgebra ``p``.

Matrix indices: 0 is the even vector, ``1..2n+1`` the odd ones.
``p`` is spanned by ``E_ij`` (``1 <= i < j <= 2n+1``, even) and
``psi_a = E_{0,a+1}`` (``a = 1..2n``, odd).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..errors import InvalidParameterError
from ..linalg import rank
from .polymatrix import (NumMatrix, num_bracket, num_lincomb, num_parity, num_supertrace,
                         num_unit, num_zero)
from .tensor import Superspace

__all__ = ["Gl11Embedding", "Gl11Report", "PReport", "gl11_embedding", "gl11_checks",
           "principal_subalgebra", "e_weight_cohomology"]


@dataclass(frozen=True)
class Gl11Embedding:
    n: int
    space: Superspace
    N: NumMatrix
    E: NumMatrix
    psi_plus: NumMatrix
    psi_minus: NumMatrix


def gl11_embedding(n: int) -> Gl11Embedding:
    if n < 1:
        raise InvalidParameterError("n must be >= 1")
    space = Superspace(1, 2 * n + 1)
    d = space.dim
    N = num_lincomb([(Fraction(2 * n + 1, 2 * n), num_unit(d, 0, 0))]
                    + [(Fraction(1, 2 * n), num_unit(d, i, i)) for i in range(1, d)], d)
    E = num_lincomb([(1, num_unit(d, 0, 0)), (1, num_unit(d, 1, 1))], d)
    return Gl11Embedding(n, space, N, E, num_unit(d, 0, 1), num_unit(d, 1, 0))


@dataclass(frozen=True)
class Gl11Report:
    n: int
    relations: dict[str, bool]

    @property
    def ok(self) -> bool:
        return all(self.relations.values())


def gl11_checks(n: int) -> Gl11Report:
    g = gl11_embedding(n)
    sp, d = g.space, g.space.dim
    br = lambda a, b: num_bracket(sp, a, b)  # noqa: E731
    neg = lambda A: num_lincomb([(-1, A)], d)  # noqa: E731
    zero = num_zero(d)
    rel = {
        "[N,psi+]=psi+": br(g.N, g.psi_plus) == g.psi_plus,
        "[N,psi-]=-psi-": br(g.N, g.psi_minus) == neg(g.psi_minus),
        "[psi+,psi-]=E": br(g.psi_plus, g.psi_minus) == g.E,
        "[E,N]=0": br(g.E, g.N) == zero,
        "[E,psi+]=0": br(g.E, g.psi_plus) == zero,
        "[E,psi-]=0": br(g.E, g.psi_minus) == zero,
        "[psi+,psi+]=0": br(g.psi_plus, g.psi_plus) == zero,
        "[psi-,psi-]=0": br(g.psi_minus, g.psi_minus) == zero,
        "parities": (num_parity(sp, g.N), num_parity(sp, g.E), num_parity(sp, g.psi_plus),
                     num_parity(sp, g.psi_minus)) == (0, 0, 1, 1),
        "supertraceless": all(num_supertrace(sp, A) == 0 for A in (g.N, g.E, g.psi_plus, g.psi_minus)),
    }
    return Gl11Report(n, rel)


def principal_subalgebra(n: int) -> tuple[tuple[tuple[int, int], ...], tuple[tuple[int, int], ...]]:
    """Matrix positions of the even and odd basis vectors of ``p``."""
    if n < 1:
        raise InvalidParameterError("n must be >= 1")
    size = 2 * n + 1
    even = tuple((i, j) for i in range(1, size + 1) for j in range(i + 1, size + 1))
    odd = tuple((0, a + 1) for a in range(1, 2 * n + 1))
    return even, odd


@dataclass(frozen=True)
class PReport:
    n: int
    dim_even: int
    dim_odd: int
    weight_zero: int
    cohomology: int
    stable: bool
    weights_nonnegative: bool
    d_squared_zero: bool

    @property
    def sdim(self) -> int:
        return self.dim_even - self.dim_odd


def _coords(A: NumMatrix, positions) -> list[Fraction] | None:
    """Coordinates of ``A`` in the elementary basis ``positions``; None if outside."""
    pos = set(positions)
    for i, row in enumerate(A):
        for j, v in enumerate(row):
            if v and (i, j) not in pos:
                return None
    return [A[i][j] for i, j in positions]


def e_weight_cohomology(n: int) -> PReport:
    g = gl11_embedding(n)
    sp, d = g.space, g.space.dim
    even, odd = principal_subalgebra(n)
    positions = even + odd
    basis = [num_unit(d, i, j) for i, j in positions]
    stable = True

    def ad_matrix(Y: NumMatrix) -> list[list[Fraction]]:
        nonlocal stable
        cols = []
        for B in basis:
            c = _coords(num_bracket(sp, Y, B), positions)
            if c is None:
                stable = False
                c = [Fraction(0)] * len(positions)
            cols.append(c)
        return [list(r) for r in zip(*cols)]

    adE = ad_matrix(g.E)
    adP = ad_matrix(g.psi_plus)
    ad_matrix(g.psi_minus)
    ad_matrix(g.N)
    dim = len(positions)
    weight_zero = dim - rank(adE, dim)
    # ad E must act semisimply with eigenvalues in {0, 1} on p
    shifted = [[adE[i][j] - (1 if i == j else 0) for j in range(dim)] for i in range(dim)]
    prod = [[sum(adE[i][k] * shifted[k][j] for k in range(dim)) for j in range(dim)] for i in range(dim)]
    weights_ok = not any(v for row in prod for v in row)
    sq = [[sum(adP[i][k] * adP[k][j] for k in range(dim)) for j in range(dim)] for i in range(dim)]
    d2 = not any(v for row in sq for v in row)
    r = rank(adP, dim)
    cohomology = (dim - r) - r
    return PReport(n, len(even), len(odd), weight_zero, cohomology, stable, weights_ok, d2)

"""Super vector spaces, the quadratic tensors of the three families, and
the derivation action of a supermatrix on a quadratic tensor.

Basis order: even vectors ``z_1..z_m`` first, then odd vectors
``theta_0..theta_2n``.  A matrix ``X`` acts by ``X e_b = sum_a X[a][b] e_a``
(columns are images).  A quadratic tensor is a dict over index pairs
``(p, q)`` with ``p <= q`` standing for the supercommutative product
``e_p e_q``; coefficients are polynomials in ``x`` (sympy ``Poly``).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable, Literal, TypeVar

import sympy

from ..errors import InvalidParameterError

x = sympy.Symbol("x")

Family = Literal["sp", "so", "osp"]
C = TypeVar("C")


@dataclass(frozen=True)
class Superspace:
    even: int
    odd: int

    @property
    def dim(self) -> int:
        return self.even + self.odd

    def parity(self, i: int) -> int:
        return 0 if i < self.even else 1

    @property
    def parities(self) -> tuple[int, ...]:
        return tuple(self.parity(i) for i in range(self.dim))

    def str_sign(self, i: int) -> int:
        """Sign of the diagonal entry ``i`` in the supertrace."""
        return 1 if self.parity(i) == 0 else -1

    def label(self, i: int) -> str:
        return f"z{i + 1}" if i < self.even else f"theta{i - self.even}"

    def entry_parity(self, a: int, b: int) -> int:
        return self.parity(a) ^ self.parity(b)


def poly(expr) -> sympy.Poly:
    return sympy.Poly(expr, x, domain="QQ")


@dataclass(frozen=True)
class QuadTensor:
    family: Family
    n: int
    m: int
    space: Superspace = field(compare=False)
    terms: dict = field(compare=False, hash=False)
    theta0: int | None = field(compare=False)

    def describe(self) -> str:
        parts = []
        for (p, q), c in sorted(self.terms.items()):
            parts.append(f"({c.as_expr()})*{self.space.label(p)}*{self.space.label(q)}")
        return " + ".join(parts)


def build_family(family: Family, n: int = 0, m: int = 0) -> QuadTensor:
    """The tensor ``B`` (sp), ``C`` (so) or ``D`` (osp)."""
    if family == "sp":
        if n < 1:
            raise InvalidParameterError("sp family needs n >= 1")
        m = 0
        space = Superspace(0, 2 * n + 1)
        terms = {(a, a + 1): poly(x**a) for a in range(2 * n)}
        return QuadTensor("sp", n, 0, space, terms, 0)
    if family == "so":
        if m < 1:
            raise InvalidParameterError("so family needs m >= 1")
        space = Superspace(m, 0)
        terms = {(r, r): poly(sympy.Rational(1, 2) * x ** (2 * r)) for r in range(m)}
        return QuadTensor("so", 0, m, space, terms, None)
    if family == "osp":
        if n < 1 or m < 1:
            raise InvalidParameterError("osp family needs m >= 1 and n >= 1")
        space = Superspace(m, 2 * n + 1)
        terms = {(r, r): poly(sympy.Rational(1, 2) * x ** (2 * r)) for r in range(m)}
        for a in range(2 * n):
            terms[(m + a, m + a + 1)] = poly(x ** (2 * m + 2 * a))
        return QuadTensor("osp", n, m, space, terms, m)
    raise InvalidParameterError(f"unknown family {family!r}")


def reorder(space: Superspace, i: int, j: int) -> tuple[tuple[int, int] | None, int]:
    """Write ``e_i e_j`` as ``sign * e_p e_q`` with ``p <= q``.

    Returns ``(None, 0)`` when the product vanishes (equal odd vectors).
    """
    pi, pj = space.parity(i), space.parity(j)
    if i == j:
        return ((i, i), 1) if pi == 0 else (None, 0)
    if i < j:
        return (i, j), 1
    return (j, i), -1 if (pi and pj) else 1


def act(
    space: Superspace,
    terms: dict[tuple[int, int], C],
    entries: Iterable[tuple[int, int, C]],
    parity: int,
    mul: Callable[[C, C], C],
    neg: Callable[[C], C],
    add: Callable[[C, C], C],
) -> dict[tuple[int, int], C]:
    """Apply a homogeneous supermatrix as a super derivation to a quadratic tensor.

    ``X(e_p e_q) = (X e_p) e_q + (-1)^{|X||e_p|} e_p (X e_q)``.
    Coefficients are combined with the supplied ring operations so the
    same routine serves symbolic and numeric callers.
    """
    out: dict[tuple[int, int], C] = {}

    def put(key, sign, value):
        if key is None:
            return
        v = value if sign > 0 else neg(value)
        out[key] = add(out[key], v) if key in out else v

    entries = list(entries)
    for (p, q), t in terms.items():
        for a, b, c in entries:
            if b == p:
                key, s = reorder(space, a, q)
                put(key, s, mul(c, t))
            if b == q:
                key, s = reorder(space, p, a)
                if parity and space.parity(p):
                    s = -s
                put(key, s, mul(c, t))
    return out

"""Root data of osp(1|2n) in the epsilon basis.

The form is ``(eps_i | eps_j) = delta_ij / 2``, so the highest root
``2 eps_1`` has square length 2.  Weights are tuples of Fractions with
index 0 holding the ``eps_1`` coefficient.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import prod
from typing import Iterable

from .errors import InvalidParameterError

__all__ = [
    "Weight",
    "OspRootSystem",
    "build_root_system",
    "weyl_dim",
    "weyl_sdim",
    "central_charge",
    "conformal_weight",
    "is_dominant_integral",
]


@dataclass(frozen=True)
class Weight:
    coefficients: tuple[Fraction, ...]

    def __init__(self, coefficients: Iterable[int | Fraction]):
        object.__setattr__(self, "coefficients", tuple(Fraction(c) for c in coefficients))

    def __len__(self) -> int:
        return len(self.coefficients)

    def __add__(self, other: Weight) -> Weight:
        return Weight(a + b for a, b in zip(self.coefficients, other.coefficients, strict=True))

    def __sub__(self, other: Weight) -> Weight:
        return Weight(a - b for a, b in zip(self.coefficients, other.coefficients, strict=True))

    def __rmul__(self, scalar: int | Fraction) -> Weight:
        return Weight(scalar * a for a in self.coefficients)

    @classmethod
    def eps(cls, n: int, i: int, coeff: int | Fraction = 1) -> Weight:
        """``coeff * eps_i`` (1-based ``i``)."""
        c = [0] * n
        c[i - 1] = coeff
        return cls(c)

    @classmethod
    def zero(cls, n: int) -> Weight:
        return cls([0] * n)


@dataclass(frozen=True)
class OspRootSystem:
    n: int
    even_positive: tuple[Weight, ...]
    odd_positive: tuple[Weight, ...]
    short_even_positive: tuple[Weight, ...]
    simple: tuple[Weight, ...]
    rho: Weight

    @property
    def dual_coxeter(self) -> Fraction:
        return self.n + Fraction(1, 2)

    @property
    def highest_root(self) -> Weight:
        return Weight.eps(self.n, 1, 2)

    def form(self, a: Weight, b: Weight) -> Fraction:
        if len(a) != self.n or len(b) != self.n:
            raise InvalidParameterError("weight has the wrong rank")
        return sum((x * y for x, y in zip(a.coefficients, b.coefficients)), Fraction(0)) / 2

    def coroot(self, alpha: Weight) -> Weight:
        return (2 / self.form(alpha, alpha)) * alpha


def build_root_system(n: int) -> OspRootSystem:
    if n < 1:
        raise InvalidParameterError("n must be >= 1")

    def vec(pairs):
        c = [0] * n
        for i, v in pairs:
            c[i] += v
        return Weight(c)

    short = tuple(vec([(i, 1), (j, s)]) for i in range(n) for j in range(i + 1, n) for s in (-1, 1))
    long_ = tuple(vec([(i, 2)]) for i in range(n))
    odd = tuple(vec([(i, 1)]) for i in range(n))
    simple = tuple(vec([(i, 1), (i + 1, -1)]) for i in range(n - 1)) + (vec([(n - 1, 1)]),)
    rho = Weight(Fraction(2 * (n - i) - 1, 2) for i in range(n))
    return OspRootSystem(n, short + long_, odd, short, simple, rho)


def _ratio_product(rs: OspRootSystem, roots: tuple[Weight, ...], lam: Weight) -> Fraction:
    shifted = lam + rs.rho
    num = prod((rs.form(a, shifted) for a in roots), start=Fraction(1))
    den = prod((rs.form(a, rs.rho) for a in roots), start=Fraction(1))
    return num / den


def weyl_dim(rs: OspRootSystem, lam: Weight) -> Fraction:
    return _ratio_product(rs, rs.even_positive, lam)


def weyl_sdim(rs: OspRootSystem, lam: Weight) -> Fraction:
    return _ratio_product(rs, rs.short_even_positive, lam)


def is_dominant_integral(rs: OspRootSystem, lam: Weight) -> bool:
    """Integer coefficients with ``lam_1 >= ... >= lam_n >= 0``.

    Not enforced by the dimension formulas, which accept any weight.
    """
    c = lam.coefficients
    if any(x.denominator != 1 for x in c):
        return False
    return all(c[i] >= c[i + 1] for i in range(rs.n - 1)) and c[-1] >= 0


def central_charge(n: int, k: int) -> Fraction:
    if k < 0:
        raise InvalidParameterError("k must be >= 0")
    kappa = k + n + Fraction(1, 2)
    return Fraction(k * n * (2 * n - 1)) / (2 * kappa)


def conformal_weight(rs: OspRootSystem, mu: Weight, k: int) -> Fraction:
    if k < 0:
        raise InvalidParameterError("k must be >= 0")
    kappa = k + rs.dual_coxeter
    return rs.form(mu, mu + 2 * rs.rho) / (2 * kappa)

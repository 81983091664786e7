"""Bosonic side: signed lattice sum over ``u in Z^n`` divided by ``(q)_inf^{n(2n-1)}``.

All arithmetic runs on doubled quantities so the only rational step is one
exact division by the fixed denominator ``prod_{l<m} ((2m-1)^2 - (2l-1)^2)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import prod
from typing import Iterator, Sequence

from .errors import IntegralityError, InvalidParameterError, InvariantViolation
from .series import QSeries, euler_power_ints

__all__ = [
    "LhsParams",
    "LatticeTerm",
    "make_params",
    "xi",
    "lhs_exponent",
    "lattice_range",
    "lattice_terms",
    "lhs_series",
    "lhs_weight",
    "h_weight_crosscheck",
    "normalization_offset",
]


@dataclass(frozen=True)
class LhsParams:
    n: int
    k: int

    def __post_init__(self):
        if self.n < 1:
            raise InvalidParameterError("n must be >= 1")
        if self.k < 0:
            raise InvalidParameterError("k must be >= 0")

    @property
    def odd_coeff(self) -> int:
        return 2 * (self.n + self.k) + 1

    @property
    def kappa(self) -> Fraction:
        return Fraction(self.odd_coeff, 2)

    @property
    def rho_tilde(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(2 * m - 1, 2) for m in range(1, self.n + 1))

    @property
    def xi_denominator(self) -> int:
        n = self.n
        return prod((2 * m - 1) ** 2 - (2 * l - 1) ** 2 for m in range(1, n + 1) for l in range(1, m))


def make_params(n: int, k: int) -> LhsParams:
    return LhsParams(n, k)


@dataclass(frozen=True)
class LatticeTerm:
    u: tuple[int, ...]
    sign: int
    xi: Fraction
    exponent: int


def _check_len(u: Sequence[int], params: LhsParams) -> None:
    if len(u) != params.n:
        raise InvalidParameterError(f"u must have {params.n} components, got {len(u)}")


def _xi_numerator(u: Sequence[int], params: LhsParams) -> int:
    # 2 v_m = (2m - 1) + 2 (2(n+k)+1) u_m, an odd integer
    twice_v = [2 * m + 1 + 2 * params.odd_coeff * u[m] for m in range(params.n)]
    return prod(twice_v[m] ** 2 - twice_v[l] ** 2 for m in range(params.n) for l in range(m))


def xi(u: Sequence[int], params: LhsParams) -> Fraction:
    _check_len(u, params)
    return Fraction(_xi_numerator(u, params), params.xi_denominator)


def _coordinate_exponent(t: int, m: int, params: LhsParams) -> int:
    """``kappa t^2 + (m - 1/2) t`` for 1-based ``m``; always an integer."""
    twice = params.odd_coeff * t * t + (2 * m - 1) * t
    if twice % 2:
        raise InvariantViolation("coordinate exponent is not an integer")
    return twice // 2


def lhs_exponent(u: Sequence[int], params: LhsParams) -> int:
    _check_len(u, params)
    exact = params.kappa * sum(t * t for t in u) + sum(r * t for r, t in zip(params.rho_tilde, u))
    if exact.denominator != 1:
        raise IntegralityError(f"exponent {exact} of u={tuple(u)} is not an integer")
    value = sum(_coordinate_exponent(t, m, params) for m, t in enumerate(u, start=1))
    if value != exact:
        raise InvariantViolation("integer and rational exponent disagree")
    return value


def _min_coordinate_exponent(m: int, params: LhsParams) -> int:
    # vertex of the parabola is at -(2m-1)/(2 odd_coeff), within (-1, 0]
    return min(_coordinate_exponent(t, m, params) for t in (-1, 0, 1))


def lattice_range(params: LhsParams, order: int) -> tuple[tuple[int, ...], ...]:
    """Per-coordinate candidate values covering every ``u`` with exponent ``<= order``."""
    if order < 0:
        raise InvalidParameterError("order must be >= 0")
    mins = [_min_coordinate_exponent(m, params) for m in range(1, params.n + 1)]
    total_min = sum(mins)
    ranges = []
    for m in range(1, params.n + 1):
        slack = order - (total_min - mins[m - 1])
        vals = []
        # e_m is convex with vertex in (-1, 0], so walk outward from 0 and -1
        t = 0
        while _coordinate_exponent(t, m, params) <= slack:
            vals.append(t)
            t += 1
        t = -1
        while _coordinate_exponent(t, m, params) <= slack:
            vals.append(t)
            t -= 1
        ranges.append(tuple(sorted(vals)))
    return tuple(ranges)


def lattice_terms(params: LhsParams, order: int) -> Iterator[LatticeTerm]:
    """Every term of the signed sum with exponent ``<= order``."""
    for u in product(*lattice_range(params, order)):
        e = sum(_coordinate_exponent(t, m, params) for m, t in enumerate(u, start=1))
        if e <= order:
            yield LatticeTerm(u, -1 if sum(u) % 2 else 1, xi(u, params), e)


def lhs_numerator_ints(params: LhsParams, order: int) -> list[int]:
    """``xi_denominator * sum_u (-1)^|u| xi(u) q^e(u)`` as exact integers."""
    ranges = lattice_range(params, order)
    acc = [0] * (order + 1)
    n = params.n
    exps = [{t: _coordinate_exponent(t, m, params) for t in ranges[m - 1]} for m in range(1, n + 1)]
    u = [0] * n

    def rec(i: int, e: int) -> None:
        if i == n:
            num = _xi_numerator(u, params)
            acc[e] += -num if sum(u) % 2 else num
            return
        for t, et in exps[i].items():
            # remaining coordinates contribute >= 0 (min at t = 0)
            if e + et <= order:
                u[i] = t
                rec(i + 1, e + et)
        u[i] = 0

    rec(0, 0)
    return acc


def lhs_series(n: int, k: int, order: int) -> QSeries:
    if order < 0:
        raise InvalidParameterError("order must be >= 0")
    params = LhsParams(n, k)
    num = lhs_numerator_ints(params, order)
    euler = euler_power_ints(-n * (2 * n - 1), order)
    den = params.xi_denominator
    out = []
    for t in range(order + 1):
        s = sum(num[j] * euler[t - j] for j in range(t + 1) if num[j])
        q, r = divmod(s, den)
        if r:
            raise IntegralityError(f"coefficient of q^{t} is {Fraction(s, den)}, not an integer")
        out.append(q)
    return QSeries(out, order)


def lhs_weight(u: Sequence[int], params: LhsParams) -> tuple[Fraction, ...]:
    """Weight ``2 kappa sum_m u_m eps_{n+1-m}`` in epsilon coordinates (index 0 = eps_1)."""
    _check_len(u, params)
    n = params.n
    coeffs = [Fraction(0)] * n
    for m in range(1, n + 1):
        coeffs[n - m] = 2 * params.kappa * u[m - 1]
    return tuple(coeffs)


def h_weight_crosscheck(u: Sequence[int], params: LhsParams) -> bool:
    """Whether the lattice exponent equals the conformal weight of its weight."""
    from .osp import Weight, build_root_system, conformal_weight

    rs = build_root_system(params.n)
    h = conformal_weight(rs, Weight(lhs_weight(u, params)), params.k)
    return h == lhs_exponent(u, params)


def normalization_offset(n: int, k: int) -> Fraction:
    """Exponent offset ``-c_k/24`` of the normalized character (kept out of the series)."""
    from .osp import central_charge

    return -central_charge(n, k) / 24

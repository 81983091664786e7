"""Truncated power series in q with exact rational coefficients.

A :class:`QSeries` of order ``N`` stores the coefficients of ``q^0 .. q^N``
(inclusive).  Values are immutable; arithmetic between series of different
orders truncates to the smaller order.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Iterable, Iterator

from .errors import IntegralityError, InvalidParameterError, NonInvertibleSeriesError

__all__ = [
    "QSeries",
    "add",
    "mul",
    "invert",
    "pochhammer",
    "euler_power",
    "inverse_pochhammer_ints",
    "euler_power_ints",
]


class QSeries:
    __slots__ = ("_c",)

    def __init__(self, coeffs: Iterable[int | Fraction], order: int | None = None):
        c = [Fraction(v) for v in coeffs]
        if order is None:
            order = len(c) - 1
        if order < 0:
            raise InvalidParameterError("truncation order must be nonnegative")
        if len(c) > order + 1:
            del c[order + 1:]
        else:
            c.extend([Fraction(0)] * (order + 1 - len(c)))
        self._c = tuple(c)

    @classmethod
    def _from_fractions(cls, c: tuple[Fraction, ...]) -> QSeries:
        obj = object.__new__(cls)
        obj._c = c
        return obj

    @classmethod
    def zero(cls, order: int) -> QSeries:
        return cls([], order)

    @classmethod
    def one(cls, order: int) -> QSeries:
        return cls([1], order)

    @classmethod
    def monomial(cls, power: int, order: int, coeff: int | Fraction = 1) -> QSeries:
        if power < 0:
            raise InvalidParameterError("negative powers are not representable")
        c = [0] * (order + 1)
        if power <= order:
            c[power] = coeff
        return cls(c, order)

    @property
    def order(self) -> int:
        return len(self._c) - 1

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._c

    def __len__(self) -> int:
        return len(self._c)

    def __iter__(self) -> Iterator[Fraction]:
        return iter(self._c)

    def __getitem__(self, degree: int) -> Fraction:
        if degree < 0 or degree > self.order:
            raise IndexError(f"degree {degree} outside 0..{self.order}")
        return self._c[degree]

    def __eq__(self, other: object) -> bool:
        if isinstance(other, QSeries):
            return self._c == other._c
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._c)

    def truncate(self, order: int) -> QSeries:
        if order > self.order:
            raise InvalidParameterError("cannot raise the truncation order of a series")
        return QSeries._from_fractions(self._c[: order + 1])

    def agrees_with(self, other: QSeries) -> bool:
        """Equality on the common range of degrees."""
        n = min(self.order, other.order) + 1
        return self._c[:n] == other._c[:n]

    def first_mismatch(self, other: QSeries) -> int | None:
        n = min(self.order, other.order) + 1
        for d in range(n):
            if self._c[d] != other._c[d]:
                return d
        return None

    def shift(self, power: int) -> QSeries:
        """Multiply by ``q**power`` (``power >= 0``), keeping the order."""
        if power < 0:
            raise InvalidParameterError("negative shift")
        zero = Fraction(0)
        c = (zero,) * min(power, len(self._c)) + self._c[: max(0, len(self._c) - power)]
        return QSeries._from_fractions(c)

    def __add__(self, other: QSeries | int | Fraction) -> QSeries:
        if isinstance(other, QSeries):
            return add(self, other)
        if isinstance(other, Rational):
            c = list(self._c)
            c[0] += other
            return QSeries._from_fractions(tuple(c))
        return NotImplemented

    __radd__ = __add__

    def __neg__(self) -> QSeries:
        return QSeries._from_fractions(tuple(-v for v in self._c))

    def __sub__(self, other: QSeries | int | Fraction) -> QSeries:
        if isinstance(other, (QSeries, Rational)):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other: int | Fraction) -> QSeries:
        return (-self) + other

    def __mul__(self, other: QSeries | int | Fraction) -> QSeries:
        if isinstance(other, QSeries):
            return mul(self, other)
        if isinstance(other, Rational):
            return QSeries._from_fractions(tuple(v * other for v in self._c))
        return NotImplemented

    __rmul__ = __mul__

    def invert(self) -> QSeries:
        return invert(self)

    def is_integral(self) -> bool:
        return all(v.denominator == 1 for v in self._c)

    def integral(self) -> tuple[int, ...]:
        """Coefficients as exact integers; raises if any denominator is not 1."""
        for d, v in enumerate(self._c):
            if v.denominator != 1:
                raise IntegralityError(f"coefficient of q^{d} is {v}, not an integer")
        return tuple(v.numerator for v in self._c)

    def __repr__(self) -> str:
        return f"QSeries({[str(v) for v in self._c]!r}, order={self.order})"

    def __str__(self) -> str:
        terms = []
        for d, v in enumerate(self._c):
            if v == 0:
                continue
            if d == 0:
                terms.append(str(v))
            else:
                mono = "q" if d == 1 else f"q^{d}"
                terms.append(mono if v == 1 else f"{v}*{mono}")
        body = " + ".join(terms) if terms else "0"
        return f"{body} + O(q^{self.order + 1})"


def add(a: QSeries, b: QSeries) -> QSeries:
    n = min(a.order, b.order) + 1
    ac, bc = a.coeffs, b.coeffs
    return QSeries._from_fractions(tuple(ac[i] + bc[i] for i in range(n)))


def mul(a: QSeries, b: QSeries) -> QSeries:
    n = min(a.order, b.order) + 1
    ac, bc = a.coeffs, b.coeffs
    out = [Fraction(0)] * n
    for i in range(n):
        ai = ac[i]
        if not ai:
            continue
        for j in range(n - i):
            bj = bc[j]
            if bj:
                out[i + j] += ai * bj
    return QSeries._from_fractions(tuple(out))


def invert(a: QSeries) -> QSeries:
    c = a.coeffs
    if c[0] == 0:
        raise NonInvertibleSeriesError("non-invertible series: constant term is zero")
    inv0 = 1 / c[0]
    out = [inv0]
    for k in range(1, len(c)):
        s = sum(c[j] * out[k - j] for j in range(1, k + 1))
        out.append(-s * inv0)
    return QSeries._from_fractions(tuple(out))


# Integer kernels: the only factors needed by the character formulas are
# (1 - q^j)^{+-1}, which act in place as strided difference / prefix sums.

def _times_one_minus_qj(c: list[int], j: int) -> None:
    for t in range(len(c) - 1, j - 1, -1):
        c[t] -= c[t - j]


def _over_one_minus_qj(c: list[int], j: int) -> None:
    for t in range(j, len(c)):
        c[t] += c[t - j]


def inverse_pochhammer_ints(m: int, order: int) -> list[int]:
    """Coefficients of ``1/(q)_m`` up to ``q^order``."""
    c = [1] + [0] * order
    for j in range(1, min(m, order) + 1):
        _over_one_minus_qj(c, j)
    return c


def euler_power_ints(exponent: int, order: int) -> list[int]:
    """Coefficients of ``(q)_inf^exponent`` up to ``q^order``."""
    c = [1] + [0] * order
    step = _times_one_minus_qj if exponent > 0 else _over_one_minus_qj
    for _ in range(abs(exponent)):
        for j in range(1, order + 1):
            step(c, j)
    return c


def pochhammer(m: int, order: int) -> QSeries:
    if m < 0:
        raise InvalidParameterError("pochhammer length must be nonnegative")
    if order < 0:
        raise InvalidParameterError("truncation order must be nonnegative")
    c = [1] + [0] * order
    for j in range(1, min(m, order) + 1):
        _times_one_minus_qj(c, j)
    return QSeries(c, order)


def euler_power(exponent: int, order: int) -> QSeries:
    if order < 0:
        raise InvalidParameterError("truncation order must be nonnegative")
    return QSeries(euler_power_ints(exponent, order), order)

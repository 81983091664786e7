"""Fermionic (Nahm-type) side of the identity.

The quadratic form is ``(1/2) m^T (T ⊗ A) m`` with ``T_ij = min(i, j)`` the
inverse tadpole Cartan matrix of rank ``k`` and ``A`` the Cartan matrix of
type ``A_N`` (``N = 2n - 1`` for the main identity).  The index of
``m_{ia}`` is ``i*N + a``.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from math import isqrt, lcm
from typing import Iterator, Sequence

from . import _backend
from .errors import InvalidParameterError, InvariantViolation
from .linalg import inverse, ldl
from .series import QSeries, euler_power_ints, inverse_pochhammer_ints

__all__ = [
    "NahmForm",
    "LatticeData",
    "build_nahm_form",
    "nahm_form_for_colors",
    "quad_exponent",
    "enumerate_lattice",
    "rhs_series",
    "nahm_series",
    "nahm_series_reference",
]

_INT64_SAFE = 1 << 62


def _cartan_a(N: int) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(2 if a == b else -1 if abs(a - b) == 1 else 0 for b in range(N)) for a in range(N))


def _tadpole_inverse(k: int) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(min(i, j) for j in range(1, k + 1)) for i in range(1, k + 1))


def _kron(T, A) -> tuple[tuple[int, ...], ...]:
    k, N = len(T), len(A)
    return tuple(
        tuple(T[i][j] * A[a][b] for j in range(k) for b in range(N))
        for i in range(k) for a in range(N)
    )


@dataclass(frozen=True)
class LatticeData:
    """Integer rescaling of an exact LDL^T factorization.

    ``W * Q(m) = sum_i c[i] * (den[i]*m[i] + sum_{j>i} a[i*d+j]*m[j])**2``
    with every quantity an integer and every ``c[i] > 0``.
    """

    d: int
    den: tuple[int, ...]
    a: tuple[int, ...]
    c: tuple[int, ...]
    W: int
    inv_diag: tuple[Fraction, ...]

    @classmethod
    def from_matrix(cls, M: Sequence[Sequence[int]]) -> LatticeData:
        d = len(M)
        if d == 0:
            return cls(0, (), (), (), 1, ())
        L, D = ldl(M)  # raises unless positive definite
        den = []
        a = [0] * (d * d)
        for i in range(d):
            dn = 1
            for j in range(i + 1, d):
                dn = lcm(dn, L[j][i].denominator)
            den.append(dn)
            for j in range(i + 1, d):
                a[i * d + j] = int(L[j][i] * dn)
        w = [D[i] / (2 * den[i] ** 2) for i in range(d)]
        W = 1
        for wi in w:
            W = lcm(W, wi.denominator)
        c = tuple(int(wi * W) for wi in w)
        inv = inverse(M)
        return cls(d, tuple(den), tuple(a), c, W, tuple(inv[i][i] for i in range(d)))

    def coordinate_bound(self, j: int, bound: int) -> int:
        """Largest value of coordinate ``j`` on the real ellipsoid ``Q <= bound``."""
        return isqrt(int(2 * bound * self.inv_diag[j]))

    def fits_int64(self, order: int) -> bool:
        B = self.W * order
        if B >= _INT64_SAFE:
            return False
        d = self.d
        mmax = [self.coordinate_bound(j, order) for j in range(d)]
        for i in range(d):
            s = sum(abs(self.a[i * d + j]) * mmax[j] for j in range(i + 1, d))
            if s + isqrt(B // self.c[i]) + self.den[i] >= _INT64_SAFE:
                return False
        return True


@dataclass(frozen=True)
class NahmForm:
    colors: int
    k: int
    T: tuple[tuple[int, ...], ...]
    A: tuple[tuple[int, ...], ...]
    M: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        M = self.M
        d = len(M)
        if d != self.colors * self.k:
            raise InvariantViolation("form dimension differs from k*N")
        for i in range(d):
            if M[i][i] % 2:
                raise InvariantViolation("odd diagonal entry; exponent would not be integral")
            for j in range(i):
                if M[i][j] != M[j][i]:
                    raise InvariantViolation("form is not symmetric")

    @property
    def N(self) -> int:
        return self.colors

    @property
    def n(self) -> int | None:
        return (self.colors + 1) // 2 if self.colors % 2 else None

    @property
    def dim(self) -> int:
        return len(self.M)

    @cached_property
    def lattice(self) -> LatticeData:
        return LatticeData.from_matrix(self.M)

    def is_positive_definite(self) -> bool:
        self.lattice
        return True


def nahm_form_for_colors(N: int, k: int) -> NahmForm:
    if N < 1:
        raise InvalidParameterError("number of colors must be >= 1")
    if k < 0:
        raise InvalidParameterError("level k must be >= 0")
    T, A = _tadpole_inverse(k), _cartan_a(N)
    return NahmForm(N, k, T, A, _kron(T, A))


def build_nahm_form(n: int, k: int) -> NahmForm:
    if n < 1:
        raise InvalidParameterError("n must be >= 1")
    return nahm_form_for_colors(2 * n - 1, k)


def quad_exponent(form: NahmForm, m: Sequence[int]) -> int:
    M = form.M
    d = len(M)
    if len(m) != d:
        raise InvalidParameterError(f"expected {d} coordinates, got {len(m)}")
    twice = sum(M[i][j] * m[i] * m[j] for i in range(d) for j in range(d))
    return twice // 2


def enumerate_lattice(form: NahmForm, bound: int) -> Iterator[tuple[int, ...]]:
    """Yield every ``m >= 0`` with ``Q(m) <= bound`` exactly once."""
    lat = form.lattice
    d = lat.d
    if bound < 0:
        return
    if d == 0:
        yield ()
        return
    B = lat.W * bound
    m = [0] * d

    def rec(i: int, P: int) -> Iterator[tuple[int, ...]]:
        if i < 0:
            yield tuple(m)
            return
        s = sum(lat.a[i * d + j] * m[j] for j in range(i + 1, d))
        r = isqrt((B - P) // lat.c[i])
        dn = lat.den[i]
        lo = max(0, -((r + s) // dn))
        hi = (r - s) // dn
        for x in range(lo, hi + 1):
            m[i] = x
            Y = dn * x + s
            yield from rec(i - 1, P + lat.c[i] * Y * Y)
        m[i] = 0

    yield from rec(d - 1, 0)


def _top_range(lat: LatticeData, order: int) -> list[int]:
    i = lat.d - 1
    r = isqrt(lat.W * order // lat.c[i])
    return list(range(0, r // lat.den[i] + 1))


@lru_cache(maxsize=1)
def _moduli(count: int = 16) -> tuple[int, ...]:
    from sympy import prevprime

    out, p = [], _INT64_SAFE
    for _ in range(count):
        p = prevprime(p)
        out.append(p)
    return tuple(out)


def _accumulate_modular(ext, lat: LatticeData, order: int, top: Sequence[int] | None):
    """Exact coefficients from residues modulo primes below 2**62.

    Every summand is coefficientwise at most ``1/(q)_inf^d``, whose
    coefficients are nondecreasing, so ``points * [q^order] (q)_inf^-d``
    bounds each (nonnegative) coefficient.  Enough primes are used to
    exceed that bound and the residues are combined by Garner's method.
    """
    primes = iter(_moduli())
    p = next(primes)
    value, points = ext.nahm_accumulate(lat.d, lat.den, lat.a, lat.c, lat.W, order, top, p)
    bound = points * euler_power_ints(-lat.d, order)[order]
    M = p
    while M <= bound:
        try:
            p = next(primes)
        except StopIteration:
            raise OverflowError("coefficient bound exceeds the prime table") from None
        res, _ = ext.nahm_accumulate(lat.d, lat.den, lat.a, lat.c, lat.W, order, top, p)
        inv = pow(M % p, -1, p)
        value = [v + M * (((r - v) * inv) % p) for v, r in zip(value, res)]
        M *= p
    return value, points


def _accumulate(lat: LatticeData, order: int, top: Sequence[int] | None, backend: str | None):
    name = backend or _backend.BACKEND
    if name == "cython" and lat.fits_int64(order):
        ext = _backend.get("cython")
        try:
            return ext.nahm_accumulate(lat.d, lat.den, lat.a, lat.c, lat.W, order, top)
        except OverflowError:
            pass
        try:
            return _accumulate_modular(ext, lat, order, top)
        except OverflowError:
            pass
    return _backend.get("python").nahm_accumulate(lat.d, lat.den, lat.a, lat.c, lat.W, order, top)


def _accumulate_job(args):
    return _accumulate(*args)


def nahm_series(form: NahmForm, order: int, workers: int = 1, backend: str | None = None) -> QSeries:
    """``sum_m q^Q(m) / prod (q)_{m_ia}`` truncated at ``order``."""
    if order < 0:
        raise InvalidParameterError("order must be >= 0")
    lat = form.lattice
    if lat.d == 0:
        return QSeries.one(order)
    if workers <= 1:
        coeffs, _ = _accumulate(lat, order, None, backend)
    else:
        tops = _top_range(lat, order)
        chunks = [tops[w::workers] for w in range(workers)]
        chunks = [c for c in chunks if c]
        with ProcessPoolExecutor(max_workers=len(chunks)) as pool:
            parts = list(pool.map(_accumulate_job, [(lat, order, c, backend) for c in chunks]))
        coeffs = [sum(p[0][t] for p in parts) for t in range(order + 1)]
    return QSeries(coeffs, order)


def rhs_series(n: int, k: int, order: int, workers: int = 1, backend: str | None = None) -> QSeries:
    if order < 0:
        raise InvalidParameterError("order must be >= 0")
    return nahm_series(build_nahm_form(n, k), order, workers=workers, backend=backend)


def nahm_series_reference(form: NahmForm, order: int) -> QSeries:
    """Same sum via :func:`enumerate_lattice` and explicit products.

    Independent of the kernels: each summand is a truncated convolution
    of cached ``1/(q)_m`` tables.
    """

    @lru_cache(maxsize=None)
    def inv_poch(m: int) -> tuple[int, ...]:
        return tuple(inverse_pochhammer_ints(m, order))

    acc = [0] * (order + 1)
    for m in enumerate_lattice(form, order):
        Q = quad_exponent(form, m)
        R = order - Q
        prod = [1] + [0] * R
        for x in m:
            if x == 0:
                continue
            f = inv_poch(x)
            prod = [sum(prod[s] * f[t - s] for s in range(t + 1)) for t in range(R + 1)]
        for t in range(R + 1):
            acc[Q + t] += prod[t]
    return QSeries(acc, order)

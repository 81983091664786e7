"""Constraint residuals, fibers of the deformation families, and their checks.

The family is the ``Q[x]``-module of supermatrices preserving the tensor
(and ``theta_0``) with zero supertrace.  Its fiber at ``x = eps`` is the
image of evaluation at ``eps``.  This is *not* the pointwise stabilizer of
the specialised tensor: at ``eps = 0`` the tensor degenerates and the
pointwise stabilizer is strictly larger.

The fiber is computed from polynomial solutions: writing ``x = eps + y``
and ``X(y) = sum_{j<=D} X_j y^j``, every solution of the constraints as an
identity in ``y`` gives an element ``X_0`` of the fiber.  Since the module
is saturated, the fiber has dimension equal to the generic stabilizer
dimension ``r``; the degree ``D`` is raised until the image reaches the
smallest stabilizer dimension seen at a few sample points (which is at
least ``r``), and that equality certifies the fiber exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import sympy

from ..errors import InvalidParameterError, InvariantViolation
from ..linalg import in_span, nullspace, rank, rref
from .polymatrix import NumMatrix, PolyMatrix, flatten, num_bracket, num_parity, unflatten
from .tensor import QuadTensor, Superspace, act, poly, reorder, x

__all__ = [
    "Residual",
    "constraint_residual",
    "stabilizer_dim",
    "FiberBasis",
    "kernel_at_epsilon",
    "check_closure",
    "check_nilpotent_limit",
    "is_strictly_upper",
    "standard_form_change",
    "standard_tensor",
]

SAMPLE_POINTS = (Fraction(1), Fraction(2), Fraction(-3), Fraction(5, 7))


def _q(v: Fraction) -> sympy.Rational:
    return sympy.Rational(v.numerator, v.denominator)


def _f(v) -> Fraction:
    v = sympy.Rational(v)
    return Fraction(int(v.p), int(v.q))


@dataclass(frozen=True)
class Residual:
    tensor: dict
    theta0: dict
    supertrace: sympy.Expr

    def is_zero(self) -> bool:
        return not self.tensor and not self.theta0 and self.supertrace == 0


def constraint_residual(family: QuadTensor, X: PolyMatrix) -> Residual:
    """Exact residual of the defining constraints for a symbolic supermatrix."""
    if X.space != family.space:
        raise InvalidParameterError("matrix size does not match the family")
    parity = X.parity()
    entries = [(a, b, poly(v)) for a, b, v in X.nonzero()]
    out = act(family.space, family.terms, entries, parity,
              mul=lambda c, t: c * t, neg=lambda c: -c, add=lambda u, v: u + v)
    tensor = {k: v.as_expr() for k, v in out.items() if not v.is_zero}
    theta0 = {}
    if family.theta0 is not None:
        for a in range(family.space.dim):
            v = sympy.expand(X[a, family.theta0])
            if v != 0:
                theta0[a] = v
    return Residual(tensor, theta0, X.supertrace())


# linear systems -------------------------------------------------------------

def _unknowns(family: QuadTensor, parity: int) -> tuple[tuple[int, int], ...]:
    sp = family.space
    return tuple((a, b) for a in range(sp.dim) for b in range(sp.dim)
                 if sp.entry_parity(a, b) == parity and b != family.theta0)


@lru_cache(maxsize=None)
def _response(family: QuadTensor, parity: int) -> dict:
    """``(a, b) -> {(r, s): Poly}``: the image of the tensor under ``E_ab``."""
    out = {}
    one = poly(1)
    for a, b in _unknowns(family, parity):
        res = act(family.space, family.terms, [(a, b, one)], parity,
                  mul=lambda c, t: c * t, neg=lambda c: -c, add=lambda u, v: u + v)
        out[(a, b)] = {k: v for k, v in res.items() if not v.is_zero}
    return out


def _coeffs_low_first(p: sympy.Poly) -> list[Fraction]:
    return [_f(c) for c in reversed(p.all_coeffs())]


def _pointwise_rows(family: QuadTensor, parity: int, value: Fraction) -> tuple[list[list[Fraction]], int]:
    unk = _unknowns(family, parity)
    col = {ab: i for i, ab in enumerate(unk)}
    resp = _response(family, parity)
    rows: dict = {}
    for ab, comp in resp.items():
        for key, p in comp.items():
            v = _f(p.eval(_q(value)))
            if v:
                rows.setdefault(key, [Fraction(0)] * len(unk))[col[ab]] += v
    out = list(rows.values())
    if parity == 0:
        tr = [Fraction(0)] * len(unk)
        for (a, b), i in col.items():
            if a == b:
                tr[i] = Fraction(family.space.str_sign(a))
        out.append(tr)
    return out, len(unk)


def stabilizer_dim(family: QuadTensor, value: Fraction | int, parity: int) -> int:
    """Dimension of the pointwise stabilizer of the tensor specialised at ``x = value``."""
    rows, ncols = _pointwise_rows(family, parity, Fraction(value))
    return ncols - rank(rows, ncols)


def _fiber_vectors(family: QuadTensor, parity: int, eps: Fraction, degree: int) -> list[list[Fraction]]:
    """Values at ``y = 0`` of all polynomial solutions of degree ``<= degree``."""
    unk = _unknowns(family, parity)
    nu = len(unk)
    ncols = nu * (degree + 1)
    resp = _response(family, parity)
    rows: dict = {}
    for i, ab in enumerate(unk):
        for key, p in resp[ab].items():
            ks = _coeffs_low_first(p.shift(_q(eps)))
            for j in range(degree + 1):
                for t, kt in enumerate(ks):
                    if kt:
                        rows.setdefault((key, t + j), [Fraction(0)] * ncols)[j * nu + i] += kt
    out = list(rows.values())
    if parity == 0:
        for j in range(degree + 1):
            tr = [Fraction(0)] * ncols
            for i, (a, b) in enumerate(unk):
                if a == b:
                    tr[j * nu + i] = Fraction(family.space.str_sign(a))
            out.append(tr)
    sols = nullspace(out, ncols)
    return [s[:nu] for s in sols]


def _embed(family: QuadTensor, parity: int, v: list[Fraction]) -> NumMatrix:
    d = family.space.dim
    full = [Fraction(0)] * (d * d)
    for (a, b), c in zip(_unknowns(family, parity), v):
        full[a * d + b] = c
    return unflatten(full, d)


@dataclass(frozen=True)
class FiberBasis:
    family: QuadTensor
    eps: Fraction
    even: tuple[NumMatrix, ...]
    odd: tuple[NumMatrix, ...]
    degrees: tuple[int, int]

    @property
    def space(self) -> Superspace:
        return self.family.space

    @property
    def basis(self) -> tuple[NumMatrix, ...]:
        return self.even + self.odd

    @property
    def dims(self) -> tuple[int, int]:
        return len(self.even), len(self.odd)

    @property
    def dim(self) -> int:
        return len(self.even) + len(self.odd)


def _fiber_part(family: QuadTensor, parity: int, eps: Fraction, max_degree: int) -> tuple[tuple[NumMatrix, ...], int]:
    target = min(stabilizer_dim(family, s, parity) for s in SAMPLE_POINTS)
    if target == 0:
        return (), 0
    nu = len(_unknowns(family, parity))
    for degree in range(max_degree + 1):
        vecs = _fiber_vectors(family, parity, eps, degree)
        basis, _ = rref(vecs, nu)
        if len(basis) > target:
            raise InvariantViolation("fiber exceeds the generic stabilizer dimension")
        if len(basis) == target:
            return tuple(_embed(family, parity, v) for v in basis), degree
    raise InvariantViolation(f"fiber not certified up to degree {max_degree}")


def kernel_at_epsilon(family: QuadTensor, eps: Fraction | int | str, max_degree: int | None = None) -> FiberBasis:
    """Exact basis (reduced echelon, even part then odd part) of the fiber at ``x = eps``."""
    eps = Fraction(eps)
    if max_degree is None:
        max_degree = 4 * family.space.dim + 4
    even, de = _fiber_part(family, 0, eps, max_degree)
    odd, do = _fiber_part(family, 1, eps, max_degree)
    return FiberBasis(family, eps, even, odd, (de, do))


def _span(space: Superspace, basis) -> tuple[list, tuple[int, ...]]:
    d = space.dim
    return rref([flatten(A) for A in basis], d * d)


def check_closure(fiber: FiberBasis | tuple, space: Superspace | None = None) -> bool:
    """Every superbracket of basis elements lies in their span."""
    if isinstance(fiber, FiberBasis):
        space, basis = fiber.space, fiber.basis
    else:
        basis = tuple(fiber)
        if space is None:
            raise InvalidParameterError("a superspace is required for a bare basis")
    R, piv = _span(space, basis)
    for i, A in enumerate(basis):
        for B in basis[i:]:
            if not in_span(R, piv, flatten(num_bracket(space, A, B))):
                return False
    return True


def closure_residual(fiber: FiberBasis) -> int:
    """Number of brackets falling outside the span (0 when closed)."""
    space, basis = fiber.space, fiber.basis
    R, piv = _span(space, basis)
    bad = 0
    for i, A in enumerate(basis):
        for B in basis[i:]:
            if not in_span(R, piv, flatten(num_bracket(space, A, B))):
                bad += 1
    return bad


def is_strictly_upper(A: NumMatrix) -> bool:
    return all(not A[a][b] for a in range(len(A)) for b in range(a + 1))


def check_nilpotent_limit(family: QuadTensor) -> bool:
    """At ``eps = 0`` every fiber element is strictly upper triangular."""
    fib = kernel_at_epsilon(family, 0)
    return all(is_strictly_upper(A) for A in fib.basis)


# standard forms -------------------------------------------------------------

def _change_matrix(family: QuadTensor) -> sympy.Matrix:
    """Rows are the new basis vectors in terms of the old, over ``Q(x)``."""
    sp = family.space
    P = sympy.zeros(sp.dim, sp.dim)
    m = family.m
    for r in range(m):
        P[r, r] = x**r
    if family.theta0 is not None:
        t0 = family.theta0
        # the osp block uses the sp formulas in x^2, rescaled by x^m
        X, scale = (x, 1) if family.family == "sp" else (x**2, x**m)
        P[t0, t0] = 1
        for i in range(1, family.n + 1):
            P[t0 + 2 * i - 1, t0 + 2 * i - 1] = scale * X ** (i - 1)
            P[t0 + 2 * i, t0 + 2 * i] = scale * X**i
            P[t0 + 2 * i, t0 + 2 * i - 2] = -scale * X ** (i - 1)
    return P


def standard_tensor(family: QuadTensor) -> dict[tuple[int, int], Fraction]:
    """``(1/2) sum w_r^2 + sum phi_{2i-1} phi_{2i}`` in the new basis."""
    out = {(r, r): Fraction(1, 2) for r in range(family.m)}
    if family.theta0 is not None:
        t0 = family.theta0
        for i in range(1, family.n + 1):
            out[(t0 + 2 * i - 1, t0 + 2 * i)] = Fraction(1)
    return out


def standard_form_change(family: QuadTensor, eps: Fraction | int) -> dict[tuple[int, int], Fraction]:
    """The tensor at ``x = eps`` rewritten in the conjugate basis (``w_r``, ``theta``, ``phi_a``)."""
    eps = Fraction(eps)
    if eps == 0:
        raise InvalidParameterError("the change of basis is singular at eps = 0")
    sp = family.space
    P = _change_matrix(family).subs(x, _q(eps))
    Cm = P.inv()
    # e_j = sum_i C[j, i] f_i
    out: dict = {}
    for (p, q), t in family.terms.items():
        tv = _f(t.eval(_q(eps)))
        for i in range(sp.dim):
            cpi = Cm[p, i]
            if cpi == 0:
                continue
            for j in range(sp.dim):
                cqj = Cm[q, j]
                if cqj == 0:
                    continue
                key, s = reorder(sp, i, j)
                if key is None:
                    continue
                out[key] = out.get(key, Fraction(0)) + s * tv * _f(cpi) * _f(cqj)
    return {k: v for k, v in sorted(out.items()) if v}


def fiber_parity_check(fiber: FiberBasis) -> bool:
    return all(num_parity(fiber.space, A) == 0 for A in fiber.even) and all(
        num_parity(fiber.space, A) == 1 for A in fiber.odd)

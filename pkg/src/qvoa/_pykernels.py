"""Pure-Python kernels; the reference semantics for ``_kernels.pyx``.

Both modules expose ``nahm_accumulate`` with the same signature.  The
quadratic form arrives pre-scaled to integers (see ``nahm.LatticeData``):

    W * Q(m) = sum_i c[i] * Y_i**2,   Y_i = den[i]*m[i] + sum_{j>i} a[i*d+j]*m[j]

so every pruning decision is an exact integer comparison.
"""

from __future__ import annotations

from math import isqrt
from typing import Sequence


def nahm_accumulate(
    d: int,
    den: Sequence[int],
    a: Sequence[int],
    c: Sequence[int],
    W: int,
    order: int,
    top_values: Sequence[int] | None = None,
    modulus: int = 0,
) -> tuple[list[int], int]:
    """Sum ``q^Q(m) / prod_i (q)_{m_i}`` over ``m >= 0`` with ``Q(m) <= order``.

    Coordinates are assigned from ``d-1`` down to ``0``.  ``top_values``
    restricts coordinate ``d-1`` (used to split work across processes).
    Returns the coefficient list and the number of lattice points visited.
    A nonzero ``modulus`` reduces the returned coefficients.
    """
    acc = [0] * (order + 1)
    if d == 0:
        acc[0] = 1 % modulus if modulus else 1
        return acc, 1
    B = W * order
    m = [0] * d
    top = None if top_values is None else sorted(set(top_values))
    points = 0

    def rec(i: int, P: int, parent: list[int]) -> None:
        nonlocal points
        if i < 0:
            Q, rem = divmod(P, W)
            if rem:
                raise ArithmeticError("lattice exponent is not an integer")
            points += 1
            for t in range(order - Q + 1):
                acc[Q + t] += parent[t]
            return
        s = 0
        base = i * d
        for j in range(i + 1, d):
            s += a[base + j] * m[j]
        r = isqrt((B - P) // c[i])
        dn = den[i]
        lo = max(0, -((r + s) // dn))
        hi = (r - s) // dn
        if hi < lo:
            return
        # run = parent / (q)_x, advanced incrementally in x
        run = parent[:]
        L = len(run)
        for j in range(1, min(lo, L - 1) + 1):
            for t in range(j, L):
                run[t] += run[t - j]
        ci = c[i]
        for x in range(lo, hi + 1):
            if x > lo and x < L:
                for t in range(x, L):
                    run[t] += run[t - x]
            if top is not None and i == d - 1 and x not in top:
                continue
            Y = dn * x + s
            P2 = P + ci * Y * Y
            R = order - (-(-P2 // W))
            m[i] = x
            rec(i - 1, P2, run[: R + 1])
        m[i] = 0

    rec(d - 1, 0, [1] + [0] * order)
    if modulus:
        acc = [v % modulus for v in acc]
    return acc, points

"""Brute-force reference computations, deliberately naive and independent
of the package's algorithms."""

from __future__ import annotations

from fractions import Fraction
from itertools import product
from typing import Iterator


def partitions(n: int, largest: int | None = None) -> Iterator[tuple[int, ...]]:
    """Partitions of ``n`` as nonincreasing tuples."""
    if largest is None:
        largest = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def partition_count(n: int) -> int:
    return sum(1 for _ in partitions(n))


def gordon_count(n: int, k: int) -> int:
    """Partitions of ``n`` whose part frequencies satisfy ``f_j + f_{j+1} <= k``."""
    total = 0
    for p in partitions(n):
        f = [0] * (n + 2)
        for part in p:
            f[part] += 1
        if all(f[j] + f[j + 1] <= k for j in range(1, n + 1)):
            total += 1
    return total


def poly_mul(a: list[int], b: list[int], order: int) -> list[int]:
    out = [0] * (order + 1)
    for i, x in enumerate(a[: order + 1]):
        if x:
            for j, y in enumerate(b[: order + 1 - i]):
                out[i + j] += x * y
    return out


def inv_qpoch(m: int, order: int) -> list[int]:
    """``1/(q)_m`` by counting partitions into parts of size at most ``m``."""
    return [sum(1 for _ in partitions(t, m)) if m else int(t == 0) for t in range(order + 1)]


def nahm_box(M: list[list[int]], order: int, box: int) -> list[int]:
    """Nahm sum over the box ``0 <= m_i <= box``."""
    d = len(M)
    acc = [0] * (order + 1)
    for m in product(range(box + 1), repeat=d):
        twice = sum(M[i][j] * m[i] * m[j] for i in range(d) for j in range(d))
        Q = twice // 2
        if Q > order:
            continue
        term = [0] * Q + [1]
        term += [0] * (order + 1 - len(term))
        for x in m:
            term = poly_mul(term, inv_qpoch(x, order), order)
        acc = [u + v for u, v in zip(acc, term)]
    return acc


def xi_direct(u: tuple[int, ...], n: int, k: int) -> Fraction:
    """``prod_{l<m} (v_m^2 - v_l^2) / (rho_m^2 - rho_l^2)`` straight from the definition."""
    rho = [Fraction(2 * m - 1, 2) for m in range(1, n + 1)]
    v = [rho[m] + (2 * (n + k) + 1) * u[m] for m in range(n)]
    out = Fraction(1)
    for m in range(n):
        for l in range(m):
            out *= (v[m] ** 2 - v[l] ** 2) / (rho[m] ** 2 - rho[l] ** 2)
    return out


def lhs_box(n: int, k: int, order: int, box: int) -> list[Fraction]:
    """Signed lattice sum over ``|u_m| <= box`` times ``1/(q)_inf^{n(2n-1)}``."""
    kappa = Fraction(2 * (n + k) + 1, 2)
    rho = [Fraction(2 * m - 1, 2) for m in range(1, n + 1)]
    num = [Fraction(0)] * (order + 1)
    for u in product(range(-box, box + 1), repeat=n):
        e = kappa * sum(t * t for t in u) + sum(r * t for r, t in zip(rho, u))
        assert e.denominator == 1
        if e <= order:
            num[int(e)] += (-1) ** (sum(u) % 2) * xi_direct(u, n, k)
    # 1/(q)_inf^d: partitions with d colours, by repeated multiplication
    inv = [1] + [0] * order
    base = [partition_count(t) for t in range(order + 1)]
    for _ in range(n * (2 * n - 1)):
        inv = poly_mul(inv, base, order)
    return [sum(num[j] * inv[t - j] for j in range(t + 1)) for t in range(order + 1)]

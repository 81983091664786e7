"""Quasiparticle monomials for the principal subspace of level-k sl_{N+1}.

A monomial is stored per color as a tuple of ``(charge, index)`` pairs in
canonical order (charges nonincreasing; equal charges with nonincreasing
index).  Its energy is ``-sum(index)``.  Counting admissible monomials by
energy gives the principal subspace character, so this module is an
independent combinatorial route to the fermionic sum.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import cos, pi
from typing import Iterator, Sequence

from .errors import InvalidParameterError, NonCanonicalMonomialError, NotPositiveDefiniteError
from .linalg import ldl
from .series import QSeries

__all__ = [
    "QPMonomial",
    "is_admissible",
    "index_caps",
    "charge_types",
    "enumerate_monomials",
    "charge_type_census",
    "qp_character",
]

ChargeType = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class QPMonomial:
    colors: tuple[tuple[tuple[int, int], ...], ...]

    @classmethod
    def from_lists(cls, colors: Sequence[Sequence[tuple[int, int]]]) -> QPMonomial:
        return cls(tuple(tuple((int(n), int(m)) for n, m in col) for col in colors))

    @property
    def N(self) -> int:
        return len(self.colors)

    @property
    def energy(self) -> int:
        return -sum(m for col in self.colors for _, m in col)

    @property
    def charge_type(self) -> ChargeType:
        return tuple(tuple(n for n, _ in col) for col in self.colors)

    @property
    def color_type(self) -> tuple[int, ...]:
        return tuple(sum(n for n, _ in col) for col in self.colors)

    @property
    def index_sum(self) -> tuple[int, ...]:
        return tuple(sum(m for _, m in col) for col in self.colors)

    def is_canonical(self) -> bool:
        for col in self.colors:
            for (n1, m1), (n2, m2) in zip(col, col[1:]):
                if n2 > n1 or (n2 == n1 and m2 > m1):
                    return False
            if any(n < 1 for n, _ in col):
                return False
        return True


def index_caps(charges: ChargeType) -> tuple[tuple[int, ...], ...]:
    """Upper bound on each index from the interaction condition.

    ``cap[i][a] = (1 - 2(a+1)) n_{a,i} + sum_b min(n_{b,i-1}, n_{a,i})``
    with 0-based ``a``.
    """
    caps = []
    for i, col in enumerate(charges):
        prev = charges[i - 1] if i > 0 else ()
        caps.append(tuple(
            (1 - 2 * (a + 1)) * n + sum(min(p, n) for p in prev)
            for a, n in enumerate(col)
        ))
    return tuple(caps)


def is_admissible(mono: QPMonomial, k: int) -> bool:
    if not mono.is_canonical():
        raise NonCanonicalMonomialError("monomial is not in canonical order")
    caps = index_caps(mono.charge_type)
    for i, col in enumerate(mono.colors):
        for a, (n, m) in enumerate(col):
            if n > k:
                return False
            if m > caps[i][a]:
                return False
            if a + 1 < len(col):
                n2, m2 = col[a + 1]
                if n2 == n and m2 > m - 2 * n:
                    return False
    return True


def _self_weight(charges: Sequence[int]) -> int:
    # sum_{a,b} min(n_a, n_b) for nonincreasing charges
    return sum((2 * a + 1) * n for a, n in enumerate(charges))


def _cartan_lower_bound(N: int) -> Fraction:
    """Certified rational ``lam`` with ``A_N - lam*I`` positive definite."""
    lam = Fraction(2 - 2 * cos(pi / (N + 1)) - 1e-9).limit_denominator(10**6)
    while True:
        M = [[Fraction(2 if a == b else -1 if abs(a - b) == 1 else 0) - (lam if a == b else 0)
              for b in range(N)] for a in range(N)]
        try:
            ldl(M)
            return lam
        except NotPositiveDefiniteError:
            lam /= 2


def _color_charge_lists(k: int, budget: int) -> list[tuple[int, ...]]:
    out: list[tuple[int, ...]] = []

    def rec(prefix: list[int], s: int) -> None:
        out.append(tuple(prefix))
        top = prefix[-1] if prefix else k
        a = len(prefix)
        for n in range(top, 0, -1):
            s2 = s + (2 * a + 1) * n
            if s2 <= budget:
                prefix.append(n)
                rec(prefix, s2)
                prefix.pop()

    rec([], 0)
    return out


def _min_energy(charges: ChargeType) -> int:
    return -sum(sum(c) for c in index_caps(charges))


def charge_types(N: int, k: int, order: int) -> Iterator[ChargeType]:
    """Color-charge-types whose cheapest admissible monomial has energy ``<= order``.

    The minimum energy of a type is ``(1/2) tr(A_N G)`` with ``G`` the Gram
    matrix of the per-color charge data; ``tr(A G) >= lam_min(A) tr G``
    bounds ``sum_i s_i`` and makes the search finite.
    """
    if N < 1 or k < 1:
        raise InvalidParameterError("need N >= 1 and k >= 1")
    lam = _cartan_lower_bound(N)
    budget = int(2 * order / lam)
    per_color = _color_charge_lists(k, budget)
    weights = {c: _self_weight(c) for c in per_color}
    chosen: list[tuple[int, ...]] = []

    def rec(i: int, used: int) -> Iterator[ChargeType]:
        if i == N:
            t = tuple(chosen)
            if _min_energy(t) <= order:
                yield t
            return
        for c in per_color:
            w = weights[c]
            if used + w <= budget:
                chosen.append(c)
                yield from rec(i + 1, used + w)
                chosen.pop()

    yield from rec(0, 0)


def _color_index_sequences(charges: tuple[int, ...], caps: tuple[int, ...], max_energy: int) -> Iterator[tuple[int, ...]]:
    """All admissible index tuples of one color with energy ``<= max_energy``."""
    r = len(charges)
    # run_end[a]: number of later slots sharing slot a's charge
    run_after = [0] * r
    for a in range(r - 2, -1, -1):
        if charges[a + 1] == charges[a]:
            run_after[a] = run_after[a + 1] + 1
    # minimum energy of slots strictly after the run containing a
    later = [0] * (r + 1)
    for a in range(r - 1, -1, -1):
        later[a] = later[a + 1] - caps[a]
    idx = [0] * r

    def rec(a: int, energy: int) -> Iterator[tuple[int, ...]]:
        if a == r:
            yield tuple(idx)
            return
        n = charges[a]
        hi = caps[a]
        if a > 0 and charges[a - 1] == n:
            hi = min(hi, idx[a - 1] - 2 * n)
        L = run_after[a]
        rest = later[a + L + 1]
        # energy - v + sum_{j=1..L} -(v - 2nj) + rest <= max_energy
        need = n * L * (L + 1) + rest + energy - max_energy
        lo = -((-need) // (L + 1))
        for v in range(hi, lo - 1, -1):
            idx[a] = v
            yield from rec(a + 1, energy - v)

    yield from rec(0, 0)


def _type_histogram(charges: ChargeType, order: int) -> list[int]:
    # a single color may have negative energy (positive indices are allowed
    # once the interaction with the previous color pays for them), so the
    # partial histograms are keyed by energy rather than stored from 0
    caps = index_caps(charges)
    mins = [-sum(c) for c in caps]
    total_min = sum(mins)
    hist: dict[int, int] = {0: 1}
    for i, col in enumerate(charges):
        budget = order - (total_min - mins[i])
        h: dict[int, int] = {}
        for seq in _color_index_sequences(col, caps[i], budget):
            e = -sum(seq)
            h[e] = h.get(e, 0) + 1
        rest = total_min - sum(mins[: i + 1])
        nxt: dict[int, int] = {}
        for e1, v1 in hist.items():
            for e2, v2 in h.items():
                e = e1 + e2
                if e + rest <= order:
                    nxt[e] = nxt.get(e, 0) + v1 * v2
        hist = nxt
    out = [0] * (order + 1)
    for e, v in hist.items():
        if e < 0:
            raise AssertionError("admissible monomial with negative energy")
        out[e] += v
    return out


def charge_type_census(N: int, k: int, order: int) -> dict[ChargeType, QSeries]:
    if order < 0:
        raise InvalidParameterError("order must be >= 0")
    return {t: QSeries(_type_histogram(t, order), order) for t in charge_types(N, k, order)}


def qp_character(N: int, k: int, order: int) -> QSeries:
    if order < 0:
        raise InvalidParameterError("order must be >= 0")
    acc = [0] * (order + 1)
    for t in charge_types(N, k, order):
        for e, v in enumerate(_type_histogram(t, order)):
            acc[e] += v
    return QSeries(acc, order)


def enumerate_monomials(N: int, k: int, order: int) -> Iterator[QPMonomial]:
    """Explicit admissible monomials with energy ``<= order``."""
    for t in charge_types(N, k, order):
        caps = index_caps(t)
        mins = [-sum(c) for c in caps]
        total_min = sum(mins)
        per_color = []
        for i, col in enumerate(t):
            budget = order - (total_min - mins[i])
            per_color.append(list(_color_index_sequences(col, caps[i], budget)))

        def rec(i: int, energy: int, acc: list) -> Iterator[QPMonomial]:
            if i == N:
                yield QPMonomial(tuple(acc))
                return
            rest = total_min - sum(mins[: i + 1])
            for seq in per_color[i]:
                e = energy - sum(seq)
                if e + rest <= order:
                    acc.append(tuple(zip(t[i], seq)))
                    yield from rec(i + 1, e, acc)
                    acc.pop()

        yield from rec(0, 0, [])

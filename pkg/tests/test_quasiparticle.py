from itertools import combinations_with_replacement, product

import pytest

from qvoa.errors import InvalidParameterError, NonCanonicalMonomialError
from qvoa.nahm import nahm_form_for_colors, nahm_series, rhs_series
from qvoa.quasiparticle import (QPMonomial, charge_type_census, charge_types, enumerate_monomials, index_caps,
                                is_admissible, qp_character)
from qvoa.series import QSeries

from .oracles import gordon_count


def M(*colors):
    return QPMonomial.from_lists(colors)


def test_admissibility_examples():
    assert is_admissible(M(), 1)
    assert is_admissible(M([(1, -1)]), 1)
    assert not is_admissible(M([(1, -1), (1, -2)]), 1)
    assert is_admissible(M([(1, -1), (1, -3)]), 1)
    assert not is_admissible(M([(2, -1)]), 1)


def test_non_canonical_input_raises():
    with pytest.raises(NonCanonicalMonomialError):
        is_admissible(M([(1, -2), (1, -1)]), 1)
    with pytest.raises(NonCanonicalMonomialError):
        is_admissible(M([(1, -2), (2, -5)]), 2)


def test_interaction_allows_nonnegative_index():
    # x_{alpha2, 0} x_{alpha1, -1} has energy 1 in the sl_3 principal subspace
    mono = M([(1, -1)], [(1, 0)])
    assert is_admissible(mono, 1)
    assert mono.energy == 1
    assert not is_admissible(M([], [(1, 0)]), 1)


def test_monomial_properties():
    mono = M([(2, -3), (1, -2)], [(1, 1)])
    assert mono.N == 2
    assert mono.energy == 4
    assert mono.charge_type == ((2, 1), (1,))
    assert mono.color_type == (3, 1)
    assert mono.index_sum == (-5, 1)


def test_caps():
    assert index_caps(((1, 1),)) == ((-1, -3),)
    assert index_caps(((1,), (1,))) == ((-1,), (0,))


def test_empty_and_small_characters():
    assert qp_character(3, 2, 0) == QSeries.one(0)
    assert qp_character(1, 1, 4)[4] == 2
    assert qp_character(1, 1, 6) == QSeries([1, 1, 1, 1, 2, 2, 3])


@pytest.mark.parametrize("k", [1, 2, 3])
def test_single_color_matches_partition_oracle(k):
    s = qp_character(1, k, 15)
    assert [int(c) for c in s] == [gordon_count(t, k) for t in range(16)]


@pytest.mark.parametrize("N,k", [(1, 1), (1, 2), (2, 1), (2, 2), (3, 1), (3, 2), (4, 1)])
def test_matches_nahm_sum(N, k):
    order = 12 if N < 4 else 8
    assert qp_character(N, k, order) == nahm_series(nahm_form_for_colors(N, k), order)


def test_odd_colors_give_main_fermionic_sum():
    assert qp_character(3, 1, 10) == rhs_series(2, 1, 10)


def test_census_sums_to_character():
    census = charge_type_census(1, 2, 8)
    total = QSeries.zero(8)
    for s in census.values():
        total = total + s
    assert total == qp_character(1, 2, 8)
    assert census[((),)] == QSeries.one(8)
    assert all(max((n for col in t for n in col), default=0) <= 2 for t in census)


def test_census_multicolor():
    census = charge_type_census(3, 2, 8)
    total = sum(census.values(), QSeries.zero(8))
    assert total == qp_character(3, 2, 8)


def test_enumerated_monomials_are_admissible_and_counted():
    monos = list(enumerate_monomials(2, 2, 6))
    assert len(monos) == len(set(monos))
    assert all(is_admissible(m, 2) and 0 <= m.energy <= 6 for m in monos)
    counts = [0] * 7
    for m in monos:
        counts[m.energy] += 1
    assert counts == [int(c) for c in qp_character(2, 2, 6)]


def _box_monomials(N, k, rmax, lo, hi):
    """All canonical monomials with at most ``rmax`` factors per color and indices in ``[lo, hi]``."""
    slots = [(n, m) for n in range(1, k + 1) for m in range(lo, hi + 1)]
    slots.sort(key=lambda s: (-s[0], -s[1]))
    per_color = []
    for r in range(rmax + 1):
        per_color.extend(combinations_with_replacement(slots, r))
    for cols in product(per_color, repeat=N):
        yield QPMonomial(tuple(tuple(c) for c in cols))


@pytest.mark.parametrize("N,k,order,rmax,lo,hi", [(1, 2, 6, 3, -7, 0), (2, 1, 5, 2, -6, 1)])
def test_enumeration_complete_against_box(N, k, order, rmax, lo, hi):
    got = set(enumerate_monomials(N, k, order))
    for m in got:
        for col in m.colors:
            assert len(col) <= rmax and all(lo <= idx <= hi for _, idx in col)
    want = {m for m in _box_monomials(N, k, rmax, lo, hi) if m.energy <= order and is_admissible(m, k)}
    assert got == want


def test_admissibility_monotone_in_level():
    for m in enumerate_monomials(2, 1, 6):
        assert is_admissible(m, 2)
    for m in enumerate_monomials(1, 2, 8):
        assert is_admissible(m, 3)


def test_type_bound_covers_all_types():
    types = set(charge_types(2, 2, 6))
    seen = {m.charge_type for m in enumerate_monomials(2, 2, 6)}
    assert seen <= types


def test_parameter_validation():
    with pytest.raises(InvalidParameterError):
        qp_character(0, 1, 3)
    with pytest.raises(InvalidParameterError):
        qp_character(1, 0, 3)
    with pytest.raises(InvalidParameterError):
        qp_character(1, 1, -1)


def test_equal_charge_equal_index_is_canonical_but_inadmissible():
    for k, n in [(1, 1), (2, 2), (3, 2)]:
        mono = M([(n, -n), (n, -n)])
        assert mono.is_canonical
        assert not is_admissible(mono, k)

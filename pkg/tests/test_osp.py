import random
from fractions import Fraction
from itertools import product

import pytest

from qvoa.deform import build_family, kernel_at_epsilon
from qvoa.errors import InvalidParameterError
from qvoa.lhs import LhsParams, lhs_weight, xi
from qvoa.osp import (Weight, build_root_system, central_charge, conformal_weight, is_dominant_integral, weyl_dim,
                      weyl_sdim)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_root_counts_and_normalisation(n):
    rs = build_root_system(n)
    assert len(rs.even_positive) == n * n
    assert len(rs.odd_positive) == n
    assert len(rs.short_even_positive) == n * (n - 1)
    assert rs.form(rs.highest_root, rs.highest_root) == 2
    assert rs.dual_coxeter == n + Fraction(1, 2)
    for alpha in rs.simple:
        assert rs.form(rs.rho, rs.coroot(alpha)) == 1


def test_rank_one_roots():
    rs = build_root_system(1)
    assert rs.even_positive == (Weight([2]),)
    assert rs.odd_positive == (Weight([1]),)
    assert rs.short_even_positive == ()


def test_simple_root_pairings():
    rs = build_root_system(3)
    a = rs.simple
    assert rs.form(a[0], a[1]) == rs.form(a[1], a[2]) == Fraction(-1, 2)
    assert rs.form(a[2], a[2]) == Fraction(1, 2)
    with pytest.raises(InvalidParameterError):
        build_root_system(0)
    with pytest.raises(InvalidParameterError):
        rs.form(Weight([1]), Weight([1, 0, 0]))


@pytest.mark.parametrize("n", [1, 2, 3])
def test_trivial_weight(n):
    rs = build_root_system(n)
    assert weyl_dim(rs, Weight.zero(n)) == 1
    assert weyl_sdim(rs, Weight.zero(n)) == 1


def test_rank_one_superdimension_is_one():
    rs = build_root_system(1)
    for c in range(0, 12):
        assert weyl_sdim(rs, Weight([c])) == 1


@pytest.mark.parametrize("n,m", [(1, 1), (2, 1)])
def test_adjoint_dimension_against_explicit_algebra(n, m):
    # osp(1|2n) built as the stabilizer of a supersymmetric form; its adjoint
    # representation has highest weight 2 eps_1
    rs = build_root_system(n)
    alg = kernel_at_epsilon(build_family("osp", n=n, m=m), 1)
    even, odd = alg.dims
    lam = Weight.eps(n, 1, 2)
    assert weyl_dim(rs, lam) == even + odd
    assert weyl_sdim(rs, lam) == even - odd


def test_rank_one_adjoint_is_five():
    assert weyl_dim(build_root_system(1), Weight([2])) == 5


@pytest.mark.parametrize("n", [2, 3])
def test_dims_integral_on_dominant_weights(n):
    rs = build_root_system(n)
    for c in product(range(4), repeat=n):
        if not is_dominant_integral(rs, Weight(c)):
            continue
        d, s = weyl_dim(rs, Weight(c)), weyl_sdim(rs, Weight(c))
        assert d.denominator == 1 and s.denominator == 1 and d > 0
        assert abs(s) <= d


def test_dominance_check():
    rs = build_root_system(2)
    assert is_dominant_integral(rs, Weight([2, 1]))
    assert not is_dominant_integral(rs, Weight([1, 2]))
    assert not is_dominant_integral(rs, Weight([Fraction(1, 2), 0]))
    assert not is_dominant_integral(rs, Weight([1, -1]))


@pytest.mark.parametrize("n,k", [(2, 1), (3, 1), (3, 2)])
def test_sdim_of_lattice_weights_equals_xi(n, k):
    rs = build_root_system(n)
    p = LhsParams(n, k)
    rng = random.Random(n + 7 * k)
    for _ in range(25):
        u = tuple(rng.randint(-2, 2) for _ in range(n))
        assert weyl_sdim(rs, Weight(lhs_weight(u, p))) == xi(u, p)


def test_central_charge_and_weights():
    assert central_charge(1, 1) == Fraction(1, 5)
    assert central_charge(2, 0) == 0
    rs = build_root_system(1)
    assert conformal_weight(rs, Weight.zero(1), 1) == 0
    assert conformal_weight(rs, Weight([5]), 1) == 3
    with pytest.raises(InvalidParameterError):
        central_charge(1, -1)


def test_weight_arithmetic():
    a, b = Weight([1, 2]), Weight([Fraction(1, 2), 0])
    assert a + b == Weight([Fraction(3, 2), 2])
    assert a - b == Weight([Fraction(1, 2), 2])
    assert 2 * b == Weight([1, 0])
    assert Weight.eps(3, 2, 5) == Weight([0, 5, 0])

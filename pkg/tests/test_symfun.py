import pytest
from hypothesis import given

from classical_pieri.partitions import conjugate, enumerate_partitions, partitions_of
from classical_pieri.symfun import (
    HPolynomial, branching_coefficient, branching_expansion, h, h_jacobi_trudi,
    lr_coefficient, lr_product, nl_coefficient, nl_product, o_schur_h, skew_expansion,
    sp_schur_h,
)

from conftest import partitions
from oracles import brute_lr


def test_jacobi_trudi_examples():
    assert h_jacobi_trudi((1,)) == h(1)
    assert h_jacobi_trudi((1, 1)) == h(1) * h(1) - h(2)
    assert h_jacobi_trudi(()) == 1
    assert h(0) == 1 and h(-2) == 0


def test_sp_schur_examples():
    assert sp_schur_h((1,)) == h(1)
    assert sp_schur_h((1, 1)) == h(1) * h(1) - h(2) - 1
    assert sp_schur_h((2, 2)) == h(2) * h(2) + h(2) - h(3) * h(1) - h(1) * h(1)


def test_o_schur_examples():
    assert o_schur_h((1,)) == h(1)
    assert o_schur_h((2,)) == h(2) - 1
    assert o_schur_h(()) == 1


def test_hpolynomial_arithmetic():
    p = h(1) * h(2) + 3
    assert p - p == 0
    assert (p * 2).halve() == p
    with pytest.raises(ArithmeticError):
        (h(1) + 1).halve()
    with pytest.raises(ValueError):
        HPolynomial({(0,): 1})
    assert p.specialize(lambda r: r + 1, 1) == 2 * 3 + 3


@pytest.mark.parametrize("mu, nu, lam, expected", [
    ((2, 1), (), (2, 1), 1), ((2,), (), (2, 1), 0), ((1, 1), (1,), (2, 1), 1),
    ((1,), (1,), (2, 2), 0),
])
def test_lr_examples(mu, nu, lam, expected):
    assert lr_coefficient(mu, nu, lam) == expected


@given(partitions(max_size=4), partitions(max_size=3))
def test_lr_matches_schur_oracle(mu, nu):
    for lam in partitions_of(sum(mu) + sum(nu), max_length=4):
        assert lr_coefficient(mu, nu, lam) == brute_lr(mu, nu, lam)


@given(partitions(max_size=4), partitions(max_size=4))
def test_lr_symmetries(mu, nu):
    prod = lr_product(mu, nu)
    assert prod == lr_product(nu, mu)
    for lam, c in prod.items():
        assert lr_coefficient(conjugate(mu), conjugate(nu), conjugate(lam)) == c


@given(partitions(max_size=5), partitions(max_size=3))
def test_lr_pieri_specialisation(mu, lam):
    r = sum(lam) - sum(mu)
    if r < 0:
        return
    from classical_pieri.partitions import is_horizontal_strip, is_vertical_strip
    assert lr_coefficient(mu, (r,), lam) == int(is_horizontal_strip(mu, lam))
    assert lr_coefficient(mu, (1,) * r, lam) == int(is_vertical_strip(mu, lam))


def test_skew_expansion():
    assert skew_expansion((2, 1), (1,)) == {(2,): 1, (1, 1): 1}
    assert skew_expansion((2,), (1, 1)) == {}


def test_nl_examples():
    for lam in [(), (1,), (2, 1)]:
        for nu in [(), (1,), (2, 1)]:
            assert nl_coefficient((), nu, lam) == int(nu == lam)
    assert nl_coefficient((1,), (1,), ()) == 1
    assert nl_coefficient((1,), (1,), (2,)) == 1
    assert nl_coefficient((1,), (1,), (1, 1)) == 1
    assert nl_product((1,), (1,)) == {(): 1, (2,): 1, (1, 1): 1}


@given(partitions(max_size=3), partitions(max_size=3), partitions(max_size=4))
def test_nl_is_s3_symmetric(a, b, c):
    v = nl_coefficient(a, b, c)
    assert v == nl_coefficient(b, a, c) == nl_coefficient(a, c, b) == nl_coefficient(c, b, a)


@given(partitions(max_size=4), partitions(max_size=3))
def test_nl_product_agrees_with_coefficients(mu, nu):
    prod = nl_product(mu, nu)
    for lam in enumerate_partitions(sum(mu) + sum(nu)):
        assert prod.get(lam, 0) == nl_coefficient(mu, nu, lam)


def test_branching_examples():
    assert branching_coefficient("sp", (1, 1), ()) == 1
    assert branching_coefficient("o", (2,), ()) == 1
    assert branching_coefficient("o", (1, 1), ()) == 0
    for lam in [(2, 1), (3, 2, 1)]:
        assert branching_coefficient("sp", lam, lam) == 1
    with pytest.raises(ValueError):
        branching_coefficient("gl", (1,), ())


@given(partitions(max_size=6))
def test_branching_conjugation(lam):
    sp = branching_expansion("sp", lam)
    o = branching_expansion("o", conjugate(lam))
    assert {conjugate(mu): c for mu, c in sp.items()} == o

import pytest
from hypothesis import given, strategies as st

from classical_pieri.characters import f_poly
from classical_pieri.laurent import (
    InexactDivisionError, LaurentPolynomial as LP, lp_arith, lp_determinant,
    lp_dominant_monomial, lp_exact_divide, lp_substitute, subset_determinant,
)

x = LP.variable(0, 1)
xi = LP.variable(0, 1, -1)


def poly2():
    exps = st.tuples(st.integers(-3, 3), st.integers(-3, 3))
    return st.dictionaries(exps, st.integers(-4, 4), max_size=5).map(lambda d: LP(2, d))


def test_arith_examples():
    assert (x - xi) * (x + xi) == x ** 2 - xi ** 2
    p = x + 3
    assert p + 0 == p and lp_arith(p, LP.zero(1), "add") == p
    assert (x + xi) ** 2 == x ** 2 + 2 + xi ** 2
    assert lp_arith(x, xi, "mul") == 1


def test_variable_count_mismatch():
    with pytest.raises(ValueError):
        LP.variable(0, 1) + LP.variable(0, 2)


@given(poly2(), poly2(), poly2())
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == 0


def test_determinant_examples():
    assert lp_determinant([[LP.one(1), x], [xi, LP.one(1)]]) == 0
    eye = [[LP.one(1) if i == j else LP.zero(1) for j in range(3)] for i in range(3)]
    assert lp_determinant(eye) == 1
    f = [f_poly("C", r) for r in range(3)]
    assert lp_determinant([[f[1], f[2]], [f[0], f[1]]]) == (
        (x ** 2 - xi ** 2) ** 2 - (x ** 3 - xi ** 3) * (x - xi))


@given(st.lists(st.lists(st.integers(-5, 5), min_size=3, max_size=3), min_size=3, max_size=3))
def test_subset_determinant_matches_cofactor(m):
    a = m
    cof = (a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1])
           - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0])
           + a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]))
    assert subset_determinant(m, 0, 1) == cof


def test_exact_division_examples():
    den = x - xi
    assert lp_exact_divide(x ** 2 - xi ** 2, den) == x + xi
    assert lp_exact_divide(LP.zero(1), den) == 0
    q = lp_exact_divide(x ** 3 - xi ** 3, den)
    assert q == x ** 2 + 1 + xi ** 2 and q * den == x ** 3 - xi ** 3
    with pytest.raises(InexactDivisionError):
        lp_exact_divide(x ** 2 + 1, den)
    with pytest.raises(ZeroDivisionError):
        lp_exact_divide(x, LP.zero(1))


@given(poly2(), poly2())
def test_division_undoes_multiplication(a, b):
    if b:
        assert lp_exact_divide(a * b, b) == a


def test_substitute_examples():
    y1, y2 = LP.variable(0, 2), LP.variable(1, 2)
    assert lp_substitute(y1 * y2, [x, xi]) == 1
    assert lp_substitute(y1 + y2, [x, xi]) == x + xi
    assert lp_substitute(y1 ** 2 + y1 * y2 + y2 ** 2, [x, xi]) == x ** 2 + 1 + xi ** 2
    assert lp_substitute(y1 + y2, [x + 1, x - 1]) == 2 * x
    with pytest.raises(ValueError):
        lp_substitute(y1, [x])


def test_dominant_monomial_examples():
    assert lp_dominant_monomial(x ** 2 + 2 + xi ** 2) == ((2,), 1)
    assert lp_dominant_monomial(LP.zero(1)) is None
    p = LP.monomial((1, -1)) + LP.monomial((-1, 1))
    assert lp_dominant_monomial(p) == ((1, -1), 1)


def test_render_and_evaluation():
    p = x ** 2 + 2 + xi ** 2
    assert p.evaluate_at_ones() == 4
    assert "x1^2" in p.render() and "x1^-2" in p.render()
    assert LP.zero(1).render() == "0"

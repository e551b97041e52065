import pytest
from hypothesis import given, strategies as st

from classical_pieri.characters import (
    DecompositionError, GroupId, LabelError, RepRingElement, character_of,
    decompose_character, dimension, f_poly, irreducible_character, power_character,
    restrict_gl_character,
)
from classical_pieri.laurent import LaurentPolynomial as LP
from classical_pieri.partitions import enumerate_partitions

from conftest import partitions
from oracles import ssyt_content, weyl_dimension

x = LP.variable(0, 1)
xi = LP.variable(0, 1, -1)


def test_f_polynomials():
    assert f_poly("C", 0) == x - xi
    assert f_poly("D", 0) == 1
    assert f_poly("C", -3) == 0
    assert f_poly("D", 2) == x ** 2 + xi ** 2
    with pytest.raises(ValueError):
        f_poly("A", 1)


def test_character_examples():
    assert irreducible_character(GroupId.sp(1), (1,)) == x + xi
    assert irreducible_character(GroupId.so_odd(1), (1,)) == x + 1 + xi
    chi = irreducible_character(GroupId.sp(2), (1, 1))
    expected = LP(2, {(1, 1): 1, (1, -1): 1, (-1, 1): 1, (-1, -1): 1, (0, 0): 1})
    assert chi == expected and chi.evaluate_at_ones() == 5


def test_power_character_examples():
    assert power_character(GroupId.sp(1), "ext", 2) == 1
    assert power_character(GroupId.so_odd(1), "ext", 1) == x + 1 + xi
    assert power_character(GroupId.sp(1), "sym", 2) == x ** 2 + 1 + xi ** 2
    assert power_character(GroupId.sp(1), "sym", -1) == 0


def test_decompose_examples():
    sq = (x + xi) ** 2
    assert decompose_character(GroupId.sp(1), sq).coeffs == {(2,): 1, (): 1}
    assert decompose_character(GroupId.so_even(1), sq).coeffs == {(2,): 1, (): 2}
    assert decompose_character(GroupId.sp(1), LP.zero(1)).coeffs == {}


@pytest.mark.parametrize("g", [GroupId.sp(2), GroupId.so_odd(2), GroupId.so_even(2),
                               GroupId.so_even(3), GroupId.gl(3)], ids=str)
def test_decompose_round_trip(g):
    for lam in enumerate_partitions(5, max_length=g.nvars):
        assert decompose_character(g, irreducible_character(g, lam)).coeffs == {lam: 1}


def test_decompose_rejects_non_characters():
    with pytest.raises(DecompositionError):
        decompose_character(GroupId.sp(1), x)


def test_restriction_examples():
    sp1 = GroupId.sp(1)
    assert restrict_gl_character((1,), sp1) == x + xi
    assert restrict_gl_character((1, 1), sp1) == 1
    assert restrict_gl_character((2,), sp1) == x ** 2 + 1 + xi ** 2
    with pytest.raises(LabelError):
        restrict_gl_character((1, 1, 1), sp1)


def test_dimension_examples():
    assert dimension(GroupId.sp(1), {(1,): 1}) == 2
    assert dimension(GroupId.so_odd(1), {(1,): 1}) == 3
    assert dimension(GroupId.sp(2), {(1, 1): 1}) == 5


@pytest.mark.parametrize("family, n", [("C", 1), ("C", 2), ("C", 3), ("B", 1), ("B", 2),
                                       ("B", 3), ("D", 2), ("D", 3)])
def test_dimensions_match_weyl_formula(family, n):
    g = {"C": GroupId.sp, "B": GroupId.so_odd, "D": GroupId.so_even}[family](n)
    for lam in enumerate_partitions(6, max_length=n):
        got = irreducible_character(g, lam).evaluate_at_ones()
        want = weyl_dimension(family, n, lam)
        if family == "D" and len(lam) == n:
            # the SO_2n basis element is the sum of the two associated irreducibles
            want *= 2
        assert got == want, (family, n, lam)


def test_gl_characters_are_schur_polynomials():
    g = GroupId.gl(3)
    for lam in enumerate_partitions(5, max_length=3):
        assert irreducible_character(g, lam).terms == ssyt_content(lam, 3)


def _weyl_images(exp, family):
    """All signed permutations of ``exp`` allowed by the Weyl group."""
    import itertools
    n = len(exp)
    for perm in itertools.permutations(range(n)):
        for signs in itertools.product((1, -1), repeat=n):
            if family == "D" and signs.count(-1) % 2:
                continue
            yield tuple(signs[i] * exp[perm[i]] for i in range(n))


@given(partitions(max_size=5, max_length=2), st.sampled_from(["C", "B", "D"]))
def test_characters_are_weyl_invariant(lam, family):
    g = {"C": GroupId.sp, "B": GroupId.so_odd, "D": GroupId.so_even}[family](2)
    chi = irreducible_character(g, lam)
    for e, c in chi.terms.items():
        for img in _weyl_images(e, "C" if family != "D" else "D"):
            assert chi.coefficient(img) == c


def test_label_checks():
    with pytest.raises(LabelError):
        irreducible_character(GroupId.sp(1), (1, 1))
    with pytest.raises(ValueError):
        irreducible_character(GroupId.o(3), (1,))
    with pytest.raises(LabelError):
        RepRingElement(GroupId.o(2), {(2, 2): 1})


def test_rep_ring_element_protocol():
    g = GroupId.sp(2)
    a = RepRingElement(g, {(1,): 2, (2,): 1})
    b = RepRingElement(g, {(1,): -2})
    assert (a + b).coeffs == {(2,): 1}
    assert a.scale(3)[(1,)] == 6
    assert [lam for lam in a] == [(1,), (2,)]
    assert a.to_json() == {"[1]": 2, "[2]": 1}
    assert character_of(g, a) == 2 * irreducible_character(g, (1,)) + irreducible_character(g, (2,))
    assert str(GroupId.so_even(3)) == "SO_6" and str(GroupId.sp(2)) == "Sp_4"
    assert GroupId.so_odd(2).dim_defining == 5

import pytest
from hypothesis import given, strategies as st

from classical_pieri import pieri
from classical_pieri.characters import (
    GroupId, LabelError, decompose_character, irreducible_character, power_character,
)
from classical_pieri.partitions import enumerate_partitions

from conftest import partitions


def _oracle(g, mu, kind, r):
    prod = irreducible_character(g, mu) * power_character(g, kind, r)
    return decompose_character(g, prod)


def test_pieri_set_examples():
    assert list(pieri.pieri_set((1,), (2,), 1)) == [(1,)]
    assert list(pieri.pieri_set((1,), (1,), 2)) == [()]
    assert list(pieri.pieri_set((2, 1), (3, 2), 2)) == [(2, 1)]


def test_condition_iii_examples():
    assert pieri.o_condition_iii((1, 1), (1,), (1, 1), 2) is False
    assert pieri.o_condition_iii((1, 1), (1, 1), (1, 1), 2) is True
    assert pieri.o_condition_iii((1,), (), (1,), 3) is True


@pytest.mark.parametrize("fn, args, expected", [
    (pieri.sp_pieri_mult, ((1,), (1,), 2, 1), 1),
    (pieri.sp_pieri_mult, ((1,), (2,), 1, 1), 1),
    (pieri.sp_pieri_mult, ((1,), (1,), 1, 2), 0),
    (pieri.o_pieri_mult, ((1, 1), (1, 1), 2, 2), 0),
    (pieri.o_pieri_mult, ((1, 1), (1, 1), 0, 2), 1),
    (pieri.o_pieri_mult, ((1,), (2,), 1, 3), 1),
    (pieri.o_sym_power_mult, ((), (), 2, 3), 1),
    (pieri.o_sym_power_mult, ((), (2,), 2, 3), 1),
    (pieri.so_odd_pieri_mult, ((1,), (1,), 1, 1), 1),
    (pieri.so_odd_pieri_mult, ((1,), (2,), 1, 1), 1),
    (pieri.so_odd_pieri_mult, ((1,), (), 1, 2), 1),
    (pieri.so_even_pieri_coeff, ((1,), (), 1, 1), 2),
    (pieri.so_even_pieri_coeff, ((1,), (2,), 1, 1), 1),
    (pieri.sp_dual_pieri_mult, ((1,), (), 1, 1), 1),
    (pieri.sp_dual_pieri_mult, ((1,), (2,), 1, 1), 1),
    (pieri.sp_dual_pieri_mult, ((), (), 1, 1), 0),
    (pieri.so_odd_dual_pieri_mult, ((1,), (1,), 1, 1), 1),
    (pieri.so_odd_dual_pieri_mult, ((1,), (), 1, 1), 1),
    # the defining representation of SO_3 has no invariant vector
    (pieri.so_odd_dual_pieri_mult, ((), (), 1, 1), 0),
    (pieri.so_even_dual_pieri_coeff, ((1,), (), 1, 1), 2),
    (pieri.so_even_dual_pieri_coeff, ((1,), (2,), 1, 1), 1),
    # witnesses (3,1), (2,2), (2,1,1)
    (pieri.so_even_dual_pieri_coeff, ((2, 1), (2, 1), 2, 3), 3),
])
def test_rule_examples(fn, args, expected):
    assert fn(*args) == expected


@given(partitions(max_size=5), st.integers(0, 3))
def test_trivial_power_is_identity(mu, n):
    for lam in [mu, (1,), ()]:
        if len(mu) <= n + 1 and len(lam) <= n + 1:
            assert pieri.sp_pieri_mult(mu, lam, 0, n + 1) == int(tuple(lam) == tuple(mu))


def test_multiplicity_factor():
    assert pieri.so_multiplicity_factor((1,), (1, 1), 2) == 2
    assert pieri.so_multiplicity_factor((1, 1), (1, 1), 2) == 1
    assert pieri.so_multiplicity_factor((1,), (1,), 2) == 1


def test_dual_pieri_set_examples():
    assert list(pieri.dual_pieri_set((1,), (), 1, 1)) == [(1,)]
    assert list(pieri.dual_pieri_set((1,), (2,), 1, 1)) == [(2,)]
    assert sorted(pieri.dual_pieri_set((1,), (1,), 2, 2)) == [(1, 1), (2,)]


@pytest.mark.parametrize("g", [GroupId.sp(1), GroupId.sp(2), GroupId.so_odd(1),
                               GroupId.so_odd(2), GroupId.so_even(2)], ids=str)
@pytest.mark.parametrize("kind", ["sym", "ext"])
def test_tensor_matches_character_oracle(g, kind):
    for mu in enumerate_partitions(3, max_length=g.rank):
        for r in range(4):
            got = pieri.tensor_decomposition(g, mu, kind, r)
            if g.family != "Sp" and kind == "sym":
                assert got == _oracle(g, mu, "sym", r)
            else:
                assert got == _oracle(g, mu, kind, r), (mu, r)


def test_tensor_examples():
    g = GroupId.sp(1)
    assert pieri.tensor_decomposition(g, (1,), "sym", 2).coeffs == {(3,): 1, (1,): 1}
    assert pieri.tensor_decomposition(GroupId.so_even(1), (1,), "ext", 1).coeffs == {(2,): 1, (): 2}
    for grp in (GroupId.sp(2), GroupId.o(3), GroupId.so_odd(2), GroupId.so_even(2), GroupId.gl(3)):
        assert pieri.tensor_decomposition(grp, (2, 1), "sym", 0).coeffs == {(2, 1): 1}
    with pytest.raises(ValueError):
        pieri.tensor_decomposition(g, (1,), "cube", 1)


def test_standard_pieri_examples():
    assert pieri.standard_pieri(GroupId.sp(2), (1,)).coeffs == {(): 1, (2,): 1, (1, 1): 1}
    assert pieri.standard_pieri(GroupId.so_odd(1), (1,)).coeffs == {(): 1, (2,): 1, (1,): 1}
    assert pieri.standard_pieri(GroupId.sp(1), (1,)).coeffs == {(): 1, (2,): 1}
    assert pieri.standard_pieri(GroupId.gl(2), (1,)).coeffs == {(2,): 1, (1, 1): 1}


def test_restriction_multiplicities():
    assert pieri.rest_mult("Sp", (1, 1), 0, 2) == 1
    assert pieri.rest_mult("Sp", (2,), 2, 2) == 1
    assert pieri.rest_mult("O", (2,), 0, 3) == 1
    assert pieri.rest_mult("Sp", (2,), 0, 2) == 0


def test_labels_are_checked():
    with pytest.raises(LabelError):
        pieri.sp_pieri_mult((1, 1), (1,), 1, 1)
    with pytest.raises(LabelError):
        pieri.o_pieri_mult((2, 2), (1,), 1, 2)

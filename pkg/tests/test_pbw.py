import math
from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from coideal_lab.coefficients import default_bicharacter
from coideal_lab.linalg import rank_of, scalar_field
from coideal_lab.pbw import (
    SuperLetter,
    component_basis,
    evaluate_monomial,
    height,
    leading_term,
    pbw_decompose,
    pbw_monomials,
    projection_pi,
    super_letters,
    u_bracket,
)
from coideal_lab.phi import phi
from coideal_lab.shuffle import ShuffleElement, shuffle_product
from coideal_lab.words import psi


def test_u_bracket_small(bc2):
    assert u_bracket(bc2, 1, 1) == ShuffleElement.letter(bc2, 1)
    want = ShuffleElement.word(bc2, (2, 2), bc2.const(1) - bc2.qs(-2))
    assert u_bracket(bc2, 2, 3) == want


def test_u_bracket_range(bc2):
    with pytest.raises(ValueError):
        u_bracket(bc2, 3, 2)


def test_heights():
    assert height(default_bicharacter(2), 1, 2) == math.inf
    six = default_bicharacter(3, modulus=6)
    assert height(six, 1, 2) == 3
    assert height(six, 1, 3) == 6
    five = default_bicharacter(2, modulus=5)
    assert {height(five, s.k, s.m) for s in super_letters(2)} == {5}


def test_super_letter_order(bc2):
    assert [str(s) for s in super_letters(2)] == ["u[2,2]", "u[1,3]", "u[1,2]", "u[1,1]"]


def test_monomials_of_a_letter(bc3):
    assert pbw_monomials(bc3, (0, 1, 0)) == [((SuperLetter(2, 2), 1),)]


def _products_of_letters(bc, d):
    word = [i for i, c in enumerate(d, start=1) for _ in range(c)]
    seen, out = set(), []
    for perm in product(word, repeat=len(word)):
        if sorted(perm) != sorted(word) or perm in seen:
            continue
        seen.add(perm)
        acc = ShuffleElement.one(bc)
        for x in perm:
            acc = shuffle_product(acc, ShuffleElement.letter(bc, x))
        out.append(acc)
    return out


def test_rank_two_component(bc2):
    mons = pbw_monomials(bc2, (1, 2))
    rendered = sorted("*".join(f"{s}^{e}" for s, e in m) for m in mons)
    assert rendered == sorted(["u[1,3]^1", "u[2,2]^1*u[1,2]^1", "u[2,2]^2*u[1,1]^1"])
    # a basis: independent and spanning every product of letters
    field = scalar_field(bc2)
    values = [evaluate_monomial(bc2, m) for m in mons]
    assert rank_of(field, values) == 3
    assert rank_of(field, values + _products_of_letters(bc2, (1, 2))) == 3


@pytest.mark.parametrize("n, d", [(2, (2, 2)), (3, (1, 1, 1)), (3, (1, 2, 1)), (3, (1, 1, 2)),
                                  (3, (2, 1, 1)), (3, (1, 2, 2))])
def test_basis_property(n, d):
    bc = default_bicharacter(n)
    basis = component_basis(bc, d)
    field = scalar_field(bc)
    values = basis.values
    assert rank_of(field, values) == basis.dimension
    assert rank_of(field, values + _products_of_letters(bc, d)) == basis.dimension


def test_cyclotomic_excludes_fifth_powers():
    bc = default_bicharacter(2, modulus=5)
    for mono in pbw_monomials(bc, (0, 5)):
        assert all(e < 5 for _, e in mono)
    assert pbw_monomials(bc, (0, 5)) == []


@pytest.mark.parametrize("n", [2, 3])
def test_decompose_super_letters(n):
    bc = default_bicharacter(n)
    for k in range(1, n + 1):
        for m in range(k, psi(n, k)):
            parts = pbw_decompose(u_bracket(bc, k, m))
            assert [mono for mono, _ in parts] == [((SuperLetter(k, m), 1),)]
            assert projection_pi(k, m, u_bracket(bc, k, m)) == scalar_field(bc).one


def test_leading_term_of_phi(bc2):
    mono, c = leading_term(phi(bc2, {1}, 1, 3))
    assert mono == ((SuperLetter(1, 3), 1),)
    assert c == scalar_field(bc2).one


@pytest.mark.parametrize("n", [2, 3])
def test_leading_term_of_phi_below_psi(n):
    bc = default_bicharacter(n)
    one = scalar_field(bc).one
    for k in range(1, n + 1):
        for m in range(k, psi(n, k)):
            for mask in range(1 << (m - k)):
                S = {k + i for i in range(m - k) if mask >> i & 1}
                assert leading_term(phi(bc, S, k, m)) == (((SuperLetter(k, m), 1),), one)


def test_projection_kills_products(bc3):
    # pi_kl(a u[k,i]) = 0 for a of positive degree in letters above k
    for a_word in [(2,), (3,), (2, 3), (3, 3)]:
        a = ShuffleElement.word(bc3, a_word)
        for i in range(1, 5):
            prod = shuffle_product(a, u_bracket(bc3, 1, i))
            for l in range(1, psi(3, 1)):
                assert projection_pi(1, l, prod) == scalar_field(bc3).zero


letters2 = st.sampled_from(super_letters(2))


@settings(max_examples=25, deadline=None)
@given(letters2, letters2)
def test_round_trip(s, t):
    bc = default_bicharacter(2)
    prod = shuffle_product(u_bracket(bc, s.k, s.m), u_bracket(bc, t.k, t.m))
    field = scalar_field(bc)
    acc = {}
    for mono, c in pbw_decompose(prod):
        for w, v in evaluate_monomial(bc, mono).terms.items():
            acc[w] = acc.get(w, field.zero) + c * field.to_field(v)
    target = {w: field.to_field(v) for w, v in prod.terms.items()}
    assert {w: v for w, v in acc.items() if v} == target

from concurrent.futures import ThreadPoolExecutor
from itertools import combinations

import pytest

from coideal_lab.checks import (
    check_closed_form_full,
    check_duality,
    check_extraction,
    check_regularity,
    check_theta_closed_forms,
)
from coideal_lab.classifier import SpanOracle, root_sequence_of
from coideal_lab.coefficients import default_bicharacter
from coideal_lab.pbw import u_bracket
from coideal_lab.phi import (
    ColoredScheme,
    clip,
    closed_form_full,
    dual_set,
    duality_constant,
    extract_phi,
    generators_of_uskm,
    is_black_regular,
    is_regular,
    is_white_regular,
    phi,
    sigma_monoid,
    simple_roots_of_uskm,
    spectrum,
    theta_of_uskm,
)
from coideal_lab.shuffle import ShuffleElement, shuffle_product
from coideal_lab.words import psi


def subsets(k, m):
    pts = range(k, m)
    for r in range(m - k + 1):
        yield from combinations(pts, r)


def test_empty_set_gives_super_letter(bc3):
    for k in range(1, 7):
        for m in range(k, 7):
            assert phi(bc3, (), k, m) == u_bracket(bc3, k, m)


def test_only_the_window_matters(bc3):
    assert set(clip({0, 2, 3, 9}, 2, 5)) == {2, 3}
    assert phi(bc3, {1, 2, 6}, 2, 4) == phi(bc3, {2}, 2, 4)


def test_full_set_closed_form(bc2):
    for k in range(1, 5):
        for m in range(k, 5):
            assert phi(bc2, range(k, m), k, m) == closed_form_full(bc2, k, m)


def test_closed_form_at_roots_of_unity():
    for t in (5, 7):
        res = check_closed_form_full(default_bicharacter(3, modulus=t))
        assert res.ok, res.failures


def test_regularity_examples():
    for n in (2, 3):
        for k in range(1, 2 * n + 1):
            for m in range(k, 2 * n + 1):
                for S in subsets(k, m):
                    if m <= n:
                        assert is_white_regular(n, S, k, m) and is_black_regular(n, S, k, m)
                    if m == psi(n, k):
                        assert not is_regular(n, S, k, m)
    assert is_black_regular(3, {1, 2, 3}, 1, 5)
    assert not is_white_regular(3, {1, 2, 3}, 1, 5)


@pytest.mark.parametrize("n", [2, 3])
def test_regularity_three_ways(n):
    res = check_regularity(n)
    assert res.ok, res.failures


def test_scheme_renderings():
    sc = ColoredScheme.of(3, {1, 2, 3}, 1, 5)
    assert sc.render_plain() == "0o 1* 2* 3* 4o 5*"
    assert sc.render_shifted() == " . 5* 4o 3* <=\n0o 1* 2* 3*"
    assert sc.to_json() == {"k": 1, "m": 5, "black": [1, 2, 3]}
    assert ColoredScheme.of(3, (), 1, 2).render_shifted() is None


def test_dual_of_example(bc3):
    T, k, m = dual_set(3, {1, 2, 3}, 1, 5)
    assert (set(T), k, m) == ({2}, 2, 6)
    assert phi(bc3, (2,), 2, 6) == phi(bc3, (1, 2, 3), 1, 5).scale(bc3.qs(1))
    c = duality_constant(bc3, {1, 2, 3}, 1, 5)
    assert phi(bc3, {1, 2, 3}, 1, 5) == phi(bc3, (2,), 2, 6).scale(c)


def test_duality_constant_needs_black_regular(bc3):
    with pytest.raises(ValueError):
        duality_constant(bc3, {1}, 1, 5)


@pytest.mark.parametrize("n", [2, 3])
def test_duality_exhaustive(n):
    res = check_duality(default_bicharacter(n))
    assert res.ok and res.checked > 0, res.failures


def test_spectrum(bc3):
    assert spectrum(u_bracket(bc3, 1, 4), 1) == {4}
    for m in range(1, 6):
        for S in subsets(1, m):
            assert spectrum(phi(bc3, S, 1, m), 1) <= set(S) | {m}
    # F_l u[k,l] + u[k,m] with F_l = x_3 x_3
    a = shuffle_product(ShuffleElement.word(bc3, (3, 3)), u_bracket(bc3, 1, 2)) + u_bracket(bc3, 1, 4)
    assert spectrum(a, 1) == {2, 4}


def test_extraction_of_a_super_letter(bc3):
    S, val = extract_phi(u_bracket(bc3, 2, 4), 2, 4)
    assert S == () and val == u_bracket(bc3, 2, 4)


@pytest.mark.parametrize("n", [2, 3])
def test_extraction_recovers_regular_sets(n):
    res = check_extraction(default_bicharacter(n))
    assert res.ok, res.failures


def test_extraction_recovers_every_set(bc3):
    for k in range(1, 4):
        for m in range(k, psi(3, k)):
            for S in subsets(k, m):
                assert extract_phi(phi(bc3, S, k, m), k, m)[0] == S


def test_extraction_mixed_input(bc2):
    c = u_bracket(bc2, 1, 3) + shuffle_product(ShuffleElement.letter(bc2, 2), u_bracket(bc2, 1, 2))
    trace = []
    S, val = extract_phi(c, 1, 3, trace)
    assert set(S) <= {2}
    assert val == phi(bc2, S, 1, 3)
    assert trace and trace[-1].S == S
    # membership through the span oracle: c and Phi^S both lie in the
    # subalgebra U_theta with theta read off c
    theta = root_sequence_of([c])
    oracle = SpanOracle(bc2, 8)
    assert oracle.contains(theta, c)
    assert oracle.contains(theta, val)


def test_extraction_rejects_wrong_leading_term(bc2):
    with pytest.raises(ValueError):
        extract_phi(u_bracket(bc2, 1, 2), 1, 3)


def test_theta_examples():
    assert theta_of_uskm(2, (), 1, 3) == (3, 1)
    assert theta_of_uskm(3, {1, 2, 3}, 1, 5) == (5, 1, 0)


@pytest.mark.parametrize("n", [2, 3])
def test_theta_closed_forms(n):
    res = check_theta_closed_forms(n)
    assert res.ok, res.failures


def test_sigma_monoid_of_example():
    sg = sigma_monoid(3, {1, 2, 3}, 1, 5)
    assert sg.contains((1, 1, 1)) and not sg.contains((0, 0, 1))
    assert sorted(str(r) for r in simple_roots_of_uskm(3, {1, 2, 3}, 1, 5)) == \
        sorted(["[1:1]", "[1:3]", "[1:5]", "[2:2]"])


def test_generators_of_uskm_are_phis(bc3):
    for S, a, b, value in generators_of_uskm(bc3, {1, 2, 3}, 1, 5):
        assert value == phi(bc3, S, a, b)


def test_non_regular_sets_do_not_vanish():
    for n in (2, 3):
        bc = default_bicharacter(n)
        for k in range(1, 2 * n + 1):
            for m in range(k, 2 * n + 1):
                for S in subsets(k, m):
                    assert not phi(bc, S, k, m).is_zero()


def test_parallel_evaluation_agrees():
    bc = default_bicharacter(3, modulus=7)
    jobs = [(S, 1, 5) for S in subsets(1, 5)]
    serial = [phi(bc, *j) for j in jobs]
    with ThreadPoolExecutor(4) as pool:
        threaded = list(pool.map(lambda j: phi(bc, *j), jobs))
    assert serial == threaded

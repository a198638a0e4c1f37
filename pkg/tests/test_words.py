from itertools import product

import pytest
from hypothesis import given, strategies as st

from coideal_lab.words import (
    RootInterval,
    decompose_interval,
    decompose_interval_bruteforce,
    interval_constitution,
    is_standard,
    psi,
    render_bracket,
    standard_bracketing,
    u_word,
    u_word_desc,
)


def test_psi():
    assert psi(3, 3) == 4
    assert psi(3, 2) == 5
    for n in (1, 2, 3):
        for i in range(1, 2 * n + 1):
            assert psi(n, psi(n, i)) == i


def test_u_words():
    assert u_word(2, 1, 3) == (1, 2, 2)
    assert u_word(3, 2, 5) == (2, 3, 3, 2)
    assert u_word(3, 4, 4) == (3,)
    for n in (2, 3):
        for k in range(1, 2 * n + 1):
            for m in range(k, 2 * n + 1):
                assert u_word_desc(n, m, k) == tuple(reversed(u_word(n, k, m)))


def test_standard_examples():
    assert is_standard((1, 2, 2))
    assert render_bracket(standard_bracketing((1, 2, 2))) == "[[x1,x2],x2]"
    assert not is_standard((2, 1))
    assert is_standard((3,))
    assert standard_bracketing((3,)) == 3
    with pytest.raises(ValueError):
        standard_bracketing((2, 1))


def test_shirshov_factorization():
    """Standard words of length <= 6 split into standard factors, the left one shortest."""
    for length in range(2, 7):
        for w in product(range(1, 4), repeat=length):
            if not is_standard(w):
                continue
            tree = standard_bracketing(w)
            left_len = len(_leaves(tree[0]))
            assert is_standard(w[:left_len]) and is_standard(w[left_len:])
            assert not any(is_standard(w[:i]) and is_standard(w[i:]) for i in range(1, left_len))


def _leaves(tree):
    return (tree,) if isinstance(tree, int) else _leaves(tree[0]) + _leaves(tree[1])


def test_root_interval_canonical():
    assert RootInterval.make(2, 3, 4) == RootInterval.make(2, 1, 2)
    assert str(RootInterval.make(3, 2, 6)) == "[1:5]"


def test_decompose_examples():
    assert decompose_interval(2, (1, 1), [(1, 1)]) == [0, 1]
    assert decompose_interval(2, (1, 3), [(1, 1), (2, 3)]) == [0, 1, 3]
    assert decompose_interval(2, (1, 4), [(1, 2), (3, 4)]) == [0, 2, 4]
    assert decompose_interval(2, (1, 4), [(1, 2), (1, 2)]) == [0, 2, 4]
    with pytest.raises(ValueError):
        decompose_interval(2, (1, 3), [(1, 1)])


def _parts_for(n):
    return [(a, b) for a in range(1, n + 1) for b in range(a, psi(n, a))]


@pytest.mark.parametrize("n", [2, 3])
def test_decompose_matches_bruteforce(n):
    parts = _parts_for(n)
    for r in (1, 2, 3):
        for combo in product(parts, repeat=r):
            if list(combo) != sorted(combo):
                continue
            total = [0] * n
            for a, b in combo:
                total = [x + y for x, y in zip(total, interval_constitution(n, a, b))]
            for k in range(1, 2 * n + 1):
                for m in range(k, 2 * n + 1):
                    if list(interval_constitution(n, k, m)) != total:
                        continue
                    fast = decompose_interval(n, (k, m), combo)
                    slow = decompose_interval_bruteforce(n, (k, m), combo)
                    assert (fast is None) == (slow is None), (combo, k, m)


@given(st.integers(1, 3).flatmap(lambda n: st.tuples(st.just(n), st.integers(1, 2 * n))))
def test_psi_reverses_order(ni):
    n, i = ni
    if i < 2 * n:
        assert psi(n, i + 1) == psi(n, i) - 1

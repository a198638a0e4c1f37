import pytest
from hypothesis import given, settings, strategies as st

from coideal_lab.checks import LATTICE_N2, check_claims_all
from coideal_lab.classifier import (
    SpanOracle,
    all_thetas,
    build_rt,
    describe,
    enumerate_subalgebras,
    generator_specs,
    generators,
    lattice,
    lattice_json,
    normalized_generators,
    root_sequence_of,
    simple_roots,
    validate_theta,
)
from coideal_lab.coefficients import default_bicharacter
from coideal_lab.phi import is_regular, phi
from coideal_lab.shuffle import ShuffleElement, monomial_ratio, skew_bracket
from coideal_lab.words import constitution, interval_constitution


def test_validate_theta():
    assert validate_theta(3, [5, 1, 0]) == (5, 1, 0)
    with pytest.raises(ValueError):
        validate_theta(3, (6, 0, 0))
    with pytest.raises(ValueError):
        validate_theta(2, (1,))


@pytest.mark.parametrize("n", [1, 2, 3])
def test_last_entry_one(n):
    theta = (0,) * (n - 1) + (1,)
    assert build_rt(n, theta).T[n] == {n, n + 1}


def test_all_zero_is_empty():
    rt = build_rt(3, (0, 0, 0))
    assert not any(rt.R.values()) and not any(rt.T.values())
    assert generators(default_bicharacter(3), (0, 0, 0)) == []
    assert normalized_generators(default_bicharacter(3), (0, 0, 0)) == []


def test_rank_three_example():
    rt = build_rt(3, (5, 1, 0))
    assert rt.R[1] == {1, 3, 5} and rt.T[1] == {1, 2, 3, 5, 6}
    assert rt.R[2] == rt.T[2] == {2}
    assert rt.to_json()["T"]["1"] == [1, 2, 3, 5, 6]


def test_rank_three_generator_degrees(bc3):
    degs = sorted(g.degree for g in generators(bc3, (5, 1, 0)))
    want = sorted([(1, 0, 0), (0, 1, 0), constitution(3, (3, 2, 1)), constitution(3, (3, 3, 2, 1, 2))])
    assert degs == want


def test_single_entry_simple_root():
    for n, k in [(2, 1), (2, 2), (3, 2)]:
        theta = tuple(1 if i == k else 0 for i in range(1, n + 1))
        assert {str(r) for r in simple_roots(build_rt(n, theta))} == {f"[{k}:{k}]"}


def test_rank_two_roots():
    d = describe(2, (3, 1))
    assert {str(r) for r in d.simple_roots} == {"[1:3]", "[2:2]"}
    assert {str(r) for r in d.roots} >= {"[1:3]", "[2:2]"}


def test_normalized_generators(bc2):
    pairs = normalized_generators(bc2, (2, 0))
    assert [g for g, _ in pairs] == [(-1, 0), (-1, -1)]
    top = pairs[-1][1]
    x1, x2 = ShuffleElement.letter(bc2, 1), ShuffleElement.letter(bc2, 2)
    assert monomial_ratio(top, skew_bracket(x2, x1)) is not None
    for S, k, m in generator_specs(build_rt(2, (3, 1))):
        g = dict(normalized_generators(bc2, (3, 1)))
        assert tuple(-c for c in interval_constitution(2, k, m)) in g


def test_generator_lists_are_regular():
    for n in (1, 2, 3):
        for theta in all_thetas(n):
            for S, k, m in generator_specs(build_rt(n, theta)):
                assert is_regular(n, S, k, m)


def test_root_sequence_examples(bc2, bc3):
    assert root_sequence_of([phi(bc2, (), 1, 3)]) == (3, 1)
    x = lambda i: ShuffleElement.letter(bc3, i)
    w = skew_bracket(skew_bracket(x(3), skew_bracket(x(3), skew_bracket(x(2), x(1)))), x(2))
    assert root_sequence_of([w]) == (5, 1, 0)
    with pytest.raises(ValueError):
        root_sequence_of([])


@pytest.mark.parametrize("n, count", [(1, 2), (2, 8), (3, 48)])
def test_enumeration(n, count):
    descs = enumerate_subalgebras(n)
    assert len(descs) == count
    assert [d.theta for d in descs] == sorted(d.theta for d in descs)
    assert len({frozenset(d.simple_roots) for d in descs}) == count


@pytest.mark.parametrize("n", [1, 2, 3])
def test_round_trip(n):
    bc = default_bicharacter(n)
    for theta in all_thetas(n):
        assert root_sequence_of(generators(bc, theta), n=n) == theta


@settings(max_examples=20, deadline=None)
@given(st.sampled_from(all_thetas(3)))
def test_descriptor_json_is_sorted(theta):
    doc = describe(3, theta).to_json()
    assert doc["theta"] == list(theta)
    for key in ("R", "T"):
        for vals in doc[key].values():
            assert vals == sorted(vals)
    assert doc["simple_roots"] == sorted(doc["simple_roots"], key=lambda s: tuple(map(int, s[1:-1].split(":"))))


def test_span_oracle_basics(bc2):
    oracle = SpanOracle(bc2, 6)
    for theta in all_thetas(2):
        for g in generators(bc2, theta):
            assert oracle.contains(theta, g)
    assert not oracle.contains((0, 0), ShuffleElement.letter(bc2, 1))
    with pytest.raises(ValueError):
        oracle.span((1, 1), (4, 4))


def test_rank_two_lattice(bc2):
    assert lattice_json(lattice(bc2, 8)) == LATTICE_N2


@pytest.mark.parametrize("n", [1, 2, 3])
def test_claims(n):
    for res in check_claims_all(n):
        assert res.ok, (res.name, res.failures[:3])

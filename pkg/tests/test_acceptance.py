"""Acceptance criteria 1-14.

Each criterion runs its exhaustive check, prints one PASS/FAIL line with the
case count and wall time, and fails the test on any counterexample or on
exceeding its runtime budget.  Also runnable directly:

    python3 tests/test_acceptance.py
"""
from __future__ import annotations

import time

import pytest

from coideal_lab import checks
from coideal_lab.checks import CheckResult
from coideal_lab.coefficients import default_bicharacter, multiparameter_bicharacter


def bc(n: int, t: int | None = None):
    return default_bicharacter(n, modulus=t)


def crit_1():
    return [checks.check_serre(bc(n)) for n in (2, 3)]


def crit_2():
    return [checks.check_shuffle_values(bc(n)) for n in (1, 2, 3)]


def crit_3():
    return [checks.check_coproduct(bc(n)) for n in (1, 2, 3)]


def crit_4():
    out = [checks.check_coefficient_tables(bc(n)) for n in (1, 2, 3, 4)]
    out += [checks.check_coefficient_tables(multiparameter_bicharacter(n)) for n in (2, 3, 4)]
    return out


def crit_5():
    return [checks.check_closed_form_full(bc(n)) for n in (1, 2, 3)]


def crit_6():
    return [checks.check_duality(bc(n)) for n in (1, 2, 3)]


def crit_7():
    return [r for n in (1, 2, 3) for r in checks.check_phi_identities(bc(n))]


def crit_8():
    out = []
    for n in (1, 2, 3):
        out += [checks.check_relation_56(bc(n)), checks.check_derivatives(bc(n))]
    return out


def crit_9():
    return checks.check_cyclotomic(5, 2)


def crit_10():
    return [checks.check_classification_goldens()]


def crit_11():
    return [checks.check_enumeration(n) for n in (1, 2, 3)]


def crit_12():
    return [checks.check_lattice(bc(2), 8)]


def crit_13():
    return [r for n in (1, 2, 3) for r in checks.check_claims_all(n)]


def crit_14():
    out = []
    for n in (1, 2, 3):
        out += [checks.check_single_bracket_theta(n), checks.check_theta_closed_forms(n)]
    return out


CRITERIA = [
    (1, "defining relations vanish, n=2,3", crit_1, 5),
    (2, "shuffle values of u[k,m], n<=3", crit_2, 5),
    (3, "coproduct of u[k,m] termwise, n<=3", crit_3, 30),
    (4, "sigma/mu tables vs brute force, n<=4, multiparameter", crit_4, 5),
    (5, "closed form of Phi^[k,m-1](k,m), n<=3", crit_5, 60),
    (6, "duality with exact constant, black-regular sets, n<=3", crit_6, 300),
    (7, "Phi identities and projective factorizations, n<=3", crit_7, 300),
    (8, "relation [u,[u,u[k+1,m]]]=0 and derivative formulas, n<=3", crit_8, 60),
    (9, "root of unity t=5, n=2: heights, powers, derivative of a power", crit_9, 60),
    (10, "classification goldens", crit_10, 5),
    (11, "enumeration 2/8/48 and round trip", crit_11, 120),
    (12, "rank-two Hasse diagram via span oracle", crit_12, 120),
    (13, "construction consistency over all theta, n<=3", crit_13, 120),
    (14, "root sequences: single bracket and scheme formulas vs search, n<=3", crit_14, 120),
]


def run_criterion(number: int, label: str, fn, budget: float) -> tuple[bool, str]:
    start = time.perf_counter()
    results: list[CheckResult] = fn()
    elapsed = time.perf_counter() - start
    cases = sum(r.checked for r in results)
    bad = [r for r in results if not r.ok]
    ok = not bad and cases > 0 and elapsed < budget
    line = f"criterion {number:2d} {'PASS' if ok else 'FAIL'}: {label} ({cases} cases, {elapsed:.2f}s, budget {budget}s)"
    if bad:
        first = bad[0]
        line += f"\n    {first.name}: {first.failures[0]}"
    elif cases == 0:
        line += "\n    no cases examined"
    elif elapsed >= budget:
        line += "\n    over the runtime budget"
    return ok, line


@pytest.mark.parametrize("number, label, fn, budget", CRITERIA, ids=[f"criterion_{c[0]}" for c in CRITERIA])
def test_criterion(number, label, fn, budget, capsys):
    ok, line = run_criterion(number, label, fn, budget)
    with capsys.disabled():
        print("\n" + line)
    assert ok, line


if __name__ == "__main__":
    import sys

    verdicts = []
    for spec in CRITERIA:
        ok, line = run_criterion(*spec)
        print(line, flush=True)
        verdicts.append(ok)
    sys.exit(0 if all(verdicts) else 1)

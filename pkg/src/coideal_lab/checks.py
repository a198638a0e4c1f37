"""Verification suites: every stated identity, evaluated exactly.

Each check returns a CheckResult holding the number of cases examined and
the counterexamples found.  The CLI ``verify`` command and the acceptance
tests both run these.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Iterable

from .coefficients import (
    Bicharacter,
    alpha_shuffle,
    beta_km,
    default_bicharacter,
    mono_inv,
    mono_mul,
    mu,
    sigma,
    tau,
)
from .pbw import SuperLetter, height, leading_term, u_bracket
from .phi import (
    closed_form_full,
    dual_set,
    duality_constant,
    is_black_regular,
    is_black_regular_by_scheme,
    is_regular,
    is_white_regular,
    is_white_regular_by_scheme,
    phi,
    theta_by_sigma,
    theta_closed_form,
    theta_of_uskm,
    theta_single_bracket,
    indecomposable_by_columns,
    indecomposable_pairs,
)
from .shuffle import (
    ShuffleElement,
    bracket_chain_left,
    bracket_chain_right,
    decorated_tensor,
    hopf_coproduct,
    monomial_ratio,
    partial_derivative,
    power,
    shuffle_product,
    skew_bracket,
)
from .words import interval_constitution, letter, psi, u_word, u_word_desc


@dataclass
class CheckResult:
    name: str
    checked: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def expect(self, cond: bool, detail: Callable[[], str] | str) -> None:
        self.checked += 1
        if not cond:
            self.failures.append(detail() if callable(detail) else detail)

    def line(self) -> str:
        verdict = "PASS" if self.ok else "FAIL"
        tail = "" if self.ok else f"; first counterexample: {self.failures[0]}"
        return f"{verdict} {self.name} ({self.checked} cases{tail})"

    def to_json(self) -> dict:
        return {"name": self.name, "ok": self.ok, "checked": self.checked,
                "failures": self.failures[:5]}


def _x(bc: Bicharacter, i: int) -> ShuffleElement:
    return ShuffleElement.letter(bc, i)


def _subsets(items: list[int]) -> Iterable[tuple[int, ...]]:
    for r in range(len(items) + 1):
        yield from combinations(items, r)


def _intervals(n: int) -> Iterable[tuple[int, int]]:
    for k in range(1, 2 * n + 1):
        for m in range(k, 2 * n + 1):
            yield k, m


# --- defining relations --------------------------------------------------------

def check_serre(bc: Bicharacter) -> CheckResult:
    """Defining relations and the derived triple-bracket relations vanish."""
    n = bc.n
    res = CheckResult(f"defining relations, n={n}")
    x = lambda i: _x(bc, i)
    br = skew_bracket
    for i in range(1, n):
        res.expect(br(x(i), br(x(i), x(i + 1))).is_zero(), f"[x{i},[x{i},x{i + 1}]]")
    for i in range(1, n + 1):
        for j in range(i + 2, n + 1):
            res.expect(br(x(i), x(j)).is_zero(), f"[x{i},x{j}]")
    for i in range(1, n - 1):
        res.expect(br(br(x(i), x(i + 1)), x(i + 1)).is_zero(), f"[[x{i},x{i + 1}],x{i + 1}]")
    if n >= 2:
        a, b = x(n - 1), x(n)
        res.expect(br(br(br(a, b), b), b).is_zero(), f"[[[x{n - 1},x{n}],x{n}],x{n}]")
    for k in range(2, n):
        for triple in ((k + 1, k, k - 1), (k - 1, k, k + 1)):
            a, b, c = (x(t) for t in triple)
            for inner in (br(br(a, b), c), br(a, br(b, c))):
                res.expect(br(inner, x(k)).is_zero(), f"[[x{triple}],x{k}]")
    return res


# --- coefficient tables -------------------------------------------------------

def check_coefficient_tables(bc: Bicharacter) -> CheckResult:
    n = bc.n
    res = CheckResult(f"sigma/mu tables, n={n}, params={','.join(bc.params)}")
    for k, m in _intervals(n):
        w = u_word(n, k, m)
        brute = bc.scalar(bc.p_letters(w, w))
        res.expect(sigma(bc, k, m) == brute, f"sigma({k},{m})")
        for i in range(k, m):
            a, b = u_word(n, k, i), u_word(n, i + 1, m)
            brute = bc.scalar(mono_mul(bc.p_letters(a, b), bc.p_letters(b, a)))
            res.expect(mu(bc, k, m, i) == brute, f"mu({k},{m},{i})")
            quot = sigma(bc, k, m) * (sigma(bc, k, i) * sigma(bc, i + 1, m)).inverse()
            res.expect(mu(bc, k, m, i) == quot, f"mu quotient ({k},{m},{i})")
    return res


# --- shuffle values and the coproduct -------------------------------------------

def check_shuffle_values(bc: Bicharacter) -> CheckResult:
    n = bc.n
    res = CheckResult(f"u[k,m] = alpha * u(m,k), n={n}")
    for k, m in _intervals(n):
        want = ShuffleElement.word(bc, u_word_desc(n, m, k), alpha_shuffle(bc, k, m))
        res.expect(u_bracket(bc, k, m) == want, f"u[{k},{m}]")
    return res


def expected_coproduct(bc: Bicharacter, k: int, m: int):
    """The three-part coproduct of u[k,m] as decorated tensor terms."""
    n = bc.n
    one = ShuffleElement.one(bc)
    zero = (0,) * n
    u = u_bracket(bc, k, m)
    triples = [(zero, u, one, bc.const(1)),
               (interval_constitution(n, k, m), one, u, bc.const(1))]
    lead = bc.const(1) - bc.qs(-2)
    for i in range(k, m):
        triples.append((interval_constitution(n, k, i), u_bracket(bc, i + 1, m),
                        u_bracket(bc, k, i), tau(bc, i) * lead))
    return decorated_tensor(bc, triples)


def check_coproduct(bc: Bicharacter) -> CheckResult:
    n = bc.n
    res = CheckResult(f"coproduct of u[k,m], n={n}")
    for k, m in _intervals(n):
        got = hopf_coproduct(u_bracket(bc, k, m))
        res.expect(got == expected_coproduct(bc, k, m), f"u[{k},{m}]")
    return res


# --- relation (56) and derivatives ------------------------------------------------

def check_relation_56(bc: Bicharacter) -> CheckResult:
    n = bc.n
    res = CheckResult(f"[u[k,m],[u[k,m],u[k+1,m]]] = 0, n={n}")
    for k in range(1, n + 1):
        for m in range(k + 1, psi(n, k)):
            u = u_bracket(bc, k, m)
            v = u_bracket(bc, k + 1, m)
            res.expect(skew_bracket(u, skew_bracket(u, v)).is_zero(), f"(k,m)=({k},{m})")
    return res


def check_derivatives(bc: Bicharacter) -> CheckResult:
    n = bc.n
    res = CheckResult(f"derivatives of u[k,m] and Phi^[k,m-1](k,m), n={n}")
    lead = bc.const(1) - bc.qs(-2)
    for k, m in _intervals(n):
        u = u_bracket(bc, k, m)
        full = phi(bc, range(k, m), k, m)
        for i in range(1, n + 1):
            d = partial_derivative(i, u)
            if i != letter(n, k):
                want = ShuffleElement.zero(bc)
            elif k == m:
                want = ShuffleElement.one(bc)
            else:
                want = u_bracket(bc, k + 1, m).scale(lead * tau(bc, k))
            res.expect(d == want, f"d_{i} u[{k},{m}]")
            d = partial_derivative(i, full)
            if i != letter(n, m):
                want = ShuffleElement.zero(bc)
            elif k == m:
                want = ShuffleElement.one(bc)
            else:
                want = phi(bc, range(k, m - 1), k, m - 1).scale(beta_km(bc, k, m))
            res.expect(d == want, f"d_{i} Phi^full({k},{m})")
    return res


def check_closed_form_full(bc: Bicharacter) -> CheckResult:
    n = bc.n
    res = CheckResult(f"Phi^[k,m-1](k,m) closed form, n={n}, t={bc.modulus}")
    for k, m in _intervals(n):
        res.expect(phi(bc, range(k, m), k, m) == closed_form_full(bc, k, m), f"(k,m)=({k},{m})")
    return res


# --- bracket identities for u[k,m] ---------------------------------------------------

def check_bracket_identities(bc: Bicharacter) -> CheckResult:
    """Vanishing and re-bracketing identities for the elements u[k,m]."""
    n = bc.n
    res = CheckResult(f"bracket identities for u[k,m], n={n}")
    u = lambda a, b: u_bracket(bc, a, b)
    x = lambda i: _x(bc, i)
    br = skew_bracket
    # separated elements commute
    for a in range(1, n + 1):
        for b in range(a + 2, n + 1):
            for c in range(b, n + 1):
                left, right = u(1, a) if a >= 1 else None, u(b, c)
                res.expect(br(left, right).is_zero() and br(right, left).is_zero(),
                           f"separated u[1,{a}], u[{b},{c}]")
    for k in range(1, n + 1):
        for t in range(1, n):
            if t in (k - 1, k):
                continue
            res.expect(br(u(k, n), x(t)).is_zero() and br(x(t), u(k, n)).is_zero(),
                       f"[u[{k},{n}],x{t}]")
    for m in range(n + 1, 2 * n + 1):
        for t in range(1, n):
            if t in (psi(n, m) - 1, psi(n, m)):
                continue
            res.expect(br(x(t), u(n + 1, m)).is_zero(), f"[x{t},u[{n + 1},{m}]]")
    for k in range(1, n + 1):
        for m in range(n + 1, 2 * n + 1):
            if m == psi(n, k):
                continue
            beta = -bc.scalar(bc.p_eval(interval_constitution(n, n + 1, m),
                                        interval_constitution(n, k, n))).inverse()
            whole = u(k, m)
            res.expect(br(u(k, n), u(n + 1, m)) == whole, f"[u[{k},{n}],u[{n + 1},{m}]]")
            res.expect(br(u(n + 1, m), u(k, n)).scale(beta) == whole,
                       f"beta[u[{n + 1},{m}],u[{k},{n}]]")
            for i in range(k, n):
                if i == psi(n, m) - 1:
                    continue
                res.expect(br(u(k, i), u(n + 1, m)).is_zero() and br(u(n + 1, m), u(k, i)).is_zero(),
                           f"[u[{k},{i}],u[{n + 1},{m}]]")
            for i in range(n + 1, m):
                if i == psi(n, k):
                    continue
                res.expect(br(u(k, n), u(i + 1, m)).is_zero(), f"[u[{k},{n}],u[{i + 1},{m}]]")
    for k, m in _intervals(n):
        if m == psi(n, k):
            continue
        for i in range(k, m):
            if i in (psi(n, m) - 1, psi(n, k)):
                continue
            res.expect(br(u(k, i), u(i + 1, m)) == u(k, m), f"[u[{k},{i}],u[{i + 1},{m}]]")
        for i in range(k, m):
            for j in range(i + 1, m):
                if m == psi(n, i) - 1 or j == psi(n, k):
                    continue
                res.expect(br(u(k, i), u(j + 1, m)).is_zero(), f"[u[{k},{i}],u[{j + 1},{m}]]")
                if i != psi(n, j) - 1:
                    res.expect(br(u(j + 1, m), u(k, i)).is_zero(), f"[u[{j + 1},{m}],u[{k},{i}]]")
    return res


# --- Phi identities ------------------------------------------------------------------

def _pieces(S: tuple[int, ...], k: int, m: int) -> list[tuple[int, int]]:
    pts = [k - 1] + sorted(S) + [m]
    return [(pts[i] + 1, pts[i + 1]) for i in range(len(pts) - 1)]


def _all_alignments(items: list[ShuffleElement]) -> list[ShuffleElement]:
    return [bracket_chain_left(items), bracket_chain_right(items)]


def _proportional(a: ShuffleElement, b: ShuffleElement) -> bool:
    return monomial_ratio(a, b) is not None


def _sets(n: int, k: int, m: int):
    return _subsets(list(range(k, m)))


def check_phi_identities(bc: Bicharacter) -> list[CheckResult]:
    n = bc.n
    add = CheckResult(f"adding a black point to Phi^S, n={n}")
    fac = CheckResult(f"Phi^S as a bracket of pieces (white S), n={n}")
    align = CheckResult(f"alignment independence of piece brackets (white S), n={n}")
    split = CheckResult(f"Phi^S split at s in S or n (white S), n={n}")
    white_t = CheckResult(f"Phi^S ~ [Phi^S(k,t),Phi^S(1+t,m)] for white S+t, n={n}")
    dual = CheckResult(f"Phi^S ~ Phi^T(psi(m),psi(k)) for regular S, n={n}")
    lead = CheckResult(f"leading term and nonvanishing of regular Phi^S, n={n}")
    black_t = CheckResult(f"Phi^S ~ [Phi^S(k,t),Phi^S(1+t,m)] for black S, n={n}")
    black_s = CheckResult(f"Phi^S ~ [Phi^S(1+s,m),Phi^S(k,s)] for black S-s, n={n}")
    minus = bc.const(-1)
    for k, m in _intervals(n):
        a_of = lambda t: interval_constitution(n, 1 + t, m)
        b_of = lambda t: interval_constitution(n, k, t)
        for S in _sets(n, k, m):
            Sset = set(S)
            P = phi(bc, S, k, m)
            for t in range(k, m):
                if t in Sset:
                    continue
                pab = bc.scalar(bc.p_eval(a_of(t), b_of(t)))
                rhs = shuffle_product(phi(bc, S, 1 + t, m), phi(bc, S, k, t))
                rhs = rhs.scale((bc.qs(-2) - bc.const(1)) * pab.inverse() * tau(bc, t))
                add.expect(phi(bc, Sset | {t}, k, m) - P == rhs, f"S={S},t={t},(k,m)=({k},{m})")
            if is_white_regular(n, S, k, m):
                pieces = _pieces(S, k, m)
                us = [u_bracket(bc, a, b) for a, b in pieces]
                degs = [interval_constitution(n, a, b) for a, b in pieces]
                coeff = bc.const(-1 if len(S) % 2 else 1)
                for i in range(len(us)):
                    for j in range(i):
                        coeff = coeff * bc.scalar(mono_inv(bc.p_eval(degs[i], degs[j])))
                rev = _all_alignments(us[::-1])
                fwd = _all_alignments(us)
                align.expect(rev[0] == rev[1] and fwd[0] == fwd[1], f"S={S},(k,m)=({k},{m})")
                align.expect(fwd[0] == u_bracket(bc, k, m), f"forward S={S},(k,m)=({k},{m})")
                fac.expect(P == rev[0].scale(coeff), f"S={S},(k,m)=({k},{m})")
                for s in sorted((Sset | {n}) & set(range(k, m))):
                    pab = bc.scalar(bc.p_eval(a_of(s), b_of(s)))
                    rhs = skew_bracket(phi(bc, S, 1 + s, m), phi(bc, S, k, s))
                    split.expect(P == rhs.scale(minus * pab.inverse()), f"S={S},s={s},(k,m)=({k},{m})")
            for t in range(k, m):
                if t not in Sset and is_white_regular(n, Sset | {t}, k, m):
                    rhs = skew_bracket(phi(bc, S, k, t), phi(bc, S, 1 + t, m))
                    white_t.expect(_proportional(P, rhs), f"S={S},t={t},(k,m)=({k},{m})")
            if is_regular(n, S, k, m):
                lead.expect(not P.is_zero(), f"zero: S={S},(k,m)=({k},{m})")
                if k <= n < m:
                    T, k2, m2 = dual_set(n, S, k, m)
                    dual.expect(_proportional(P, phi(bc, T, k2, m2)), f"S={S},(k,m)=({k},{m})")
                if m > psi(n, k):
                    mono, _ = leading_term(P)
                    want = ((SuperLetter(psi(n, m), psi(n, k)), 1),)
                    lead.expect(mono == want, f"leading term S={S},(k,m)=({k},{m})")
            if is_black_regular(n, S, k, m):
                for t in range(k, m):
                    if t in Sset and t != n:
                        continue
                    rhs = skew_bracket(phi(bc, S, k, t), phi(bc, S, 1 + t, m))
                    black_t.expect(_proportional(P, rhs), f"S={S},t={t},(k,m)=({k},{m})")
            for s in S:
                if is_black_regular(n, Sset - {s}, k, m):
                    rhs = skew_bracket(phi(bc, S, 1 + s, m), phi(bc, S, k, s))
                    black_s.expect(_proportional(P, rhs), f"S={S},s={s},(k,m)=({k},{m})")
    return [add, fac, align, split, white_t, dual, lead, black_t, black_s]


# --- regularity, duality, schemes --------------------------------------------------

def check_regularity(n: int) -> CheckResult:
    res = CheckResult(f"regularity: definition vs shifted scheme vs duality, n={n}")
    for k, m in _intervals(n):
        for S in _sets(n, k, m):
            w, b = is_white_regular(n, S, k, m), is_black_regular(n, S, k, m)
            res.expect(w == is_white_regular_by_scheme(n, S, k, m), f"white S={S},({k},{m})")
            res.expect(b == is_black_regular_by_scheme(n, S, k, m), f"black S={S},({k},{m})")
            if m <= n or k > n:
                res.expect(w and b, f"trivial range S={S},({k},{m})")
            if m == psi(n, k):
                res.expect(not w and not b, f"m=psi(k) S={S},({k},{m})")
            if k <= n < m:
                T, k2, m2 = dual_set(n, S, k, m)
                res.expect(w == is_black_regular(n, T, k2, m2), f"white/black dual S={S},({k},{m})")
                res.expect(b == is_white_regular(n, T, k2, m2), f"black/white dual S={S},({k},{m})")
    return res


def check_duality(bc: Bicharacter) -> CheckResult:
    n = bc.n
    res = CheckResult(f"duality with exact constant, n={n}")
    for k, m in _intervals(n):
        if not k <= n < m:
            continue
        for S in _sets(n, k, m):
            if not is_black_regular(n, S, k, m):
                continue
            T, k2, m2 = dual_set(n, S, k, m)
            lhs = phi(bc, S, k, m)
            rhs = phi(bc, T, k2, m2).scale(duality_constant(bc, S, k, m))
            res.expect(lhs == rhs, f"S={S},(k,m)=({k},{m})")
    return res


def check_extraction(bc: Bicharacter) -> CheckResult:
    from .phi import extract_phi
    n = bc.n
    res = CheckResult(f"extraction recovers regular S, n={n}")
    for k in range(1, n + 1):
        for m in range(k, psi(n, k)):
            for S in _sets(n, k, m):
                if not is_regular(n, S, k, m):
                    continue
                got, val = extract_phi(phi(bc, S, k, m), k, m)
                res.expect(got == S and val == phi(bc, S, k, m), f"S={S},(k,m)=({k},{m}) got {got}")
    return res


# --- root sequences of U^S(k,m) -------------------------------------------------------

def check_single_bracket_theta(n: int) -> CheckResult:
    res = CheckResult(f"root sequence of U(k,m) by formula vs monoid search, n={n}")
    for k in range(1, 2 * n + 1):
        for m in range(k, 2 * n + 1):
            if m > psi(n, k):
                continue
            a, b = theta_single_bracket(n, k, m), theta_by_sigma(n, (), k, m)
            c = theta_of_uskm(n, (), k, m)
            res.expect(a == b == c, f"(k,m)=({k},{m}): formula {a}, search {b}, computed {c}")
    return res


def check_theta_closed_forms(n: int) -> CheckResult:
    res = CheckResult(f"scheme formulas for theta vs monoid search, n={n}")
    for k, m in _intervals(n):
        for S in _sets(n, k, m):
            if not is_regular(n, S, k, m):
                continue
            a, b = theta_closed_form(n, S, k, m), theta_by_sigma(n, S, k, m)
            res.expect(a == b, f"S={S},(k,m)=({k},{m}): formula {a}, search {b}")
            c, d = indecomposable_by_columns(n, S, k, m), indecomposable_pairs(n, S, k, m)
            res.expect(sorted(c) == sorted(d), f"indecomposables S={S},(k,m)=({k},{m})")
    return res


# --- root of unity ----------------------------------------------------------------------

POWER_DEGREE_CAP = 15


def check_cyclotomic(t: int = 5, n: int = 2) -> list[CheckResult]:
    """Heights and vanishing powers; powers above POWER_DEGREE_CAP are skipped."""
    bc = default_bicharacter(n, modulus=t)
    hres = CheckResult(f"heights at t={t}, n={n}")
    pres = CheckResult(f"u[k,m]^h = 0 at t={t}, n={n}")
    skipped = []
    for k in range(1, n + 1):
        for m in range(k, psi(n, k)):
            h = height(bc, k, m)
            want = t if (m == n or t % 2) else t // 2
            hres.expect(h == want, f"height u[{k},{m}] = {h}")
            if h * (m - k + 1) > POWER_DEGREE_CAP:
                skipped.append(f"u[{k},{m}]")
                continue
            u = u_bracket(bc, k, m)
            pres.expect(power(u, h).is_zero(), f"u[{k},{m}]^{h}")
            pres.expect(not power(u, h - 1).is_zero(), f"u[{k},{m}]^{h - 1} vanished")
    if skipped:
        pres.name += f"; skipped above degree {POWER_DEGREE_CAP}: {' '.join(skipped)}"
    lres = CheckResult(f"derivative of a power at t={t}, n={n}")
    u = u_bracket(bc, 1, 2)
    for i in range(1, n + 1):
        lhs = partial_derivative(i, power(u, t))
        inner = partial_derivative(i, u)
        for _ in range(t - 1):
            inner = skew_bracket(u, inner)
        coeff = bc.scalar(bc.p_eval(u.degree, bc.constitution((i,)))) ** (t - 1)
        lres.expect(lhs == inner.scale(coeff), f"i={i}")
    return [hres, pres, lres]


# --- classification -----------------------------------------------------------------------

# Hasse diagram for rank two: each theta with the thetas directly above it.
LATTICE_N2 = {
    "0,0": ["0,1", "1,0"],
    "0,1": ["3,1"],
    "1,0": ["2,0"],
    "2,0": ["3,0"],
    "3,0": ["1,1"],
    "3,1": ["2,1"],
    "2,1": ["1,1"],
    "1,1": [],
}

RANK_TWO_THETAS = [(3, 1), (3, 0), (2, 1), (2, 0), (1, 0), (0, 1), (1, 1), (0, 0)]


def check_classification_goldens() -> CheckResult:
    from .classifier import all_thetas, build_rt, root_sequence_of
    res = CheckResult("classification goldens")
    for n in (1, 2, 3):
        theta = tuple(1 if k == n else 0 for k in range(1, n + 1))
        rt = build_rt(n, theta)
        res.expect(rt.T[n] == frozenset({n, n + 1}), f"T_{n} for theta_{n}=1 is {sorted(rt.T[n])}")
    rt = build_rt(3, (5, 1, 0))
    res.expect(sorted(rt.R[1]) == [1, 3, 5], f"R_1 = {sorted(rt.R[1])}")
    res.expect(sorted(rt.T[1]) == [1, 2, 3, 5, 6], f"T_1 = {sorted(rt.T[1])}")
    res.expect(sorted(rt.R[2]) == [2] and sorted(rt.T[2]) == [2], f"R_2, T_2 = {sorted(rt.R[2])}, {sorted(rt.T[2])}")
    bc3 = default_bicharacter(3)
    res.expect(phi(bc3, (2,), 2, 6) == phi(bc3, (1, 2, 3), 1, 5).scale(bc3.qs(1)),
               "Phi^{2}(2,6) = q Phi^{1,2,3}(1,5)")
    res.expect(theta_of_uskm(3, (1, 2, 3), 1, 5) == (5, 1, 0), "theta of U^{1,2,3}(1,5)")
    x = lambda i: _x(bc3, i)
    w = skew_bracket(skew_bracket(x(3), skew_bracket(x(3), skew_bracket(x(2), x(1)))), x(2))
    res.expect(root_sequence_of([w]) == (5, 1, 0), "root sequence of the rank-three example")
    bc2 = default_bicharacter(2)
    x1, x2 = _x(bc2, 1), _x(bc2, 2)
    samples = {
        (3, 1): skew_bracket(skew_bracket(x1, x2), x2),
        (3, 0): skew_bracket(x2, skew_bracket(x2, x1)),
        (2, 1): skew_bracket(x1, x2),
        (2, 0): skew_bracket(x2, x1),
        (1, 0): x1,
        (0, 1): x2,
    }
    for theta, gen in samples.items():
        got = root_sequence_of([gen])
        res.expect(got == theta, f"root sequence {got}, expected {theta}")
    res.expect(root_sequence_of([x1, x2]) == (1, 1), "full algebra")
    res.expect(root_sequence_of([], n=2) == (0, 0), "group algebra")
    res.expect(sorted(all_thetas(2)) == sorted(RANK_TWO_THETAS), "rank-two theta list")
    return res


def check_enumeration(n: int) -> CheckResult:
    from .classifier import enumerate_subalgebras, generators, root_sequence_of
    res = CheckResult(f"enumeration and round trip, n={n}")
    descs = enumerate_subalgebras(n)
    want = 1
    for i in range(1, n + 1):
        want *= 2 * i
    res.expect(len(descs) == want, f"{len(descs)} subalgebras, expected {want}")
    keys = {frozenset(d.simple_roots) for d in descs}
    res.expect(len(keys) == len(descs), "simple-root sets repeat")
    bc = default_bicharacter(n)
    for d in descs:
        got = root_sequence_of(generators(bc, d.theta), n=n)
        res.expect(got == d.theta, f"theta {d.theta} came back as {got}")
    return res


def check_lattice(bc: Bicharacter, degree_bound: int = 8) -> CheckResult:
    from .classifier import lattice, lattice_json
    res = CheckResult(f"Hasse diagram, n={bc.n}")
    got = lattice_json(lattice(bc, degree_bound))
    res.expect(got == LATTICE_N2, f"got {got}")
    return res


def check_claims_all(n: int) -> list[CheckResult]:
    from .classifier import all_thetas, build_rt, check_claims, check_root_claims
    out: dict[str, CheckResult] = {}
    for theta in all_thetas(n):
        rt = build_rt(n, theta)
        for rep in check_claims(rt) + check_root_claims(rt):
            res = out.setdefault(rep.name, CheckResult(f"{rep.name}, n={n}"))
            res.checked += rep.checked
            res.failures.extend(str(f) for f in rep.failures)
    return list(out.values())


def check_classification(bc: Bicharacter, degree_bound: int = 8) -> list[CheckResult]:
    n = bc.n
    out = [check_classification_goldens(), check_enumeration(n), *check_claims_all(n)]
    if n == 2:
        out.append(check_lattice(bc, degree_bound))
    return out


# --- suites -------------------------------------------------------------------------------

SUITES = ("identities", "coproduct", "duality", "serre", "classification", "cyclotomic")


def run_suite(name: str, bc: Bicharacter, degree_bound: int = 8) -> list[CheckResult]:
    n = bc.n
    if name == "serre":
        return [check_serre(bc)]
    if name == "coproduct":
        return [check_coproduct(bc), check_shuffle_values(bc)]
    if name == "identities":
        return [check_coefficient_tables(bc), check_shuffle_values(bc), check_relation_56(bc),
                check_derivatives(bc), check_closed_form_full(bc), check_bracket_identities(bc),
                *check_phi_identities(bc)]
    if name == "duality":
        return [check_regularity(n), check_duality(bc), check_single_bracket_theta(n),
                check_theta_closed_forms(n)]
    if name == "classification":
        return check_classification(bc, degree_bound)
    if name == "cyclotomic":
        t = bc.modulus or 5
        out = check_cyclotomic(t, n)
        out.append(check_closed_form_full(default_bicharacter(n, modulus=t)))
        return out
    raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")

"""Root sequences, the R_k / T_k construction, generators, roots and the lattice."""
from __future__ import annotations

import os
import threading
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from typing import Iterable, Sequence

import networkx as nx

from .coefficients import Bicharacter
from .linalg import rank_of, scalar_field
from .phi import (
    _member,
    is_black_regular,
    is_regular,
    is_white_regular,
    phi,
)
from .shuffle import ShuffleElement, braided_coproduct, shuffle_product
from .words import Constitution, RootInterval, constitution, decompose_interval, interval_constitution, psi


def thread_count() -> int:
    try:
        return max(1, int(os.environ.get("COIDEAL_LAB_THREADS", "1")))
    except ValueError:
        return 1


def parallel_map(fn, items: Sequence) -> list:
    workers = min(thread_count(), max(1, len(items)))
    if workers == 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


# --- root sequences ---------------------------------------------------------

def validate_theta(n: int, theta: Sequence[int]) -> tuple[int, ...]:
    theta = tuple(int(x) for x in theta)
    if len(theta) != n:
        raise ValueError(f"root sequence must have {n} entries, got {len(theta)}")
    for k, t in enumerate(theta, start=1):
        if not 0 <= t <= 2 * n - 2 * k + 1:
            raise ValueError(f"theta_{k}={t} outside 0..{2 * n - 2 * k + 1}")
    return theta


def all_thetas(n: int) -> list[tuple[int, ...]]:
    """Every admissible root sequence, in lexicographic order."""
    return [tuple(t) for t in product(*(range(2 * n - 2 * k + 2) for k in range(1, n + 1)))]


@dataclass(frozen=True)
class RTSets:
    n: int
    theta: tuple[int, ...]
    R: dict[int, frozenset[int]]
    T_prime: dict[int, frozenset[int]]
    T: dict[int, frozenset[int]]

    def P(self, i: int, j: int) -> bool:
        """j in T_i or psi(i) in T_psi(j), for i <= j."""
        n = self.n
        return j in self.T.get(i, ()) or psi(n, i) in self.T.get(psi(n, j), ())

    def theta_tilde(self, k: int) -> int:
        return k + self.theta[k - 1] - 1

    def p_table(self) -> dict[tuple[int, int], bool]:
        N = 2 * self.n
        return {(i, j): self.P(i, j) for i in range(1, N + 1) for j in range(i, N + 1)}

    def to_json(self) -> dict:
        keys = range(1, self.n + 1)
        return {
            "theta": list(self.theta),
            "R": {str(k): sorted(self.R[k]) for k in keys},
            "T": {str(k): sorted(self.T[k]) for k in keys},
        }


def build_rt(n: int, theta: Sequence[int]) -> RTSets:
    """Downward induction on k; P only consults sets already built."""
    theta = validate_theta(n, theta)
    R: dict[int, frozenset[int]] = {}
    Tp: dict[int, frozenset[int]] = {}
    T: dict[int, frozenset[int]] = {}
    for k in range(2 * n, n, -1):
        R[k] = Tp[k] = T[k] = frozenset()
    partial = RTSets(n, theta, R, Tp, T)
    P = partial.P
    for k in range(n, 0, -1):
        if theta[k - 1] == 0:
            R[k] = Tp[k] = T[k] = frozenset()
            continue
        top = k + theta[k - 1] - 1
        r = {top}
        for m in range(k, top):
            if P(m + 1, top):
                continue
            if all(P(s + 1, m) == P(s + 1, top) for s in range(k, m)):
                r.add(m)
        tp = set(r)
        for s in r:
            tp.update(a for a in range(s + 1, psi(n, k)) if P(s + 1, a))
        t = set(tp)
        if any(psi(n, s + 1) in tp for s in r):
            t.add(psi(n, k))
        R[k], Tp[k], T[k] = frozenset(r), frozenset(tp), frozenset(t)
    return RTSets(n, theta, R, Tp, T)


# --- generators, roots ------------------------------------------------------

GeneratorSpec = tuple[frozenset[int], int, int]


def generator_specs(rt: RTSets) -> list[GeneratorSpec]:
    """(T_k, k, m) for m in R_k, each checked regular."""
    out = []
    for k in range(1, rt.n + 1):
        for m in sorted(rt.R[k]):
            if not is_regular(rt.n, rt.T[k], k, m):
                raise ArithmeticError(f"T_{k} is not ({k},{m})-regular")
            out.append((rt.T[k], k, m))
    return out


def generators(bc: Bicharacter, theta: Sequence[int]) -> list[ShuffleElement]:
    rt = build_rt(bc.n, theta)
    return [phi(bc, S, k, m) for S, k, m in generator_specs(rt)]


def normalized_generators(bc: Bicharacter, theta: Sequence[int]) -> list[tuple[Constitution, ShuffleElement]]:
    """Each generator paired with the inverse group part g_{km}^-1."""
    rt = build_rt(bc.n, theta)
    out = []
    for S, k, m in generator_specs(rt):
        g = tuple(-c for c in interval_constitution(bc.n, k, m))
        out.append((g, phi(bc, S, k, m)))
    return out


def roots(rt: RTSets) -> set[RootInterval]:
    return {RootInterval(rt.n, k, m) for k in range(1, rt.n + 1) for m in rt.T_prime[k]}


def simple_roots(rt: RTSets) -> set[RootInterval]:
    return {RootInterval(rt.n, k, m) for k in range(1, rt.n + 1) for m in rt.R[k]}


def indecomposable_roots(n: int, rts: Iterable[RootInterval]) -> set[RootInterval]:
    """Roots that are not a sum of two or more roots."""
    rts = sorted(set(rts))
    gens = tuple(sorted({r.constitution for r in rts}))
    out = set()
    for r in rts:
        d = r.constitution
        split = False
        for g in gens:
            rest = tuple(a - b for a, b in zip(d, g))
            if min(rest) >= 0 and any(rest) and _member(gens, rest):
                split = True
                break
        if not split:
            out.add(r)
    return out


@lru_cache(maxsize=None)
def _interval_by_degree(n: int) -> dict[Constitution, RootInterval]:
    out = {}
    for k in range(1, n + 1):
        for m in range(k, psi(n, k)):
            out[interval_constitution(n, k, m)] = RootInterval(n, k, m)
    return out


def theta_from_roots(n: int, simple: Iterable[RootInterval]) -> tuple[int, ...]:
    theta = [0] * n
    for r in simple:
        theta[r.k - 1] = max(theta[r.k - 1], r.m - r.k + 1)
    return tuple(theta)


def root_sequence_of(gens: Sequence[ShuffleElement], n: int | None = None) -> tuple[int, ...]:
    """r(U) of the right coideal subalgebra generated by gens and the group.

    The subalgebra is generated by the left legs of the coproducts of gens;
    the simple roots are the indecomposables of the monoid of their degrees.
    """
    if not gens:
        if n is None:
            raise ValueError("rank is needed for an empty generator list")
        return (0,) * n
    n = gens[0].bc.n
    degs = set()
    for a in gens:
        for (left, _), _c in braided_coproduct(a).items():
            if left:
                degs.add(constitution(n, left))
    gens_key = tuple(sorted(degs))
    by_degree = _interval_by_degree(n)
    simple = set()
    for d in gens_key:
        split = any(
            min(rest) >= 0 and any(rest) and _member(gens_key, rest)
            for g in gens_key
            for rest in [tuple(a - b for a, b in zip(d, g))]
        )
        if split:
            continue
        if d not in by_degree:
            raise ArithmeticError(f"indecomposable degree {d} is not a root")
        simple.add(by_degree[d])
    return theta_from_roots(n, simple)


# --- descriptors -------------------------------------------------------------

@dataclass
class SubalgebraDescriptor:
    theta: tuple[int, ...]
    rt: RTSets
    generators: list[GeneratorSpec]
    roots: set[RootInterval]
    simple_roots: set[RootInterval]

    def to_json(self) -> dict:
        out = self.rt.to_json()
        out["generators"] = [{"S": sorted(S), "k": k, "m": m} for S, k, m in self.generators]
        out["roots"] = [str(r) for r in sorted(self.roots)]
        out["simple_roots"] = [str(r) for r in sorted(self.simple_roots)]
        return out


def describe(n: int, theta: Sequence[int]) -> SubalgebraDescriptor:
    rt = build_rt(n, theta)
    return SubalgebraDescriptor(rt.theta, rt, generator_specs(rt), roots(rt), simple_roots(rt))


def enumerate_subalgebras(n: int) -> list[SubalgebraDescriptor]:
    if n < 1:
        raise ValueError("n must be positive")
    return parallel_map(lambda th: describe(n, th), all_thetas(n))


# --- span membership and the lattice ------------------------------------------

class SpanOracle:
    """Exact membership in the homogeneous components of U_theta."""

    def __init__(self, bc: Bicharacter, degree_bound: int = 8):
        if degree_bound < 1:
            raise ValueError("degree bound must be at least 1")
        self.bc = bc
        self.degree_bound = degree_bound
        self._lock = threading.Lock()
        self._spans: dict[tuple, list[ShuffleElement]] = {}

    def span(self, theta: Sequence[int], d: Constitution) -> list[ShuffleElement]:
        """Products of generators (any order, repetition allowed) of degree d."""
        d = tuple(d)
        if sum(d) > self.degree_bound:
            raise ValueError(f"degree {d} exceeds the bound {self.degree_bound}")
        key = (tuple(theta), d)
        hit = self._spans.get(key)
        if hit is not None:
            return hit
        gens = [g for g in generators(self.bc, theta)]
        out: list[ShuffleElement] = []

        def rec(rest: Constitution, acc: ShuffleElement):
            if not any(rest):
                out.append(acc)
                return
            for g in gens:
                left = tuple(a - b for a, b in zip(rest, g.degree))
                if min(left) >= 0:
                    rec(left, shuffle_product(acc, g))

        if gens:
            rec(d, ShuffleElement.one(self.bc))
        out = [e for e in out if not e.is_zero()]
        with self._lock:
            self._spans[key] = out
        return out

    def contains(self, theta: Sequence[int], a: ShuffleElement) -> bool:
        if a.is_zero():
            return True
        d = a.degree
        if d is None:
            raise ValueError("membership needs a homogeneous element")
        basis = self.span(theta, d)
        if not basis:
            return False
        field = scalar_field(self.bc)
        return rank_of(field, basis + [a]) == rank_of(field, basis)

    def includes(self, small: Sequence[int], big: Sequence[int]) -> bool:
        return all(self.contains(big, g) for g in generators(self.bc, small))


def lattice(bc: Bicharacter, degree_bound: int = 8) -> nx.DiGraph:
    """Hasse diagram of U_theta under inclusion (edges point upward)."""
    oracle = SpanOracle(bc, degree_bound)
    thetas = all_thetas(bc.n)
    pairs = [(a, b) for a in thetas for b in thetas if a != b]
    flags = parallel_map(lambda ab: oracle.includes(*ab), pairs)
    g = nx.DiGraph()
    g.add_nodes_from(thetas)
    g.add_edges_from(ab for ab, ok in zip(pairs, flags) if ok)
    if not nx.is_directed_acyclic_graph(g):
        raise ArithmeticError("inclusion is not antisymmetric: two thetas give one subalgebra")
    return nx.transitive_reduction(g)


def lattice_json(graph: nx.DiGraph) -> dict:
    nodes = sorted(graph.nodes)
    key = lambda th: ",".join(map(str, th))
    return {key(a): sorted(key(b) for b in graph.successors(a)) for a in nodes}


# --- consistency of the construction ------------------------------------------

@dataclass
class ClaimReport:
    name: str
    checked: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def chain_exists(rt: RTSets, k: int, m: int) -> bool:
    """A chain k-1 = k_0 < ... < k_{r+1} = m with every step in some R."""
    n = rt.n

    def step(a: int, b: int) -> bool:
        # a = k_i, b = k_{i+1}
        return b in rt.R.get(1 + a, ()) or psi(n, 1 + a) in rt.R.get(psi(n, b), ())

    reach = {k - 1}
    for pos in range(k - 1, m):
        if pos in reach:
            for b in range(pos + 1, m + 1):
                if step(pos, b):
                    reach.add(b)
    return m in reach


def check_claims(rt: RTSets) -> list[ClaimReport]:
    n = rt.n
    N = 2 * n
    P = rt.P
    c1, c2, c3, c4, c5 = (ClaimReport(name) for name in (
        "P(k,m) iff a chain exists",
        "P closed under concatenation",
        "P(k,m) covers every split point",
        "T_k membership below the top index",
        "T_k regular for every m in R_k",
    ))
    for k in range(1, N + 1):
        for m in range(k, N + 1):
            c1.checked += 1
            if P(k, m) != chain_exists(rt, k, m):
                c1.failures.append((rt.theta, k, m))
            for s in range(k, m):
                c2.checked += 1
                if P(k, s) and P(s + 1, m) and not P(k, m):
                    c2.failures.append((rt.theta, k, s, m))
                c3.checked += 1
                if P(k, m) and not (P(k, s) or P(s + 1, m)):
                    c3.failures.append((rt.theta, k, s, m))
    for k in range(1, n + 1):
        if rt.theta[k - 1] == 0:
            continue
        top = rt.theta_tilde(k)
        for m in range(k, top):
            c4.checked += 1
            if (m in rt.T[k]) != (not P(m + 1, top)):
                c4.failures.append((rt.theta, k, m))
        for m in rt.R[k]:
            c5.checked += 1
            if not (is_white_regular(n, rt.T[k], k, m) or is_black_regular(n, rt.T[k], k, m)):
                c5.failures.append((rt.theta, k, m))
    return [c1, c2, c3, c4, c5]


def check_root_claims(rt: RTSets) -> list[ClaimReport]:
    """P versus roots, simple versus indecomposable roots, and how simple roots split."""
    n = rt.n
    c6 = ClaimReport("P(k,m) iff [k:m] is a root")
    c7 = ClaimReport("simple roots are the indecomposable roots")
    c8 = ClaimReport("simple root splits")
    rts = roots(rt)
    for a in range(1, n + 1):
        for b in range(a, psi(n, a)):
            c6.checked += 1
            if rt.P(a, b) != (RootInterval(n, a, b) in rts):
                c6.failures.append((rt.theta, a, b))
    simple = simple_roots(rt)
    c7.checked += 1
    if simple != indecomposable_roots(n, rts):
        c7.failures.append((rt.theta, sorted(map(str, simple))))
    gens = tuple(sorted({r.constitution for r in rts}))
    for r in simple:
        for j in range(r.k, r.m):
            c8.checked += 1
            left = RootInterval.make(n, r.k, j) in rts
            rest = interval_constitution(n, j + 1, r.m)
            if left == _member(gens, rest):
                c8.failures.append((rt.theta, str(r), j))
    for r in rts - simple:
        # every non-simple root splits into consecutive simple pieces
        c8.checked += 1
        parts = _split_into(n, r, simple)
        if parts is None:
            c8.failures.append((rt.theta, str(r), "no decomposition"))
    return [c6, c7, c8]


def _split_into(n: int, r: RootInterval, simple: set[RootInterval]):
    """Find a multiset of simple roots that decompose_interval can chain into r."""
    target = r.constitution
    items = sorted(simple)

    def rec(rest, start, acc):
        if not any(rest):
            return list(acc)
        for idx in range(start, len(items)):
            c = items[idx].constitution
            left = tuple(a - b for a, b in zip(rest, c))
            if min(left) >= 0:
                acc.append(items[idx])
                got = rec(left, idx, acc)
                if got is not None and len(got) > 1:
                    chain = decompose_interval(n, (r.k, r.m), [(p.k, p.m) for p in got])
                    if chain is not None:
                        return got
                acc.pop()
        return None

    return rec(target, 0, [])

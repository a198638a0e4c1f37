"""Super-letters u[k,m], PBW bases of homogeneous components, projections."""
from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from functools import lru_cache

from .coefficients import Bicharacter, LaurentScalar
from .linalg import ScalarField, column_matrix, scalar_field
from .shuffle import ShuffleElement, shuffle_product, skew_bracket
from .words import Constitution, Word, interval_constitution, psi, u_word, word_key

INFINITY = math.inf


@dataclass(frozen=True, order=True)
class SuperLetter:
    k: int
    m: int

    def __str__(self) -> str:
        return f"u[{self.k},{self.m}]"


Monomial = tuple[tuple[SuperLetter, int], ...]


def render_monomial(mono: Monomial) -> str:
    if not mono:
        return "1"
    return "*".join(str(s) if e == 1 else f"{s}^{e}" for s, e in mono)


def monomial_json(mono: Monomial) -> list:
    return [[str(s), e] for s, e in mono]


# --- super-letters ----------------------------------------------------------

_bracket_lock = threading.Lock()
_bracket_cache: dict[tuple[Bicharacter, int, int], ShuffleElement] = {}


def u_bracket(bc: Bicharacter, k: int, m: int) -> ShuffleElement:
    """The bracketing u[k,m], evaluated in the shuffle algebra."""
    n = bc.n
    if not 1 <= k <= m <= 2 * n:
        raise ValueError(f"need 1 <= k <= m <= {2 * n}")
    key = (bc, k, m)
    hit = _bracket_cache.get(key)
    if hit is not None:
        return hit
    x = [None] + [ShuffleElement.letter(bc, i) for i in range(1, 2 * n + 1)]
    if k == m:
        out = x[k]
    elif m < psi(n, k):
        out = skew_bracket(u_bracket(bc, k, m - 1), x[m])
    elif m > psi(n, k):
        out = skew_bracket(x[k], u_bracket(bc, k + 1, m))
    else:
        a, b = u_bracket(bc, n + 1, m), u_bracket(bc, k, n)
        beta = -bc.scalar(bc.p_eval(a.degree, b.degree)).inverse()
        out = skew_bracket(a, b).scale(beta)
    with _bracket_lock:
        _bracket_cache[key] = out
    return out


def super_letters(n: int) -> list[SuperLetter]:
    """All u[k,m] with k <= m < psi(k), in increasing order."""
    out = [SuperLetter(k, m) for k in range(1, n + 1) for m in range(k, psi(n, k))]
    return sorted(out, key=lambda s: word_key(u_word(n, s.k, s.m)))


def height(bc: Bicharacter, k: int, m: int) -> float | int:
    n = bc.n
    if not 1 <= k <= m < psi(n, k):
        raise ValueError(f"u[{k},{m}] is not a PBW generator")
    t = bc.modulus
    if t is None:
        return INFINITY
    if m == n or t % 2:
        return t
    return t // 2


# --- PBW basis of a component ----------------------------------------------

def pbw_monomials(bc: Bicharacter, d: Constitution) -> list[Monomial]:
    """Monomials u_1^e_1 ... u_r^e_r (u_1 < ... < u_r) of degree d."""
    n = bc.n
    d = tuple(d)
    letters = super_letters(n)
    degs = [interval_constitution(n, s.k, s.m) for s in letters]
    out: list[Monomial] = []

    def rec(idx: int, rest: tuple[int, ...], acc: list):
        if not any(rest):
            out.append(tuple(acc))
            return
        if idx == len(letters):
            return
        s, dg = letters[idx], degs[idx]
        h = height(bc, s.k, s.m)
        e = 0
        cur = rest
        rec(idx + 1, cur, acc)
        while True:
            e += 1
            if e >= h:
                break
            cur = tuple(a - b for a, b in zip(cur, dg))
            if min(cur) < 0:
                break
            acc.append((s, e))
            rec(idx + 1, cur, acc)
            acc.pop()

    rec(0, d, [])
    return sorted(out, key=lambda mono: _monomial_key(mono, n))


@lru_cache(maxsize=None)
def _letter_rank(n: int) -> dict[SuperLetter, int]:
    return {s: i for i, s in enumerate(super_letters(n))}


def _monomial_key(mono: Monomial, n: int):
    # super-words compared lexicographically in the super-letter order
    rank = _letter_rank(n)
    seq = []
    for s, e in mono:
        seq.extend([rank[s]] * e)
    return tuple(seq)


def evaluate_monomial(bc: Bicharacter, mono: Monomial) -> ShuffleElement:
    out = ShuffleElement.one(bc)
    for s, e in mono:
        u = u_bracket(bc, s.k, s.m)
        for _ in range(e):
            out = shuffle_product(out, u)
    return out


class ComponentBasis:
    """PBW basis of one homogeneous component with a pivot-word inverse."""

    def __init__(self, bc: Bicharacter, d: Constitution):
        self.bc = bc
        self.degree = tuple(d)
        self.field: ScalarField = scalar_field(bc)
        self.monomials = pbw_monomials(bc, d)
        self.values = [evaluate_monomial(bc, mono) for mono in self.monomials]
        self.index = {mono: i for i, mono in enumerate(self.monomials)}
        words = sorted({w for v in self.values for w in v.terms}, key=word_key)
        self.words = words
        dim = len(self.monomials)
        if dim == 0:
            self.pivots: list[Word] = []
            self.inverse = None
            return
        full = column_matrix(self.field, words, self.values)
        _, pivot_rows = full.transpose().rref()
        if len(pivot_rows) != dim:
            raise ArithmeticError(f"PBW monomials of degree {d} are linearly dependent")
        self.pivots = [words[i] for i in pivot_rows]
        square = column_matrix(self.field, self.pivots, self.values)
        self.inverse = square.inv()
        self._inv_rows = self.inverse.to_list()

    @property
    def dimension(self) -> int:
        return len(self.monomials)

    def coordinates(self, a: ShuffleElement, verify: bool = True) -> list:
        """Field coordinates of a in this basis."""
        K = self.field.K
        dim = self.dimension
        if dim == 0:
            if verify and not a.is_zero():
                raise ArithmeticError("nonzero element in an empty component")
            return []
        vec = [self.field.to_field(a.terms[w]) if w in a.terms else K.zero for w in self.pivots]
        coords = []
        for i in range(dim):
            s = K.zero
            row = self._inv_rows[i]
            for j in range(dim):
                if vec[j] and row[j]:
                    s = s + row[j] * vec[j]
            coords.append(s)
        if verify:
            self._verify(a, coords)
        return coords

    def _verify(self, a: ShuffleElement, coords) -> None:
        K = self.field.K
        acc: dict[Word, object] = {}
        for c, v in zip(coords, self.values):
            if not c:
                continue
            for w, s in v.terms.items():
                acc[w] = acc.get(w, K.zero) + c * self.field.to_field(s)
        target = {w: self.field.to_field(s) for w, s in a.terms.items()}
        for w in set(acc) | set(target):
            if acc.get(w, K.zero) != target.get(w, K.zero):
                raise ArithmeticError("element is not in the span of the PBW basis")

    def functional(self, mono: Monomial) -> dict[Word, object]:
        """Coordinate functional of one monomial, supported on pivot words."""
        i = self.index[mono]
        return {w: c for w, c in zip(self.pivots, self._inv_rows[i]) if c}


_basis_lock = threading.Lock()
_basis_cache: dict[tuple[Bicharacter, Constitution], ComponentBasis] = {}


def component_basis(bc: Bicharacter, d: Constitution) -> ComponentBasis:
    key = (bc, tuple(d))
    hit = _basis_cache.get(key)
    if hit is None:
        hit = ComponentBasis(bc, d)
        with _basis_lock:
            _basis_cache[key] = hit
    return hit


def _degree_of(a: ShuffleElement) -> Constitution:
    d = a.degree
    if d is None:
        raise ValueError("PBW decomposition needs a homogeneous element")
    return d


def pbw_decompose(a: ShuffleElement) -> list[tuple[Monomial, object]]:
    """Nonzero (monomial, field coefficient) pairs, verified by re-evaluation."""
    if a.is_zero():
        return []
    basis = component_basis(a.bc, _degree_of(a))
    coords = basis.coordinates(a)
    return [(mono, c) for mono, c in zip(basis.monomials, coords) if c]


def pbw_decompose_laurent(a: ShuffleElement) -> list[tuple[Monomial, LaurentScalar]]:
    field = scalar_field(a.bc)
    return [(m, field.to_laurent(c)) for m, c in pbw_decompose(a)]


def projection_pi(k: int, l: int, a: ShuffleElement):
    """Coefficient of the basis element u[k,l] in a (a field element)."""
    bc = a.bc
    field = scalar_field(bc)
    if not 1 <= k <= l < psi(bc.n, k):
        raise ValueError(f"u[{k},{l}] is not a PBW generator")
    if a.is_zero() or a.degree != interval_constitution(bc.n, k, l):
        return field.zero
    basis = component_basis(bc, a.degree)
    mono = ((SuperLetter(k, l), 1),)
    return basis.coordinates(a)[basis.index[mono]]


def pi_functional(bc: Bicharacter, k: int, l: int) -> dict[Word, object]:
    basis = component_basis(bc, interval_constitution(bc.n, k, l))
    return basis.functional(((SuperLetter(k, l), 1),))


def leading_term(a: ShuffleElement) -> tuple[Monomial, object]:
    """The maximal monomial of the decomposition and its coefficient."""
    parts = pbw_decompose(a)
    if not parts:
        raise ValueError("zero element has no leading term")
    return max(parts, key=lambda mc: _monomial_key(mc[0], a.bc.n))


def render_decomposition(bc: Bicharacter, parts) -> list[dict]:
    field = scalar_field(bc)
    return [{"monomial": monomial_json(m), "coeff": field.render(c)} for m, c in parts]

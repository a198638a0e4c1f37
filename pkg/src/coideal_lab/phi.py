"""Phi^S(k,m): recursion, colored schemes, regularity, duality and extraction."""
from __future__ import annotations

import threading
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .coefficients import Bicharacter, LaurentScalar, alpha_kms, mono_inv, mono_mul
from .linalg import clear_denominators, scalar_field
from .pbw import (
    component_basis,
    pbw_decompose,
    pi_functional,
    projection_pi,
    u_bracket,
)
from .shuffle import ShuffleElement, hopf_coproduct, shuffle_product
from .words import Constitution, interval_constitution, psi

Points = frozenset[int]


def clip(S: Iterable[int], k: int, m: int) -> Points:
    """S intersected with [k, m-1]: the only part of S that matters."""
    return frozenset(s for s in S if k <= s < m)


# --- the recursion ---------------------------------------------------------

_phi_lock = threading.Lock()
_phi_cache: dict[tuple, ShuffleElement] = {}


def phi(bc: Bicharacter, S: Iterable[int], k: int, m: int) -> ShuffleElement:
    n = bc.n
    if not 1 <= k <= m <= 2 * n:
        raise ValueError(f"need 1 <= k <= m <= {2 * n}")
    black = clip(S, k, m)
    key = (bc, black, k, m)
    hit = _phi_cache.get(key)
    if hit is not None:
        return hit
    out = u_bracket(bc, k, m)
    if black:
        lead = bc.const(1) - bc.qs(-2)
        for s in sorted(black):
            term = shuffle_product(phi(bc, black, 1 + s, m), u_bracket(bc, k, s))
            out = out - term.scale(lead * alpha_kms(bc, k, m, s))
    with _phi_lock:
        _phi_cache[key] = out
    return out


# --- schemes ---------------------------------------------------------------

@dataclass(frozen=True)
class ColoredScheme:
    """Points k-1..m; k-1 white, m black, intermediate i black iff i in S."""

    n: int
    k: int
    m: int
    black: Points

    @classmethod
    def of(cls, n: int, S: Iterable[int], k: int, m: int) -> "ColoredScheme":
        if not 1 <= k <= m <= 2 * n:
            raise ValueError(f"need 1 <= k <= m <= {2 * n}")
        return cls(n, k, m, clip(S, k, m))

    def color(self, p: int) -> str | None:
        """'white', 'black', or None when p is not on the scheme."""
        if p == self.k - 1:
            return "white"
        if p == self.m:
            return "black"
        if self.k <= p < self.m:
            return "black" if p in self.black else "white"
        return None

    def is_white(self, p: int) -> bool:
        return self.color(p) == "white"

    def is_black(self, p: int) -> bool:
        return self.color(p) == "black"

    def column(self, i: int) -> tuple[str | None, str | None]:
        """(color of i, color of psi(i)-1): one column of the shifted scheme."""
        return self.color(i), self.color(2 * self.n - i)

    @property
    def points(self) -> list[int]:
        return list(range(self.k - 1, self.m + 1))

    def render_plain(self) -> str:
        cells = [f"{p}{'*' if self.is_black(p) else 'o'}" for p in self.points]
        return " ".join(cells)

    def render_shifted(self) -> str | None:
        """Two rows; column i pairs lower point i with upper point psi(i)-1."""
        n, k, m = self.n, self.k, self.m
        if not k <= n < m:
            return None
        lo = min(k - 1, 2 * n - m)
        upper, lower = [], []
        for i in range(lo, n + 1):
            up = 2 * n - i
            upper.append(self._cell(up))
            lower.append(self._cell(i))
        width = max(len(c) for c in upper + lower)
        fmt = lambda row: " ".join(c.rjust(width) for c in row).rstrip()
        return fmt(upper) + " <=\n" + fmt(lower)

    def _cell(self, p: int) -> str:
        c = self.color(p)
        if c is None:
            return "."
        return f"{p}{'*' if c == 'black' else 'o'}"

    def to_json(self) -> dict:
        return {"k": self.k, "m": self.m, "black": sorted(self.black)}


# --- regularity ------------------------------------------------------------

def _in_window(n: int, i: int) -> bool:
    return 1 <= i <= 2 * n


def is_white_regular(n: int, S: Iterable[int], k: int, m: int) -> bool:
    if m == psi(n, k):
        return False
    if m <= n or k > n:
        return True
    black = clip(S, k, m) | {k - 1, m}
    for i in range(k - 1, m):
        j = 2 * n - i + 1  # psi(i) without range checks (i may be 0)
        if k <= j <= m + 1 and i in black and (j - 1) in black:
            return False
    return True


def is_black_regular(n: int, S: Iterable[int], k: int, m: int) -> bool:
    if m == psi(n, k):
        return False
    if m <= n or k > n:
        return True
    inner = clip(S, k, m) - {k - 1, m}
    for i in range(k, m + 1):
        j = 2 * n - i + 1
        if k <= j <= m + 1 and i not in inner and (j - 1) not in inner:
            return False
    return True


def is_regular(n: int, S: Iterable[int], k: int, m: int) -> bool:
    return is_white_regular(n, S, k, m) or is_black_regular(n, S, k, m)


def _columns(n: int, S: Iterable[int], k: int, m: int) -> list[tuple[str | None, str | None]]:
    sc = ColoredScheme.of(n, S, k, m)
    return [sc.column(i) for i in range(min(k - 1, 2 * n - m), n + 1)]


def is_white_regular_by_scheme(n: int, S: Iterable[int], k: int, m: int) -> bool:
    """White regularity read off the shifted scheme: no black column, and for
    m > psi(k) the first complete column is white."""
    if m == psi(n, k):
        return False
    if m <= n or k > n:
        return True
    complete = [c for c in _columns(n, S, k, m) if None not in c]
    if ("black", "black") in complete:
        return False
    return m < psi(n, k) or complete[0] == ("white", "white")


def is_black_regular_by_scheme(n: int, S: Iterable[int], k: int, m: int) -> bool:
    if m == psi(n, k):
        return False
    if m <= n or k > n:
        return True
    complete = [c for c in _columns(n, S, k, m) if None not in c]
    if ("white", "white") in complete:
        return False
    return m > psi(n, k) or complete[0] == ("black", "black")


# --- duality ---------------------------------------------------------------

def dual_set(n: int, S: Iterable[int], k: int, m: int) -> tuple[Points, int, int]:
    """T = complement in [psi(m), psi(k)-1] of {psi(s)-1 : s in S}."""
    black = clip(S, k, m)
    k2, m2 = psi(n, m), psi(n, k)
    image = {psi(n, s) - 1 for s in black}
    return frozenset(i for i in range(k2, m2) if i not in image), k2, m2


def _lower_product(bc: Bicharacter, k: int, m: int):
    out = bc.unit
    for i in range(k, m + 1):
        for j in range(k, i):
            out = mono_mul(out, bc.p(i, j))
    return out


def duality_constant(bc: Bicharacter, S: Iterable[int], k: int, m: int) -> LaurentScalar:
    """(-1)^(m-k) q^(-2r) prod_{m>=i>j>=k} p_ij^-1 for black regular S."""
    n = bc.n
    if not is_black_regular(n, S, k, m):
        raise ValueError("duality constant needs a black regular set")
    T, _, _ = dual_set(n, S, k, m)
    sign = -1 if (m - k) % 2 else 1
    return bc.scalar(mono_inv(_lower_product(bc, k, m)), sign) * bc.qs(-2 * len(T))


def closed_form_full(bc: Bicharacter, k: int, m: int) -> ShuffleElement:
    """(-1)^(m-k) prod p_ij^-1 u[psi(m), psi(k)]: the value of Phi^[k,m-1](k,m)."""
    n = bc.n
    sign = -1 if (m - k) % 2 else 1
    c = bc.scalar(mono_inv(_lower_product(bc, k, m)), sign)
    return u_bracket(bc, psi(n, m), psi(n, k)).scale(c)


# --- spectrum --------------------------------------------------------------

def split_by_last(a: ShuffleElement, k: int) -> dict[int, list]:
    """Group the PBW decomposition as a = sum_i F_i u[k,i], F_i in A_{k+1}."""
    out: dict[int, list] = {}
    for mono, c in pbw_decompose(a):
        last, e = mono[-1]
        if last.k != k or e != 1 or any(s.k <= k for s, _ in mono[:-1]):
            raise ValueError("element is not linear in x_k over A_{k+1}")
        out.setdefault(last.m, []).append((mono[:-1], c))
    return out


def spectrum(a: ShuffleElement, k: int) -> set[int]:
    return set(split_by_last(a, k))


# --- extraction ------------------------------------------------------------

@dataclass
class ExtractionStep:
    l: int
    S: tuple[int, ...]


def _left_legs(E: ShuffleElement, right_degree: Constitution, functional: dict) -> dict:
    """sum over Hopf coproduct terms with the given right degree of left * f(right)."""
    field = scalar_field(E.bc)
    K = field.K
    out: dict = {}
    for (g, wl, wr), c in hopf_coproduct(E).items():
        if g != right_degree:
            continue
        f = functional.get(wr)
        if f is None:
            continue
        out[wl] = out.get(wl, K.zero) + f * field.to_field(c)
    return {w: v for w, v in out.items() if v}


def _laurent_element(bc: Bicharacter, coeffs: dict) -> tuple[ShuffleElement, LaurentScalar]:
    field = scalar_field(bc)
    laurent, factor = clear_denominators(field, coeffs)
    return ShuffleElement(bc, laurent), factor


def extract_phi(c: ShuffleElement, k: int, m: int,
                trace: list | None = None) -> tuple[tuple[int, ...], ShuffleElement]:
    """Find S with Phi^S(k,m) in the right coideal subalgebra generated by c and G.

    Follows the downward induction: with E = Phi^{S_t}(k,m) + sum_{i<t} F_i u[k,i]
    in the subalgebra, the coproduct yields v = F_l + const*Phi^{S_t}(1+l,m) and
    w = u[k,l] + lower, and E - v w = Phi^{S_t + l}(k,m) + lower.  Scalars are
    carried as an overall factor kappa so that every element stays Laurent.
    """
    bc = c.bc
    n = bc.n
    field = scalar_field(bc)
    if not 1 <= k <= m < psi(n, k):
        raise ValueError("extraction needs k <= m < psi(k)")
    if c.degree != interval_constitution(n, k, m):
        raise ValueError("degree of c does not match [k:m]")
    parts = split_by_last(c, k)
    if max(parts) != m:
        raise ValueError(f"leading term of c is not u[{k},{m}]")
    top = dict(parts[m]).get((), None)
    if top is None or len(parts[m]) != 1:
        raise ValueError(f"leading term of c is not u[{k},{m}]")
    num, den = field.split(top)
    E = c.scale(den)
    kappa = num
    S: set[int] = set()
    t = m
    while True:
        target = phi(bc, S, k, m)
        rest = E - target.scale(kappa)
        if rest.is_zero():
            break
        layers = split_by_last(rest, k)
        l = max(layers)
        if l >= t:
            raise ArithmeticError("extraction did not descend")
        F_l = layers[l]
        # v: apply id (x) pi_kl
        v_coeffs = _left_legs(E, interval_constitution(n, k, l), pi_functional(bc, k, l))
        v, D_v = _laurent_element(bc, v_coeffs)
        # w: apply id (x) nu_a with a = F_l, nu_a read off one PBW coordinate
        mono_a = F_l[0][0]
        deg_a = interval_constitution(n, l + 1, m)
        w_coeffs = _left_legs(E, deg_a, component_basis(bc, deg_a).functional(mono_a))
        w, _ = _laurent_element(bc, w_coeffs)
        a_w, b_w = field.split(projection_pi(k, l, w))
        lam_v = bc.scalar(bc.p_eval(deg_a, interval_constitution(n, k, l)))
        # v = D_v kappa lam_v (F_l + ...) and w = (a_w/b_w)(u[k,l] + ...)
        grow = D_v * lam_v * a_w
        E = E.scale(grow) - shuffle_product(v, w).scale(b_w)
        kappa = kappa * grow
        S.add(l)
        t = l
        if trace is not None:
            trace.append(ExtractionStep(l, tuple(sorted(S))))
    if E != phi(bc, S, k, m).scale(kappa):
        raise ArithmeticError("extraction result is not proportional to Phi^S(k,m)")
    return tuple(sorted(S)), phi(bc, S, k, m)


# --- the monoid Sigma and the root sequence of U^S(k,m) ---------------------

def _add(a: Constitution, b: Constitution) -> Constitution:
    return tuple(x + y for x, y in zip(a, b))


def _sub(a: Constitution, b: Constitution) -> Constitution | None:
    out = tuple(x - y for x, y in zip(a, b))
    return out if min(out) >= 0 else None


@dataclass(frozen=True)
class SigmaMonoid:
    """Additive monoid generated by [1+t:s] over white t < black s."""

    n: int
    k: int
    m: int
    black: Points
    pairs: tuple[tuple[int, int], ...]

    @property
    def degrees(self) -> list[Constitution]:
        return sorted({interval_constitution(self.n, 1 + t, s) for t, s in self.pairs})

    def contains(self, d: Constitution) -> bool:
        return _member(self.degrees_key, tuple(d))

    @property
    def degrees_key(self) -> tuple[Constitution, ...]:
        return tuple(self.degrees)

    def is_indecomposable(self, d: Constitution) -> bool:
        """d in Sigma, nonzero, and not a sum of two nonzero elements."""
        d = tuple(d)
        if not any(d) or not self.contains(d):
            return False
        for g in self.degrees:
            rest = _sub(d, g)
            if rest is not None and any(rest) and self.contains(rest):
                return False
        return True

    def to_json(self) -> dict:
        return {"k": self.k, "m": self.m, "black": sorted(self.black),
                "generators": [f"[{1 + t}:{s}]" for t, s in self.pairs]}


@lru_cache(maxsize=None)
def _member(gens: tuple[Constitution, ...], d: Constitution) -> bool:
    if not any(d):
        return True
    for g in gens:
        rest = _sub(d, g)
        if rest is not None and _member(gens, rest):
            return True
    return False


def sigma_monoid(n: int, S: Iterable[int], k: int, m: int) -> SigmaMonoid:
    sc = ColoredScheme.of(n, S, k, m)
    pts = sc.points
    pairs = tuple((t, s) for t in pts for s in pts
                  if t < s and sc.is_white(t) and sc.is_black(s))
    return SigmaMonoid(n, k, m, sc.black, pairs)


def _require_regular(n: int, S, k: int, m: int) -> None:
    if not is_regular(n, S, k, m):
        raise ValueError(f"S={sorted(clip(S, k, m))} is not ({k},{m})-regular")


def indecomposable_pairs(n: int, S: Iterable[int], k: int, m: int) -> list[tuple[int, int]]:
    """(t, s) whose degree [1+t:s] is indecomposable in Sigma (by search)."""
    sg = sigma_monoid(n, S, k, m)
    return [(t, s) for t, s in sg.pairs
            if sg.is_indecomposable(interval_constitution(n, 1 + t, s))]


def indecomposable_by_columns(n: int, S: Iterable[int], k: int, m: int) -> list[tuple[int, int]]:
    """The same pairs, read off the shifted scheme via conditions a) / b)."""
    _require_regular(n, S, k, m)
    sc = ColoredScheme.of(n, S, k, m)
    white = is_white_regular(n, S, k, m)
    out = []
    for t, s in sigma_monoid(n, S, k, m).pairs:
        if white:
            far = 2 * n - t  # psi(1+t)
            a = not sc.is_black(far)
        else:
            far = 2 * n - s  # psi(1+s)
            a = not sc.is_white(far)
        b = all(set(sc.column(j)) == {"white", "black"} for j in range(t + 1, s))
        if a or b:
            out.append((t, s))
    return out


def _canonical_start(n: int, a: int, b: int) -> tuple[int, int] | None:
    """[a:b] as [i:j] with j < psi(i); None for the degree 2[i:n]."""
    if b == psi(n, a):
        return None
    if b > psi(n, a):
        return psi(n, b), psi(n, a)
    return a, b


def _theta_from_pairs(n: int, pairs: Iterable[tuple[int, int]]) -> tuple[int, ...]:
    theta = [0] * n
    for t, s in pairs:
        c = _canonical_start(n, 1 + t, s)
        if c is None:
            continue
        i, j = c
        theta[i - 1] = max(theta[i - 1], j - i + 1)
    return tuple(theta)


def theta_by_sigma(n: int, S: Iterable[int], k: int, m: int) -> tuple[int, ...]:
    """Root sequence from a brute-force search of indecomposables in Sigma."""
    return _theta_from_pairs(n, indecomposable_pairs(n, S, k, m))


def theta_single_bracket(n: int, k: int, m: int) -> tuple[int, ...]:
    """Root sequence of the subalgebra generated by u[k,m], k <= m <= psi(k)."""
    if not 1 <= k <= m <= psi(n, k):
        raise ValueError("need k <= m <= psi(k)")
    theta = []
    for i in range(1, n + 1):
        if k <= i <= m and i < 2 * n - m + 1:
            theta.append(m - i + 1)
        elif m > n and k <= i == psi(n, m) <= n:
            theta.append(2 * (m - n) - 1)
        else:
            theta.append(0)
    return tuple(theta)


def _theta_white(n: int, sc: ColoredScheme) -> tuple[int, ...]:
    theta = []
    for i in range(1, n + 1):
        far = psi(n, i)
        if not sc.is_white(i - 1):
            theta.append(0)
        elif sc.is_black(far):
            a = next(a for a in range(i, n + 1) if sc.column(a) == ("white", "white"))
            theta.append(far - a)
        else:
            blacks = [p for p in range(i, far) if sc.is_black(p)]
            theta.append(max(blacks) - i + 1 if blacks else 0)
    return tuple(theta)


def _theta_black(n: int, sc: ColoredScheme) -> tuple[int, ...]:
    theta = []
    for i in range(1, n + 1):
        far = psi(n, i)
        if sc.is_white(i - 1):
            c = next(c for c in range(i, n + 1) if sc.column(c) == ("black", "black"))
            theta.append(far - c)
        elif sc.is_black(far):
            whites = [p for p in range(i, far) if sc.is_white(p)]
            theta.append(far - (min(whites) if whites else far))
        else:
            theta.append(0)
    return tuple(theta)


def theta_closed_form(n: int, S: Iterable[int], k: int, m: int) -> tuple[int, ...]:
    """Root sequence of U^S(k,m) for regular S via the shifted-scheme formulas."""
    _require_regular(n, S, k, m)
    if m > psi(n, k):
        T, k2, m2 = dual_set(n, S, k, m)
        return theta_closed_form(n, T, k2, m2)
    sc = ColoredScheme.of(n, S, k, m)
    if is_white_regular(n, S, k, m):
        return _theta_white(n, sc)
    return _theta_black(n, sc)


def theta_of_uskm(n: int, S: Iterable[int], k: int, m: int) -> tuple[int, ...]:
    if not clip(S, k, m) and m <= psi(n, k):
        return theta_single_bracket(n, k, m)
    return theta_closed_form(n, S, k, m)


def simple_roots_of_uskm(n: int, S: Iterable[int], k: int, m: int):
    from .words import RootInterval
    if clip(S, k, m) or m > psi(n, k):
        _require_regular(n, S, k, m)
    return {RootInterval.make(n, 1 + t, s) for t, s in indecomposable_pairs(n, S, k, m)}


def generators_of_uskm(bc: Bicharacter, S: Iterable[int], k: int,
                       m: int) -> list[tuple[Points, int, int, ShuffleElement]]:
    """Phi^S(1+t,s) over the indecomposable [1+t:s]."""
    n = bc.n
    _require_regular(n, S, k, m)
    return [(clip(S, 1 + t, s), 1 + t, s, phi(bc, S, 1 + t, s))
            for t, s in indecomposable_by_columns(n, S, k, m)]

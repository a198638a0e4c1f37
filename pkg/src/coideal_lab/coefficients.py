"""Exact scalars, the bicharacter p(-,-) and the scalar coefficient tables.

Scalars are Laurent polynomials with rational coefficients in the main
parameter q and optional extra multiparameters t1, t2, ...  In cyclotomic
mode a scalar lives in Q[q]/(Phi_t(q)) and is stored fully reduced.
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

import sympy

Mono = tuple[int, ...]

__all__ = [
    "Mono",
    "LaurentScalar",
    "Bicharacter",
    "default_bicharacter",
    "bicharacter_from_json",
    "multiparameter_bicharacter",
    "parse_monomial",
    "parse_scalar",
    "render_monomial",
    "mono_mul",
    "mono_inv",
    "mono_pow",
    "sigma",
    "mu",
    "epsilon",
    "tau",
    "alpha_shuffle",
    "alpha_kms",
    "beta_km",
]


def mono_mul(a: Mono, b: Mono) -> Mono:
    return tuple(x + y for x, y in zip(a, b))


def mono_inv(a: Mono) -> Mono:
    return tuple(-x for x in a)


def mono_pow(a: Mono, e: int) -> Mono:
    return tuple(x * e for x in a)


@lru_cache(maxsize=None)
def _cyclotomic_coeffs(t: int) -> tuple[int, ...]:
    """Coefficients of Phi_t, lowest degree first."""
    x = sympy.Symbol("x")
    poly = sympy.Poly(sympy.cyclotomic_poly(t, x), x)
    return tuple(int(c) for c in reversed(poly.all_coeffs()))


def _reduce_cyclotomic(terms: dict[Mono, Fraction], t: int) -> dict[Mono, Fraction]:
    # q^t = 1 first, then division by the monic Phi_t
    dense: dict[int, Fraction] = {}
    for (e,), c in terms.items():
        r = e % t
        dense[r] = dense.get(r, 0) + c
    phi = _cyclotomic_coeffs(t)
    d = len(phi) - 1
    for deg in range(t - 1, d - 1, -1):
        c = dense.get(deg, 0)
        if not c:
            continue
        shift = deg - d
        for j, pc in enumerate(phi):
            if pc:
                dense[shift + j] = dense.get(shift + j, 0) - c * pc
    return {(e,): c for e, c in dense.items() if c}


class LaurentScalar:
    """Immutable sparse Laurent polynomial ``{exponent tuple: rational}``."""

    __slots__ = ("terms", "modulus", "_hash")

    def __init__(self, terms: Mapping[Mono, Fraction | int] | None = None,
                 modulus: int | None = None, *, _clean: bool = False):
        if terms is None:
            terms = {}
        if not _clean:
            terms = {m: c for m, c in terms.items() if c}
            if modulus is not None and terms:
                terms = _reduce_cyclotomic(terms, modulus)
        self.terms: dict[Mono, Fraction | int] = dict(terms)
        self.modulus = modulus
        self._hash = None

    # constructors -------------------------------------------------------
    @classmethod
    def monomial(cls, mono: Mono, coeff: Fraction | int = 1,
                 modulus: int | None = None) -> "LaurentScalar":
        return cls({mono: coeff}, modulus)

    @classmethod
    def constant(cls, value: Fraction | int, nparams: int,
                 modulus: int | None = None) -> "LaurentScalar":
        return cls({(0,) * nparams: value}, modulus)

    # predicates ---------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def as_monomial(self) -> tuple[Fraction, Mono] | None:
        """``(coeff, mono)`` when the scalar is a single term, else None."""
        if len(self.terms) != 1:
            return None
        (m, c), = self.terms.items()
        return Fraction(c), m

    # arithmetic ---------------------------------------------------------
    def _check(self, other: "LaurentScalar") -> int | None:
        if self.modulus != other.modulus and self.terms and other.terms:
            raise ValueError("mixing scalars from different modes")
        return self.modulus if self.modulus is not None else other.modulus

    def __add__(self, other):
        if not isinstance(other, LaurentScalar):
            return NotImplemented
        mod = self._check(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = out.get(m, 0) + c
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        if mod is not None and other.terms and self.terms:
            return LaurentScalar(out, mod)
        return LaurentScalar(out, mod, _clean=True)

    def __neg__(self):
        return LaurentScalar({m: -c for m, c in self.terms.items()}, self.modulus, _clean=True)

    def __sub__(self, other):
        if not isinstance(other, LaurentScalar):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return LaurentScalar({}, self.modulus, _clean=True)
            return LaurentScalar({m: c * other for m, c in self.terms.items()},
                                 self.modulus, _clean=True)
        if not isinstance(other, LaurentScalar):
            return NotImplemented
        mod = self._check(other)
        out: dict[Mono, Fraction | int] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                out[m] = out.get(m, 0) + c1 * c2
        return LaurentScalar(out, mod)

    __rmul__ = __mul__

    def mul_mono(self, mono: Mono, coeff: Fraction | int = 1) -> "LaurentScalar":
        if self.modulus is None:
            return LaurentScalar(
                {tuple(a + b for a, b in zip(m, mono)): c * coeff for m, c in self.terms.items()},
                None, _clean=True)
        return LaurentScalar(
            {tuple(a + b for a, b in zip(m, mono)): c * coeff for m, c in self.terms.items()},
            self.modulus)

    def __pow__(self, e: int) -> "LaurentScalar":
        if e < 0:
            return self.inverse() ** (-e)
        nparams = len(next(iter(self.terms))) if self.terms else 1
        out = LaurentScalar.constant(1, nparams, self.modulus)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def inverse(self) -> "LaurentScalar":
        """Inverse of a unit.  Generic mode allows only monomial units."""
        mono = self.as_monomial()
        if mono is not None and self.modulus is None:
            c, m = mono
            return LaurentScalar({mono_inv(m): 1 / c}, None, _clean=True)
        if self.modulus is None:
            raise ZeroDivisionError(f"{self.render()} is not a monomial unit")
        if not self.terms:
            raise ZeroDivisionError("inverse of zero")
        x = sympy.Symbol("x")
        num = sympy.Poly({(e,): sympy.Rational(c.numerator, c.denominator) if isinstance(c, Fraction)
                          else c for (e,), c in self.terms.items()}, x, domain=sympy.QQ)
        mod = sympy.Poly(sympy.cyclotomic_poly(self.modulus, x), x, domain=sympy.QQ)
        inv = sympy.invert(num, mod)
        out = {}
        for (e,), c in inv.terms():
            out[(e,)] = Fraction(int(c.p), int(c.q))
        return LaurentScalar(out, self.modulus)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return LaurentScalar({m: Fraction(c) / other for m, c in self.terms.items()},
                                 self.modulus, _clean=True)
        return self * other.inverse()

    # comparison ---------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return not self.terms
            return self.terms == {m: other for m in self.terms} and len(self.terms) == 1 \
                and all(x == 0 for x in next(iter(self.terms)))
        if not isinstance(other, LaurentScalar):
            return NotImplemented
        return self.terms == other.terms and (
            self.modulus == other.modulus or not self.terms)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    # rendering ----------------------------------------------------------
    def render(self, params: Sequence[str] = ("q",)) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for m in sorted(self.terms, reverse=True):
            c = Fraction(self.terms[m])
            mono = render_monomial(m, params)
            mag = abs(c)
            if mono == "1":
                body = _frac(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{_frac(mag)}*{mono}"
            pieces.append(("-" if c < 0 else "+", body))
        sign, body = pieces[0]
        out = ("-" if sign == "-" else "") + body
        for sign, body in pieces[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self):
        return f"LaurentScalar({self.render(_default_names(self))})"


def _default_names(s: LaurentScalar) -> tuple[str, ...]:
    k = len(next(iter(s.terms))) if s.terms else 1
    return ("q",) + tuple(f"t{i}" for i in range(1, k))


def _frac(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def render_monomial(m: Mono, params: Sequence[str]) -> str:
    parts = []
    for name, e in zip(params, m):
        if e == 0:
            continue
        parts.append(name if e == 1 else f"{name}^{e}")
    return "*".join(parts) if parts else "1"


_FACTOR = re.compile(r"^\s*([A-Za-z_][A-Za-z0-9_]*)\s*(?:\^\s*(-?\d+))?\s*$")


def parse_monomial(text: str, params: Sequence[str]) -> Mono:
    """Parse ``"q^-2*t1"`` style monomials over the given parameter names."""
    exps = [0] * len(params)
    text = text.strip()
    if text in ("", "1"):
        return tuple(exps)
    for factor in text.split("*"):
        match = _FACTOR.match(factor)
        if not match:
            raise ValueError(f"bad monomial factor {factor!r}")
        name, e = match.group(1), match.group(2)
        if name not in params:
            raise ValueError(f"unknown parameter {name!r}")
        exps[params.index(name)] += int(e) if e is not None else 1
    return tuple(exps)


def parse_scalar(text: str, params: Sequence[str], modulus: int | None = None) -> LaurentScalar:
    """Inverse of ``LaurentScalar.render``: ``"-q^2 + 1/2*q^-1*t1"``."""
    text = text.strip()
    if not text:
        raise ValueError("empty scalar")
    if text[0] in "+-":
        text = "0 " + text[0] + " " + text[1:]
    pieces = re.split(r"\s+([+-])\s+", text)
    terms: dict[Mono, Fraction] = {}
    signs = ["+"] + pieces[1::2]
    for sign, body in zip(signs, pieces[0::2]):
        head, _, rest = body.partition("*")
        try:
            coeff = Fraction(head)
            mono = parse_monomial(rest, params) if rest else tuple([0] * len(params))
        except ValueError:
            coeff, mono = Fraction(1), parse_monomial(body, params)
        if sign == "-":
            coeff = -coeff
        terms[mono] = terms.get(mono, Fraction(0)) + coeff
    return LaurentScalar(terms, modulus)


@dataclass(frozen=True)
class Bicharacter:
    """The matrix p_ij together with the ambient scalar mode.

    ``modulus`` is None in generic mode and the multiplicative order t of q
    in cyclotomic mode.
    """

    n: int
    matrix: tuple[tuple[Mono, ...], ...]
    params: tuple[str, ...] = ("q",)
    modulus: int | None = None

    def __post_init__(self):
        self.validate()

    @property
    def nparams(self) -> int:
        return len(self.params)

    @property
    def q(self) -> Mono:
        return (1,) + (0,) * (self.nparams - 1)

    @property
    def unit(self) -> Mono:
        return (0,) * self.nparams

    def qpow(self, e: int) -> Mono:
        return (e,) + (0,) * (self.nparams - 1)

    def validate(self) -> None:
        n, P = self.n, self.matrix
        if n < 1:
            raise ValueError("rank must be at least 1")
        if len(P) != n or any(len(row) != n for row in P):
            raise ValueError("matrix must be n x n")
        if any(len(m) != self.nparams for row in P for m in row):
            raise ValueError("monomial arity does not match parameter list")
        if self.params[0] != "q":
            raise ValueError("the first parameter must be q")
        if self.modulus is not None:
            if self.modulus <= 4:
                raise ValueError("cyclotomic mode needs t > 4")
            if self.nparams != 1:
                raise ValueError("multiparameters are not allowed in cyclotomic mode")
        q = self.q
        for i in range(n):
            want = q if i == n - 1 else mono_pow(q, 2)
            if P[i][i] != want:
                raise ValueError(f"p_{i + 1}{i + 1} violates the diagonal constraint")
        for i in range(n):
            for j in range(n):
                if i == j:
                    continue
                prod = mono_mul(P[i][j], P[j][i])
                want = mono_pow(q, -2) if abs(i - j) == 1 else self.unit
                if prod != want:
                    raise ValueError(f"p_{i + 1}{j + 1} p_{j + 1}{i + 1} violates the constraint")

    def scalar(self, mono: Mono, coeff: Fraction | int = 1) -> LaurentScalar:
        return LaurentScalar.monomial(mono, coeff, self.modulus)

    def const(self, value: Fraction | int) -> LaurentScalar:
        return LaurentScalar.constant(value, self.nparams, self.modulus)

    def qs(self, e: int, coeff: Fraction | int = 1) -> LaurentScalar:
        return self.scalar(self.qpow(e), coeff)

    def psi(self, i: int) -> int:
        return 2 * self.n - i + 1

    def letter(self, i: int) -> int:
        """Normalize an extended index 1..2n to a letter 1..n."""
        if not 1 <= i <= 2 * self.n:
            raise ValueError(f"index {i} out of range 1..{2 * self.n}")
        return i if i <= self.n else 2 * self.n - i + 1

    def p(self, i: int, j: int) -> Mono:
        """p_ij for extended indices."""
        return self.matrix[self.letter(i) - 1][self.letter(j) - 1]

    def p_eval(self, u: Sequence[int], v: Sequence[int]) -> Mono:
        """Bimultiplicative extension to constitutions (multiplicity vectors)."""
        out = [0] * self.nparams
        P = self.matrix
        for i, a in enumerate(u):
            if not a:
                continue
            row = P[i]
            for j, b in enumerate(v):
                if not b:
                    continue
                for r, e in enumerate(row[j]):
                    out[r] += a * b * e
        return tuple(out)

    def p_letters(self, u: Iterable[int], v: Iterable[int]) -> Mono:
        """p between two words given as letter sequences."""
        return self.p_eval(self.constitution(u), self.constitution(v))

    def constitution(self, word: Iterable[int]) -> tuple[int, ...]:
        c = [0] * self.n
        for x in word:
            c[self.letter(x) - 1] += 1
        return tuple(c)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "parameters": list(self.params),
            "matrix": [[render_monomial(m, self.params) for m in row] for row in self.matrix],
        }

    def with_modulus(self, modulus: int | None) -> "Bicharacter":
        return Bicharacter(self.n, self.matrix, self.params, modulus)


def default_bicharacter(n: int, modulus: int | None = None) -> Bicharacter:
    """One-parameter solution: p_{i,i+1} = q^-2, p_{i+1,i} = 1."""
    if n < 1:
        raise ValueError("rank must be at least 1")
    rows = []
    for i in range(1, n + 1):
        row = []
        for j in range(1, n + 1):
            if i == j:
                row.append((1,) if i == n else (2,))
            elif j == i + 1:
                row.append((-2,))
            else:
                row.append((0,))
        rows.append(tuple(row))
    return Bicharacter(n, tuple(rows), ("q",), modulus)


def bicharacter_from_json(doc: dict | str, modulus: int | None = None) -> Bicharacter:
    if isinstance(doc, str):
        doc = json.loads(doc)
    params = tuple(doc.get("parameters") or ["q"])
    if "q" not in params:
        params = ("q",) + params
    elif params[0] != "q":
        params = ("q",) + tuple(p for p in params if p != "q")
    matrix = tuple(tuple(parse_monomial(str(e), params) for e in row) for row in doc["matrix"])
    return Bicharacter(int(doc["n"]), matrix, params, modulus)


# --- coefficient tables ------------------------------------------------------

def _check_range(bc: Bicharacter, *idx: int) -> None:
    for i in idx:
        if not 1 <= i <= 2 * bc.n:
            raise ValueError(f"index {i} out of range 1..{2 * bc.n}")


def sigma(bc: Bicharacter, k: int, m: int) -> LaurentScalar:
    """p(u(k,m), u(k,m)) in closed form."""
    _check_range(bc, k, m)
    if k > m:
        raise ValueError("need k <= m")
    n = bc.n
    if m == n or k == n + 1:
        return bc.qs(1)
    if m == bc.psi(k):
        return bc.qs(4)
    return bc.qs(2)


def mu(bc: Bicharacter, k: int, m: int, i: int) -> LaurentScalar:
    """p(u(k,i),u(i+1,m)) p(u(i+1,m),u(k,i)) in closed form."""
    _check_range(bc, k, m, i)
    if not k <= i < m:
        raise ValueError("need k <= i < m")
    n, psi = bc.n, bc.psi
    if m < psi(k):
        if m > n and i == psi(m) - 1:
            return bc.qs(-4)
        return bc.qs(0) if i == n else bc.qs(-2)
    if m == psi(k):
        return bc.qs(2) if i == n else bc.qs(0)
    if k <= n and i == psi(k):
        return bc.qs(-4)
    return bc.qs(0) if i == n else bc.qs(-2)


def epsilon(bc: Bicharacter, k: int, m: int) -> LaurentScalar:
    _check_range(bc, k, m)
    n = bc.n
    if m <= n or k > n:
        return bc.qs(0)
    if m == bc.psi(k):
        return bc.qs(-3)
    return bc.qs(-1)


def tau(bc: Bicharacter, i: int) -> LaurentScalar:
    return bc.qs(1) if i == bc.n else bc.qs(0)


def _upper_product(bc: Bicharacter, k: int, m: int) -> Mono:
    out = bc.unit
    for i in range(k, m + 1):
        for j in range(i + 1, m + 1):
            out = mono_mul(out, bc.p(i, j))
    return out


def alpha_shuffle(bc: Bicharacter, k: int, m: int) -> LaurentScalar:
    """Scalar a with u[k,m] = a * (x_m x_{m-1} ... x_k) in the shuffle algebra."""
    _check_range(bc, k, m)
    if k > m:
        raise ValueError("need k <= m")
    base = bc.qs(2) - bc.const(1)
    return epsilon(bc, k, m) * base ** (m - k) * bc.scalar(_upper_product(bc, k, m))


def _u_const(bc: Bicharacter, a: int, b: int) -> tuple[int, ...]:
    return bc.constitution(range(a, b + 1))


def alpha_kms(bc: Bicharacter, k: int, m: int, s: int) -> LaurentScalar:
    """tau_s * p(u(1+s,m), u(k,s))^-1, the weight in the Phi recursion."""
    _check_range(bc, k, m, s)
    if not k <= s < m:
        raise ValueError("need k <= s < m")
    pm = bc.p_eval(_u_const(bc, s + 1, m), _u_const(bc, k, s))
    return tau(bc, s) * bc.scalar(mono_inv(pm))


def beta_km(bc: Bicharacter, k: int, m: int) -> LaurentScalar:
    """-(1-q^-2) alpha_{km}^{m-1}, the derivative factor of Phi^{[k,m-1]}(k,m)."""
    return -(bc.const(1) - bc.qs(-2)) * alpha_kms(bc, k, m, m - 1)


def multiparameter_bicharacter(n: int) -> Bicharacter:
    """p_ij = t_r * (q^-2 if j = i+1 else 1), p_ji = t_r^-1 for each pair i < j."""
    if n < 1:
        raise ValueError("rank must be at least 1")
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    params = ("q",) + tuple(f"t{r + 1}" for r in range(len(pairs)))
    width = len(params)

    def mono(qe: int, r: int | None = None, e: int = 0) -> Mono:
        m = [0] * width
        m[0] = qe
        if r is not None:
            m[r + 1] = e
        return tuple(m)

    rows = [[mono(0)] * n for _ in range(n)]
    for i in range(n):
        rows[i][i] = mono(1 if i == n - 1 else 2)
    for r, (i, j) in enumerate(pairs):
        rows[i][j] = mono(-2 if j == i + 1 else 0, r, 1)
        rows[j][i] = mono(0, r, -1)
    return Bicharacter(n, tuple(tuple(row) for row in rows), params)

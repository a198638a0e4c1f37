"""Bridge between LaurentScalar/ShuffleElement and sympy's DomainMatrix.

Generic mode works over the rational function field Q(q, t1, ...);
cyclotomic mode over the number field Q[q]/(Phi_t).
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Sequence

import sympy
from sympy.polys.agca.extensions import FiniteExtension
from sympy.polys.matrices import DomainMatrix

from .coefficients import Bicharacter, LaurentScalar
from .words import Word


class ScalarField:
    """The coefficient field of a bicharacter, with conversions."""

    def __init__(self, bc: Bicharacter):
        self.bc = bc
        self.symbols = sympy.symbols(bc.params)
        if bc.modulus is None:
            self.K = sympy.QQ.frac_field(*self.symbols)
            self.gens = self.K.gens
        else:
            x = self.symbols[0]
            self.K = FiniteExtension(sympy.Poly(sympy.cyclotomic_poly(bc.modulus, x), x,
                                                domain=sympy.QQ))
            self.gens = (self.K.generator,)
        self._inv_gens = tuple(self.K.one / g for g in self.gens)
        self._cache: dict[LaurentScalar, object] = {}

    @property
    def zero(self):
        return self.K.zero

    @property
    def one(self):
        return self.K.one

    def _mono(self, m):
        out = self.K.one
        for g, ig, e in zip(self.gens, self._inv_gens, m):
            if e > 0:
                out = out * g ** e
            elif e < 0:
                out = out * ig ** (-e)
        return out

    def to_field(self, s: LaurentScalar):
        hit = self._cache.get(s)
        if hit is not None:
            return hit
        out = self.K.zero
        for m, c in s.terms.items():
            c = Fraction(c)
            out = out + self._mono(m) * self.K.convert(sympy.Rational(c.numerator, c.denominator))
        self._cache[s] = out
        return out

    def split(self, x) -> tuple[LaurentScalar, LaurentScalar]:
        """Write x = a/b with Laurent scalars a, b (b = 1 when possible)."""
        bc = self.bc
        if bc.modulus is not None:
            coeffs = x.rep.to_list()
            deg = len(coeffs) - 1
            terms = {(deg - i,): Fraction(int(c.numerator), int(c.denominator))
                     for i, c in enumerate(coeffs) if c}
            return LaurentScalar(terms, bc.modulus), bc.const(1)
        num = _poly_to_laurent(bc, x.numer)
        den = _poly_to_laurent(bc, x.denom)
        mono = den.as_monomial()
        if mono is not None:
            return num * den.inverse(), bc.const(1)
        return num, den

    def to_laurent(self, x) -> LaurentScalar:
        a, b = self.split(x)
        if b != self.bc.const(1):
            raise ValueError("scalar is not a Laurent polynomial")
        return a

    def is_laurent(self, x) -> bool:
        return self.split(x)[1] == self.bc.const(1)

    def render(self, x) -> str:
        a, b = self.split(x)
        if b == self.bc.const(1):
            return a.render(self.bc.params)
        return f"({a.render(self.bc.params)})/({b.render(self.bc.params)})"


def _poly_to_laurent(bc: Bicharacter, p) -> LaurentScalar:
    terms = {}
    for m, c in p.terms():
        terms[tuple(m)] = Fraction(int(c.numerator), int(c.denominator))
    return LaurentScalar(terms, None)


@lru_cache(maxsize=None)
def scalar_field(bc: Bicharacter) -> ScalarField:
    return ScalarField(bc)


def column_matrix(field: ScalarField, words: Sequence[Word], elements) -> DomainMatrix:
    """Columns are the elements' coefficients at the given words."""
    index = {w: i for i, w in enumerate(words)}
    rows = [[field.zero] * len(elements) for _ in words]
    for j, el in enumerate(elements):
        for w, c in el.terms.items():
            i = index.get(w)
            if i is not None:
                rows[i][j] = field.to_field(c)
    return DomainMatrix(rows, (len(words), len(elements)), field.K)


def support_words(elements) -> list[Word]:
    words = set()
    for el in elements:
        words.update(el.terms)
    return sorted(words)


def rank_of(field: ScalarField, elements) -> int:
    elements = [e for e in elements if not e.is_zero()]
    if not elements:
        return 0
    words = support_words(elements)
    return column_matrix(field, words, elements).rank()


def clear_denominators(field: ScalarField, coeffs: dict) -> tuple[dict, LaurentScalar]:
    """Scale field coefficients by a common Laurent factor so all are Laurent.

    Returns the scaled coefficients (as LaurentScalar) and the factor.
    """
    bc = field.bc
    factor = bc.const(1)
    parts = {k: field.split(v) for k, v in coeffs.items()}
    for a, b in parts.values():
        if b != bc.const(1):
            factor = factor * b
    fk = field.to_field(factor)
    return {k: field.to_laurent(v * fk) for k, v in coeffs.items()}, factor

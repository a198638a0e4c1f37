"""The quantum shuffle algebra: elements, product, brackets, coproducts.

An element is a finite map from words to scalars.  Equality of elements is
literal equality of these maps, which is equality in the Nichols algebra.
"""
from __future__ import annotations

import threading
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Sequence

from .coefficients import Bicharacter, LaurentScalar, Mono, mono_inv, parse_scalar
from .words import Constitution, Word, constitution, letter, render_word, word_key

__all__ = [
    "ShuffleElement",
    "shuffle_product",
    "skew_bracket",
    "braided_coproduct",
    "hopf_coproduct",
    "partial_derivative",
    "power",
    "monomial_ratio",
    "bracket_chain_left",
    "bracket_chain_right",
]


class ShuffleElement:
    __slots__ = ("bc", "terms", "_degree")

    def __init__(self, bc: Bicharacter, terms: Mapping[Word, LaurentScalar] | None = None,
                 degree: Constitution | None = None):
        self.bc = bc
        self.terms: dict[Word, LaurentScalar] = {
            w: c for w, c in (terms or {}).items() if c}
        self._degree = degree

    # constructors
    @classmethod
    def zero(cls, bc: Bicharacter, degree: Constitution | None = None) -> "ShuffleElement":
        return cls(bc, {}, degree)

    @classmethod
    def one(cls, bc: Bicharacter) -> "ShuffleElement":
        return cls(bc, {(): bc.const(1)})

    @classmethod
    def word(cls, bc: Bicharacter, word: Sequence[int],
             coeff: LaurentScalar | None = None) -> "ShuffleElement":
        w = tuple(letter(bc.n, x) for x in word)
        return cls(bc, {w: coeff if coeff is not None else bc.const(1)})

    @classmethod
    def letter(cls, bc: Bicharacter, i: int) -> "ShuffleElement":
        return cls.word(bc, (i,))

    # degree
    @property
    def degree(self) -> Constitution | None:
        """Common constitution of all words, or the stored tag for zero."""
        if not self.terms:
            return self._degree
        degs = {constitution(self.bc.n, w) for w in self.terms}
        if len(degs) != 1:
            return None
        return degs.pop()

    def is_homogeneous(self) -> bool:
        return not self.terms or self.degree is not None

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self) -> Iterator[tuple[Word, LaurentScalar]]:
        return iter(self.terms.items())

    def coeff(self, word: Sequence[int]) -> LaurentScalar:
        return self.terms.get(tuple(word), self.bc.const(0))

    # linear structure
    def _tag(self, other: "ShuffleElement") -> Constitution | None:
        a, b = self.degree, other.degree
        return a if a == b else None

    def __add__(self, other: "ShuffleElement") -> "ShuffleElement":
        out = dict(self.terms)
        for w, c in other.terms.items():
            if w in out:
                out[w] = out[w] + c
            else:
                out[w] = c
        return ShuffleElement(self.bc, out, self._tag(other))

    def __neg__(self) -> "ShuffleElement":
        return ShuffleElement(self.bc, {w: -c for w, c in self.terms.items()}, self._degree)

    def __sub__(self, other: "ShuffleElement") -> "ShuffleElement":
        return self + (-other)

    def scale(self, s: LaurentScalar | int | Fraction) -> "ShuffleElement":
        if isinstance(s, (int, Fraction)):
            s = self.bc.const(s)
        return ShuffleElement(self.bc, {w: c * s for w, c in self.terms.items()},
                              self.degree)

    def __mul__(self, other):
        if isinstance(other, ShuffleElement):
            return shuffle_product(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __eq__(self, other):
        if not isinstance(other, ShuffleElement):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    # rendering
    def sorted_terms(self) -> list[tuple[Word, LaurentScalar]]:
        return sorted(self.terms.items(), key=lambda wc: word_key(wc[0]), reverse=True)

    def render(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for w, c in self.sorted_terms():
            parts.append(f"({c.render(self.bc.params)})*({render_word(w)})")
        return " + ".join(parts)

    def to_json(self) -> dict:
        deg = self.degree
        return {
            "degree": list(deg) if deg is not None else None,
            "terms": [{"word": list(w), "coeff": c.render(self.bc.params)}
                      for w, c in self.sorted_terms()],
        }

    @classmethod
    def from_json(cls, bc: Bicharacter, doc: Mapping) -> "ShuffleElement":
        terms: dict[Word, LaurentScalar] = {}
        for item in doc.get("terms", []):
            w = tuple(int(x) for x in item["word"])
            if any(not 1 <= x <= bc.n for x in w):
                raise ValueError(f"word {list(w)} has letters outside 1..{bc.n}")
            c = parse_scalar(str(item["coeff"]), bc.params, bc.modulus)
            terms[w] = terms[w] + c if w in terms else c
        out = cls(bc, terms)
        if out.terms and out.degree is None:
            raise ValueError("element is not homogeneous")
        return out

    def __repr__(self) -> str:
        return f"ShuffleElement({self.render()})"


# --- product -----------------------------------------------------------------

_cache_lock = threading.Lock()
_word_products: dict[tuple, dict[Word, LaurentScalar]] = {}


def _word_product(bc: Bicharacter, a: Word, b: Word) -> dict[Word, LaurentScalar]:
    """Shuffle of two words.

    A letter y of the second factor landing left of a letter x of the
    first contributes p(y,x)^-1.
    """
    key = (bc, a, b)
    hit = _word_products.get(key)
    if hit is not None:
        return hit
    if not a:
        out = {b: bc.const(1)}
    elif not b:
        out = {a: bc.const(1)}
    else:
        out = {}
        for w, c in _word_product(bc, a, b[:-1]).items():
            out[w + (b[-1],)] = c
        cross = mono_inv(bc.p_letters(b, (a[-1],)))
        for w, c in _word_product(bc, a[:-1], b).items():
            key2 = w + (a[-1],)
            term = c.mul_mono(cross)
            out[key2] = out[key2] + term if key2 in out else term
        out = {w: c for w, c in out.items() if c}
    with _cache_lock:
        _word_products[key] = out
    return out


def shuffle_product(a: ShuffleElement, b: ShuffleElement) -> ShuffleElement:
    bc = a.bc
    out: dict[Word, LaurentScalar] = {}
    for wa, ca in a.terms.items():
        for wb, cb in b.terms.items():
            c = ca * cb
            for w, s in _word_product(bc, wa, wb).items():
                t = s * c
                out[w] = out[w] + t if w in out else t
    tag = None
    if a.degree is not None and b.degree is not None:
        tag = tuple(x + y for x, y in zip(a.degree, b.degree))
    return ShuffleElement(bc, out, tag)


def power(a: ShuffleElement, h: int) -> ShuffleElement:
    if h < 0:
        raise ValueError("negative power")
    out = ShuffleElement.one(a.bc)
    for _ in range(h):
        out = shuffle_product(out, a)
    return out


def _require_degree(a: ShuffleElement) -> Constitution:
    d = a.degree
    if d is None:
        raise ValueError("skew bracket needs homogeneous operands")
    return d


def skew_bracket(a: ShuffleElement, b: ShuffleElement) -> ShuffleElement:
    """[a,b] = ab - p(a,b) ba."""
    if a.is_zero() or b.is_zero():
        da, db = a.degree, b.degree
        tag = tuple(x + y for x, y in zip(da, db)) if da and db else None
        return ShuffleElement.zero(a.bc, tag)
    da, db = _require_degree(a), _require_degree(b)
    pab = a.bc.scalar(a.bc.p_eval(da, db))
    return shuffle_product(a, b) - shuffle_product(b, a).scale(pab)


def bracket_chain_left(items: Sequence[ShuffleElement]) -> ShuffleElement:
    """[[[a_1,a_2],a_3],...,a_r]."""
    out = items[0]
    for x in items[1:]:
        out = skew_bracket(out, x)
    return out


def bracket_chain_right(items: Sequence[ShuffleElement]) -> ShuffleElement:
    """[a_1,[a_2,[...,a_r]]]."""
    out = items[-1]
    for x in reversed(items[:-1]):
        out = skew_bracket(x, out)
    return out


# --- coproducts --------------------------------------------------------------

Tensor = dict[tuple[Word, Word], LaurentScalar]


def braided_coproduct(a: ShuffleElement) -> Tensor:
    """Deconcatenation: (z_1..z_m) -> sum_i (z_1..z_i) (x) (z_{i+1}..z_m)."""
    out: Tensor = {}
    for w, c in a.terms.items():
        for i in range(len(w) + 1):
            key = (w[:i], w[i:])
            out[key] = out[key] + c if key in out else c
    return {k: v for k, v in out.items() if v}


DecoratedTensor = dict[tuple[Constitution, Word, Word], LaurentScalar]


def hopf_coproduct(a: ShuffleElement) -> DecoratedTensor:
    """Coproduct of the bosonization: u (x) v  ->  p(u,v) g_v u (x) v.

    Keys are (group part, left word, right word); group parts are
    constitutions of the right leg.
    """
    bc = a.bc
    out: DecoratedTensor = {}
    for (left, right), c in braided_coproduct(a).items():
        dl, dr = constitution(bc.n, left), constitution(bc.n, right)
        key = (dr, left, right)
        val = c.mul_mono(bc.p_eval(dl, dr))
        out[key] = out[key] + val if key in out else val
    return {k: v for k, v in out.items() if v}


def decorated_tensor(bc: Bicharacter,
                     triples: Iterable[tuple[Constitution, ShuffleElement, ShuffleElement,
                                             LaurentScalar]]) -> DecoratedTensor:
    """Expand a sum of coeff * g (left (x) right) into canonical form."""
    out: DecoratedTensor = {}
    for g, left, right, coeff in triples:
        for wl, cl in left.terms.items():
            for wr, cr in right.terms.items():
                key = (tuple(g), wl, wr)
                val = cl * cr * coeff
                out[key] = out[key] + val if key in out else val
    return {k: v for k, v in out.items() if v}


def partial_derivative(i: int, a: ShuffleElement) -> ShuffleElement:
    """Right partial derivative, normalized through the Hopf coproduct.

    Satisfies d_i(uv) = d_i(u) v + p(u, x_i) u d_i(v); extended indices act
    through their letter.
    """
    bc = a.bc
    x = letter(bc.n, i)
    out: dict[Word, LaurentScalar] = {}
    for w, c in a.terms.items():
        if w and w[-1] == x:
            rest = w[:-1]
            val = c.mul_mono(bc.p_letters(rest, (x,)))
            out[rest] = out[rest] + val if rest in out else val
    tag = None
    d = a.degree
    if d is not None and d[x - 1] > 0:
        tag = tuple(v - (1 if j == x - 1 else 0) for j, v in enumerate(d))
    return ShuffleElement(bc, out, tag)


# --- projective comparison ---------------------------------------------------

def _lead(s: LaurentScalar) -> tuple[Mono, Fraction]:
    m = max(s.terms)
    return m, Fraction(s.terms[m])


def monomial_ratio(a: ShuffleElement, b: ShuffleElement) -> LaurentScalar | None:
    """Scalar r with a = r*b when r is a nonzero unit scalar, else None.

    In generic mode the ratio must be a monomial c*q^e*...; in cyclotomic
    mode any nonzero scalar is accepted.
    """
    if a.is_zero() or b.is_zero() or set(a.terms) != set(b.terms):
        return None
    bc = a.bc
    w0 = min(b.terms, key=word_key)
    if bc.modulus is None:
        ma, ca = _lead(a.terms[w0])
        mb, cb = _lead(b.terms[w0])
        r = bc.scalar(tuple(x - y for x, y in zip(ma, mb)), ca / cb)
    else:
        r = a.terms[w0] * b.terms[w0].inverse()
    return r if b.scale(r) == a else None

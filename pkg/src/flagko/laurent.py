"""Sparse integer Laurent polynomials on the weight lattice.

A :class:`LaurentPoly` models an element of the representation ring of the
maximal torus.  Exponents are weights in fundamental-weight coordinates, so
the Weyl group acts through the integer matrices of
:mod:`flagko.rootdata`.

The characters of the compact group itself enter only through their
restrictions to the torus.  Complexifications of real or quaternionic
representations are therefore represented by their characters; the maps
between real, complex and quaternionic representation rings are not modelled.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Mapping

from . import kernels
from .rootdata import RootDatum, longest_element

__all__ = [
    "LaurentPoly",
    "star",
    "rank",
    "demazure",
    "character",
    "weyl_dimension",
    "reduced_character",
    "split_self_dual",
    "split_anti_self_dual",
    "is_lex_positive",
    "format_poly",
    "parse_poly",
    "check_demazure_division",
]


class LaurentPoly:
    """Immutable map from exponent tuples to nonzero integers."""

    __slots__ = ("_terms", "_nvars", "_hash")

    def __init__(self, terms: Mapping[tuple, int] | None = None, nvars: int | None = None):
        clean = {}
        if terms:
            for e, c in terms.items():
                if c:
                    clean[tuple(e)] = int(c)
        if nvars is None:
            if not clean:
                raise ValueError("nvars is required for the zero polynomial")
            nvars = len(next(iter(clean)))
        for e in clean:
            if len(e) != nvars:
                raise ValueError(f"exponent {e} has wrong length (expected {nvars})")
        self._terms = clean
        self._nvars = nvars
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict, nvars: int) -> "LaurentPoly":
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._nvars = nvars
        obj._hash = None
        return obj

    @classmethod
    def zero(cls, nvars: int) -> "LaurentPoly":
        return cls._raw({}, nvars)

    @classmethod
    def constant(cls, c: int, nvars: int) -> "LaurentPoly":
        return cls._raw({(0,) * nvars: int(c)} if c else {}, nvars)

    @classmethod
    def monomial(cls, exponent: Iterable[int], coeff: int = 1) -> "LaurentPoly":
        e = tuple(exponent)
        return cls._raw({e: int(coeff)} if coeff else {}, len(e))

    @property
    def nvars(self) -> int:
        return self._nvars

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def coeff(self, exponent) -> int:
        return self._terms.get(tuple(exponent), 0)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.constant(other, self._nvars)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._nvars == other._nvars and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._nvars, frozenset(self._terms.items())))
        return self._hash

    def _coerce(self, other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            if other._nvars != self._nvars:
                raise ValueError("polynomials live on lattices of different rank")
            return other
        if isinstance(other, int):
            return LaurentPoly.constant(other, self._nvars)
        raise TypeError(f"cannot combine LaurentPoly with {type(other).__name__}")

    def __add__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        out = dict(self._terms)
        for e, c in other._terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return LaurentPoly._raw(out, self._nvars)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw({e: -c for e, c in self._terms.items()}, self._nvars)

    def __sub__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return LaurentPoly.zero(self._nvars)
            return LaurentPoly._raw({e: c * other for e, c in self._terms.items()}, self._nvars)
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return LaurentPoly._raw(kernels.laurent_mul(self._terms, other._terms), self._nvars)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are only defined for monomials")
        result = LaurentPoly.constant(1, self._nvars)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def star(self) -> "LaurentPoly":
        return LaurentPoly._raw(
            {tuple(-x for x in e): c for e, c in self._terms.items()}, self._nvars
        )

    def rank(self) -> int:
        return sum(self._terms.values())

    def act(self, matrix) -> "LaurentPoly":
        """Apply an integer matrix to every exponent (Weyl group action)."""
        out: dict = {}
        for e, c in self._terms.items():
            ne = tuple(sum(r[j] * e[j] for j in range(len(e))) for r in matrix)
            v = out.get(ne, 0) + c
            if v:
                out[ne] = v
            else:
                out.pop(ne, None)
        return LaurentPoly._raw(out, self._nvars)

    def sorted_terms(self):
        return sorted(self._terms.items(), reverse=True)

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"LaurentPoly({format_poly(self)!r})"


def format_poly(f: LaurentPoly) -> str:
    """Render as ``c*x^(a,b) + ...`` with exponents in descending order."""
    if not f:
        return "0"
    parts = []
    for e, c in f.sorted_terms():
        mono = "x^(" + ",".join(str(x) for x in e) + ")"
        if c == 1:
            body = mono
        elif c == -1:
            body = "-" + mono
        else:
            body = f"{c}*{mono}"
        parts.append(body)
    return " + ".join(parts).replace("+ -", "- ")


_TERM = re.compile(r"\s*([+-])?\s*(\d+)?\s*\*?\s*(x\^\(([-\d,\s]*)\))?")


def parse_poly(text: str, nvars: int) -> LaurentPoly:
    """Inverse of :func:`format_poly`."""
    text = text.strip()
    if text == "0":
        return LaurentPoly.zero(nvars)
    terms: dict = {}
    pos = 0
    while pos < len(text):
        m = _TERM.match(text, pos)
        if not m or m.end() == pos or (m.group(2) is None and m.group(3) is None):
            raise ValueError(f"cannot parse polynomial near {text[pos:]!r}")
        sign = -1 if m.group(1) == "-" else 1
        c = int(m.group(2)) if m.group(2) else 1
        if m.group(3):
            body = m.group(4).strip()
            e = tuple(int(x) for x in body.split(",")) if body else ()
        else:
            e = (0,) * nvars
        if len(e) != nvars:
            raise ValueError(f"exponent {e} has wrong length (expected {nvars})")
        terms[e] = terms.get(e, 0) + sign * c
        pos = m.end()
    return LaurentPoly(terms, nvars)


def star(f: LaurentPoly) -> LaurentPoly:
    """Dualization: invert every variable."""
    return f.star()


def rank(f: LaurentPoly) -> int:
    """Augmentation (sum of coefficients); the dimension for characters."""
    return f.rank()


def demazure(datum: RootDatum, i: int, f: LaurentPoly) -> LaurentPoly:
    """``(f - x^{-alpha_i} s_i f) / (1 - x^{-alpha_i})``, computed exactly."""
    root = datum.simple_root(i)
    return LaurentPoly._raw(kernels.demazure_terms(f._terms, i, root), f.nvars)


def check_demazure_division(datum: RootDatum, i: int, f: LaurentPoly) -> LaurentPoly:
    """Demazure operator with the defining division verified by multiplication.

    Slower than :func:`demazure`; used in tests and on request.
    """
    g = demazure(datum, i, f)
    neg_root = LaurentPoly.monomial(tuple(-x for x in datum.simple_root(i)))
    sf = f.act(datum.simple_reflection_matrices[i])
    lhs = g * (1 - neg_root)
    rhs = f - neg_root * sf
    assert lhs == rhs, f"Demazure division not exact for {f}"
    return g


def _check_dominant(datum: RootDatum, weight) -> tuple:
    weight = tuple(int(x) for x in weight)
    if len(weight) != datum.rank:
        raise ValueError(f"weight {weight} has wrong length for rank {datum.rank}")
    if any(x < 0 for x in weight):
        raise ValueError(f"weight {weight} is not dominant")
    return weight


def character(datum: RootDatum, weight) -> LaurentPoly:
    """Irreducible character with the given dominant highest weight.

    Demazure character formula: apply the Demazure operators along a reduced
    word of the longest element to ``x^weight``.
    """
    weight = _check_dominant(datum, weight)
    w0 = longest_element(datum)
    terms = {weight: 1}
    for i in reversed(w0.word):
        terms = kernels.demazure_terms(terms, i, datum.simple_root(i))
    return LaurentPoly._raw(terms, datum.rank)


def weyl_dimension(datum: RootDatum, weight) -> int:
    """Weyl dimension formula, evaluated in exact rational arithmetic."""
    weight = _check_dominant(datum, weight)
    num = Fraction(1)
    for c in datum.positive_coroots:
        num *= Fraction(sum((w + 1) * x for w, x in zip(weight, c)), sum(c))
    assert num.denominator == 1
    return int(num)


def reduced_character(datum: RootDatum, i: int) -> LaurentPoly:
    """``chi(omega_i) - dim``: the rank-zero class of a basic representation."""
    chi = character(datum, datum.fundamental_weight(i))
    return chi - chi.rank()


def is_lex_positive(e) -> bool:
    for x in e:
        if x:
            return x > 0
    return False


def split_self_dual(f: LaurentPoly) -> LaurentPoly:
    """Return ``g`` with ``g + star(g) == f`` for self-dual ``f``.

    ``g`` keeps half the constant term and the terms whose exponent is
    lexicographically positive.
    """
    if f.star() != f:
        raise ValueError("split_self_dual: polynomial is not self-dual")
    zero = (0,) * f.nvars
    c0 = f.coeff(zero)
    if c0 % 2:
        raise ValueError(
            f"split_self_dual: constant term {c0} is odd (class is nonzero in h+)"
        )
    out = {e: c for e, c in f.items() if is_lex_positive(e)}
    if c0:
        out[zero] = c0 // 2
    return LaurentPoly._raw(out, f.nvars)


def split_anti_self_dual(f: LaurentPoly) -> LaurentPoly:
    """Return ``g`` with ``g - star(g) == f`` for anti-self-dual ``f``."""
    if f.star() != -f:
        raise ValueError("split_anti_self_dual: polynomial is not anti-self-dual")
    assert not f.coeff((0,) * f.nvars)
    return LaurentPoly._raw(
        {e: c for e, c in f.items() if is_lex_positive(e)}, f.nvars
    )

"""Strong Groebner bases over the integers and finite Laurent quotients.

Monomials are packed into single Python ints.  The packed value holds the
order key (a nonnegative integer weight matrix applied to the exponents)
in its high fields and the raw exponents in its low fields, each field
``width`` bits wide.  Because every field is linear in the exponents:

* comparing packed ints compares monomials in the chosen order,
* multiplying monomials is integer addition,
* ``a | b`` is a single subtract-and-mask test on the exponent fields, using
  the top bit of each field as a borrow guard.

Buchberger's algorithm over a Euclidean domain adds, for every critical
pair, the S-polynomial and (when neither leading coefficient divides the
other) the gcd-polynomial; reduction replaces a coefficient by its
symmetric remainder modulo a reducer's leading coefficient.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass, field

from . import kernels
from .intmat import smith_normal_form
from .laurent import LaurentPoly

__all__ = [
    "MonomialOrder",
    "GroebnerBasis",
    "groebner_basis",
    "LaurentQuotient",
    "QuotientError",
    "ORDERS",
]

ORDERS = ("grevlex", "lex")


class QuotientError(RuntimeError):
    """The quotient is not a finite free abelian group (or is too big)."""


class MonomialOrder:
    def __init__(self, nvars: int, name: str = "grevlex", width: int = 16):
        if name not in ORDERS:
            raise ValueError(f"unknown monomial order {name!r}; choose from {ORDERS}")
        self.nvars = nvars
        self.name = name
        self.width = width
        if name == "grevlex":
            # (deg, deg - e_n, deg - e_n - e_{n-1}, ...) is equivalent to grevlex
            rows = [[1] * (nvars - k) + [0] * k for k in range(nvars)]
        else:
            rows = [[int(i == k) for i in range(nvars)] for k in range(nvars)]
        self.rows = rows
        self.fieldmask = (1 << width) - 1
        self.expmask = (1 << (width * nvars)) - 1
        self.guard = sum(1 << (width * k + width - 1) for k in range(nvars))
        self.max_exp = (1 << (width - 1)) // max(nvars, 1) - 1

    def pack(self, exps) -> int:
        w = self.width
        n = self.nvars
        v = 0
        for row in self.rows:
            v = (v << w) | sum(r * e for r, e in zip(row, exps))
        for e in exps:
            if e < 0 or e > self.max_exp:
                raise OverflowError(f"exponent {e} out of range for packed monomials")
            v = (v << w) | e
        return v if n else 0

    def unpack(self, m: int) -> tuple[int, ...]:
        w = self.width
        n = self.nvars
        fm = self.fieldmask
        return tuple((m >> (w * (n - 1 - i))) & fm for i in range(n))

    def divides(self, a: int, b: int) -> bool:
        g = self.guard
        em = self.expmask
        return (((b & em) | g) - (a & em)) & g == g

    def lcm(self, a: int, b: int) -> int:
        return self.pack([max(x, y) for x, y in zip(self.unpack(a), self.unpack(b))])

    def coprime(self, a: int, b: int) -> bool:
        return all(not (x and y) for x, y in zip(self.unpack(a), self.unpack(b)))

    def degree(self, m: int) -> int:
        return sum(self.unpack(m))


@dataclass
class _Elem:
    terms: list  # [(monomial, coeff)] in descending monomial order

    @property
    def lm(self) -> int:
        return self.terms[0][0]

    @property
    def lc(self) -> int:
        return self.terms[0][1]

    @property
    def tail(self) -> list:
        return self.terms[1:]


def _to_elem(d: dict) -> _Elem | None:
    if not d:
        return None
    terms = sorted(d.items(), reverse=True)
    if terms[0][1] < 0:
        terms = [(m, -c) for m, c in terms]
    return _Elem(terms)


@dataclass
class GroebnerBasis:
    order: MonomialOrder
    elements: list = field(default_factory=list)  # list of _Elem
    stats: dict = field(default_factory=dict)

    def _reducer_lists(self):
        return (
            [e.lm for e in self.elements],
            [e.lc for e in self.elements],
            [e.tail for e in self.elements],
        )

    def reduce(self, poly: dict) -> dict:
        lms, lcs, tails = self._reducer_lists()
        o = self.order
        return kernels.reduce_poly(poly, lms, lcs, tails, o.expmask, o.guard, True)

    @property
    def leading_monomials(self) -> list[int]:
        return [e.lm for e in self.elements]

    @property
    def leading_coefficients(self) -> list[int]:
        return [e.lc for e in self.elements]

    def polys(self) -> list[dict]:
        return [dict(e.terms) for e in self.elements]


def _mul_term(terms, shift, coeff):
    return {m + shift: c * coeff for m, c in terms}


def _add_into(out: dict, other: dict):
    for m, c in other.items():
        v = out.get(m, 0) + c
        if v:
            out[m] = v
        else:
            out.pop(m, None)


def groebner_basis(polys: list[dict], order: MonomialOrder, max_pairs: int = 2_000_000) -> GroebnerBasis:
    """Reduced strong Groebner basis of the ideal generated by ``polys``.

    An element whose leading term becomes divisible (monomial and
    coefficient) by a newer element's leading term is retired and its
    remainder queued again; pairs touching retired elements are dropped.
    """
    gb = GroebnerBasis(order)
    elems: list[_Elem] = []
    active: list[bool] = []
    pairs: list = []
    done: set = set()
    todo: list[dict] = []
    npairs = 0
    skipped = 0
    counter = 0
    red_cache = None

    def reducers():
        idx = [k for k in range(len(elems)) if active[k]]
        idx.sort(key=lambda k: (abs(elems[k].lc), len(elems[k].terms)))
        return ([elems[k].lm for k in idx], [elems[k].lc for k in idx],
                [elems[k].tail for k in idx])

    def add(poly: dict):
        nonlocal red_cache, counter
        if red_cache is None:
            red_cache = reducers()
        lms, lcs, tails = red_cache
        r = kernels.reduce_poly(poly, lms, lcs, tails, order.expmask, order.guard, True)
        e = _to_elem(r)
        if e is None:
            return
        k = len(elems)
        for i, f in enumerate(elems):
            if active[i] and f.lc % e.lc == 0 and order.divides(e.lm, f.lm):
                active[i] = False
                todo.append(dict(f.terms))
        elems.append(e)
        active.append(True)
        red_cache = None
        for i in range(k):
            if active[i]:
                counter += 1
                heapq.heappush(pairs, (order.lcm(elems[i].lm, e.lm), counter, i, k))

    def drain():
        while todo:
            add(todo.pop())

    for p in polys:
        add(dict(p))
        drain()

    while pairs:
        lcm, _, i, j = heapq.heappop(pairs)
        if not (active[i] and active[j]):
            continue
        npairs += 1
        if npairs > max_pairs:
            raise QuotientError("Groebner computation exceeded the pair budget")
        f, g = elems[i], elems[j]
        a, b = f.lc, g.lc
        if abs(a) == 1 and abs(b) == 1 and order.coprime(f.lm, g.lm):
            done.add((i, j))
            skipped += 1
            continue
        l_ab = a * b // math.gcd(a, b)
        sf, sg = lcm - f.lm, lcm - g.lm
        if _chain_skip(elems, active, done, i, j, lcm, l_ab, order):
            skipped += 1
        else:
            s = _mul_term(f.terms, sf, l_ab // a)
            _add_into(s, _mul_term(g.terms, sg, -(l_ab // b)))
            add(s)
            drain()
        if a % b and b % a:
            gcd, x, y = _xgcd(a, b)
            gp = _mul_term(f.terms, sf, x)
            _add_into(gp, _mul_term(g.terms, sg, y))
            add(gp)
            drain()
        done.add((i, j))

    final = [e for e, alive in zip(elems, active) if alive]
    gb.elements = _minimalize(final, order)
    gb.stats = {"pairs": npairs, "skipped": skipped, "raw_size": len(elems),
                "size": len(gb.elements)}
    return gb


def _chain_skip(elems, active, done, i, j, lcm, l_ab, order) -> bool:
    """Chain criterion on terms: some ``h`` with ``lt(h) | l_ab * lcm``
    whose pairs with both ``f`` and ``g`` are already treated."""
    for k, h in enumerate(elems):
        if k == i or k == j or not active[k]:
            continue
        if l_ab % h.lc or not order.divides(h.lm, lcm):
            continue
        pik = (min(i, k), max(i, k))
        pjk = (min(j, k), max(j, k))
        if pik in done and pjk in done:
            return True
    return False


def _xgcd(a, b):
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        return -a, -x0, -y0
    return a, x0, y0


def _minimalize(elems: list[_Elem], order: MonomialOrder) -> list[_Elem]:
    keep: list[_Elem] = []
    for k, e in enumerate(elems):
        redundant = False
        for l, h in enumerate(elems):
            if l == k:
                continue
            if order.divides(h.lm, e.lm) and e.lc % h.lc == 0:
                if h.lm != e.lm or abs(h.lc) != abs(e.lc) or l < k:
                    redundant = True
                    break
        if not redundant:
            keep.append(e)
    keep.sort(key=lambda e: e.lm)
    # reduce tails against the other elements
    out = []
    for k, e in enumerate(keep):
        others = [h for l, h in enumerate(keep) if l != k]
        lms = [h.lm for h in others]
        lcs = [h.lc for h in others]
        tails = [h.tail for h in others]
        tail = kernels.reduce_poly(dict(e.tail), lms, lcs, tails, order.expmask, order.guard, True)
        terms = [(e.lm, e.lc)] + sorted(tail.items(), reverse=True)
        out.append(_Elem(terms))
    return out


class LaurentQuotient:
    """Finite quotient ``Z[x^{+-1}] / (generators)`` with its involution.

    The Laurent ring in ``n`` variables is presented as
    ``Z[x_1..x_n, y_1..y_n] / (x_i y_i - 1)`` and a strong Groebner basis is
    computed.  When every leading coefficient is a unit, the standard
    monomials form a Z-basis.  Otherwise the quotient is presented on the
    monomials not covered by a unit leading term, and a Smith normal form
    either exhibits a Z-basis or proves torsion (:class:`QuotientError`).

    ``sigma`` is the matrix of inversion ``x -> x^{-1}`` on the basis
    (column ``j`` is the image of basis element ``j``).
    """

    def __init__(self, nvars: int, generators: list[LaurentPoly], order: str = "grevlex",
                 max_rank: int = 100_000):
        self.nvars = nvars
        self.generators = list(generators)
        self.order_name = order
        self.order = MonomialOrder(2 * nvars, order)
        polys = []
        for i in range(nvars):
            ex = [0] * (2 * nvars)
            ex[i] = ex[nvars + i] = 1
            polys.append({self.order.pack(ex): 1, self.order.pack([0] * (2 * nvars)): -1})
        for g in self.generators:
            if g.nvars != nvars:
                raise ValueError("generator lives on a lattice of the wrong rank")
            polys.append(self._pack_poly(g))
        self.gb = groebner_basis(polys, self.order)
        self.support = self._uncovered_monomials(max_rank)
        self._index = {m: k for k, m in enumerate(self.support)}
        self._present()
        self._sigma = None
        self._mult = None

    # -- conversions -------------------------------------------------------
    def _pack_poly(self, f: LaurentPoly) -> dict:
        out: dict = {}
        for e, c in f.items():
            ex = [max(x, 0) for x in e] + [max(-x, 0) for x in e]
            m = self.order.pack(ex)
            out[m] = out.get(m, 0) + c
        return {m: c for m, c in out.items() if c}

    def _laurent_exponent(self, m: int) -> tuple[int, ...]:
        ex = self.order.unpack(m)
        n = self.nvars
        return tuple(ex[i] - ex[n + i] for i in range(n))

    def _uncovered_monomials(self, max_rank: int) -> list[int]:
        """Monomials not divisible by any leading monomial with unit coefficient."""
        o = self.order
        unit_lms = [e.lm for e in self.gb.elements if abs(e.lc) == 1]
        zero = o.pack([0] * o.nvars)
        if any(lm == zero for lm in unit_lms):
            return []
        units = [o.pack([int(i == k) for i in range(o.nvars)]) for k in range(o.nvars)]
        seen = {zero}
        frontier = [zero]
        while frontier:
            nxt = []
            for m in frontier:
                for u in units:
                    mm = m + u
                    if mm in seen or any(o.divides(lm, mm) for lm in unit_lms):
                        continue
                    seen.add(mm)
                    if len(seen) > max_rank:
                        raise QuotientError(
                            f"quotient rank exceeds {max_rank} (not finite or too large)"
                        )
                    nxt.append(mm)
            frontier = nxt
        return sorted(seen)

    def _present(self):
        """Relations on the uncovered monomials, then a basis of the cokernel."""
        o = self.order
        elems = self.gb.elements
        rels = []
        for m in self.support:
            divs = [e for e in elems if o.divides(e.lm, m)]
            if not divs:
                continue
            g = min(divs, key=lambda e: abs(e.lc))
            tail = self.gb.reduce(_mul_term(g.tail, m - g.lm, 1))
            row = [0] * len(self.support)
            row[self._index[m]] = g.lc
            for mm, c in tail.items():
                row[self._index[mm]] += c
            rels.append(row)
        self.nrelations = t = len(rels)
        n = len(self.support)
        self.monomial_basis = not rels
        if not rels:
            self._coord = None
            self.basis = [LaurentPoly.monomial(self._laurent_exponent(m)) for m in self.support]
            return
        rt = [[rels[i][j] for i in range(t)] for j in range(n)]
        snf = smith_normal_form(rt, t)
        if len(snf.invariants) != t or any(d != 1 for d in snf.invariants):
            tors = [d for d in snf.invariants if d != 1]
            raise QuotientError(f"quotient has torsion: invariant factors {tors}")
        # coordinates are the trailing entries of U v; basis vectors are the
        # matching columns of U^{-1}
        self._coord = snf.u[t:]
        self.basis = []
        for k in range(t, n):
            terms = {}
            for j in range(n):
                c = snf.uinv[j][k]
                if c:
                    terms[self._laurent_exponent(self.support[j])] = c
            self.basis.append(LaurentPoly(terms, self.nvars))

    @property
    def rank(self) -> int:
        return len(self.basis)

    def basis_poly(self, k: int) -> LaurentPoly:
        return self.basis[k]

    def normal_form(self, f: LaurentPoly) -> list[int]:
        """Coordinates of ``f`` in the Z-basis of the quotient."""
        r = self.gb.reduce(self._pack_poly(f))
        vec = [0] * len(self.support)
        for m, c in r.items():
            k = self._index.get(m)
            if k is None:
                raise QuotientError("normal form left a covered monomial")
            vec[k] = c
        if self._coord is None:
            return vec
        return [sum(x * y for x, y in zip(row, vec) if y) for row in self._coord]

    def to_poly(self, vec) -> LaurentPoly:
        out = LaurentPoly.zero(self.nvars)
        for k, c in enumerate(vec):
            if c:
                out = out + self.basis[k] * c
        return out

    @property
    def sigma(self) -> list[list[int]]:
        if self._sigma is None:
            n = self.rank
            cols = [self.normal_form(b.star()) for b in self.basis]
            self._sigma = [[cols[j][i] for j in range(n)] for i in range(n)]
        return self._sigma

    def multiply(self, a, b) -> list[int]:
        return self.normal_form(self.to_poly(a) * self.to_poly(b))

    def unit(self) -> list[int]:
        return self.normal_form(LaurentPoly.constant(1, self.nvars))

    def structure_constants(self) -> list[list[list[int]]]:
        """``mult[i][j]`` = coordinates of ``basis_i * basis_j`` (cached)."""
        if self._mult is None:
            n = self.rank
            mult = [[None] * n for _ in range(n)]
            for i in range(n):
                for j in range(i, n):
                    v = self.normal_form(self.basis[i] * self.basis[j])
                    mult[i][j] = mult[j][i] = v
            self._mult = mult
        return self._mult

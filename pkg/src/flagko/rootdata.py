"""Root data and Weyl groups of simply-connected semisimple compact Lie groups.

Conventions
-----------
* Nodes are numbered as in Bourbaki (Plates I-IX).  In particular B_n has
  its short simple root at node n, C_n its long simple root at node n, F_4 has
  long roots at nodes 1, 2, and G_2 has its *short* simple root at node 1.
* ``cartan[i][j] = <alpha_i^vee, alpha_j>``.  Column ``j`` therefore holds the
  fundamental-weight coordinates of the simple root ``alpha_j``.
* Weights are integer vectors in the fundamental-weight basis, so the simple
  reflection ``s_i`` acts by ``lam - lam[i] * (column i of cartan)``.
* Coroots are integer vectors in the simple-coroot basis; the pairing of a
  weight with a coroot is the plain dot product.

Indices are 0-based in code and 1-based in labels (``omega_1`` is index 0).
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from functools import cached_property

__all__ = [
    "SimpleType",
    "SemisimpleType",
    "RootDatum",
    "WeylElement",
    "GroupTooLarge",
    "DEFAULT_WEYL_CAP",
    "parse_type",
    "build_root_datum",
    "enumerate_weyl",
    "longest_element",
    "length_parity_counts",
    "weyl_order",
]

DEFAULT_WEYL_CAP = 200_000

_MIN_RANK = {"A": 1, "B": 2, "C": 3, "D": 4}
_EXCEPTIONAL_RANKS = {"E": (6, 7, 8), "F": (4,), "G": (2,)}


class GroupTooLarge(ValueError):
    """Raised when a Weyl group exceeds the enumeration cap."""

    def __init__(self, reached: int, cap: int):
        super().__init__(
            f"group too large: |W| >= {reached} exceeds cap {cap}"
        )
        self.reached = reached
        self.cap = cap


@dataclass(frozen=True, order=True)
class SimpleType:
    family: str
    rank: int

    def __post_init__(self):
        fam, n = self.family, self.rank
        if fam in _MIN_RANK:
            if not isinstance(n, int) or n < _MIN_RANK[fam]:
                raise ValueError(
                    f"invalid type {fam}{n}: {fam}_n needs n >= {_MIN_RANK[fam]}"
                )
        elif fam in _EXCEPTIONAL_RANKS:
            if n not in _EXCEPTIONAL_RANKS[fam]:
                allowed = ", ".join(f"{fam}{r}" for r in _EXCEPTIONAL_RANKS[fam])
                raise ValueError(f"invalid type {fam}{n}: only {allowed} exist")
        else:
            raise ValueError(f"unknown family {fam!r}")

    def __str__(self):
        return f"{self.family}{self.rank}"


@dataclass(frozen=True)
class SemisimpleType:
    """Ordered product of simple factors.

    The empty product is the trivial group; it is only produced by
    ``parse_type("trivial")`` and is accepted by the closed-form modules.
    """

    factors: tuple[SimpleType, ...]

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(self.factors))

    @property
    def rank(self) -> int:
        return sum(f.rank for f in self.factors)

    @property
    def is_trivial(self) -> bool:
        return not self.factors

    def __str__(self):
        return "x".join(str(f) for f in self.factors) if self.factors else "trivial"


_ALIASES = [
    (re.compile(r"SU\((\d+)\)$"), lambda m: _su(int(m.group(1)))),
    (re.compile(r"Spin\((\d+)\)$"), lambda m: _spin(int(m.group(1)))),
    (re.compile(r"Sp\((\d+)\)$"), lambda m: _sp(int(m.group(1)))),
]


def _su(n):
    if n < 2:
        raise ValueError(f"SU({n}) is not semisimple")
    return [SimpleType("A", n - 1)]


def _spin(n):
    # low-dimensional isomorphisms: Spin(3)=SU(2), Spin(4)=SU(2)^2,
    # Spin(5)=Sp(2), Spin(6)=SU(4)
    low = {3: [("A", 1)], 4: [("A", 1), ("A", 1)], 5: [("B", 2)], 6: [("A", 3)]}
    if n in low:
        return [SimpleType(*f) for f in low[n]]
    if n < 3:
        raise ValueError(f"Spin({n}) is not semisimple")
    return [SimpleType("B", (n - 1) // 2)] if n % 2 else [SimpleType("D", n // 2)]


def _sp(n):
    if n == 1:
        return [SimpleType("A", 1)]
    if n == 2:
        return [SimpleType("B", 2)]
    if n < 1:
        raise ValueError(f"Sp({n}) is not semisimple")
    return [SimpleType("C", n)]


def _parse_factor(token: str) -> list[SimpleType]:
    token = token.strip()
    for pattern, make in _ALIASES:
        m = pattern.match(token)
        if m:
            return make(m)
    m = re.fullmatch(r"\(?([A-G])_?(\d+)\)?", token)
    if not m:
        raise ValueError(f"cannot parse group type {token!r}")
    return [SimpleType(m.group(1), int(m.group(2)))]


def parse_type(text: str) -> SemisimpleType:
    """Parse strings such as ``"A3"``, ``"A1xA2"``, ``"SU(6)"``, ``"Spin(7)"``.

    Factors are separated by ``x``, ``*`` or ``×``.  ``"trivial"`` gives the
    empty product.
    """
    text = (text or "").strip()
    if not text:
        raise ValueError("empty type string")
    if text.lower() == "trivial":
        return SemisimpleType(())
    factors: list[SimpleType] = []
    for token in re.split(r"[x*×]", text):
        if not token.strip():
            raise ValueError(f"cannot parse group type {text!r}")
        factors.extend(_parse_factor(token))
    return SemisimpleType(tuple(factors))


def _simple_cartan(t: SimpleType) -> list[list[int]]:
    n = t.rank
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def link(i, j, aij=-1, aji=-1):
        a[i][j] = aij
        a[j][i] = aji

    fam = t.family
    if fam in "ABC":
        for i in range(n - 1):
            link(i, i + 1)
        if fam == "B":
            # alpha_n short: <alpha_n^vee, alpha_{n-1}> = -2
            link(n - 2, n - 1, -1, -2)
        elif fam == "C":
            link(n - 2, n - 1, -2, -1)
    elif fam == "D":
        for i in range(n - 2):
            link(i, i + 1)
        link(n - 3, n - 1)
    elif fam == "E":
        # 1-3-4-5-6-7-8 with 2 attached to 4
        link(0, 2)
        link(1, 3)
        for i in range(2, n - 1):
            link(i, i + 1)
    elif fam == "F":
        link(0, 1)
        link(1, 2, -1, -2)
        link(2, 3)
    elif fam == "G":
        # alpha_1 short, alpha_2 long
        link(0, 1, -3, -1)
    return a


def _simple_weyl_order(t: SimpleType) -> int:
    n = t.rank
    fam = t.family
    if fam == "A":
        return math.factorial(n + 1)
    if fam in "BC":
        return 2**n * math.factorial(n)
    if fam == "D":
        return 2 ** (n - 1) * math.factorial(n)
    return {("G", 2): 12, ("F", 4): 1152, ("E", 6): 51840,
            ("E", 7): 2903040, ("E", 8): 696729600}[(fam, n)]


def weyl_order(type_: SemisimpleType) -> int:
    """Closed-form |W| as the product of the factor orders."""
    return math.prod(_simple_weyl_order(f) for f in type_.factors)


def _matmul(a, b):
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(len(b[0])))
        for i in range(len(a))
    )


def _identity(n):
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


@dataclass(frozen=True)
class WeylElement:
    word: tuple[int, ...]
    matrix: tuple[tuple[int, ...], ...]

    @property
    def length(self) -> int:
        return len(self.word)

    def act(self, weight):
        return tuple(sum(r[j] * weight[j] for j in range(len(weight))) for r in self.matrix)


@dataclass(frozen=True)
class RootDatum:
    type: SemisimpleType
    cartan: tuple[tuple[int, ...], ...]
    positive_coroots: tuple[tuple[int, ...], ...]
    factor_offsets: tuple[int, ...] = field(default=())

    @property
    def rank(self) -> int:
        return len(self.cartan)

    @cached_property
    def simple_reflection_matrices(self) -> tuple:
        n = self.rank
        mats = []
        for i in range(n):
            # s_i(lam) = lam - lam[i] * col_i(cartan)
            m = [[int(r == c) for c in range(n)] for r in range(n)]
            for r in range(n):
                m[r][i] -= self.cartan[r][i]
            mats.append(tuple(tuple(row) for row in m))
        return tuple(mats)

    @cached_property
    def two_rho_covector(self) -> tuple[int, ...]:
        """``v[i] = <omega_i, sum of positive coroots>``."""
        n = self.rank
        return tuple(sum(c[i] for c in self.positive_coroots) for i in range(n))

    @property
    def rho(self) -> tuple[int, ...]:
        return (1,) * self.rank

    def simple_root(self, i: int) -> tuple[int, ...]:
        return tuple(self.cartan[r][i] for r in range(self.rank))

    def reflect(self, i: int, weight) -> tuple[int, ...]:
        k = weight[i]
        if k == 0:
            return tuple(weight)
        return tuple(w - k * self.cartan[r][i] for r, w in enumerate(weight))

    def fundamental_weight(self, i: int) -> tuple[int, ...]:
        return tuple(int(j == i) for j in range(self.rank))

    def node_label(self, i: int) -> str:
        """Label like ``"A2.omega1"`` naming factor and local node.

        Repeated factors are numbered: ``"A1#2.omega1"`` in ``A1xA1``.
        """
        factors = self.type.factors
        for k, f in enumerate(factors):
            start = self.factor_offsets[k]
            if start <= i < start + f.rank:
                prefix = ""
                if len(factors) > 1:
                    prefix = str(f)
                    if factors.count(f) > 1:
                        prefix += f"#{factors[:k + 1].count(f)}"
                    prefix += "."
                return f"{prefix}omega{i - start + 1}"
        raise IndexError(i)


def _positive_coroots(cartan) -> tuple[tuple[int, ...], ...]:
    n = len(cartan)
    simple = [tuple(int(j == i) for j in range(n)) for i in range(n)]
    seen = set(simple)
    frontier = list(simple)
    while frontier:
        nxt = []
        for c in frontier:
            for i in range(n):
                # s_i(c) = c - <alpha_i, c> alpha_i^vee
                p = sum(c[j] * cartan[j][i] for j in range(n))
                if p == 0:
                    continue
                d = list(c)
                d[i] -= p
                d = tuple(d)
                if d not in seen and all(x >= 0 for x in d) and any(d):
                    seen.add(d)
                    nxt.append(d)
        frontier = nxt
    return tuple(sorted(seen, key=lambda c: (sum(c), c)))


def build_root_datum(type_: SemisimpleType | str) -> RootDatum:
    if isinstance(type_, str):
        type_ = parse_type(type_)
    n = type_.rank
    cartan = [[0] * n for _ in range(n)]
    offsets = []
    off = 0
    for f in type_.factors:
        offsets.append(off)
        block = _simple_cartan(f)
        for i in range(f.rank):
            for j in range(f.rank):
                cartan[off + i][off + j] = block[i][j]
        off += f.rank
    cartan_t = tuple(tuple(r) for r in cartan)
    return RootDatum(type_, cartan_t, _positive_coroots(cartan_t), tuple(offsets))


def _times_reflection(m, i, terms):
    # (M s_i) differs from M only in column i: col_i - sum_k A[k][i] col_k
    rows = []
    for row in m:
        r = list(row)
        r[i] = row[i] - sum(a * row[k] for k, a in terms)
        rows.append(tuple(r))
    return tuple(rows)


def enumerate_weyl(datum: RootDatum, cap: int = DEFAULT_WEYL_CAP) -> list[WeylElement]:
    """All Weyl group elements, sorted by ``(length, word)``.

    Breadth-first over right multiplication by simple reflections; elements
    are identified by their matrices, and the first word reaching an element
    is kept (so words are reduced).
    """
    n = datum.rank
    ident = _identity(n)
    col_terms = [
        [(k, datum.cartan[k][i]) for k in range(n) if datum.cartan[k][i]]
        for i in range(n)
    ]
    seen = {ident}
    out = [WeylElement((), ident)]
    frontier = [out[0]]
    while frontier:
        nxt = []
        for w in frontier:
            for i in range(n):
                m = _times_reflection(w.matrix, i, col_terms[i])
                if m in seen:
                    continue
                seen.add(m)
                if len(seen) > cap:
                    raise GroupTooLarge(len(seen), cap)
                nxt.append(WeylElement(w.word + (i,), m))
        nxt.sort(key=lambda e: e.word)
        out.extend(nxt)
        frontier = nxt
    return out


def longest_element(datum: RootDatum) -> WeylElement:
    """Longest Weyl element via a walk from rho to the antidominant chamber.

    At each step reflect in the first simple root on which the current vector
    is positive; each step raises the length by one, so the walk stops after
    exactly ``#positive roots`` steps.
    """
    n = datum.rank
    v = datum.rho
    word: list[int] = []
    while True:
        i = next((k for k in range(n) if v[k] > 0), None)
        if i is None:
            break
        v = datum.reflect(i, v)
        word.append(i)
    # the walk computes s_{i_k} ... s_{i_1}; w0 is an involution, so the
    # reversed word is also a reduced word for it
    word.reverse()
    m = _identity(n)
    for i in word:
        m = _matmul(m, datum.simple_reflection_matrices[i])
    return WeylElement(tuple(word), m)


def length_parity_counts(datum: RootDatum, cap: int = DEFAULT_WEYL_CAP) -> tuple[int, int]:
    elems = enumerate_weyl(datum, cap)
    even = sum(1 for w in elems if w.length % 2 == 0)
    return even, len(elems) - even

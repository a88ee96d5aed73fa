"""Tate cohomology of Z/2 acting on free abelian groups of finite rank.

For an involution ``sigma`` on ``Z^r``::

    h+ = ker(1 - sigma) / im(1 + sigma)
    h- = ker(1 + sigma) / im(1 - sigma)

Both are elementary abelian 2-groups.  Two routes compute them together
with a map sending a cocycle to its class:

``snf``
    a saturated kernel basis and a Smith normal form of the image inside
    that kernel.  Exact but the Hermite steps blow up on large matrices.
``parity``
    mod 2 linear algebra only.  With ``N = ker(1 + sigma) mod 2`` and lifts
    ``w`` of its elements, ``ker(1 - sigma)`` is spanned by ``im(1 + sigma)``
    and the vectors ``(1 + sigma) w / 2``.  Then ``h+ = N / (ker(1 + sigma)
    mod 2)`` and the class of a cocycle is its reduction mod 2.  Likewise
    for ``h-`` with the signs swapped.

Dimensions are cross-checked against ``rank_Q(1 +- sigma) - rank_F2(1 +-
sigma)``, which holds because every Z[Z/2]-lattice splits into trivial,
sign and free summands.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Callable, Sequence

from .intmat import (
    GF2Echelon,
    LatticeSolver,
    gf2_nullspace,
    to_bits,
    identity,
    kernel_basis,
    rank_mod2,
    rank_rational,
    smith_normal_form,
    transpose,
)
from .laurent import LaurentPoly, format_poly, parse_poly, split_self_dual

__all__ = [
    "InvolutiveModule",
    "InvolutiveRing",
    "TateResult",
    "TateRing",
    "tate_cohomology",
    "tate_dims_by_rank",
    "TATE_METHODS",
    "tate_ring",
    "exterior_check",
    "ExteriorReport",
    "swap_module",
    "TransferFixture",
    "TransferReport",
    "principal_ideal_transfer",
    "predicted_dims",
    "quotient_ring",
    "witness",
]


def _matvec(m, v):
    return [sum(a * b for a, b in zip(row, v) if b) for row in m]


@dataclass(frozen=True)
class InvolutiveModule:
    """``Z^rank`` with an involution; ``sigma`` acts on column vectors."""

    rank: int
    sigma: tuple
    labels: tuple | None = None

    def __post_init__(self):
        sig = tuple(tuple(int(x) for x in row) for row in self.sigma)
        object.__setattr__(self, "sigma", sig)
        if len(sig) != self.rank or any(len(row) != self.rank for row in sig):
            raise ValueError(f"sigma must be {self.rank}x{self.rank}")
        n = self.rank
        for i in range(n):
            row = sig[i]
            for j in range(n):
                s = sum(row[k] * sig[k][j] for k in range(n) if row[k])
                if s != (i == j):
                    raise ValueError("sigma is not an involution (sigma^2 != 1)")
        if self.labels is not None:
            object.__setattr__(self, "labels", tuple(str(x) for x in self.labels))
            if len(self.labels) != n:
                raise ValueError("one label per basis element is required")

    def apply(self, v: Sequence[int]) -> list[int]:
        return _matvec(self.sigma, v)

    def direct_sum(self, other: "InvolutiveModule") -> "InvolutiveModule":
        n, m = self.rank, other.rank
        rows = [list(r) + [0] * m for r in self.sigma]
        rows += [[0] * n + list(r) for r in other.sigma]
        return InvolutiveModule(n + m, rows)

    def to_json(self) -> dict:
        out = {"rank": self.rank, "sigma": [list(r) for r in self.sigma]}
        if self.labels is not None:
            out["labels"] = list(self.labels)
        return out

    @classmethod
    def from_json(cls, data: dict) -> "InvolutiveModule":
        return cls(int(data["rank"]), data["sigma"], data.get("labels"))


def swap_module() -> InvolutiveModule:
    """The free rank-2 module ``Z[Z/2]``."""
    return InvolutiveModule(2, ((0, 1), (1, 0)))


class InvolutiveRing:
    """Commutative unital ring on ``Z^r`` whose involution is a ring map.

    Either full structure constants ``mult[i][j]`` are given, or a
    ``multiply`` callable on coordinate vectors (used for large quotients
    where the full table is never needed).
    """

    def __init__(self, module: InvolutiveModule, unit: Sequence[int],
                 mult=None, multiply: Callable | None = None):
        if mult is None and multiply is None:
            raise ValueError("either structure constants or a multiply callable is required")
        self.module = module
        self.unit = tuple(int(x) for x in unit)
        if len(self.unit) != module.rank:
            raise ValueError("unit has the wrong length")
        self.mult = None
        if mult is not None:
            self.mult = tuple(tuple(tuple(int(x) for x in v) for v in row) for row in mult)
        self._multiply = multiply

    @property
    def rank(self) -> int:
        return self.module.rank

    def multiply(self, a: Sequence[int], b: Sequence[int]) -> list[int]:
        if self._multiply is not None:
            return list(self._multiply(a, b))
        n = self.rank
        out = [0] * n
        for i, x in enumerate(a):
            if not x:
                continue
            row = self.mult[i]
            for j, y in enumerate(b):
                if y:
                    c = x * y
                    for k, z in enumerate(row[j]):
                        if z:
                            out[k] += c * z
        return out

    def structure_constants(self):
        if self.mult is None:
            n = self.rank
            e = identity(n)
            self.mult = tuple(tuple(tuple(self.multiply(e[i], e[j])) for j in range(n))
                              for i in range(n))
        return self.mult

    def validate(self) -> None:
        """Check commutativity, associativity, unit and the ring-map property
        on all basis pairs and triples.  Cost grows like ``rank**5``."""
        n = self.rank
        e = identity(n)
        sig = self.module
        for i in range(n):
            if self.multiply(self.unit, e[i]) != e[i]:
                raise ValueError(f"unit fails on basis element {i}")
            for j in range(n):
                p = self.multiply(e[i], e[j])
                if p != self.multiply(e[j], e[i]):
                    raise ValueError(f"multiplication not commutative on ({i}, {j})")
                if sig.apply(p) != self.multiply(sig.apply(e[i]), sig.apply(e[j])):
                    raise ValueError(f"sigma is not multiplicative on ({i}, {j})")
                for k in range(n):
                    if self.multiply(p, e[k]) != self.multiply(e[i], self.multiply(e[j], e[k])):
                        raise ValueError(f"multiplication not associative on ({i}, {j}, {k})")
        if sig.apply(list(self.unit)) != list(self.unit):
            raise ValueError("unit is not self-dual")

    def to_json(self) -> dict:
        return {
            "module": self.module.to_json(),
            "unit": list(self.unit),
            "mult": [[list(v) for v in row] for row in self.structure_constants()],
        }

    @classmethod
    def from_json(cls, data: dict) -> "InvolutiveRing":
        return cls(InvolutiveModule.from_json(data["module"]), data["unit"], data["mult"])

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)


@dataclass
class _Part:
    """One of ``h+`` or ``h-`` with its class map."""

    sign: int
    kernel: list  # saturated basis rows of ker(1 - sign*sigma)
    solver: LatticeSolver | None
    coord: list  # rows of U picking the Z/2 coordinates
    reps: list

    @property
    def dim(self) -> int:
        return len(self.reps)

    def classify(self, v: Sequence[int]) -> list[int]:
        if not self.coord:
            if self.solver is not None and self.solver.solve(list(v)) is None:
                raise ValueError("vector is not a cocycle")
            return []
        c = self.solver.solve(list(v))
        if c is None:
            raise ValueError("vector is not a cocycle")
        return [x % 2 for x in _matvec(self.coord, c)]


def _tate_part(sigma, n: int, sign: int) -> _Part:
    # cocycles: (1 - sign*sigma) v = 0 ; coboundaries: (1 + sign*sigma) w
    cyc = [[int(i == j) - sign * sigma[i][j] for j in range(n)] for i in range(n)]
    bnd = [[int(i == j) + sign * sigma[i][j] for j in range(n)] for i in range(n)]
    kern = kernel_basis(cyc, n)
    k = len(kern)
    if k == 0:
        return _Part(sign, [], None, [], [])
    solver = LatticeSolver(kern, n)
    images = transpose(bnd, n)  # columns of (1 + sign*sigma)
    coords = []
    for w in images:
        c = solver.solve(w)
        assert c is not None, "coboundary outside the cocycle lattice"
        if any(c):
            coords.append(c)
    # subgroup of Z^k spanned by coords; its columns-form SNF gives classes
    if coords:
        snf = smith_normal_form(transpose(coords, k), len(coords))
        inv = snf.invariants
    else:
        snf = None
        inv = []
    assert len(inv) == k, "coboundaries do not have full rank in the cocycles"
    assert all(d in (1, 2) for d in inv), f"Tate group is not elementary abelian: {inv}"
    idx = [i for i, d in enumerate(inv) if d == 2]
    coord = [snf.u[i] for i in idx]
    reps = []
    for i in idx:
        c = [snf.uinv[r][i] for r in range(k)]
        v = [0] * n
        for cj, row in zip(c, kern):
            if cj:
                for t, x in enumerate(row):
                    if x:
                        v[t] += cj * x
        reps.append(v)
    return _Part(sign, kern, solver, coord, reps)


class _ParityPart:
    """``h+`` or ``h-`` via the mod 2 description of the cocycle lattices."""

    def __init__(self, sigma, n: int, sign: int):
        self.sign = sign
        self.sigma = sigma
        cols = transpose(sigma, n)
        # (1 + sigma) and (1 - sigma) agree mod 2
        rows = [to_bits([int(i == j) + sigma[i][j] for j in range(n)]) for i in range(n)]
        null = gf2_nullspace(rows, n)
        lifts = [[(w >> j) & 1 for j in range(n)] for w in null]

        def half(sgn, w):
            # (1 + sgn*sigma) w / 2, exact
            sw = _matvec(sigma, w)
            v = [a + sgn * b for a, b in zip(w, sw)]
            assert all(x % 2 == 0 for x in v), "lift is not in the mod 2 kernel"
            return [x // 2 for x in v]

        ech = GF2Echelon()
        # reduction mod 2 of ker(1 + sign*sigma), the opposite cocycles
        for j in range(n):
            ech.insert(to_bits([int(i == j) - sign * c for i, c in enumerate(cols[j])]))
        for w in lifts:
            ech.insert(to_bits(half(-sign, w)))
        self.opposite_rank = len(ech)
        reps = []
        for w, wb in zip(lifts, null):
            if ech.insert(wb, 1 << len(reps)):
                reps.append(half(sign, w))
        self.null_dim = len(null)
        self.echelon = ech
        self.reps = reps

    @property
    def dim(self) -> int:
        return len(self.reps)

    def classify(self, v: Sequence[int]) -> list[int]:
        v = list(v)
        if [self.sign * x for x in _matvec(self.sigma, v)] != v:
            raise ValueError("vector is not a cocycle")
        rest, tag = self.echelon.reduce(to_bits(v))
        assert not rest, "cocycle reduction left the mod 2 kernel"
        return [(tag >> i) & 1 for i in range(self.dim)]


@dataclass
class TateResult:
    module: InvolutiveModule
    plus: _Part = field(repr=False)
    minus: _Part = field(repr=False)

    @property
    def dim_plus(self) -> int:
        return self.plus.dim

    @property
    def dim_minus(self) -> int:
        return self.minus.dim

    @property
    def dims(self) -> tuple[int, int]:
        return self.dim_plus, self.dim_minus

    @property
    def reps_plus(self) -> list:
        return self.plus.reps

    @property
    def reps_minus(self) -> list:
        return self.minus.reps

    @property
    def total_dim(self) -> int:
        return self.dim_plus + self.dim_minus

    def class_plus(self, v) -> list[int]:
        return self.plus.classify(v)

    def class_minus(self, v) -> list[int]:
        return self.minus.classify(v)

    def classify(self, v, parity: int) -> list[int]:
        """Class in ``h+ (+) h-`` as one bit vector; ``parity`` 0 means h+."""
        if parity == 0:
            return self.class_plus(v) + [0] * self.dim_minus
        return [0] * self.dim_plus + self.class_minus(v)

    def to_json(self) -> dict:
        return {
            "dim_plus": self.dim_plus,
            "dim_minus": self.dim_minus,
            "reps_plus": self.reps_plus,
            "reps_minus": self.reps_minus,
        }


TATE_METHODS = ("auto", "snf", "parity")
SNF_MAX_RANK = 48
SNF_MAX_ENTRY = 1000


def tate_cohomology(m: InvolutiveModule, method: str = "auto") -> TateResult:
    """``method="auto"`` uses the SNF route on small matrices with small
    entries (rank <= 48, entries <= 1000) and the parity route otherwise."""
    n = m.rank
    if method not in TATE_METHODS:
        raise ValueError(f"unknown method {method!r}; choose from {TATE_METHODS}")
    if method == "auto":
        small = n <= SNF_MAX_RANK and all(abs(x) <= SNF_MAX_ENTRY for r in m.sigma for x in r)
        method = "snf" if small else "parity"
    part = _tate_part if method == "snf" else _ParityPart
    res = TateResult(m, part(m.sigma, n, 1), part(m.sigma, n, -1))
    for v in res.reps_plus:
        assert m.apply(v) == v
    for v in res.reps_minus:
        assert m.apply(v) == [-x for x in v]
    return res


def tate_dims_by_rank(m: InvolutiveModule) -> tuple[int, int]:
    """Independent dimension count from ranks over Q and F2."""
    n = m.rank
    s = m.sigma
    p = [[int(i == j) + s[i][j] for j in range(n)] for i in range(n)]
    q = [[int(i == j) - s[i][j] for j in range(n)] for i in range(n)]
    return rank_rational(p) - rank_mod2(p), rank_rational(q) - rank_mod2(q)


class TateRing:
    """Multiplication table of ``h* = h+ (+) h-`` on the chosen classes.

    Basis index ``k < dim_plus`` is the k-th class of h+, the rest are the
    classes of h-.  ``entry(i, j)`` is the bit vector of the product; entries
    are computed on first use unless the table was filled eagerly.
    """

    def __init__(self, tate: TateResult, ring: InvolutiveRing):
        self.tate = tate
        self.ring = ring
        self.reps = [(v, 0) for v in tate.reps_plus] + [(v, 1) for v in tate.reps_minus]
        self._table: dict = {}

    @property
    def dim(self) -> int:
        return self.tate.total_dim

    def parity(self, k: int) -> int:
        return 0 if k < self.tate.dim_plus else 1

    def product_class(self, a: Sequence[int], b: Sequence[int], parity: int) -> list[int]:
        """Class of the ring product of two cocycles of known total parity."""
        prod = self.ring.multiply(a, b)
        img = self.ring.module.apply(prod)
        expect = prod if parity == 0 else [-x for x in prod]
        assert img == expect, "product of cocycles has the wrong parity"
        return self.tate.classify(prod, parity)

    def entry(self, i: int, j: int) -> list[int]:
        key = (min(i, j), max(i, j))
        hit = self._table.get(key)
        if hit is None:
            (a, pa), (b, pb) = self.reps[key[0]], self.reps[key[1]]
            hit = self._table[key] = self.product_class(a, b, pa ^ pb)
        return hit

    @property
    def table(self) -> list:
        d = self.dim
        return [[self.entry(i, j) for j in range(d)] for i in range(d)]

    def mul_bits(self, a: Sequence[int], b: Sequence[int]) -> list[int]:
        out = [0] * self.dim
        for i, x in enumerate(a):
            if x & 1:
                for j, y in enumerate(b):
                    if y & 1:
                        for k, z in enumerate(self.entry(i, j)):
                            out[k] ^= z
        return out

    def unit_bits(self) -> list[int]:
        return self.tate.classify(list(self.ring.unit), 0)


def tate_ring(r: InvolutiveRing, t: TateResult | None = None, eager: bool = True) -> TateRing:
    if t is None:
        t = tate_cohomology(r.module)
    tr = TateRing(t, r)
    if eager:
        tr.table  # fills every entry
    return tr


@dataclass
class ExteriorReport:
    classes: list  # bit vectors of the generator classes
    anti_self_dual: list  # per generator
    squares_zero: list  # per generator
    products_rank: int
    expected: int

    @property
    def independent(self) -> bool:
        return self.products_rank == self.expected

    @property
    def ok(self) -> bool:
        return all(self.anti_self_dual) and all(self.squares_zero) and self.independent


def exterior_check(tr: TateRing, gens: list[Sequence[int]]) -> ExteriorReport:
    """Check that anti-self-dual vectors generate an exterior algebra.

    Each generator must satisfy ``sigma(g) = -g``; its class must square to
    zero; and the ``2**N`` products of distinct generators must be linearly
    independent over Z/2 in ``h*``.  Products are formed in the ring and
    classified afterwards, which needs ``2**N - 1`` multiplications.
    """
    sig = tr.ring.module
    asd, sq, classes = [], [], []
    for g in gens:
        ok = sig.apply(g) == [-x for x in g]
        asd.append(ok)
        if not ok:
            classes.append(None)
            sq.append(False)
            continue
        classes.append(tr.tate.classify(g, 1))
        sq.append(not any(tr.product_class(g, g, 0)))
    n = len(gens)
    if not all(asd):
        return ExteriorReport(classes, asd, sq, 0, 1 << n)
    unit = list(tr.ring.unit)
    vecs = {0: unit}
    prods = [tr.tate.classify(unit, 0)]
    for mask in range(1, 1 << n):
        top = mask.bit_length() - 1
        rest = mask ^ (1 << top)
        if rest:
            vecs[mask] = tr.ring.multiply(vecs[rest], gens[top])
        else:
            vecs[mask] = list(gens[top])
        parity = bin(mask).count("1") & 1
        v = vecs[mask]
        if sig.apply(v) != (v if parity == 0 else [-x for x in v]):
            raise AssertionError("product of generators has the wrong parity")
        prods.append(tr.tate.classify(v, parity))
    return ExteriorReport(classes, asd, sq, rank_mod2(prods), 1 << n)


# -- principal ideals and regular sequences on Laurent fixtures -------------

SELF_DUAL = "self_dual"
DUAL_PAIR = "dual_pair"


@dataclass
class TransferFixture:
    """Generators of a star-ideal in ``Z[t_1^{+-1}, ..., t_n^{+-1}]``.

    JSON form::

        {"name": str, "nvars": int, "expect": "pass" | "fixture_error",
         "generators": [{"kind": "self_dual" | "dual_pair",
                         "poly": "x^(1,0) + x^(-1,0) - 2"}, ...]}

    A ``dual_pair`` entry ``f`` contributes ``f`` and ``star(f)`` to the
    sequence; a ``self_dual`` entry contributes itself.
    """

    name: str
    nvars: int
    generators: list  # [(kind, LaurentPoly)]
    expect: str = "pass"

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "nvars": self.nvars,
            "expect": self.expect,
            "generators": [{"kind": k, "poly": format_poly(f)} for k, f in self.generators],
        }

    @classmethod
    def from_json(cls, data: dict) -> "TransferFixture":
        n = int(data["nvars"])
        gens = []
        for g in data["generators"]:
            if g["kind"] not in (SELF_DUAL, DUAL_PAIR):
                raise ValueError(f"unknown generator kind {g['kind']!r}")
            gens.append((g["kind"], parse_poly(g["poly"], n)))
        return cls(data["name"], n, gens, data.get("expect", "pass"))

    def sequence(self) -> list[LaurentPoly]:
        out = []
        for kind, f in self.generators:
            out.append(f)
            if kind == DUAL_PAIR:
                out.append(f.star())
        return out


@dataclass
class TransferReport:
    name: str
    status: str  # "pass", "fail" or "fixture_error"
    errors: list
    predicted: tuple | None = None
    measured: tuple | None = None
    rank: int | None = None
    witnesses: list = field(default_factory=list)
    anti_self_dual_ok: bool | None = None
    squares_ok: bool | None = None
    exterior_ok: bool | None = None

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "status": self.status,
            "errors": list(self.errors),
            "predicted": list(self.predicted) if self.predicted else None,
            "measured": list(self.measured) if self.measured else None,
            "rank": self.rank,
            "witnesses": [format_poly(w) for w in self.witnesses],
            "anti_self_dual_ok": self.anti_self_dual_ok,
            "squares_ok": self.squares_ok,
            "exterior_ok": self.exterior_ok,
        }


def predicted_dims(ngens: int) -> tuple[int, int]:
    """Tate dimensions of an exterior algebra on ``ngens`` odd generators."""
    if ngens == 0:
        return 1, 0
    return 1 << (ngens - 1), 1 << (ngens - 1)


def witness(kind: str, f: LaurentPoly) -> LaurentPoly:
    """``u`` with ``u + star(u)`` equal to ``f * star(f)`` or to ``f``."""
    target = f * f.star() if kind == DUAL_PAIR else f
    u = split_self_dual(target)
    assert u + u.star() == target
    return u


def _check_hypotheses(fx: TransferFixture) -> list[str]:
    errs = []
    for k, (kind, f) in enumerate(fx.generators):
        if f.nvars != fx.nvars:
            errs.append(f"generator {k + 1} lives in {f.nvars} variables, not {fx.nvars}")
            continue
        if f.rank() != 0:
            errs.append(f"generator {k + 1} has rank {f.rank()}, not 0")
        if kind == SELF_DUAL and f.star() != f:
            errs.append(f"generator {k + 1} is declared self-dual but is not")
        if kind == DUAL_PAIR and f.star() == f:
            errs.append(f"generator {k + 1} is self-dual, so (f, f*) is not a regular sequence")
    length = len(fx.sequence())
    if length != fx.nvars:
        errs.append(
            f"sequence has length {length}; a regular sequence with finite quotient "
            f"in {fx.nvars} Laurent variables has length {fx.nvars}"
        )
    return errs


def principal_ideal_transfer(fx: TransferFixture, order: str = "grevlex",
                             max_rank: int = 5000) -> TransferReport:
    """Check the exterior-algebra prediction on one fixture.

    The ambient ring ``A = Z[t^{+-1}]`` has trivial Tate cohomology.  The
    quotient by the fixture's sequence is built as a finite free Z-module;
    failure to be finite and free is a hypothesis violation.  On the
    quotient the Tate dimensions must be ``2**(N-1)`` each, the split
    witnesses must be anti-self-dual there, their classes must square to
    zero and their ``2**N`` products must be independent.
    """
    from .groebner import LaurentQuotient, QuotientError

    errs = _check_hypotheses(fx)
    if errs:
        return TransferReport(fx.name, "fixture_error", errs)
    try:
        q = LaurentQuotient(fx.nvars, fx.sequence(), order=order, max_rank=max_rank)
    except QuotientError as exc:
        return TransferReport(fx.name, "fixture_error",
                              [f"quotient is not finite and free ({exc})"])
    ring = quotient_ring(q)
    t = tate_cohomology(ring.module)
    if t.dims != tate_dims_by_rank(ring.module):
        raise AssertionError("Tate dimensions disagree between the lattice and rank routes")
    n = len(fx.generators)
    pred = predicted_dims(n)
    wits = [witness(kind, f) for kind, f in fx.generators]
    tr = tate_ring(ring, t, eager=False)
    ext = exterior_check(tr, [q.normal_form(w) for w in wits])
    rep = TransferReport(fx.name, "pass", [], pred, t.dims, q.rank, wits,
                         all(ext.anti_self_dual), all(ext.squares_zero), ext.independent)
    if t.dims != pred:
        rep.errors.append(f"measured Tate dims {t.dims}, predicted {pred}")
    if not ext.ok:
        rep.errors.append("witness classes do not generate an exterior algebra")
    if rep.errors:
        rep.status = "fail"
    return rep


def quotient_ring(q) -> InvolutiveRing:
    """The involutive ring of a :class:`~flagko.groebner.LaurentQuotient`."""
    mod = InvolutiveModule(q.rank, q.sigma, [format_poly(b) for b in q.basis])
    return InvolutiveRing(mod, q.unit(), multiply=q.multiply)

"""Brute-force check of the Witt ring computation on explicit quotients.

``K^0(G/T)`` is built as ``Z[x^{+-1}] / (chi_1 - dim, ..., chi_n - dim)``
where ``chi_i`` are the fundamental characters.  Its rank must equal
``|W|``.  The Tate cohomology of the quotient is then computed from scratch
and compared with the exterior algebra predicted by the basic
representation counts.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from .flagwitt import generator_reps, witt_ring
from .groebner import ORDERS, LaurentQuotient
from .laurent import LaurentPoly, format_poly, parse_poly, reduced_character
from .reptypes import duality_permutation
from .rootdata import GroupTooLarge, RootDatum, build_root_datum, weyl_order
from .tate import (
    DUAL_PAIR,
    SELF_DUAL,
    InvolutiveRing,
    TransferFixture,
    TransferReport,
    exterior_check,
    principal_ideal_transfer,
    quotient_ring,
    tate_cohomology,
    tate_dims_by_rank,
    tate_ring,
)

__all__ = [
    "DEFAULT_ORACLE_CAP",
    "RankMismatch",
    "QuotientPresentation",
    "MainTheoremReport",
    "GeneratorReport",
    "build_quotient",
    "verify_main_theorem",
    "verify_generators",
    "oracle_report",
    "synthetic_fixtures",
    "run_fixtures",
]

DEFAULT_ORACLE_CAP = 200


class RankMismatch(AssertionError):
    """The quotient does not have rank |W|."""


def _datum(x) -> RootDatum:
    return x if isinstance(x, RootDatum) else build_root_datum(x)


@dataclass
class QuotientPresentation:
    datum: RootDatum
    quotient: LaurentQuotient
    ring: InvolutiveRing
    ideal_generators: list
    weyl_order: int

    @property
    def basis(self) -> list:
        return self.quotient.basis

    @property
    def rank(self) -> int:
        return self.quotient.rank

    @property
    def sigma(self):
        return self.quotient.sigma

    def normal_form(self, f: LaurentPoly) -> list[int]:
        return self.quotient.normal_form(f)


def build_quotient(datum, cap: int = DEFAULT_ORACLE_CAP, order: str = "grevlex") -> QuotientPresentation:
    datum = _datum(datum)
    if order not in ORDERS:
        raise ValueError(f"unknown monomial order {order!r}; choose from {ORDERS}")
    nw = weyl_order(datum.type)
    if nw > cap:
        raise GroupTooLarge(nw, cap)
    gens = [reduced_character(datum, i) for i in range(datum.rank)]
    # the dual of a reduced basic character is again one: lam* = chi_sigma(i)
    sigma = duality_permutation(datum)
    for i, g in enumerate(gens):
        if g.star() != gens[sigma[i]]:
            raise AssertionError(f"star of reduced character {i + 1} is not reduced character "
                                 f"{sigma[i] + 1}")
    q = LaurentQuotient(datum.rank, gens, order=order, max_rank=10 * nw + 16)
    if q.rank != nw:
        raise RankMismatch(f"{datum.type}: quotient has rank {q.rank}, expected |W| = {nw}")
    return QuotientPresentation(datum, q, quotient_ring(q), gens, nw)


@dataclass
class MainTheoremReport:
    type: str
    rank_W: int
    basis_size: int
    measured: tuple
    predicted: tuple
    N: int

    @property
    def passed(self) -> bool:
        return (self.measured == self.predicted
                and sum(self.measured) == 1 << self.N
                and self.basis_size == self.rank_W)

    def to_json(self) -> dict:
        return {
            "type": self.type,
            "rank_W": self.rank_W,
            "basis_size": self.basis_size,
            "tate": {"plus": self.measured[0], "minus": self.measured[1]},
            "predicted": {"plus": self.predicted[0], "minus": self.predicted[1]},
        }


def verify_main_theorem(datum, cap: int = DEFAULT_ORACLE_CAP, order: str = "grevlex",
                        presentation: QuotientPresentation | None = None) -> MainTheoremReport:
    datum = _datum(datum)
    p = presentation or build_quotient(datum, cap, order)
    t = tate_cohomology(p.ring.module)
    if t.dims != tate_dims_by_rank(p.ring.module):
        raise AssertionError("Tate dimensions disagree between the lattice and rank routes")
    w = witt_ring(datum)
    return MainTheoremReport(str(datum.type), p.weyl_order, p.rank, t.dims, w.tate_dims, w.N)


@dataclass
class GeneratorReport:
    type: str
    identities_ok: bool
    anti_self_dual: dict  # label -> bool
    squares_zero: dict  # label -> bool
    independent: bool
    failures: list = field(default_factory=list)

    @property
    def generators_ok(self) -> bool:
        return self.identities_ok and all(self.anti_self_dual.values())

    @property
    def squares_ok(self) -> bool:
        return all(self.squares_zero.values())

    @property
    def passed(self) -> bool:
        return self.generators_ok and self.squares_ok and self.independent


def verify_generators(datum, cap: int = DEFAULT_ORACLE_CAP, order: str = "grevlex",
                      presentation: QuotientPresentation | None = None) -> GeneratorReport:
    datum = _datum(datum)
    p = presentation or build_quotient(datum, cap, order)
    reps = generator_reps(datum)
    wr = witt_ring(datum)
    labels = {g.source: g.label for g in wr.generators}
    failures = []
    ident = True
    for _, i, f in reps.items():
        if f + f.star() != reps.targets[i]:
            ident = False
            failures.append(f"{labels[i]}: u + u* differs from its target")
        if p.normal_form(f + f.star()) != [0] * p.rank:
            failures.append(f"{labels[i]}: u + u* is not zero in the quotient")
    vecs = [p.normal_form(f) for _, _, f in reps.items()]
    tr = tate_ring(p.ring, eager=False)
    ext = exterior_check(tr, vecs)
    names = [labels[i] for _, i, _ in reps.items()]
    asd = dict(zip(names, ext.anti_self_dual))
    sq = dict(zip(names, ext.squares_zero))
    for n in names:
        if not asd[n]:
            failures.append(f"{n}: image is not anti-self-dual")
        elif not sq[n]:
            failures.append(f"{n}: class does not square to zero")
    if not ext.independent:
        failures.append(f"products of generator classes span {ext.products_rank} "
                        f"of {ext.expected} dimensions")
    return GeneratorReport(str(datum.type), ident, asd, sq, ext.independent, failures)


def oracle_report(type_string, cap: int = DEFAULT_ORACLE_CAP, order: str = "grevlex") -> dict:
    """Combined report in the CLI schema; ``passed`` is an extra key."""
    t0 = time.perf_counter()
    datum = _datum(type_string)
    p = build_quotient(datum, cap, order)
    main = verify_main_theorem(datum, presentation=p)
    gens = verify_generators(datum, presentation=p)
    out = main.to_json()
    out.update({
        "generators_ok": gens.generators_ok,
        "squares_ok": gens.squares_ok,
        "basis_ok": gens.independent,
        "failures": gens.failures,
        "passed": main.passed and gens.passed,
        "elapsed_ms": round((time.perf_counter() - t0) * 1000),
    })
    return out


def _fx(name, nvars, gens, expect="pass") -> TransferFixture:
    return TransferFixture(name, nvars, [(k, parse_poly(p, nvars)) for k, p in gens], expect)


def synthetic_fixtures() -> list[TransferFixture]:
    """Laurent fixtures for the principal-ideal and regular-sequence statements.

    Ambient rings are ``Z[t_1^{+-1}, ..., t_n^{+-1}]`` with ``t -> t^{-1}``,
    whose Tate cohomology is ``Z/2`` in degree +.  The last three fixtures
    violate a hypothesis on purpose.
    """
    return [
        _fx("zero-generators", 0, []),
        _fx("one-self-dual", 1, [(SELF_DUAL, "x^(1) + x^(-1) - 2")]),
        _fx("two-self-dual", 2, [(SELF_DUAL, "x^(1,0) + x^(-1,0) - 2"),
                                 (SELF_DUAL, "x^(0,1) + x^(0,-1) - 2")]),
        _fx("dual-pair", 2, [(DUAL_PAIR, "x^(1,0) + x^(-1,1) + x^(0,-1) - 3")]),
        _fx("mixed-three-variable", 3, [(DUAL_PAIR, "x^(1,0,0) + x^(-1,1,0) + x^(0,-1,0) - 3"),
                                        (SELF_DUAL, "x^(0,0,1) + x^(0,0,-1) - 2")]),
        _fx("self-dual-squared", 1, [(SELF_DUAL, "x^(2) + x^(-2) - 2")]),
        _fx("degenerate-pair", 2, [(DUAL_PAIR, "x^(1,1) - 1")], "fixture_error"),
        _fx("nonzero-rank", 1, [(SELF_DUAL, "x^(1) + x^(-1)")], "fixture_error"),
        _fx("short-sequence", 2, [(SELF_DUAL, "x^(1,0) + x^(-1,0) - 2")], "fixture_error"),
    ]


def run_fixtures(fixtures: list[TransferFixture] | None = None,
                 order: str = "grevlex") -> list[TransferReport]:
    if fixtures is None:
        fixtures = synthetic_fixtures()
    return [principal_ideal_transfer(fx, order, max_rank=400) for fx in fixtures]

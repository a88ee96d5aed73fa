"""Closed-form Witt rings, KO-groups and generator representatives of G/T.

The Witt ring of ``G/T`` is an exterior algebra over Z/2 with one generator
per basic representation up to duality::

    a_lam  (lam complex, one per dual pair)   degree 3
    b_mu   (mu real)                          degree 3
    c_nu   (nu quaternionic)                  degree 1

Degrees live in Z/4.  The degrees are taken from the statement of the
theorem and are not re-derived here; only the coarser Z/2 grading is
checked independently (by :mod:`flagko.oracle`).
"""

from __future__ import annotations

from dataclasses import dataclass

from .laurent import LaurentPoly, format_poly, reduced_character, split_self_dual
from .reptypes import BasicRepClassification, classify
from .rootdata import (
    DEFAULT_WEYL_CAP,
    RootDatum,
    SemisimpleType,
    SimpleType,
    build_root_datum,
    length_parity_counts,
)

__all__ = [
    "WittGenerator",
    "WittRingDescription",
    "KOGroups",
    "GeneratorReps",
    "witt_ring",
    "ko_groups",
    "generator_reps",
    "injectivity_classifier",
    "classifier_sweep",
    "INJECTIVE_TYPES",
    "coker_alpha",
    "exterior_degree_dims",
]

DEGREES = {"a": 3, "b": 3, "c": 1}

# the low-dimensional types listed in the injectivity statement
INJECTIVE_TYPES = frozenset({"A1", "A2", "A3", "A4", "A1xA1", "A1xA2", "A2xA2", "B2", "G2"})


def _datum(x) -> RootDatum:
    return x if isinstance(x, RootDatum) else build_root_datum(x)


@dataclass(frozen=True)
class WittGenerator:
    label: str
    kind: str  # "a", "b" or "c"
    source: int  # 0-based node of the basic representation
    degree: int

    def to_json(self) -> dict:
        return {"label": self.label, "kind": self.kind, "source": self.source + 1,
                "degree": self.degree}


def exterior_degree_dims(degrees) -> list[int]:
    """Z/2-dimensions by degree mod 4 of an exterior algebra."""
    dims = [1, 0, 0, 0]
    for d in degrees:
        dims = [dims[i] + dims[(i - d) % 4] for i in range(4)]
    return dims


@dataclass(frozen=True)
class WittRingDescription:
    type: SemisimpleType
    classification: BasicRepClassification
    generators: tuple

    @property
    def N(self) -> int:
        return len(self.generators)

    @property
    def total_dim(self) -> int:
        return 1 << self.N

    @property
    def degree_dims(self) -> list[int]:
        return exterior_degree_dims(g.degree for g in self.generators)

    @property
    def tate_dims(self) -> tuple[int, int]:
        """Predicted ``(dim h+, dim h-)``: even and odd degree parts."""
        d = self.degree_dims
        return d[0] + d[2], d[1] + d[3]

    def count(self, degree: int) -> int:
        return sum(1 for g in self.generators if g.degree == degree)

    def to_json(self) -> dict:
        c = self.classification
        return {
            "type": str(self.type),
            "b": {"c": c.b_C, "r": c.b_R, "h": c.b_H},
            "generators": [g.to_json() for g in self.generators],
            "degree_dims": self.degree_dims,
        }


def witt_ring(datum) -> WittRingDescription:
    datum = _datum(datum)
    c = classify(datum)
    gens = []
    for i in c.complex_primed:
        gens.append(WittGenerator(f"a[{datum.node_label(i)}]", "a", i, DEGREES["a"]))
    for i in c.real:
        gens.append(WittGenerator(f"b[{datum.node_label(i)}]", "b", i, DEGREES["b"]))
    for i in c.quaternionic:
        gens.append(WittGenerator(f"c[{datum.node_label(i)}]", "c", i, DEGREES["c"]))
    gens.sort(key=lambda g: g.source)
    return WittRingDescription(datum.type, c, tuple(gens))


@dataclass(frozen=True)
class KOGroups:
    """Additive structure of ``KO^j(G/T)`` for ``j`` in Z/8.

    ``free_ranks[j]`` and ``torsion[j]`` (Z/2-dimension) describe
    ``KO^j = Z^free (+) (Z/2)^torsion``.
    """

    type: SemisimpleType
    n0: int
    n2: int
    witt_dims: tuple
    k_rank: int
    k_odd: int = 0

    @property
    def free_ranks(self) -> list[int]:
        return [self.n0, 0, self.n2, 0, self.n0, 0, self.n2, 0]

    @property
    def torsion(self) -> list[int]:
        # KO^{2i} has W^{i+1} eta^2, KO^{2i+1} has W^{i+1} eta
        return [self.witt_dims[(j // 2 + 1) % 4] for j in range(8)]

    def describe(self, j: int) -> str:
        parts = []
        f, t = self.free_ranks[j % 8], self.torsion[j % 8]
        if f:
            parts.append("Z" if f == 1 else f"Z^{f}")
        if t:
            parts.append("Z/2" if t == 1 else f"(Z/2)^{t}")
        return " + ".join(parts) if parts else "0"

    def to_json(self) -> dict:
        return {
            "type": str(self.type),
            "ko": {"n0": self.n0, "n2": self.n2, "torsion_dims": self.torsion,
                   "groups": [self.describe(j) for j in range(8)]},
            "k_rank": self.k_rank,
        }


def ko_groups(datum, cap: int = DEFAULT_WEYL_CAP) -> KOGroups:
    """Cells of G/T are Schubert cells of real dimension ``2 * length(w)``."""
    datum = _datum(datum)
    even, odd = length_parity_counts(datum, cap)
    w = witt_ring(datum)
    return KOGroups(datum.type, even, odd, tuple(w.degree_dims), even + odd)


@dataclass(frozen=True)
class GeneratorReps:
    """Laurent representatives keyed by 0-based node.

    ``targets`` holds the right-hand sides: ``lam_bar * star(lam_bar)`` for
    u, the reduced character itself for v and w.
    """

    u_reps: dict
    v_reps: dict
    w_reps: dict
    targets: dict

    def items(self):
        """``(kind, node, rep)`` in node order, kinds ``a``, ``b``, ``c``."""
        out = [("a", i, f) for i, f in self.u_reps.items()]
        out += [("b", i, f) for i, f in self.v_reps.items()]
        out += [("c", i, f) for i, f in self.w_reps.items()]
        return sorted(out, key=lambda t: t[1])

    def check(self) -> bool:
        for _, i, f in self.items():
            if f + f.star() != self.targets[i]:
                return False
        return True

    def to_json(self) -> dict:
        return {
            "u": {str(i + 1): format_poly(f) for i, f in self.u_reps.items()},
            "v": {str(i + 1): format_poly(f) for i, f in self.v_reps.items()},
            "w": {str(i + 1): format_poly(f) for i, f in self.w_reps.items()},
        }


def generator_reps(datum) -> GeneratorReps:
    datum = _datum(datum)
    c = classify(datum)
    u, v, w, targets = {}, {}, {}, {}
    for i in c.complex_primed:
        lam = reduced_character(datum, i)
        targets[i] = lam * lam.star()
        u[i] = split_self_dual(targets[i])
    for i in c.real:
        targets[i] = reduced_character(datum, i)
        v[i] = split_self_dual(targets[i])
    for i in c.quaternionic:
        targets[i] = reduced_character(datum, i)
        w[i] = split_self_dual(targets[i])
    reps = GeneratorReps(u, v, w, targets)
    assert reps.check(), "split witnesses do not satisfy u + u* = target"
    return reps


def injectivity_classifier(datum) -> tuple[bool, int]:
    """``(b_C/2 + b_R + b_H <= 2, b_C/2 + b_R + b_H)``."""
    c = classify(_datum(datum))
    n = c.b_C // 2 + c.b_R + c.b_H
    return n <= 2, n


def _simple_types(max_rank: int) -> list[SimpleType]:
    out = []
    for fam, lo in (("A", 1), ("B", 2), ("C", 3), ("D", 4)):
        out.extend(SimpleType(fam, n) for n in range(lo, max_rank + 1))
    for fam, n in (("E", 6), ("E", 7), ("E", 8), ("F", 4), ("G", 2)):
        if n <= max_rank:
            out.append(SimpleType(fam, n))
    return out


def classifier_sweep(max_rank: int = 8, pair_max_rank: int = 2) -> list[tuple[str, bool, int]]:
    """Simple types up to ``max_rank`` and unordered pairs of simple types of
    rank at most ``pair_max_rank``."""
    types = [SemisimpleType((t,)) for t in _simple_types(max_rank)]
    small = _simple_types(pair_max_rank)
    for a in range(len(small)):
        for b in range(a, len(small)):
            types.append(SemisimpleType((small[a], small[b])))
    out = []
    for t in types:
        ok, n = injectivity_classifier(t)
        out.append((str(t), ok, n))
    return out


def coker_alpha(datum) -> list[int]:
    """Z/2-dimensions by degree of the cokernel of ``W*(T) = Z/2 -> W*(G/T)``."""
    d = witt_ring(datum).degree_dims
    d[0] -= 1
    return d

"""Complex, real and quaternionic basic representations.

The basic representations of a simply-connected group are the irreducibles
with fundamental highest weights.  Duality acts on them through
``omega_i -> -w0(omega_i)``.  A self-dual irreducible ``V_lam`` is of
quaternionic type exactly when ``<lam, 2 rho^vee>`` is odd, and of real type
otherwise; that parity is read off ``RootDatum.two_rho_covector``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .rootdata import (
    RootDatum,
    SemisimpleType,
    SimpleType,
    build_root_datum,
    longest_element,
)

__all__ = [
    "BasicRepClassification",
    "TableMismatch",
    "duality_permutation",
    "frobenius_schur_type",
    "classify",
    "table_one",
    "table_one_expected",
    "table_types",
]

REAL = "real"
QUATERNIONIC = "quaternionic"


class TableMismatch(AssertionError):
    """The computed counts disagree with the published closed forms."""


@dataclass(frozen=True)
class BasicRepClassification:
    type: SemisimpleType
    sigma: tuple[int, ...]
    dual_pairs: tuple[tuple[int, int], ...]
    real: tuple[int, ...]
    quaternionic: tuple[int, ...]

    @property
    def b_C(self) -> int:
        return 2 * len(self.dual_pairs)

    @property
    def b_R(self) -> int:
        return len(self.real)

    @property
    def b_H(self) -> int:
        return len(self.quaternionic)

    @property
    def counts(self) -> tuple[int, int, int]:
        return self.b_C, self.b_R, self.b_H

    @property
    def complex_primed(self) -> tuple[int, ...]:
        """One index from each dual pair (the smaller one)."""
        return tuple(i for i, _ in self.dual_pairs)

    def to_json(self) -> dict:
        return {
            "type": str(self.type),
            "b_C": self.b_C,
            "b_R": self.b_R,
            "b_H": self.b_H,
            # 1-based node numbers, matching the omega_i labels
            "dual_pairs": [[i + 1, j + 1] for i, j in self.dual_pairs],
            "real": [i + 1 for i in self.real],
            "quaternionic": [i + 1 for i in self.quaternionic],
        }


def duality_permutation(datum: RootDatum) -> tuple[int, ...]:
    """``sigma`` with ``-w0(omega_i) = omega_sigma(i)``."""
    w0 = longest_element(datum)
    n = datum.rank
    sigma = []
    for i in range(n):
        img = tuple(-x for x in w0.act(datum.fundamental_weight(i)))
        nz = [j for j, x in enumerate(img) if x]
        assert len(nz) == 1 and img[nz[0]] == 1, (
            f"-w0(omega_{i + 1}) = {img} is not a fundamental weight"
        )
        sigma.append(nz[0])
    assert all(sigma[sigma[i]] == i for i in range(n))
    return tuple(sigma)


def frobenius_schur_type(datum: RootDatum, i: int, sigma=None) -> str:
    if sigma is None:
        sigma = duality_permutation(datum)
    if sigma[i] != i:
        raise ValueError(f"omega_{i + 1} is not self-dual")
    return REAL if datum.two_rho_covector[i] % 2 == 0 else QUATERNIONIC


def classify(datum: RootDatum | SemisimpleType | str) -> BasicRepClassification:
    if not isinstance(datum, RootDatum):
        datum = build_root_datum(datum)
    sigma = duality_permutation(datum)
    pairs, real, quat = [], [], []
    for i, j in enumerate(sigma):
        if j != i:
            if i < j:
                pairs.append((i, j))
        elif frobenius_schur_type(datum, i, sigma) == REAL:
            real.append(i)
        else:
            quat.append(i)
    return BasicRepClassification(datum.type, sigma, tuple(pairs), tuple(real), tuple(quat))


def table_one_expected(t: SimpleType) -> tuple[int, int, int]:
    """Closed-form ``(b_C, b_R, b_H)`` for a simple type, row by row."""
    n = t.rank
    fam = t.family
    if fam == "A":
        if n % 2 == 0:
            return n, 0, 0
        return (n - 1, 0, 1) if n % 4 == 1 else (n - 1, 1, 0)
    if fam == "B":
        return (0, n - 1, 1) if n % 4 in (1, 2) else (0, n, 0)
    if fam == "C":
        return (0, (n - 1) // 2, (n + 1) // 2) if n % 2 else (0, n // 2, n // 2)
    if fam == "D":
        if n % 2:
            return 2, n - 2, 0
        return (0, n, 0) if n % 4 == 0 else (0, n - 2, 2)
    return {("E", 6): (4, 2, 0), ("E", 7): (0, 4, 3), ("E", 8): (0, 8, 0),
            ("F", 4): (0, 4, 0), ("G", 2): (0, 2, 0)}[(fam, n)]


def table_types(max_rank: int) -> list[SimpleType]:
    """Every simple row up to ``max_rank`` plus all exceptional types."""
    if max_rank < 1:
        raise ValueError("max_rank must be >= 1")
    out = []
    for fam, lo in (("A", 1), ("B", 2), ("C", 3), ("D", 4)):
        out.extend(SimpleType(fam, n) for n in range(lo, max_rank + 1))
    out.extend(SimpleType(f, n) for f, n in (("E", 6), ("E", 7), ("E", 8), ("F", 4), ("G", 2)))
    return out


def table_one(max_rank: int, check: bool = True) -> list[dict]:
    """Rows ``{type, b_C, b_R, b_H, dual_pairs, real, quaternionic}``.

    With ``check`` set, every row is compared against the closed forms and a
    :class:`TableMismatch` is raised on the first disagreement.
    """
    rows = []
    for t in table_types(max_rank):
        c = classify(SemisimpleType((t,)))
        if check and c.counts != table_one_expected(t):
            raise TableMismatch(
                f"{t}: computed {c.counts}, table gives {table_one_expected(t)}"
            )
        rows.append(c.to_json())
    return rows

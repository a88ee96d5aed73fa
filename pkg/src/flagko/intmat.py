"""Exact integer matrix algorithms: Hermite and Smith normal forms.

Matrices are lists of lists of Python ints (rows).  Nothing here reduces
modulo a prime; entries are arbitrary precision throughout.
"""

from __future__ import annotations

from dataclasses import dataclass

__all__ = [
    "identity",
    "transpose",
    "matmul",
    "matvec",
    "hnf",
    "kernel_basis",
    "LatticeSolver",
    "smith_normal_form",
    "SmithForm",
    "rank_rational",
    "rank_mod2",
    "to_bits",
    "gf2_nullspace",
    "GF2Echelon",
]


def identity(n: int) -> list[list[int]]:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def transpose(a: list[list[int]], ncols: int | None = None) -> list[list[int]]:
    if not a:
        return [[] for _ in range(ncols or 0)]
    return [list(col) for col in zip(*a)]


def matmul(a, b):
    bt = transpose(b, len(b[0]) if b else 0)
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def matvec(a, v):
    return [sum(x * y for x, y in zip(row, v)) for row in a]


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        return -a, -x0, -y0
    return a, x0, y0


def hnf(a: list[list[int]], transform: bool = False):
    """Row-style Hermite normal form ``H = U a``.

    ``H`` is in echelon form with positive pivots and entries above each
    pivot reduced into ``[0, pivot)``.  Returns ``(H, pivots)`` or, with
    ``transform``, ``(H, pivots, U)`` where ``U`` is unimodular.
    """
    m = len(a)
    n = len(a[0]) if m else 0
    h = [list(r) for r in a]
    u = identity(m) if transform else None
    pivots: list[int] = []
    r = 0
    for c in range(n):
        if r == m:
            break
        rows = [i for i in range(r, m) if h[i][c]]
        if not rows:
            continue
        # fold every nonzero entry of column c into row r by gcd steps
        if h[r][c] == 0:
            k = rows[0]
            h[r], h[k] = h[k], h[r]
            if u is not None:
                u[r], u[k] = u[k], u[r]
        for i in range(r + 1, m):
            b = h[i][c]
            if not b:
                continue
            a0 = h[r][c]
            if b % a0 == 0:
                q = b // a0
                hi, hr = h[i], h[r]
                for j in range(c, n):
                    hi[j] -= q * hr[j]
                if u is not None:
                    ui, ur = u[i], u[r]
                    for j in range(m):
                        ui[j] -= q * ur[j]
                continue
            g, x, y = _xgcd(a0, b)
            p, q = a0 // g, b // g
            hr, hi = h[r], h[i]
            h[r] = [x * s + y * t for s, t in zip(hr, hi)]
            h[i] = [p * t - q * s for s, t in zip(hr, hi)]
            if u is not None:
                ur, ui = u[r], u[i]
                u[r] = [x * s + y * t for s, t in zip(ur, ui)]
                u[i] = [p * t - q * s for s, t in zip(ur, ui)]
        if h[r][c] < 0:
            h[r] = [-x for x in h[r]]
            if u is not None:
                u[r] = [-x for x in u[r]]
        piv = h[r][c]
        for i in range(r):
            q = h[i][c] // piv
            if q:
                hi, hr = h[i], h[r]
                for j in range(c, n):
                    hi[j] -= q * hr[j]
                if u is not None:
                    ui, ur = u[i], u[r]
                    for j in range(m):
                        ui[j] -= q * ur[j]
        pivots.append(c)
        r += 1
    if transform:
        return h, pivots, u
    return h, pivots


def kernel_basis(a: list[list[int]], ncols: int | None = None) -> list[list[int]]:
    """Basis of ``{x in Z^n : a x = 0}``; the basis spans a saturated lattice."""
    n = len(a[0]) if a else (ncols or 0)
    if not a:
        return identity(n)
    at = transpose(a)
    h, pivots, u = hnf(at, transform=True)
    return [u[i] for i in range(len(pivots), n)]


class LatticeSolver:
    """Solve ``sum_j c_j * basis[j] = x`` over the integers.

    ``basis`` is a list of linearly independent integer vectors.
    """

    def __init__(self, basis: list[list[int]], dim: int):
        self.k = len(basis)
        self.dim = dim
        cols = transpose(basis, dim) if basis else [[] for _ in range(dim)]
        # cols is dim x k; U cols = H with H echelon
        self.h, self.pivots, self.u = hnf(cols, transform=True)
        if len(self.pivots) != self.k:
            raise ValueError("basis vectors are linearly dependent")

    def solve(self, x: list[int]) -> list[int] | None:
        """Coordinates of ``x`` or ``None`` if ``x`` is not in the lattice."""
        y = matvec(self.u, x)
        k = self.k
        if any(y[k:]):
            return None
        c = [0] * k
        for r in range(k - 1, -1, -1):
            col = self.pivots[r]
            s = y[r] - sum(self.h[r][j] * c[j] for j in range(r + 1, k))
            piv = self.h[r][col]
            if s % piv:
                return None
            c[r] = s // piv
        return c


@dataclass
class SmithForm:
    """``U a V = diag(invariants)`` with ``U`` and ``V`` unimodular.

    ``uinv`` is the inverse of ``U``.  ``V`` is only tracked on request.
    """

    invariants: list[int]
    u: list[list[int]]
    uinv: list[list[int]]
    v: list[list[int]] | None


def smith_normal_form(a: list[list[int]], ncols: int | None = None, track_v: bool = False) -> SmithForm:
    m = len(a)
    n = len(a[0]) if m else (ncols or 0)
    d = [list(r) for r in a]
    u = identity(m)
    uinv = identity(m)
    v = identity(n) if track_v else None

    def row_add(i, t, q):
        # row_i -= q * row_t
        di, dt = d[i], d[t]
        for j in range(n):
            if dt[j]:
                di[j] -= q * dt[j]
        ui, ut = u[i], u[t]
        for j in range(m):
            if ut[j]:
                ui[j] -= q * ut[j]
        for row in uinv:
            if row[i]:
                row[t] += q * row[i]

    def row_swap(i, t):
        d[i], d[t] = d[t], d[i]
        u[i], u[t] = u[t], u[i]
        for row in uinv:
            row[i], row[t] = row[t], row[i]

    def row_neg(i):
        d[i] = [-x for x in d[i]]
        u[i] = [-x for x in u[i]]
        for row in uinv:
            row[i] = -row[i]

    def col_add(j, t, q):
        # col_j -= q * col_t
        for row in d:
            if row[t]:
                row[j] -= q * row[t]
        if v is not None:
            for row in v:
                if row[t]:
                    row[j] -= q * row[t]

    def col_swap(j, t):
        for row in d:
            row[j], row[t] = row[t], row[j]
        if v is not None:
            for row in v:
                row[j], row[t] = row[t], row[j]

    invariants: list[int] = []
    t = 0
    while t < min(m, n):
        # smallest nonzero entry in the trailing block becomes the pivot
        best = None
        for i in range(t, m):
            row = d[i]
            for j in range(t, n):
                x = row[j]
                if x and (best is None or abs(x) < best[0]):
                    best = (abs(x), i, j)
                    if best[0] == 1:
                        break
            if best is not None and best[0] == 1:
                break
        if best is None:
            break
        _, i0, j0 = best
        if i0 != t:
            row_swap(i0, t)
        if j0 != t:
            col_swap(j0, t)
        while True:
            piv = d[t][t]
            dirty = False
            for i in range(t + 1, m):
                x = d[i][t]
                if x:
                    q = x // piv
                    row_add(i, t, q)
                    if d[i][t]:
                        dirty = True
            for j in range(t + 1, n):
                x = d[t][j]
                if x:
                    q = x // piv
                    col_add(j, t, q)
                    if d[t][j]:
                        dirty = True
            if dirty:
                # a remainder is smaller than the pivot: move it in
                best = None
                for i in range(t + 1, m):
                    if d[i][t] and (best is None or abs(d[i][t]) < best[0]):
                        best = (abs(d[i][t]), i, t)
                for j in range(t + 1, n):
                    if d[t][j] and (best is None or abs(d[t][j]) < best[0]):
                        best = (abs(d[t][j]), t, j)
                _, i1, j1 = best
                if i1 != t:
                    row_swap(i1, t)
                if j1 != t:
                    col_swap(j1, t)
                continue
            # row and column clean; enforce divisibility of the rest
            bad = None
            for i in range(t + 1, m):
                row = d[i]
                for j in range(t + 1, n):
                    if row[j] % piv:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            row_add(t, bad, -1)
        if d[t][t] < 0:
            row_neg(t)
        invariants.append(d[t][t])
        t += 1
    return SmithForm(invariants, u, uinv, v)


def rank_rational(a: list[list[int]]) -> int:
    """Rank over Q by fraction-free elimination with row content removal."""
    rows = [list(r) for r in a if any(r)]
    if not rows:
        return 0
    n = len(rows[0])
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        pr = rows[r]
        p = pr[c]
        for i in range(r + 1, len(rows)):
            x = rows[i][c]
            if x:
                ri = rows[i]
                new = [p * s - x * t for s, t in zip(ri, pr)]
                g = 0
                for y in new:
                    if y:
                        g = _gcd(g, y)
                        if g == 1:
                            break
                if g > 1:
                    new = [y // g for y in new]
                rows[i] = new
        r += 1
        if r == len(rows):
            break
    return r


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return abs(a)


def rank_mod2(a: list[list[int]]) -> int:
    """Rank over GF(2) using integer bitsets."""
    basis: dict[int, int] = {}
    for row in a:
        bits = 0
        for j, x in enumerate(row):
            if x & 1:
                bits |= 1 << j
        while bits:
            top = bits.bit_length() - 1
            if top in basis:
                bits ^= basis[top]
            else:
                basis[top] = bits
                break
    return len(basis)


def to_bits(v) -> int:
    """Pack the parities of an integer vector into an int (bit j = entry j)."""
    bits = 0
    for j, x in enumerate(v):
        if x & 1:
            bits |= 1 << j
    return bits


def gf2_nullspace(rows: list[int], ncols: int) -> list[int]:
    """Basis of ``{w : row . w = 0 for every row}`` over GF(2), as bitsets."""
    pivots: dict[int, int] = {}  # pivot column -> reduced row
    for r in rows:
        for c, pr in pivots.items():
            if r >> c & 1:
                r ^= pr
        if not r:
            continue
        c = (r & -r).bit_length() - 1
        for c2 in list(pivots):
            if pivots[c2] >> c & 1:
                pivots[c2] ^= r
        pivots[c] = r
    out = []
    for f in range(ncols):
        if f in pivots:
            continue
        w = 1 << f
        for c, pr in pivots.items():
            if pr >> f & 1:
                w |= 1 << c
        out.append(w)
    return out


class GF2Echelon:
    """Incremental echelon basis over GF(2) with a tag per vector.

    Tags record which tagged generators a reduced vector is built from, so
    a vector in the span can be expressed in those generators.
    """

    def __init__(self):
        self.rows: dict[int, tuple[int, int]] = {}  # top bit -> (vector, tag)

    def __len__(self):
        return len(self.rows)

    def reduce(self, v: int, tag: int = 0) -> tuple[int, int]:
        while v:
            top = v.bit_length() - 1
            hit = self.rows.get(top)
            if hit is None:
                break
            v ^= hit[0]
            tag ^= hit[1]
        if not v:
            return 0, tag
        # finish reducing lower bits so that the remainder is canonical
        rest = v
        out = 0
        while rest:
            top = rest.bit_length() - 1
            hit = self.rows.get(top)
            if hit is None:
                out |= 1 << top
                rest ^= 1 << top
            else:
                rest ^= hit[0]
                tag ^= hit[1]
        return out, tag

    def insert(self, v: int, tag: int = 0) -> bool:
        v, tag = self.reduce(v, tag)
        if not v:
            return False
        self.rows[v.bit_length() - 1] = (v, tag)
        return True

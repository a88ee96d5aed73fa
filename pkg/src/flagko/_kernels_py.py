"""Pure-Python versions of the hot kernels.

``_kernels.pyx`` mirrors these functions one-for-one; ``flagko.kernels``
picks whichever is importable.  Keep the two in sync.
"""

import heapq


def laurent_mul(a, b):
    """Convolution of two ``{exponent tuple: int}`` maps."""
    if len(a) < len(b):
        a, b = b, a
    out = {}
    get = out.get
    for eb, cb in b.items():
        for ea, ca in a.items():
            e = tuple([x + y for x, y in zip(ea, eb)])
            c = get(e, 0) + ca * cb
            if c:
                out[e] = c
            else:
                out.pop(e, None)
    return out


def demazure_terms(terms, i, root):
    """Isobaric divided difference ``pi_i`` applied monomial by monomial.

    For ``n = lam[i]``: ``n >= 0`` gives the alpha_i-string from ``lam`` down
    to ``s_i lam``; ``n == -1`` gives 0; ``n <= -2`` gives minus the string
    strictly between ``lam`` and ``s_i lam``.
    """
    out = {}
    get = out.get
    r = len(root)
    for lam, c in terms.items():
        n = lam[i]
        if n >= 0:
            # lam, lam - alpha, ..., lam - n*alpha
            step, count, cc = -1, n + 1, c
            cur = list(lam)
        elif n == -1:
            continue
        else:
            # lam + alpha, ..., lam + (-n-1)*alpha
            step, count, cc = 1, -n - 1, -c
            cur = [x + y for x, y in zip(lam, root)]
        for _ in range(count):
            e = tuple(cur)
            v = get(e, 0) + cc
            if v:
                out[e] = v
            else:
                out.pop(e, None)
            for k in range(r):
                cur[k] += step * root[k]
    return out


def reduce_poly(f, lms, lcs, tails, expmask, guard, full):
    """Strong reduction of ``f`` over the integers.

    Monomials are packed ints whose integer order is the monomial order and
    whose product is integer addition (see ``flagko.groebner``).  ``lms``,
    ``lcs``, ``tails`` describe the reducers: leading monomial, leading
    coefficient and the list of ``(monomial, coeff)`` for the remaining terms.
    A term ``c*m`` is reduced by the first reducer whose leading monomial
    divides ``m``, replacing ``c`` by its symmetric remainder modulo the
    leading coefficient.  With ``full`` false only the leading term is
    reduced.  Returns the remainder as a dict.
    """
    work = dict(f)
    heap = [-m for m in work]
    heapq.heapify(heap)
    out = {}
    nred = len(lms)
    while heap:
        m = -heapq.heappop(heap)
        c = work.pop(m, 0)
        if not c:
            continue
        me = (m & expmask) | guard
        for k in range(nred):
            lm = lms[k]
            if ((me - (lm & expmask)) & guard) == guard:
                lc = lcs[k]
                q, rem = divmod(c, lc)
                if 2 * abs(rem) > abs(lc):
                    # symmetric remainder
                    rem -= lc
                    q += 1
                if q:
                    shift = m - lm
                    for tm, tc in tails[k]:
                        nm = tm + shift
                        old = work.get(nm)
                        if old is None:
                            work[nm] = -q * tc
                            heapq.heappush(heap, -nm)
                        else:
                            v = old - q * tc
                            if v:
                                work[nm] = v
                            else:
                                # leave a zero marker; popped lazily
                                work[nm] = 0
                c = rem
                if not c:
                    break
        if c:
            out[m] = c
            if not full:
                for mm, cc in work.items():
                    if cc:
                        out[mm] = cc
                return out
    return out

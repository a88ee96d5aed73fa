"""Compare the compiled kernels with the pure-Python fallback.

    python benchmarks/bench_kernels.py [--repeat N]

Each workload runs through both implementations on identical inputs; the
outputs are checked for equality before timings are reported.
"""

import argparse
import time

from flagko import _kernels_py
from flagko.groebner import LaurentQuotient, MonomialOrder
from flagko.laurent import reduced_character
from flagko.rootdata import build_root_datum, longest_element

try:
    from flagko import _kernels
except ImportError:
    _kernels = None


def _best(fn, repeat):
    best = float("inf")
    out = None
    for _ in range(repeat):
        t = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t)
    return best, out


def workloads():
    # Demazure steps on the top character of a B4 representation
    d = build_root_datum("B4")
    lam = {(1, 1, 0, 3): 1}
    steps = []
    terms = lam
    for i in longest_element(d).word:
        steps.append((dict(terms), i, d.simple_root(i)))
        terms = _kernels_py.demazure_terms(terms, i, d.simple_root(i))
    yield "demazure_terms (B4, omega1+omega2+3*omega4)", lambda k: [k.demazure_terms(t, i, r) for t, i, r in steps]

    # product of A4 characters
    a4 = build_root_datum("A4")
    f = (reduced_character(a4, 0) + 5) * (reduced_character(a4, 1) + 10)
    g = (reduced_character(a4, 2) + 10) * (reduced_character(a4, 3) + 5)
    fg = f * g
    yield "laurent_mul (A4, chi1 chi2 chi3^2 chi4^2)", lambda k: k.laurent_mul(dict(fg._terms), dict(g._terms))

    # reduction of a product modulo the D4 Groebner basis
    d4 = build_root_datum("D4")
    q = LaurentQuotient(4, [reduced_character(d4, i) for i in range(4)])
    gb = q.gb
    lms = [e.lm for e in gb.elements]
    lcs = [e.lc for e in gb.elements]
    tails = [e.tail for e in gb.elements]
    o: MonomialOrder = gb.order
    h = reduced_character(d4, 1) * reduced_character(d4, 0) * reduced_character(d4, 2)
    packed = q._pack_poly(h)
    yield "reduce_poly (D4 basis)", lambda k: k.reduce_poly(packed, lms, lcs, tails, o.expmask, o.guard, True)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    if _kernels is None:
        print("compiled kernels not built; only the fallback is available")
    print(f"{'workload':46} {'python ms':>10} {'cython ms':>10} {'speedup':>8}")
    for name, run in workloads():
        tp, outp = _best(lambda: run(_kernels_py), args.repeat)
        if _kernels is None:
            print(f"{name:46} {tp * 1e3:10.1f} {'-':>10} {'-':>8}")
            continue
        tc, outc = _best(lambda: run(_kernels), args.repeat)
        assert outp == outc, f"{name}: implementations disagree"
        print(f"{name:46} {tp * 1e3:10.1f} {tc * 1e3:10.1f} {tp / tc:7.2f}x")


if __name__ == "__main__":
    main()

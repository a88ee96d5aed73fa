"""Command-line front end: ``flagko table|witt|ko|oracle|classify``.

Every subcommand prints JSON (default) or a plain text table.  Exit codes:
0 when every check in the invocation passed, 1 on a verification mismatch,
2 on a usage error or when a Weyl group exceeds ``--cap``.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor

from .flagwitt import INJECTIVE_TYPES, classifier_sweep, injectivity_classifier, ko_groups, witt_ring
from .groebner import ORDERS
from .oracle import DEFAULT_ORACLE_CAP, RankMismatch, oracle_report
from .reptypes import TableMismatch, table_one
from .rootdata import DEFAULT_WEYL_CAP, GroupTooLarge, build_root_datum, weyl_order

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2

# keys each report must carry; used when reading reports back in
SCHEMAS = {
    "table": ("type", "b_C", "b_R", "b_H", "dual_pairs", "real", "quaternionic"),
    "witt": ("type", "b", "generators", "degree_dims", "tate_dims", "passed"),
    "ko": ("type", "b", "generators", "degree_dims", "ko", "k_rank", "passed"),
    "oracle": ("type", "rank_W", "basis_size", "tate", "predicted", "generators_ok",
               "squares_ok", "basis_ok", "elapsed_ms"),
    "classify": ("type", "injective", "N"),
}
VOLATILE_KEYS = ("elapsed_ms",)


class UsageError(ValueError):
    pass


def _witt(type_string: str, cap: int, order: str) -> dict:
    w = witt_ring(type_string)
    out = w.to_json()
    out["tate_dims"] = {"plus": w.tate_dims[0], "minus": w.tate_dims[1]}
    out["passed"] = sum(out["degree_dims"]) == w.total_dim
    return out


def _ko(type_string: str, cap: int, order: str) -> dict:
    datum = build_root_datum(type_string)
    k = ko_groups(datum, cap)
    out = witt_ring(datum).to_json()
    out.update(k.to_json())
    # Schubert cells are indexed by W, so K^0 has rank |W|
    out["passed"] = k.k_rank == weyl_order(datum.type)
    return out


def _oracle(type_string: str, cap: int, order: str) -> dict:
    try:
        return oracle_report(type_string, cap, order)
    except RankMismatch as e:
        return {"type": type_string, "passed": False, "failures": [str(e)]}


def _classify_one(type_string: str, cap: int, order: str) -> dict:
    datum = build_root_datum(type_string)
    ok, n = injectivity_classifier(datum)
    return {"type": str(datum.type), "injective": ok, "N": n}


RUNNERS = {"witt": _witt, "ko": _ko, "oracle": _oracle, "classify": _classify_one}


def _run_one(job):
    cmd, type_string, cap, order = job
    try:
        return RUNNERS[cmd](type_string, cap, order)
    except GroupTooLarge as e:
        return {"type": type_string, "error": "cap", "message": str(e)}
    except ValueError as e:
        return {"type": type_string, "error": "usage", "message": str(e)}


def run_types(cmd: str, types: list[str], cap: int, order: str, jobs: int = 1) -> list[dict]:
    work = [(cmd, t, cap, order) for t in types]
    if jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            return list(ex.map(_run_one, work))
    return [_run_one(w) for w in work]


def cmd_table(max_rank: int) -> tuple[list[dict], int]:
    try:
        return table_one(max_rank), EXIT_OK
    except TableMismatch as e:
        return [{"error": "mismatch", "message": str(e)}], EXIT_MISMATCH


def cmd_classify(types: list[str], max_rank: int, pair_max_rank: int) -> tuple[list[dict], int]:
    if types:
        rows = run_types("classify", types, DEFAULT_WEYL_CAP, "grevlex")
        return rows, _exit_code(rows)
    rows = [{"type": t, "injective": ok, "N": n}
            for t, ok, n in classifier_sweep(max_rank, pair_max_rank)]
    found = {r["type"] for r in rows if r["injective"]}
    # the published list is the reference for the default sweep
    status = EXIT_OK if found == set(INJECTIVE_TYPES) or (max_rank, pair_max_rank) != (8, 2) \
        else EXIT_MISMATCH
    return rows, status


def _exit_code(rows: list[dict]) -> int:
    if any("error" in r and r["error"] in ("usage", "cap") for r in rows):
        return EXIT_USAGE
    if any(not r.get("passed", True) or r.get("error") == "mismatch" for r in rows):
        return EXIT_MISMATCH
    return EXIT_OK


def strip_volatile(obj):
    """Copy of a report without timing fields, for golden comparison."""
    if isinstance(obj, list):
        return [strip_volatile(x) for x in obj]
    if isinstance(obj, dict):
        return {k: strip_volatile(v) for k, v in obj.items() if k not in VOLATILE_KEYS}
    return obj


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def parse_report(text: str, cmd: str):
    """Read a JSON report back in, checking the keys of every entry."""
    data = json.loads(text)
    for entry in data if isinstance(data, list) else [data]:
        if "error" in entry:
            continue
        missing = [k for k in SCHEMAS[cmd] if k not in entry]
        if missing:
            raise ValueError(f"{cmd} report for {entry.get('type')!r} lacks {missing}")
    return data


def _cell(v) -> str:
    if isinstance(v, dict):
        return " ".join(f"{k}={_cell(x)}" for k, x in v.items())
    if isinstance(v, list):
        if v and isinstance(v[0], dict):
            return ", ".join(x.get("label", _cell(x)) + (f"({x['degree']})" if "degree" in x else "")
                             for x in v)
        return "[" + ",".join(_cell(x) for x in v) + "]"
    return str(v)


def render_text(rows: list[dict]) -> str:
    if not rows:
        return ""
    keys = []
    for r in rows:
        for k in r:
            if k not in keys:
                keys.append(k)
    table = [keys] + [[_cell(r.get(k, "")) for k in keys] for r in rows]
    widths = [max(len(row[i]) for row in table) for i in range(len(keys))]
    lines = ["  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip() for row in table]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines) + "\n"


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--cap", type=int, default=None,
                        help="largest Weyl group to enumerate (oracle default %d, "
                             "ko default %d)" % (DEFAULT_ORACLE_CAP, DEFAULT_WEYL_CAP))
    common.add_argument("--order", choices=ORDERS, default="grevlex",
                        help="monomial order for the oracle")
    common.add_argument("--jobs", type=int, default=1, help="worker processes across types")

    p = argparse.ArgumentParser(prog="flagko", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="cmd", required=True)
    t = sub.add_parser("table", parents=[common], help="basic representation counts")
    t.add_argument("max_rank", nargs="?", type=int, default=8)
    for name, text in (("witt", "Witt ring of G/T"), ("ko", "KO-groups of G/T"),
                       ("oracle", "brute-force check on the quotient ring")):
        s = sub.add_parser(name, parents=[common], help=text)
        s.add_argument("types", nargs="+", metavar="TYPE")
    c = sub.add_parser("classify", parents=[common], help="injectivity criterion sweep")
    c.add_argument("types", nargs="*", metavar="TYPE")
    c.add_argument("--max-rank", type=int, default=8)
    c.add_argument("--pair-max-rank", type=int, default=2)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    if args.jobs < 1:
        parser.print_usage(sys.stderr)
        print("flagko: --jobs must be positive", file=sys.stderr)
        return EXIT_USAGE

    if args.cmd == "table":
        if args.max_rank < 1:
            print("flagko: max_rank must be >= 1", file=sys.stderr)
            return EXIT_USAGE
        rows, status = cmd_table(args.max_rank)
    elif args.cmd == "classify":
        rows, status = cmd_classify(args.types, args.max_rank, args.pair_max_rank)
    else:
        cap = args.cap
        if cap is None:
            cap = DEFAULT_ORACLE_CAP if args.cmd == "oracle" else DEFAULT_WEYL_CAP
        rows = run_types(args.cmd, args.types, cap, args.order, args.jobs)
        status = _exit_code(rows)

    for r in rows:
        if "error" in r:
            print(f"flagko: {r.get('type', '')}: {r['message']}", file=sys.stderr)
    single = args.cmd in ("witt", "ko", "oracle") and len(rows) == 1
    if args.format == "json":
        sys.stdout.write(dumps(rows[0] if single else rows))
    else:
        sys.stdout.write(render_text(rows))
    return status


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()

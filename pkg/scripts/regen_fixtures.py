"""Rewrite the golden CLI reports under ``fixtures/``.

    python scripts/regen_fixtures.py

Only run this after checking that a change in output is intended; the
golden tests compare against these files byte for byte (minus timings).
"""

import io
import json
from contextlib import redirect_stdout
from pathlib import Path

from flagko.cli import main, strip_volatile

ROOT = Path(__file__).resolve().parent.parent / "fixtures"

WITT_TYPES = ["A1", "A2", "A3", "A5", "B2", "B3", "C3", "D4", "D5", "E6", "E7", "E8", "F4", "G2",
              "A1xA1", "A1xA2"]
KO_TYPES = ["A1", "A2", "A3", "B2", "B3", "C3", "D4", "G2", "A1xA1", "A1xA2"]
ORACLE_TYPES = ["A1", "A2", "A3", "B2", "B3", "C3", "G2", "A1xA1", "A1xA2", "A4", "D4"]


def run(argv):
    buf = io.StringIO()
    with redirect_stdout(buf):
        code = main(argv)
    return code, json.loads(buf.getvalue())


def write(sub, name, data):
    path = ROOT / sub / f"{name}.json"
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(strip_volatile(data), indent=2, sort_keys=True) + "\n")


def main_():
    code, rows = run(["table", "8"])
    assert code == 0
    write("table", "max_rank_8", rows)
    code, rows = run(["classify"])
    assert code == 0
    write("classify", "sweep", rows)
    for sub, types in (("witt", WITT_TYPES), ("ko", KO_TYPES), ("oracle", ORACLE_TYPES)):
        for t in types:
            code, data = run([sub, t])
            assert code == 0, (sub, t)
            write(sub, t, data)
            print(sub, t)


if __name__ == "__main__":
    main_()

"""Command line of the offline pipeline: table emission and golden files."""

import argparse
import sys
import time

import mpmath as mp

from . import emit, golden

# reference grid: the accuracy-regime pairs at n = 100 and 1000, the worked
# example, the small-degree check, and the classical 5-point rule
GOLDEN_GRID = [
    (100, "0.1", "-0.3"),
    (1000, "0.1", "-0.3"),
    (100, "5", "-0.3"),
    (1000, "5", "-0.3"),
    (100, "-0.6", "-0.7"),
    (1000, "-0.6", "-0.7"),
    (100, "1/3", "1/4"),
    (20, "0.1", "0.3"),
    (5, "0", "0"),
]


def _tag(s: str) -> str:
    return s.replace("-", "m").replace("/", "over").replace(".", "p")


def main(argv=None):
    ap = argparse.ArgumentParser(prog="gjgen")
    sub = ap.add_subparsers(dest="cmd", required=True)
    p = sub.add_parser("tables", help="emit the coefficient artifact + stubs")
    p.add_argument("--out", required=True)
    p = sub.add_parser("golden", help="emit high-precision reference CSVs")
    p.add_argument("--out", required=True)
    p.add_argument("--only-n", type=int, default=None)
    args = ap.parse_args(argv)

    if args.cmd == "tables":
        emit.main(args.out)
        return 0

    for n, a_s, b_s in GOLDEN_GRID:
        if args.only_n is not None and n != args.only_n:
            continue
        a = mp.mpf(mp.mpmathify(a_s)) if "/" not in a_s else mp.mpf(
            a_s.split("/")[0]) / mp.mpf(a_s.split("/")[1])
        b = mp.mpf(mp.mpmathify(b_s)) if "/" not in b_s else mp.mpf(
            b_s.split("/")[0]) / mp.mpf(b_s.split("/")[1])
        path = f"{args.out}/golden_n{n}_a{_tag(a_s)}_b{_tag(b_s)}.csv"
        t0 = time.time()
        golden.emit_csv(n, a, b, path=path)
        print(f"{path}: {time.time() - t0:.0f}s", flush=True)
    return 0


if __name__ == "__main__":
    sys.exit(main())

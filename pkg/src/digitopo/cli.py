"""Command-line surface: enumerate, check, verify, analyze, thin."""

import argparse
import sys

import numpy as np

from . import enumeration
from .grid import complement_config
from .metrics import (HILDITCH_TABLE, T4_TABLE, T8_TABLE, Y4_TABLE, Y8_TABLE,
                      is_interior, is_isolated)
from .pbm import read_pbm, write_pbm
from .simple import (Characterization, is_simple, locality_mismatches,
                     simple_point_map, simplicity_lut)
from .thinning import ThinningPolicy, remaining_deletable, thin

GLYPH_HELP = (
    "A configuration is given as a decimal 0..255, as 8 characters of 0/1 "
    "in neighbor order E,NE,N,NW,W,SW,S,SE, or as a 3x3 glyph block "
    "('#'=black, '.'=white, center 'x'), rows top to bottom separated by "
    "'/', ',' or newlines, e.g. '###/#x#/###'."
)

# glyph position (row, col) -> neighbor bit
_GLYPH_BITS = {(0, 0): 3, (0, 1): 2, (0, 2): 1,
               (1, 0): 4, (1, 2): 0,
               (2, 0): 5, (2, 1): 6, (2, 2): 7}


def parse_config_spec(text: str) -> int:
    """Decimal, 8-bit 0/1 string, or 3x3 glyph block; all yield a mask."""
    spec = text.strip()
    if len(spec) == 8 and set(spec) <= {"0", "1"}:
        return sum(int(ch) << i for i, ch in enumerate(spec))
    if spec.isdigit():
        mask = int(spec)
        if not 0 <= mask <= 255:
            raise ValueError(f"configuration {mask} out of range 0..255")
        return mask
    rows = [r.strip() for r in spec.replace(",", "\n").replace("/", "\n").splitlines()
            if r.strip()]
    if len(rows) != 3 or any(len(r) != 3 for r in rows):
        raise ValueError(f"cannot parse configuration {text!r}; {GLYPH_HELP}")
    if rows[1][1] not in ("x", "X"):
        raise ValueError("glyph center must be 'x' (the pixel under test)")
    mask = 0
    for (r, c), bit in _GLYPH_BITS.items():
        ch = rows[r][c]
        if ch == "#":
            mask |= 1 << bit
        elif ch != ".":
            raise ValueError(f"glyph cells must be '#' or '.', got {ch!r}")
    return mask


def config_glyph(mask: int) -> str:
    """Render a mask as the 3-line glyph block."""
    cells = [["."] * 3 for _ in range(3)]
    cells[1][1] = "x"
    for (r, c), bit in _GLYPH_BITS.items():
        if mask >> bit & 1:
            cells[r][c] = "#"
    return "\n".join("".join(row) for row in cells)


def _parse_size(text: str):
    try:
        w, h = text.lower().split("x")
        w, h = int(w), int(h)
    except ValueError:
        raise ValueError(f"size must look like 16x16, got {text!r}") from None
    if w <= 0 or h <= 0:
        raise ValueError(f"size must be positive, got {text!r}")
    return w, h


def random_image(rng, width: int, height: int) -> np.ndarray:
    """Independent pixels, black with probability 0.5 (PCG64, 64-bit seed)."""
    return (rng.random((height, width)) < 0.5).astype(np.uint8)


def cmd_enumerate(args) -> int:
    failures = []
    names = {"table1": "topological numbers (object and complement)",
             "table2": "Hilditch crossing number vs T8",
             "table3": "Yokoi numbers vs topological numbers"}
    for stem, metrics in enumeration.TABLE_METRICS.items():
        print(f"{stem}: {names[stem]}")
        print(enumeration.render_distribution_table(metrics))
        print()
        for metric in metrics:
            got = enumeration.distribution(metric)
            want = enumeration.EXPECTED_DISTRIBUTIONS[metric]
            if got != want:
                failures.append(f"{metric}: computed {got}, expected {want}")
    for n in (4, 8):
        rate = enumeration.deletability_rate(n)
        print(f"n={n}: {rate.simple} of {rate.total} configurations are "
              f"simple ({rate.percent}%), {rate.non_simple} are not "
              f"({rate.non_simple_percent}%)")
        if rate.simple != enumeration.EXPECTED_SIMPLE_COUNT:
            failures.append(f"simple count for n={n} is {rate.simple}")
    if args.csv:
        for path in enumeration.write_tables_csv(args.csv):
            print(f"wrote {path}")
    for line in failures:
        print(f"DEVIATION: {line}", file=sys.stderr)
    return 1 if failures else 0


def cmd_check(args) -> int:
    try:
        mask = parse_config_spec(args.config)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    comp = complement_config(mask)
    bits = "".join(str(mask >> i & 1) for i in range(8))
    print(f"configuration {mask} (bits x0..x7 = {bits}, complement {comp})")
    print(config_glyph(mask))
    print(f"T4={T4_TABLE[mask]} T8={T8_TABLE[mask]} "
          f"T4(complement)={T4_TABLE[comp]} T8(complement)={T8_TABLE[comp]} "
          f"H={HILDITCH_TABLE[mask]} Y4={Y4_TABLE[mask]} Y8={Y8_TABLE[mask]}")
    for n in (4, 8):
        flags = []
        if is_interior(mask, n):
            flags.append("interior")
        if is_isolated(mask, n):
            flags.append("isolated")
        simple = bool(simplicity_lut(n)[mask])
        extra = f" ({', '.join(flags)})" if flags else ""
        print(f"{n}-simple: {'yes' if simple else 'no'}{extra}")
    for n in ((4, 8) if args.n is None else (args.n,)):
        methods = [Characterization.TWO_TOPO_NUMBERS,
                   Characterization.TOPO_NUMBER_PLUS_INTERIOR,
                   Characterization.YOKOI,
                   Characterization.ORACLE]
        if n == 8:
            methods.insert(2, Characterization.HILDITCH)
        verdicts = ", ".join(
            f"{m.value}={'yes' if is_simple(mask, n, m) else 'no'}"
            for m in methods)
        print(f"n={n} characterizations: {verdicts}")
    return 0


def cmd_verify(args) -> int:
    failed = False
    report = enumeration.equivalence_report(canvas=args.canvas)
    for check in report.checks:
        status = "PASS" if check.passed else "FAIL"
        print(f"{status} {check.name}")
        if not check.passed:
            failed = True
            print(f"     counterexample masks: {check.counterexamples[:20]}")
    print(f"summary: {report.summary}")
    duality = enumeration.duality_check()
    for check in duality.checks:
        status = "PASS" if check.passed else "FAIL"
        print(f"{status} {check.name}")
        if not check.passed:
            failed = True
            print(f"     {check.note}")

    if args.random:
        rng = np.random.default_rng(args.seed)
        width, height = _parse_size(args.size)
        bad_total = 0
        for index in range(args.random):
            img = random_image(rng, width, height)
            for n in (4, 8):
                for col, row, mask in locality_mismatches(img, n):
                    bad_total += 1
                    print(f"FAIL locality image={index} n={n} "
                          f"pixel=({col},{row}) mask={mask}")
        status = "FAIL" if bad_total else "PASS"
        print(f"{status} locality on {args.random} random {width}x{height} "
              f"images (seed {args.seed}): {bad_total} mismatches")
        failed = failed or bad_total > 0
    return 1 if failed else 0


def cmd_analyze(args) -> int:
    with open(args.image, "rb") as fh:
        img = read_pbm(fh.read())
    marks = simple_point_map(img, args.n)
    black = int(img.sum())
    simple = int(marks.sum())
    print(f"{args.image}: {img.shape[1]}x{img.shape[0]}, {black} black "
          f"pixels, {simple} are {args.n}-simple")
    if args.out:
        with open(args.out, "wb") as fh:
            fh.write(write_pbm(marks, "P1"))
        print(f"wrote {args.out}")
    return 0


def cmd_thin(args) -> int:
    with open(args.image, "rb") as fh:
        img = read_pbm(fh.read())
    policy = ThinningPolicy(n=args.n, preserve_endpoints=args.endpoints)
    result, report = thin(img, policy)
    print(report)
    leftovers = remaining_deletable(result, policy)
    if leftovers:
        print(f"not a fixpoint, deletable pixels remain: {leftovers[:10]}",
              file=sys.stderr)
    if args.out:
        with open(args.out, "wb") as fh:
            fh.write(write_pbm(result, "P1"))
        print(f"wrote {args.out}")
    return 0 if report.topology_preserved and not leftovers else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="digitopo",
        description="2D digital topology: neighborhood metrics, simple "
                    "points and topology-preserving thinning.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate",
                       help="reproduce the metric distribution tables")
    p.add_argument("--csv", metavar="DIR",
                   help="also write table1..3.csv into DIR")
    p.set_defaults(fn=cmd_enumerate)

    p = sub.add_parser("check", help="inspect one configuration",
                       epilog=GLYPH_HELP)
    p.add_argument("config", help="decimal, 8x 0/1, or 3x3 glyph")
    p.add_argument("--n", type=int, choices=(4, 8), default=None,
                   help="restrict the characterization breakdown to one n")
    p.set_defaults(fn=cmd_check)

    p = sub.add_parser("verify",
                       help="exhaustive equivalence, duality and locality checks")
    p.add_argument("--canvas", type=int, choices=(5, 7), default=5,
                   help="oracle canvas size (default 5)")
    p.add_argument("--random", type=int, default=0, metavar="N",
                   help="additionally check N random images")
    p.add_argument("--size", default="16x16", help="random image size WxH")
    p.add_argument("--seed", type=int, default=0, help="random seed")
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("analyze", help="mark simple points of a PBM image")
    p.add_argument("image", help="input PBM (P1 or P4)")
    p.add_argument("--n", type=int, choices=(4, 8), required=True)
    p.add_argument("--out", help="write the simple-point mask as PBM")
    p.set_defaults(fn=cmd_analyze)

    p = sub.add_parser("thin", help="topology-preserving thinning of a PBM image")
    p.add_argument("image", help="input PBM (P1 or P4)")
    p.add_argument("--n", type=int, choices=(4, 8), required=True)
    p.add_argument("--endpoints", action="store_true",
                   help="retain curve endpoints (pixels with one neighbor)")
    p.add_argument("--out", help="write the thinned image as PBM")
    p.set_defaults(fn=cmd_thin)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

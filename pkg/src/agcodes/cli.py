"""Command-line interface: build codes, encode, decode, simulate, inspect.

Array files are plain text in log notation (-1 is the zero element, k is
alpha^k): one line per x-log row, one integer per y-log column, preceded
by '#' comment lines.  Values of the lengthened code at zero-coordinate
points travel in a trailer block of lines

    @zero (xlog, ylog): vlog

RS words use the same format with a single row of length q-1.

Exit codes: 0 ok, 2 usage or bad input, 3 construction failure,
4 decoding failure.  Failure output starts with a machine-parsable
reason code.

Simulations use an explicit xorshift64* generator so runs reproduce
anywhere: state update s ^= s >> 12; s ^= s << 25; s ^= s >> 27 (64-bit),
output (s * 0x2545F4914F6CDD1D) mod 2^64, draws take (output >> 33) mod n.
The per-trial seed is base seed + trial index.
"""

from __future__ import annotations

import argparse
import sys
import time

from . import codec
from .bms import GroebnerBasis, PartialArray, bms_with_voting
from .errors import (
    AgcodesError,
    DecodingFailure,
    ExtendedDecodeUnsupported,
    NonGenericSupport,
    NonPrimitivePolynomial,
    RankDeficient,
)
from .galois import ZERO, field_new
from .geometry import curve_spec

_MASK = (1 << 64) - 1


class Xorshift64Star:
    """xorshift64* with the documented constants; seed 0 is remapped."""

    MULTIPLIER = 0x2545F4914F6CDD1D

    def __init__(self, seed: int):
        self.state = seed & _MASK or 0x9E3779B97F4A7C15

    def next_u64(self) -> int:
        s = self.state
        s ^= s >> 12
        s ^= (s << 25) & _MASK
        s ^= s >> 27
        self.state = s
        return (s * self.MULTIPLIER) & _MASK

    def below(self, n: int) -> int:
        return (self.next_u64() >> 33) % n


# -- array file I/O ----------------------------------------------------------


def write_array_file(path: str, q: int, rows: list[list[int]], trailer=()) -> None:
    lines = [f"# agcodes array q={q} rows=x-log cols=y-log"]
    for row in rows:
        lines.append(" ".join(str(v) for v in row))
    for (x, y), v in trailer:
        lines.append(f"@zero ({x}, {y}): {v}")
    with open(path, "w") as fh:
        fh.write("\n".join(lines) + "\n")


def read_array_file(path: str, q: int):
    """Returns (rows, trailer) where trailer maps (xlog, ylog) -> vlog."""
    rows: list[list[int]] = []
    trailer: dict[tuple[int, int], int] = {}
    with open(path) as fh:
        for line in fh:
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            if line.startswith("@zero"):
                rest = line[len("@zero") :].strip()
                coords, _, val = rest.partition(":")
                x, y = coords.strip().lstrip("(").rstrip(")").split(",")
                trailer[(int(x), int(y))] = int(val)
                continue
            rows.append([int(tok) for tok in line.split()])
    n = q - 1
    for row in rows:
        for v in row:
            if not -1 <= v <= n - 1:
                raise ValueError(f"value {v} out of range for q={q}")
    return rows, trailer


def word_to_rows(spec, word):
    if spec.kind == "rs":
        return [list(word)]
    arr = [[ZERO] * (spec.field.q - 1) for _ in range(spec.field.q - 1)]
    for p, v in zip(spec.points, word):
        arr[p.x][p.y] = v
    return arr


def rows_to_word(spec, rows):
    if spec.kind == "rs":
        if len(rows) != 1 or len(rows[0]) != spec.n:
            raise ValueError(f"rs word file must be one row of {spec.n} values")
        return list(rows[0])
    n = spec.field.q - 1
    if len(rows) != n or any(len(r) != n for r in rows):
        raise ValueError(f"array file must be {n}x{n}")
    return [rows[p.x][p.y] for p in spec.points]


# -- spec acquisition ----------------------------------------------------------


def _add_spec_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--spec", help="path to a saved code spec file")
    p.add_argument("--preset", choices=codec.PRESETS, help="named construction")
    p.add_argument("--m", type=int, help="degree parameter for curve/hcrs kinds")
    p.add_argument("--r", type=int, help="redundancy for the rs kind")
    p.add_argument(
        "--field",
        help="p,m,c0,...,cm - prime, degree, and primitive polynomial "
        "coefficients (ascending) for a raw construction",
    )
    p.add_argument("--kind", choices=("curve", "hcrs", "rs"))
    p.add_argument(
        "--curve",
        help="a,b,i:j:c,... - curve parameters and defining polynomial "
        "terms with coefficient logs (curve kind only)",
    )


def _get_spec(args) -> codec.CodeSpec:
    if args.spec:
        return codec.load_spec(args.spec)
    if args.preset:
        return codec.preset(args.preset, m=args.m, r=args.r)
    if args.field and args.kind:
        p, m, *coeffs = (int(tok) for tok in args.field.split(","))
        f = field_new(p, m, list(coeffs))
        if args.kind == "rs":
            if args.r is None:
                raise ValueError("rs kind needs --r")
            return codec.make_rs_code(f, args.r)
        if args.m is None:
            raise ValueError(f"{args.kind} kind needs --m")
        if args.kind == "hcrs":
            return codec.make_hcrs_code(f, args.m)
        if not args.curve:
            raise ValueError("curve kind needs --curve a,b,i:j:c,...")
        a, b, *terms = args.curve.split(",")
        poly = {}
        for term in terms:
            i, j, c = term.split(":")
            poly[(int(i), int(j))] = int(c)
        curve = curve_spec(int(a), int(b), poly)
        return codec.make_curve_code(f, curve, args.m)
    raise ValueError("give --spec FILE, --preset NAME, or --field with --kind")


# -- commands ----------------------------------------------------------------


def cmd_info(args) -> int:
    spec = _get_spec(args)
    print(f"kind={spec.kind} q={spec.field.q} n={spec.n} k={spec.k}")
    print(f"capability t={spec.t_capability}")
    print(f"defining set ({len(spec.phi)} cells): " + " ".join(map(str, spec.phi)))
    if spec.kind != "rs":
        wpset = set(spec.wp)
        idx = [str(h) for h, p in enumerate(spec.points) if p in wpset]
        print(f"redundant positions: {' '.join(idx)}")
        print(
            "redundant-point basis leading terms: "
            + " ".join(str(p.lt) for p in spec.basis_wp.elements)
        )
        print(
            "point-ideal basis leading terms: "
            + " ".join(str(p.lt) for p in spec.basis_all.elements)
        )
        if spec.zero_points:
            pts = " ".join(f"({p.x},{p.y})" for p in spec.zero_points)
            print(f"zero-coordinate points: {pts}")
    return 0


def cmd_build(args) -> int:
    spec = _get_spec(args)
    codec.save_spec(spec, args.out)
    print(f"wrote {args.out}")
    return 0


def _info_from_rows(spec, rows, trailer):
    """Extract the information vector from a carrier-placed array file."""
    if spec.kind == "rs":
        if len(rows) != 1 or len(rows[0]) != spec.k:
            raise ValueError(f"rs info file must be one row of {spec.k} values")
        return list(rows[0]), []
    n = spec.field.q - 1
    if len(rows) != n or any(len(r) != n for r in rows):
        raise ValueError(f"info file must be a {n}x{n} array")
    return rows, trailer


def cmd_encode(args) -> int:
    spec = _get_spec(args)
    rows, trailer = read_array_file(args.infile, spec.field.q)
    if spec.kind == "rs":
        if len(rows) != 1 or len(rows[0]) != spec.k:
            raise ValueError(f"rs info file must be one row of {spec.k} values")
        info = list(rows[0])
        word = (
            codec.rs_encode_euclid(spec.field, spec.r, info)
            if args.mode == "systematic"
            else codec.rs_encode_idft(spec.field, spec.r, info)
        )
        out_trailer = []
    else:
        n = spec.field.q - 1
        if len(rows) != n or any(len(r) != n for r in rows):
            raise ValueError(f"info file must be a {n}x{n} array")
        if args.mode == "systematic":
            carriers = [(p.x, p.y) for p in spec.wp_prime]
        else:
            carriers = list(spec.info_cells())
        cset = set(carriers)
        for i in range(n):
            for j in range(n):
                if (i, j) not in cset and rows[i][j] != ZERO:
                    raise ValueError(
                        f"cell ({i},{j}) is not an information carrier for "
                        f"mode {args.mode}; place symbols only on carriers"
                    )
        info = [rows[i][j] for (i, j) in carriers]
        if trailer:
            if args.mode != "systematic":
                raise ValueError("zero-point symbols need systematic mode")
            zvals = []
            for p in spec.zero_points:
                if (p.x, p.y) not in trailer:
                    raise ValueError(f"missing zero-point symbol for ({p.x},{p.y})")
                zvals.append(trailer[(p.x, p.y)])
            full_word = codec.encode_systematic_extended(spec, info + zvals)
            out_trailer = [
                ((p.x, p.y), v) for p, v in zip(spec.zero_points, full_word[spec.n :])
            ]
            write_array_file(
                args.out,
                spec.field.q,
                word_to_rows(spec, full_word[: spec.n]),
                out_trailer,
            )
            h = codec.check_matrix(spec)
            sv = []
            for l in range(len(spec.phi)):
                acc = ZERO
                for pos, v in enumerate(full_word):
                    acc = spec.field.add(acc, spec.field.mul(v, h[pos][l]))
                sv.append(acc)
            with open(args.out + ".check", "w") as fh:
                fh.write(" ".join(str(v) for v in sv) + "\n")
            print(f"wrote {args.out} and {args.out}.check")
            return 0
        else:
            word = (
                codec.encode_systematic(spec, info)
                if args.mode == "systematic"
                else codec.encode_nonsystematic(spec, info)
            )
            out_trailer = []
    write_array_file(args.out, spec.field.q, word_to_rows(spec, word), out_trailer)
    sv, _ = codec.syndromes(spec, word)
    with open(args.out + ".check", "w") as fh:
        fh.write(" ".join(str(v) for v in sv) + "\n")
    print(f"wrote {args.out} and {args.out}.check")
    return 0


def cmd_decode(args) -> int:
    spec = _get_spec(args)
    rows, trailer = read_array_file(args.infile, spec.field.q)
    if trailer:
        raise ExtendedDecodeUnsupported(
            "decoding of words with zero-point values is not supported"
        )
    word = rows_to_word(spec, rows)
    corrected, info = codec.decode(spec, word, mode=args.mode)
    write_array_file(args.out, spec.field.q, word_to_rows(spec, corrected))
    if spec.kind == "rs":
        write_array_file(args.info_out, spec.field.q, [info])
    else:
        n = spec.field.q - 1
        grid = [[ZERO] * n for _ in range(n)]
        carriers = (
            [(p.x, p.y) for p in spec.wp_prime]
            if args.mode == "systematic"
            else list(spec.info_cells())
        )
        for (i, j), v in zip(carriers, info):
            grid[i][j] = v
        write_array_file(args.info_out, spec.field.q, grid)
    print(f"wrote {args.out} and {args.info_out}")
    return 0


def run_simulation(spec, errors: int, trials: int, seed: int):
    """Deterministic encode/corrupt/decode loop; per-trial seed = seed+i.

    Returns (successes, failures, miscorrections, rows) where rows are
    (trial, planted, outcome) tuples.
    """
    f = spec.field
    q = f.q
    rows = []
    success = failure = miscorrection = 0
    for trial in range(trials):
        rng = Xorshift64Star(seed + trial)
        info = [rng.below(q) - 1 for _ in range(spec.k)]
        word = codec.encode_systematic(spec, info)
        rx = list(word)
        positions: list[int] = []
        while len(positions) < errors:
            pos = rng.below(spec.n)
            if pos not in positions:
                positions.append(pos)
        for pos in positions:
            rx[pos] = f.add(rx[pos], rng.below(q - 1))
        try:
            got, _ = codec.decode(spec, rx)
            if got == word:
                outcome = "success"
                success += 1
            else:
                outcome = "miscorrection"
                miscorrection += 1
        except DecodingFailure:
            outcome = "failure"
            failure += 1
        rows.append((trial, errors, outcome))
    return success, failure, miscorrection, rows


def cmd_simulate(args) -> int:
    spec = _get_spec(args)
    if not 0 <= args.errors <= spec.n:
        raise ValueError("error count out of range")
    t0 = time.monotonic()
    success, failure, miscorrection, rows = run_simulation(
        spec, args.errors, args.trials, args.seed
    )
    elapsed = time.monotonic() - t0
    print(
        f"simulate kind={spec.kind} errors={args.errors} trials={args.trials} "
        f"seed={args.seed} success={success} failure={failure} "
        f"miscorrection={miscorrection}"
    )
    print("trial,errors,outcome")
    for trial, errs, outcome in rows:
        print(f"{trial},{errs},{outcome}")
    print(f"wall_time_s={elapsed:.3f}", file=sys.stderr)
    return 0


def _print_basis(basis: GroebnerBasis) -> None:
    for poly in basis.elements:
        cells = sorted(poly.coeffs, key=basis.order.key, reverse=True)
        triples = " ".join(f"({i} {j} {poly.coeffs[(i, j)]})" for (i, j) in cells)
        print(f"poly lt={poly.lt}: {triples}")
        max_i = max(i for (i, _) in poly.coeffs)
        max_j = max(j for (_, j) in poly.coeffs)
        for i in range(max_i + 1):
            row = []
            for j in range(max_j + 1):
                v = poly.coeffs.get((i, j))
                row.append("." if v is None else str(v))
            print("  " + " ".join(row))


def cmd_groebner(args) -> int:
    spec = _get_spec(args)
    if spec.kind == "rs":
        raise ValueError("groebner inspection applies to 2-D codes")
    if args.ideal == "wp":
        _print_basis(spec.basis_wp)
    elif args.ideal == "all":
        _print_basis(spec.basis_all)
    else:
        if not args.syndromes:
            raise ValueError("--ideal errors needs --syndromes FILE")
        rows, _ = read_array_file(args.syndromes, spec.field.q)
        n = spec.field.q - 1
        if len(rows) != n or any(len(r) != n for r in rows):
            raise ValueError(f"syndrome file must be a {n}x{n} array")
        known = {c: rows[c[0]][c[1]] for c in spec.phi}
        basis, _ = bms_with_voting(
            spec.field,
            PartialArray.from_values(spec.field.q, known),
            spec.order,
            spec.t_capability,
            ambient=spec.basis_all,
            support=spec.point_cells(),
        )
        _print_basis(basis)
    return 0


# -- entry point ---------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="agcodes",
        description=(
            "encode/decode algebraic codes over small Galois fields.  "
            "Array files hold element logs (-1 = zero, k = alpha^k); the "
            "row index is the first exponent (x-log), the column index "
            "the second (y-log)."
        ),
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("info", help="print code parameters")
    _add_spec_args(p)
    p.set_defaults(func=cmd_info)

    p = sub.add_parser("build", help="construct a code and save its spec file")
    _add_spec_args(p)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_build)

    p = sub.add_parser(
        "encode",
        help="encode an information array",
        description=(
            "Encode the information symbols of an array file.  Symbol "
            "placement by mode: systematic puts the k symbols on the "
            "information-point cells (the cells (log x, log y) of the "
            "points listed by 'info' as non-redundant); nonsystematic "
            "puts them on the free staircase cells (the point-ideal "
            "staircase minus the defining set).  All other cells must "
            "hold -1.  An '@zero (xlog, ylog): vlog' trailer line per "
            "zero-coordinate point selects the lengthened systematic "
            "encoding.  RS info files are a single row of k symbols.  "
            "The output codeword array gets a companion .check file "
            "with the defining-set syndromes (all -1 on success)."
        ),
    )
    _add_spec_args(p)
    p.add_argument("--mode", choices=("systematic", "nonsystematic"), default="systematic")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("decode", help="correct a received array")
    _add_spec_args(p)
    p.add_argument("--mode", choices=("systematic", "nonsystematic"), default="systematic")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--info-out", dest="info_out", required=True)
    p.set_defaults(func=cmd_decode)

    p = sub.add_parser("simulate", help="random error-correction trials")
    _add_spec_args(p)
    p.add_argument("--errors", type=int, required=True)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=1)
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("groebner", help="print a Groebner basis")
    _add_spec_args(p)
    p.add_argument("--ideal", choices=("wp", "all", "errors"), required=True)
    p.add_argument("--syndromes")
    p.set_defaults(func=cmd_groebner)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code not in (0, None) else 0
    try:
        return args.func(args)
    except DecodingFailure as e:
        print(f"{type(e).__name__}: {e}", file=sys.stderr)
        return 4
    except (NonGenericSupport, RankDeficient, NonPrimitivePolynomial) as e:
        print(f"{type(e).__name__}: {e}", file=sys.stderr)
        return 3
    except (AgcodesError, ValueError, OSError) as e:
        print(f"{type(e).__name__}: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

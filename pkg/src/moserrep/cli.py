"""Command-line entry point.

Exit status: 0 on success, 1 on a domain or range error, 2 when a computed
result disagrees with a reference (fixture, b-file or cross-check).
"""

from __future__ import annotations

import argparse
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable

from . import bfile, collinearity, fixtures, josephus, lattice, progressions, sequences
from .decompose import decompose_moser, decompose_s, decompose_shifted
from .errors import MoserError
from .sequences import SequenceFamily

EXIT_OK, EXIT_ERROR, EXIT_MISMATCH = 0, 1, 2


def _sweep(fn: Callable, items: Iterable, jobs: int) -> list:
    items = list(items)
    if jobs <= 1:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items, chunksize=max(1, len(items) // (4 * jobs))))


def _family(args) -> SequenceFamily:
    return SequenceFamily(args.family, r=args.r, c=args.c, a=args.a, b=args.b)


def _add_family_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("family", choices=sequences.FAMILIES)
    p.add_argument("--r", type=int, default=2)
    p.add_argument("--c", type=int, default=3)
    p.add_argument("--a", type=int, default=1)
    p.add_argument("--b", type=int, default=1)


def cmd_seq(args, out) -> int:
    out.write(" ".join(map(str, _family(args).prefix(args.count, args.offset))) + "\n")
    return EXIT_OK


def cmd_decompose(args, out) -> int:
    family = _family(args)
    if family.kind == "moser":
        pair = decompose_moser(args.n, family.r)
    elif family.kind == "s":
        pair = decompose_s(args.n, family.r)
    elif family.kind == "shifted":
        pair = decompose_shifted(args.n, family.c)
    elif family.kind == "affine":
        pair = progressions.decompose_affine(args.n, family.a, family.b)
    else:
        raise MoserError("the t family has no decomposition of this form")
    u, v = pair.terms()
    out.write(f"k={pair.k} l={pair.l} : {u} + {family.multiplier}*{v} = {pair.recombine()}\n")
    return EXIT_OK if pair.recombine() == args.n else EXIT_MISMATCH


def cmd_josephus(args, out) -> int:
    if args.trace:
        for direction, person in josephus.elimination_trace(args.n):
            out.write(f"step {direction} remove {person}\n")
    sim, closed = josephus.simulate_survivor(args.n), josephus.survivor_closed(args.n)
    if sim == closed:
        out.write(f"W({args.n}) = {sim} (simulation = closed form)\n")
        return EXIT_OK
    out.write(f"W({args.n}): simulation {sim} != closed form {closed}\n")
    return EXIT_MISMATCH


def cmd_viterate(args, out) -> int:
    out.write(" ".join(map(str, josephus.v_iterate(args.n))) + "\n")
    return EXIT_OK


def cmd_psi(args, out) -> int:
    odds = range(1, args.max + 1, 2)
    if args.jobs > 1:
        values = dict(zip(odds, _sweep(collinearity.psi, odds, args.jobs)))
    else:
        values = collinearity.psi_range(args.max)
    for n in odds:
        out.write(f"{n} {values[n]}\n")
    return EXIT_OK


def _v_value(n: int) -> int:
    return progressions.v_term(n)


def cmd_evens(args, out) -> int:
    if args.unique:
        out.write(" ".join(map(str, progressions.unique_evens(args.max))) + "\n")
        out.write(f"density {progressions.unique_even_density(args.max)}\n")
    elif args.vn:
        ns = range(1, args.max + 1)
        if args.policy == "value":
            vs = _sweep(_v_value, ns, args.jobs)
        else:
            vs = [progressions.v_term(n, policy=args.policy) for n in ns]
        for n, v in zip(ns, vs):
            out.write(f"{n} {v}\n")
    else:
        targets = range(2, args.max + 1, 2)
        for rep in _sweep(progressions.even_representations, targets, args.jobs):
            pairs = " ".join(f"{u}+{v}" for u, v in rep.sorted_pairs())
            out.write(f"{rep.target}: {pairs}\n")
    return EXIT_OK


def cmd_lattice(args, out) -> int:
    if args.tsp:
        result = lattice.path_tsp(args.r, args.t, args.tsp)
        out.write("permutation: " + " ".join(map(str, result.permutation)) + "\n")
        out.write(f"length: {result.length:.12f}\n")
        return EXIT_OK
    for N in lattice.interval(args.r, args.t):
        p = lattice.to_lattice(N, args.r, args.t)
        out.write(f"{N} {p.k} {p.l}\n")
    return EXIT_OK


def cmd_bfile(args, out) -> int:
    family = _family(args)
    if args.action == "export":
        if args.count is None or args.out is None:
            raise MoserError("bfile export needs --count and --out")
        bfile.export_bfile(family, args.count, args.out, args.offset)
        out.write(f"wrote {args.count} terms of {family} to {args.out}\n")
        return EXIT_OK
    if args.input is None:
        raise MoserError("bfile check needs --in")
    problems = bfile.check_bfile(family, args.input)
    for line in problems:
        out.write(line + "\n")
    if problems:
        return EXIT_MISMATCH
    out.write(f"{args.input}: matches {family}\n")
    return EXIT_OK


def cmd_verify(args, out) -> int:
    status = EXIT_OK
    for outcome in fixtures.run_fixtures():
        out.write(f"{'PASS' if outcome.passed else 'FAIL'} {outcome.name}: {outcome.detail}\n")
        if not outcome.passed:
            status = EXIT_MISMATCH
    return status


def cmd_explore(args, out) -> int:
    primes, composites = sequences.prime_census(args.c, args.count)
    out.write(f"a^({args.c})(0..{args.count - 1}): {primes} primes, {composites} composites\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="moserrep", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("seq", help="print terms of a sequence family")
    _add_family_args(p)
    p.add_argument("--count", type=int, required=True)
    p.add_argument("--offset", type=int)
    p.set_defaults(func=cmd_seq)

    p = sub.add_parser("decompose", help="unique (k, l) representation of N")
    _add_family_args(p)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("josephus", help="survivor of the back-and-forth elimination")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--trace", action="store_true")
    p.set_defaults(func=cmd_josephus)

    p = sub.add_parser("viterate", help="orbit of V(n) = W(n - 2)")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_viterate)

    p = sub.add_parser("psi", help="psi over odd arguments")
    p.add_argument("--max", type=int, required=True)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_psi)

    p = sub.add_parser("evens", help="sums of two t-values")
    p.add_argument("--max", type=int, required=True,
                   help="largest even target, or the number of v-terms with --vn")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--unique", action="store_true")
    mode.add_argument("--vn", action="store_true")
    p.add_argument("--policy", choices=progressions.V_POLICIES, default="value")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_evens)

    p = sub.add_parser("lattice", help="grid coordinates and optimal paths")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--tsp", choices=("min", "max"))
    p.set_defaults(func=cmd_lattice)

    p = sub.add_parser("bfile", help="export or check a b-file")
    p.add_argument("action", choices=("export", "check"))
    _add_family_args(p)
    p.add_argument("--count", type=int)
    p.add_argument("--offset", type=int)
    p.add_argument("--out")
    p.add_argument("--in", dest="input")
    p.set_defaults(func=cmd_bfile)

    p = sub.add_parser("verify", help="replay the printed term lists")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("explore", help="informational probes")
    p.add_argument("probe", choices=("primes",))
    p.add_argument("--c", type=int, default=3)
    p.add_argument("--count", type=int, required=True)
    p.set_defaults(func=cmd_explore)
    return parser


def run(argv: list[str] | None = None, out=None) -> int:
    out = sys.stdout if out is None else out
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except (MoserError, AssertionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()

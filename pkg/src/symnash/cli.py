"""Command-line front end.

Exit codes: 0 success, 1 a verification or property check failed, 2 bad
input, 3 an internal invariant was violated.
"""

import argparse
import sys

from . import imitation, oracle, rank1, reduction
from .core import DEFAULT_CAP, MixedStrategy, format_rational
from .errors import (FixedPointNotFound, InternalInvariantViolation, NotAnEquilibrium,
                     SymNashError)
from .gamefile import format_vector, parse_game, parse_rational, parse_weights, serialize_game
from .verify import is_nash

EXIT_OK, EXIT_FALSE, EXIT_INPUT, EXIT_INTERNAL = 0, 1, 2, 3


class InputError(SymNashError):
    pass


def _read_game(path):
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    return parse_game(text)


def _symmetric_matrix(gf):
    if gf.kind == "symmetric":
        return gf.A
    if gf.A.is_square() and gf.B == gf.A.T:
        return gf.A
    raise InputError("this command needs a symmetric game")


def _profile_arg(text):
    parts = text.split(";")
    if len(parts) != 2:
        raise InputError(f"expected 'Wx;Wy', got {text!r}")
    return parse_weights(parts[0]), parse_weights(parts[1])


def _fmt_profile(x, y):
    return f"x: {format_vector(x)} | y: {format_vector(y)}"


def _cap(args):
    return parse_rational(args.cap) if args.cap is not None else DEFAULT_CAP


def cmd_solve_rank1(args, out):
    A = _symmetric_matrix(_read_game(args.file))
    sol = rank1.find_fixed_point(A)
    print(f"x: {format_vector(sol.x)}", file=out)
    print(f"lambda: {format_rational(sol.lam)}", file=out)
    return EXIT_OK


def cmd_enumerate(args, out):
    gf = _read_game(args.file)
    if args.symmetric_only:
        res = oracle.enumerate_symmetric_ne(_symmetric_matrix(gf))
        lines = [f"x: {format_vector(x)}" for x in res.equilibria]
    else:
        res = oracle.enumerate_ne(gf.bimatrix())
        lines = [_fmt_profile(x, y) for x, y in res.equilibria]
    print(f"count={len(res.equilibria)} degenerate={str(res.degenerate).lower()}", file=out)
    for line in lines:
        print(line, file=out)
    return EXIT_OK


def cmd_verify(args, out):
    game = _read_game(args.file).bimatrix()
    x, y = MixedStrategy(parse_weights(args.x)), MixedStrategy(parse_weights(args.y))
    cert = is_nash(game, x, y)
    pi1, pi2 = (format_rational(p) for p in cert.payoffs)
    if cert.holds:
        print(f"holds=true pi1={pi1} pi2={pi2}", file=out)
        return EXIT_OK
    player, strategy = cert.violating_index
    print(f"holds=false violating: player {player} strategy {strategy + 1}", file=out)
    return EXIT_FALSE


def cmd_reduce_build(args, out):
    bundle = reduction.build_composite(_read_game(args.file).bimatrix(), _cap(args))
    text = serialize_game(bundle.G)
    if args.output == "-":
        out.write(text)
    else:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
        size = bundle.G.rows
        print(f"composite {size}x{size} (m={bundle.m} n={bundle.n} "
              f"cap={format_rational(bundle.cap)})", file=out)
    return EXIT_OK


def cmd_reduce_forward(args, out):
    bundle = reduction.build_composite(_read_game(args.file).bimatrix(), _cap(args))
    try:
        ne1, ne2 = reduction.forward_map(bundle, parse_weights(args.x), parse_weights(args.y))
    except NotAnEquilibrium as exc:
        print(f"holds=false {exc}", file=out)
        return EXIT_FALSE
    print(f"ne1: {_fmt_profile(*ne1)}", file=out)
    print(f"ne2: {_fmt_profile(*ne2)}", file=out)
    return EXIT_OK


def cmd_reduce_backward(args, out):
    bundle = reduction.build_composite(_read_game(args.file).bimatrix(), _cap(args))
    try:
        x, y = reduction.backward_map(bundle, _profile_arg(args.ne1), _profile_arg(args.ne2))
    except NotAnEquilibrium as exc:
        print(f"holds=false {exc}", file=out)
        return EXIT_FALSE
    print(f"x: {format_vector(x.flat())}", file=out)
    print(f"y: {format_vector(y.flat())}", file=out)
    print(f"symmetric={str(x == y).lower()}", file=out)
    return EXIT_OK


def cmd_count_nonsymmetric(args, out):
    report = reduction.check_counting_correspondence(
        _read_game(args.file).bimatrix(), _cap(args))
    print(f"k={report.k} nonsym={report.count} holds={str(report.holds).lower()}", file=out)
    return EXIT_OK if report.holds else EXIT_FALSE


def cmd_imitation_lift(args, out):
    A = _read_game(args.file).A
    try:
        y = imitation.lift_to_symmetric(A, parse_weights(args.x), parse_weights(args.y))
    except NotAnEquilibrium as exc:
        print(f"holds=false {exc}", file=out)
        return EXIT_FALSE
    print(f"y: {format_vector(y)}", file=out)
    return EXIT_OK


def cmd_imitation_rescale(args, out):
    x = imitation.rescale_for_diagonal(parse_weights(args.x), parse_weights(args.diag))
    print(f"x: {format_vector(x)}", file=out)
    return EXIT_OK


def cmd_imitation_witness(args, out):
    A = _read_game(args.file).A
    try:
        x = imitation.witness_for_diagonal(A, parse_weights(args.y), parse_weights(args.diag))
    except NotAnEquilibrium as exc:
        print(f"holds=false {exc}", file=out)
        return EXIT_FALSE
    print(f"x: {format_vector(x)}", file=out)
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(
        prog="symnash",
        description="Exact symmetric equilibria of rank-1 games and the symmetric-game reduction.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve-rank1", help="symmetric equilibrium of a rank-1 symmetric game")
    p.add_argument("file")
    p.set_defaults(func=cmd_solve_rank1)

    p = sub.add_parser("enumerate", help="all equilibria by support enumeration")
    p.add_argument("file")
    p.add_argument("--symmetric-only", action="store_true")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify", help="check a profile against the equilibrium conditions")
    p.add_argument("file")
    p.add_argument("--x", required=True)
    p.add_argument("--y", required=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("reduce-build", help="write the composite symmetric game")
    p.add_argument("file")
    p.add_argument("--cap")
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=cmd_reduce_build)

    p = sub.add_parser("reduce-forward", help="composite equilibrium to a pair of source equilibria")
    p.add_argument("file")
    p.add_argument("--cap")
    p.add_argument("--x", required=True)
    p.add_argument("--y", required=True)
    p.set_defaults(func=cmd_reduce_forward)

    p = sub.add_parser("reduce-backward", help="pair of source equilibria to a composite equilibrium")
    p.add_argument("file")
    p.add_argument("--cap")
    p.add_argument("--ne1", required=True)
    p.add_argument("--ne2", required=True)
    p.set_defaults(func=cmd_reduce_backward)

    p = sub.add_parser("count-nonsymmetric", help="check the k(k-1) counting correspondence")
    p.add_argument("file")
    p.add_argument("--cap")
    p.set_defaults(func=cmd_count_nonsymmetric)

    p = sub.add_parser("imitation-lift", help="equilibrium of (A, I) to a symmetric equilibrium")
    p.add_argument("file")
    p.add_argument("--x", required=True)
    p.add_argument("--y", required=True)
    p.set_defaults(func=cmd_imitation_lift)

    p = sub.add_parser("imitation-rescale", help="rescale a row strategy for a positive diagonal")
    p.add_argument("--x", required=True)
    p.add_argument("--diag", required=True)
    p.set_defaults(func=cmd_imitation_rescale)

    p = sub.add_parser("imitation-witness", help="row strategy pairing with a symmetric equilibrium")
    p.add_argument("file")
    p.add_argument("--y", required=True)
    p.add_argument("--diag", required=True)
    p.set_defaults(func=cmd_imitation_witness)
    return parser


def run(argv=None, out=None, err=None):
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args, out)
    except (InternalInvariantViolation, FixedPointNotFound) as exc:
        print(f"internal error: {exc}", file=err)
        return EXIT_INTERNAL
    except (SymNashError, ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=err)
        return EXIT_INPUT


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()

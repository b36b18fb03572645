"""Command-line front end.

Exit codes: 0 success, 1 a verification check failed, 2 usage error,
3 parse error, 4 invalid chain, 5 domain error, 6 resource limit.
"""

from __future__ import annotations

import argparse
import logging
import sys
from dataclasses import dataclass
from pathlib import Path

from . import __version__
from .cascade import DEFAULT_MAX_TABLE, build_decomposition, decompose_transitive
from .chains import make_chain, stabilizer_descent
from .cosets import DEFAULT_MAX_INDEX
from .errors import DomainError, LagrangeError, ParseError
from .export import summary_text, table_dot, table_tsv
from .formats import read_chain, read_group
from .groups import PermGroup
from .perm import compose, format_cycles, parse_cycles
from .verify import (
    DEFAULT_SAMPLES,
    DEFAULT_SEED,
    check_dependency_table,
    corrupt_table,
    duplicate_representative,
    verify_decomposition,
)

log = logging.getLogger("lagrange")


@dataclass
class RunConfig:
    command: str
    chain: Path | None = None
    group: Path | None = None
    output: Path | None = None
    figure: Path | None = None
    max_index: int = DEFAULT_MAX_INDEX
    max_table: int = DEFAULT_MAX_TABLE
    seed: int = DEFAULT_SEED
    samples: int = DEFAULT_SAMPLES
    verbosity: int = 0

    def __post_init__(self):
        for name in ("max_index", "max_table", "samples"):
            if getattr(self, name) < 1:
                raise DomainError(f"--{name.replace('_', '-')} must be positive")


def _positive(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    src = common.add_argument_group("input")
    src.add_argument("--chain", type=Path, help="chain file (groups separated by ---)")
    src.add_argument("--group", type=Path, help="group file")
    src.add_argument("--points", help="1-based points for a stabilizer-descent chain, e.g. '1 2'")
    src.add_argument("--transitive", type=int, metavar="BASE",
                     help="coordinatize the transitive action, chain ending at Stab(BASE)")
    lim = common.add_argument_group("limits")
    lim.add_argument("--max-index", type=_positive, default=DEFAULT_MAX_INDEX)
    lim.add_argument("--max-table", type=_positive, default=DEFAULT_MAX_TABLE)
    common.add_argument("--output", "-o", type=Path, help="write output here instead of stdout")
    common.add_argument("--verbose", "-v", action="count", default=0)

    parser = argparse.ArgumentParser(
        prog="lagrange", description="Hierarchical coset coordinates for permutation groups."
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decompose", parents=[common], help="print decomposition attributes")
    p.add_argument("--figure", type=Path, help="also render a widths/orders figure")

    p = sub.add_parser("raise", parents=[common], help="group element (or point) to coordinates")
    p.add_argument("--element", help="element in 1-based cycle notation")
    p.add_argument("--point", type=int, help="1-based point (with --transitive)")
    p.add_argument("--annotate", action="store_true", help="show representatives per level")

    p = sub.add_parser("flatten", parents=[common], help="coordinates to group element (or point)")
    p.add_argument("--state", required=True, help="0-based coordinates, e.g. '1 0 2'")
    p.add_argument("--annotate", action="store_true")

    p = sub.add_parser("act", parents=[common], help="apply an element to a state")
    p.add_argument("--state", required=True)
    p.add_argument("--element", required=True)
    p.add_argument("--annotate", action="store_true", help="show component actions and a check")

    p = sub.add_parser("verify", parents=[common], help="brute-force checks of all claims")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--samples", type=_positive, default=DEFAULT_SAMPLES)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--inject-fault", choices=("transversal", "table"),
                   help="corrupt the decomposition first, to show the checks can fail")

    p = sub.add_parser("export", parents=[common], help="dependency table of one element")
    p.add_argument("--element", required=True)
    p.add_argument("--format", choices=("tsv", "dot"), default="tsv")
    p.add_argument("--figure", type=Path, help="also render the table as a figure")

    sub.add_parser("info", parents=[common], help="order, base and orbits of the top group")
    return parser


def _parse_points(text: str, degree: int) -> list[int]:
    try:
        pts = [int(x) - 1 for x in text.replace(",", " ").split()]
    except ValueError:
        raise ParseError(f"bad point list {text!r}") from None
    for p in pts:
        if not 0 <= p < degree:
            raise ParseError(f"point {p + 1} outside 1..{degree}")
    return pts


def _load(args):
    """Return ``(decomposition, transitive_or_None)`` for the input flags."""
    transitive = None
    if args.chain is not None:
        groups, kind = read_chain(args.chain)
        chain = make_chain(groups, kind=kind)
        top = groups[0]
    elif args.group is not None:
        top = read_group(args.group)
        if args.points:
            chain = stabilizer_descent(top, _parse_points(args.points, top.degree))
        elif args.transitive is None:
            chain = make_chain([top, PermGroup.trivial(top.degree)]) if not top.is_trivial() \
                else make_chain([top])
        else:
            chain = None
    else:
        raise ParseError("one of --chain or --group is required")
    if args.transitive is not None:
        base = args.transitive - 1
        if not 0 <= base < top.degree:
            raise DomainError(f"base point {args.transitive} outside 1..{top.degree}")
        transitive = decompose_transitive(top, base=base, chain=chain, max_index=args.max_index)
        return transitive.decomposition, transitive
    return build_decomposition(chain, args.max_index), None


def _element(D, text):
    return parse_cycles(text, D.top.degree)


def _state(D, text):
    try:
        coords = [int(x) for x in text.replace(",", " ").split()]
    except ValueError:
        raise ParseError(f"bad state {text!r}") from None
    return D.state(coords)


def _annotate_state(D, s) -> list[str]:
    return [
        f"level {i + 1}: {x} {format_cycles(T.reps[x])}"
        for i, (T, x) in enumerate(zip(D.transversals, s))
    ]


def run(argv=None, stdout=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.WARNING - 10 * min(args.verbose, 2),
                        format="%(levelname)s %(message)s")
    out_lines: list[str] = []
    try:
        RunConfig(
            command=args.command, chain=args.chain, group=args.group, output=args.output,
            figure=getattr(args, "figure", None), max_index=args.max_index,
            max_table=args.max_table, seed=getattr(args, "seed", DEFAULT_SEED),
            samples=getattr(args, "samples", DEFAULT_SAMPLES), verbosity=args.verbose,
        )
        code = _dispatch(args, out_lines)
    except LagrangeError as exc:
        level = getattr(exc, "level", None)
        where = f" (chain level {level + 1})" if level is not None else ""
        print(f"error{where}: {exc}", file=sys.stderr)
        return exc.exit_code
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return ParseError.exit_code
    text = "".join(line + "\n" for line in out_lines)
    if args.output is not None:
        args.output.write_text(text, encoding="utf-8")
    else:
        (stdout or sys.stdout).write(text)
    return code


def _top_group(args) -> PermGroup:
    if args.chain is not None:
        return read_chain(args.chain)[0][0]
    if args.group is not None:
        return read_group(args.group)
    raise ParseError("one of --chain or --group is required")


def _info(G: PermGroup, out: list[str]) -> int:
    chain = G.stab_chain()
    out.append(f"degree: {G.degree}")
    out.append(f"order: {G.order()}")
    out.append(f"generators: {len(G.generators)}")
    out.extend(f"  {format_cycles(g)}" for g in G.generators)
    out.append(f"base: {' '.join(str(b + 1) for b in chain.base) or '-'}")
    out.append(f"basic orbit sizes: {' '.join(str(len(t)) for t in chain.transversals) or '-'}")
    orbits = G.orbits()
    out.append(f"orbits: {len(orbits)}")
    out.append(f"transitive: {'yes' if len(orbits) == 1 else 'no'}")
    return 0


def _dispatch(args, out: list[str]) -> int:
    cmd = args.command
    if cmd == "info":
        return _info(_top_group(args), out)
    D, TD = _load(args)
    log.info("decomposition widths %s", D.widths)

    if cmd == "decompose":
        out.append(summary_text(D).rstrip("\n"))
        if TD is not None:
            out.append(f"transitive: {len(TD.points)} points, base {TD.base + 1}")
        if args.figure is not None:
            from .plotting import plot_decomposition

            plot_decomposition(D, args.figure)
            out.append(f"figure: {args.figure}")
        return 0

    if cmd == "raise":
        if args.point is not None:
            if TD is None:
                raise ParseError("--point needs --transitive")
            s = TD.raise_point(args.point - 1)
        elif args.element is not None:
            s = D.raise_state(_element(D, args.element))
        else:
            raise ParseError("raise needs --element or --point")
        out.append(str(s))
        if args.annotate:
            out.extend(_annotate_state(D, s))
        return 0

    if cmd == "flatten":
        s = _state(D, args.state)
        if TD is not None:
            out.append(str(TD.flatten_point(s) + 1))
        else:
            out.append(format_cycles(D.flatten_state(s)))
        if args.annotate:
            out.extend(_annotate_state(D, s))
        return 0

    if cmd == "act":
        s = _state(D, args.state)
        h = _element(D, args.element)
        t = D.act(s, h)
        out.append(str(t))
        if args.annotate:
            for i, ca in enumerate(D.component_actions(h, s)):
                out.append(f"level {i + 1}: h={format_cycles(ca.raw)} on cosets "
                           f"{format_cycles(ca.image, one_based=False)}")
            ok = D.flatten_state(t) == compose(D.flatten_state(s), h)
            out.append(f"check flatten(act(s, h)) == flatten(s) h: {'ok' if ok else 'FAILED'}")
        return 0

    if cmd == "export":
        h = _element(D, args.element)
        table = D.materialize(h, args.max_table)
        out.append((table_dot(table) if args.format == "dot" else table_tsv(table)).rstrip("\n"))
        if args.figure is not None:
            from .plotting import plot_dependency_table

            plot_dependency_table(table, args.figure, title=format_cycles(h))
        return 0

    if cmd == "verify":
        if args.inject_fault == "transversal":
            D = duplicate_representative(D)
            log.warning("verifying with a corrupted transversal")
        report = verify_decomposition(
            D, seed=args.seed, samples=args.samples, max_table=args.max_table, transitive=TD
        )
        if args.inject_fault == "table":
            table = corrupt_table(D.materialize(D.top.generators[0], args.max_table))
            report.add(check_dependency_table(D, table))
        out.append((report.to_jsonl() if args.format == "json" else report.to_text()).rstrip("\n"))
        return 0 if report.passed else 1

    raise ParseError(f"unknown command {cmd!r}")


def main(argv=None) -> int:
    return run(argv)


if __name__ == "__main__":
    sys.exit(main())

"""
Command line front end. Every object is read from stdin and written to stdout in the text
formats of the library; logging goes to stderr. Usage:

    treelike gen --size 4
    treelike stats --size 5 --stat rows
    treelike verify --max 6 --sym-max 5
    echo 3,4,1,5,2 | treelike map --via phi1 --dir to-tab

Every sub-command accepts '--config FILE', '--debug' and trailing KEY VALUE pairs that
override the configuration, e.g. 'treelike gen --size 9 budget.max_size 9'.
"""

import argparse
import itertools
import logging
import sys
from typing import Callable, Dict, Optional, Sequence

import yacs.config

from treelike.bijections.partitions import format_partition, parse_partition, xi, xi_inv
from treelike.bijections.permutations import format_permutation, parse_permutation
from treelike.bijections.phi import phi1, phi1_inv, phi2, phi2_inv
from treelike.enumeration.generators import iter_sym, iter_tableaux
from treelike.enumeration.tables import stat_table
from treelike.enumeration.verification import verify
from treelike.insertion.history import history_decode, parse_history, parse_sym_history, \
    sym_history_decode
from treelike.lib.core.config import check_budget, load_config
from treelike.lib.core.constants import EXIT_OK, EXIT_USAGE, EXIT_VERIFICATION_FAILED, \
    STAT_NAMES, Bijection, Direction, valid_directions
from treelike.tableaux.serialization import parse, render

_log = logging.getLogger(__name__)


def _emit(text: str):
    sys.stdout.write(text + "\n")


def _emit_blocks(texts):
    for i, text in enumerate(texts):
        if i:
            _emit("")
        _emit(text)


def run_gen(args: argparse.Namespace, cfg: yacs.config.CfgNode) -> int:
    check_budget(cfg, "max_size", args.size, "tableaux of size")
    tableaux = iter_tableaux(args.size)
    _emit_blocks(render(t) for t in itertools.islice(tableaux, args.limit))
    return EXIT_OK


def run_sym_gen(args: argparse.Namespace, cfg: yacs.config.CfgNode) -> int:
    if args.size < 1 or args.size % 2 == 0:
        raise ValueError(f"Invalid size {args.size} for symmetric tableaux, must be odd and "
                         f"positive.")
    check_budget(cfg, "max_sym_half_size", (args.size - 1) // 2,
                 "symmetric tableaux of half-size")
    tableaux = iter_sym(args.size)
    _emit_blocks(render(t) for t in itertools.islice(tableaux, args.limit))
    return EXIT_OK


def run_stats(args: argparse.Namespace, cfg: yacs.config.CfgNode) -> int:
    if args.sym:
        if args.size < 1 or args.size % 2 == 0:
            raise ValueError(f"Invalid size {args.size} for symmetric tableaux, must be odd "
                             f"and positive.")
        table = stat_table((args.size - 1) // 2, symmetric=True, cfg=cfg)
    else:
        if args.stat == "diag":
            raise ValueError("The 'diag' statistic is only defined for symmetric tableaux, "
                             "add --sym.")
        table = stat_table(args.size, cfg=cfg)
    sys.stdout.write(table.to_tsv(args.stat))
    return EXIT_OK


def run_verify(args: argparse.Namespace, cfg: yacs.config.CfgNode) -> int:
    sym_max = args.sym_max
    if sym_max is None:
        sym_max = min(args.max, cfg.budget.max_sym_half_size)
    report = verify(args.max, sym_max, cfg=cfg)
    sys.stdout.write(report.to_tsv())
    for failure in report.failures:
        _log.error(f"Check {failure.name} failed for n={failure.n}: expected "
                   f"{failure.expected}, got {failure.actual}. {failure.note}")
    return EXIT_OK if report.passed else EXIT_VERIFICATION_FAILED


def _map_object(via: Bijection, direction: Direction, text: str,
                cfg: yacs.config.CfgNode) -> str:
    if direction not in valid_directions[via]:
        raise ValueError(f"Direction {direction.value} is not defined for {via.value}, "
                         f"expected one of "
                         f"{', '.join(d.value for d in valid_directions[via])}.")

    def read_permutation():
        return parse_permutation(text, cfg.output.digits_shorthand_max)

    mappers: Dict[tuple, Callable[[], str]] = {
        (Bijection.Phi1, Direction.ToPerm): lambda: format_permutation(phi1(parse(text))),
        (Bijection.Phi1, Direction.ToTab): lambda: render(phi1_inv(read_permutation())),
        (Bijection.Phi2, Direction.ToPerm): lambda: format_permutation(phi2_inv(parse(text))),
        (Bijection.Phi2, Direction.ToTab): lambda: render(phi2(read_permutation())),
        (Bijection.Xi, Direction.ToPartition): lambda: format_partition(xi(parse(text))),
        (Bijection.Xi, Direction.ToSquare): lambda: render(xi_inv(parse_partition(text))),
    }
    return mappers[(via, direction)]()


def run_map(args: argparse.Namespace, cfg: yacs.config.CfgNode) -> int:
    text = sys.stdin.read()
    _emit(_map_object(Bijection(args.via), Direction(args.dir), text, cfg))
    return EXIT_OK


def run_render(args: argparse.Namespace, _cfg: yacs.config.CfgNode) -> int:
    text = sys.stdin.read()
    if args.sym:
        tableau = sym_history_decode(parse_sym_history(text))
    else:
        tableau = history_decode(parse_history(text))
    _emit(render(tableau))
    return EXIT_OK


def argument_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", type=str, default=None,
                        help="Path to a YAML file overriding the default configuration.")
    common.add_argument("--debug", action="store_true",
                        help="Enable debug mode (very verbose) logging and show tracebacks.")
    common.add_argument("opts", nargs=argparse.REMAINDER, default=None,
                        help="Trailing KEY VALUE pairs overriding single configuration "
                             "values, e.g. 'budget.max_size 9'.")

    parser = argparse.ArgumentParser(
        prog="treelike", description="Generate, count and map tree-like tableaux.")
    commands = parser.add_subparsers(dest="command", metavar="command")
    commands.required = True

    gen = commands.add_parser("gen", parents=[common],
                              help="Print all tableaux of a size in history order.")
    gen.add_argument("--size", type=int, required=True, help="Number of points.")
    gen.add_argument("--limit", type=int, default=None,
                     help="Stop after this many tableaux.")
    gen.set_defaults(handler=run_gen)

    sym_gen = commands.add_parser("sym-gen", parents=[common],
                                  help="Print all symmetric tableaux of an odd size.")
    sym_gen.add_argument("--size", type=int, required=True,
                         help="Number of points, 2n+1.")
    sym_gen.add_argument("--limit", type=int, default=None,
                         help="Stop after this many tableaux.")
    sym_gen.set_defaults(handler=run_sym_gen)

    stats = commands.add_parser("stats", parents=[common],
                                help="Tab-separated statistics of all tableaux of a size.")
    stats.add_argument("--size", type=int, required=True,
                       help="Number of points, 2n+1 with --sym.")
    stats.add_argument("--sym", action="store_true",
                       help="Restrict to symmetric tableaux.")
    stats.add_argument("--stat", choices=STAT_NAMES, default=None,
                       help="Print only this statistic as 'key<TAB>value' lines.")
    stats.set_defaults(handler=run_stats)

    verify_ = commands.add_parser("verify", parents=[common],
                                  help="Check every counting formula and bijection.")
    verify_.add_argument("--max", type=int, required=True,
                         help="Largest size of unrestricted tableaux.")
    verify_.add_argument("--sym-max", type=int, default=None,
                         help="Largest n of symmetric tableaux of size 2n+1. Defaults to the "
                              "smaller of --max and budget.max_sym_half_size.")
    verify_.set_defaults(handler=run_verify)

    map_ = commands.add_parser("map", parents=[common],
                               help="Apply a bijection to the object read from stdin.")
    map_.add_argument("--via", choices=[b.value for b in Bijection], required=True)
    map_.add_argument("--dir", choices=[d.value for d in Direction], required=True)
    map_.set_defaults(handler=run_map)

    render_ = commands.add_parser("render", parents=[common],
                                  help="Build the tableau of the history read from stdin.")
    render_.add_argument("--sym", action="store_true",
                         help="Read a symmetric history such as '0:+;1:-'.")
    render_.set_defaults(handler=run_render)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = argument_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.debug else logging.INFO,
                        format="[%(asctime)s] %(name)s %(levelname)s: %(message)s",
                        datefmt="%m/%d %H:%M:%S", stream=sys.stderr, force=True)

    try:
        cfg = load_config(args.config, args.opts)
    except (AssertionError, KeyError, ValueError, OSError) as e:
        _log.error(f"Invalid configuration: {e}")
        return EXIT_USAGE

    try:
        return args.handler(args, cfg)
    except ValueError as e:
        if args.debug:
            _log.exception(str(e))
        else:
            _log.error(str(e))
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

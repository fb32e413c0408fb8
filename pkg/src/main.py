# src/main.py
"""Command-line entry point for vacc-tree.

Results go to stdout (plain text, or key-sorted JSON with --json); logs go
to stderr and, unless --no-log-file is given, to <data-dir>/logs.
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import Callable, Dict, Iterable, List, Optional

from tqdm import tqdm

from src.config import (
    CHECK_LOG_FILE,
    DEFAULT_ROOT,
    EXIT_CHECK_FAILED,
    EXIT_OK,
    EXIT_UNEXPECTED_ERROR,
    LOG_LEVEL,
    MAIN_LOG_FILE,
)
from src.errors import BudgetOutOfRange, InputParseError, OutputWriteError, VaccTreeError
from src.generators import FAMILIES, make_graph
from src.graph_core import Graph, root_tree
from src.graph_io import format_graph, read_graph, read_vertex_fn, write_graph, write_vertex_fn
from src.matching_bounds import conjecture1_check, khza_check, regular_degree, theorem2_check
from src.oracle import formula_check
from src.spread_core import compute_hull, min_monopoly_bruteforce
from src.tree_vacc_dp import dyn_tree, run_dp, solve_vacc, vacc_profile
from src.utils import convert_to_csv, dumps_json, save_json, setup_logging, setup_project_paths

logger = logging.getLogger(__name__)


# --- Output helpers ---
def _emit(args: argparse.Namespace, inputs: dict, result: dict, text: str) -> None:
    if args.json:
        print(dumps_json({'command': args.command_name, 'inputs': inputs, 'result': result}))
    else:
        print(text)


def _parse_seed_list(tokens: Iterable[str]) -> List[int]:
    """Seeds given as separate arguments and/or comma-separated lists."""
    seeds = []
    for token in tokens:
        for part in token.split(','):
            part = part.strip()
            if not part:
                continue
            try:
                seeds.append(int(part))
            except ValueError:
                raise InputParseError(f"Seed '{part}' is not an integer vertex index.")
    return seeds


# --- Commands ---
def cmd_hull(args: argparse.Namespace) -> int:
    g = read_graph(args.graph)
    tau = read_vertex_fn(args.thresholds, g.n)
    seeds = _parse_seed_list(args.seeds)
    hull = sorted(compute_hull(g, tau, seeds))
    is_monopoly = len(hull) == g.n
    inputs = {'graph': str(args.graph), 'thresholds': str(args.thresholds), 'seeds': sorted(set(seeds))}
    _emit(args, inputs, {'hull': hull, 'is_monopoly': is_monopoly}, ' '.join(map(str, hull)))
    return EXIT_OK


def cmd_vacc(args: argparse.Namespace) -> int:
    g = read_graph(args.tree)
    tau = read_vertex_fn(args.thresholds, g.n)
    iota_max = read_vertex_fn(args.iota_max, g.n)
    result = solve_vacc(g, tau, iota_max, args.budget, root=args.root)

    if args.emit_increment:
        check = dyn_tree(result.table.tree, tau + result.increment)
        if check != result.value:
            logger.error(f"Increment self-check failed: dyn(tau + iota) = {check}, vacc = {result.value}")
            return EXIT_CHECK_FAILED
        write_vertex_fn(result.increment, args.emit_increment)

    inputs = {
        'tree': str(args.tree),
        'thresholds': str(args.thresholds),
        'iota_max': str(args.iota_max),
        'budget': args.budget,
        'root': result.root,
    }
    payload = {'vacc': result.value, 'increment': list(result.increment.values)}
    _emit(args, inputs, payload, str(result.value))
    return EXIT_OK


def cmd_dyn(args: argparse.Namespace) -> int:
    g = read_graph(args.graph)
    tau = read_vertex_fn(args.thresholds, g.n)
    payload: Dict[str, object] = {'mode': args.mode}
    if args.mode == 'tree':
        payload['dyn'] = dyn_tree(root_tree(g, DEFAULT_ROOT), tau)
    else:
        monopoly = min_monopoly_bruteforce(g, tau, size_limit=args.size_limit)
        payload['dyn'] = len(monopoly)
        payload['monopoly'] = sorted(monopoly)
    inputs = {'graph': str(args.graph), 'thresholds': str(args.thresholds), 'mode': args.mode}
    _emit(args, inputs, payload, str(payload['dyn']))
    return EXIT_OK


def cmd_profile(args: argparse.Namespace) -> int:
    g = read_graph(args.tree)
    tau = read_vertex_fn(args.thresholds, g.n)
    iota_max = read_vertex_fn(args.iota_max, g.n)
    root = DEFAULT_ROOT if args.root is None else args.root
    profile = vacc_profile(run_dp(root_tree(g, root), tau, iota_max, args.budget))
    if args.csv:
        rows = [{'budget': b, 'vacc': value} for b, value in enumerate(profile)]
        if convert_to_csv(rows, Path(args.csv), columns=['budget', 'vacc']) != len(rows):
            raise OutputWriteError(f"Could not write the profile CSV to {args.csv}.")
    inputs = {
        'tree': str(args.tree),
        'thresholds': str(args.thresholds),
        'iota_max': str(args.iota_max),
        'budget': args.budget,
        'root': root,
    }
    text = '\n'.join(f"{b} {value}" for b, value in enumerate(profile))
    _emit(args, inputs, {'profile': profile}, text)
    return EXIT_OK


def cmd_gen(args: argparse.Namespace) -> int:
    g = make_graph(args.family, args.n, args.seed)
    if args.output:
        write_graph(g, args.output)
    else:
        sys.stdout.write(format_graph(g))
    return EXIT_OK


# --- Checks ---
def _budget_range(args: argparse.Namespace, g: Graph) -> range:
    if args.check == 'formula':
        return range(0, 2 * g.m + g.n + 1)
    if args.check == 'theorem2':
        r = regular_degree(g)
        budgets = range((2 * r - 1) * (r + 1), r * g.n + 1)
        if not budgets:
            raise BudgetOutOfRange(f"No budget satisfies (2r-1)(r+1) <= b <= rn for r={r}, n={g.n}.")
        return budgets
    return range(0, 2 * g.m + 1)


def _report_path(args: argparse.Namespace) -> Path:
    """--report PATH is used as given; a bare --report goes to <data-dir>/reports/<check>_<graph>.json."""
    if args.report is True:
        return setup_project_paths(args.data_dir)['reports'] / f"{args.check}_{Path(args.graph).stem}.json"
    return Path(args.report)


_CHECKERS: Dict[str, Callable] = {
    'formula': formula_check,
    'khza': khza_check,
    'conjecture1': conjecture1_check,
    'theorem2': theorem2_check,
}


def cmd_check(args: argparse.Namespace) -> int:
    g = read_graph(args.graph)
    if args.budget is not None:
        budgets = [args.budget]
    else:
        budgets = list(_budget_range(args, g))
    checker = _CHECKERS[args.check]

    reports = []
    for b in tqdm(budgets, desc=f"check {args.check}", unit='budget', disable=len(budgets) < 2 or None):
        reports.append(checker(g, b, size_limit=args.size_limit).to_dict())
    failures = [r for r in reports if not r['holds']]
    for report in failures:
        key = 'total' if args.check == 'formula' else 'budget'
        logger.warning(f"{args.check} fails at {key}={report[key]}: {report}")
    logger.info(f"check {args.check}: {len(reports) - len(failures)}/{len(reports)} budgets hold")

    inputs = {'graph': str(args.graph), 'check': args.check, 'budgets': budgets}
    result = {'holds': not failures, 'reports': reports}
    if args.report:
        report_path = _report_path(args)
        if not save_json({'command': args.command_name, 'inputs': inputs, 'result': result}, report_path):
            raise OutputWriteError(f"Could not write the check report to {report_path}.")
        logger.info(f"Saved {args.check} report to {report_path}")
    text = '\n'.join(
        f"{r.get('budget', r.get('total'))} {'holds' if r['holds'] else 'FAILS'}" for r in reports
    )
    _emit(args, inputs, result, text)
    return EXIT_OK if not failures else EXIT_CHECK_FAILED


# --- Argument parsing ---
def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='vacc-tree',
        description='Budgeted threshold increments on trees: hulls, dynamic monopolies, vacc and matching bounds.',
        formatter_class=argparse.ArgumentDefaultsHelpFormatter,
    )
    parser.add_argument('--log-level', type=str.upper, default=LOG_LEVEL,
                        choices=['DEBUG', 'INFO', 'WARNING', 'ERROR'], help='Logging level for stderr and the log file.')
    parser.add_argument('--data-dir', type=str, default=None,
                        help='Override base data directory (logs/ and reports/ live under it).')
    parser.add_argument('--no-log-file', action='store_true', help='Log to stderr only.')

    # Shared by every subcommand
    output = argparse.ArgumentParser(add_help=False)
    output.add_argument('--json', action='store_true', help='Emit key-sorted JSON {command, inputs, result}.')

    subparsers = parser.add_subparsers(dest='command_name', required=True)

    hull = subparsers.add_parser('hull', parents=[output], help='Hull of a seed set.',
                                 formatter_class=argparse.ArgumentDefaultsHelpFormatter)
    hull.add_argument('graph', type=Path)
    hull.add_argument('thresholds', type=Path)
    hull.add_argument('seeds', nargs='*', default=[], help='Seed vertices, space or comma separated.')
    hull.set_defaults(func=cmd_hull)

    for name, func, help_text in (
        ('vacc', cmd_vacc, 'Maximum dyn over budget-b increments of a tree.'),
        ('profile', cmd_profile, 'vacc for every budget 0..b from one DP run.'),
    ):
        sub = subparsers.add_parser(name, parents=[output], help=help_text,
                                    formatter_class=argparse.ArgumentDefaultsHelpFormatter)
        sub.add_argument('tree', type=Path)
        sub.add_argument('thresholds', type=Path)
        sub.add_argument('iota_max', type=Path)
        sub.add_argument('-b', '--budget', type=int, required=True)
        sub.add_argument('--root', type=int, default=None, help=f'Root vertex (default {DEFAULT_ROOT}).')
        sub.set_defaults(func=func)
        if name == 'vacc':
            sub.add_argument('--emit-increment', type=Path, default=None,
                             help='Write an optimal increment here after checking it.')
        else:
            sub.add_argument('--csv', type=Path, default=None, help='Also write budget,vacc rows to this CSV.')

    dyn = subparsers.add_parser('dyn', parents=[output], help='Minimum dynamic monopoly size.',
                                formatter_class=argparse.ArgumentDefaultsHelpFormatter)
    dyn.add_argument('graph', type=Path)
    dyn.add_argument('thresholds', type=Path)
    dyn.add_argument('--mode', choices=['tree', 'exact'], default='exact')
    dyn.add_argument('--size-limit', type=int, default=None, help='Override the exhaustive-search size guard.')
    dyn.set_defaults(func=cmd_dyn)

    check = subparsers.add_parser('check', help='Run a desk-scale checker.')
    check_subs = check.add_subparsers(dest='check', required=True)
    for name in _CHECKERS:
        sub = check_subs.add_parser(name, parents=[output], formatter_class=argparse.ArgumentDefaultsHelpFormatter)
        sub.add_argument('graph', type=Path)
        sub.add_argument('-b', '--budget', '--total', dest='budget', type=int, default=None,
                         help='Single budget (threshold total for formula); default sweeps the valid range.')
        sub.add_argument('--size-limit', type=int, default=None)
        sub.add_argument('--report', type=Path, nargs='?', const=True, default=None,
                         help='Save the JSON report here; without a path it goes under <data-dir>/reports.')
        sub.set_defaults(func=cmd_check)

    gen = subparsers.add_parser('gen', help='Print a generated graph in graph-file format.',
                                formatter_class=argparse.ArgumentDefaultsHelpFormatter)
    gen.add_argument('family', choices=FAMILIES)
    gen.add_argument('n', type=int)
    gen.add_argument('seed', type=int, nargs='?', default=None)
    gen.add_argument('-o', '--output', type=Path, default=None)
    gen.set_defaults(func=cmd_gen, json=False)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    log_dir = None
    if not args.no_log_file:
        log_dir = setup_project_paths(args.data_dir)['log']
    log_file = CHECK_LOG_FILE if args.command_name == 'check' else MAIN_LOG_FILE
    setup_logging(log_file, log_dir, level=args.log_level)
    logger.debug(f"Arguments: {vars(args)}")

    try:
        return args.func(args)
    except VaccTreeError as e:
        logger.error(f"{type(e).__name__}: {e}")
        return e.exit_code
    except Exception as e:
        logger.error(f"Unexpected error in '{args.command_name}': {e}", exc_info=True)
        return EXIT_UNEXPECTED_ERROR


if __name__ == "__main__":
    exit(main())

#!/usr/bin/env python3
"""
Holomorphic multipliers - batch experiment runner for multipliers on products of discs
"""

import argparse
import sys
from typing import Any, Optional, Sequence

from config import (
    ConfigError,
    ConfigManager,
    DefaultValueConfigSource,
    EngineSettings,
    EnvironmentConfigSource,
    ExperimentConfig,
    JsonFileConfigSource,
    OverrideConfigSource,
    read_experiment,
)
from multiplier_core.cli import (
    run_apply,
    run_bench,
    run_compose,
    run_moments,
    run_seminorm,
    run_transform,
    run_verify,
    write_report,
    write_table,
)
from utils import LoggerManager, LogLevel, logger, set_library_log_level, setup_logging

EXIT_PASS = 0
EXIT_FAILURE = 1
EXIT_CONFIG = 2


def parse_box(value: str) -> list[int]:
    try:
        bounds = [int(part) for part in value.split(',') if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"--box expects comma separated integers, got {value!r}")
    if not bounds or any(d < 0 for d in bounds):
        raise argparse.ArgumentTypeError(f"--box expects non-negative degrees, got {value!r}")
    return bounds


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(description='Multipliers on products of discs')
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--config', required=True, help='Experiment JSON file')
    common.add_argument('--out', help='Data table output (.csv for CSV, JSON otherwise)')
    common.add_argument('--report', help='Run report path (default: stdout)')
    common.add_argument('--nodes', type=int, help='Nodes per circle')
    common.add_argument('--box', type=parse_box, help='Truncation box D1,D2,...')
    common.add_argument('--seed', type=int, help='Seed of randomized checks')
    common.add_argument('--tol', type=float, help='Pass/fail tolerance')
    common.add_argument('--log-level', help='debug, info, warning, error')

    commands = parser.add_subparsers(dest='command', required=True)
    apply = commands.add_parser('apply', parents=[common], help='Apply a multiplier on a z-grid')
    apply.add_argument('--formula', choices=['all', 'sequence', 'laurent', 'taylor'], default='all')
    commands.add_parser('verify', parents=[common], help='Run the invariant battery')
    commands.add_parser('moments', parents=[common], help='Moments of an analytic functional')
    transform = commands.add_parser('transform', parents=[common], help='Cauchy transform of a functional')
    transform.add_argument('--roundtrip', action='store_true', help='Compare moments of T and T_(f_T)')
    seminorm = commands.add_parser('seminorm', parents=[common], help='Seminorms and boundedness probes')
    seminorm.add_argument('--kind', choices=['germ', 'uniform', 'functional', 'probe_s', 'probe_b'])
    commands.add_parser('compose', parents=[common], help='Compose two multipliers')
    commands.add_parser('bench', parents=[common], help='Quadrature convergence study')
    return parser


def acquire_settings(args: argparse.Namespace, raw: dict[str, Any]) -> EngineSettings:
    """Overrides > experiment "settings" > environment > defaults"""
    overrides = {'nodes': args.nodes, 'seed': args.seed, 'tolerance': args.tol, 'log_level': args.log_level}
    manager = ConfigManager([
        OverrideConfigSource(overrides),
        JsonFileConfigSource(raw.get('settings') or {}),
        EnvironmentConfigSource(),
        DefaultValueConfigSource(),
    ])
    settings = EngineSettings.acquire(manager)
    LoggerManager.set_level(LogLevel.from_name(settings.log_level))
    for key, resolved in manager.describe().items():
        logger.debug(f"⚙️ {key} = {resolved}")
    return settings


def dispatch(args: argparse.Namespace, config: ExperimentConfig, settings: EngineSettings):
    if args.command == 'apply':
        return run_apply(config, settings, args.formula)
    if args.command == 'verify':
        return run_verify(config, settings)
    if args.command == 'moments':
        return run_moments(config, settings)
    if args.command == 'transform':
        return run_transform(config, settings, args.roundtrip)
    if args.command == 'seminorm':
        return run_seminorm(config, settings, args.kind)
    if args.command == 'compose':
        return run_compose(config, settings)
    return run_bench(config, settings)


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Run one subcommand; returns the exit status."""
    args = build_parser().parse_args(argv)
    setup_logging(LogLevel.WARNING)
    set_library_log_level('numpy', LogLevel.ERROR)

    try:
        raw = read_experiment(args.config, {'box': args.box})
        settings = acquire_settings(args, raw)
        config = ExperimentConfig.parse(raw)
    except ConfigError as e:
        logger.error(f"❌ Invalid configuration: {e}")
        return EXIT_CONFIG

    settings.apply()
    logger.info(f"🚀 Running {args.command} on {config.name}")
    result = dispatch(args, config, settings)

    if 'error' in result:
        print(result['error'], file=sys.stderr)
        return EXIT_CONFIG if 'path' in result else EXIT_FAILURE

    report, table = result['report'], result['table']
    if args.out and table is not None:
        write_table(table, args.out)
    write_report(report, args.report)
    return EXIT_PASS if report.passed else EXIT_FAILURE


if __name__ == '__main__':
    sys.exit(main())

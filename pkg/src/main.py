"""
Ratio-Set Workbench - Main Application
Exact set algebra, sum-product verifiers and figure rendering from the command line

Exit codes: 0 all checks passed, 1 a verified inequality failed or an internal
invariant broke, 2 usage or input error, 3 size cap exceeded.
"""

import argparse
import logging
import sys
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Callable, Dict, List, Optional

# Add project root to path
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

from src import __version__
from src.arith.rational import parse_real
from src.arith.scalars import format_scalar
from src.arith.wedge import WedgeSpec
from src.dsl.parser import ParseError, SetLiteral, parse_expr
from src.dsl.evaluator import eval_expr
from src.geometry.complex_ratio import thm6_witnesses
from src.geometry.mst import euclidean_mst, format_mst_dump, write_mst_dump
from src.geometry.region_probe import region_disjointness_probe
from src.geometry.slope_cover import thm1_witnesses, thm2_witnesses
from src.geometry.witness import format_witness_dump, write_witness_dump
from src.harness.coprime import coprime_density
from src.harness.energy import energy_report
from src.harness.scan import ScanKind, conjecture_scan
from src.harness.trials import TrialSpec, run_trials, trial_sets
from src.harness.verifiers import (
    points_from_set,
    ungar_check,
    verify_corollary5,
    verify_lemma3,
    verify_lemma7,
    verify_thm1,
    verify_thm2,
    verify_thm4,
    verify_thm6,
    verify_thm9,
)
from src.render.svg import FigureKind, render_figure
from src.sets.scalar_set import ScalarSet, SetOp, pairwise
from src.sets.set_file import load_set_file
from src.utils.config_loader import WorkbenchConfig, config_problems, load_config
from src.utils.errors import InvariantViolation, SizeCapExceeded
from src.utils.reporting import ReportDocument, VerificationReport


EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_SIZE_CAP = 3


def setup_logging(log_level: str = "INFO", log_file: Optional[str] = None) -> logging.Logger:
    """
    Setup logging configuration

    Console output goes to stderr; stdout carries results.

    Args:
        log_level: Logging level (DEBUG, INFO, WARNING, ERROR)
        log_file: Optional log file path

    Returns:
        Configured logger instance
    """
    # Create formatters
    detailed_formatter = logging.Formatter(
        '%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        datefmt='%Y-%m-%d %H:%M:%S'
    )
    simple_formatter = logging.Formatter('%(levelname)s - %(message)s')

    # Console handler
    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setLevel(getattr(logging, log_level.upper()))
    console_handler.setFormatter(simple_formatter)
    handlers: List[logging.Handler] = [console_handler]

    # File handler (if specified)
    if log_file:
        log_dir = Path(log_file).parent
        log_dir.mkdir(parents=True, exist_ok=True)

        file_handler = logging.FileHandler(log_file)
        file_handler.setLevel(logging.DEBUG)
        file_handler.setFormatter(detailed_formatter)
        handlers.append(file_handler)

    # Application logger plus the package loggers of every module
    for name in ("RatioWorkbench", "src"):
        target = logging.getLogger(name)
        target.setLevel(logging.DEBUG if log_file else getattr(logging, log_level.upper()))
        for old in list(target.handlers):
            target.removeHandler(old)
            old.close()
        for handler in handlers:
            target.addHandler(handler)
        target.propagate = False

    return logging.getLogger("RatioWorkbench")


@dataclass
class RunContext:
    """Effective settings after configuration and command-line overrides"""
    config: WorkbenchConfig
    k: int = 2

    @property
    def size_cap(self) -> int:
        return self.config.set_algebra.size_cap

    @property
    def wedge(self) -> WedgeSpec:
        return self.config.arithmetic.wedge()

    @property
    def sectors(self) -> int:
        return self.config.complex.sector_count


SingleTask = Callable[[ScalarSet, RunContext], VerificationReport]

SINGLE_SET_TASKS: Dict[str, SingleTask] = {
    "thm1": lambda a, ctx: verify_thm1(a, ctx.size_cap),
    "thm2": lambda a, ctx: verify_thm2(points_from_set(a)),
    "thm4": lambda a, ctx: verify_thm4(a, ctx.k, ctx.size_cap),
    "corollary5": lambda a, ctx: verify_corollary5(a, ctx.size_cap),
    "thm6": lambda a, ctx: verify_thm6(a, ctx.wedge, ctx.sectors, ctx.size_cap),
    "thm9": lambda a, ctx: verify_thm9(a, ctx.k, ctx.size_cap),
    "ungar": lambda a, ctx: ungar_check(a, ctx.size_cap),
    "energy": lambda a, ctx: energy_report(a),
}

MULTI_SET_TASKS = {
    "lemma3": (("A", "B", "C", "D"), lambda s, ctx: verify_lemma3(*s, size_cap=ctx.size_cap)),
    "lemma7": (("A", "B", "C"), lambda s, ctx: verify_lemma7(*s, ctx.wedge, ctx.sectors, ctx.size_cap)),
}

VERIFY_TASKS = sorted(list(SINGLE_SET_TASKS) + list(MULTI_SET_TASKS) + ["coprime"])


def build_parser() -> argparse.ArgumentParser:
    """Command-line parser with one subcommand per tool"""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--set', dest='set_files', action='append', default=[], metavar='NAME=FILE',
                        help='Bind a set name to a set file (repeatable)')
    common.add_argument('--inline', action='append', default=[], metavar='NAME={...}',
                        help='Bind a set name to a literal, e.g. A={1,2,3} (repeatable)')
    common.add_argument('--random', metavar='SPEC',
                        help='Generated sets: size=N,trials=T,seed=S,domain=D[,max=M]')
    common.add_argument('--report', metavar='FILE.json', help='Write a JSON report document')
    common.add_argument('--elements', action='store_true', help='Print full element dumps')
    common.add_argument('--wedge-slope', metavar='P/Q', help='Wedge slope bound (overrides config)')
    common.add_argument('--sectors', type=int, help='Pigeonhole sector count (overrides config)')
    common.add_argument('--size-cap', type=int, help='Enumeration limit (overrides config)')
    common.add_argument('--no-timing', action='store_true', help='Write elapsed_ms as 0 in reports')
    common.add_argument('--config-dir', type=str, default='config',
                        help='Configuration directory (default: config)')
    common.add_argument('--log-level', type=str, default=None,
                        choices=['DEBUG', 'INFO', 'WARNING', 'ERROR'], help='Logging level')
    common.add_argument('--log-file', type=str, default=None, help='Log file path')

    parser = argparse.ArgumentParser(
        description="Ratio-Set Workbench",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  # Size of the ratio set of a sumset
  python src/main.py eval "(A+A)/(A+A)" --inline "A={1,2,3}"

  # Theorem 1 tightness with a JSON report
  python src/main.py verify thm1 --inline "A={1,2,3}" --report out/thm1.json

  # 100 random sets
  python src/main.py verify thm1 --random size=5,trials=100,seed=7,domain=positive-rationals

  # Figure of the slope cover
  python src/main.py render slope-cover --inline "A={1,2,3}" --out fig.svg
        """
    )
    sub = parser.add_subparsers(dest='command', required=True)

    p_eval = sub.add_parser('eval', parents=[common], help='Evaluate a set expression')
    p_eval.add_argument('expr', help='Expression, e.g. "(A+A)/(A+A)"')

    p_verify = sub.add_parser('verify', parents=[common], help='Run a verifier')
    p_verify.add_argument('task', choices=VERIFY_TASKS)
    p_verify.add_argument('--k', type=int, default=2, help='Fold parameter for thm4/thm9 (default: 2)')
    p_verify.add_argument('--n', type=int, default=None, help='N for coprime')

    p_witness = sub.add_parser('witness', parents=[common], help='Dump constructive witnesses')
    p_witness.add_argument('kind', choices=['thm1', 'thm2', 'thm6'])
    p_witness.add_argument('--out', help='Dump file (default: stdout)')

    p_mst = sub.add_parser('mst', parents=[common], help='Spanning tree over the ratio points of A/A')
    p_mst.add_argument('--out', help='Dump file (default: stdout)')
    p_mst.add_argument('--probe', metavar='FILE.json', help='Write the region disjointness probe')

    p_scan = sub.add_parser('scan', parents=[common], help='Conjecture scan (exploration only)')
    p_scan.add_argument('kind', choices=['kA^(k)', 'fold-product', 'triple-product'])
    p_scan.add_argument('--k', type=int, default=2)
    p_scan.add_argument('--out', help='JSON file (default: stdout)')

    p_render = sub.add_parser('render', parents=[common], help='Render an SVG figure')
    p_render.add_argument('kind', choices=[k.value for k in FigureKind])
    p_render.add_argument('--out', required=True, help='SVG output path')

    return parser


def effective_config(args: argparse.Namespace) -> WorkbenchConfig:
    """Configuration file values with command-line overrides applied"""
    config = load_config(args.config_dir)
    if args.wedge_slope is not None:
        config.arithmetic = replace(config.arithmetic, wedge_slope=parse_real(args.wedge_slope))
    if args.sectors is not None:
        config.complex = replace(config.complex, sector_count=args.sectors)
    if args.size_cap is not None:
        config.set_algebra = replace(config.set_algebra, size_cap=args.size_cap)
    if args.no_timing:
        config.harness = replace(config.harness, include_timing=False)
    problems = config_problems(config)
    if problems:
        raise ValueError("; ".join(problems))
    return config


@dataclass
class SetBindings:
    """
    Sets named on the command line

    Attributes:
        sets: Set per name
        duplicates: Collapsed duplicate lines per name bound from a set file
    """
    sets: Dict[str, ScalarSet] = field(default_factory=dict)
    duplicates: Dict[str, int] = field(default_factory=dict)

    def duplicate_notes(self) -> List[str]:
        return [
            f"set {name}: {count} duplicate line(s) collapsed"
            for name, count in sorted(self.duplicates.items())
            if count
        ]


def bind_sets(args: argparse.Namespace) -> SetBindings:
    """Sets named by --set and --inline"""
    bindings = SetBindings()
    env = bindings.sets
    for binding in args.set_files:
        name, path = _split_binding(binding, '--set')
        loaded = load_set_file(path)
        env[name] = loaded.scalar_set
        bindings.duplicates[name] = loaded.duplicate_count
    for binding in args.inline:
        name, literal = _split_binding(binding, '--inline')
        node = parse_expr(literal)
        if not isinstance(node, SetLiteral):
            raise ValueError(f"--inline expects a literal like {{1,2}}, got {literal!r}")
        env[name] = ScalarSet(node.elements)
        bindings.duplicates.pop(name, None)
    return bindings


def _split_binding(binding: str, flag: str):
    if '=' not in binding:
        raise ValueError(f"{flag} expects NAME=VALUE, got {binding!r}")
    name, value = binding.split('=', 1)
    if not name.strip():
        raise ValueError(f"{flag} needs a set name: {binding!r}")
    return name.strip(), value.strip()


def _require(env: Dict[str, ScalarSet], name: str, what: str) -> ScalarSet:
    if name not in env:
        raise ValueError(f"{what} needs set {name} (use --set, --inline or --random)")
    return env[name]


def _random_spec(args: argparse.Namespace, config: WorkbenchConfig) -> Optional[TrialSpec]:
    return TrialSpec.parse(args.random, config.harness.seed) if args.random else None


def run_verify(args, ctx: RunContext, env: Dict[str, ScalarSet], logger: logging.Logger) -> List[VerificationReport]:
    spec = _random_spec(args, ctx.config)
    workers = ctx.config.harness.max_workers
    if args.task == "coprime":
        if args.n is None:
            raise ValueError("verify coprime needs --n N")
        return [coprime_density(args.n, ctx.size_cap)]

    if args.task in MULTI_SET_TASKS:
        names, fn = MULTI_SET_TASKS[args.task]
        if spec:
            pool = trial_sets(replace(spec, trials=spec.trials * len(names)))
            groups = [pool[i:i + len(names)] for i in range(0, len(pool), len(names))]
            return run_trials(lambda group: fn(group, ctx), groups, workers)
        return [fn([_require(env, n, args.task) for n in names], ctx)]

    fn = SINGLE_SET_TASKS[args.task]
    if spec:
        logger.info(f"Running {args.task} on {spec.trials} generated set(s)")
        return run_trials(lambda a: fn(a, ctx), trial_sets(spec), workers)
    return [fn(_require(env, "A", args.task), ctx)]


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        path = Path(out)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _summary(report: VerificationReport) -> str:
    verdict = "PASS" if report.passed else "FAIL"
    return f"{report.task}: measured {report.measured} vs bound {report.bound} ... {verdict}"


def dispatch(args: argparse.Namespace, ctx: RunContext, logger: logging.Logger) -> int:
    """Run one subcommand; returns the exit code"""
    bindings = bind_sets(args)
    env = bindings.sets
    reports: List[VerificationReport] = []
    exit_code = EXIT_OK

    if args.command == 'eval':
        value = eval_expr(parse_expr(args.expr), env, ctx.size_cap)
        print(f"|{args.expr}| = {len(value)}")
        if args.elements:
            for element in value:
                print(format_scalar(element))

    elif args.command == 'verify':
        ctx.k = args.k
        reports = run_verify(args, ctx, env, logger)
        if not args.random:
            for report in reports:
                report.notes.extend(bindings.duplicate_notes())
        for report in reports:
            print(_summary(report))
            if args.elements:
                for key, value in sorted(report.constants.items()):
                    print(f"  {key} = {value}")

    elif args.command == 'witness':
        a = _require(env, "A", f"witness {args.kind}")
        if args.kind == 'thm1':
            witnesses = thm1_witnesses(a)
        elif args.kind == 'thm2':
            witnesses = thm2_witnesses(points_from_set(a))
        else:
            witnesses = thm6_witnesses(a, ctx.wedge, ctx.sectors, ctx.size_cap)
        if args.out:
            write_witness_dump(witnesses, args.out)
        else:
            sys.stdout.write(format_witness_dump(witnesses))
        logger.info(f"{witnesses.distinct_count} witnesses, target {witnesses.target_bound}")
        if not witnesses.passed:
            exit_code = EXIT_FAILED

    elif args.command == 'mst':
        a = _require(env, "A", "mst").as_complex().without_zero()
        ratios = pairwise(a, a, SetOp.DIV, ctx.size_cap).result
        mst = euclidean_mst(list(ratios))
        if args.out:
            write_mst_dump(mst, args.out)
        else:
            sys.stdout.write(format_mst_dump(mst))
        if args.probe:
            probe = region_disjointness_probe(mst, ctx.wedge, ctx.config.complex.probe_resolution)
            _emit(probe.to_json(), args.probe)

    elif args.command == 'scan':
        spec = _random_spec(args, ctx.config)
        sets = trial_sets(spec) if spec else [env[name] for name in sorted(env)]
        scan = conjecture_scan(
            ScanKind.parse(args.kind), sets, args.k, ctx.size_cap, ctx.config.harness.max_workers
        )
        _emit(scan.to_json(), args.out)

    elif args.command == 'render':
        a = _require(env, "A", "render")
        render_figure(FigureKind(args.kind), a, args.out, ctx.wedge, ctx.config.render.float_precision)

    if reports:
        failed = [r for r in reports if not r.passed]
        if failed:
            logger.error(f"{len(failed)} of {len(reports)} check(s) FAILED")
            exit_code = EXIT_FAILED
        if args.report:
            metadata = {"tool": "ratio-workbench", "version": __version__, "config": _config_metadata(ctx.config)}
            if bindings.duplicates:
                metadata["set_file_duplicates"] = dict(sorted(bindings.duplicates.items()))
            document = ReportDocument(reports, metadata)
            document.write(args.report, ctx.config.harness.include_timing)
            logger.info(f"Report written to {args.report}")
    return exit_code


def _config_metadata(config: WorkbenchConfig) -> Dict[str, object]:
    return {
        "wedge_slope": config.arithmetic.wedge_slope,
        "size_cap": config.set_algebra.size_cap,
        "sector_count": config.complex.sector_count,
        "seed": config.harness.seed,
    }


def main(argv: Optional[List[str]] = None) -> int:
    """Main entry point"""
    parser = build_parser()
    args = parser.parse_args(argv)

    try:
        config = effective_config(args)
    except (ValueError, FileNotFoundError) as e:
        setup_logging(args.log_level or "INFO", args.log_file)
        logging.getLogger("RatioWorkbench").error(f"Configuration error: {e}")
        return EXIT_USAGE

    logger = setup_logging(args.log_level or config.logging.level, args.log_file or config.logging.file)
    logger.debug(f"Command: {args.command}, configuration directory: {args.config_dir}")

    try:
        return dispatch(args, RunContext(config), logger)

    except InvariantViolation as e:
        logger.error(f"INTERNAL INVARIANT VIOLATED: {e}")
        logger.error(f"Details: {e.details}")
        return EXIT_FAILED

    except SizeCapExceeded as e:
        logger.error(f"{e}")
        return EXIT_SIZE_CAP

    except ParseError as e:
        logger.error(f"Syntax error: {e}")
        return EXIT_USAGE

    except FileNotFoundError as e:
        logger.error(f"File not found: {e}")
        return EXIT_USAGE

    except (ValueError, KeyError, ZeroDivisionError) as e:
        logger.error(f"Input error: {e}")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

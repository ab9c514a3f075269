"""
Command-line front end.

    madcc design verify fano --t 2
    madcc scheme tdesign --design fano --i 1 --out bundles/fano
    madcc simulate bundles/fano --demand random --seed 7
    madcc compare table2 --m 3 --q 3 --t 2 --r 2

Exit codes: 0 success, 1 usage or parse error, 2 construction or
verification failure, 3 delivery or decode failure.
"""

import argparse
import logging
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Tuple

from .arrays import example1_dpda, find_phi, parse_array, verify_dpda, verify_pda
from .designs import (
    FIXTURES,
    NONUNIFORM,
    NOT_AN_OA,
    Design,
    GroupDivisibleDesign,
    OrthogonalArray,
    Resolution,
    complete_design,
    crd_from_oa,
    crd_profile,
    design_profile,
    dual_design,
    duplicate_blocks,
    format_structure,
    gdd_from_crd,
    gdd_profile,
    linear_mds_oa,
    load_fixture,
    load_structure,
    oa_profile,
    proper_oa,
    resolvable_from_code,
    trivial_gdd,
)
from .errors import ConstructionUnsupportedError, InvalidParametersError, MadccError
from .evaluation import (
    DEMAND_MODES,
    DemandVector,
    MemoryLoadPoint,
    aggregate_results,
    check_table,
    memory_share,
    memory_tradeoff_points,
    render_csv,
    render_points_csv,
    render_text,
    run_experiment,
    run_experiment_suite,
    table_report,
)
from .evaluation.experiments import DEFAULT_FILE_SIZE, DEFAULT_SEED, DEFAULT_TRIALS, FIXED
from .evaluation.tables import DEFAULT_PARAMS, points_frame, render_checks
from .schemes import (
    COR1,
    FAMILY_I,
    FAMILY_J,
    THM5,
    SchemeBundle,
    check_consistency,
    complete_family_metrics,
    complete_family_scheme,
    cor5_scheme,
    load_bundle,
    original_d2d_bundle,
    save_bundle,
    tdesign_d2d_scheme,
    tdesign_scheme,
    tgdd_d2d_scheme,
    tgdd_scheme,
    thm9_scheme,
)
from .utils import configure_logging

logger = logging.getLogger(__name__)

DESIGN_ACTIONS = ('gen-complete', 'gen-proper-oa', 'gen-trivial-gdd', 'gen-mds-oa', 'from-code',
                  'dual', 'verify', 'crd-from-oa', 'gdd-from-crd')
SCHEME_KINDS = ('tdesign', 'tdesign-cor1', 'tgdd', 'thm9', 'cor4', 'cor5')
COMPARE_TARGETS = ('table1', 'table2', 'table3', 'table4', 'memory-share', 'fig11')
TABLE_NAMES = {'table1': 'I', 'table2': 'II', 'table3': 'III', 'table4': 'IV'}
EXAMPLE1 = 'example1'

# integer flags shared by the subcommands; each handler picks what it needs
PARAM_FLAGS = ('n', 'k', 'q', 'm', 's', 't', 'v', 'lam', 'i', 'l', 'r', 'idx',
               'gdd_t', 'gdd_s', 'gdd_l', 'subset_k', 'idx_i', 'idx_j')


@dataclass(frozen=True)
class CommandConfig:
    """Everything one invocation needs; built once from the parsed flags."""

    command: str
    action: Optional[str] = None
    inputs: Tuple[str, ...] = ()
    params: Dict[str, int] = field(default_factory=dict)
    out: Optional[Path] = None
    seed: int = DEFAULT_SEED
    verbose: bool = False
    jobs: int = 1
    check: bool = False
    as_printed: bool = False
    options: Dict[str, Any] = field(default_factory=dict)

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> 'CommandConfig':
        values = vars(args)
        params = {name: values[name] for name in PARAM_FLAGS if values.get(name) is not None}
        inputs = tuple(value for value in (values.get('source'),) if value is not None)
        options = {name: values[name] for name in ('design', 'gdd', 'oa', 'family', 'd2d', 'demand',
                                                   'n_files', 'file_size', 'trials', 'columns',
                                                   'points', 'format', 'axis')
                   if name in values}
        return cls(command=args.command, action=values.get('action'), inputs=inputs, params=params,
                   out=Path(args.out) if values.get('out') else None,
                   seed=values.get('seed', DEFAULT_SEED), verbose=args.verbose,
                   jobs=values.get('jobs', 1), check=values.get('check', False),
                   as_printed=values.get('as_printed', False), options=options)

    def param(self, name: str) -> int:
        if name not in self.params:
            flag = '--' + name.replace('_', '-')
            raise InvalidParametersError(f"{self.command} {self.action or ''} needs {flag}".replace('  ', ' '))
        return self.params[name]


class ArgumentParser(argparse.ArgumentParser):
    """Usage errors exit with code 1."""

    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _emit(text: str, out: Optional[Path] = None) -> None:
    if out is None:
        sys.stdout.write(text)
        return
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(text)
    logger.info("wrote %s", out)


def load_input(source: str):
    """A structure file, or the name of a built-in fixture."""
    path = Path(source)
    if path.is_file():
        return load_structure(path.read_text())
    if source in FIXTURES:
        return load_fixture(source)
    raise InvalidParametersError(f"'{source}' is neither a file nor a fixture {sorted(FIXTURES)}")


def _as_design(structure) -> Design:
    if isinstance(structure, Resolution):
        return structure.design
    if not isinstance(structure, Design):
        raise InvalidParametersError(f"expected a design, got {type(structure).__name__}")
    return structure


def _expect(structure, kind: type, what: str):
    if not isinstance(structure, kind):
        raise InvalidParametersError(f"expected {what}, got {type(structure).__name__}")
    return structure


def _parse_columns(tokens: Sequence[str]) -> List[Tuple[int, ...]]:
    try:
        return [tuple(int(x) for x in token.split(',')) for token in tokens]
    except ValueError as exc:
        raise InvalidParametersError(f"code columns read like 1,0 0,1; got {list(tokens)}") from exc


# --- design ---

def _verify_lines(structure, t: Optional[int]) -> Tuple[List[str], bool]:
    """Profile lines and whether the declared or requested strength holds."""
    if isinstance(structure, (Design, Resolution)):
        design = _as_design(structure)
        strength = t or (design.declared.t if design.declared else 2)
        lam = design_profile(design, strength)
        ok = lam != NONUNIFORM and (design.declared is None or t is not None
                                    or lam == design.declared.lam)
        lines = [f"{strength}-({design.v},{design.k},{lam})" if lam != NONUNIFORM
                 else f"{NONUNIFORM} at t={strength}"]
        duplicates = duplicate_blocks(design)
        if duplicates:
            lines.append('duplicate blocks: ' + ' '.join(
                ','.join(str(index + 1) for index in group) for group in duplicates))
        if isinstance(structure, Resolution):
            lines.append(f"crd: {crd_profile(structure).describe()}")
        return lines, ok
    if isinstance(structure, OrthogonalArray):
        strength = t or structure.strength or 2
        lam = oa_profile(structure.rows, structure.q, strength)
        if lam == NOT_AN_OA:
            return [f"{NOT_AN_OA} at t={strength}"], False
        return [f"{strength}-({structure.q},{structure.columns},{lam}) OA"], True
    gdd = _expect(structure, GroupDivisibleDesign, 'a structure')
    strength = t or gdd.t or 2
    lam = gdd_profile(gdd, strength)
    if lam == NONUNIFORM:
        return [f"{NONUNIFORM} at t={strength}"], False
    return [f"{strength}-({gdd.m},{gdd.q},{gdd.k},{lam}) GDD"], True


def cmd_design(config: CommandConfig) -> int:
    action = config.action
    if action == 'verify':
        lines, ok = _verify_lines(load_input(config.inputs[0]), config.params.get('t'))
        _emit('\n'.join(lines) + '\n', config.out)
        return 0 if ok else 2
    if action == 'gen-complete':
        structure = complete_design(config.param('n'), config.param('k'))
    elif action == 'gen-proper-oa':
        structure = proper_oa(config.param('q'), config.param('m'))
    elif action == 'gen-trivial-gdd':
        structure = trivial_gdd(config.param('m'), config.param('q'), config.param('t'))
    elif action == 'gen-mds-oa':
        structure = linear_mds_oa(config.param('q'), config.param('m'), config.param('s'))
    elif action == 'from-code':
        if not config.options.get('columns'):
            raise InvalidParametersError("from-code needs --columns")
        structure = resolvable_from_code(config.param('q'), _parse_columns(config.options['columns']))
    elif action == 'dual':
        structure = dual_design(_as_design(load_input(config.inputs[0])))
    elif action == 'crd-from-oa':
        structure = crd_from_oa(_expect(load_input(config.inputs[0]), OrthogonalArray, 'an OA'))
    else:
        res = _expect(load_input(config.inputs[0]), Resolution, 'a resolvable design with classes')
        structure = gdd_from_crd(res, crd_profile(res))
    _emit(format_structure(structure), config.out)
    return 0


# --- scheme ---

def build_scheme(config: CommandConfig) -> SchemeBundle:
    kind = config.action
    d2d = config.options.get('d2d', False)
    if kind in ('tdesign', 'tdesign-cor1'):
        if not config.options.get('design'):
            raise InvalidParametersError(f"{kind} needs --design")
        design = _as_design(load_input(config.options['design']))
        variant = THM5 if kind == 'tdesign' else COR1
        builder = tdesign_d2d_scheme if d2d else tdesign_scheme
        return builder(design, config.param('i'), variant, config.params.get('t'))
    if kind == 'tgdd':
        if not config.options.get('gdd') or not config.options.get('oa'):
            raise InvalidParametersError("tgdd needs --gdd and --oa")
        gdd = _expect(load_input(config.options['gdd']), GroupDivisibleDesign, 'a GDD')
        oa = _expect(load_input(config.options['oa']), OrthogonalArray, 'an OA')
        builder = tgdd_d2d_scheme if d2d else tgdd_scheme
        return builder(gdd, oa, config.param('l'))
    if kind == 'thm9':
        return thm9_scheme(config.param('m'), config.param('q'), config.param('t'))
    if kind == 'cor4':
        family = config.options.get('family')
        if family not in (FAMILY_I, FAMILY_J):
            raise InvalidParametersError(f"cor4 needs --family {FAMILY_I} or {FAMILY_J}")
        return complete_family_scheme(config.param('n'), config.param('k'), family, config.param('idx'))
    return cor5_scheme(config.param('m'), config.param('q'), config.param('t'))


def cmd_scheme(config: CommandConfig) -> int:
    bundle = build_scheme(config)
    if bundle.is_multiaccess:
        check_consistency(bundle)
    if config.out is not None:
        save_bundle(bundle, config.out)
    lines = [bundle.metrics.summary()]
    if config.action == 'cor4' and config.as_printed:
        printed = complete_family_metrics(config.param('n'), config.param('k'), config.options['family'],
                                          config.param('idx'), as_printed=True)
        lines.append(f"printed: {printed.summary()}")
    sys.stdout.write('\n'.join(lines) + '\n')
    return 0


# --- array ---

def _load_array(source: str):
    if source == EXAMPLE1:
        return example1_dpda()
    return parse_array(Path(source).read_text())


def cmd_array(config: CommandConfig) -> int:
    """Run the PDA checker and, when the file carries none, search for a sender map."""
    arr, phi = _load_array(config.inputs[0])
    report = verify_pda(arr) if phi is None else verify_dpda(arr, phi)
    lines = [report.describe()] + [str(violation) for violation in report.violations]
    if report.valid:
        phi = phi if phi is not None else find_phi(arr)
        if phi is None:
            lines.append('phi: none')
        else:
            lines += [f"phi: s{s}->{col + 1}" for s, col in phi.items()]
    _emit('\n'.join(lines) + '\n', config.out)
    return 0 if report.valid else 2


# --- simulate ---

def load_simulation_bundle(source: str) -> SchemeBundle:
    if source == EXAMPLE1:
        arr, phi = example1_dpda()
        return original_d2d_bundle(arr, phi, kind=EXAMPLE1)
    return load_bundle(source)


def cmd_simulate(config: CommandConfig) -> int:
    bundle = load_simulation_bundle(config.inputs[0])
    if bundle.is_multiaccess:
        check_consistency(bundle)
    n_files = config.options.get('n_files') or bundle.K
    file_size = config.options.get('file_size') or DEFAULT_FILE_SIZE
    demand = config.options.get('demand') or 'worst'
    trials = config.options.get('trials') or DEFAULT_TRIALS
    if trials > 1 and demand not in DEMAND_MODES:
        raise InvalidParametersError(
            f"--demand {demand} is a single fixed vector; use --demand random or worst with --trials {trials}")
    if trials > 1:
        results = run_experiment_suite(bundle, trials=trials, seed=config.seed, demand_mode=demand,
                                       n_files=n_files, file_size=file_size,
                                       show_progress=config.verbose)
        _emit(aggregate_results(results).to_csv(index=False, lineterminator='\n'), config.out)
        return 0 if bool(results['decode_ok'].all()) else 3
    fixed = None
    if demand not in DEMAND_MODES:
        fixed, demand = DemandVector.parse(demand, n_files), FIXED
    report = run_experiment(bundle, demand_mode=demand, seed=config.seed, n_files=n_files,
                            file_size=file_size, demand=fixed)
    _emit(report.to_text(verbose=config.verbose), config.out)
    return 0 if report.success else 3


# --- compare ---

def _table_params(config: CommandConfig, table: str) -> Dict[str, int]:
    return {name: value for name, value in config.params.items() if name in DEFAULT_PARAMS[table]}


def cmd_compare(config: CommandConfig) -> int:
    target = config.action
    if target == 'memory-share':
        n_files = config.options.get('n_files')
        if n_files is None or not config.options.get('points'):
            raise InvalidParametersError("memory-share needs --n-files and --points")
        points = [MemoryLoadPoint.parse(text) for text in config.options['points']]
        envelope = memory_share(points, n_files, config.param('k'))
        _emit(render_points_csv(envelope.sample(range(n_files + 1))), config.out)
        return 0
    if target == 'fig11':
        n_files = config.options.get('n_files')
        if not n_files:
            raise InvalidParametersError("fig11 needs --n-files")
        series = memory_tradeoff_points(config.param('v'), config.param('k'), config.params.get('lam', 1),
                                        config.param('t'), n_files)
        if config.out is not None:
            config.out.mkdir(parents=True, exist_ok=True)
            for name, points in series.items():
                for axis in ('R', 'F'):
                    (config.out / f"{name}-M{axis}.csv").write_text(render_points_csv(points, axis))
        everything = [point for points in series.values() for point in points]
        sys.stdout.write(points_frame(everything).to_csv(index=False, lineterminator='\n'))
        return 0
    table = TABLE_NAMES[target]
    params = _table_params(config, table)
    rows = table_report(table, params, jobs=config.jobs)
    render = render_csv if config.options.get('format') == 'csv' else render_text
    text = render(rows)
    status = 0
    if config.check:
        results = check_table(table, params, jobs=config.jobs)
        text += render_checks(results)
        status = 0 if all(result.passed for result in results) else 2
    _emit(text, config.out)
    return status


COMMANDS = {
    'design': cmd_design,
    'scheme': cmd_scheme,
    'array': cmd_array,
    'simulate': cmd_simulate,
    'compare': cmd_compare,
}


def _add_params(parser: argparse.ArgumentParser, names: Sequence[str]) -> None:
    for name in names:
        parser.add_argument('--' + name.replace('_', '-'), dest=name, type=int, default=None)


def create_parser() -> ArgumentParser:
    common = ArgumentParser(add_help=False)
    common.add_argument('--verbose', action='store_true', help='DEBUG logging and per-transmission dumps')
    common.add_argument('--out', default=None, help='Output file (bundle directory for scheme)')

    parser = ArgumentParser(prog='madcc', description='Multiaccess and D2D coded caching from designs')
    sub = parser.add_subparsers(dest='command', required=True, parser_class=ArgumentParser)

    design = sub.add_parser('design', parents=[common], help='Generate, transform or verify structures')
    design.add_argument('action', choices=DESIGN_ACTIONS)
    design.add_argument('source', nargs='?', default=None, help='Structure file or fixture name')
    design.add_argument('--columns', nargs='+', default=None, help='Code columns, e.g. 1,0 0,1 1,1')
    _add_params(design, ('n', 'k', 'q', 'm', 's', 't'))

    scheme = sub.add_parser('scheme', parents=[common], help='Build a scheme bundle')
    scheme.add_argument('action', choices=SCHEME_KINDS)
    scheme.add_argument('--design', default=None)
    scheme.add_argument('--gdd', default=None)
    scheme.add_argument('--oa', default=None)
    scheme.add_argument('--family', default=None, choices=(FAMILY_I, FAMILY_J))
    scheme.add_argument('--d2d', action='store_true', help='Emit the original D2D reading')
    scheme.add_argument('--as-printed', dest='as_printed', action='store_true')
    _add_params(scheme, ('n', 'k', 'q', 'm', 't', 'i', 'l', 'idx'))

    array = sub.add_parser('array', parents=[common], help='Check a PDA/DPDA file')
    array.add_argument('action', choices=('verify',))
    array.add_argument('source', help=f"Array file or '{EXAMPLE1}'")

    simulate = sub.add_parser('simulate', parents=[common], help='Place, deliver and decode')
    simulate.add_argument('source', help=f"Bundle directory or '{EXAMPLE1}'")
    simulate.add_argument('--demand', default='worst',
                          help=f"One of {DEMAND_MODES[:2]} or a vector such as 4,2,1,3")
    simulate.add_argument('--n-files', dest='n_files', type=int, default=None)
    simulate.add_argument('--file-size', dest='file_size', type=int, default=DEFAULT_FILE_SIZE)
    simulate.add_argument('--seed', type=int, default=DEFAULT_SEED)
    simulate.add_argument('--trials', type=int, default=DEFAULT_TRIALS)

    compare = sub.add_parser('compare', parents=[common], help='Comparison tables and tradeoffs')
    compare.add_argument('action', choices=COMPARE_TARGETS)
    compare.add_argument('--check', action='store_true', help='Cross-check rows against constructions')
    compare.add_argument('--jobs', type=int, default=1)
    compare.add_argument('--format', choices=('text', 'csv'), default='text')
    compare.add_argument('--n-files', dest='n_files', type=int, default=None)
    compare.add_argument('--points', nargs='+', default=None, help='Achievable points as M:R')
    _add_params(compare, ('v', 'k', 'lam', 't', 'i', 'r', 'm', 'q', 'n',
                          'gdd_t', 'gdd_s', 'gdd_l', 'subset_k', 'idx_i', 'idx_j'))
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = create_parser().parse_args(argv)
    config = CommandConfig.from_args(args)
    configure_logging(config.verbose)
    if config.command == 'design' and config.action in ('dual', 'verify', 'crd-from-oa', 'gdd-from-crd') \
            and not config.inputs:
        print(f"error: design {config.action} needs an input", file=sys.stderr)
        return 1
    try:
        return COMMANDS[config.command](config)
    except ConstructionUnsupportedError as exc:
        print(f"error: {exc}", file=sys.stderr)
        if exc.report is not None:
            for violation in exc.report.violations:
                print(f"  {violation}", file=sys.stderr)
        return exc.exit_code
    except MadccError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == '__main__':
    sys.exit(main())

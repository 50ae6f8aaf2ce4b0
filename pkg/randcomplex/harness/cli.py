"""
Command line interface.

    randcomplex generate --n 20 --d 2 --eps 1 --seed 3 --out y.json
    randcomplex spectrum --complex y.json
    randcomplex experiment --n 8 10 --eps 1 --samples 5 --out rows.csv

Exit status is 0 on success, 1 on usage or input errors and 2 when an
experiment records a violation of a deterministic inequality.

"""
import argparse
import json
import logging
import sys

import numpy as np

from .._asymptotics import edge_probability, predict, DEFAULT_BAND_CONSTANT
from .._cheeger import cheeger_exact, MAX_PARTITIONS
from .._complex import generate, load_complex, save_complex
from ..homology import spectral_gap
from ..walk import conductance_exact, conductance_estimate, simulate
from ..walk.conductance import MAX_EXACT_SUPPORT
from .config import ExperimentConfig, MEASUREMENTS
from .experiment import run_experiment
from .export import export_report, emit_plot_data


logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_VIOLATION = 2


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on usage errors, which is reserved for
    # violations here
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, '{0}: error: {1}\n'.format(self.prog, message))


def _face(text):
    try:
        return tuple(sorted(int(v) for v in text.split(',')))
    except ValueError:
        raise argparse.ArgumentTypeError(
            'expected comma separated vertices, got {0!r}'.format(text))


def _add_complex_args(p):
    p.add_argument('--complex', metavar='PATH',
                   help='read the complex from a JSON file')
    p.add_argument('--n', type=int, help='number of vertices')
    p.add_argument('--d', type=int, default=2, help='dimension')
    group = p.add_mutually_exclusive_group()
    group.add_argument('--eps', type=float,
                       help='use p = (1+eps) d log n / n')
    group.add_argument('--p', type=float, help='face probability')
    p.add_argument('--seed', type=int, default=0)


def _add_output_args(p, formats=('json', 'text')):
    p.add_argument('--out', metavar='PATH',
                   help='write the result here instead of stdout')
    p.add_argument('--format', choices=formats, default=None)


def build_parser():
    parser = _Parser(prog='randcomplex', description=__doc__,
                     formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument('--verbose', '-v', action='store_true',
                        help='log debug messages')
    sub = parser.add_subparsers(dest='command', metavar='COMMAND')
    sub.required = True

    p = sub.add_parser('generate', help='sample a complex Y(n, p; d)')
    _add_complex_args(p)
    p.add_argument('--out', metavar='PATH',
                   help='write the complex here instead of stdout')

    p = sub.add_parser('spectrum', help='spectral gap over the cycles')
    _add_complex_args(p)
    p.add_argument('--full', action='store_true',
                   help='include the whole spectrum')
    _add_output_args(p)

    p = sub.add_parser('cheeger', help='exact Cheeger constant')
    _add_complex_args(p)
    p.add_argument('--max-partitions', type=int, default=MAX_PARTITIONS)
    _add_output_args(p)

    p = sub.add_parser('conductance', help='conductance of the face walk')
    _add_complex_args(p)
    p.add_argument('--trials', type=int, default=200)
    p.add_argument('--method', choices=('auto', 'exact', 'estimate'),
                   default='auto')
    _add_output_args(p)

    p = sub.add_parser('walk', help='simulate the face walk')
    _add_complex_args(p)
    p.add_argument('--gamma', type=float, default=0.)
    p.add_argument('--steps', type=int, default=1000)
    p.add_argument('--start', type=_face,
                   help='starting face, e.g. 0,1 (default: first face '
                        'of positive co-degree)')
    _add_output_args(p)

    p = sub.add_parser('predict', help='predicted concentration band')
    p.add_argument('--n', type=int, required=True)
    p.add_argument('--d', type=int, default=2)
    p.add_argument('--eps', type=float, required=True)
    p.add_argument('--band-constant', type=float,
                   default=DEFAULT_BAND_CONSTANT)
    _add_output_args(p)

    p = sub.add_parser('experiment', help='sampled experiment over n')
    p.add_argument('--config', metavar='PATH',
                   help='JSON file keyed by configuration field names; '
                        'flags given on the command line override it')
    p.add_argument('--n', type=int, nargs='+', dest='n_values')
    p.add_argument('--d', type=int)
    group = p.add_mutually_exclusive_group()
    group.add_argument('--eps', type=float)
    group.add_argument('--p', type=float)
    p.add_argument('--samples', type=int)
    p.add_argument('--seed', type=int, dest='master_seed')
    p.add_argument('--gamma', type=float)
    p.add_argument('--measure', nargs='+', choices=MEASUREMENTS,
                   dest='measurements')
    p.add_argument('--band-constant', type=float)
    p.add_argument('--trials', type=int)
    p.add_argument('--workers', type=int)
    p.add_argument('--plot-dir', metavar='DIR')
    _add_output_args(p, formats=('csv', 'json'))
    return parser


def _complex_from_args(args):
    if args.complex is not None:
        return load_complex(args.complex)
    if args.n is None:
        raise ValueError('either --complex or --n is required')
    if args.p is not None:
        p = args.p
    elif args.eps is not None:
        p = edge_probability(args.n, args.d, args.eps)
    else:
        raise ValueError('either --eps or --p is required with --n')
    logger.debug('generating Y(%d, %g; %d) with seed %d',
                 args.n, p, args.d, args.seed)
    return generate(args.n, args.d, p, args.seed)


def _emit(data, args):
    if args.format == 'text':
        text = ''.join('{0}: {1}\n'.format(k, data[k]) for k in sorted(data))
    else:
        text = json.dumps(data, indent=2, sort_keys=True) + '\n'
    if args.out is None:
        sys.stdout.write(text)
        return
    try:
        with open(args.out, 'w') as f:
            f.write(text)
    except OSError as e:
        raise OSError('cannot write {0}: {1}'.format(args.out, e))


def _cmd_generate(args):
    Y = _complex_from_args(args)
    if args.out is None:
        data = {'n': Y.n, 'd': Y.d,
                'faces': [list(map(int, f)) for f in Y.faces]}
        sys.stdout.write(json.dumps(data) + '\n')
    else:
        save_complex(Y, args.out)
    logger.info('%r, min co-degree %d', Y, Y.min_codegree)
    return EXIT_OK


def _cmd_spectrum(args):
    Y = _complex_from_args(args)
    _emit(spectral_gap(Y, full_spectrum=args.full).to_dict(), args)
    return EXIT_OK


def _cmd_cheeger(args):
    Y = _complex_from_args(args)
    _emit(cheeger_exact(Y, max_partitions=args.max_partitions).to_dict(),
          args)
    return EXIT_OK


def _cmd_conductance(args):
    Y = _complex_from_args(args)
    method = args.method
    if method == 'auto':
        support = int(np.count_nonzero(Y.codegree))
        method = 'exact' if support <= MAX_EXACT_SUPPORT else 'estimate'
    if method == 'exact':
        res = conductance_exact(Y)
    else:
        res = conductance_estimate(Y, trials=args.trials,
                                   random_state=args.seed)
    _emit(res.to_dict(), args)
    return EXIT_OK


def _cmd_walk(args):
    Y = _complex_from_args(args)
    start = args.start
    if start is None:
        live = np.flatnonzero(Y.codegree)
        if not live.size:
            raise ValueError('the complex has no top faces')
        start = tuple(Y.ridges(live[:1])[0].tolist())
    stats = simulate(Y, args.gamma, start, args.steps, seed=args.seed)
    _emit({'start': list(start),
           'final_state': list(stats.final_state),
           'checkpoints': stats.checkpoints.tolist(),
           'tv': stats.tv.tolist(),
           'visited': int(np.count_nonzero(stats.visits))}, args)
    return EXIT_OK


def _cmd_predict(args):
    _emit(predict(args.n, args.d, args.eps, args.band_constant).to_dict(),
          args)
    return EXIT_OK


_CONFIG_FLAGS = ('n_values', 'd', 'eps', 'p', 'samples', 'master_seed',
                 'gamma', 'measurements', 'band_constant', 'trials',
                 'workers', 'plot_dir')


def _experiment_config(args):
    data = {}
    if args.config is not None:
        data = ExperimentConfig.from_json(args.config).to_dict()
    for key in _CONFIG_FLAGS:
        value = getattr(args, key)
        if value is not None:
            data[key] = value
    if args.eps is not None:
        data['p'] = None
    elif args.p is not None:
        data['eps'] = None
    if 'n_values' not in data:
        raise ValueError('--n or a config file with n_values is required')
    return ExperimentConfig.from_dict(data)


def _cmd_experiment(args):
    config = _experiment_config(args)
    report = run_experiment(config)

    written = []
    for path, fmt in ((config.csv_path, 'csv'), (config.json_path, 'json')):
        if path is not None:
            written.append(export_report(report, path, format=fmt))
    if config.plot_dir is not None:
        written.extend(emit_plot_data(report, config.plot_dir))
    if args.out is not None:
        written.append(export_report(report, args.out, format=args.format))
    if not written:
        data = report.to_dict()
        sys.stdout.write(json.dumps(
            {k: data[k] for k in ('aggregates', 'predictions', 'violations')},
            indent=2, sort_keys=True) + '\n')

    for n, index, name, reason in report.skipped:
        logger.warning('n=%d sample %d: %s skipped (%s)',
                       n, index, name, reason)
    if report.deterministic_violations:
        logger.error('deterministic inequality violated: %s',
                     report.violations)
        return EXIT_VIOLATION
    return EXIT_OK


_COMMANDS = {
    'generate': _cmd_generate,
    'spectrum': _cmd_spectrum,
    'cheeger': _cmd_cheeger,
    'conductance': _cmd_conductance,
    'walk': _cmd_walk,
    'predict': _cmd_predict,
    'experiment': _cmd_experiment,
}


def main(argv=None):
    """
    Run the command line interface on `argv` (default: sys.argv[1:]) and
    return the exit status.

    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_OK
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format='%(levelname)s %(name)s: %(message)s'
    )
    try:
        return _COMMANDS[args.command](args)
    except (ValueError, OSError, RuntimeError) as e:
        logger.error('%s', e)
        return EXIT_ERROR

"""
Seeded sampling of complexes and aggregation of their measurements.

"""
import logging
import time
from concurrent.futures import ProcessPoolExecutor

import numpy as np
import pandas as pd

from .._asymptotics import predict
from .._cheeger import cheeger_exact
from .._complex import generate
from .._exceptions import InstanceTooLargeError
from ..homology import (
    spectral_gap, garland_check, random_cycle, adjacency_form_bound
)
from ..util import mix_seed
from ..walk import conductance_exact, conductance_estimate
from ..walk.conductance import MAX_EXACT_SUPPORT
from .config import ExperimentConfig


logger = logging.getLogger(__name__)

LAMBDA_TOL = 1e-8
MEASURE_COLUMNS = ['delta', 'lambda', 'h', 'phi', 'garland', 'linkspec']
ROW_COLUMNS = ['n', 'index', 'seed'] + MEASURE_COLUMNS + ['phi_method']
AGGREGATE_COLUMNS = ['n'] + ['{0}_{1}'.format(m, s) for m in MEASURE_COLUMNS
                             for s in ('mean', 'std', 'min', 'max')]
VIOLATIONS = ('lambda_le_h', 'lambda_le_codegree_bound',
              'delta_band', 'lambda_lower_band')
DETERMINISTIC = ('lambda_le_h', 'lambda_le_codegree_bound')


def sample_seed(master_seed, n, index):
    """
    64-bit seed of sample `index` at `n` vertices.

    """
    return mix_seed(master_seed, n, index)


def _linkspec(Y, p):
    g = Y.link_graph(tuple(range(Y.d - 1)))
    scale = np.sqrt(g.num_vertices * p)
    if scale == 0:
        return np.nan
    return adjacency_form_bound(g) / scale


def measure_sample(config, n, index):
    """
    Generate sample `index` at `n` vertices and compute the requested
    measurements.

    Returns
    -------
    row : dict
        Measurement values (NaN when not requested or skipped), wall
        times under 'time_<name>' and the list 'skipped' of
        (measurement, reason) pairs.

    """
    seed = sample_seed(config.master_seed, n, index)
    p = config.p_for(n)
    t0 = time.perf_counter()
    Y = generate(n, config.d, p, seed)
    row = {'n': n, 'index': index, 'seed': seed, 'phi_method': '',
           'time_generate': time.perf_counter() - t0, 'skipped': []}
    for name in MEASURE_COLUMNS:
        row[name] = np.nan

    wanted = set(config.measurements)
    for name in MEASURE_COLUMNS:
        if name not in wanted:
            continue
        t0 = time.perf_counter()
        try:
            if name == 'delta':
                row[name] = Y.min_codegree
            elif name == 'lambda':
                row[name] = spectral_gap(Y).lam
            elif name == 'h':
                row[name] = cheeger_exact(Y).value
            elif name == 'phi':
                if Y.num_faces == 0:
                    raise ValueError('the complex has no top faces')
                support = int(np.count_nonzero(Y.codegree))
                if support <= MAX_EXACT_SUPPORT:
                    res = conductance_exact(Y)
                else:
                    res = conductance_estimate(Y, trials=config.trials,
                                               random_state=seed)
                row[name], row['phi_method'] = res.phi, res.method
            elif name == 'garland':
                if Y.d < 2:
                    raise ValueError('the local decomposition requires d >= 2')
                f = random_cycle(Y, random_state=seed)
                row[name] = garland_check(Y, f).worst
            elif name == 'linkspec':
                row[name] = _linkspec(Y, p)
        except (InstanceTooLargeError, ValueError) as e:
            logger.info('n=%d sample %d: %s skipped (%s)', n, index, name, e)
            row['skipped'].append((name, str(e)))
        row['time_' + name] = time.perf_counter() - t0
    return row


def _measure_task(args):
    return measure_sample(*args)


def _count_violations(rows, predictions, d):
    counts = dict.fromkeys(VIOLATIONS, 0)
    for row in rows:
        n, delta, lam, h = row['n'], row['delta'], row['lambda'], row['h']
        if not (np.isnan(lam) or np.isnan(h)) and lam > h + LAMBDA_TOL:
            counts['lambda_le_h'] += 1
        if not (np.isnan(lam) or np.isnan(delta)) and \
                lam > n * delta / (n - d) + LAMBDA_TOL:
            counts['lambda_le_codegree_bound'] += 1
        pred = predictions.get(n)
        if pred is None:
            continue
        if not np.isnan(delta) and \
                abs(delta - pred.center) >= pred.band_halfwidth:
            counts['delta_band'] += 1
        if not (np.isnan(lam) or np.isnan(delta)) and \
                lam < delta - pred.band_halfwidth:
            counts['lambda_lower_band'] += 1
    return counts


def _aggregate(frame):
    if frame.empty:
        return pd.DataFrame(columns=AGGREGATE_COLUMNS)
    values = frame[['n'] + MEASURE_COLUMNS].astype(float)
    values['n'] = frame['n']
    grouped = values.groupby('n')
    parts = {
        'mean': grouped.mean(),
        'std': grouped.std(ddof=0),
        'min': grouped.min(),
        'max': grouped.max(),
    }
    out = pd.DataFrame(index=parts['mean'].index)
    for m in MEASURE_COLUMNS:
        for s in ('mean', 'std', 'min', 'max'):
            out['{0}_{1}'.format(m, s)] = parts[s][m]
    return out.reset_index()


class Report:
    """
    Result of `run_experiment`.

    Attributes
    ----------
    config : ExperimentConfig

    rows : pandas.DataFrame
        One row per sample, sorted by (n, index).

    aggregates : pandas.DataFrame
        Per-n mean, population standard deviation, min and max of each
        measurement.

    predictions : dict(int, Prediction)
        Predicted band per n; empty when the config fixes p.

    violations : dict(str, int)
        Counts of samples violating lambda <= h + 1e-8 and
        lambda <= n delta / (n-d) + 1e-8 (deterministic), and of samples
        outside the predicted bands (probabilistic).

    skipped : list(tuple)
        (n, index, measurement, reason) for every skipped measurement.

    timings : pandas.DataFrame
        Wall times per sample and stage.

    """

    def __init__(self, config, rows, aggregates, predictions, violations,
                 skipped, timings):
        self.config = config
        self.rows = rows
        self.aggregates = aggregates
        self.predictions = predictions
        self.violations = violations
        self.skipped = skipped
        self.timings = timings

    def __repr__(self):
        return 'Report({0} samples over n = {1})'.format(
            len(self.rows), list(self.config.n_values))

    @property
    def deterministic_violations(self):
        return sum(self.violations[k] for k in DETERMINISTIC)

    def to_dict(self, include_timings=False):
        out = {
            'config': self.config.to_dict(),
            'rows': _records(self.rows),
            'aggregates': _records(self.aggregates),
            'predictions': {str(n): p.to_dict()
                            for n, p in sorted(self.predictions.items())},
            'violations': dict(self.violations),
            'skipped': [list(s) for s in self.skipped],
        }
        if include_timings:
            out['timings'] = _records(self.timings)
        return out


def _records(frame):
    out = []
    for rec in frame.to_dict(orient='records'):
        clean = {}
        for k, v in rec.items():
            if isinstance(v, (np.integer,)):
                v = int(v)
            elif isinstance(v, (float, np.floating)):
                v = None if np.isnan(v) else float(v)
            elif v is pd.NA:
                v = None
            clean[k] = v
        out.append(clean)
    return out


def build_report(config, rows):
    """
    Assemble a `Report` from measured rows.

    """
    rows = sorted(rows, key=lambda r: (r['n'], r['index']))
    predictions = {}
    if config.eps is not None:
        predictions = {n: predict(n, config.d, config.eps,
                                  config.band_constant)
                       for n in config.n_values}

    frame = pd.DataFrame([{k: r[k] for k in ROW_COLUMNS} for r in rows],
                         columns=ROW_COLUMNS)
    frame['delta'] = frame['delta'].astype('Float64').astype('Int64')
    timing_cols = ['n', 'index'] + sorted(
        {k for r in rows for k in r if k.startswith('time_')})
    timings = pd.DataFrame([{k: r.get(k, np.nan) for k in timing_cols}
                            for r in rows], columns=timing_cols)
    skipped = [(r['n'], r['index'], name, reason)
               for r in rows for name, reason in r['skipped']]
    violations = _count_violations(rows, predictions, config.d)
    return Report(config, frame, _aggregate(frame), predictions,
                  violations, skipped, timings)


def run_experiment(config):
    """
    Run a sampled experiment.

    Sample i at n vertices is generated with seed
    mix_seed(master_seed, n, i), so the report does not depend on the
    number of worker processes.

    Parameters
    ----------
    config : ExperimentConfig or dict

    Returns
    -------
    report : Report

    """
    if not isinstance(config, ExperimentConfig):
        config = ExperimentConfig.from_dict(config)
    tasks = [(config, n, i) for n in config.n_values
             for i in range(config.samples)]
    workers = config.resolve_workers()
    logger.info('running %d samples on %d worker(s)', len(tasks), workers)
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(_measure_task, tasks))
    else:
        rows = [_measure_task(t) for t in tasks]

    report = build_report(config, rows)
    if report.deterministic_violations:
        logger.warning('deterministic inequality violated: %s',
                       report.violations)
    return report

"""
Flat-file persistence of experiment reports: CSV rows, JSON reports and
plot-data series.

"""
import json
import logging
import os

import numpy as np
import pandas as pd

from .._asymptotics import Prediction
from .config import ExperimentConfig
from .experiment import (
    Report, MEASURE_COLUMNS, ROW_COLUMNS, AGGREGATE_COLUMNS, VIOLATIONS
)


logger = logging.getLogger(__name__)

CSV_COLUMNS = ['n', 'seed', 'delta', 'lambda', 'h', 'phi', 'center', 'band']
PLOT_MEASUREMENTS = ['delta', 'lambda', 'h', 'phi']
OVERLAY_MEASUREMENTS = ('delta', 'lambda', 'h')


def _csv_frame(report):
    frame = report.rows[['n', 'seed', 'delta', 'lambda', 'h', 'phi']].copy()
    center = {n: p.center for n, p in report.predictions.items()}
    band = {n: p.band_halfwidth for n, p in report.predictions.items()}
    frame['center'] = frame['n'].map(center).astype(float)
    frame['band'] = frame['n'].map(band).astype(float)
    return frame[CSV_COLUMNS]


def _write_text(path, text):
    try:
        with open(path, 'w', newline='\n') as f:
            f.write(text)
    except OSError as e:
        raise OSError('cannot write {0}: {1}'.format(path, e))


def export_report(report, path, format=None, include_timings=False):
    """
    Write `report` to `path` as CSV or JSON.

    Parameters
    ----------
    report : Report

    path : str
        Output file.

    format : {'csv', 'json'}, optional
        Defaults to the extension of `path`.

    include_timings : bool, optional(default=False)
        Include wall times in JSON output. Without them, repeated runs
        of one configuration give byte-identical files.

    Returns
    -------
    path : str

    """
    if format is None:
        format = os.path.splitext(path)[1].lstrip('.').lower()
    if format == 'csv':
        text = _csv_frame(report).to_csv(index=False, na_rep='')
    elif format == 'json':
        data = report.to_dict(include_timings=include_timings)
        text = json.dumps(data, indent=2, sort_keys=True,
                          allow_nan=False) + '\n'
    else:
        raise ValueError("format must be 'csv' or 'json', got {0!r}"
                         .format(format))
    _write_text(path, text)
    logger.info('wrote %s', path)
    return path


def _frame(records, float_columns=(), int_columns=()):
    frame = pd.DataFrame.from_records(records)
    for col in float_columns:
        if col in frame:
            frame[col] = frame[col].astype(float)
    for col in int_columns:
        if col in frame:
            frame[col] = frame[col].astype('Float64').astype('Int64')
    return frame


def load_report(path):
    """
    Read a report written by `export_report` in JSON format.

    """
    try:
        with open(path) as f:
            data = json.load(f)
    except OSError as e:
        raise OSError('cannot read report {0}: {1}'.format(path, e))
    try:
        config = ExperimentConfig.from_dict(data['config'])
        rows = _frame(data['rows'], MEASURE_COLUMNS[1:], ['delta'])
        aggregates = _frame(data['aggregates'], AGGREGATE_COLUMNS[1:])
        predictions = {}
        for key, p in data['predictions'].items():
            predictions[int(key)] = Prediction(
                p['n'], p['d'], p['eps'], p['a'], p['center'], p['band'],
                p['large_eps_center'], p['expansion_a'], p['first_moment'],
                p['p'])
        violations = {k: int(data['violations'][k]) for k in VIOLATIONS}
        skipped = [tuple(s) for s in data['skipped']]
    except (KeyError, TypeError) as e:
        raise ValueError('{0} is not a report: {1}'.format(path, e))
    timings = pd.DataFrame.from_records(data.get('timings', []))
    # JSON keys are sorted on export
    rows = rows.reindex(columns=ROW_COLUMNS)
    aggregates = aggregates.reindex(columns=AGGREGATE_COLUMNS)
    return Report(config, rows, aggregates, predictions, violations,
                  skipped, timings)


def emit_plot_data(report, directory):
    """
    Write one whitespace-separated series file per measurement,
    '<measurement>.dat' in `directory`, with columns n, mean, std and,
    for delta, lambda and h when predictions exist, the predicted
    center and band half-width.

    Returns
    -------
    paths : list(str)

    """
    agg = report.aggregates
    if agg.empty:
        raise ValueError('the report has no aggregates')
    os.makedirs(directory, exist_ok=True)
    paths = []
    for m in PLOT_MEASUREMENTS:
        mean = agg['{0}_mean'.format(m)].to_numpy(dtype=float)
        if np.all(np.isnan(mean)):
            continue
        n = agg['n'].to_numpy(dtype=float)
        cols = [n, mean, agg['{0}_std'.format(m)].to_numpy(dtype=float)]
        header = 'n mean std'
        if m in OVERLAY_MEASUREMENTS and report.predictions:
            preds = [report.predictions[int(k)] for k in agg['n']]
            cols.append(np.array([p.center for p in preds]))
            cols.append(np.array([p.band_halfwidth for p in preds]))
            header += ' center band'
        path = os.path.join(directory, '{0}.dat'.format(m))
        try:
            np.savetxt(path, np.column_stack(cols), fmt='%.17g',
                       header=header)
        except OSError as e:
            raise OSError('cannot write {0}: {1}'.format(path, e))
        paths.append(path)
    return paths

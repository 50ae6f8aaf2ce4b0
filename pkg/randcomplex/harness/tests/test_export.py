"""
Tests for harness/export.py

"""
import json
import os

import numpy as np
import pytest
from numpy.testing import (
    assert_allclose, assert_array_equal, assert_raises, assert_
)

from randcomplex import predict
from randcomplex.harness import (
    ExperimentConfig, run_experiment, build_report, export_report,
    load_report, emit_plot_data
)
from randcomplex.harness.config import WORKERS_ENV


@pytest.fixture(autouse=True)
def single_worker(monkeypatch):
    monkeypatch.delenv(WORKERS_ENV, raising=False)


@pytest.fixture(scope='module')
def report():
    config = ExperimentConfig([7, 8], d=2, eps=1., samples=5,
                              measurements=['delta', 'lambda', 'h'])
    return run_experiment(config)


def _lines(path):
    with open(path) as f:
        return f.read().splitlines()


class TestCSV:
    def test_empty(self, tmp_path):
        report = build_report(ExperimentConfig([8], eps=1.), [])
        path = export_report(report, str(tmp_path / 'empty.csv'))
        assert_(_lines(path) == ['n,seed,delta,lambda,h,phi,center,band'])

    def test_rows(self, tmp_path):
        config = ExperimentConfig([8], d=2, eps=1., samples=5,
                                  measurements=['delta'])
        path = export_report(run_experiment(config),
                             str(tmp_path / 'rows.csv'))
        lines = _lines(path)
        assert_(len(lines) == 6)
        fields = lines[1].split(',')
        assert_(len(fields) == 8)
        # lambda, h and phi were not requested
        assert_(fields[3:6] == ['', '', ''])
        assert_allclose(float(fields[6]), predict(8, 2, 1.).center)

    def test_fixed_p(self, tmp_path):
        report = run_experiment({'n_values': [6], 'p': 0.5,
                                 'measurements': ['delta']})
        lines = _lines(export_report(report, str(tmp_path / 'p.csv')))
        assert_(lines[1].endswith(',,'))


class TestJSON:
    def test_round_trip(self, report, tmp_path):
        path = export_report(report, str(tmp_path / 'report.json'))
        loaded = load_report(path)
        assert_(loaded.config == report.config)
        assert_(list(loaded.aggregates.columns) ==
                list(report.aggregates.columns))
        assert_array_equal(loaded.aggregates.to_numpy(dtype=float),
                           report.aggregates.to_numpy(dtype=float))
        assert_(loaded.predictions == report.predictions)
        assert_(loaded.violations == report.violations)
        assert_array_equal(loaded.rows['lambda'].to_numpy(dtype=float),
                           report.rows['lambda'].to_numpy(dtype=float))

    def test_contents(self, report, tmp_path):
        path = export_report(report, str(tmp_path / 'report.json'))
        with open(path) as f:
            data = json.load(f)
        assert_(set(data) == {'config', 'rows', 'aggregates', 'predictions',
                              'violations', 'skipped'})
        assert_(len(data['rows']) == 10)
        assert_(data['rows'][0]['phi'] is None)

    def test_timings(self, report, tmp_path):
        path = export_report(report, str(tmp_path / 'report.json'),
                             include_timings=True)
        loaded = load_report(path)
        assert_(len(loaded.timings) == 10)

    def test_not_a_report(self, tmp_path):
        path = tmp_path / 'bad.json'
        path.write_text('{"config": {}}')
        assert_raises(ValueError, load_report, str(path))
        assert_raises(OSError, load_report, str(tmp_path / 'missing.json'))


def test_bad_format(report, tmp_path):
    assert_raises(ValueError, export_report, report,
                  str(tmp_path / 'report.txt'))
    assert_raises(ValueError, export_report, report,
                  str(tmp_path / 'report.csv'), format='xml')


def test_unwritable(report, tmp_path):
    path = str(tmp_path / 'missing' / 'report.csv')
    with pytest.raises(OSError, match='report.csv'):
        export_report(report, path)


class TestPlotData:
    def test_overlay(self, report, tmp_path):
        paths = emit_plot_data(report, str(tmp_path))
        names = sorted(os.path.basename(p) for p in paths)
        assert_(names == ['delta.dat', 'h.dat', 'lambda.dat'])
        data = np.loadtxt(str(tmp_path / 'delta.dat'), ndmin=2)
        assert_(data.shape == (2, 5))
        assert_array_equal(data[:, 0], [7, 8])
        for row in data:
            pred = predict(int(row[0]), 2, 1.)
            assert_allclose(row[3], pred.center, rtol=0, atol=1e-12)
            assert_allclose(row[4], pred.band_halfwidth, rtol=0, atol=1e-12)
        with open(str(tmp_path / 'delta.dat')) as f:
            assert_(f.readline().strip() == '# n mean std center band')

    def test_single_point(self, tmp_path):
        report = run_experiment({'n_values': [6], 'p': 0.5, 'samples': 3,
                                 'measurements': ['delta']})
        paths = emit_plot_data(report, str(tmp_path / 'plots'))
        assert_(len(paths) == 1)
        data = np.loadtxt(paths[0], ndmin=2)
        # no prediction overlay when p is fixed
        assert_(data.shape == (1, 3))

    def test_empty(self, tmp_path):
        report = build_report(ExperimentConfig([8], eps=1.), [])
        assert_raises(ValueError, emit_plot_data, report, str(tmp_path))

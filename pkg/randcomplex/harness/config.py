"""
Configuration of sampled experiments.

"""
import json
import os
from dataclasses import dataclass, field, fields, asdict
from typing import List, Optional, Tuple

from .._asymptotics import edge_probability, DEFAULT_BAND_CONSTANT


MEASUREMENTS = ('delta', 'lambda', 'h', 'phi', 'garland', 'linkspec')
WORKERS_ENV = 'RANDCOMPLEX_WORKERS'


@dataclass
class ExperimentConfig:
    """
    Parameters of a sampled experiment over a list of vertex counts.

    Exactly one of `eps` and `p` is given; with `eps` the face
    probability at n vertices is (1+eps) d log n / n, capped at 1.

    Attributes
    ----------
    n_values : list(int)
        Vertex counts, each greater than `d`.

    d : int
        Dimension.

    eps : float, optional

    p : float, optional

    samples : int
        Number of complexes sampled per vertex count.

    master_seed : int
        Seed from which the per-sample seeds are derived.

    gamma : float
        Laziness of the face walk, in [0, 1).

    measurements : tuple(str)
        Subset of 'delta', 'lambda', 'h', 'phi', 'garland', 'linkspec'.

    band_constant : float
        C in the predicted band half-width C sqrt(log n).

    trials : int
        Sets sampled by the conductance estimator.

    csv_path, json_path, plot_dir : str, optional
        Output locations; unset outputs are not written.

    workers : int, optional
        Size of the process pool; the environment variable
        RANDCOMPLEX_WORKERS takes precedence.

    """
    n_values: List[int]
    d: int = 2
    eps: Optional[float] = None
    p: Optional[float] = None
    samples: int = 1
    master_seed: int = 0
    gamma: float = 0.
    measurements: Tuple[str, ...] = ('delta', 'lambda', 'h')
    band_constant: float = DEFAULT_BAND_CONSTANT
    trials: int = 200
    csv_path: Optional[str] = None
    json_path: Optional[str] = None
    plot_dir: Optional[str] = None
    workers: Optional[int] = field(default=None, compare=False)

    def __post_init__(self):
        if isinstance(self.n_values, int):
            self.n_values = [self.n_values]
        self.n_values = [int(n) for n in self.n_values]
        self.measurements = tuple(self.measurements)
        if not self.n_values:
            raise ValueError('n_values must not be empty')
        if self.d < 1:
            raise ValueError('d must be at least 1')
        bad = [n for n in self.n_values if n <= self.d]
        if bad:
            raise ValueError(
                'every n must exceed d = {0}; got {1}'.format(self.d, bad)
            )
        if self.samples < 1:
            raise ValueError('samples must be at least 1')
        if (self.eps is None) == (self.p is None):
            raise ValueError('exactly one of eps and p must be given')
        if self.eps is not None and self.eps <= 0:
            raise ValueError('eps must be positive')
        if self.p is not None and not 0 <= self.p <= 1:
            raise ValueError('p must lie in [0, 1]')
        if not 0 <= self.gamma < 1:
            raise ValueError('gamma must lie in [0, 1)')
        unknown = set(self.measurements) - set(MEASUREMENTS)
        if unknown:
            raise ValueError(
                'unknown measurements {0}; choose from {1}'.format(
                    sorted(unknown), MEASUREMENTS)
            )
        if self.band_constant <= 0:
            raise ValueError('band_constant must be positive')
        if self.trials < 1:
            raise ValueError('trials must be at least 1')
        if self.workers is not None and self.workers < 1:
            raise ValueError('workers must be at least 1')

    def p_for(self, n):
        """Face probability used at `n` vertices."""
        if self.p is not None:
            return float(self.p)
        return edge_probability(n, self.d, self.eps)

    def resolve_workers(self):
        """
        Number of worker processes: RANDCOMPLEX_WORKERS if set, else
        `workers`, else 1.

        """
        env = os.environ.get(WORKERS_ENV)
        if env:
            try:
                workers = int(env)
            except ValueError:
                raise ValueError(
                    '{0} must be an integer, got {1!r}'.format(WORKERS_ENV,
                                                               env)
                )
            if workers < 1:
                raise ValueError('{0} must be at least 1'.format(WORKERS_ENV))
            return workers
        return self.workers or 1

    def to_dict(self):
        out = asdict(self)
        out['measurements'] = list(self.measurements)
        out.pop('workers')
        return out

    @classmethod
    def from_dict(cls, data):
        """
        Build a config from a mapping keyed by field name; unknown keys
        raise ValueError.

        """
        names = {f.name for f in fields(cls)}
        unknown = set(data) - names
        if unknown:
            raise ValueError(
                'unknown configuration keys: {0}'.format(sorted(unknown))
            )
        return cls(**data)

    @classmethod
    def from_json(cls, path):
        try:
            with open(path) as f:
                data = json.load(f)
        except OSError as e:
            raise OSError('cannot read config {0}: {1}'.format(path, e))
        except json.JSONDecodeError as e:
            raise ValueError('{0} is not valid JSON: {1}'.format(path, e))
        if not isinstance(data, dict):
            raise ValueError('{0} must contain a JSON object'.format(path))
        return cls.from_dict(data)

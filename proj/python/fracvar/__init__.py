"""Variational solver for fractional boundary-value problems."""

import json
import os

from ._fracvar import (
    DomainError,
    HypothesisError,
    IoError,
    ValidationError,
    embedding_constant,
    gamma,
    kappa_alpha,
    kernel_verify,
    zeta,
)
from . import _fracvar

__all__ = [
    "DomainError",
    "HypothesisError",
    "IoError",
    "ValidationError",
    "conditions",
    "embedding_constant",
    "gamma",
    "kappa_alpha",
    "kernel_verify",
    "ray_scan",
    "solve",
    "sweep",
    "zeta",
]


def _config_text(config):
    # Accepts a dict, a JSON string, or a path to a JSON file.
    if isinstance(config, dict):
        return json.dumps(config)
    if isinstance(config, (str, os.PathLike)) and os.path.exists(config):
        with open(config, encoding="utf-8") as fh:
            return fh.read()
    return str(config)


def conditions(config):
    return json.loads(_fracvar.conditions_json(_config_text(config)))


def solve(config, mu, seed=None):
    return json.loads(_fracvar.solve_json(_config_text(config), mu, seed))


def sweep(config, mu_min, mu_max, count=8, seed=None):
    return json.loads(_fracvar.sweep_json(_config_text(config), mu_min, mu_max, count, seed))


def ray_scan(config, mu, mode=1, tau_max=100.0, points=9):
    return json.loads(_fracvar.ray_scan_json(_config_text(config), mu, mode, tau_max, points))

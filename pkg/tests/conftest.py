"""
conftest.py - Shared fixtures

A coarse sampling plan keeps certificate tests quick; the acceptance plan is
exercised through the suite tests.
"""

import numpy as np
import pytest
from hypothesis import HealthCheck, settings

from geometry.certifier import SamplingPlan

# series builds and certificates are slow next to hypothesis' default deadline
settings.register_profile('expdisk', deadline=None, max_examples=50,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile('expdisk')

FAST_RADII = (0.9, 0.99, 0.999)
FAST_ANGLES = 512
FAST_REFINE = 4


@pytest.fixture
def fast_plan():
    return SamplingPlan(FAST_RADII, FAST_ANGLES, FAST_REFINE)


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


@pytest.fixture
def cli_args(tmp_path):
    """leading arguments that keep CLI runs away from the working directory's files"""
    return ['--settings', str(tmp_path / 'settings.json'), '--log-file', '']

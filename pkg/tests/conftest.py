import os

import hypothesis
import numpy as np
import pytest

from hestonldp.cgf import Side, base_spec, perturb, tilt
from hestonldp.model import REFERENCE_PARAMS, HestonParams
from hestonldp.montecarlo import BlockRunner, McConfig

np.seterr(all="warn")

hypothesis.settings.register_profile("default", max_examples=100, deadline=None)
hypothesis.settings.register_profile("fast", max_examples=10, deadline=None)
hypothesis.settings.load_profile(os.getenv("HYPOTHESIS_PROFILE", "default"))


@pytest.fixture
def params() -> HestonParams:
    return REFERENCE_PARAMS


@pytest.fixture
def correlated_params() -> HestonParams:
    return HestonParams(kappa=1.5, theta=0.06, sigma=0.6, rho=-0.7, y0=0.05, x0=0.2)


@pytest.fixture
def spec(params):
    return base_spec(params)


@pytest.fixture
def share_spec(params):
    return tilt(base_spec(params), 1.0)


@pytest.fixture
def put_spec(params):
    return perturb(base_spec(params), 1.0, Side.UPPER)


@pytest.fixture
def call_spec(params):
    return perturb(tilt(base_spec(params), 1.0), 1.0, Side.LOWER)


@pytest.fixture
def runner() -> BlockRunner:
    return BlockRunner(block_size=5_000, max_workers=1)


@pytest.fixture
def mc_config() -> McConfig:
    return McConfig.from_rate(1.0, 20, n_paths=20_000, seed=7)

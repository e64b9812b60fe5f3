import logging

import numpy as np
import pytest


@pytest.fixture
def caplog(caplog: pytest.LogCaptureFixture):
    logger = logging.getLogger("pynilmet")
    logger.propagate = True

    yield caplog


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20240611)

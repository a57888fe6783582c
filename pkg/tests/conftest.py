import os
import random

import pytest

DEFAULT_SEED = 20240901


@pytest.fixture(scope="session")
def seed() -> int:
    value = int(os.environ.get("KINEXPAND_TEST_SEED", DEFAULT_SEED))
    print(f"\n[random seed: {value}]")
    return value


@pytest.fixture()
def rng(seed) -> random.Random:
    return random.Random(seed)

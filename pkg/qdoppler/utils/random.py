import random

import numpy as np


def set_random_seed(seed=0):
    """Seed python and numpy; return a generator for local draws."""
    random.seed(seed)
    np.random.seed(seed)
    return np.random.default_rng(seed)

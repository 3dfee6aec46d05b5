"""config.py
This file is part of maxcomm
Licensed under MIT License

Default settings and the environment overrides the CLI honours
"""

# imports
import os
from dataclasses import dataclass, replace

from maxcomm.errors import MalformedInputError

__author__ = "maxcomm developers"
__copyright__ = "Copyright 2026, maxcomm developers"
__license__ = "MIT"
__maintainer__ = "maxcomm developers"

SEED_VARIABLE = 'MAXCOMM_SEED'


@dataclass(frozen=True)
class Settings:
    """Defaults for sampling and verification.

    Args:
        seed (int): base seed of every sampler stream
        prime (int): characteristic used by 'fp' without an explicit prime
        instances (int): sampled modules per (class, filtration) pair
        attempts (int): sampler attempt budget per (class, filtration) pair
        n (int): module dimension of the verified cases
    """

    seed: int = 0
    prime: int = 101
    instances: int = 25
    attempts: int = 10000
    n: int = 6

    def with_overrides(self, **kwargs):
        """Copy with every non-None keyword applied."""
        return replace(self, **{k: v for k, v in kwargs.items() if v is not None})


def settings_from_env(environ=None):
    """Settings with MAXCOMM_SEED applied when it is set.

    Raises:
        MalformedInputError: if MAXCOMM_SEED is not a non-negative integer
    """

    environ = os.environ if environ is None else environ
    raw = environ.get(SEED_VARIABLE)
    if raw is None or raw.strip() == '':
        return Settings()
    try:
        seed = int(raw.strip())
    except ValueError:
        raise MalformedInputError(f"'{raw}' is not an integer", location=SEED_VARIABLE) from None
    if seed < 0:
        raise MalformedInputError(f"seed must be non-negative, got {seed}", location=SEED_VARIABLE)
    return Settings(seed=seed)

import pytest

from maxcomm.config import SEED_VARIABLE, Settings, settings_from_env
from maxcomm.errors import MalformedInputError


def test_defaults():
    s = settings_from_env({})
    assert s == Settings()
    assert (s.seed, s.prime, s.instances, s.attempts, s.n) == (0, 101, 25, 10000, 6)


def test_seed_from_environment():
    assert settings_from_env({SEED_VARIABLE: ' 42 '}).seed == 42
    assert settings_from_env({SEED_VARIABLE: ''}).seed == 0


@pytest.mark.parametrize('raw', ['abc', '1.5', '-3'])
def test_bad_seed(raw):
    with pytest.raises(MalformedInputError) as e:
        settings_from_env({SEED_VARIABLE: raw})
    assert e.value.location == SEED_VARIABLE


def test_overrides_skip_unset_values():
    s = Settings().with_overrides(seed=7, instances=None, attempts=3)
    assert (s.seed, s.instances, s.attempts) == (7, 25, 3)

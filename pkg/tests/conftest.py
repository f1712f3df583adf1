import pytest

from killform.config import KillformConfig
from killform.models import LocalGroupProvider


@pytest.fixture(scope='session')
def config() -> KillformConfig:
    return KillformConfig()


@pytest.fixture(scope='session')
def provider(config) -> LocalGroupProvider:
    """Один кэш групп на всю сессию: группы строятся один раз."""
    return LocalGroupProvider(config)


@pytest.fixture(scope='session')
def bundle(provider):
    return provider.bundle


def class_ids(T, order: int) -> list[int]:
    return [c.id for c in T.classes if c.elt_order == order and not c.is_central]

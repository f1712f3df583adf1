import os

from pydantic import Field, field_validator

from ..base_module import Model

THREADS_ENV = 'KILLFORM_THREADS'


def _threads_from_env() -> int:
    try:
        return max(1, int(os.environ.get(THREADS_ENV, '1')))
    except ValueError:
        return 1


class CapsConfig(Model):
    """."""

    max_order: int = Field(default=5_000_000, ge=1)
    max_class_matrix: int = Field(default=4000, ge=1)
    max_class_graph: int = Field(default=100_000, ge=1)
    max_bareiss_dim: int = Field(default=600, ge=1)
    max_triple_pairs: int = Field(default=10 ** 8, ge=1)
    max_subsets: int = Field(default=2 ** 12, ge=1)


class ParallelConfig(Model):
    """."""

    threads: int = Field(default_factory=_threads_from_env)
    # произведений на одну порцию строк
    chunk_products: int = Field(default=1 << 18, ge=1)

    @field_validator('threads')
    @classmethod
    def validate_threads(cls, v):
        if v < 1:
            raise ValueError('Число потоков должно быть положительным')
        return v


class KillformConfig(Model):
    """."""

    caps: CapsConfig = Field(default_factory=CapsConfig)
    parallel: ParallelConfig = Field(default_factory=ParallelConfig)

import enum
import typing as t
from pathlib import Path

from pydantic import Field, field_validator, model_validator

from ..base_module import Model
from ..config import CapsConfig, KillformConfig, ParallelConfig
from ..models import ClassSelector, GroupSpec
from ..services import OutputFormat


class Command(enum.Enum):
    INFO = 'info'
    KILLING = 'killing'
    GRAPH = 'graph'
    COUNT = 'count'
    VERIFY = 'verify'
    SCAN = 'scan'


# команды, которым нужна группа
_NEEDS_SPEC = {Command.INFO, Command.KILLING, Command.GRAPH, Command.COUNT, Command.SCAN}
_NEEDS_SELECTOR = {Command.KILLING, Command.GRAPH}


class RunConfig(Model):
    """Параметры запуска CLI, проверенные до начала вычислений"""

    command: Command
    spec: str | None = None
    selector: str | None = None
    format: OutputFormat = Field(default=OutputFormat.JSON)
    output: Path | None = None
    csv: Path | None = None
    dot: Path | None = None
    triple: str | None = None
    theorem: str | None = None
    params: dict[str, t.Any] = Field(default_factory=dict)
    max_order: int = Field(default=5_000_000, ge=1)
    max_class: int | None = Field(default=None, ge=1)
    threads: int | None = Field(default=None, ge=1)
    log_level: str = Field(default='WARNING')

    @field_validator('spec')
    @classmethod
    def validate_spec(cls, v):
        if v is not None:
            GroupSpec.parse(v)
        return v

    @field_validator('selector')
    @classmethod
    def validate_selector(cls, v):
        if v is not None:
            ClassSelector.parse(v)
        return v

    @field_validator('log_level')
    @classmethod
    def validate_log_level(cls, v):
        v = v.upper()
        if v not in ('DEBUG', 'INFO', 'WARNING', 'ERROR'):
            raise ValueError(f"Недопустимый уровень логирования: '{v}'")
        return v

    @model_validator(mode='after')
    def validate_command(self):
        if self.command in _NEEDS_SPEC and not self.spec:
            raise ValueError(f'Команде {self.command.value} нужна группа')
        if self.command in _NEEDS_SELECTOR and not self.selector:
            raise ValueError(f'Команде {self.command.value} нужен --class')
        if self.command is Command.COUNT and not self.triple:
            raise ValueError('Команде count нужен --triple c1,c2,c3')
        if self.command is Command.VERIFY and not self.theorem:
            raise ValueError('Команде verify нужен тег проверки')
        return self

    def killform_config(self) -> KillformConfig:
        caps = CapsConfig(max_order=self.max_order)
        if self.max_class is not None:
            caps.max_class_matrix = self.max_class
            caps.max_class_graph = self.max_class
        parallel = ParallelConfig() if self.threads is None \
            else ParallelConfig(threads=self.threads)
        return KillformConfig(caps=caps, parallel=parallel)

from pydantic import Field

from ..base_module import Model
from .killing import ComponentReport


class ClassRow(Model):
    """Строка таблицы классов для отчёта `info`."""

    id: int
    elt_order: int = Field(alias='order')
    size: int
    centralizer_order: int
    real: bool
    rep: str


class GroupInfo(Model):
    spec: str
    order: int
    center_order: int
    classes: list[ClassRow] = Field(default_factory=list)


class KillingReport(Model):
    """Опорная функция, компоненты и невырожденность формы на C."""

    spec: str
    selector: str
    class_ids: list[int]
    set_size: int
    support: dict[str, int]
    graph: ComponentReport
    degenerate: bool | None = None
    det: int | None = None
    rank: int | None = None
    method: str | None = None
    notes: list[str] = Field(default_factory=list)


class CountReport(Model):
    spec: str
    c1: int
    c2: int
    c3: int
    count: int
    histogram: dict[str, int] = Field(default_factory=dict)

import typing as t

from pydantic import BaseModel, ConfigDict


class Model(BaseModel):
    """Базовая модель данных killform."""

    model_config = ConfigDict(
        arbitrary_types_allowed=True,
        populate_by_name=True,
        use_enum_values=False,
    )

    def dump(self, **kwargs) -> dict[str, t.Any]:
        return self.model_dump(mode='json', by_alias=True, **kwargs)

from copy import deepcopy
from enum import Enum

from pydantic import BaseModel, ConfigDict


class BaseArgs(BaseModel):
    model_config = ConfigDict(extra="forbid", protected_namespaces=())

    def to_dict(self) -> dict:
        copied = deepcopy(self)
        result = {}

        for key, value in copied:
            if isinstance(value, BaseArgs):
                value = value.to_dict()
            elif isinstance(value, list):
                value = [v.to_dict() if isinstance(v, BaseArgs) else v for v in value]
            elif isinstance(value, Enum):
                value = value.value
            elif isinstance(value, type):
                value = value.__name__

            result[key] = value

        return result

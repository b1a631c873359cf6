from pydantic import BaseModel
from humps.camel import case


class BaseSchema(BaseModel):
    """Base for ``--json`` output: snake_case fields serialize as camelCase keys."""

    model_config = {"alias_generator": case, "populate_by_name": True}

"""Command results and their human or JSON rendering."""
from fractions import Fraction
from typing import Any, Optional

from pydantic import BaseModel

from hopfflow.utils.files import dump_json
from hopfflow.utils.rationals import format_rational


class CommandResult(BaseModel):
    """What a command produced; exit_code 1 marks a failed check."""
    document: Any
    text: Optional[str] = None
    exit_code: int = 0


def jsonable(value: Any) -> Any:
    """Fractions become "p/q" strings and bytes are decoded, recursively."""
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, bytes):
        return value.decode("utf-8")
    if isinstance(value, dict):
        return {str(k): jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [jsonable(v) for v in value]
    return value


def render(result: CommandResult, output_format: str) -> str:
    if output_format == "json" or result.text is None:
        return dump_json(jsonable(result.document))
    return result.text if result.text.endswith("\n") else result.text + "\n"

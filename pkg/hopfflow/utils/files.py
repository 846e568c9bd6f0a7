"""JSON file helpers that turn parse and schema failures into InputFileError."""
import json
from pathlib import Path
from typing import Any, Type, TypeVar, Union
from pydantic import BaseModel, ValidationError

from hopfflow.core.exceptions import InputFileError

ModelT = TypeVar("ModelT", bound=BaseModel)


def read_json(path: Union[str, Path]) -> Any:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise InputFileError(f"{path}: cannot read file ({exc.strerror})") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputFileError(f"{path}: invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc


def load_model(path: Union[str, Path], model: Type[ModelT]) -> ModelT:
    """Read a JSON file and validate it against a schema."""
    data = read_json(path)
    try:
        return model.model_validate(data)
    except ValidationError as exc:
        first = exc.errors()[0]
        location = ".".join(str(part) for part in first["loc"]) or "<root>"
        raise InputFileError(f"{path}: {location}: {first['msg']}") from exc


def dump_json(data: Any) -> str:
    """Stable JSON text: sorted keys, two-space indent, trailing newline."""
    return json.dumps(data, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def write_json(path: Union[str, Path], data: Any) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(dump_json(data), encoding="utf-8")

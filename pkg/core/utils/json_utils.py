"""
core/utils/json_utils.py

Serialização determinística para stdout.

Saídas idênticas para entradas idênticas: chaves ordenadas, floats com
repr de ida e volta, arrays numpy convertidos em listas.
"""
import csv
import io
import json
import math
from pathlib import Path
from typing import Any, Iterable, Sequence, Union

import numpy as np

from core.domain.exceptions import ConfigSchemaError


def to_jsonable(value: Any) -> Any:
    """Converte recursivamente arrays/escalares numpy e dataclasses com to_dict."""
    if hasattr(value, 'to_dict'):
        return to_jsonable(value.to_dict())
    if isinstance(value, np.ndarray):
        return [to_jsonable(v) for v in value.tolist()]
    if isinstance(value, (np.floating, float)):
        value = float(value)
        return value if math.isfinite(value) else str(value)
    if isinstance(value, (np.integer,)):
        return int(value)
    if isinstance(value, (np.bool_,)):
        return bool(value)
    if isinstance(value, dict):
        return {str(k): to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_jsonable(v) for v in value]
    return value


def dumps(data: Any) -> str:
    return json.dumps(to_jsonable(data), sort_keys=True, indent=2, ensure_ascii=False)


def load_document(source: Union[str, Path]) -> dict:
    """
    Lê um documento JSON de arquivo.

    Raises:
        ConfigSchemaError: arquivo ausente ou JSON malformado
    """
    try:
        document = json.loads(Path(source).read_text(encoding='utf-8'))
    except (OSError, json.JSONDecodeError) as exc:
        raise ConfigSchemaError(str(source), f"não foi possível ler o JSON: {exc}")
    if not isinstance(document, dict):
        raise ConfigSchemaError(str(source), "o documento deve ser um objeto JSON")
    return document


def parse_vector(document: dict, key: str, default: Sequence[float] = None) -> np.ndarray:
    """Lê um vetor numérico de um documento, com erro de esquema claro."""
    if key not in document:
        if default is None:
            raise ConfigSchemaError(key, "campo obrigatório ausente")
        return np.asarray(default, dtype=float)
    try:
        vector = np.asarray(document[key], dtype=float)
    except (TypeError, ValueError):
        raise ConfigSchemaError(key, "esperada lista de números")
    if not np.all(np.isfinite(vector)):
        raise ConfigSchemaError(key, "valores não finitos")
    return vector


def csv_text(header: Sequence[str], rows: Iterable[Sequence[Any]]) -> str:
    """CSV com floats em repr de ida e volta."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator='\n')
    writer.writerow(header)
    for row in rows:
        writer.writerow([repr(float(v)) if isinstance(v, (float, np.floating)) else v for v in row])
    return buffer.getvalue()


def parse_cli_vector(text: str, field: str) -> np.ndarray:
    """
    Vetor de argumento de linha de comando: '0,0,1', '[0, 0, 1]' ou '' (vazio).

    Raises:
        ConfigSchemaError: entrada não numérica
    """
    text = text.strip().strip('[]')
    if not text:
        return np.zeros(0)
    try:
        vector = np.array([float(item) for item in text.split(',')])
    except ValueError:
        raise ConfigSchemaError(field, f"esperada lista de números separados por vírgula, recebido {text!r}")
    if not np.all(np.isfinite(vector)):
        raise ConfigSchemaError(field, "valores não finitos")
    return vector

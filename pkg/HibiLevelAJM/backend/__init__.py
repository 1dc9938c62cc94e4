from json import dumps
from typing import Any

from . import errors
from . import meta

_INT64_MAX = 2 ** 63 - 1


def json_safe(obj: Any) -> Any:
    """
    Recursively converts a report structure into JSON-ready values.
    Integers outside the signed 64-bit range become decimal strings, tuples and
    sets become lists (sets are sorted), dict keys become strings.

    :param obj: The value to convert.
    :return: A structure made of dict, list, str, int, bool and None only.
    """
    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return obj
    if isinstance(obj, int):
        return obj if -_INT64_MAX - 1 <= obj <= _INT64_MAX else str(obj)
    if isinstance(obj, dict):
        return {str(k): json_safe(v) for k, v in obj.items()}
    if isinstance(obj, (set, frozenset)):
        return [json_safe(v) for v in sorted(obj)]
    if isinstance(obj, (list, tuple)):
        return [json_safe(v) for v in obj]
    if hasattr(obj, 'to_dict'):
        return json_safe(obj.to_dict())
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def stable_dumps(obj: Any, indent: int = 2) -> str:
    """
    Serializes a report with sorted keys so two runs on the same input are byte-identical.

    :param obj: A report, dict or list.
    :param indent: JSON indentation.
    :return: The JSON text.
    :rtype: str
    """
    return dumps(json_safe(obj), sort_keys=True, indent=indent)


__all__ = ['meta', 'errors', 'json_safe', 'stable_dumps']

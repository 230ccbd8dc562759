import inspect
import json
import re
from fractions import Fraction
from pathlib import Path
from typing import Callable, Literal

import numpy as np
from jsonschema import validate

from .dict import dict_deep_update, load_dict_from_file
from .types import FilePathType, FolderPathType

SCHEMA_FOLDER = Path(__file__).parent.parent / "schemas"

_RATIONAL_PATTERN = re.compile(r"^-?\d+(/\d+)?$")


class ExactEncoder(json.JSONEncoder):
    """JSON encoder that never emits floats for exact data."""

    def default(self, obj):
        # Exact rationals are written as "p/q" strings (or "p" when integral)
        if isinstance(obj, Fraction):
            return encode_rational(obj)

        # This should transforms numpy generic integers and floats to python scalars
        if isinstance(obj, np.generic):
            return obj.item()
        if isinstance(obj, np.ndarray):
            return obj.tolist()

        if isinstance(obj, (set, frozenset)):
            return sorted(obj)

        # The base-class handles it
        return super().default(obj)


def encode_rational(value) -> str:
    value = Fraction(value)
    return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"


def decode_rational(text: str) -> Fraction:
    if not isinstance(text, str) or not _RATIONAL_PATTERN.match(text):
        raise ValueError(f"'{text}' is not an exact rational string of the form 'p' or 'p/q'!")
    return Fraction(text)


def get_base_schema(tag=None, root=False, id_=None, **kwargs) -> dict:
    """Return the base schema used for all other schemas."""
    base_schema = dict(required=[], properties={}, type="object", additionalProperties=False)
    if tag is not None:
        base_schema.update(tag=tag)
    if root:
        base_schema.update({"$schema": "http://json-schema.org/draft-07/schema#"})
    if id_:
        base_schema.update({"$id": id_})
    base_schema.update(**kwargs)
    return base_schema


def get_schema_from_method_signature(method: Callable, exclude: list = None) -> dict:
    """
    Take a class method and return a json-schema of the input args.

    Parameters
    ----------
    method: function
    exclude: list, optional

    Returns
    -------
    dict
    """
    exclude = ["self", "kwargs"] + (exclude or [])
    input_schema = get_base_schema()
    annotation_json_type_map = dict(
        bool="boolean",
        str="string",
        int="integer",
        float="number",
        dict="object",
        list="array",
        tuple="array",
        List="array",
        Tuple="array",
        FilePathType="string",
        FolderPathType="string",
    )
    args_spec = dict()
    for param_name, param in inspect.signature(method).parameters.items():
        if param_name in exclude or param.kind == inspect.Parameter.VAR_KEYWORD:
            continue
        if param.annotation is param.empty:
            raise NotImplementedError(
                f"The annotation type of '{param}' in function '{method}' is not implemented! "
                "Please create the json-schema for this method manually."
            )
        args_spec[param_name] = dict()
        annotation = param.annotation
        if getattr(annotation, "__origin__", None) == Literal:
            args_spec[param_name]["enum"] = list(annotation.__args__)
        elif hasattr(annotation, "__args__") and getattr(annotation, "__origin__", None) not in (list, tuple, dict):
            # Optional[...] and other typing.Union annotations
            args = [arg for arg in annotation.__args__ if arg is not type(None)]  # noqa: E721
            param_types = {
                annotation_json_type_map[arg.__name__] for arg in args if arg.__name__ in annotation_json_type_map
            }
            if len(param_types) != 1:
                raise ValueError(
                    "Conflicting json parameter types were detected from the annotation! "
                    f"{annotation.__args__} found."
                )
            args_spec[param_name]["type"] = param_types.pop()
            if args[0] in (FilePathType, FolderPathType):
                args_spec[param_name]["format"] = "file" if args[0] == FilePathType else "directory"
        else:
            name = getattr(annotation, "__name__", None) or getattr(annotation, "_name", "")
            if name not in annotation_json_type_map:
                raise ValueError(
                    f"No valid arguments were found in the json type mapping '{annotation}' for parameter {param}"
                )
            args_spec[param_name]["type"] = annotation_json_type_map[name]
            if annotation in (FilePathType, FolderPathType):
                args_spec[param_name]["format"] = "file" if annotation == FilePathType else "directory"
        if param.default is param.empty:
            input_schema["required"].append(param_name)
        elif param.default is not None:
            args_spec[param_name].update(default=param.default)
    input_schema["properties"] = dict_deep_update(input_schema["properties"], args_spec)
    return input_schema


def load_schema(schema_name: str) -> dict:
    """Load one of the packaged schemas by file name."""
    return load_dict_from_file(file_path=SCHEMA_FOLDER / schema_name)


def validate_against_schema(instance: dict, schema_name: str) -> None:
    """Validate the JSON-normalized form of an instance against a packaged schema."""
    normalized_instance = json.loads(json.dumps(instance, cls=ExactEncoder))
    validate(instance=normalized_instance, schema=load_schema(schema_name=schema_name))

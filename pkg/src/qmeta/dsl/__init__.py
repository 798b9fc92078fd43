"""Concrete syntax and JSON for the assertion language."""

from .jsonio import SCHEMA_VERSION, from_dict, from_json, to_dict, to_json
from .parser import SourceSpan, parse, parse_complex, parse_prop, tokenize
from .printer import format, format_complex, format_prop

__all__ = [
    "SCHEMA_VERSION", "SourceSpan", "format", "format_complex", "format_prop", "from_dict",
    "from_json", "parse", "parse_complex", "parse_prop", "to_dict", "to_json", "tokenize",
]

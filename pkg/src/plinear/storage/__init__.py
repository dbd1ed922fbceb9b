"""Scheme persistence."""

from plinear.storage.documents import FORMAT_VERSION, CTSchemeDocument, RatSchemeDocument
from plinear.storage.scheme_io import (
    dumps_scheme,
    load_scheme,
    loads_scheme,
    save_scheme,
    scheme_from_document,
    scheme_to_document,
)

__all__ = [
    "FORMAT_VERSION",
    "CTSchemeDocument",
    "RatSchemeDocument",
    "dumps_scheme",
    "load_scheme",
    "loads_scheme",
    "save_scheme",
    "scheme_from_document",
    "scheme_to_document",
]

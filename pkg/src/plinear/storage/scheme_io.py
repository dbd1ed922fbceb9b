"""Saving and loading schemes as JSON files."""

import json
import logging
from pathlib import Path
from typing import Any, Dict, Union

from pydantic import ValidationError

from plinear.exceptions import (
    ExpressionSyntaxError,
    ModulusOverflowError,
    SchemeFormatError,
    SchemeVersionError,
)
from plinear.models import CTScheme, RatScheme
from plinear.rings import TPoly, format_poly, parse_poly
from plinear.schemes import validate_scheme
from plinear.storage.documents import (
    FORMAT_VERSION,
    MAX_MODULUS,
    CTSchemeDocument,
    CTSource,
    RatSchemeDocument,
    RatSource,
)

logger = logging.getLogger(__name__)

Scheme = Union[CTScheme, RatScheme]


def _digit_key(ell) -> str:
    return ",".join(str(d) for d in ell)


def scheme_to_document(scheme: Scheme) -> Union[CTSchemeDocument, RatSchemeDocument]:
    """
    Raises:
        ModulusOverflowError: If p^r does not fit below 2^63
    """
    if scheme.modulus >= MAX_MODULUS:
        raise ModulusOverflowError(f"p^r = {scheme.modulus} does not fit the scheme format")
    common = dict(
        format_version=FORMAT_VERSION,
        p=scheme.p,
        r=scheme.r,
        rho=scheme.rho,
        n=scheme.n,
        modulus=scheme.modulus,
        init=list(scheme.init),
        extraction=list(scheme.extraction),
    )
    if isinstance(scheme, CTScheme):
        return CTSchemeDocument(
            states=[[ell, *u] for ell, u in scheme.states],
            matrix=[[list(entry.coeffs) for entry in row] for row in scheme.matrix],
            source=CTSource(
                g=format_poly(scheme.g, scheme.variables),
                q=format_poly(scheme.q, scheme.variables),
                vars=list(scheme.variables),
            ),
            **common,
        )
    with scheme.lock:
        memo = dict(scheme.digit_matrices)
    return RatSchemeDocument(
        states=[list(u) for u in scheme.states],
        digit_matrices={
            _digit_key(ell): [list(row) for row in memo[ell]] for ell in sorted(memo)
        },
        source=RatSource(
            P=format_poly(scheme.P, scheme.variables),
            Q=format_poly(scheme.Q, scheme.variables),
            vars=list(scheme.variables),
        ),
        **common,
    )


def scheme_from_document(doc: Union[CTSchemeDocument, RatSchemeDocument]) -> Scheme:
    variables = tuple(doc.source.vars)
    try:
        if isinstance(doc, CTSchemeDocument):
            g = parse_poly(doc.source.g, variables)
            q = parse_poly(doc.source.q, variables)
        else:
            P = parse_poly(doc.source.P, variables)
            Q = parse_poly(doc.source.Q, variables)
    except ExpressionSyntaxError as e:
        raise SchemeFormatError(f"Invalid source polynomial: {e}") from e

    if isinstance(doc, CTSchemeDocument):
        scheme = CTScheme(
            p=doc.p,
            r=doc.r,
            rho=doc.rho,
            n=doc.n,
            states=tuple((s[0], tuple(s[1:])) for s in doc.states),
            matrix=tuple(
                tuple(TPoly(tuple(entry), doc.modulus) for entry in row) for row in doc.matrix
            ),
            init=tuple(doc.init),
            extraction=tuple(doc.extraction),
            g=g,
            q=q,
            variables=variables,
        )
        validate_scheme(scheme)
        return scheme
    scheme = RatScheme(
        p=doc.p,
        r=doc.r,
        rho=doc.rho,
        n=doc.n,
        states=tuple(tuple(s) for s in doc.states),
        init=tuple(doc.init),
        extraction=tuple(doc.extraction),
        P=P,
        Q=Q,
        variables=variables,
    )
    for key, matrix in doc.digit_matrices.items():
        ell = tuple(int(part) for part in key.split(","))
        scheme.digit_matrices[ell] = tuple(tuple(row) for row in matrix)
    validate_scheme(scheme)
    return scheme


def dumps_scheme(scheme: Scheme) -> str:
    """Deterministic JSON text for a scheme."""
    return json.dumps(scheme_to_document(scheme).model_dump(), indent=1) + "\n"


def loads_scheme(text: str) -> Scheme:
    """
    Parse and validate scheme JSON.

    Raises:
        SchemeVersionError: If format_version is not supported
        ModulusOverflowError: If the stored modulus does not fit below 2^63
        SchemeFormatError: For any other malformed content
    """
    try:
        raw: Dict[str, Any] = json.loads(text)
    except json.JSONDecodeError as e:
        raise SchemeFormatError(f"Scheme file is not valid JSON: {e}") from e
    if not isinstance(raw, dict):
        raise SchemeFormatError("Scheme file must contain a JSON object")

    version = raw.get("format_version", FORMAT_VERSION)
    if version != FORMAT_VERSION:
        raise SchemeVersionError(f"Unsupported scheme format version {version!r}")
    modulus = raw.get("modulus")
    if isinstance(modulus, int) and modulus >= MAX_MODULUS:
        raise ModulusOverflowError(f"Stored modulus {modulus} does not fit below 2^63")

    kind = raw.get("kind")
    model = {"ct": CTSchemeDocument, "rat": RatSchemeDocument}.get(kind)
    if model is None:
        raise SchemeFormatError(f"Unknown scheme kind {kind!r}")
    try:
        doc = model.model_validate(raw)
    except ValidationError as e:
        raise SchemeFormatError(f"Invalid {kind} scheme: {e}") from e
    return scheme_from_document(doc)


def save_scheme(scheme: Scheme, path: Union[str, Path]) -> Path:
    path = Path(path)
    path.write_text(dumps_scheme(scheme), encoding="utf-8")
    logger.info("Saved %s scheme with %d states to %s", scheme.kind.value, len(scheme), path)
    return path


def load_scheme(path: Union[str, Path]) -> Scheme:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise SchemeFormatError(f"Cannot read scheme file {path}: {e}") from e
    scheme = loads_scheme(text)
    logger.debug("Loaded %s scheme from %s", scheme.kind.value, path)
    return scheme

"""Validated JSON documents for persisted schemes."""

from typing import Dict, List, Literal

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

FORMAT_VERSION = 1
MAX_MODULUS = 2 ** 63


def _check_residues(values, modulus: int, what: str) -> None:
    for v in values:
        if not 0 <= v < modulus:
            raise ValueError(f"{what} entry {v} is outside [0, {modulus})")


class CTSource(BaseModel):
    """Polynomials a constant-term scheme was built from."""

    g: str
    q: str = "1"
    vars: List[str] = Field(..., min_length=1)


class RatSource(BaseModel):
    """Polynomials a rational scheme was built from."""

    P: str
    Q: str = "1"
    vars: List[str] = Field(..., min_length=1)


class SchemeDocument(BaseModel):
    """Fields shared by both scheme kinds."""

    format_version: int = FORMAT_VERSION
    p: int = Field(..., ge=2)
    r: int = Field(..., ge=1)
    rho: int = Field(..., ge=1)
    n: int = Field(..., ge=1)
    modulus: int = Field(..., ge=2, lt=MAX_MODULUS)
    init: List[int]
    extraction: List[int]

    model_config = ConfigDict(extra="forbid")

    def _check_common(self, state_count: int) -> None:
        if self.modulus != self.p ** self.r:
            raise ValueError(f"modulus {self.modulus} is not p^r = {self.p ** self.r}")
        if len(self.init) != state_count or len(self.extraction) != state_count:
            raise ValueError("init and extraction must have one entry per state")
        _check_residues(self.init, self.modulus, "init")


class CTSchemeDocument(SchemeDocument):
    """
    Constant-term scheme file.

    ``states`` lists [l, u_1, ..., u_n]; ``matrix`` holds t-coefficients of
    every entry, low degree first.
    """

    kind: Literal["ct"] = "ct"
    states: List[List[int]]
    matrix: List[List[List[int]]]
    source: CTSource

    @model_validator(mode="after")
    def check_shape(self):
        size = len(self.states)
        self._check_common(size)
        for state in self.states:
            if len(state) != self.n + 1 or not 0 <= state[0] < self.rho:
                raise ValueError(f"state {state} is not of the form [l, u_1..u_n] with l < rho")
        if len(self.matrix) != size or any(len(row) != size for row in self.matrix):
            raise ValueError("matrix must be square with one row per state")
        for row in self.matrix:
            for entry in row:
                if len(entry) > self.p:
                    raise ValueError(f"matrix entry {entry} has t-degree >= p")
                _check_residues(entry, self.modulus, "matrix")
        return self


class RatSchemeDocument(SchemeDocument):
    """
    Rational-coefficient scheme file.

    ``digit_matrices`` only holds the memoized entries, keyed "l1,...,ln".
    """

    kind: Literal["rat"] = "rat"
    states: List[List[int]]
    digit_matrices: Dict[str, List[List[int]]] = Field(default_factory=dict)
    source: RatSource

    @field_validator("digit_matrices")
    @classmethod
    def check_keys(cls, value):
        for key in value:
            try:
                [int(part) for part in key.split(",")]
            except ValueError:
                raise ValueError(f"digit key {key!r} is not a comma-separated integer list")
        return value

    @model_validator(mode="after")
    def check_shape(self):
        size = len(self.states)
        self._check_common(size)
        for state in self.states:
            if len(state) != self.n or any(x < 0 for x in state):
                raise ValueError(f"state {state} is not a non-negative {self.n}-vector")
        for key, matrix in self.digit_matrices.items():
            digits = [int(part) for part in key.split(",")]
            if len(digits) != self.n or any(not 0 <= d < self.p for d in digits):
                raise ValueError(f"digit key {key!r} is not in [0, p)^n")
            if len(matrix) != size or any(len(row) != size for row in matrix):
                raise ValueError(f"digit matrix {key!r} must be square with one row per state")
            for row in matrix:
                _check_residues(row, self.modulus, f"digit matrix {key!r}")
        return self

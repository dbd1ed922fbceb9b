"""Named integer sequences with Lucas-type congruences."""

from enum import Enum
from typing import List, Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator


class SequenceName(str, Enum):
    """Catalogue entries."""

    APERY = "apery"
    APERY_PRIME = "apery-prime"
    FRANEL = "franel"
    CENTRAL_BINOMIAL = "central-binomial"
    MULTINOMIAL_SQUARE = "multinomial-square"
    POWER_OF_TWO = "power-of-2"
    CUSTOM_CT = "custom-ct"
    CUSTOM_RAT = "custom-rat"


class SequenceSpec(BaseModel):
    """
    A sequence resolvable to an exact generator.

    ``parameter`` is the exponent l of Franel(l) or the number of summands n
    of the multinomial square. Custom constant-term sequences take ``poly``
    (and optionally ``numerator``); custom rational diagonals take ``poly``
    as the denominator P and ``numerator`` as Q.
    """

    name: SequenceName
    parameter: Optional[int] = Field(default=None, ge=1)
    poly: Optional[str] = None
    numerator: Optional[str] = None
    variables: List[str] = Field(default_factory=list)

    model_config = ConfigDict(frozen=True)

    @model_validator(mode="before")
    @classmethod
    def default_parameter(cls, data):
        """Franel and multinomial squares default to parameter 3."""
        if isinstance(data, dict) and data.get("parameter") is None:
            name = getattr(data.get("name"), "value", data.get("name"))
            if name in ("franel", "multinomial-square"):
                data = {**data, "parameter": 3}
        return data

    @model_validator(mode="after")
    def check_parameters(self):
        """Reject incomplete custom sequences."""
        if self.name is SequenceName.MULTINOMIAL_SQUARE and self.parameter < 2:
            raise ValueError("multinomial-square needs at least 2 summands")
        if self.name is SequenceName.FRANEL and self.parameter < 2:
            raise ValueError("franel needs an exponent of at least 2")
        if self.name in (SequenceName.CUSTOM_CT, SequenceName.CUSTOM_RAT):
            if not self.poly or not self.variables:
                raise ValueError(f"{self.name.value} requires poly and variables")
        return self

    @property
    def label(self) -> str:
        if self.parameter is not None and self.name in (
            SequenceName.FRANEL,
            SequenceName.MULTINOMIAL_SQUARE,
        ):
            return f"{self.name.value}({self.parameter})"
        if self.poly:
            return f"{self.name.value}[{self.poly}]"
        return self.name.value

"""Data models for schemes and sequences."""

from plinear.models.scheme import CTScheme, HasseWitt, RatScheme, SchemeKind
from plinear.models.sequence import SequenceName, SequenceSpec

__all__ = [
    "CTScheme",
    "HasseWitt",
    "RatScheme",
    "SchemeKind",
    "SequenceName",
    "SequenceSpec",
]

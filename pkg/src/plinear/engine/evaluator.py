"""Evaluation of p-linear schemes by base-p digits."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple, Union

import numpy as np

from plinear.engine.sequences import DigitScheme
from plinear.exceptions import IndexArityError
from plinear.models import CTScheme, RatScheme
from plinear.rings import Modulus, Residue
from plinear.schemes import rat_digit_matrix

logger = logging.getLogger(__name__)

BigIndex = Union[int, str]


@dataclass
class EvaluationTrace:
    """Digits consumed (most significant first) and the state vector after each."""

    digits: List = field(default_factory=list)
    vectors: List[List[int]] = field(default_factory=list)

    def add(self, digit, vector) -> None:
        self.digits.append(digit)
        self.vectors.append([int(x) for x in vector])

    def to_text(self) -> str:
        lines = [f"digits (most significant first): {self.digits}"]
        for digit, vector in zip(self.digits, self.vectors):
            lines.append(f"  {digit}: {vector}")
        return "\n".join(lines)


def parse_index(value: BigIndex) -> int:
    """A non-negative integer from an int or an arbitrary-length decimal string."""
    if isinstance(value, str):
        value = value.strip()
        if not value.isdigit():
            raise ValueError(f"Index {value!r} is not a non-negative decimal integer")
        return int(value)
    if value < 0:
        raise ValueError(f"Index {value} is negative")
    return int(value)


def base_p_digits(N: int, p: int) -> List[int]:
    """Little-endian base-p digits; empty for N = 0."""
    digits = []
    while N:
        N, d = divmod(N, p)
        digits.append(d)
    return digits


def _as_array(matrix) -> np.ndarray:
    return np.array(matrix, dtype=object)


def _apply(matrix, vector: np.ndarray, modulus: int) -> np.ndarray:
    return _as_array(matrix).dot(vector) % modulus


def eval_digit_scheme(
    s: Union[CTScheme, DigitScheme], N: BigIndex, trace: Optional[EvaluationTrace] = None
) -> Residue:
    """extraction . M_{d_0} ... M_{d_m} . init mod p^r, for any scheme exposing digit_matrix."""
    N = parse_index(N)
    modulus = s.modulus
    vector = _as_array(s.init) % modulus
    for d in reversed(base_p_digits(N, s.p)):
        vector = _apply(s.digit_matrix(d), vector, modulus)
        if trace is not None:
            trace.add(d, vector)
    value = _as_array(s.extraction).dot(vector) % modulus
    return Residue(int(value), Modulus(s.p, s.r))


def eval_ct(s: CTScheme, N: BigIndex, trace: Optional[EvaluationTrace] = None) -> Residue:
    """
    a_N mod p^r for a constant-term scheme.

    Costs one matrix-vector product per base-p digit of N.
    """
    return eval_digit_scheme(s, N, trace)


def rat_digit_vectors(K: Sequence[int], p: int) -> List[Tuple[int, ...]]:
    """Componentwise base-p digit vectors of K, little-endian, zero-padded."""
    per_component = [base_p_digits(k, p) for k in K]
    length = max((len(d) for d in per_component), default=0)
    return [
        tuple(d[i] if i < len(d) else 0 for d in per_component) for i in range(length)
    ]


def eval_rat(
    s: RatScheme, K: Sequence[BigIndex], trace: Optional[EvaluationTrace] = None
) -> Residue:
    """
    The coefficient of x^K in Q/P modulo p^r.

    Raises:
        IndexArityError: If K does not have one component per variable
    """
    if len(K) != s.n:
        raise IndexArityError(f"Index has {len(K)} components, the scheme has {s.n} variables")
    K = [parse_index(k) for k in K]
    modulus = s.modulus
    vector = _as_array(s.init) % modulus
    for ell in reversed(rat_digit_vectors(K, s.p)):
        vector = _apply(rat_digit_matrix(s, ell), vector, modulus)
        if trace is not None:
            trace.add(list(ell), vector)
    value = _as_array(s.extraction).dot(vector) % modulus
    return Residue(int(value), Modulus(s.p, s.r))


def eval_rat_diagonal(s: RatScheme, k: BigIndex) -> Residue:
    """The diagonal coefficient a_{(k, ..., k)}."""
    return eval_rat(s, [k] * s.n)


def evaluate(s: Union[CTScheme, RatScheme], index, trace: Optional[EvaluationTrace] = None):
    """
    Dispatch on the scheme kind; ``index`` is an integer or decimal string for
    constant-term schemes and a sequence of them for rational schemes.

    Raises:
        IndexArityError: If the index shape does not match the scheme kind
    """
    if isinstance(s, CTScheme):
        if isinstance(index, (list, tuple)):
            if len(index) != 1:
                raise IndexArityError("Constant-term schemes take a single index")
            index = index[0]
        return eval_ct(s, index, trace)
    if not isinstance(index, (list, tuple)):
        index = [index]
    return eval_rat(s, index, trace)

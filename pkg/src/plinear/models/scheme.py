"""p-linear scheme models."""

from __future__ import annotations

import threading
from dataclasses import dataclass, field
from enum import Enum
from math import prod
from typing import Any, Dict, Tuple

from plinear.rings import ExpVec, LaurentPoly, TPoly, format_poly

CTState = Tuple[int, ExpVec]
IntMatrix = Tuple[Tuple[int, ...], ...]


class SchemeKind(str, Enum):
    """Scheme family, as written to the ``kind`` field of a scheme file."""

    CONSTANT_TERM = "ct"
    RATIONAL = "rat"


@dataclass(frozen=True)
class CTScheme:
    """
    p-linear scheme for ct[q * g^k] modulo p^r.

    States are pairs (l, u) ordered by l, then u lexicographically. The
    matrix entries are t-polynomials over Z/p^r of degree < p; the digit
    matrix M_d collects their t^d coefficients.
    """

    p: int
    r: int
    rho: int
    n: int
    states: Tuple[CTState, ...]
    matrix: Tuple[Tuple[TPoly, ...], ...]
    init: Tuple[int, ...]
    extraction: Tuple[int, ...]
    g: LaurentPoly
    q: LaurentPoly
    variables: Tuple[str, ...]
    _digit_cache: Dict[int, IntMatrix] = field(
        default_factory=dict, init=False, compare=False, repr=False
    )
    _digit_lock: threading.Lock = field(
        default_factory=threading.Lock, init=False, compare=False, repr=False
    )

    kind = SchemeKind.CONSTANT_TERM

    @property
    def modulus(self) -> int:
        return self.p ** self.r

    def __len__(self) -> int:
        return len(self.states)

    def digit_matrix(self, d: int) -> IntMatrix:
        """M_d: the coefficient of t^d in M(t)."""
        with self._digit_lock:
            cached = self._digit_cache.get(d)
            if cached is None:
                cached = tuple(
                    tuple(entry.coefficient(d) for entry in row) for row in self.matrix
                )
                self._digit_cache[d] = cached
        return cached

    def interior_points(self) -> Tuple[ExpVec, ...]:
        return tuple(u for ell, u in self.states if ell == 0)

    def summary(self) -> Dict[str, Any]:
        return {
            "kind": self.kind.value,
            "p": self.p,
            "r": self.r,
            "rho": self.rho,
            "states": len(self.states),
            "bound": self.rho * len(self.interior_points()),
            "source": format_poly(self.g, self.variables),
        }


@dataclass(frozen=True)
class RatScheme:
    """
    p-linear scheme for the power series coefficients of Q/P modulo p^r.

    Digit matrices are computed on first use and memoized; the memo, the
    lock guarding it and the cached Cartier data take no part in equality.
    """

    p: int
    r: int
    rho: int
    n: int
    states: Tuple[ExpVec, ...]
    init: Tuple[int, ...]
    extraction: Tuple[int, ...]
    P: LaurentPoly
    Q: LaurentPoly
    variables: Tuple[str, ...]
    digit_matrices: Dict[ExpVec, IntMatrix] = field(
        default_factory=dict, init=False, compare=False, repr=False
    )
    runtime: Dict[str, Any] = field(default_factory=dict, init=False, compare=False, repr=False)
    lock: threading.Lock = field(
        default_factory=threading.Lock, init=False, compare=False, repr=False
    )

    kind = SchemeKind.RATIONAL

    @property
    def modulus(self) -> int:
        return self.p ** self.r

    def __len__(self) -> int:
        return len(self.states)

    def degree_box(self) -> ExpVec:
        """(d_1, ..., d_n): the largest exponent of each variable in P."""
        return tuple(max(e[i] for e in self.P.support) for i in range(self.n))

    def state_bound(self) -> int:
        return self.rho ** self.n * prod(self.degree_box())

    def summary(self) -> Dict[str, Any]:
        return {
            "kind": self.kind.value,
            "p": self.p,
            "r": self.r,
            "rho": self.rho,
            "states": len(self.states),
            "bound": self.state_bound(),
            "source": format_poly(self.P, self.variables),
        }


@dataclass(frozen=True)
class HasseWitt:
    """Hasse-Witt matrix of g at p, indexed by the interior lattice points of Newton(g)."""

    p: int
    g: LaurentPoly
    states: Tuple[ExpVec, ...]
    H: Tuple[Tuple[TPoly, ...], ...]

    def entry(self, u: ExpVec, v: ExpVec) -> TPoly:
        return self.H[self.states.index(tuple(u))][self.states.index(tuple(v))]

"""The Cartier operator modulo p^r."""

from plinear.cartier.context import (
    CartierContext,
    StateRegion,
    ceil_div,
    choose_rho,
    compute_G,
)
from plinear.cartier.operator import cartier_reduce, cartier_select

__all__ = [
    "CartierContext",
    "StateRegion",
    "cartier_reduce",
    "cartier_select",
    "ceil_div",
    "choose_rho",
    "compute_G",
]

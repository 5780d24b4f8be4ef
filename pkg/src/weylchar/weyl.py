"""Weyl group action on weights: reflections, orbits, chamber walks, signs.

Everything here reduces a question about the full group to chamber walks
with the simple reflections; the walk always reflects at the lowest-index
negative coordinate, so traces are reproducible. Only the parity of the
walk length is contractual.
"""

from __future__ import annotations

from typing import NamedTuple

from . import _kernels as K
from .root_data import ModifiedDatum, RootDatum, Weight


def reflect(datum: RootDatum, i: int, w: Weight) -> Weight:
    """Simple reflection s_i: subtract w[i] times the i-th simple root."""
    if not 0 <= i < datum.rank:
        raise IndexError(f"node index {i} out of range for rank {datum.rank}")
    return K.reflect(datum.simple_roots, tuple(w), i)


def dominant_representative(datum: RootDatum, w: Weight) -> tuple[Weight, int, int]:
    """The dominant W-orbit representative of w.

    Returns (representative, sign, length) where sign is the parity
    (-1)**length of the reflections used by the chamber walk.
    """
    return K.dominant_rep(datum.simple_roots, tuple(w))


class Regularization(NamedTuple):
    """Outcome of the rho-shifted chamber walk: either the weight is
    conjugate under the shifted action to a unique dominant weight with a
    sign, or w+rho lies on a wall and every alternating sum over its orbit
    vanishes."""

    weight: Weight | None
    sign: int

    @property
    def singular(self) -> bool:
        return self.weight is None


def shifted_regularize(datum: RootDatum, w: Weight) -> Regularization:
    """Regularize w under the rho-shifted action w(x + rho) - rho."""
    rep, sign = K.regularize_shifted(datum.simple_roots, tuple(w))
    return Regularization(rep, sign)


def orbit(datum: RootDatum, w: Weight) -> frozenset[Weight]:
    """Full Weyl-group orbit of w."""
    return frozenset(K.weyl_orbit(datum.simple_roots, tuple(w)))


def rho(datum: RootDatum) -> Weight:
    """The Weyl vector: all fundamental coordinates equal to 1."""
    return (1,) * datum.rank


def rho_l(md: ModifiedDatum) -> Weight:
    """The dual Weyl vector in base coordinates: (l_1, ..., l_n)."""
    return md.l


def steinberg_weight(md: ModifiedDatum) -> Weight:
    """rho_L - rho = (l_1 - 1, ..., l_n - 1), the branching shift weight."""
    return tuple(x - 1 for x in md.l)

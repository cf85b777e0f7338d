"""Superboolean rank calculus for finite graphs: flats lattices, closure
rank, point-line geometries of rank-3 graphs, contraction-minor rank, and
complement duality."""

__version__ = "0.1.0"

from .graphs import Graph  # noqa: F401

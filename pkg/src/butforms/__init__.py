"""Exact verification toolkit for quadratic Poisson algebras of bilinear forms,
their reductions, braid actions, algebroid and quantum counterparts."""

__version__ = "0.1.0"

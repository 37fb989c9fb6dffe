"""Periods, homology bases and algebraic invariants of smooth projective hypersurfaces."""

__version__ = "0.1.0"

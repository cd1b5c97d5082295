"""vnu: numerical laboratory for unstable self-similar vortices and
non-unique Leray solutions of the 2D fractional Navier-Stokes equations."""

__version__ = "0.1.0"

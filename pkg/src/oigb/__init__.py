"""Gröbner bases, resolutions and Betti numbers for free OI-modules over polynomial OI-algebras."""

__version__ = "0.1.0"

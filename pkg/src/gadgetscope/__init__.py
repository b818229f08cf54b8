"""Differential gadget-population analysis for debloated binaries."""

__version__ = "0.1.0"

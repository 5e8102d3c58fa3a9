"""Exact deformation quantization and Hopf-algebra symmetry toolkit."""

__version__ = "0.1.0"

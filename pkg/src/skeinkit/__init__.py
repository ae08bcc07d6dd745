"""Exact skein-theoretic computations for HOMFLY-type planar algebras."""

__version__ = "0.1.0"

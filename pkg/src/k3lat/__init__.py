"""Exact lattice computations for K3 surfaces of Picard rank 2 and their Hilbert squares."""

__version__ = "0.1.0"

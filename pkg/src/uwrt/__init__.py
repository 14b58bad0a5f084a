"""Exact computation of unified quantum invariants of integral homology
spheres, with evaluations at roots of unity and related specializations."""

__version__ = "0.1.0"

"""Exact invariants of Z/2 quotients of S²×S³: cohomology pairings, Pin⁺ bordism
classes, diffeomorphism types and relative eta invariants."""

__version__ = "0.1.0"

"""homvariant - Exact weighted homomorphism counts and cycle matroid invariance checks."""

__version__ = "0.1.0"

"""Exact computations with tilting modules over replicated path algebras."""

__version__ = "0.1.0"

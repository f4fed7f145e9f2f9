"""Exact-arithmetic toolkit for effective height bounds of isogenous hyperbolic curves."""

__version__ = "0.1.0"

"""Closed forms, exact coefficient tables and numerical certification for
hyperbolic secant/tangent integrals."""

__version__ = "0.1.0"

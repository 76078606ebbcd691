"""Denominator vectors of finite type cluster algebras, three ways."""

__version__ = "0.1.0"

"""Exact engine for towers of diagram algebras with cellular structure."""

__version__ = "0.1.0"

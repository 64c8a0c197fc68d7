"""Exact combinatorial models for loop and path spaces of finite simplicial sets."""

__version__ = "0.1.0"

"""Intersection-theoretic calculus on P^1 x P^2 and the classification of
globally generated bundles with small first Chern class."""

__version__ = "0.1.0"

"""Centres of crossed modules of groups and Lie algebras."""

__version__ = "0.1.0"

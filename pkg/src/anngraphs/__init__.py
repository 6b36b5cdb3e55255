"""Annihilator graphs of finite abelian p-groups and their threshold partitions."""

__version__ = "0.1.0"

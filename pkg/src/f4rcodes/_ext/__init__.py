"""Compiled kernels (built from ``.pyx`` sources by setup.py)."""

# bqho/__init__.py
"""Bicomplex quantum harmonic oscillator: arithmetic, truncated module, ladder algebra, wavefunctions."""

__version__ = "0.1.0"

"""Exact-arithmetic toolkit for FFLV and Lusztig polytopes and their crystals.

Everything runs over Python integers; no floats anywhere.
"""

__version__ = "0.1.0"

"""Exact verification of spherical conjugacy classes in simple algebraic groups.

Root systems and Weyl groups, a symbolic torus, pseudo-Levi subsystems, the
class catalog, classical matrix groups, Bruhat cells, and finite-field
B-orbit censuses.
"""

__version__ = "0.1.0"

"""Exact-arithmetic computations with finitely generated abelian groups,
involutive rings and monoids, Z/2-Mackey functors, truncated dihedral
simplicial sets, chain complexes, and strictly commuting cube diagrams.

Everything is computed over Python's arbitrary-precision integers; no
floating point is used anywhere.
"""

__version__ = "0.1.0"

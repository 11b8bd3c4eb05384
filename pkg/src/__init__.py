"""
Lyndon Parity Toolkit
=====================
Lyndon factorizations, a bijection between words with odd distinct Lyndon
factors and words with even Lyndon factors, and the permutation map it
induces between permutations with only odd cycles and permutations with
only even cycles, with exhaustive verification of the counting theorems.
"""

__version__ = "1.0.0"

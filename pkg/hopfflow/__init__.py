"""
hopfflow - exact computational algebra for graph sums, flowcharts and Hopf renormalization.

Features:
- Combinatorial graphs with decorations, canonical forms, automorphisms and cuts
- Feynman graph series of the finite-dimensional toy model with Wick oracles
- Prim flowcharts evaluating primitive recursive functions
- Cut-coproduct Hopf algebras of decorated graphs with antipodes
- Birkhoff decomposition over minimal-subtraction target algebras
- Sequence algebras, partial summation and max-plus running times
"""

__version__ = "1.0.0"

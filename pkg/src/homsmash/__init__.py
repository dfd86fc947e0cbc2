"""Exact structure-constant engine for Hom-Hopf algebras, R-smash products
and cobraiding forms."""

__version__ = "0.1.0"

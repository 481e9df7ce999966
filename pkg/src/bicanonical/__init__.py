"""Exact-arithmetic toolkit for abelian covers of rational surfaces,
Picard-lattice intersection theory, fat-point linear systems, product-quotient
surfaces, and the degree of bicanonical maps of surfaces with p_g = 0."""

__version__ = "0.1.0"

"""homcat: exact verification of twisted Hopf-algebraic structures.

Structure constants over the rationals, axiom checkers that report exact
residuals and witnesses, constructors for twisted Hopf algebras, Doi-Hopf
module categories, braiding kernels, smash products and Drinfeld doubles.
"""

from homcat import exactlin

__all__ = ["exactlin"]
__version__ = "0.1.0"

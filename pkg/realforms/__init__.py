"""
Realforms package checks relative real forms of the toric surfaces
:math:`X_n = \\{u^2 + v^2 = t^{2n+1} w^2\\}` with exact arithmetic.

Real structures of the family are Galois cocycles in a group of Laurent
matrices; the package verifies them, classifies their real fibres,
resolves the toric model and runs the projective line example.
"""


__version__ = '1.0.0'
__author__ = 'Realforms developers'


from . import arith
from . import groups
from . import utility

from . import study
from . import sampling
from . import io
from . import cli

"""
Seeded random exact elements.

All randomness flows from a :class:`numpy.random.Generator`, so a seed
fixes every sample.
"""


from fractions import Fraction
from typing import Tuple

import numpy as np

from realforms.arith import GaussianRational, LaurentPoly, scalar
from realforms.groups import LMat2, ProjElem2, SemidirectElem
from realforms.study.p1 import SL2C, ProjPoint4


#: Seed of every randomized command unless given.
DEFAULT_SEED = 0
#: Numerators are drawn from [-NUMERATOR_BOUND, NUMERATOR_BOUND].
NUMERATOR_BOUND = 5
#: Denominators are drawn from [1, DENOMINATOR_BOUND].
DENOMINATOR_BOUND = 4
#: Laurent polynomials have exponents in [-DEGREE_BOUND, DEGREE_BOUND].
DEGREE_BOUND = 2


def generator(seed: int = None) -> np.random.Generator:
    """ Seeded generator, :data:`DEFAULT_SEED` if :attr:`seed` is None. """
    return np.random.default_rng(DEFAULT_SEED if seed is None else seed)


def random_rational(rng: np.random.Generator, nonzero: bool = False,
                    bound: int = NUMERATOR_BOUND) -> Fraction:
    """
    :param rng: Random source
    :type rng: numpy.random.Generator
    :param nonzero: Exclude zero, defaults to False
    :type nonzero: bool, optional
    :rtype: fractions.Fraction
    """
    while True:
        numerator = int(rng.integers(-bound, bound + 1))
        if numerator or not nonzero:
            break
    denominator = int(rng.integers(1, DENOMINATOR_BOUND + 1))
    return Fraction(numerator, denominator)


def random_gaussian(rng: np.random.Generator, nonzero: bool = False):
    """ Element of :math:`\\mathbb{Q}(i)` in canonical scalar form. """
    while True:
        value = scalar(GaussianRational(random_rational(rng),
                                        random_rational(rng)))
        if value or not nonzero:
            return value


def random_laurent(rng: np.random.Generator, terms: int = 3,
                   real: bool = False) -> LaurentPoly:
    """ Numeric Laurent polynomial with up to :attr:`terms` monomials. """
    poly = LaurentPoly()
    for _ in range(terms):
        degree = int(rng.integers(-DEGREE_BOUND, DEGREE_BOUND + 1))
        coefficient = (random_rational(rng) if real
                       else random_gaussian(rng))
        poly = poly + LaurentPoly.monomial(degree, coefficient)
    return poly


def random_invertible(rng: np.random.Generator) -> ProjElem2:
    """ Product of a torus element and two unipotent matrices, so the
    determinant is a unit. """
    unit = LaurentPoly.monomial(int(rng.integers(-DEGREE_BOUND,
                                                 DEGREE_BOUND + 1)),
                                random_gaussian(rng, nonzero=True))
    upper = LMat2([[1, random_laurent(rng)], [0, 1]])
    lower = LMat2([[1, 0], [random_laurent(rng), 1]])
    return ProjElem2(LMat2.diag(unit, 1) @ upper @ lower)


def random_semidirect(rng: np.random.Generator) -> SemidirectElem:
    return SemidirectElem(random_invertible(rng),
                          random_gaussian(rng, nonzero=True))


def random_fiber_point(rng: np.random.Generator, size: int,
                       nonzero: bool = False) -> Tuple[Fraction, ...]:
    """ Rational fibre coordinates :math:`(a_0, \\dots, a_{size-1})`. """
    return tuple(random_rational(rng, nonzero=nonzero) for _ in range(size))


def random_sl2c(rng: np.random.Generator) -> SL2C:
    """ Product of unipotent and diagonal Gaussian rational matrices. """
    scale = random_gaussian(rng, nonzero=True)
    upper = SL2C(1, random_gaussian(rng), 0, 1)
    lower = SL2C(1, 0, random_gaussian(rng), 1)
    torus = SL2C(scale, 0, 0, 1 / GaussianRational.of(scale))
    return torus @ upper @ lower


def random_point(rng: np.random.Generator) -> ProjPoint4:
    """ Nonzero rational point of :math:`\\mathbb{P}^3`. """
    while True:
        coords = tuple(random_rational(rng) for _ in range(4))
        if any(coords):
            return ProjPoint4(coords)

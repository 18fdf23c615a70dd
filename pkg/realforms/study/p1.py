"""
Real forms of the projective line as a tautological family.

:math:`\\mathrm{SL}_2(\\mathbb{C})` acts on Hermitian matrices

.. math::

    H = \\begin{pmatrix} t + z & x - iy \\\\ x + iy & t - z \\end{pmatrix}

by :math:`H \\mapsto {}^t\\overline{M}^{-1} H M^{-1}`, preserving
:math:`\\det H = -q_0` for the quadric
:math:`q_0(x, y, z, t) = x^2 + y^2 + z^2 - t^2` with Gram matrix
:math:`G = \\mathrm{diag}(1, 1, 1, -1)`. The fibre over a point
of :math:`Z = \\mathbb{P}^3 \\setminus \\{q_0 = 0\\}` is the conic cut out
of :math:`\\{q_0 = 0\\}` by the orthogonal plane. It has real points,
i.e. is :math:`\\mathbb{P}^1_\\mathbb{R}`, exactly over :math:`Z_+`.
"""


import enum
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence, Tuple

import pandas as pd
import sympy

from realforms.arith import (GaussianRational, is_real, parse_rational,
                             reciprocal, scalar)
from realforms.utility import _ColumnsBase


logger = logging.getLogger(__name__)

IMAGINARY_UNIT = GaussianRational(0, 1)


def _to_sympy(value) -> sympy.Expr:
    value = GaussianRational.of(value)
    return sympy.Rational(value.re) + sympy.I * sympy.Rational(value.im)


def _to_fraction(value: sympy.Expr) -> Fraction:
    value = sympy.nsimplify(value)
    if not value.is_Rational:
        raise ValueError('Not a rational entry: {}.'.format(value))
    return Fraction(int(value.p), int(value.q))


@dataclass(frozen=True)
class SL2C:
    """ Matrix :math:`\\begin{pmatrix} a & b \\\\ c & d \\end{pmatrix}`
    over :math:`\\mathbb{Q}(i)` with :math:`ad - bc = 1`.

    :raises ValueError: If the determinant is not 1
    """
    a: object
    b: object
    c: object
    d: object

    def __post_init__(self):
        for name in 'abcd':
            object.__setattr__(self, name, scalar(getattr(self, name)))
        if scalar(self.a * self.d - self.b * self.c) != 1:
            raise ValueError('Matrix must have determinant 1.')

    @classmethod
    def of(cls, rows: Sequence[Sequence]) -> 'SL2C':
        """ From ``[[a, b], [c, d]]``; entries may be strings. """
        (a, b), (c, d) = rows
        return cls(a, b, c, d)

    @classmethod
    def identity(cls) -> 'SL2C':
        return cls(1, 0, 0, 1)

    def __matmul__(self, other: 'SL2C') -> 'SL2C':
        return SL2C(self.a * other.a + self.b * other.c,
                    self.a * other.b + self.b * other.d,
                    self.c * other.a + self.d * other.c,
                    self.c * other.b + self.d * other.d)

    def __neg__(self):
        return SL2C(-self.a, -self.b, -self.c, -self.d)

    def inverse(self) -> 'SL2C':
        return SL2C(self.d, -self.b, -self.c, self.a)

    def to_sympy(self) -> sympy.Matrix:
        return sympy.Matrix([[_to_sympy(self.a), _to_sympy(self.b)],
                             [_to_sympy(self.c), _to_sympy(self.d)]])

    def rows(self) -> List[List]:
        return [[self.a, self.b], [self.c, self.d]]


def minkowski_gram() -> sympy.Matrix:
    """ Gram matrix of :math:`q_0` in :math:`(x, y, z, t)` order. """
    return sympy.diag(1, 1, 1, -1)


# Hermitian matrices of the unit vectors in (x, y, z, t) order.
_HERMITIAN_BASIS = (
    sympy.Matrix([[0, 1], [1, 0]]),
    sympy.Matrix([[0, -sympy.I], [sympy.I, 0]]),
    sympy.Matrix([[1, 0], [0, -1]]),
    sympy.eye(2),
)


def _hermitian_coordinates(H: sympy.Matrix) -> List[sympy.Expr]:
    lower = sympy.expand(H[1, 0])
    return [sympy.re(lower), sympy.im(lower),
            sympy.expand((H[0, 0] - H[1, 1]) / 2),
            sympy.expand((H[0, 0] + H[1, 1]) / 2)]


def lorentz_of(M: SL2C) -> sympy.Matrix:
    """ Matrix of :math:`H \\mapsto {}^t\\overline{M}^{-1} H M^{-1}`.

    :param M: Element of :math:`\\mathrm{SL}_2(\\mathbb{C})`
    :type M: SL2C or list
    :raises ValueError: If the determinant is not 1
    :return: Rational 4x4 matrix in :math:`(x, y, z, t)` coordinates
    :rtype: sympy.Matrix
    """
    if not isinstance(M, SL2C):
        M = SL2C.of(M)
    inverse = M.inverse().to_sympy()
    adjoint = inverse.H
    columns = [_hermitian_coordinates(adjoint * H * inverse)
               for H in _HERMITIAN_BASIS]
    return sympy.Matrix(4, 4, lambda i, j: sympy.Rational(
        _to_fraction(columns[j][i])))


def preserves_q0(L: sympy.Matrix) -> bool:
    """ :math:`{}^tL G L = G`. """
    G = minkowski_gram()
    return L.T * G * L == G


@dataclass(frozen=True)
class ProjPoint4:
    """ Rational point :math:`[x : y : z : t]` of :math:`\\mathbb{P}^3`.

    :raises ValueError: For the zero tuple
    """
    coords: Tuple[Fraction, ...]

    def __post_init__(self):
        coords = tuple(parse_rational(x) for x in self.coords)
        if len(coords) != 4:
            raise ValueError('A point needs four coordinates.')
        if not any(coords):
            raise ValueError('The zero tuple is not a point.')
        object.__setattr__(self, 'coords', coords)

    @classmethod
    def of(cls, *coords) -> 'ProjPoint4':
        return cls(tuple(coords))

    def normalized(self) -> 'ProjPoint4':
        """ Scaled so that the first nonzero coordinate is 1. """
        lead = next(x for x in self.coords if x)
        return ProjPoint4(tuple(x / lead for x in self.coords))

    def is_same(self, other: 'ProjPoint4') -> bool:
        return self.normalized() == other.normalized()

    def transformed(self, L: sympy.Matrix) -> 'ProjPoint4':
        image = L * sympy.Matrix([sympy.Rational(x) for x in self.coords])
        return ProjPoint4(tuple(_to_fraction(x) for x in image))

    def __str__(self):
        return '[{}]'.format(':'.join(str(x) for x in self.coords))


def q0(p: ProjPoint4) -> Fraction:
    x, y, z, t = p.coords
    return x * x + y * y + z * z - t * t


class Orbit(enum.Enum):
    Z_PLUS = 'Z+'
    Z_MINUS = 'Z-'
    ON_QUADRIC = 'OnQuadric'


def orbit_classify(p: ProjPoint4) -> Orbit:
    """ Orbit of :math:`p` by the sign of :math:`q_0(p)`.

    Scaling changes :math:`q_0` by a square, so the sign is well defined.

    :rtype: Orbit
    """
    value = q0(p)
    if value > 0:
        return Orbit.Z_PLUS
    if value < 0:
        return Orbit.Z_MINUS
    return Orbit.ON_QUADRIC


class QForm:
    """ Quadratic form with a symmetric rational Gram matrix.

    :param gram: Symmetric square matrix
    :type gram: sympy.Matrix or list[list]
    :raises ValueError: If :attr:`gram` is not symmetric
    """

    def __init__(self, gram):
        gram = sympy.Matrix(gram).applyfunc(sympy.nsimplify)
        if not gram.is_square or gram != gram.T:
            raise ValueError('Gram matrix must be square and symmetric.')
        self.gram = sympy.ImmutableMatrix(gram)

    @classmethod
    def diagonal(cls, *entries) -> 'QForm':
        return cls(sympy.diag(*[sympy.Rational(parse_rational(x))
                                for x in entries]))

    @property
    def nvars(self) -> int:
        return self.gram.rows

    def __eq__(self, other):
        return isinstance(other, QForm) and self.gram == other.gram

    def __hash__(self):
        return hash(self.gram)

    def __call__(self, *values):
        v = sympy.Matrix([sympy.Rational(parse_rational(x)) for x in values])
        return _to_fraction((v.T * self.gram * v)[0, 0])

    def congruent(self, basis: sympy.Matrix) -> 'QForm':
        """ The form :math:`{}^tB Q B`. """
        return QForm(basis.T * self.gram * basis)

    def diagonalize(self) -> List[Fraction]:
        """ Lagrange reduction by simultaneous row and column operations.

        :return: Diagonal of a congruent diagonal form
        :rtype: list[fractions.Fraction]
        """
        A = sympy.Matrix(self.gram)
        size = A.rows
        for i in range(size):
            if A[i, i] == 0:
                j = next((j for j in range(i + 1, size) if A[j, j] != 0),
                         None)
                if j is not None:
                    A.row_swap(i, j)
                    A.col_swap(i, j)
                else:
                    j = next((j for j in range(i + 1, size) if A[i, j] != 0),
                             None)
                    if j is None:
                        continue
                    # All later diagonal entries vanish, so this yields
                    # the pivot 2 A[i, j].
                    A.row_op(i, lambda value, k: value + A[j, k])
                    A.col_op(i, lambda value, k: value + A[k, j])
            pivot = A[i, i]
            for j in range(i + 1, size):
                factor = A[j, i] / pivot
                if factor == 0:
                    continue
                A.row_op(j, lambda value, k: value - factor * A[i, k])
                A.col_op(j, lambda value, k: value - factor * A[k, i])
        return [_to_fraction(A[i, i]) for i in range(size)]

    def signature(self) -> Tuple[int, int]:
        """
        :return: Number of positive and negative diagonal entries
        :rtype: tuple(int, int)
        """
        diagonal = self.diagonalize()
        return (sum(1 for x in diagonal if x > 0),
                sum(1 for x in diagonal if x < 0))

    def rank(self) -> int:
        return sum(self.signature())

    def __str__(self):
        return str(self.gram.tolist())


def has_real_points(form: QForm) -> bool:
    """ Whether the projective quadric of :attr:`form` has a real point.

    Only forms that are definite of full rank have none.

    :rtype: bool
    """
    positive, negative = form.signature()
    definite = positive == form.nvars or negative == form.nvars
    return not definite


def fiber_conic(p: ProjPoint4) -> QForm:
    """ Restriction of :math:`q_0` to
    :math:`\\{x x' + y y' + z z' + t t' = 0\\}`.

    The last primed variable with nonzero coefficient is eliminated; the
    other three keep their order.

    :rtype: QForm
    """
    r = max(i for i, x in enumerate(p.coords) if x)
    free = [i for i in range(4) if i != r]
    basis = sympy.zeros(4, 3)
    for column, i in enumerate(free):
        basis[i, column] = 1
        basis[r, column] = sympy.Rational(-p.coords[i] / p.coords[r])
    return QForm(minkowski_gram()).congruent(basis)


class FiberType(enum.Enum):
    P1R = 'P1R'
    CONIC_C = 'ConicC'


def fiber_form_type(p: ProjPoint4) -> FiberType:
    """ Real form of the fibre over :math:`p`.

    :raises ValueError: If :math:`p` lies on the quadric
    :rtype: FiberType
    """
    orbit = orbit_classify(p)
    if orbit is Orbit.ON_QUADRIC:
        raise ValueError('Point {} lies on the quadric.'.format(p))
    result = (FiberType.P1R if has_real_points(fiber_conic(p))
              else FiberType.CONIC_C)
    if (result is FiberType.P1R) != (orbit is Orbit.Z_PLUS):
        logger.warning('Fibre type %s disagrees with orbit %s at %s.',
                       result.value, orbit.value, p)
    return result


def xi_coordinates(M) -> Tuple:
    """ Coordinates
    :math:`((d+a)/2, (d-a)/2i, (c+b)/2i, (c-b)/2i)` of a 2x2 matrix.

    :param M: Matrix ``[[a, b], [c, d]]`` over :math:`\\mathbb{Q}(i)`
    :type M: SL2C or list
    :rtype: tuple
    """
    (a, b), (c, d) = M.rows() if isinstance(M, SL2C) else M
    a, b, c, d = (scalar(x) for x in (a, b, c, d))
    half = Fraction(1, 2)
    half_i = reciprocal(2 * IMAGINARY_UNIT)
    return (scalar((d + a) * half), scalar((d - a) * half_i),
            scalar((c + b) * half_i), scalar((c - b) * half_i))


def real_point(M) -> ProjPoint4:
    """ Point of :math:`\\mathbb{P}^3(\\mathbb{R})` with the
    :func:`xi_coordinates` of :attr:`M`.

    :raises ValueError: If the coordinates are not real up to a common
        scalar
    :rtype: ProjPoint4
    """
    coords = xi_coordinates(M)
    lead = next((x for x in coords if x), None)
    if lead is None:
        raise ValueError('The zero matrix has no point.')
    normalized = [scalar(x * reciprocal(lead)) for x in coords]
    if not all(is_real(x) for x in normalized):
        raise ValueError('Coordinates are not real up to a scalar.')
    return ProjPoint4(tuple(normalized))


def conic_bundle_fiber(lam, mu) -> FiberType:
    """ Fibre of :math:`x_0^2 + \\lambda x_1^2 + \\mu x_2^2` over
    :math:`(\\lambda, \\mu)`.

    :raises ValueError: If :math:`\\lambda \\mu = 0`
    :rtype: FiberType
    """
    lam, mu = parse_rational(lam), parse_rational(mu)
    if not lam * mu:
        raise ValueError('Degenerate fibre over lambda * mu = 0.')
    if has_real_points(QForm.diagonal(1, lam, mu)):
        return FiberType.P1R
    return FiberType.CONIC_C


def circle_has_real_points(lam) -> bool:
    """ Whether :math:`x^2 + y^2 = \\lambda` has a real solution. """
    return has_real_points(QForm.diagonal(1, 1, -parse_rational(lam)))


def lorentz_report(M) -> pd.Series:
    """ Lorentz matrix of :attr:`M` with its checks. """
    L = lorentz_of(M)
    return pd.Series({
        Columns.LORENTZ: [[str(x) for x in row] for row in L.tolist()],
        Columns.PRESERVES_Q0: preserves_q0(L),
        Columns.DET_ONE: L.det() == 1,
    })


def process(data):
    """ Bundle method.

    Supplying `None` for :attr:`data` returns the value types of the
    columns instead. A point on the quadric is reported with orbit
    ``OnQuadric`` and no fibre.

    :param data: Point coordinates. If None, return types instead
    :type data: ProjPoint4 or list or None
    :return: Orbit report listed in :meth:`Columns.process` or types
    :rtype: pandas.Series
    """
    if data is None:
        from realforms.study import TYPES
        return pd.Series(data=('str', 'str', 'str', 'str or None'),
                         index=Columns.process(), name=TYPES)

    point = data if isinstance(data, ProjPoint4) else ProjPoint4(data)
    orbit = orbit_classify(point)
    fiber = (None if orbit is Orbit.ON_QUADRIC
             else fiber_form_type(point).value)
    return pd.Series(data=(str(point), str(q0(point)), orbit.value, fiber),
                     index=Columns.process(), name=str(point))


class Columns(_ColumnsBase):
    """ Bases: :class:`realforms.utility._ColumnsBase`

    Column names.
    """
    POINT = 'point'
    Q0 = 'q0'
    ORBIT = 'orbit'
    FIBER = 'fiber'
    LORENTZ = 'lorentz'
    PRESERVES_Q0 = 'preserves_q0'
    DET_ONE = 'det_one'

    @classmethod
    def process(cls):
        """ Get the current values of the :func:`process` output column names.

        :rtype: list(str)
        """
        return [cls.POINT, cls.Q0, cls.ORBIT, cls.FIBER]
